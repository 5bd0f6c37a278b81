"""Line-oriented instance files.

Grammar (whitespace separated, '#' starts a comment, line order free):

    elements: <name>+
    covers: (<a> < <b>)+
    join: <a> <b> = <c>
    meet: <a> <b> = <c>
    acute

A file with neither join/meet lines nor the acute directive parses to a
bare Poset. Otherwise the result is a LambdaLattice: explicit
assignments are applied first, then either every remaining incomparable
pair goes to (top, bottom) when 'acute' is present, or pairs with a
unique minimal upper bound / unique maximal lower bound are forced to
it; anything still open is an error.
"""

import re

from .errors import BadChoiceError, ParseError
from .lattice import ChoiceSpec, LambdaLattice, forced_join, forced_meet, from_choice
from .poset import Poset

_TOKEN = re.compile(r"\S+")


def _tokens(line: str) -> list[tuple[str, int]]:
    return [(m.group(), m.start() + 1) for m in _TOKEN.finditer(line)]


def parse_instance(text: str) -> Poset | LambdaLattice:
    """Parse instance text; see the module docstring for the grammar."""
    elements: list[str] | None = None
    covers: list[tuple[str, str, int, int]] = []
    assignments: list[tuple[str, str, str, str, int, int]] = []
    acute_flag = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = _tokens(raw.split("#", 1)[0])
        if not toks:
            continue
        head, col = toks[0]
        rest = toks[1:]
        if head == "elements:":
            if elements is not None:
                raise ParseError("duplicate elements: line", lineno, col)
            if not rest:
                raise ParseError("elements: needs at least one name", lineno, col)
            names = [t for t, _ in rest]
            if len(set(names)) != len(names):
                raise ParseError("duplicate element name", lineno, col)
            elements = names
        elif head == "covers:":
            if not rest or len(rest) % 3:
                raise ParseError("covers: expects groups of '<a> < <b>'", lineno, col)
            for i in range(0, len(rest), 3):
                (a, ca), (op, co), (b, _) = rest[i:i + 3]
                if op != "<":
                    raise ParseError(f"expected '<', got {op!r}", lineno, co)
                covers.append((a, b, lineno, ca))
        elif head in ("join:", "meet:"):
            if len(rest) != 4 or rest[2][0] != "=":
                raise ParseError(f"{head} expects '<a> <b> = <c>'", lineno, col)
            assignments.append(
                (head[:-1], rest[0][0], rest[1][0], rest[3][0], lineno, rest[0][1])
            )
        elif head == "acute":
            if rest:
                raise ParseError("unexpected tokens after 'acute'", lineno, rest[0][1])
            acute_flag = True
        else:
            raise ParseError(f"unknown directive {head!r}", lineno, col)

    if elements is None:
        raise ParseError("missing elements: line", 1)
    index = {name: i for i, name in enumerate(elements)}

    def resolve(name: str, lineno: int, col: int) -> int:
        if name not in index:
            raise ParseError(f"unknown element {name!r}", lineno, col)
        return index[name]

    pairs = [(resolve(a, ln, c), resolve(b, ln, c)) for a, b, ln, c in covers]
    poset = Poset.from_covers(len(elements), pairs, labels=tuple(elements))

    if not assignments and not acute_flag:
        return poset

    joins: dict[tuple[int, int], int] = {}
    meets: dict[tuple[int, int], int] = {}
    for kind, a, b, c, lineno, col in assignments:
        x, y = resolve(a, lineno, col), resolve(b, lineno, col)
        v = resolve(c, lineno, col)
        if x == y:
            raise ParseError(f"{kind} needs two distinct elements", lineno, col)
        if not poset.incomparable(x, y):
            raise BadChoiceError(
                f"line {lineno}: {kind}({a}, {b}) assigns a comparable pair;"
                " its value is determined by the order",
                pair=(x, y),
            )
        key = (x, y) if x < y else (y, x)
        target = joins if kind == "join" else meets
        if key in target:
            raise ParseError(f"duplicate {kind} assignment for {a}, {b}", lineno, col)
        target[key] = v

    fill = "acute" if acute_flag else "forced"
    return from_choice(poset, ChoiceSpec(joins, meets), fill=fill)


def render_instance(obj: Poset | LambdaLattice) -> str:
    """Canonical text for an instance; parse_instance inverts it.

    Join/meet lines appear only for values the forced-fill rule would
    not reproduce, so rendering is minimal as well as lossless.
    """
    p = obj.poset if isinstance(obj, LambdaLattice) else obj
    names = [p.label(i) for i in range(p.n)]
    lines = ["elements: " + " ".join(names)]
    if p.covers:
        lines.append("covers: " + "  ".join(f"{names[a]} < {names[b]}" for a, b in p.covers))
    if isinstance(obj, LambdaLattice):
        for (x, y) in p.incomparable_pairs:
            v = obj.join_table[x][y]
            if forced_join(p, x, y) != v:
                lines.append(f"join: {names[x]} {names[y]} = {names[v]}")
        for (x, y) in p.incomparable_pairs:
            v = obj.meet_table[x][y]
            if forced_meet(p, x, y) != v:
                lines.append(f"meet: {names[x]} {names[y]} = {names[v]}")
    return "\n".join(lines) + "\n"

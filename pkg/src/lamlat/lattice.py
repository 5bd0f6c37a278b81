"""Lambda-lattice algebras: operation tables, axiom checks, completions of directed posets."""

from dataclasses import dataclass, field
from typing import Iterator, Mapping, Sequence

from .errors import (
    BadChoiceError,
    IncompleteChoiceError,
    NotDirectedError,
    RangeError,
    UnboundedError,
)
from .poset import Poset, _bits, _check_index
from .verdict import Verdict

Pair = tuple[int, int]


def _normalized(assignments: Mapping[Pair, int]) -> dict[Pair, int]:
    out: dict[Pair, int] = {}
    for (x, y), v in dict(assignments).items():
        if x == y:
            raise ValueError(f"({x}, {y}) is not a pair of distinct elements")
        key = (x, y) if x < y else (y, x)
        if key in out and out[key] != v:
            raise ValueError(f"conflicting assignments for pair {key}")
        out[key] = int(v)
    return out


@dataclass(frozen=True)
class ChoiceSpec:
    """Join and meet picks for incomparable pairs, keyed by (low, high) index pair."""

    joins: dict = field(default_factory=dict)
    meets: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "joins", _normalized(self.joins))
        object.__setattr__(self, "meets", _normalized(self.meets))


@dataclass(frozen=True)
class AxiomReport:
    """Verdicts for the three defining identities of the algebra."""

    commutativity: Verdict
    weak_associativity: Verdict
    absorption: Verdict

    @property
    def all_pass(self) -> bool:
        return self.commutativity.holds and self.weak_associativity.holds and self.absorption.holds

    def to_dict(self) -> dict:
        return {
            "commutativity": self.commutativity.to_dict(),
            "weak_associativity": self.weak_associativity.to_dict(),
            "absorption": self.absorption.to_dict(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "AxiomReport":
        return cls(
            Verdict.from_dict(d["commutativity"]),
            Verdict.from_dict(d["weak_associativity"]),
            Verdict.from_dict(d["absorption"]),
        )


def _table(t) -> tuple[tuple[int, ...], ...]:
    n = len(t)
    if n == 0:
        raise ValueError("an operation table needs at least one element")
    rows = []
    for row in t:
        row = tuple(int(v) for v in row)
        if len(row) != n:
            raise ValueError("operation table must be square")
        for v in row:
            if not 0 <= v < n:
                raise RangeError(f"table entry {v} out of range 0..{n - 1}")
        rows.append(row)
    return tuple(rows)


def check_axioms(join, meet) -> AxiomReport:
    """Evaluate commutativity, weak associativity and absorption on raw tables.

    Each failed identity reports its least witness in scan order
    (pairs for commutativity and absorption, triples for weak
    associativity); the note names the failing identity.
    """
    jt, mt = _table(join), _table(meet)
    if len(jt) != len(mt):
        raise ValueError("join and meet tables differ in size")
    n = len(jt)

    comm = Verdict(True)
    for x in range(n):
        for y in range(x + 1, n):
            if jt[x][y] != jt[y][x]:
                comm = Verdict(False, (x, y), "x v y = y v x fails")
                break
            if mt[x][y] != mt[y][x]:
                comm = Verdict(False, (x, y), "x ^ y = y ^ x fails")
                break
        else:
            continue
        break

    wassoc = Verdict(True)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                t = jt[jt[x][y]][z]
                if jt[x][t] != t:
                    wassoc = Verdict(False, (x, y, z), "x v ((x v y) v z) = (x v y) v z fails")
                    break
                t = mt[mt[x][y]][z]
                if mt[x][t] != t:
                    wassoc = Verdict(False, (x, y, z), "x ^ ((x ^ y) ^ z) = (x ^ y) ^ z fails")
                    break
            else:
                continue
            break
        else:
            continue
        break

    absorb = Verdict(True)
    for x in range(n):
        for y in range(n):
            if jt[x][mt[x][y]] != x:
                absorb = Verdict(False, (x, y), "x v (x ^ y) = x fails")
                break
            if mt[x][jt[x][y]] != x:
                absorb = Verdict(False, (x, y), "x ^ (x v y) = x fails")
                break
        else:
            continue
        break

    return AxiomReport(comm, wassoc, absorb)


class LambdaLattice:
    """Symmetric join/meet tables over a poset.

    Construction enforces the table contract: comparable pairs map to max
    and min, incomparable pairs map into their common upper/lower bound
    sets, and the order induced by the tables is the poset order.
    """

    def __init__(self, poset: Poset, join, meet, *, _trusted: bool = False):
        self.poset = poset
        self.join_table = tuple(tuple(int(v) for v in row) for row in join)
        self.meet_table = tuple(tuple(int(v) for v in row) for row in meet)
        if not _trusted:
            self._validate()

    def _validate(self) -> None:
        p, n = self.poset, self.poset.n
        jt, mt = self.join_table, self.meet_table
        if len(jt) != n or len(mt) != n or any(len(r) != n for r in jt + mt):
            raise ValueError("operation tables must be n x n")
        for row in jt + mt:
            for v in row:
                if not 0 <= v < n:
                    raise RangeError(f"table entry {v} out of range 0..{n - 1}")
        for x in range(n):
            for y in range(x, n):
                jv, mv = jt[x][y], mt[x][y]
                if jt[y][x] != jv or mt[y][x] != mv:
                    raise ValueError(f"tables must be symmetric at ({x}, {y})")
                if p.leq(x, y):
                    exp = (y, x)
                elif p.leq(y, x):
                    exp = (x, y)
                else:
                    if not (p.leq(x, jv) and p.leq(y, jv)):
                        raise BadChoiceError(
                            f"join({p.label(x)}, {p.label(y)}) = {p.label(jv)}"
                            " is not a common upper bound",
                            pair=(x, y),
                        )
                    if not (p.leq(mv, x) and p.leq(mv, y)):
                        raise BadChoiceError(
                            f"meet({p.label(x)}, {p.label(y)}) = {p.label(mv)}"
                            " is not a common lower bound",
                            pair=(x, y),
                        )
                    continue
                if (jv, mv) != exp:
                    raise BadChoiceError(
                        f"comparable pair ({p.label(x)}, {p.label(y)}) must use max and min",
                        pair=(x, y),
                    )

    # ----- basic access -----

    @property
    def n(self) -> int:
        return self.poset.n

    @property
    def labels(self):
        return self.poset.labels

    def label(self, x: int) -> str:
        return self.poset.label(x)

    def join(self, x: int, y: int) -> int:
        _check_index(self.n, x)
        _check_index(self.n, y)
        return self.join_table[x][y]

    def meet(self, x: int, y: int) -> int:
        _check_index(self.n, x)
        _check_index(self.n, y)
        return self.meet_table[x][y]

    def choice_spec(self) -> ChoiceSpec:
        """The assignments carried by the incomparable pairs."""
        joins, meets = {}, {}
        for x, y in self.poset.incomparable_pairs:
            joins[(x, y)] = self.join_table[x][y]
            meets[(x, y)] = self.meet_table[x][y]
        return ChoiceSpec(joins, meets)

    def axiom_report(self) -> AxiomReport:
        return check_axioms(self.join_table, self.meet_table)

    # ----- transformations -----

    def restrict(self, elements) -> "LambdaLattice":
        """Table restriction to a subset closed under both operations."""
        elems = sorted(set(elements))
        pos = {e: i for i, e in enumerate(elems)}
        for x in elems:
            for y in elems:
                if self.join_table[x][y] not in pos or self.meet_table[x][y] not in pos:
                    raise ValueError("subset is not closed under the operations")
        sub = self.poset.restrict(elems)
        k = len(elems)
        jt = [[pos[self.join_table[elems[i]][elems[j]]] for j in range(k)] for i in range(k)]
        mt = [[pos[self.meet_table[elems[i]][elems[j]]] for j in range(k)] for i in range(k)]
        return LambdaLattice(sub, jt, mt)

    def relabel(self, perm: Sequence[int]) -> "LambdaLattice":
        n = self.n
        sub = self.poset.relabel(perm)
        jt = [[0] * n for _ in range(n)]
        mt = [[0] * n for _ in range(n)]
        for x in range(n):
            for y in range(n):
                jt[perm[x]][perm[y]] = perm[self.join_table[x][y]]
                mt[perm[x]][perm[y]] = perm[self.meet_table[x][y]]
        return LambdaLattice(sub, jt, mt, _trusted=True)

    def isomorphisms(self, other: "LambdaLattice") -> Iterator[tuple[int, ...]]:
        """Bijections preserving order and both operations."""
        jt, mt = self.join_table, self.meet_table
        ot, om = other.join_table, other.meet_table
        n = self.n
        for f in self.poset.isomorphisms(other.poset):
            if all(
                ot[f[x]][f[y]] == f[jt[x][y]] and om[f[x]][f[y]] == f[mt[x][y]]
                for x in range(n)
                for y in range(x, n)
            ):
                yield f

    def is_isomorphic(self, other: "LambdaLattice") -> bool:
        return next(self.isomorphisms(other), None) is not None

    def encoding(self) -> tuple:
        """Sort key: poset encoding plus the per-pair (join, meet) choices.

        Matches the order in which enumerate_completions yields
        completions of one poset, so iteration order and encoding order
        agree globally.
        """
        choices = tuple(
            (self.join_table[x][y], self.meet_table[x][y])
            for x, y in self.poset.incomparable_pairs
        )
        return (self.poset.encoding(), choices)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LambdaLattice)
            and self.poset == other.poset
            and self.join_table == other.join_table
            and self.meet_table == other.meet_table
        )

    def __hash__(self) -> int:
        return hash((self.poset, self.join_table, self.meet_table))

    def __repr__(self) -> str:
        spec = self.choice_spec()
        picks = ", ".join(
            f"{self.label(x)}v{self.label(y)}={self.label(v)}" for (x, y), v in spec.joins.items()
        )
        return f"LambdaLattice(n={self.n}, joins=[{picks}])"


# ----- construction from a poset plus choices -----


def forced_join(p: Poset, x: int, y: int) -> int | None:
    """The unique minimal common upper bound, or None when there are several."""
    ub = p._up[x] & p._up[y]
    found = None
    for u in _bits(ub):
        if not ub & p._down[u] & ~(1 << u):
            if found is not None:
                return None
            found = u
    return found


def forced_meet(p: Poset, x: int, y: int) -> int | None:
    """The unique maximal common lower bound, or None when there are several."""
    lb = p._down[x] & p._down[y]
    found = None
    for l in _bits(lb):
        if not lb & p._up[l] & ~(1 << l):
            if found is not None:
                return None
            found = l
    return found


def from_choice(p: Poset, choice: ChoiceSpec | None = None, *, fill: str = "forced") -> LambdaLattice:
    """Complete a directed poset into a lambda-lattice.

    Comparable pairs take max and min. For an incomparable pair the
    choice spec may pick any common upper/lower bound, not only a
    minimal or maximal one. Pairs left out are filled according to
    fill: "forced" assigns the unique minimal upper bound (unique
    maximal lower bound) when there is exactly one, "acute" assigns
    top and bottom throughout, "none" fills nothing. Whatever remains
    unassigned raises IncompleteChoiceError.
    """
    if fill not in ("forced", "acute", "none"):
        raise ValueError(f"unknown fill policy {fill!r}")
    if not p.is_directed():
        raise NotDirectedError("a completion needs a directed poset")
    n = p.n
    joins = dict(choice.joins) if choice is not None else {}
    meets = dict(choice.meets) if choice is not None else {}
    jt = [[0] * n for _ in range(n)]
    mt = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            if p._up[x] >> y & 1:
                jt[x][y] = y
                mt[x][y] = x
            elif p._up[y] >> x & 1:
                jt[x][y] = x
                mt[x][y] = y
    missing: list[tuple[str, int, int]] = []
    for x, y in p.incomparable_pairs:
        jv = joins.pop((x, y), None)
        if jv is None:
            if fill == "acute":
                jv = p.top
            elif fill == "forced":
                jv = forced_join(p, x, y)
        if jv is None:
            missing.append(("join", x, y))
        else:
            _check_index(n, jv)
            if not (p.leq(x, jv) and p.leq(y, jv)):
                raise BadChoiceError(
                    f"join({p.label(x)}, {p.label(y)}) = {p.label(jv)} is not a common upper bound",
                    pair=(x, y),
                )
            jt[x][y] = jt[y][x] = jv
        mv = meets.pop((x, y), None)
        if mv is None:
            if fill == "acute":
                mv = p.bottom
            elif fill == "forced":
                mv = forced_meet(p, x, y)
        if mv is None:
            missing.append(("meet", x, y))
        else:
            _check_index(n, mv)
            if not (p.leq(mv, x) and p.leq(mv, y)):
                raise BadChoiceError(
                    f"meet({p.label(x)}, {p.label(y)}) = {p.label(mv)} is not a common lower bound",
                    pair=(x, y),
                )
            mt[x][y] = mt[y][x] = mv
    if joins or meets:
        pair = next(iter(joins or meets))
        raise BadChoiceError(
            f"assignment for pair {pair} which is not an incomparable pair of the poset",
            pair=pair,
        )
    if missing:
        gaps = ", ".join(f"{kind}({p.label(x)}, {p.label(y)})" for kind, x, y in missing)
        raise IncompleteChoiceError(
            f"no value for: {gaps}", pairs=tuple((x, y) for _, x, y in missing)
        )
    return LambdaLattice(p, jt, mt)


def acute(p: Poset) -> LambdaLattice:
    """The completion sending every incomparable pair to (top, bottom)."""
    if p.bounds() is None:
        raise UnboundedError("the acute completion needs a bounded poset")
    return from_choice(p, None, fill="acute")


# ----- algebra-level predicates -----


def idempotency_holds(ll: LambdaLattice) -> bool:
    """Diagonal fixpoints of both tables; a consequence of the axioms."""
    return all(
        ll.join_table[x][x] == x and ll.meet_table[x][x] == x for x in range(ll.n)
    )


def is_lattice(ll: LambdaLattice) -> bool:
    """Join is always the least upper bound and meet the greatest lower bound."""
    p = ll.poset
    up, down = p._up, p._down
    for x in range(p.n):
        for y in range(x + 1, p.n):
            ub = up[x] & up[y]
            least = next((u for u in _bits(ub) if not ub & ~up[u]), None)
            if least is None or ll.join_table[x][y] != least:
                return False
            lb = down[x] & down[y]
            greatest = next((l for l in _bits(lb) if not lb & ~down[l]), None)
            if greatest is None or ll.meet_table[x][y] != greatest:
                return False
    return True


def is_monotone(ll: LambdaLattice) -> bool:
    """x <= y forces x v z <= y v z and x ^ z <= y ^ z for every z."""
    p = ll.poset
    up = p._up
    jt, mt = ll.join_table, ll.meet_table
    for x in range(p.n):
        for y in _bits(up[x]):
            for z in range(p.n):
                if not up[jt[x][z]] >> jt[y][z] & 1:
                    return False
                if not up[mt[x][z]] >> mt[y][z] & 1:
                    return False
    return True


def is_modular(ll: LambdaLattice) -> bool:
    """x <= z forces x v (y ^ z) = (x v y) ^ z for every y."""
    p = ll.poset
    jt, mt = ll.join_table, ll.meet_table
    for x in range(p.n):
        for z in _bits(p._up[x]):
            for y in range(p.n):
                if jt[x][mt[y][z]] != mt[jt[x][y]][z]:
                    return False
    return True


def is_distributive(ll: LambdaLattice) -> bool:
    """Both distributive laws over all triples."""
    n = ll.n
    jt, mt = ll.join_table, ll.meet_table
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if mt[x][jt[y][z]] != jt[mt[x][y]][mt[x][z]]:
                    return False
                if jt[x][mt[y][z]] != mt[jt[x][y]][jt[x][z]]:
                    return False
    return True


def convex_closed_subsets(ll: LambdaLattice) -> Iterator[frozenset[int]]:
    """Nonempty convex subsets closed under both tables, ascending by bitmask.

    Each yielded subset induces a lambda-lattice via LambdaLattice.restrict.
    Cost grows as 2^n; intended for n <= 12.
    """
    p = ll.poset
    jt, mt = ll.join_table, ll.meet_table
    for mask in range(1, 1 << p.n):
        elems = tuple(_bits(mask))
        closed = all(
            mask >> jt[x][y] & 1 and mask >> mt[x][y] & 1
            for i, x in enumerate(elems)
            for y in elems[i:]
        )
        if closed and p._is_convex_mask(mask):
            yield frozenset(elems)

"""Finite posets: order matrices, covers, bounds, heights, chains, convexity."""

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from typing import Iterable, Iterator, Sequence

from .errors import CycleError, InvalidOrderError, NoTopError, RangeError, UnboundedError
from .verdict import Verdict


def _bits(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _check_index(n: int, x) -> None:
    if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < n:
        raise RangeError(f"element index {x!r} out of range 0..{n - 1}")


def _validate_order(n: int, up: Sequence[int]) -> None:
    for i in range(n):
        if not up[i] >> i & 1:
            raise InvalidOrderError(f"relation is not reflexive at element {i}")
    for i in range(n):
        for j in _bits(up[i] & ~(1 << i)):
            if up[j] >> i & 1:
                raise CycleError(f"antisymmetry fails between {i} and {j}")
            if up[j] & ~up[i]:
                raise InvalidOrderError(f"transitivity fails through {i} <= {j}")


@dataclass(frozen=True)
class Chain:
    """Saturated chain: consecutive elements form covering pairs."""

    elements: tuple[int, ...]

    @property
    def length(self) -> int:
        """Number of covering steps."""
        return len(self.elements) - 1


class Poset:
    """Immutable finite poset on elements 0..n-1.

    The relation is stored as one bitmask per element: bit j of the mask
    for i is set iff i <= j. Labels are display metadata only; equality
    and hashing use the order structure alone.
    """

    def __init__(self, leq: Sequence[Sequence[object]], labels: Sequence[str] | None = None):
        n = len(leq)
        if n == 0:
            raise ValueError("a poset needs at least one element")
        up = []
        for row in leq:
            row = list(row)
            if len(row) != n:
                raise InvalidOrderError("relation matrix must be square")
            mask = 0
            for j, v in enumerate(row):
                if v:
                    mask |= 1 << j
            up.append(mask)
        _validate_order(n, up)
        self._init(n, tuple(up), labels)

    def _init(self, n: int, up: tuple[int, ...], labels) -> None:
        self.n = n
        self._up = up
        if labels is not None:
            labels = tuple(str(s) for s in labels)
            if len(labels) != n:
                raise ValueError("labels must match the element count")
            if len(set(labels)) != n:
                raise ValueError("labels must be unique")
        self.labels = labels

    @classmethod
    def _from_masks(cls, n: int, up: Sequence[int], labels=None) -> "Poset":
        # trusted path for generators; skips matrix validation
        p = cls.__new__(cls)
        p._init(n, tuple(up), labels)
        return p

    @classmethod
    def from_covers(cls, n: int, covers: Iterable[tuple[int, int]],
                    labels: Sequence[str] | None = None) -> "Poset":
        """Reflexive-transitive closure of a cover list; rejects cyclic input."""
        if n < 1:
            raise ValueError("a poset needs at least one element")
        up = [1 << i for i in range(n)]
        for a, b in covers:
            _check_index(n, a)
            _check_index(n, b)
            if a == b:
                raise CycleError(f"self-cover on element {a}")
            up[a] |= 1 << b
        changed = True
        while changed:
            changed = False
            for i in range(n):
                acc = up[i]
                for j in _bits(acc & ~(1 << i)):
                    acc |= up[j]
                if acc != up[i]:
                    up[i] = acc
                    changed = True
        for i in range(n):
            for j in _bits(up[i] & ~(1 << i)):
                if up[j] >> i & 1:
                    raise CycleError(f"cover input creates a cycle through {i} and {j}")
        return cls._from_masks(n, up, labels)

    # ----- relation queries -----

    def leq(self, x: int, y: int) -> bool:
        _check_index(self.n, x)
        _check_index(self.n, y)
        return bool(self._up[x] >> y & 1)

    def lt(self, x: int, y: int) -> bool:
        return x != y and self.leq(x, y)

    def incomparable(self, x: int, y: int) -> bool:
        return not self.leq(x, y) and not self.leq(y, x)

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)

    @cached_property
    def _down(self) -> tuple[int, ...]:
        down = [0] * self.n
        for i, row in enumerate(self._up):
            for j in _bits(row):
                down[j] |= 1 << i
        return tuple(down)

    def up_set(self, x: int) -> frozenset[int]:
        """Elements at or above x."""
        _check_index(self.n, x)
        return frozenset(_bits(self._up[x]))

    def down_set(self, x: int) -> frozenset[int]:
        """Elements at or below x."""
        _check_index(self.n, x)
        return frozenset(_bits(self._down[x]))

    def upper_bounds(self, x: int, y: int) -> frozenset[int]:
        """Common upper bounds of x and y."""
        _check_index(self.n, x)
        _check_index(self.n, y)
        return frozenset(_bits(self._up[x] & self._up[y]))

    def lower_bounds(self, x: int, y: int) -> frozenset[int]:
        """Common lower bounds of x and y."""
        _check_index(self.n, x)
        _check_index(self.n, y)
        return frozenset(_bits(self._down[x] & self._down[y]))

    def is_directed(self) -> bool:
        """Every pair has a common upper bound and a common lower bound."""
        up, down = self._up, self._down
        return all(
            up[i] & up[j] and down[i] & down[j]
            for i in range(self.n)
            for j in range(i + 1, self.n)
        )

    @cached_property
    def bottom(self) -> int | None:
        full = (1 << self.n) - 1
        for i, row in enumerate(self._up):
            if row == full:
                return i
        return None

    @cached_property
    def top(self) -> int | None:
        full = (1 << self.n) - 1
        for i, row in enumerate(self._down):
            if row == full:
                return i
        return None

    def bounds(self) -> tuple[int, int] | None:
        """(bottom, top) when both exist, else None."""
        if self.bottom is None or self.top is None:
            return None
        return (self.bottom, self.top)

    # ----- covers -----

    @cached_property
    def _covers_above(self) -> tuple[int, ...]:
        # y covers x iff x < y with nothing strictly between
        out = []
        for x in range(self.n):
            strict_up = self._up[x] & ~(1 << x)
            mask = 0
            for y in _bits(strict_up):
                if not strict_up & self._down[y] & ~(1 << y):
                    mask |= 1 << y
            out.append(mask)
        return tuple(out)

    @cached_property
    def _covers_below(self) -> tuple[int, ...]:
        below = [0] * self.n
        for x in range(self.n):
            for y in _bits(self._covers_above[x]):
                below[y] |= 1 << x
        return tuple(below)

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        """All covering pairs (x, y) with y covering x, lexicographic."""
        return tuple(
            (x, y) for x in range(self.n) for y in _bits(self._covers_above[x])
        )

    def covers_above(self, x: int) -> tuple[int, ...]:
        _check_index(self.n, x)
        return tuple(_bits(self._covers_above[x]))

    def covers_below(self, x: int) -> tuple[int, ...]:
        _check_index(self.n, x)
        return tuple(_bits(self._covers_below[x]))

    def is_cover(self, x: int, y: int) -> bool:
        """True iff y covers x."""
        _check_index(self.n, x)
        _check_index(self.n, y)
        return bool(self._covers_above[x] >> y & 1)

    # ----- heights and chains -----

    @cached_property
    def heights(self) -> tuple[int, ...]:
        """h(x) for every x: length of a longest chain from the bottom to x."""
        if self.bottom is None:
            raise UnboundedError("heights need a bottom element")
        h = [0] * self.n
        for x in sorted(range(self.n), key=lambda i: self._down[i].bit_count()):
            h[x] = max((h[y] + 1 for y in _bits(self._covers_below[x])), default=0)
        return tuple(h)

    def height(self, x: int) -> int:
        _check_index(self.n, x)
        return self.heights[x]

    def length(self) -> int:
        """Height of the top element."""
        if self.bottom is None or self.top is None:
            raise UnboundedError("length needs bottom and top elements")
        return self.heights[self.top]

    def maximal_chains_to_top(self, a: int) -> list[Chain]:
        """All saturated chains from a to the top, in lexicographic order."""
        if self.top is None:
            raise NoTopError("poset has no top element")
        _check_index(self.n, a)
        top = self.top
        chains: list[Chain] = []
        path = [a]

        def walk(v: int) -> None:
            if v == top:
                chains.append(Chain(tuple(path)))
                return
            for w in _bits(self._covers_above[v]):
                path.append(w)
                walk(w)
                path.pop()

        walk(a)
        return chains

    # ----- structural predicates -----

    def has_lu_covering(self) -> Verdict:
        """Whenever x is covered by incomparable y and z, some u covers both."""
        above = self._covers_above
        for x in range(self.n):
            ys = tuple(_bits(above[x]))
            for y in ys:
                for z in ys:
                    if y == z or not self.incomparable(y, z):
                        continue
                    if not above[y] & above[z]:
                        return Verdict(False, (x, y, z))
        return Verdict(True)

    def is_convex(self, elements: Iterable[int]) -> bool:
        """Contains every element lying between two of its members."""
        mask = 0
        for x in elements:
            _check_index(self.n, x)
            mask |= 1 << x
        return self._is_convex_mask(mask)

    def _is_convex_mask(self, mask: int) -> bool:
        for x in _bits(mask):
            for z in _bits(mask & self._up[x]):
                between = self._up[x] & self._down[z] & ~(1 << x) & ~(1 << z)
                if between & ~mask:
                    return False
        return True

    @cached_property
    def incomparable_pairs(self) -> tuple[tuple[int, int], ...]:
        """Pairs (x, y) with x < y as indices and x, y order-incomparable."""
        return tuple(
            (x, y)
            for x in range(self.n)
            for y in range(x + 1, self.n)
            if not (self._up[x] >> y & 1) and not (self._up[y] >> x & 1)
        )

    def atoms(self) -> frozenset[int]:
        """Covers of the bottom element."""
        if self.bottom is None:
            raise UnboundedError("atoms need a bottom element")
        return frozenset(_bits(self._covers_above[self.bottom]))

    def coatoms(self) -> frozenset[int]:
        """Elements covered by the top element."""
        if self.top is None:
            raise NoTopError("coatoms need a top element")
        return frozenset(_bits(self._covers_below[self.top]))

    # ----- transformations -----

    def relabel(self, perm: Sequence[int]) -> "Poset":
        """Image under old-index -> new-index permutation; labels move along."""
        n = self.n
        if sorted(perm) != list(range(n)):
            raise ValueError("not a permutation of the carrier")
        up = [0] * n
        for i in range(n):
            mask = 0
            for j in _bits(self._up[i]):
                mask |= 1 << perm[j]
            up[perm[i]] = mask
        labels = None
        if self.labels is not None:
            moved = [""] * n
            for i in range(n):
                moved[perm[i]] = self.labels[i]
            labels = tuple(moved)
        return Poset._from_masks(n, up, labels)

    def restrict(self, elements: Iterable[int]) -> "Poset":
        """Induced sub-order, reindexed over the sorted element list."""
        elems = sorted(set(elements))
        if not elems:
            raise ValueError("a restriction needs at least one element")
        for x in elems:
            _check_index(self.n, x)
        pos = {e: i for i, e in enumerate(elems)}
        up = []
        for e in elems:
            mask = 0
            for j in _bits(self._up[e]):
                if j in pos:
                    mask |= 1 << pos[j]
            up.append(mask)
        labels = tuple(self.label(e) for e in elems) if self.labels is not None else None
        return Poset._from_masks(len(elems), up, labels)

    def encoding(self) -> tuple[int, ...]:
        """Total order key: element count followed by the relation bitmask rows.

        Enumeration yields posets in ascending encoding order, so the
        first hit of any scan is also the least.
        """
        return (self.n, *self._up)

    def is_canonical(self) -> bool:
        """True iff the encoding is minimal over all relabelings."""
        n = self.n
        for perm in permutations(range(n)):
            up = [0] * n
            for i in range(n):
                mask = 0
                for j in _bits(self._up[i]):
                    mask |= 1 << perm[j]
                up[perm[i]] = mask
            if tuple(up) < self._up:
                return False
        return True

    # ----- isomorphism (brute force; intended for small n) -----

    def _iso_profile(self) -> list[tuple[int, int, int, int]]:
        return [
            (self._up[i].bit_count(), self._down[i].bit_count(),
             self._covers_above[i].bit_count(), self._covers_below[i].bit_count())
            for i in range(self.n)
        ]

    def isomorphisms(self, other: "Poset") -> Iterator[tuple[int, ...]]:
        """Order-preserving bijections self -> other."""
        if self.n != other.n:
            return
        mine, theirs = self._iso_profile(), other._iso_profile()
        if sorted(mine) != sorted(theirs):
            return
        n = self.n
        candidates = [[j for j in range(n) if theirs[j] == mine[i]] for i in range(n)]
        assigned: list[int] = []
        used = [False] * n

        def extend(i: int) -> Iterator[tuple[int, ...]]:
            if i == n:
                yield tuple(assigned)
                return
            for j in candidates[i]:
                if used[j]:
                    continue
                ok = all(
                    (self._up[k] >> i & 1) == (other._up[assigned[k]] >> j & 1)
                    and (self._up[i] >> k & 1) == (other._up[j] >> assigned[k] & 1)
                    for k in range(i)
                )
                if ok:
                    used[j] = True
                    assigned.append(j)
                    yield from extend(i + 1)
                    assigned.pop()
                    used[j] = False

        yield from extend(0)

    def is_isomorphic(self, other: "Poset") -> bool:
        return next(self.isomorphisms(other), None) is not None

    # ----- dunder -----

    def __eq__(self, other) -> bool:
        return isinstance(other, Poset) and self.n == other.n and self._up == other._up

    def __hash__(self) -> int:
        return hash((self.n, self._up))

    def __repr__(self) -> str:
        pairs = " ".join(f"{self.label(x)}<{self.label(y)}" for x, y in self.covers)
        return f"Poset(n={self.n}, covers=[{pairs}])"


def mk_poset(k: int, labels: Sequence[str] | None = None) -> Poset:
    """Bounded poset of length two: bottom, a k-element antichain, top."""
    if k < 1:
        raise ValueError("antichain size must be at least 1")
    n = k + 2
    covers = [(0, i) for i in range(1, k + 1)] + [(i, n - 1) for i in range(1, k + 1)]
    if labels is None:
        labels = ("0", *(f"m{i}" for i in range(1, k + 1)), "1")
    return Poset.from_covers(n, covers, labels)

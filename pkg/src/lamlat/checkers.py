"""Decision procedures: semimodularity, covering conditions, heights, acute classification.

Everything is definition-literal brute force over pairs/triples; at the
intended sizes (n around a dozen) clarity beats cleverness, and the scans
double as oracles for one another.
"""

from dataclasses import dataclass
from enum import Enum

from .errors import UnboundedError
from .lattice import LambdaLattice
from .poset import Poset, _bits
from .verdict import Verdict


def is_semimodular(ll: LambdaLattice) -> Verdict:
    """For x || y and x^y < z < x, some u with x^y < u <= y has (z v u) ^ x = z.

    A failing verdict carries the least triple (x, y, z) for which no
    such u exists.
    """
    p = ll.poset
    up, down = p._up, p._down
    jt, mt = ll.join_table, ll.meet_table
    for x in range(p.n):
        for y in range(p.n):
            if up[x] >> y & 1 or up[y] >> x & 1:
                continue
            m = mt[x][y]
            between = up[m] & down[x] & ~(1 << m) & ~(1 << x)
            if not between:
                continue
            ucands = tuple(_bits(up[m] & down[y] & ~(1 << m)))
            for z in _bits(between):
                if not any(mt[jt[z][u]][x] == z for u in ucands):
                    return Verdict(False, (x, y, z))
    return Verdict(True)


def lemma1_refutes(ll: LambdaLattice) -> tuple[int, int, int, int] | None:
    """Quadruple (x, y, c, d) on which semimodularity cannot hold.

    Requires x || y, two distinct elements c, d strictly between x^y and
    x, and c v e = d v f for every e, f with x^y < e, f <= y. A returned
    quadruple implies is_semimodular() fails.
    """
    p = ll.poset
    up, down = p._up, p._down
    jt, mt = ll.join_table, ll.meet_table
    for x in range(p.n):
        for y in range(p.n):
            if up[x] >> y & 1 or up[y] >> x & 1:
                continue
            m = mt[x][y]
            between = tuple(_bits(up[m] & down[x] & ~(1 << m) & ~(1 << x)))
            if len(between) < 2:
                continue
            es = tuple(_bits(up[m] & down[y] & ~(1 << m)))
            for c in between:
                joins_c = {jt[c][e] for e in es}
                if len(joins_c) != 1:
                    continue
                for d in between:
                    if d == c:
                        continue
                    if {jt[d][f] for f in es} == joins_c:
                        return (x, y, c, d)
    return None


def satisfies_wlcc(ll: LambdaLattice) -> Verdict:
    """Weak lower covering condition: x^y -< x -< x v y forces y -< x v y."""
    p = ll.poset
    cov = p._covers_above
    jt, mt = ll.join_table, ll.meet_table
    for x in range(p.n):
        for y in range(p.n):
            m, j = mt[x][y], jt[x][y]
            if cov[m] >> x & 1 and cov[x] >> j & 1 and not cov[y] >> j & 1:
                return Verdict(False, (x, y))
    return Verdict(True)


def satisfies_lcc(ll: LambdaLattice) -> Verdict:
    """Lower covering condition: x^y -< x forces y -< x v y."""
    p = ll.poset
    cov = p._covers_above
    jt, mt = ll.join_table, ll.meet_table
    for x in range(p.n):
        for y in range(p.n):
            if cov[mt[x][y]] >> x & 1 and not cov[y] >> jt[x][y] & 1:
                return Verdict(False, (x, y))
    return Verdict(True)


def cond3(ll: LambdaLattice) -> Verdict:
    """x || y, x || z and y < z force x ^ y <= x ^ z."""
    p = ll.poset
    up = p._up
    mt = ll.meet_table
    for x in range(p.n):
        for y in range(p.n):
            if up[x] >> y & 1 or up[y] >> x & 1:
                continue
            for z in _bits(up[y] & ~(1 << y)):
                if up[x] >> z & 1 or up[z] >> x & 1:
                    continue
                if not up[mt[x][y]] >> mt[x][z] & 1:
                    return Verdict(False, (x, y, z))
    return Verdict(True)


def cond4(ll: LambdaLattice) -> Verdict:
    """x || y, x || z and y -< z force x ^ y <= x ^ z."""
    p = ll.poset
    up, cov = p._up, p._covers_above
    mt = ll.meet_table
    for x in range(p.n):
        for y in range(p.n):
            if up[x] >> y & 1 or up[y] >> x & 1:
                continue
            for z in _bits(cov[y]):
                if up[x] >> z & 1 or up[z] >> x & 1:
                    continue
                if not up[mt[x][y]] >> mt[x][z] & 1:
                    return Verdict(False, (x, y, z))
    return Verdict(True)


def cond5(ll: LambdaLattice) -> Verdict:
    """x || y, x < z and y -< z force z not strictly below x v y."""
    p = ll.poset
    up, cov = p._up, p._covers_above
    jt = ll.join_table
    for x in range(p.n):
        for y in range(p.n):
            if up[x] >> y & 1 or up[y] >> x & 1:
                continue
            j = jt[x][y]
            for z in _bits(up[x] & ~(1 << x)):
                if cov[y] >> z & 1 and z != j and up[z] >> j & 1:
                    return Verdict(False, (x, y, z))
    return Verdict(True)


def dcc(ll: LambdaLattice) -> Verdict:
    """Descending chain condition; automatic on a finite carrier."""
    return Verdict(True, note="finite carrier: every descending chain terminates")


def height_inequality(ll: LambdaLattice) -> Verdict:
    """h(a v b) - h(a ^ b) <= |h(a) - h(b)| + 2 on qualifying pairs.

    A pair qualifies when a, b are comparable or a ^ b is covered by a
    or by b. The note of a failing verdict records the four heights.
    """
    p = ll.poset
    if p.bounds() is None:
        raise UnboundedError("the height inequality needs a bounded instance")
    h = p.heights
    up, cov = p._up, p._covers_above
    jt, mt = ll.join_table, ll.meet_table
    for a in range(p.n):
        for b in range(p.n):
            m = mt[a][b]
            comparable = up[a] >> b & 1 or up[b] >> a & 1
            if not (comparable or cov[m] >> a & 1 or cov[m] >> b & 1):
                continue
            j = jt[a][b]
            if h[j] - h[m] > abs(h[a] - h[b]) + 2:
                return Verdict(
                    False, (a, b),
                    f"h(a)={h[a]} h(b)={h[b]} h(join)={h[j]} h(meet)={h[m]}",
                )
    return Verdict(True)


def monotone_wedge(ll: LambdaLattice) -> Verdict:
    """Monotonicity of meet alone: x <= y forces x ^ z <= y ^ z."""
    p = ll.poset
    up = p._up
    mt = ll.meet_table
    for x in range(p.n):
        for y in _bits(up[x]):
            for z in range(p.n):
                if not up[mt[x][z]] >> mt[y][z] & 1:
                    return Verdict(False, (x, y, z))
    return Verdict(True)


# ----- acute classification -----


class AcuteClause(Enum):
    """Structural clauses under which the acute completion satisfies the LCC."""

    NO_ATOMS = "no-atoms"
    UNIQUE_ATOM_BELOW_ALL = "unique-atom-below-all"
    ISO_TO_MK = "antichain-between-bounds"
    FAILS = "fails"


@dataclass(frozen=True)
class AcuteCharacterization:
    clause: AcuteClause
    k: int | None
    atoms: frozenset[int]
    coatoms: frozenset[int]

    def to_dict(self) -> dict:
        return {
            "clause": self.clause.value,
            "k": self.k,
            "atoms": sorted(self.atoms),
            "coatoms": sorted(self.coatoms),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "AcuteCharacterization":
        return cls(
            AcuteClause(d["clause"]),
            d.get("k"),
            frozenset(d["atoms"]),
            frozenset(d["coatoms"]),
        )


def mk_isomorphic(p: Poset) -> int | None:
    """k > 1 when p is bounded of length two with a k-element middle antichain."""
    if p.n < 4 or p.bottom is None or p.top is None:
        return None
    middle = frozenset(range(p.n)) - {p.bottom, p.top}
    if p.atoms() == middle == p.coatoms():
        return p.n - 2
    return None


def acute_characterization(p: Poset) -> AcuteCharacterization:
    """Which structural clause, if any, the bounded poset satisfies.

    A clause other than FAILS holds exactly when the acute completion
    satisfies the lower covering condition: either there are no atoms
    (singleton carrier), or the unique atom sits below every nonzero
    element, or the poset is a two-level antichain Mk with k > 1.
    """
    if p.bounds() is None:
        raise UnboundedError("the acute characterization needs a bounded poset")
    atoms = p.atoms()
    coatoms = p.coatoms()
    k = None
    if not atoms:
        clause = AcuteClause.NO_ATOMS
    elif len(atoms) == 1 and all(
        p.leq(next(iter(atoms)), y) for y in range(p.n) if y != p.bottom
    ):
        clause = AcuteClause.UNIQUE_ATOM_BELOW_ALL
    else:
        k = mk_isomorphic(p)
        clause = AcuteClause.ISO_TO_MK if k is not None else AcuteClause.FAILS
    return AcuteCharacterization(clause, k, atoms, coatoms)


# ----- aggregate report -----


@dataclass(frozen=True)
class PropertyReport:
    """One verdict per structural property of a single instance."""

    semimodular: Verdict
    wlcc: Verdict
    lcc: Verdict
    cond3: Verdict
    cond4: Verdict
    cond5: Verdict
    dcc: Verdict
    lu_covering: Verdict

    def row(self) -> tuple[bool, bool, bool]:
        """(semimodular, wlcc, lcc) truth triple."""
        return (self.semimodular.holds, self.wlcc.holds, self.lcc.holds)

    def to_dict(self) -> dict:
        return {
            "semimodular": self.semimodular.to_dict(),
            "wlcc": self.wlcc.to_dict(),
            "lcc": self.lcc.to_dict(),
            "cond3": self.cond3.to_dict(),
            "cond4": self.cond4.to_dict(),
            "cond5": self.cond5.to_dict(),
            "dcc": self.dcc.to_dict(),
            "lu_covering": self.lu_covering.to_dict(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "PropertyReport":
        return cls(**{name: Verdict.from_dict(d[name]) for name in (
            "semimodular", "wlcc", "lcc", "cond3", "cond4", "cond5", "dcc", "lu_covering"
        )})


def classify(ll: LambdaLattice) -> PropertyReport:
    """All property verdicts for one instance."""
    return PropertyReport(
        semimodular=is_semimodular(ll),
        wlcc=satisfies_wlcc(ll),
        lcc=satisfies_lcc(ll),
        cond3=cond3(ll),
        cond4=cond4(ll),
        cond5=cond5(ll),
        dcc=dcc(ll),
        lu_covering=ll.poset.has_lu_covering(),
    )

"""Exhaustive enumeration of small posets and completions, plus the theorem harness.

Enumeration is labeled (not isomorphism-reduced) by default. Every
harness run is exhaustive over the requested size range, so a clean
result is strong evidence for the checked statement at desk scale, not
a proof of the general case; results say so explicitly.
"""

import time
from dataclasses import dataclass, replace
from itertools import product
from typing import Callable, Iterator

from . import checkers
from .errors import BudgetError, NotDirectedError, UnknownTheoremError
from .lattice import (
    ChoiceSpec,
    LambdaLattice,
    acute,
    from_choice,
    convex_closed_subsets,
    is_distributive,
    is_lattice,
    is_modular,
    is_monotone,
)
from .poset import Poset, _bits
from .verdict import Verdict

HARD_MAX_ELEMENTS = 7
DEFAULT_COMPLETION_BUDGET = 10**6


@dataclass(frozen=True)
class EnumerationFilter:
    """Which posets an enumeration yields.

    On finite carriers directedness and boundedness coincide, so either
    require flag selects the bounded posets. canonical_only keeps only
    the least labeling of each isomorphism class.
    """

    max_elements: int
    require_directed: bool = False
    require_bounded: bool = False
    canonical_only: bool = False

    def __post_init__(self):
        if self.max_elements < 1:
            raise ValueError("max_elements must be at least 1")


# ----- labeled poset generation -----
#
# Posets on 0..n-1 are built one element at a time: element k is attached
# to a poset on 0..k-1 by choosing the set D of elements below it (a down
# set) and the set U of elements above it (an up set) with D x U already
# inside the order. Restriction to 0..k-1 inverts the step, so every
# labeled poset is produced exactly once and no dedupe pass is needed.

_POSET_CACHE: dict[int, tuple[tuple[int, ...], ...]] = {}
_BOUNDED_CACHE: dict[int, tuple[tuple[int, ...], ...]] = {}
_CACHE_LIMIT = 6  # n=7 streams are large; recompute instead of holding them


def _extension_stream(n: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return

    def rec(k: int, up: list[int]) -> Iterator[tuple[int, ...]]:
        if k == n:
            yield tuple(up)
            return
        down = [0] * k
        for i in range(k):
            for j in _bits(up[i]):
                down[j] |= 1 << i
        downsets = [s for s in range(1 << k) if all(not down[i] & ~s for i in _bits(s))]
        upsets = [s for s in range(1 << k) if all(not up[i] & ~s for i in _bits(s))]
        strict_down = [down[i] & ~(1 << i) for i in range(k)]
        for d_mask in downsets:
            for u_mask in upsets:
                if d_mask & u_mask:
                    continue
                if any(d_mask & ~strict_down[u] for u in _bits(u_mask)):
                    continue
                new_up = [up[i] | (1 << k) if d_mask >> i & 1 else up[i] for i in range(k)]
                new_up.append(1 << k | u_mask)
                yield from rec(k + 1, new_up)

    yield from rec(0, [])


def _all_masks(n: int) -> tuple[tuple[int, ...], ...]:
    if n in _POSET_CACHE:
        return _POSET_CACHE[n]
    out = tuple(sorted(_extension_stream(n)))
    if n <= _CACHE_LIMIT:
        _POSET_CACHE[n] = out
    return out


def _bounded_masks(n: int) -> tuple[tuple[int, ...], ...]:
    # a bounded labeled poset decomposes uniquely into bottom, top and an
    # arbitrary poset on the remaining labels
    if n in _BOUNDED_CACHE:
        return _BOUNDED_CACHE[n]
    if n == 1:
        out: tuple = ((1,),)
    else:
        rows = []
        full = (1 << n) - 1
        for b in range(n):
            for t in range(n):
                if t == b:
                    continue
                middle = [e for e in range(n) if e not in (b, t)]
                for mid_up in _all_masks(n - 2):
                    up = [0] * n
                    up[b] = full
                    up[t] = 1 << t
                    for mi, e in enumerate(middle):
                        mask = 1 << e | 1 << t
                        for mj in _bits(mid_up[mi] & ~(1 << mi)):
                            mask |= 1 << middle[mj]
                        up[e] = mask
                    rows.append(tuple(up))
        out = tuple(sorted(rows))
    if n <= _CACHE_LIMIT:
        _BOUNDED_CACHE[n] = out
    return out


def enumerate_posets(f: EnumerationFilter) -> Iterator[Poset]:
    """Every labeled poset passing the filter.

    Sizes ascend; within one size the order is sorted by relation
    encoding, so output is deterministic and the first hit of any scan
    is the least in encoding order.
    """
    if f.max_elements > HARD_MAX_ELEMENTS:
        raise BudgetError(
            f"enumeration is guarded at {HARD_MAX_ELEMENTS} elements",
            required=f.max_elements,
        )
    for n in range(1, f.max_elements + 1):
        masks = _bounded_masks(n) if f.require_bounded or f.require_directed else _all_masks(n)
        for up in masks:
            p = Poset._from_masks(n, up)
            if f.canonical_only and not p.is_canonical():
                continue
            yield p


def enumerate_completions(
    p: Poset, budget: int | None = DEFAULT_COMPLETION_BUDGET
) -> Iterator[LambdaLattice]:
    """Every completion of a directed poset, one per total choice.

    The stream is the Cartesian product over incomparable pairs of all
    common upper bounds times all common lower bounds, in sorted pair
    and bound order. Raises BudgetError up front when the product
    exceeds the budget; it never samples.
    """
    if not p.is_directed():
        raise NotDirectedError("completions need a directed poset")
    pairs = p.incomparable_pairs
    options = []
    total = 1
    for x, y in pairs:
        us = sorted(p.upper_bounds(x, y))
        ls = sorted(p.lower_bounds(x, y))
        options.append([(u, l) for u in us for l in ls])
        total *= len(us) * len(ls)
    if budget is not None and total > budget:
        raise BudgetError(
            f"{total} completions exceed the budget of {budget}", required=total
        )
    for combo in product(*options):
        joins = {pair: uv for pair, (uv, _) in zip(pairs, combo)}
        meets = {pair: lv for pair, (_, lv) in zip(pairs, combo)}
        yield from_choice(p, ChoiceSpec(joins, meets), fill="none")


def completion_count(p: Poset) -> int:
    """Size of the completion stream without generating it."""
    total = 1
    for x, y in p.incomparable_pairs:
        total *= len(p.upper_bounds(x, y)) * len(p.lower_bounds(x, y))
    return total


# ----- theorem registry -----


@dataclass(frozen=True)
class Theorem:
    """A hypothesis/conclusion pair evaluated over enumerated instances."""

    theorem_id: str
    summary: str
    over: str  # "lattices" or "posets"
    default_max_elements: int
    hypothesis: Callable
    conclusion: Callable  # instance -> Verdict
    require_bounded: bool = False
    mutant: bool = False  # deliberately weakened variant; counterexamples expected


def _concl_lemma1(ll) -> Verdict:
    quad = checkers.lemma1_refutes(ll)
    if quad is None:
        return Verdict(True)
    return Verdict(False, quad, "all joins from the refuting quadruple agree")


def _concl_convex_restrictions_semimodular(ll) -> Verdict:
    for subset in convex_closed_subsets(ll):
        v = checkers.is_semimodular(ll.restrict(subset))
        if not v.holds:
            return Verdict(
                False, tuple(sorted(subset)),
                f"restriction fails semimodularity at {v.witness}",
            )
    return Verdict(True)


def _concl_equal_chain_lengths(p) -> Verdict:
    for a in range(p.n):
        lengths = {c.length for c in p.maximal_chains_to_top(a)}
        if len(lengths) > 1:
            return Verdict(False, (a,), f"maximal chain lengths {sorted(lengths)}")
    return Verdict(True)


def _acute_condition_ii(p: Poset) -> bool:
    atoms = p.atoms()
    coatoms = p.coatoms()
    return all(
        y in coatoms
        for x in atoms
        for y in range(p.n)
        if p.incomparable(x, y)
    )


def _concl_acute_equivalence(p) -> Verdict:
    via_lcc = checkers.satisfies_lcc(acute(p)).holds
    via_atoms = _acute_condition_ii(p)
    via_structure = checkers.acute_characterization(p).clause is not checkers.AcuteClause.FAILS
    if via_lcc == via_atoms == via_structure:
        return Verdict(True)
    return Verdict(
        False, (),
        f"lcc-of-acute={via_lcc} atom-condition={via_atoms} structural={via_structure}",
    )


def _concl_acute_finite(p) -> Verdict:
    via_lcc = checkers.satisfies_lcc(acute(p)).holds
    structural = p.n == 1 or len(p.atoms()) == 1 or checkers.mk_isomorphic(p) is not None
    if via_lcc == structural:
        return Verdict(True)
    return Verdict(False, (), f"lcc-of-acute={via_lcc} structural={structural}")


def _concl_monotone_iff_lattice(ll) -> Verdict:
    mono, lat = is_monotone(ll), is_lattice(ll)
    if mono == lat:
        return Verdict(True)
    return Verdict(False, (), f"monotone={mono} lattice={lat}")


def _concl_modular_implies_lattice(ll) -> Verdict:
    lat = is_lattice(ll)
    if is_modular(ll) and not lat:
        return Verdict(False, (), "modular without being a lattice")
    if is_distributive(ll) and not lat:
        return Verdict(False, (), "distributive without being a lattice")
    return Verdict(True)


def _always(_) -> bool:
    return True


THEOREMS: dict[str, Theorem] = {}


def _register(th: Theorem) -> None:
    THEOREMS[th.theorem_id] = th


_register(Theorem(
    "TH1", "semimodularity with cond3 implies the weak lower covering condition",
    over="lattices", default_max_elements=5,
    hypothesis=lambda ll: checkers.is_semimodular(ll).holds and checkers.cond3(ll).holds,
    conclusion=checkers.satisfies_wlcc,
))
_register(Theorem(
    "TH2", "semimodularity with cond4, cond5 and dcc implies the lower covering condition",
    over="lattices", default_max_elements=5,
    hypothesis=lambda ll: (
        checkers.is_semimodular(ll).holds
        and checkers.cond4(ll).holds
        and checkers.cond5(ll).holds
        and checkers.dcc(ll).holds
    ),
    conclusion=checkers.satisfies_lcc,
))
_register(Theorem(
    "LEM1", "a semimodular instance admits no join-collapsing quadruple",
    over="lattices", default_max_elements=5,
    hypothesis=lambda ll: checkers.is_semimodular(ll).holds,
    conclusion=_concl_lemma1,
))
_register(Theorem(
    "LEM2", "convex closed subsets of a semimodular instance stay semimodular",
    over="lattices", default_max_elements=5,
    hypothesis=lambda ll: checkers.is_semimodular(ll).holds,
    conclusion=_concl_convex_restrictions_semimodular,
))
_register(Theorem(
    "HEIGHT", "under the lower covering condition the height inequality holds",
    over="lattices", default_max_elements=5,
    hypothesis=lambda ll: checkers.satisfies_lcc(ll).holds,
    conclusion=checkers.height_inequality,
))
_register(Theorem(
    "CHAINS", "with a top and the LU-covering property all maximal chains up agree in length",
    over="posets", default_max_elements=6,
    hypothesis=lambda p: p.top is not None and p.has_lu_covering().holds,
    conclusion=_concl_equal_chain_lengths,
))
_register(Theorem(
    "ACUTE", "the three characterizations of lower-covering acute completions agree",
    over="posets", default_max_elements=6, require_bounded=True,
    hypothesis=_always,
    conclusion=_concl_acute_equivalence,
))
_register(Theorem(
    "COR1", "acute completions satisfy the lower covering condition iff the structure is trivial, pointed or Mk",
    over="posets", default_max_elements=6, require_bounded=True,
    hypothesis=_always,
    conclusion=_concl_acute_finite,
))
_register(Theorem(
    "MONO", "both operations are monotone exactly on lattices",
    over="lattices", default_max_elements=5,
    hypothesis=_always,
    conclusion=_concl_monotone_iff_lattice,
))
_register(Theorem(
    "MODLAT", "modularity or distributivity forces a lattice",
    over="lattices", default_max_elements=5,
    hypothesis=_always,
    conclusion=_concl_modular_implies_lattice,
))

# drop-hypothesis and strengthened-conclusion variants; these are expected
# to produce counterexamples and exist to prove the harness can find them
_register(Theorem(
    "TH1_NO_COND3", "semimodularity alone implies the weak lower covering condition",
    over="lattices", default_max_elements=6, mutant=True,
    hypothesis=lambda ll: checkers.is_semimodular(ll).holds,
    conclusion=checkers.satisfies_wlcc,
))
_register(Theorem(
    "TH1_LCC_CONCLUSION", "semimodularity with cond3 implies the lower covering condition",
    over="lattices", default_max_elements=5, mutant=True,
    hypothesis=lambda ll: checkers.is_semimodular(ll).holds and checkers.cond3(ll).holds,
    conclusion=checkers.satisfies_lcc,
))
_register(Theorem(
    "TH2_NO_COND4", "semimodularity with cond5 implies the lower covering condition",
    over="lattices", default_max_elements=6, mutant=True,
    hypothesis=lambda ll: checkers.is_semimodular(ll).holds and checkers.cond5(ll).holds,
    conclusion=checkers.satisfies_lcc,
))
_register(Theorem(
    "TH2_NO_COND5", "semimodularity with cond4 implies the lower covering condition",
    over="lattices", default_max_elements=6, mutant=True,
    hypothesis=lambda ll: checkers.is_semimodular(ll).holds and checkers.cond4(ll).holds,
    conclusion=checkers.satisfies_lcc,
))
_register(Theorem(
    "CHAINS_NO_LU", "a top alone forces equal maximal chain lengths",
    over="posets", default_max_elements=5, mutant=True,
    hypothesis=lambda p: p.top is not None,
    conclusion=_concl_equal_chain_lengths,
))


def _lookup(theorem_id: str) -> Theorem:
    th = THEOREMS.get(theorem_id.upper())
    if th is None:
        known = ", ".join(sorted(THEOREMS))
        raise UnknownTheoremError(f"unknown theorem id {theorem_id!r}; known ids: {known}")
    return th


# ----- verification -----


@dataclass(frozen=True)
class Counterexample:
    """An instance on which a theorem's hypotheses hold but its conclusion fails."""

    theorem_id: str
    poset: Poset
    lattice: LambdaLattice | None
    witness: tuple[int, ...]
    note: str

    def instance(self):
        return self.lattice if self.lattice is not None else self.poset

    def validate(self) -> bool:
        """Re-check hypothesis and failed conclusion through the checkers."""
        return violates(self.theorem_id, self.instance()) is not None

    def encoding(self) -> tuple:
        inst = self.instance()
        return inst.encoding() if self.lattice is not None else (inst.encoding(),)

    def to_dict(self) -> dict:
        d = {
            "theorem": self.theorem_id,
            "n": self.poset.n,
            "labels": [self.poset.label(i) for i in range(self.poset.n)],
            "covers": [list(c) for c in self.poset.covers],
            "witness": list(self.witness),
            "note": self.note,
        }
        if self.lattice is not None:
            spec = self.lattice.choice_spec()
            d["joins"] = {f"{x} {y}": v for (x, y), v in sorted(spec.joins.items())}
            d["meets"] = {f"{x} {y}": v for (x, y), v in sorted(spec.meets.items())}
        return d


@dataclass(frozen=True)
class VerificationResult:
    """Outcome of one exhaustive theorem run."""

    theorem_id: str
    max_elements: int
    posets_checked: int
    lattices_checked: int
    posets_skipped: int
    counterexample: Counterexample | None
    elapsed: float
    scope: str
    all_counterexamples: tuple[Counterexample, ...] = ()

    @property
    def clean(self) -> bool:
        return self.counterexample is None

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem_id,
            "max_elements": self.max_elements,
            "posets_checked": self.posets_checked,
            "lattices_checked": self.lattices_checked,
            "posets_skipped": self.posets_skipped,
            "counterexample": self.counterexample.to_dict() if self.counterexample else None,
            "counterexamples_found": len(self.all_counterexamples),
            "elapsed_seconds": round(self.elapsed, 6),
            "scope": self.scope,
        }


def violates(theorem_id: str, instance) -> Counterexample | None:
    """Evaluate a single instance; a result means hypotheses hold and the conclusion fails."""
    th = _lookup(theorem_id)
    if th.over == "lattices":
        if not isinstance(instance, LambdaLattice):
            raise TypeError(f"{th.theorem_id} quantifies over lambda-lattices")
        poset, lattice = instance.poset, instance
    else:
        if isinstance(instance, LambdaLattice):
            instance = instance.poset
        poset, lattice = instance, None
    if not th.hypothesis(instance):
        return None
    v = th.conclusion(instance)
    if v.holds:
        return None
    return Counterexample(th.theorem_id, poset, lattice, v.witness, v.note)


def verify(
    theorem_id: str,
    flt: EnumerationFilter | None = None,
    *,
    budget: int = DEFAULT_COMPLETION_BUDGET,
    collect_all: bool = False,
) -> VerificationResult:
    """Replay one theorem over every enumerated instance in range.

    Stops at the first (least, by encoding) counterexample unless
    collect_all is set. Posets whose completion stream exceeds the
    budget are counted as skipped, never sampled.
    """
    th = _lookup(theorem_id)
    if flt is None:
        flt = EnumerationFilter(max_elements=th.default_max_elements)
    eff = flt
    if (th.over == "lattices" or th.require_bounded) and not (
        flt.require_bounded or flt.require_directed
    ):
        eff = replace(flt, require_bounded=True)

    start = time.perf_counter()
    posets_checked = 0
    lattices_checked = 0
    posets_skipped = 0
    found: list[Counterexample] = []

    for p in enumerate_posets(eff):
        if th.over == "posets":
            posets_checked += 1
            if th.hypothesis(p):
                v = th.conclusion(p)
                if not v.holds:
                    found.append(Counterexample(th.theorem_id, p, None, v.witness, v.note))
                    if not collect_all:
                        break
        else:
            try:
                completions = list(enumerate_completions(p, budget))
            except BudgetError:
                posets_skipped += 1
                continue
            posets_checked += 1
            stop = False
            for ll in completions:
                lattices_checked += 1
                if not th.hypothesis(ll):
                    continue
                v = th.conclusion(ll)
                if not v.holds:
                    found.append(Counterexample(th.theorem_id, p, ll, v.witness, v.note))
                    if not collect_all:
                        stop = True
                        break
            if stop:
                break

    elapsed = time.perf_counter() - start
    kind = "bounded posets" if (eff.require_bounded or eff.require_directed) else "posets"
    tail = " and all their completions" if th.over == "lattices" else ""
    scope = (
        f"exhaustive over all labeled {kind} with at most {eff.max_elements} elements{tail}; "
        "evidence for the general statement, not a proof"
    )
    return VerificationResult(
        theorem_id=th.theorem_id,
        max_elements=eff.max_elements,
        posets_checked=posets_checked,
        lattices_checked=lattices_checked,
        posets_skipped=posets_skipped,
        counterexample=found[0] if found else None,
        elapsed=elapsed,
        scope=scope,
        all_counterexamples=tuple(found),
    )


def independence_table(
    flt: EnumerationFilter | None = None,
    instances=None,
    *,
    budget: int = DEFAULT_COMPLETION_BUDGET,
) -> frozenset[tuple[bool, bool, bool]]:
    """Realized (semimodular, wlcc, lcc) truth triples.

    Classifies either the given instances or every completion of every
    directed poset passing the filter.
    """
    if instances is None:
        if flt is None:
            raise ValueError("need a filter or explicit instances")
        eff = flt if flt.require_bounded or flt.require_directed else replace(
            flt, require_bounded=True
        )
        instances = (
            ll for p in enumerate_posets(eff) for ll in enumerate_completions(p, budget)
        )
    triples = set()
    for ll in instances:
        triples.add((
            checkers.is_semimodular(ll).holds,
            checkers.satisfies_wlcc(ll).holds,
            checkers.satisfies_lcc(ll).holds,
        ))
    return frozenset(triples)

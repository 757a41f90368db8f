"""
Closed forms for the homology of run-sequence complements and for the Betti
numbers, projective dimension, regularity and depth of path ideals of cycles
and lines.

Everything here is integer arithmetic on CycleParams and RunProfile, except
the graded counting rule, which enumerates induced facet subsets of the path
complex and classifies their runs.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Optional, Sequence, Tuple
import logging

from .errors import ConsistencyError, DeferredToOracle, InvalidParameters, ResourceLimitExceeded
from .homology import DEFAULT_FACE_BUDGET
from .path_ideals import CycleParams, RunProfile, build_cycle_complex, classify_runs, make_params
from .simplicial_core import FacetIndex, connected_components
from .tables import BettiTable

logger = logging.getLogger(__name__)

CLAUSE4_MODES = ('derived', 'literal')


@dataclass(frozen=True)
class HomologyAnswer:
    """At most one nonzero reduced homology degree and its dimension."""
    nonzero_degree: Optional[int] = None
    dimension: int = 0

    @classmethod
    def zero(cls) -> 'HomologyAnswer':
        return cls()

    def as_dims(self) -> Dict[int, int]:
        if self.nonzero_degree is None or not self.dimension:
            return {}
        return {self.nonzero_degree: self.dimension}

    def matches(self, dims) -> bool:
        """Compare against a HomologyDims degree by degree."""
        return dims.nonzero() == self.as_dims()

    def as_dict(self) -> Dict:
        return {'degree': self.nonzero_degree, 'dimension': self.dimension}


# =========================
# HOMOLOGY OF E-COMPLEXES
# =========================
def homology_E_t1(run_lengths: Sequence[int]) -> HomologyAnswer:
    """t = 1: K in degree Σ s_j − 2, whatever the individual run lengths."""
    if not run_lengths or any(s < 1 for s in run_lengths):
        raise InvalidParameters(f"run lengths must be positive, got {list(run_lengths)}")
    return HomologyAnswer(sum(run_lengths) - 2, 1)


def homology_E_profile(profile: Optional[RunProfile], t: int) -> HomologyAnswer:
    if t < 2:
        raise InvalidParameters(f"run profiles are read with t >= 2, got t={t}")
    if profile is None:
        # some run length is ≢ 1, 2 mod t+1
        return HomologyAnswer.zero()
    return HomologyAnswer(profile.homology_degree, 1)


def homology_single_run(p: int, d: int, t: int) -> HomologyAnswer:
    if t < 2 or p < 0 or not 0 <= d <= t or p * (t + 1) + d < 1:
        raise InvalidParameters(f"single run needs t >= 2, p >= 0, 0 <= d <= t and a positive length; got p={p}, d={d}, t={t}")
    if d == 1:
        return HomologyAnswer(2 * p - 1, 1)
    if d == 2:
        return HomologyAnswer(2 * p, 1)
    return HomologyAnswer.zero()


def homology_E_runs(run_lengths: Sequence[int], t: int) -> HomologyAnswer:
    if t == 1:
        return homology_E_t1(run_lengths)
    return homology_E_profile(classify_runs(run_lengths, t), t)


def homology_cycle_complement(params: CycleParams) -> HomologyAnswer:
    """Reduced homology of the complement of Δ_{m,l}(C_n) inside its vertex set."""
    if params.t == 1:
        return HomologyAnswer(params.k - 2, 1)
    if params.d == 0:
        if params.p > 0:
            return HomologyAnswer(2 * params.p - 2, params.t)
        return HomologyAnswer.zero()
    return HomologyAnswer(2 * params.p - 1, 1)


# =========================
# BETTI NUMBERS
# =========================
def betti_top(params: CycleParams) -> BettiTable:
    """Column j = n. Only the full path complex has n vertices."""
    answer = homology_cycle_complement(params)
    table = BettiTable(scope=[params.n])
    if answer.nonzero_degree is not None:
        table.add(answer.nonzero_degree + 2, params.n, answer.dimension)
    return table


@lru_cache(maxsize=256)
def _graded_counts(params: CycleParams, subset_budget: int) -> BettiTable:
    delta = build_cycle_complex(params)
    index = FacetIndex(delta)
    q = len(index)
    if 2 ** q > subset_budget:
        raise ResourceLimitExceeded('facet subsets', 2 ** q, subset_budget)

    table = BettiTable(scope=range(0, params.n))
    table.add(0, 0, 1)
    full = (1 << q) - 1
    for mask in range(1, full):
        if not index.is_induced(mask):
            continue
        decomposition = connected_components(index.facets_of(mask), cycle=delta)
        profile = classify_runs(decomposition.lengths, params.t)
        if profile is None:
            continue
        j = profile.vertex_count(params.m, params.l, params.t)
        if j != bin(index.union(mask)).count('1'):
            raise ConsistencyError(
                f"{params.label}: runs {decomposition.lengths} predict {j} vertices, "
                f"the subcollection has {bin(index.union(mask)).count('1')}"
            )
        table.add(profile.betti_index, j, 1)
    logger.debug("graded counts for %s: %r", params.label, table)
    return table


def graded_counts(params: CycleParams, subset_budget: int = DEFAULT_FACE_BUDGET) -> BettiTable:
    """
    β_{i,j}(R/I) for j < n as a count of induced subcollections whose runs are
    all ≡ 1 or ≡ 2 mod t+1, each contributing one to (i, j) with
    i = 2(P+Q)+2β+α and j = [(P+Q)(t+1)+β]l + m(α+β).
    """
    if params.t == 1:
        raise DeferredToOracle(f"{params.label}: t = 1 has no counting rule, use the oracle")
    return _graded_counts(params, subset_budget).restricted(None)


def betti_graded_cycle(params: CycleParams, i: int, j: int,
                       subset_budget: int = DEFAULT_FACE_BUDGET) -> int:
    if params.t == 1:
        raise DeferredToOracle(f"{params.label}: t = 1 has no counting rule, use the oracle")
    if not 0 <= i <= j < params.n:
        raise InvalidParameters(f"graded counting needs 0 <= i <= j < n={params.n}, got i={i}, j={j}")
    return graded_counts(params, subset_budget).get(i, j)


def betti_table_closed(params: CycleParams, subset_budget: int = DEFAULT_FACE_BUDGET) -> BettiTable:
    """
    Everything the closed forms know. For t >= 2 that is the whole table;
    for t = 1 only β_{0,0} and the top column (scope {0, n}).
    """
    top = betti_top(params)
    if params.t == 1:
        table = BettiTable({(0, 0): 1}, scope=[0]).merge(top)
        return table
    table = graded_counts(params, subset_budget).merge(top)
    table.scope = None
    return table


def pd_reg(params: CycleParams) -> Tuple[int, int]:
    """(pd, reg) of R/I_{m,l}(C_n)."""
    if params.d == 0:
        return 2 * params.p, params.n - 2 * params.p
    return 2 * params.p + 1, params.n - 2 * params.p - 1


def depth(params: CycleParams) -> int:
    """n − pd by Auslander–Buchsbaum; always equal to reg."""
    pd, reg = pd_reg(params)
    value = params.n - pd
    if value != reg:
        raise ConsistencyError(f"{params.label}: depth {value} differs from reg {reg}")
    return value


def pd_reg_line(n: int, m: int) -> Tuple[int, int]:
    """(pd, reg) of the ideal J_m(L_n), writing n = p(m+1) + d with 0 <= d <= m."""
    if m < 2 or n < m:
        raise InvalidParameters(f"J_m(L_n) needs 2 <= m <= n, got m={m}, n={n}")
    p, d = divmod(n, m + 1)
    if d == m:
        return 2 * p, p * (m - 1) + m
    return 2 * p - 1, p * (m - 1) + 1


def pd_reg_cycle_ideal(n: int, m: int) -> Tuple[int, int]:
    """(pd, reg) of the ideal J_m(C_n) = I_{m,1}(C_n)."""
    pd, reg = pd_reg(make_params(n, m, 1))
    return pd - 1, reg + 1


# =========================
# VANISHING BOUNDS
# =========================
@dataclass
class BoundsReport:
    status: str
    checked: int = 0
    violation: Optional[Dict] = None
    reason: str = ''

    @property
    def ok(self) -> bool:
        return self.status != 'violation'

    def as_dict(self) -> Dict:
        return {'status': self.status, 'checked': self.checked,
                'violation': self.violation, 'reason': self.reason}


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def check_bounds(params: CycleParams, table: BettiTable, clause4: str = 'derived') -> BoundsReport:
    """
    Check every nonzero β_{i,j} with j > 0 against the vanishing bounds.

    Clauses: ``j<=mi`` everywhere; the index bound (i < 2p when d = 0,
    i <= 2p+1 otherwise) and the j−i bound for j < n; the top column j = n
    must sit in homological degree pd. The j−i bound is
    n − 2p − ceil(2d/(t+1)) in ``derived`` mode and n − 2p − 2 (d != 0) in
    ``literal`` mode.
    """
    if clause4 not in CLAUSE4_MODES:
        raise InvalidParameters(f"clause4 must be one of {', '.join(CLAUSE4_MODES)}, got {clause4!r}")
    if params.t == 1:
        return BoundsReport(status='skipped', reason='t = 1 lies outside the vanishing bounds')

    n, p, d, t, m = params.n, params.p, params.d, params.t, params.m
    pd, _ = pd_reg(params)
    if d == 0:
        spread = n - 2 * p
    elif clause4 == 'literal':
        spread = n - 2 * p - 2
    else:
        spread = n - 2 * p - _ceil_div(2 * d, t + 1)

    checked = 0
    for (i, j), value in sorted(table.entries.items()):
        if j == 0:
            continue
        checked += 1
        failure = None
        if j > m * i:
            failure = ('j<=mi', f"j={j} > m*i={m * i}")
        elif j == n:
            if i != pd:
                failure = ('top', f"top column entry at i={i}, expected i={pd}")
        elif d == 0 and i >= 2 * p:
            failure = ('i<2p', f"i={i} >= 2p={2 * p}")
        elif d != 0 and i > 2 * p + 1:
            failure = ('i<=2p+1', f"i={i} > 2p+1={2 * p + 1}")
        elif j - i > spread:
            failure = ('j-i', f"j-i={j - i} > {spread} ({clause4})")
        if failure:
            clause, detail = failure
            logger.warning("%s: bound %s violated at β_{%d,%d}=%d: %s", params.label, clause, i, j, value, detail)
            return BoundsReport(status='violation', checked=checked,
                                violation={'i': i, 'j': j, 'clause': clause, 'detail': detail})
    return BoundsReport(status='ok', checked=checked)

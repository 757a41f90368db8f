"""
Brute-force graded Betti tables of squarefree monomial ideals.

Two independent Hochster sums are implemented:

* ``betti_table_facet`` sums over induced subcollections Γ of the facet
  complex: β_{i,j} = Σ_{|V(Γ)|=j} dim H̃_{i-2}(Γ^c_{V(Γ)});
* ``betti_table_sr`` sums over vertex windows W of the Stanley-Reisner
  complex N(I): β_{i,j} = Σ_{|W|=j} dim H̃_{j-i-1}(N(I)|_W).

Neither uses any closed form, so both serve as ground truth.
"""
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, replace
from itertools import chain, combinations
from typing import Callable, Iterable, Iterator, List, Sequence, Tuple, Union
import logging

from .errors import InvalidParameters, ResourceLimitExceeded
from .homology import DEFAULT_FACE_BUDGET, GF2, METHODS, FieldSpec, reduced_homology_dims
from .path_ideals import MonomialIdeal, facet_ideal
from .simplicial_core import FacetIndex, SimplicialComplex, complement_complex, restrict_to
from .tables import BettiTable

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OracleConfig:
    field: FieldSpec = GF2
    facet_subset_budget: int = DEFAULT_FACE_BUDGET
    vertex_subset_budget: int = DEFAULT_FACE_BUDGET
    face_budget: int = DEFAULT_FACE_BUDGET
    workers: int = 1
    method: str = 'auto'

    def __post_init__(self):
        for name in ('facet_subset_budget', 'vertex_subset_budget', 'face_budget', 'workers'):
            if getattr(self, name) < 1:
                raise InvalidParameters(f"{name} must be positive, got {getattr(self, name)}")
        if self.method not in METHODS:
            raise InvalidParameters(f"unknown homology method {self.method!r}")

    @classmethod
    def from_settings(cls, **overrides) -> 'OracleConfig':
        """Build from the BETTI_* Django settings; keyword arguments win."""
        from django.conf import settings

        budget = getattr(settings, 'BETTI_BUDGET', DEFAULT_FACE_BUDGET)
        values = {
            'field': FieldSpec.parse(getattr(settings, 'BETTI_DEFAULT_FIELD', 2)),
            'facet_subset_budget': getattr(settings, 'BETTI_FACET_SUBSET_BUDGET', budget),
            'vertex_subset_budget': getattr(settings, 'BETTI_VERTEX_SUBSET_BUDGET', budget),
            'face_budget': budget,
            'workers': getattr(settings, 'BETTI_WORKERS', 1),
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def with_field(self, field_spec: FieldSpec) -> 'OracleConfig':
        return replace(self, field=field_spec)


def _subsets_by_size(count: int) -> Iterator[int]:
    """Masks over ``count`` positions: increasing cardinality, then lexicographic."""
    for size in range(1, count + 1):
        for combo in combinations(range(count), size):
            mask = 0
            for position in combo:
                mask |= 1 << position
            yield mask


def _run_chunks(masks: Iterable[int], work: Callable[[Sequence[int]], BettiTable],
                workers: int) -> BettiTable:
    """Sequential when workers == 1; otherwise contiguous chunks merged additively."""
    if workers == 1:
        return work(list(masks))
    ordered = list(masks)
    size = max(1, -(-len(ordered) // workers))
    chunks = [ordered[start:start + size] for start in range(0, len(ordered), size)]
    table = BettiTable()
    with ThreadPoolExecutor(max_workers=workers) as executor:
        futures = {executor.submit(work, chunk): number for number, chunk in enumerate(chunks)}
        for future in as_completed(futures):
            table = table.merge(future.result())
            logger.debug("merged chunk %d of %d", futures[future] + 1, len(chunks))
    return table


# =========================
# FACET-COMPLEX HOCHSTER SUM
# =========================
def betti_table_facet(delta: SimplicialComplex, cfg: OracleConfig = None) -> BettiTable:
    cfg = cfg or OracleConfig()
    if delta.is_empty_face:
        raise InvalidParameters("the facet ideal of {∅} is the unit ideal")
    index = FacetIndex(delta)
    q = len(index)
    if 2 ** q > cfg.facet_subset_budget:
        raise ResourceLimitExceeded('facet subsets', 2 ** q, cfg.facet_subset_budget)

    def work(masks: Sequence[int]) -> BettiTable:
        partial = BettiTable()
        for mask in masks:
            if not index.is_induced(mask):
                continue
            facets = index.facets_of(mask)
            window = index.vertices_of(index.union(mask))
            gamma = SimplicialComplex(universe=window, facets=facets)
            dims = reduced_homology_dims(complement_complex(gamma, window), cfg.field,
                                         cfg.face_budget, cfg.method)
            for degree, value in dims.nonzero().items():
                partial.add(degree + 2, len(window), value)
        return partial

    table = _run_chunks(_subsets_by_size(q), work, cfg.workers)
    table.add(0, 0, 1)
    logger.info("facet Hochster table over %s: %r", cfg.field, table)
    return table


# =========================
# STANLEY-REISNER HOCHSTER SUM
# =========================
def _generator_masks(ideal: MonomialIdeal) -> List[int]:
    return [sum(1 << (v - 1) for v in g) for g in ideal.generators]


def stanley_reisner_complex(ideal: MonomialIdeal, budget: int = DEFAULT_FACE_BUDGET) -> SimplicialComplex:
    """Facets are the maximal vertex sets containing no generator support."""
    n = ideal.n
    if 2 ** n > budget:
        raise ResourceLimitExceeded('vertex subsets', 2 ** n, budget)
    generators = _generator_masks(ideal)

    def is_face(mask: int) -> bool:
        return all(g & ~mask for g in generators)

    facets = []
    for mask in range(2 ** n):
        if not is_face(mask):
            continue
        if all(mask >> v & 1 or not is_face(mask | 1 << v) for v in range(n)):
            facets.append(frozenset(v + 1 for v in range(n) if mask >> v & 1))
    return SimplicialComplex(universe=frozenset(range(1, n + 1)), facets=tuple(facets))


def betti_table_sr(ideal: MonomialIdeal, cfg: OracleConfig = None) -> BettiTable:
    cfg = cfg or OracleConfig()
    n = ideal.n
    if 2 ** n > cfg.vertex_subset_budget:
        raise ResourceLimitExceeded('vertex subsets', 2 ** n, cfg.vertex_subset_budget)
    sr_complex = stanley_reisner_complex(ideal, cfg.vertex_subset_budget)

    def work(masks: Sequence[int]) -> BettiTable:
        partial = BettiTable()
        for mask in masks:
            window = [v + 1 for v in range(n) if mask >> v & 1]
            j = len(window)
            dims = reduced_homology_dims(restrict_to(sr_complex, window), cfg.field,
                                         cfg.face_budget, cfg.method)
            for degree, value in dims.nonzero().items():
                partial.add(j - degree - 1, j, value)
        return partial

    masks = chain([0], _subsets_by_size(n))
    table = _run_chunks(masks, work, cfg.workers)
    logger.info("Stanley-Reisner Hochster table over %s: %r", cfg.field, table)
    return table


# =========================
# DISPATCH AND INVARIANTS
# =========================
def betti_table(source: Union[SimplicialComplex, MonomialIdeal], cfg: OracleConfig = None,
                method: str = 'facet') -> BettiTable:
    if method == 'facet':
        if isinstance(source, MonomialIdeal):
            source = SimplicialComplex(universe=frozenset(range(1, source.n + 1)),
                                       facets=source.generators)
        return betti_table_facet(source, cfg)
    if method == 'sr':
        if isinstance(source, SimplicialComplex):
            source = facet_ideal(source)
        return betti_table_sr(source, cfg)
    raise InvalidParameters(f"unknown oracle method {method!r}; expected facet or sr")


def pd_from_table(table: BettiTable) -> int:
    return table.pd


def reg_from_table(table: BettiTable) -> int:
    return table.reg


def ideal_pd_reg(table: BettiTable) -> Tuple[int, int]:
    """(pd, reg) of I itself from the table of R/I."""
    return table.pd - 1, table.reg + 1

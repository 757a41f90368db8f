"""
Exact reduced simplicial homology over a prime field or the rationals.

Faces are enumerated from the facets (or from the nerve of the facet cover),
boundary matrices are assembled with numpy, and ranks are computed exactly:
XOR elimination for GF(2), modular elimination for GF(p), and sympy's
DomainMatrix over QQ for the rationals. Nothing here touches floating point.
"""
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Tuple
import logging

import numpy as np
from sympy import QQ, isprime
from sympy.polys.matrices import DomainMatrix

from .errors import InvalidParameters, ResourceLimitExceeded
from .simplicial_core import SimplicialComplex

logger = logging.getLogger(__name__)

DEFAULT_FACE_BUDGET = 2 ** 22
MAX_PRIME = 2 ** 31
METHODS = ('auto', 'faces', 'nerve')

Face = Tuple[int, ...]


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field. ``characteristic == 0`` means the rationals."""
    characteristic: int

    @classmethod
    def parse(cls, code) -> 'FieldSpec':
        try:
            value = int(code)
        except (TypeError, ValueError):
            raise InvalidParameters(f"field code must be an integer, got {code!r}")
        if value == 0:
            return cls(0)
        if value < 0 or not isprime(value):
            raise InvalidParameters(f"field code {value} is neither 0 (rationals) nor a prime")
        if value >= MAX_PRIME:
            raise InvalidParameters(f"prime {value} is too large for modular elimination (limit 2^31)")
        return cls(value)

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    @property
    def code(self) -> int:
        return self.characteristic

    @property
    def label(self) -> str:
        return 'QQ' if self.is_rational else f'GF({self.characteristic})'

    def __str__(self) -> str:
        return self.label


GF2 = FieldSpec(2)
GF3 = FieldSpec(3)
RATIONALS = FieldSpec(0)


@dataclass
class ChainComplex:
    """Faces graded by dimension, the (−1)-face being ``()``."""
    faces_by_dim: Dict[int, List[Face]] = field(default_factory=dict)

    def __post_init__(self):
        self._index = {d: {face: i for i, face in enumerate(faces)}
                       for d, faces in self.faces_by_dim.items()}

    @property
    def top_dimension(self) -> int:
        return max(self.faces_by_dim) if self.faces_by_dim else -2

    def faces(self, d: int) -> List[Face]:
        return self.faces_by_dim.get(d, [])

    def count(self, d: int) -> int:
        return len(self.faces_by_dim.get(d, ()))

    def total(self) -> int:
        return sum(len(f) for f in self.faces_by_dim.values())

    def index_of(self, d: int, face: Face) -> int:
        return self._index[d][face]

    def euler_characteristic(self) -> int:
        return sum((-1 if d % 2 else 1) * len(faces) for d, faces in self.faces_by_dim.items())


@dataclass(frozen=True)
class HomologyDims:
    dims: Dict[int, int]

    def __getitem__(self, degree: int) -> int:
        return self.dims.get(degree, 0)

    def nonzero(self) -> Dict[int, int]:
        return {d: v for d, v in sorted(self.dims.items()) if v}

    def is_zero(self) -> bool:
        return not self.nonzero()

    def euler_characteristic(self) -> int:
        return sum((-1 if d % 2 else 1) * v for d, v in self.dims.items())

    def as_dict(self) -> Dict[str, int]:
        return {str(d): v for d, v in sorted(self.dims.items())}


def _graded(faces) -> Dict[int, List[Face]]:
    graded: Dict[int, List[Face]] = {}
    for face in faces:
        graded.setdefault(len(face) - 1, []).append(face)
    return {d: sorted(fs) for d, fs in sorted(graded.items())}


def enumerate_faces(delta: SimplicialComplex, budget: int = DEFAULT_FACE_BUDGET) -> ChainComplex:
    """All subsets of all facets, ∅ included, in lexicographic order per dimension."""
    if delta.is_void:
        return ChainComplex()
    for facet in delta.facets:
        if 2 ** len(facet) > budget:
            raise ResourceLimitExceeded('faces', 2 ** len(facet), budget)

    faces = set()
    for facet in delta.facets:
        ordered = tuple(sorted(facet))
        for size in range(len(ordered) + 1):
            faces.update(combinations(ordered, size))
        if len(faces) > budget:
            raise ResourceLimitExceeded('faces', len(faces), budget)
    chain = ChainComplex(_graded(faces))
    logger.debug("enumerated %d faces up to dimension %d", chain.total(), chain.top_dimension)
    return chain


def nerve_faces(delta: SimplicialComplex, budget: int = DEFAULT_FACE_BUDGET) -> ChainComplex:
    """
    The nerve of the facet cover: sets of facet positions with a common vertex.

    Every nonempty intersection of simplices is a simplex, so the nerve has the
    reduced homology of ``delta``. {∅} has nerve {∅}.
    """
    if delta.is_void:
        return ChainComplex()
    if delta.is_empty_face:
        return ChainComplex({-1: [()]})

    facets = delta.facets
    faces = [()]
    frontier = [((i,), facets[i]) for i in range(len(facets)) if facets[i]]
    while frontier:
        faces.extend(face for face, _ in frontier)
        if len(faces) > budget:
            raise ResourceLimitExceeded('nerve faces', len(faces), budget)
        grown = []
        for face, common in frontier:
            for j in range(face[-1] + 1, len(facets)):
                meet = common & facets[j]
                if meet:
                    grown.append((face + (j,), meet))
        frontier = grown
    return ChainComplex(_graded(faces))


def boundary_matrix(chain: ChainComplex, d: int) -> np.ndarray:
    """∂_d as an integer matrix: rows are (d−1)-faces, columns d-faces."""
    rows = chain.faces(d - 1)
    cols = chain.faces(d)
    matrix = np.zeros((len(rows), len(cols)), dtype=np.int64)
    if not rows or not cols:
        return matrix
    for c, face in enumerate(cols):
        for j in range(len(face)):
            facet = face[:j] + face[j + 1:]
            matrix[chain.index_of(d - 1, facet), c] = -1 if j % 2 else 1
    return matrix


# =========================
# EXACT RANK
# =========================
def _rank_gf2(matrix: np.ndarray) -> int:
    work = (matrix % 2).astype(bool)
    rows, cols = work.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        candidates = np.nonzero(work[rank:, col])[0]
        if candidates.size == 0:
            continue
        pivot = rank + int(candidates[0])
        if pivot != rank:
            work[[rank, pivot]] = work[[pivot, rank]]
        hits = work[:, col].copy()
        hits[rank] = False
        work[hits] ^= work[rank]
        rank += 1
    return rank


def _rank_mod_p(matrix: np.ndarray, p: int) -> int:
    work = np.asarray(matrix % p, dtype=np.int64)
    rows, cols = work.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        candidates = np.nonzero(work[rank:, col])[0]
        if candidates.size == 0:
            continue
        pivot = rank + int(candidates[0])
        if pivot != rank:
            work[[rank, pivot]] = work[[pivot, rank]]
        inverse = pow(int(work[rank, col]), -1, p)
        work[rank] = (work[rank] * inverse) % p
        factors = work[:, col].copy()
        factors[rank] = 0
        work = (work - np.outer(factors, work[rank])) % p
        rank += 1
    return rank


def _rank_rational(matrix: np.ndarray) -> int:
    rows = [[QQ(int(v)) for v in row] for row in matrix.tolist()]
    return DomainMatrix(rows, shape=matrix.shape, domain=QQ).rank()


def matrix_rank(matrix: np.ndarray, field_spec: FieldSpec = GF2) -> int:
    if matrix.size == 0:
        return 0
    if field_spec.is_rational:
        return _rank_rational(matrix)
    if field_spec.characteristic == 2:
        return _rank_gf2(matrix)
    return _rank_mod_p(matrix, field_spec.characteristic)


def dump_matrix_market(matrix: np.ndarray) -> str:
    rows, cols = matrix.shape
    entries = [(i + 1, j + 1, int(matrix[i, j])) for i, j in zip(*np.nonzero(matrix))]
    lines = ['%%MatrixMarket matrix coordinate integer general', f'{rows} {cols} {len(entries)}']
    lines.extend(f'{i} {j} {v}' for i, j, v in entries)
    return '\n'.join(lines) + '\n'


# =========================
# REDUCED HOMOLOGY
# =========================
def chain_complex(delta: SimplicialComplex, budget: int = DEFAULT_FACE_BUDGET,
                  method: str = 'auto') -> ChainComplex:
    if method not in METHODS:
        raise InvalidParameters(f"unknown homology method {method!r}; expected one of {', '.join(METHODS)}")
    if method == 'auto':
        use_nerve = 2 ** len(delta.facets) < sum(2 ** len(f) for f in delta.facets)
        method = 'nerve' if use_nerve else 'faces'
    if method == 'nerve':
        return nerve_faces(delta, budget)
    return enumerate_faces(delta, budget)


def homology_of_chain(chain: ChainComplex, field_spec: FieldSpec = GF2) -> HomologyDims:
    if not chain.faces_by_dim:
        return HomologyDims({})
    top = chain.top_dimension
    ranks = {d: matrix_rank(boundary_matrix(chain, d), field_spec) for d in range(0, top + 2)}
    ranks[-1] = 0
    dims = {d: chain.count(d) - ranks[d] - ranks[d + 1] for d in range(-1, top + 1)}
    return HomologyDims(dims)


def reduced_homology_dims(delta: SimplicialComplex, field_spec: FieldSpec = GF2,
                          budget: int = DEFAULT_FACE_BUDGET, method: str = 'auto') -> HomologyDims:
    """
    dim H̃_d = (#d-faces − rank ∂_d) − rank ∂_{d+1} for d = −1 … dim Δ.

    The void complex has identically zero homology; {∅} has H̃_{−1} = 1.
    """
    chain = chain_complex(delta, budget, method)
    dims = homology_of_chain(chain, field_spec)
    logger.debug("H̃(%r) over %s = %s", delta, field_spec, dims.nonzero())
    return dims

"""
Path ideals of cycles and lines, their path complexes and the complements
of disjoint run sequences.

All labels follow the standard labeling of the cycle: facet ``i`` (1-based)
is ``{x_{(i-1)l+1}, ..., x_{(i-1)l+m}}`` with indices reduced modulo ``n``.
"""
from dataclasses import dataclass
from math import gcd
from typing import Iterable, List, Optional, Sequence, Tuple
import logging

from .errors import InvalidParameters
from .simplicial_core import Facet, SimplicialComplex, complement_complex

logger = logging.getLogger(__name__)


# =========================
# PARAMETERS
# =========================
@dataclass(frozen=True)
class CycleParams:
    n: int
    m: int
    l: int
    s: int
    t: int
    k: int
    p: int
    d: int
    l_raw: int

    @property
    def label(self) -> str:
        return f"I_{{{self.m},{self.l}}}(C_{self.n})"

    def as_dict(self) -> dict:
        return {
            'n': self.n, 'm': self.m, 'l': self.l, 'l_raw': self.l_raw,
            's': self.s, 't': self.t, 'k': self.k, 'p': self.p, 'd': self.d,
        }


def _require_int(name: str, value) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidParameters(f"{name} must be an integer, got {value!r}")
    return value


def normalize_step(l_raw: int, n: int, m: Optional[int] = None) -> int:
    """
    Replace the step by gcd(l_raw, n).

    I_{m,l}(C_n) only depends on gcd(l, n), so every step collapses onto a
    divisor of n. The raw step must satisfy 1 <= l_raw < m.
    """
    l_raw = _require_int('l', l_raw)
    n = _require_int('n', n)
    if l_raw < 1:
        raise InvalidParameters(f"step l={l_raw} must be positive")
    if m is not None and l_raw >= m:
        raise InvalidParameters(f"step l={l_raw} must satisfy l < m={m}")
    step = gcd(l_raw, n)
    if step == n:
        raise InvalidParameters(f"step l={l_raw} is a multiple of n={n}; the ideal has a single repeated generator")
    if m is not None and step >= m:
        raise InvalidParameters(f"normalized step l={step} must satisfy l <= m-1={m - 1}")
    if 2 * step > n:
        raise InvalidParameters(f"normalized step l={step} must satisfy l <= n/2={n / 2:g}")
    return step


def make_params(n: int, m: int, l_raw: int) -> CycleParams:
    n = _require_int('n', n)
    m = _require_int('m', m)
    if m < 2 or m > n:
        raise InvalidParameters(f"path length m={m} must satisfy 2 <= m <= n={n}")
    l = normalize_step(l_raw, n, m)
    s = m % l
    t = (m - s) // l
    k = n // l
    p, d = divmod(k, t + 1)
    return CycleParams(n=n, m=m, l=l, s=s, t=t, k=k, p=p, d=d, l_raw=l_raw)


def is_canonical_triple(n: int, m: int, l: int) -> bool:
    """l divides n and 1 <= l <= min(m-1, n/2)."""
    return 2 <= m <= n and 1 <= l < m and n % l == 0 and 2 * l <= n


# =========================
# COMPLEXES
# =========================
def build_cycle_complex(params: CycleParams) -> SimplicialComplex:
    """Δ_{m,l}(C_n) in standard labeling."""
    facets = [
        [(i - 1) * params.l + j for j in range(1, params.m + 1)]
        for i in range(1, params.k + 1)
    ]
    delta = SimplicialComplex.from_facets(facets, modulus=params.n)
    logger.debug("built %s with %d facets", params.label, len(delta))
    return delta


def _require_run_shape(length: int, m: int, l: int):
    if _require_int('length', length) < 1:
        raise InvalidParameters(f"run length must be positive, got {length}")
    if _require_int('l', l) < 1 or _require_int('m', m) <= l:
        raise InvalidParameters(f"runs need 1 <= l < m, got m={m}, l={l}")


def run_vertex_count(length: int, m: int, l: int) -> int:
    return (length - 1) * l + m


def run_facets(length: int, m: int, l: int, offset: int = 0) -> List[Facet]:
    _require_run_shape(length, m, l)
    return [
        frozenset(offset + (i - 1) * l + j for j in range(1, m + 1))
        for i in range(1, length + 1)
    ]


def build_run_complex(length: int, m: int, l: int) -> SimplicialComplex:
    """Path complex of a line: ``length`` facets on (length-1)l+m vertices."""
    facets = run_facets(length, m, l)
    return SimplicialComplex.from_facets(facets, universe=range(1, run_vertex_count(length, m, l) + 1))


def build_line_complex(n: int, m: int) -> SimplicialComplex:
    """Path complex of J_m(L_n): all paths of m consecutive vertices on a line of n vertices."""
    n = _require_int('n', n)
    m = _require_int('m', m)
    if m < 2 or m > n:
        raise InvalidParameters(f"line ideal J_m(L_n) needs 2 <= m <= n, got m={m}, n={n}")
    return build_run_complex(n - m + 1, m, 1)


def run_sequence(run_lengths: Sequence[int], m: int, l: int) -> SimplicialComplex:
    """Disjoint union of runs laid out on consecutive vertex blocks."""
    if not run_lengths:
        raise InvalidParameters("a run sequence needs at least one run")
    facets: List[Facet] = []
    offset = 0
    for length in run_lengths:
        facets.extend(run_facets(length, m, l, offset))
        offset += run_vertex_count(length, m, l)
    return SimplicialComplex.from_facets(facets, universe=range(1, offset + 1))


def build_E_complex(run_lengths: Sequence[int], m: int, l: int) -> SimplicialComplex:
    """E(s_1, ..., s_r): the complement of a run sequence inside its own vertex set."""
    gamma = run_sequence(run_lengths, m, l)
    return complement_complex(gamma, gamma.vertices)


# =========================
# RUN PROFILES
# =========================
@dataclass(frozen=True)
class RunProfile:
    """Runs of length p_u(t+1)+1 (alpha family) and q_v(t+1)+2 (beta family)."""
    alpha_runs: Tuple[int, ...] = ()
    beta_runs: Tuple[int, ...] = ()

    def __post_init__(self):
        if any(v < 0 for v in self.alpha_runs + self.beta_runs):
            raise InvalidParameters("run profile entries must be nonnegative")

    @property
    def P(self) -> int:
        return sum(self.alpha_runs)

    @property
    def Q(self) -> int:
        return sum(self.beta_runs)

    @property
    def alpha(self) -> int:
        return len(self.alpha_runs)

    @property
    def beta(self) -> int:
        return len(self.beta_runs)

    @property
    def homology_degree(self) -> int:
        return 2 * (self.P + self.Q) + 2 * self.beta + self.alpha - 2

    @property
    def betti_index(self) -> int:
        return self.homology_degree + 2

    def vertex_count(self, m: int, l: int, t: int) -> int:
        return ((self.P + self.Q) * (t + 1) + self.beta) * l + m * (self.alpha + self.beta)

    def run_lengths(self, t: int) -> List[int]:
        return [p * (t + 1) + 1 for p in self.alpha_runs] + [q * (t + 1) + 2 for q in self.beta_runs]


def classify_runs(lengths: Iterable[int], t: int) -> Optional[RunProfile]:
    """Split run lengths by residue mod t+1; None when some run is neither ≡ 1 nor ≡ 2."""
    if t < 1:
        raise InvalidParameters(f"t must be positive, got {t}")
    alpha, beta = [], []
    for length in lengths:
        if length < 1:
            raise InvalidParameters(f"run length must be positive, got {length}")
        if (length - 1) % (t + 1) == 0:
            alpha.append((length - 1) // (t + 1))
        elif length >= 2 and (length - 2) % (t + 1) == 0:
            beta.append((length - 2) // (t + 1))
        else:
            return None
    return RunProfile(alpha_runs=tuple(alpha), beta_runs=tuple(beta))


# =========================
# IDEALS
# =========================
@dataclass(frozen=True)
class MonomialIdeal:
    """Squarefree monomial ideal given by the supports of its minimal generators."""
    n: int
    generators: Tuple[Facet, ...]

    @classmethod
    def from_supports(cls, supports: Iterable[Iterable[int]], n: Optional[int] = None) -> 'MonomialIdeal':
        raw = [frozenset(s) for s in supports]
        unique = []
        for support in raw:
            if support not in unique:
                unique.append(support)
        minimal = tuple(g for g in unique if not any(h < g for h in unique))
        labels = frozenset().union(*minimal) if minimal else frozenset()
        if any(v < 1 for v in labels):
            raise InvalidParameters("variables are indexed from 1")
        size = max(labels, default=0) if n is None else n
        if labels and max(labels) > size:
            raise InvalidParameters(f"generator uses x{max(labels)} but the ring has {size} variables")
        return cls(n=size, generators=minimal)

    def degrees(self) -> List[int]:
        return [len(g) for g in self.generators]

    def __str__(self) -> str:
        monomials = [''.join(f'x{v}' for v in sorted(g)) or '1' for g in self.generators]
        return '(' + ', '.join(monomials) + ')'


def facet_ideal(delta: SimplicialComplex) -> MonomialIdeal:
    size = max(delta.universe | delta.vertices, default=0)
    return MonomialIdeal(n=size, generators=tuple(delta.facets))


def cycle_path_ideal(n: int, m: int, l_raw: int) -> MonomialIdeal:
    return facet_ideal(build_cycle_complex(make_params(n, m, l_raw)))

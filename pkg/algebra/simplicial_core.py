"""
Finite simplicial complexes given by their facets.

A complex stores its vertex universe and its facets. Facets are deduplicated
and reduced to the maximal sets at construction; the surviving facets keep
their construction order so that the standard labeling of a path complex can
be read back off the facet tuple.

Two conventions matter everywhere downstream:

* the *void* complex has no facets at all;
* the complex ``{∅}`` has exactly one facet, the empty set.

They are different complexes with different reduced homology.
"""
from dataclasses import dataclass
from functools import reduce
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union
import logging

import networkx as nx

from .errors import ConsistencyError, InvalidParameters, PreconditionViolation

logger = logging.getLogger(__name__)

Vertex = int
Facet = FrozenSet[int]


def reduce_label(a: int, n: int) -> int:
    """Cyclic label reduction: x_a = x_i whenever a ≡ i (mod n), labels in 1..n."""
    return ((a - 1) % n) + 1


def _maximal(facets: Iterable[Facet]) -> Tuple[Facet, ...]:
    unique: List[Facet] = []
    seen = set()
    for facet in facets:
        if facet not in seen:
            seen.add(facet)
            unique.append(facet)
    return tuple(f for f in unique if not any(f < g for g in unique))


@dataclass(frozen=True, eq=False)
class SimplicialComplex:
    universe: FrozenSet[int]
    facets: Tuple[Facet, ...]

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[int]],
                    universe: Optional[Iterable[int]] = None,
                    modulus: Optional[int] = None) -> 'SimplicialComplex':
        """
        Build a complex from raw vertex collections.

        With ``modulus`` every label is reduced cyclically into 1..modulus and
        the universe defaults to 1..modulus; otherwise it defaults to the union
        of the facets.
        """
        raw: List[Facet] = []
        for collection in facets:
            vertices = []
            for v in collection:
                if not isinstance(v, int) or isinstance(v, bool):
                    raise InvalidParameters(f"vertex labels must be integers, got {v!r}")
                if modulus is not None:
                    v = reduce_label(v, modulus)
                if v < 1:
                    raise InvalidParameters(f"vertex labels are positive, got {v}")
                vertices.append(v)
            raw.append(frozenset(vertices))

        if universe is None:
            if modulus is not None:
                universe_set = frozenset(range(1, modulus + 1))
            else:
                universe_set = frozenset().union(*raw) if raw else frozenset()
        else:
            universe_set = frozenset(universe)

        for facet in raw:
            if not facet <= universe_set:
                raise PreconditionViolation(
                    f"facet {sorted(facet)} is not contained in the universe {sorted(universe_set)}"
                )
        return cls(universe=universe_set, facets=_maximal(raw))

    @classmethod
    def void(cls, universe: Iterable[int] = ()) -> 'SimplicialComplex':
        return cls(universe=frozenset(universe), facets=())

    @classmethod
    def empty_face(cls, universe: Iterable[int] = ()) -> 'SimplicialComplex':
        """The complex {∅}."""
        return cls(universe=frozenset(universe), facets=(frozenset(),))

    @classmethod
    def simplex(cls, vertices: Iterable[int]) -> 'SimplicialComplex':
        return cls.from_facets([vertices])

    # =========================
    # BASIC PROPERTIES
    # =========================
    @property
    def vertices(self) -> FrozenSet[int]:
        """V(Δ), the union of the facets."""
        return frozenset().union(*self.facets) if self.facets else frozenset()

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_empty_face(self) -> bool:
        return self.facets == (frozenset(),)

    @property
    def dimension(self) -> int:
        if not self.facets:
            return -2
        return max(len(f) for f in self.facets) - 1

    def sorted_facets(self) -> List[Tuple[int, ...]]:
        return sorted(tuple(sorted(f)) for f in self.facets)

    def __len__(self) -> int:
        return len(self.facets)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.universe == other.universe and set(self.facets) == set(other.facets)

    def __hash__(self) -> int:
        return hash((self.universe, frozenset(self.facets)))

    def __repr__(self) -> str:
        body = ', '.join('{' + ','.join(map(str, f)) + '}' for f in self.sorted_facets())
        return f"<SimplicialComplex [{body}] on {len(self.universe)} vertices>"


@dataclass(frozen=True)
class InducedSubcollection:
    parent: SimplicialComplex
    window: FrozenSet[int]
    facets: Tuple[Facet, ...]

    @property
    def vertices(self) -> FrozenSet[int]:
        return frozenset().union(*self.facets) if self.facets else frozenset()

    def as_complex(self) -> SimplicialComplex:
        """The subcollection as a complex on its own vertex set V(Γ)."""
        return SimplicialComplex(universe=self.vertices, facets=self.facets)


@dataclass(frozen=True)
class Run:
    facets: Tuple[Facet, ...]
    length: int
    indices: Tuple[int, ...] = ()


@dataclass(frozen=True)
class RunDecomposition:
    components: Tuple[Run, ...]
    is_proper: bool = True

    @property
    def lengths(self) -> List[int]:
        return [run.length for run in self.components]


# =========================
# OPERATIONS
# =========================
def complement_complex(delta: SimplicialComplex, vertex_set: Iterable[int]) -> SimplicialComplex:
    """⟨V∖F_1, …, V∖F_q⟩ on the universe V; V∖F = ∅ survives as the facet ∅."""
    v = frozenset(vertex_set)
    for facet in delta.facets:
        if not facet <= v:
            raise PreconditionViolation(
                f"facet {sorted(facet)} is not contained in {sorted(v)}"
            )
    if delta.is_void:
        return SimplicialComplex.void(v)
    return SimplicialComplex(universe=v, facets=_maximal(v - f for f in delta.facets))


def induced_on(delta: SimplicialComplex, window: Iterable[int]) -> InducedSubcollection:
    u = frozenset(window)
    if not u <= delta.universe:
        raise PreconditionViolation(
            f"window {sorted(u)} is not contained in the universe {sorted(delta.universe)}"
        )
    return InducedSubcollection(
        parent=delta,
        window=u,
        facets=tuple(f for f in delta.facets if f <= u),
    )


def restrict_to(delta: SimplicialComplex, window: Iterable[int]) -> SimplicialComplex:
    """Δ|_W: every face of Δ lying inside W. Facets are the maximal F ∩ W."""
    w = frozenset(window)
    if delta.is_void:
        return SimplicialComplex.void(w)
    return SimplicialComplex(universe=w, facets=_maximal(f & w for f in delta.facets))


def is_cone(delta: SimplicialComplex) -> bool:
    if delta.is_void:
        raise PreconditionViolation("is_cone needs at least one facet")
    return bool(reduce(frozenset.intersection, delta.facets))


def is_pure(delta: SimplicialComplex) -> bool:
    return len({len(f) for f in delta.facets}) <= 1


class FacetIndex:
    """
    Bitmask view of a complex's facets.

    Vertex ``v`` of the sorted universe occupies one bit; facet ``i`` has the
    mask ``self.masks[i]``. A subset of facets is itself a bitmask over
    facet positions.
    """

    def __init__(self, delta: SimplicialComplex):
        self.delta = delta
        self.order: List[int] = sorted(delta.universe | delta.vertices)
        self.bit: Dict[int, int] = {v: 1 << i for i, v in enumerate(self.order)}
        self.masks: List[int] = [self.vertex_mask(f) for f in delta.facets]
        self.position: Dict[Facet, int] = {f: i for i, f in enumerate(delta.facets)}

    def __len__(self) -> int:
        return len(self.masks)

    def vertex_mask(self, vertices: Iterable[int]) -> int:
        mask = 0
        for v in vertices:
            mask |= self.bit[v]
        return mask

    def vertices_of(self, vertex_mask: int) -> FrozenSet[int]:
        return frozenset(v for v in self.order if vertex_mask & self.bit[v])

    def subset_mask(self, facets: Iterable[Iterable[int]]) -> int:
        mask = 0
        for facet in facets:
            key = frozenset(facet)
            if key not in self.position:
                raise PreconditionViolation(f"{sorted(key)} is not a facet of the complex")
            mask |= 1 << self.position[key]
        return mask

    def union(self, subset_mask: int) -> int:
        vertex_mask = 0
        i = 0
        while subset_mask:
            if subset_mask & 1:
                vertex_mask |= self.masks[i]
            subset_mask >>= 1
            i += 1
        return vertex_mask

    def is_induced(self, subset_mask: int) -> bool:
        covered = self.union(subset_mask)
        for i, mask in enumerate(self.masks):
            if not (subset_mask >> i) & 1 and (mask & ~covered) == 0:
                return False
        return True

    def facets_of(self, subset_mask: int) -> Tuple[Facet, ...]:
        return tuple(f for i, f in enumerate(self.delta.facets) if subset_mask >> i & 1)


def is_induced_facet_subset(delta: SimplicialComplex, subset: Iterable[Iterable[int]]) -> bool:
    index = FacetIndex(delta)
    return index.is_induced(index.subset_mask(subset))


def connected_components(source: Union[SimplicialComplex, InducedSubcollection, Sequence[Iterable[int]]],
                         cycle: Optional[SimplicialComplex] = None) -> RunDecomposition:
    """
    Components of the facet-intersection graph.

    With ``cycle`` (a path complex of a cycle in standard labeling) the run
    positions are reported, and for a proper subcollection every component
    must occupy cyclically consecutive positions. The parent of an induced
    subcollection is never taken as ``cycle`` implicitly.
    """
    if isinstance(source, (SimplicialComplex, InducedSubcollection)):
        facets = tuple(source.facets)
    else:
        facets = tuple(frozenset(f) for f in source)

    graph = nx.Graph()
    graph.add_nodes_from(range(len(facets)))
    for a in range(len(facets)):
        for b in range(a + 1, len(facets)):
            if facets[a] & facets[b]:
                graph.add_edge(a, b)
    groups = sorted((sorted(c) for c in nx.connected_components(graph)), key=lambda c: c[0])

    if cycle is None:
        runs = tuple(Run(facets=tuple(facets[i] for i in g), length=len(g)) for g in groups)
        return RunDecomposition(components=runs, is_proper=True)

    position = {f: i for i, f in enumerate(cycle.facets)}
    k = len(cycle.facets)
    missing = [f for f in facets if f not in position]
    if missing:
        raise PreconditionViolation(f"{sorted(missing[0])} is not a facet of the cycle complex")
    is_proper = set(facets) != set(cycle.facets)

    runs = []
    for group in groups:
        indices = sorted(position[facets[i]] for i in group)
        if is_proper:
            members = set(indices)
            starts = [i for i in indices if (i - 1) % k not in members]
            if len(starts) != 1:
                raise ConsistencyError(
                    f"component at positions {[i + 1 for i in indices]} is not a run of consecutive facets"
                )
            ordered = [(starts[0] + step) % k for step in range(len(indices))]
            if set(ordered) != members:
                raise ConsistencyError(
                    f"component at positions {[i + 1 for i in indices]} is not a run of consecutive facets"
                )
            indices = ordered
        runs.append(Run(
            facets=tuple(cycle.facets[i] for i in indices),
            length=len(indices),
            indices=tuple(indices),
        ))
    logger.debug("decomposed %d facets into runs %s", len(facets), [r.length for r in runs])
    return RunDecomposition(components=tuple(runs), is_proper=is_proper)

"""
created matt_dumont
on: 17/10/26

Hypergraphs, simplicial complexes and the hypergraph operations (deletion, contraction, intersection) used by the
homological connectivity bounds.
"""
from itertools import combinations
from komanawa.rainbow_tools.matroids import ScaleLimitError, shortlex, fmt_set, _as_ground, independent_sets, \
    circuits

MAX_FACES = 2 ** 20


class Hypergraph:
    """
    a hypergraph (ground set, edge family).

    Edges are kept in the order given with duplicates dropped; the family is not minimalized, non-minimal edges do
    not change the independence complex.  The empty edge is allowed and makes the independence complex void.

    :param ground: ground set (int size or iterable of ints)
    :param edges: iterable of sets
    """

    def __init__(self, ground, edges=()):
        self.ground = _as_ground(ground)
        seen = []
        for e in edges:
            e = frozenset(int(x) for x in e)
            if not e <= self.ground:
                raise ValueError(f'edge {fmt_set(e)} is not inside the ground set {fmt_set(self.ground)}')
            if e not in seen:
                seen.append(e)
        self.edges = tuple(seen)

    def __eq__(self, other):
        return (isinstance(other, Hypergraph) and self.ground == other.ground
                and set(self.edges) == set(other.edges))

    def __hash__(self):
        return hash((self.ground, frozenset(self.edges)))

    def __repr__(self):
        return f'Hypergraph(ground={fmt_set(self.ground)}, edges=[{", ".join(fmt_set(e) for e in self.edges)}])'

    def is_independent(self, subset):
        """
        a set is independent if it contains no edge

        :param subset: iterable of elements
        :return: bool
        """
        subset = frozenset(subset)
        return not any(e <= subset for e in self.edges)

    def minimal_edges(self):
        """
        edges that contain no other edge, in the stored order
        """
        return [e for e in self.edges if not any(f < e for f in self.edges)]


class SimplicialComplex:
    """
    a simplicial complex stored by its facets (maximal faces).

    facets == () is the void complex (no faces at all); facets == (frozenset(),) is the complex {empty set}.
    Faces are enumerated on demand and cached.

    :param ground: ground set (int size or iterable of ints)
    :param facets: iterable of sets, non-maximal sets are dropped
    """

    def __init__(self, ground, facets=()):
        self.ground = _as_ground(ground)
        facets = set(frozenset(int(x) for x in f) for f in facets)
        for f in facets:
            if not f <= self.ground:
                raise ValueError(f'facet {fmt_set(f)} is not inside the ground set {fmt_set(self.ground)}')
        self.facets = tuple(shortlex(f for f in facets if not any(f < g for g in facets)))
        self._faces = None
        self._faces_by_dim = None
        self._boundary_ranks = {}

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self.ground == other.ground and self.facets == other.facets

    def __hash__(self):
        return hash((self.ground, self.facets))

    def __repr__(self):
        return (f'SimplicialComplex(ground={fmt_set(self.ground)}, '
                f'facets=[{", ".join(fmt_set(f) for f in self.facets)}])')

    def __contains__(self, face):
        face = frozenset(face)
        return any(face <= f for f in self.facets)

    @property
    def is_void(self):
        return not self.facets

    @property
    def dimension(self):
        """
        largest face size minus one; None for the void complex
        """
        if self.is_void:
            return None
        return max(len(f) for f in self.facets) - 1

    def face_count_bound(self):
        return sum(2 ** len(f) for f in self.facets)

    def faces(self):
        """
        all faces in shortlex order

        :return: list of frozensets
        """
        if self._faces is None:
            if self.face_count_bound() > MAX_FACES:
                raise ScaleLimitError(f'complex may have up to {self.face_count_bound()} faces, '
                                      f'the limit is {MAX_FACES}')
            found = set()
            for f in self.facets:
                members = sorted(f)
                for size in range(len(members) + 1):
                    found.update(frozenset(c) for c in combinations(members, size))
            self._faces = shortlex(found)
        return self._faces

    def faces_of_dim(self, k):
        """
        the k-dimensional faces (k + 1 elements) as ascending tuples in lexicographic order

        :param k: dimension, -1 gives the empty face
        :return: list of tuples
        """
        if self._faces_by_dim is None:
            by_dim = {}
            for f in self.faces():
                by_dim.setdefault(len(f) - 1, []).append(tuple(sorted(f)))
            self._faces_by_dim = by_dim
        return self._faces_by_dim.get(k, [])


def complex_from_predicate(ground, is_face):
    """
    build the complex of all sets satisfying a downward closed predicate

    Faces are grown by adding larger elements only, so each face is visited once and non-faces are never extended.

    :param ground: ground set (int size or iterable)
    :param is_face: callable taking a frozenset, must be downward closed
    :return: SimplicialComplex
    """
    ground = _as_ground(ground)
    elements = sorted(ground)
    if not is_face(frozenset()):
        return SimplicialComplex(ground, ())
    found = set()
    stack = [(frozenset(), 0)]
    while stack:
        current, start = stack.pop()
        found.add(current)
        if len(found) > MAX_FACES:
            raise ScaleLimitError(f'complex has more than {MAX_FACES} faces')
        for i in range(start, len(elements)):
            candidate = current | {elements[i]}
            if is_face(candidate):
                stack.append((candidate, i + 1))
    facets = [f for f in found if not any(f | {x} in found for x in ground - f)]
    out = SimplicialComplex(ground, facets)
    out._faces = shortlex(found)
    return out


def independence_complex(hypergraph):
    """
    I(H): the complex of sets containing no edge of H

    :param hypergraph: Hypergraph
    :return: SimplicialComplex
    """
    return complex_from_predicate(hypergraph.ground, hypergraph.is_independent)


def matroid_complex(matroid):
    """
    the independent sets of a matroid as a simplicial complex (facets are the bases)
    """
    return SimplicialComplex(matroid.ground, [s for s in independent_sets(matroid) if len(s) == matroid.rank()])


def circuit_hypergraph(matroid):
    """
    Circ(M) as a hypergraph on the matroid's ground set, so that I(Circ(M)) is the matroid complex
    """
    return Hypergraph(matroid.ground, circuits(matroid))


def delete_edge(hypergraph, edge):
    """
    H - e: same ground, edge removed

    :param hypergraph: Hypergraph
    :param edge: an edge of the hypergraph
    :return: Hypergraph
    """
    edge = frozenset(edge)
    if edge not in hypergraph.edges:
        raise ValueError(f'{fmt_set(edge)} is not an edge of {hypergraph}')
    return Hypergraph(hypergraph.ground, [e for e in hypergraph.edges if e != edge])


def contract_hypergraph(hypergraph, subset):
    """
    H/S = (V - S, {e - S : e an edge not inside S})

    :param hypergraph: Hypergraph
    :param subset: S, a subset of the ground set
    :return: Hypergraph
    """
    subset = frozenset(subset)
    if not subset <= hypergraph.ground:
        raise ValueError(f'{fmt_set(subset - hypergraph.ground)} are not in the ground set')
    return Hypergraph(hypergraph.ground - subset, [e - subset for e in hypergraph.edges if not e <= subset])


def intersect_hypergraphs(first, second):
    """
    H1 & H2 = (V, E1 & E2)

    :param first: Hypergraph
    :param second: Hypergraph on the same ground
    :return: Hypergraph
    """
    if first.ground != second.ground:
        raise ValueError(f'hypergraphs have different grounds {fmt_set(first.ground)} and {fmt_set(second.ground)}')
    other = set(second.edges)
    return Hypergraph(first.ground, [e for e in first.edges if e in other])


def intersect_complexes(first, second):
    """
    faces common to two complexes on the same ground, computed facet-wise

    :param first: SimplicialComplex
    :param second: SimplicialComplex on the same ground
    :return: SimplicialComplex
    """
    if first.ground != second.ground:
        raise ValueError(f'complexes have different grounds {fmt_set(first.ground)} and {fmt_set(second.ground)}')
    return SimplicialComplex(first.ground, [f & g for f in first.facets for g in second.facets])


def restrict_complex(cplx, subset):
    """
    C|S: the faces of C inside S

    :param cplx: SimplicialComplex
    :param subset: S, a subset of the ground set
    :return: SimplicialComplex on S
    """
    subset = frozenset(subset)
    if not subset <= cplx.ground:
        raise ValueError(f'{fmt_set(subset - cplx.ground)} are not in the ground set')
    return SimplicialComplex(subset, [f & subset for f in cplx.facets])


def cone_apex(cplx):
    """
    the smallest vertex lying in every facet, if any (such a complex is a cone and contractible)

    :param cplx: nonvoid SimplicialComplex
    :return: int or None
    """
    assert not cplx.is_void, 'the void complex has no apex'
    common = frozenset.intersection(*cplx.facets)
    return min(common) if common else None


def full_simplex(n):
    """
    the complex of all subsets of 0..n-1
    """
    return SimplicialComplex(n, [range(n)])


def simplex_boundary_complex(m):
    """
    boundary of the (m-1)-simplex: all proper subsets of 0..m-1, the independence complex of a single edge
    covering all m vertices
    """
    return SimplicialComplex(m, combinations(range(m), m - 1))


def cycle_graph_hypergraph(n):
    """
    the edges {i, i+1 mod n} of the n-cycle graph as a hypergraph on 0..n-1
    """
    return Hypergraph(n, [{i, (i + 1) % n} for i in range(n)])

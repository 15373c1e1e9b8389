"""
created matt_dumont
on: 17/10/26

Finite matroids on small integer ground sets.

Every matroid is an immutable rank oracle over a frozenset ground set.  The realizations built from scratch
(uniform, partition, graphic, linear, circuit family, independent-set family) live on the dense ground
0..n-1; minors (contract, restrict, quotient_to) keep the labels of the elements they retain.  A matroid is
sometimes treated as the hypergraph of its independent sets, whose "edges" are then the independent sets; here they
are always called independent sets.
"""
from dataclasses import dataclass
from itertools import combinations
import networkx as nx
import numpy as np
from komanawa.rainbow_tools.linalg import is_prime, rank_mod_p

MAX_EXPLICIT_GROUND = 16


class MatroidAxiomError(ValueError):
    """
    raised when a set family is not the independent-set (or circuit) family of a matroid

    :param message: error message
    :param axiom: name of the violated axiom
    :param witness: tuple of sets (and elements) exhibiting the violation
    """

    def __init__(self, message, axiom=None, witness=None):
        super().__init__(message)
        self.axiom = axiom
        self.witness = witness


class ScaleLimitError(ValueError):
    """
    raised when an exhaustive computation would exceed the desk-scale limits
    """


def shortlex(sets):
    """
    sort sets by size and then lexicographically by their sorted elements

    :param sets: iterable of sets of ints
    :return: list of frozensets
    """
    return sorted((frozenset(s) for s in sets), key=lambda s: (len(s), tuple(sorted(s))))


def fmt_set(s):
    return '{' + ' '.join(str(x) for x in sorted(s)) + '}'


def spec_set(s):
    """
    brace-delimited set token list used by the instance file format, e.g. '{ 0 1 2 }'
    """
    return ' '.join(['{'] + [str(x) for x in sorted(s)] + ['}'])


def _as_ground(ground):
    if isinstance(ground, (int, np.integer)):
        assert ground >= 0, f'ground size must be non-negative, got {ground}'
        return frozenset(range(int(ground)))
    return frozenset(int(x) for x in ground)


def _check_explicit_ground(ground):
    if len(ground) > MAX_EXPLICIT_GROUND:
        raise ScaleLimitError(f'explicit matroids are limited to {MAX_EXPLICIT_GROUND} elements, '
                              f'got {len(ground)}')


class Matroid:
    """
    base class for a finite matroid given by a rank oracle.

    Subclasses override either _rank or _is_independent (the default of each is defined through the other).
    Rank values are memoized per instance; instances are never mutated after construction apart from this cache,
    so they can be shared between workers (each process keeps its own cache).

    :param ground: ground set (int size or iterable of ints)
    """
    kind = 'matroid'

    def __init__(self, ground):
        self.ground = _as_ground(ground)
        self._rank_cache = {}

    def __repr__(self):
        return f'{type(self).__name__}(ground={fmt_set(self.ground)})'

    def _check_subset(self, subset):
        subset = frozenset(subset)
        if not subset <= self.ground:
            raise ValueError(f'{fmt_set(subset - self.ground)} are not in the ground set {fmt_set(self.ground)}')
        return subset

    def rank(self, subset=None):
        """
        rank of a subset of the ground set (rank of the matroid if subset is None)

        :param subset: iterable of elements or None
        :return: int
        """
        subset = self.ground if subset is None else self._check_subset(subset)
        value = self._rank_cache.get(subset)
        if value is None:
            value = self._rank(subset)
            self._rank_cache[subset] = value
        return value

    def is_independent(self, subset):
        """
        independence oracle

        :param subset: iterable of elements
        :return: bool
        """
        return self._is_independent(self._check_subset(subset))

    def _rank(self, subset):
        # greedy is exact for matroids
        basis = frozenset()
        for x in sorted(subset):
            if self._is_independent(basis | {x}):
                basis = basis | {x}
        return len(basis)

    def _is_independent(self, subset):
        return self.rank(subset) == len(subset)


class UniformMatroid(Matroid):
    kind = 'uniform'

    def __init__(self, n, k):
        super().__init__(n)
        self.k = int(k)

    def _rank(self, subset):
        return min(len(subset), self.k)


class PartitionMatroid(Matroid):
    kind = 'partition'

    def __init__(self, ground, blocks):
        super().__init__(ground)
        self.blocks = tuple(frozenset(b) for b in blocks)
        self.block_of = {x: i for i, b in enumerate(self.blocks) for x in b}

    def _rank(self, subset):
        return len({self.block_of[x] for x in subset if x in self.block_of})


class GraphicMatroid(Matroid):
    kind = 'graphic'

    def __init__(self, vertices, edges):
        self.vertices = int(vertices)
        self.edges = {eid: (u, v) for u, v, eid in edges}
        super().__init__(self.edges.keys())

    def _rank(self, subset):
        graph = nx.MultiGraph()
        graph.add_edges_from(self.edges[e] for e in subset)
        return graph.number_of_nodes() - nx.number_connected_components(graph)


class LinearMatroid(Matroid):
    kind = 'linear'

    def __init__(self, prime, columns):
        self.prime = int(prime)
        self.columns = columns
        super().__init__(columns.shape[1])

    def _rank(self, subset):
        if not subset:
            return 0
        return rank_mod_p(self.columns[:, sorted(subset)], self.prime)


class CircuitMatroid(Matroid):
    kind = 'circuits'

    def __init__(self, ground, circuit_family):
        super().__init__(ground)
        self.circuit_family = tuple(shortlex(circuit_family))

    def _is_independent(self, subset):
        return not any(c <= subset for c in self.circuit_family)


class ExplicitMatroid(Matroid):
    kind = 'independent'

    def __init__(self, ground, family):
        super().__init__(ground)
        self.family = frozenset(frozenset(s) for s in family)

    def _is_independent(self, subset):
        return subset in self.family


class ContractedMatroid(Matroid):
    kind = 'contraction'

    def __init__(self, base, contracted):
        self.base = base
        self.contracted = frozenset(contracted)
        super().__init__(base.ground - self.contracted)
        self._offset = base.rank(self.contracted)

    def _rank(self, subset):
        return self.base.rank(subset | self.contracted) - self._offset


class RestrictedMatroid(Matroid):
    kind = 'restriction'

    def __init__(self, base, subset):
        self.base = base
        super().__init__(subset)

    def _rank(self, subset):
        return self.base.rank(subset)


class TruncatedMatroid(Matroid):
    kind = 'truncation'

    def __init__(self, base, k):
        self.base = base
        self.k = int(k)
        super().__init__(base.ground)

    def _rank(self, subset):
        return min(self.base.rank(subset), self.k)


class ProjectionMatroid(Matroid):
    """
    matroid on labelled copies of the elements of a base matroid.

    Element i of the ground set 0..len(labels)-1 is a copy of base element labels[i]; a set is independent iff
    its labels are pairwise distinct and independent in the base matroid, so the rank of a set is the base rank
    of its labels.

    :param base: Matroid
    :param labels: sequence of base elements, one per new element
    """
    kind = 'projection'

    def __init__(self, base, labels):
        self.base = base
        self.labels = tuple(int(x) for x in labels)
        assert set(self.labels) <= base.ground, 'projection labels must be base elements'
        super().__init__(len(self.labels))

    def _rank(self, subset):
        return self.base.rank({self.labels[x] for x in subset})


def uniform_matroid(n, k):
    """
    the uniform matroid U(k, n): all subsets of size at most k of the ground set 0..n-1

    :param n: ground set size
    :param k: rank
    :return: UniformMatroid
    """
    if not 0 <= k <= n:
        raise ValueError(f'uniform matroid needs 0 <= k <= n, got {k=}, {n=}')
    return UniformMatroid(n, k)


def free_matroid(n):
    """
    the free matroid on 0..n-1 (every subset independent)

    :param n: ground set size
    :return: UniformMatroid
    """
    return uniform_matroid(n, n)


def partition_matroid(blocks, ground=None):
    """
    partition matroid: a set is independent iff it meets every block at most once.

    Elements outside every block are loops (they lie in no partial rainbow set of the blocks).

    :param blocks: list of pairwise disjoint sets
    :param ground: ground set (int size or iterable), default is 0..max element of the blocks
    :return: PartitionMatroid
    """
    blocks = [frozenset(int(x) for x in b) for b in blocks]
    for (i, b1), (j, b2) in combinations(enumerate(blocks), 2):
        if b1 & b2:
            raise ValueError(f'partition blocks {i} {fmt_set(b1)} and {j} {fmt_set(b2)} overlap '
                             f'in {fmt_set(b1 & b2)}')
    union = frozenset().union(*blocks)
    if ground is None:
        ground = max(union) + 1 if union else 0
    ground = _as_ground(ground)
    if not union <= ground:
        raise ValueError(f'partition blocks use {fmt_set(union - ground)} outside the ground set')
    return PartitionMatroid(ground, blocks)


def graphic_matroid(vertices, edges):
    """
    cycle matroid of a multigraph: a set of edges is independent iff it is acyclic.

    Self loops are matroid loops and parallel edges form 2-circuits.

    :param vertices: number of vertices
    :param edges: list of (u, v, edge_id) triples, or (u, v) pairs in which case the edge id is the position
    :return: GraphicMatroid
    """
    triples = []
    for i, edge in enumerate(edges):
        if len(edge) == 2:
            u, v = edge
            eid = i
        else:
            u, v, eid = edge
        u, v, eid = int(u), int(v), int(eid)
        if not (0 <= u < vertices and 0 <= v < vertices):
            raise ValueError(f'edge {eid} ({u}, {v}) has an endpoint outside 0..{vertices - 1}')
        triples.append((u, v, eid))
    ids = [t[2] for t in triples]
    if len(set(ids)) != len(ids):
        raise ValueError(f'edge ids must be distinct, got {ids}')
    return GraphicMatroid(vertices, triples)


def linear_matroid(prime, columns):
    """
    vector matroid of a list of column vectors over GF(prime)

    :param prime: prime modulus
    :param columns: list of equal length vectors (element i is columns[i])
    :return: LinearMatroid
    """
    if not is_prime(prime):
        raise ValueError(f'linear matroids need a prime modulus, got {prime}')
    columns = [list(c) for c in columns]
    lengths = {len(c) for c in columns}
    if len(lengths) > 1:
        raise ValueError(f'all columns must have the same length, got lengths {sorted(lengths)}')
    nrows = lengths.pop() if lengths else 0
    matrix = np.zeros((nrows, len(columns)), dtype=np.int64)
    for i, c in enumerate(columns):
        matrix[:, i] = np.asarray(c, dtype=np.int64) % prime
    return LinearMatroid(prime, matrix)


def check_circuit_elimination(circuit_family):
    """
    check the circuit elimination axiom on a family of sets.

    For circuits C1 != C2, x in C1 & C2 and y in C1 - C2 there must be a circuit C3 inside (C1 | C2) - {x} that
    contains y.

    :param circuit_family: iterable of sets
    :return: None if the axiom holds, else the witness (C1, C2, x, y)
    """
    family = shortlex(circuit_family)
    for c1 in family:
        for c2 in family:
            if c1 == c2:
                continue
            for x in sorted(c1 & c2):
                union = (c1 | c2) - {x}
                for y in sorted(c1 - c2):
                    if not any(c3 <= union and y in c3 for c3 in family):
                        return c1, c2, x, y
    return None


def from_circuits(ground, circuit_family):
    """
    matroid with the given circuits (a set is independent iff it contains no circuit)

    The family is validated eagerly: it must be a nonempty-set antichain satisfying circuit elimination.

    :param ground: ground set (int size or iterable)
    :param circuit_family: list of sets
    :return: CircuitMatroid
    :raises MatroidAxiomError: with the witness of the first violation
    """
    ground = _as_ground(ground)
    family = shortlex(set(frozenset(int(x) for x in c) for c in circuit_family))
    for c in family:
        if not c:
            raise MatroidAxiomError('the empty set cannot be a circuit', axiom='empty', witness=(c,))
        if not c <= ground:
            raise ValueError(f'circuit {fmt_set(c)} is not inside the ground set {fmt_set(ground)}')
    for c1, c2 in combinations(family, 2):
        if c1 < c2:
            raise MatroidAxiomError(f'circuits {fmt_set(c1)} and {fmt_set(c2)} are nested',
                                    axiom='antichain', witness=(c1, c2))
    witness = check_circuit_elimination(family)
    if witness is not None:
        c1, c2, x, y = witness
        raise MatroidAxiomError(f'circuit elimination fails for C1={fmt_set(c1)}, C2={fmt_set(c2)}, x={x}: no '
                                f'circuit inside C1 | C2 - {{{x}}} contains {y}',
                                axiom='elimination', witness=(c1, c2, x))
    return CircuitMatroid(ground, family)


@dataclass(frozen=True)
class AxiomCheck:
    """
    result of check_matroid_axioms: ok, or the violated axiom with its witness
    """
    ok: bool
    axiom: str = None
    witness: tuple = None


def check_matroid_axioms(ground, family):
    """
    check the independence axioms (empty set, downward closure, exchange) on an explicit family of sets

    :param ground: ground set (int size or iterable)
    :param family: iterable of sets
    :return: AxiomCheck, witnesses are (T, T - {x}) for downward closure and (S, T) with |S| < |T| for exchange
    """
    ground = _as_ground(ground)
    _check_explicit_ground(ground)
    members = set(frozenset(s) for s in family)
    for s in shortlex(members):
        if not s <= ground:
            return AxiomCheck(False, 'ground', (s,))
    if frozenset() not in members:
        return AxiomCheck(False, 'empty', (frozenset(),))
    ordered = shortlex(members)
    for t in ordered:
        for x in sorted(t, reverse=True):
            if t - {x} not in members:
                return AxiomCheck(False, 'downward', (t, t - {x}))
    # with downward closure in place it suffices to exchange between sizes k and k + 1
    for s in ordered:
        for t in ordered:
            if len(t) != len(s) + 1:
                continue
            if not any(s | {x} in members for x in t - s):
                return AxiomCheck(False, 'exchange', (s, t))
    return AxiomCheck(True)


def explicit_matroid(ground, family):
    """
    matroid given by its full family of independent sets (ground of at most 16 elements)

    :param ground: ground set (int size or iterable)
    :param family: iterable of sets
    :return: ExplicitMatroid
    :raises MatroidAxiomError: if the family fails check_matroid_axioms
    """
    ground = _as_ground(ground)
    result = check_matroid_axioms(ground, family)
    if not result.ok:
        raise MatroidAxiomError(f'family violates the {result.axiom} axiom: '
                                f'{", ".join(fmt_set(w) for w in result.witness)}',
                                axiom=result.axiom, witness=result.witness)
    return ExplicitMatroid(ground, family)


def rank(matroid, subset=None):
    """
    rank of a subset (the size of its largest independent subset)

    :param matroid: Matroid
    :param subset: iterable of elements, None for the whole ground set
    :return: int
    """
    return matroid.rank(subset)


def matroid_rank(matroid):
    """
    rank of the matroid (rank of its ground set)
    """
    return matroid.rank()


def is_independent(matroid, subset):
    return matroid.is_independent(subset)


def independent_sets(matroid, within=None):
    """
    all independent sets, in shortlex order

    Enumerated by extending independent sets with larger elements only, so each set is produced once and
    dependent sets are never extended.

    :param matroid: Matroid
    :param within: optional subset of the ground set to enumerate inside
    :return: list of frozensets
    """
    elements = sorted(matroid.ground if within is None else matroid._check_subset(within))
    _check_explicit_ground(elements)
    found = []
    stack = [(frozenset(), 0)]
    while stack:
        current, start = stack.pop()
        found.append(current)
        for i in range(start, len(elements)):
            candidate = current | {elements[i]}
            if matroid.is_independent(candidate):
                stack.append((candidate, i + 1))
    return shortlex(found)


def bases(matroid):
    """
    all bases (maximal independent sets), shortlex order
    """
    r = matroid.rank()
    return [s for s in independent_sets(matroid) if len(s) == r]


def circuits(matroid):
    """
    all circuits (minimal dependent sets), in shortlex order

    Every circuit C is I + {x} for an independent I = C - {x}, so candidates come from independent sets.

    :param matroid: Matroid
    :return: list of frozensets
    """
    found = set()
    for indep in independent_sets(matroid):
        for x in matroid.ground - indep:
            candidate = indep | {x}
            if candidate in found or matroid.is_independent(candidate):
                continue
            if all(matroid.is_independent(candidate - {y}) for y in indep):
                found.add(candidate)
    return shortlex(found)


def loops(matroid):
    return frozenset(x for x in matroid.ground if matroid.rank({x}) == 0)


def coloops(matroid):
    """
    elements in no circuit (equivalently, removing them drops the rank)
    """
    r = matroid.rank()
    return frozenset(x for x in matroid.ground if matroid.rank(matroid.ground - {x}) < r)


def closure(matroid, subset):
    """
    closure (span) of a set: the smallest flat containing it

    :param matroid: Matroid
    :param subset: iterable of elements
    :return: frozenset
    """
    subset = matroid._check_subset(subset)
    r = matroid.rank(subset)
    return subset | frozenset(x for x in matroid.ground - subset if matroid.rank(subset | {x}) == r)


def flats(matroid):
    """
    all flats in shortlex order.

    Built upward from closure of the empty set: closure(F + x) for a flat F and x outside F is again a flat
    and every flat is reached this way.

    :param matroid: Matroid
    :return: list of frozensets
    """
    _check_explicit_ground(matroid.ground)
    start = closure(matroid, frozenset())
    found = {start}
    frontier = [start]
    while frontier:
        flat = frontier.pop()
        for x in sorted(matroid.ground - flat):
            new = closure(matroid, flat | {x})
            if new not in found:
                found.add(new)
                frontier.append(new)
    return shortlex(found)


def closure_and_flats(matroid):
    """
    all flats of the matroid together with their ranks

    :param matroid: Matroid
    :return: list of (flat, rank) tuples in shortlex order of the flats
    """
    return [(f, matroid.rank(f)) for f in flats(matroid)]


def contract(matroid, subset):
    """
    contraction M/S: matroid on ground - S with rank(T) = rank_M(T | S) - rank_M(S)

    :param matroid: Matroid
    :param subset: set to contract
    :return: ContractedMatroid
    """
    return ContractedMatroid(matroid, matroid._check_subset(subset))


def restrict(matroid, subset):
    """
    restriction M|S: matroid on S with the same independent sets inside S
    """
    return RestrictedMatroid(matroid, matroid._check_subset(subset))


def delete(matroid, subset):
    """
    deletion M - S, the restriction to the complement of S
    """
    return restrict(matroid, matroid.ground - matroid._check_subset(subset))


def truncate(matroid, k):
    """
    truncation: the independent sets of the matroid of size at most k

    :param matroid: Matroid
    :param k: new rank bound
    :return: TruncatedMatroid
    """
    assert k >= 0, f'truncation rank must be non-negative, got {k}'
    return TruncatedMatroid(matroid, k)


def quotient_to(matroid, subset):
    """
    M.S: the sets e inside S such that e | f is independent for every independent f disjoint from S.

    This is the contraction of the complement of S, living on S.

    :param matroid: Matroid
    :param subset: S
    :return: ContractedMatroid on S
    """
    subset = matroid._check_subset(subset)
    return contract(matroid, matroid.ground - subset)


def same_matroid(first, second):
    """
    check that two matroids have the same ground set and the same independent sets (exhaustive)
    """
    if first.ground != second.ground:
        return False
    return independent_sets(first) == independent_sets(second)


def matroid_to_spec(matroid):
    """
    the instance-file description of a matroid on a dense ground 0..n-1

    Realizations keep their own form; derived matroids are written as their circuit family.

    :param matroid: Matroid
    :return: str such as 'uniform 2' or 'circuits { 0 1 2 }'
    """
    n = len(matroid.ground)
    if matroid.ground != frozenset(range(n)):
        raise ValueError(f'only matroids on a dense ground 0..n-1 can be written, got {fmt_set(matroid.ground)}')
    if isinstance(matroid, UniformMatroid):
        return f'uniform {matroid.k}'
    if isinstance(matroid, PartitionMatroid) and matroid.blocks and all(matroid.blocks):
        return 'partition ' + '|'.join(','.join(str(x) for x in sorted(b)) for b in matroid.blocks)
    if isinstance(matroid, GraphicMatroid) and sorted(matroid.edges) == list(range(n)):
        edges = ','.join(f'{u}-{v}' for _, (u, v) in sorted(matroid.edges.items()))
        return f'graphic {matroid.vertices} {edges}'.rstrip()
    if isinstance(matroid, LinearMatroid) and matroid.columns.shape[0] > 0:
        cols = ';'.join(','.join(str(int(v)) for v in matroid.columns[:, i]) for i in range(n))
        return f'linear {matroid.prime} {cols}'.rstrip()
    if isinstance(matroid, ExplicitMatroid):
        return 'independent ' + ' '.join(spec_set(s) for s in shortlex(matroid.family))
    return ('circuits ' + ' '.join(spec_set(c) for c in circuits(matroid))).rstrip()

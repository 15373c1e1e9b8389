"""
created matt_dumont
on: 17/10/26

Reductions from bipartite rainbow matchings, row-Latin (Drisko) matrices and Chappell matrices to rainbow instances
of two matroids, plus the tightness families.
"""
from dataclasses import dataclass
import numpy as np
from komanawa.rainbow_tools.matroids import ProjectionMatroid, fmt_set, partition_matroid
from komanawa.rainbow_tools.rainbow import make_instance


@dataclass(frozen=True)
class BipartiteGraph:
    """
    bipartite graph with partite sets 0..side_a-1 and 0..side_b-1; the id of an edge is its position in edges and
    parallel edges are allowed
    """
    side_a: int
    side_b: int
    edges: tuple

    def __post_init__(self):
        edges = tuple((int(a), int(b)) for a, b in self.edges)
        for eid, (a, b) in enumerate(edges):
            if not (0 <= a < self.side_a and 0 <= b < self.side_b):
                raise ValueError(f'edge {eid} ({a}, {b}) is outside the {self.side_a} x {self.side_b} vertex sets')
        object.__setattr__(self, 'edges', edges)

    @property
    def edge_count(self):
        return len(self.edges)


@dataclass(frozen=True)
class Diagonal:
    """
    cells (row, column) of a matrix, 1-based, at most one per row and per column, sorted by column; entries are the
    matrix values at the cells
    """
    cells: tuple = ()
    entries: tuple = ()

    def __len__(self):
        return len(self.cells)


def bipartite_to_matroid_pair(graph):
    """
    the two partition matroids on the edges of a bipartite graph: edges with distinct A endpoints, and edges with
    distinct B endpoints.  A set of edges is a matching iff it is independent in both.

    :param graph: BipartiteGraph
    :return: (Matroid, Matroid)
    """
    ground = graph.edge_count
    a_blocks = [[eid for eid, (a, _) in enumerate(graph.edges) if a == v] for v in range(graph.side_a)]
    b_blocks = [[eid for eid, (_, b) in enumerate(graph.edges) if b == v] for v in range(graph.side_b)]
    return partition_matroid(a_blocks, ground=ground), partition_matroid(b_blocks, ground=ground)


def is_matching(graph, edge_ids):
    """
    check that the given edges exist and are pairwise vertex disjoint

    :param graph: BipartiteGraph
    :param edge_ids: iterable of edge ids
    :return: bool
    """
    edge_ids = list(edge_ids)
    if any(not 0 <= e < graph.edge_count for e in edge_ids) or len(set(edge_ids)) != len(edge_ids):
        return False
    a_side = [graph.edges[e][0] for e in edge_ids]
    b_side = [graph.edges[e][1] for e in edge_ids]
    return len(set(a_side)) == len(a_side) and len(set(b_side)) == len(b_side)


def matchings_to_instance(graph, matchings, n):
    """
    rainbow instance with A_i = M_i over the edge set of the graph and the matroid pair of bipartite_to_matroid_pair;
    rainbow selections of size n are exactly the partial rainbow matchings of size n

    :param graph: BipartiteGraph
    :param matchings: list of edge id sets
    :param n: target size
    :return: RainbowInstance
    """
    matchings = [frozenset(int(e) for e in m) for m in matchings]
    for i, m in enumerate(matchings, start=1):
        if not is_matching(graph, m):
            raise ValueError(f'M_{i} {fmt_set(m)} is not a matching of the graph')
    matroid_a, matroid_b = bipartite_to_matroid_pair(graph)
    return make_instance(matroid_a, matroid_b, matchings, n)


def complete_bipartite_graph(n):
    """
    K_{n,n} with edge (i, j) at id i * n + j
    """
    return BipartiteGraph(n, n, tuple((i, j) for i in range(n) for j in range(n)))


def check_drisko_matrix(matrix):
    """
    validate a row-Latin input: an n x m matrix of ints whose every column is a permutation of 1..n

    :param matrix: 2d array-like
    :return: np.ndarray of int64
    """
    matrix = np.atleast_2d(np.asarray(matrix, dtype=np.int64))
    n, m = matrix.shape
    if n == 0 or m == 0:
        raise ValueError(f'matrix dimensions must be positive, got {matrix.shape}')
    expected = np.arange(1, n + 1)
    for c in range(m):
        if not np.array_equal(np.sort(matrix[:, c]), expected):
            raise ValueError(f'column {c + 1} {matrix[:, c].tolist()} is not a permutation of 1..{n}')
    return matrix


def drisko_matrix_to_matchings(matrix):
    """
    column c of an n x m matrix becomes the perfect matching {(i, X_ic)} of K_{n,n}; a rainbow matching of size n
    is a diagonal whose entries are 1..n

    :param matrix: n x m matrix, columns are permutations of 1..n
    :return: list of frozensets of edge ids of complete_bipartite_graph(n)
    """
    matrix = check_drisko_matrix(matrix)
    n, m = matrix.shape
    return [frozenset(i * n + int(matrix[i, c]) - 1 for i in range(n)) for c in range(m)]


def drisko_instance(matrix):
    """
    rainbow instance of a row-Latin matrix with target n (the number of rows)

    :param matrix: n x m matrix, columns are permutations of 1..n
    :return: RainbowInstance
    """
    matrix = check_drisko_matrix(matrix)
    n = matrix.shape[0]
    return matchings_to_instance(complete_bipartite_graph(n), drisko_matrix_to_matchings(matrix), n)


def chappell_matrix_to_instance(matrix, matroid, n=None):
    """
    instance on V x [n] for a matrix of matroid elements.

    The pair (v, j) has id v * n + j.  A_i is {(X_ji, j) : j in 0..n-1}; M' takes pairs with distinct v whose
    projection is independent in the matroid, N takes pairs with distinct j.  A rainbow set of size n gives an
    independent diagonal of X.  Columns whose pairs are not independent in M' are reported through
    InstanceValidationError.

    :param matrix: n x m matrix of elements of the matroid's ground set (0..k-1)
    :param matroid: Matroid with dense ground 0..k-1
    :param n: target, default the number of rows
    :return: RainbowInstance
    """
    matrix = np.atleast_2d(np.asarray(matrix, dtype=np.int64))
    rows, cols = matrix.shape
    if rows == 0 or cols == 0:
        raise ValueError(f'matrix dimensions must be positive, got {matrix.shape}')
    if n is None:
        n = rows
    if n != rows:
        raise ValueError(f'matrix has {rows} rows but the target is {n}')
    size = len(matroid.ground)
    if matroid.ground != frozenset(range(size)):
        raise ValueError('chappell instances need a matroid on a dense ground set 0..k-1')
    bad = [(j + 1, i + 1) for j in range(rows) for i in range(cols) if int(matrix[j, i]) not in matroid.ground]
    if bad:
        raise ValueError(f'matrix entries at (row, column) {bad} are not in the ground set {fmt_set(matroid.ground)}')
    lifted = ProjectionMatroid(matroid, [pid // n for pid in range(size * n)])
    by_row = partition_matroid([[v * n + j for v in range(size)] for j in range(n)], ground=size * n)
    sets = [{int(matrix[j, i]) * n + j for j in range(n)} for i in range(cols)]
    return make_instance(lifted, by_row, sets, n)


def selection_to_diagonal(sel, matrix, kind='drisko'):
    """
    the diagonal of a matrix-derived instance picked out by a rainbow selection

    For drisko instances an element is the edge (row, value - 1) of K_{n,n}; for chappell instances it is the pair
    (value, row).  The column of a cell is the layer of its pick.

    :param sel: RainbowSelection
    :param matrix: the matrix the instance was built from
    :param kind: 'drisko' or 'chappell'
    :return: Diagonal
    """
    matrix = np.atleast_2d(np.asarray(matrix, dtype=np.int64))
    n = matrix.shape[0]
    cells, entries = [], []
    for p in sel.chosen:
        if kind == 'drisko':
            row, value = divmod(p.element, n)
            value += 1
        elif kind == 'chappell':
            value, row = divmod(p.element, n)
        else:
            raise ValueError(f'unknown matrix kind {kind!r}, expected drisko or chappell')
        col = p.layer
        if not 1 <= col <= matrix.shape[1] or int(matrix[row, col - 1]) != value:
            raise ValueError(f'pick {p} does not correspond to a cell of the matrix')
        cells.append((row + 1, col))
        entries.append(value)
    if len({r for r, _ in cells}) != len(cells) or len({c for _, c in cells}) != len(cells):
        raise ValueError(f'selection uses a row or column twice: {cells}')
    order = np.argsort([c for _, c in cells], kind='stable')
    return Diagonal(tuple(cells[i] for i in order), tuple(entries[i] for i in order))


def gen_cycle_tightness(n, extra=0):
    """
    C_{2n} as a bipartite graph with n - 1 copies of each of its two perfect matchings (no rainbow matching of size
    n exists).

    Edge 2j is (j, j) and edge 2j + 1 is (j + 1 mod n, j).  The copies of the even matching come first.

    :param n: n >= 2
    :param extra: number of further copies of the even matching appended at the end
    :return: (BipartiteGraph, list of frozensets)
    """
    if n < 2:
        raise ValueError(f'the cycle family needs n >= 2, got {n}')
    assert extra >= 0, f'extra must be non-negative, got {extra}'
    edges = []
    for j in range(n):
        edges.append((j, j))
        edges.append(((j + 1) % n, j))
    even = frozenset(range(0, 2 * n, 2))
    odd = frozenset(range(1, 2 * n, 2))
    matchings = [even] * (n - 1) + [odd] * (n - 1) + [even] * extra
    return BipartiteGraph(n, n, tuple(edges)), matchings


def gen_complete_bipartite_example(n):
    """
    K_{n,n} with the n matchings M_i = {(j, j + i mod n)}, i = 1..n; for even n there is no rainbow matching of
    size n

    :param n: even n >= 2
    :return: (BipartiteGraph, list of frozensets)
    """
    if n < 2 or n % 2:
        raise ValueError(f'the complete bipartite family needs an even n >= 2, got {n}')
    matchings = [frozenset(j * n + (j + i) % n for j in range(n)) for i in range(1, n + 1)]
    return complete_bipartite_graph(n), matchings

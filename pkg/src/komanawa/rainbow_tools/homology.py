"""
created matt_dumont
on: 17/10/26

Reduced simplicial homology over the rationals, the homological connectivity eta, and the deletion/contraction
bound eta(I(H)) >= min(eta(I(H - e)), eta(I(H/e)) + |e| - 1) for an edge e containing no other edge.

The bound is due to Meshulam; it is usually stated for graphs and the same proof holds for hypergraphs.
"""
from dataclasses import dataclass, field
from itertools import combinations
import numpy as np
from scipy import sparse
from komanawa.rainbow_tools.complexes import (Hypergraph, independence_complex, delete_edge,
                                              contract_hypergraph, cone_apex, MAX_FACES)
from komanawa.rainbow_tools.linalg import integer_rank, dense_rational_rank
from komanawa.rainbow_tools.matroids import ScaleLimitError, fmt_set, shortlex

ETA_INF = np.inf


def fmt_eta(value):
    """
    eta as printed by the cli: an integer or 'inf'
    """
    return 'inf' if value == ETA_INF else str(int(value))


def boundary_matrix(cplx, k):
    """
    boundary map from k-faces to (k-1)-faces as a sparse integer matrix.

    Faces are ascending tuples ordered lexicographically; the face obtained by dropping position j gets sign
    (-1)**j.  For k = 0 the target is the single empty face (augmentation), every vertex maps to it with +1.

    :param cplx: SimplicialComplex
    :param k: dimension of the source faces (>= 0)
    :return: scipy.sparse.csr_matrix of shape (#(k-1)-faces, #k-faces), dtype int8
    """
    assert k >= 0, f'boundary maps start at k=0, got {k}'
    sources = cplx.faces_of_dim(k)
    targets = cplx.faces_of_dim(k - 1)
    index = {f: i for i, f in enumerate(targets)}
    rows, cols, vals = [], [], []
    for j, face in enumerate(sources):
        for pos in range(len(face)):
            rows.append(index[face[:pos] + face[pos + 1:]])
            cols.append(j)
            vals.append(-1 if pos % 2 else 1)
    return sparse.coo_matrix((np.array(vals, dtype=np.int8), (rows, cols)),
                             shape=(len(targets), len(sources))).tocsr()


def _boundary_rank(cplx, k):
    if k < 0:
        return 0
    if k not in cplx._boundary_ranks:
        if not cplx.faces_of_dim(k) or not cplx.faces_of_dim(k - 1):
            cplx._boundary_ranks[k] = 0
        else:
            cplx._boundary_ranks[k] = integer_rank(boundary_matrix(cplx, k))
    return cplx._boundary_ranks[k]


def betti(cplx, k):
    """
    dimension of the reduced homology group H_k over the rationals

    dim C_k - rank d_k - rank d_{k+1}, with the empty face as the single (-1)-face of a nonvoid complex.

    :param cplx: SimplicialComplex
    :param k: dimension (>= -1)
    :return: int
    """
    assert k >= -1, f'reduced homology starts at k=-1, got {k}'
    if cplx.is_void:
        return 0
    n_k = len(cplx.faces_of_dim(k))
    if n_k == 0:
        return 0
    return n_k - _boundary_rank(cplx, k) - _boundary_rank(cplx, k + 1)


def betti_vector(cplx):
    """
    reduced betti numbers for k = -1 .. dim(C) (empty list for the void complex)
    """
    if cplx.is_void:
        return []
    return [betti(cplx, k) for k in range(-1, cplx.dimension + 1)]


def reduced_euler_characteristic(cplx):
    """
    sum over k >= -1 of (-1)**k times the number of k-faces (the empty face counts as -1)
    """
    if cplx.is_void:
        return 0
    return sum((1 if k % 2 == 0 else -1) * len(cplx.faces_of_dim(k)) for k in range(-1, cplx.dimension + 1))


def eta(cplx, use_cone=True):
    """
    homological connectivity: the smallest k >= 0 with reduced H_{k-1} nonzero.

    The void complex has eta 0 by convention, {empty set} has eta 0 because H_{-1} is one dimensional, and a
    complex whose reduced homology vanishes up to its dimension has eta infinity (ETA_INF).  A cone apex short
    circuits to infinity.

    :param cplx: SimplicialComplex
    :param use_cone: use the cone fast path
    :return: int or ETA_INF
    """
    if cplx.is_void:
        return 0
    if use_cone and cone_apex(cplx) is not None:
        return ETA_INF
    for k in range(-1, cplx.dimension + 1):
        if betti(cplx, k) != 0:
            return k + 1
    return ETA_INF


def _all_faces_brute(cplx):
    if cplx.is_void:
        return []
    if 2 ** len(cplx.ground) > MAX_FACES:
        raise ScaleLimitError(f'brute force homology enumerates 2**{len(cplx.ground)} subsets')
    members = sorted(cplx.ground)
    out = []
    for size in range(len(members) + 1):
        for c in combinations(members, size):
            if any(set(c) <= f for f in cplx.facets):
                out.append(c)
    return out


def brute_force_betti(cplx, k):
    """
    reduced betti number from dense boundary matrices over Fractions; slow reference implementation.

    Faces come from scanning every subset of the ground set, the matrices are dense lists and the rank is
    Gauss-Jordan over Fractions.

    :param cplx: SimplicialComplex
    :param k: dimension (>= -1)
    :return: int
    """
    faces = _all_faces_brute(cplx)

    def chain(d):
        return [f for f in faces if len(f) == d + 1]

    def dense_rank(d):
        if d < 0:
            return 0
        src, tgt = chain(d), chain(d - 1)
        if not src or not tgt:
            return 0
        matrix = [[0] * len(src) for _ in tgt]
        for j, face in enumerate(src):
            for pos in range(len(face)):
                matrix[tgt.index(face[:pos] + face[pos + 1:])][j] = (-1) ** pos
        return dense_rational_rank(matrix)

    n_k = len(chain(k))
    if n_k == 0:
        return 0
    return n_k - dense_rank(k) - dense_rank(k + 1)


def brute_force_eta(cplx):
    """
    eta from brute_force_betti, without the cone fast path
    """
    if cplx.is_void:
        return 0
    for k in range(-1, len(cplx.ground)):
        if brute_force_betti(cplx, k) != 0:
            return k + 1
    return ETA_INF


@dataclass(frozen=True)
class EtaRecursionResult:
    """
    the three exact eta values around an edge e and whether the deletion/contraction bound holds
    """
    edge: frozenset
    eta_whole: float
    eta_deleted: float
    eta_contracted: float
    bound: float
    holds: bool


def _is_minimal_edge(hypergraph, edge):
    return not any(other < edge for other in hypergraph.edges)


def eta_recursion_check(hypergraph, edge):
    """
    verify eta(I(H)) >= min(eta(I(H - e)), eta(I(H/e)) + |e| - 1) with exact homology

    :param hypergraph: Hypergraph
    :param edge: an edge of H containing no other edge of H
    :return: EtaRecursionResult
    """
    edge = frozenset(edge)
    if edge not in hypergraph.edges:
        raise ValueError(f'{fmt_set(edge)} is not an edge of {hypergraph}')
    if not _is_minimal_edge(hypergraph, edge):
        inner = [fmt_set(o) for o in hypergraph.edges if o < edge]
        raise ValueError(f'edge {fmt_set(edge)} contains the edges {", ".join(inner)}')
    whole = eta(independence_complex(hypergraph))
    deleted = eta(independence_complex(delete_edge(hypergraph, edge)))
    contracted = eta(independence_complex(contract_hypergraph(hypergraph, edge)))
    bound = min(deleted, contracted + len(edge) - 1)
    return EtaRecursionResult(edge=edge, eta_whole=whole, eta_deleted=deleted, eta_contracted=contracted,
                              bound=bound, holds=whole >= bound)


@dataclass
class CertificateNode:
    """
    one node of a deletion/contraction proof that eta(I(hypergraph)) >= target.

    kind is one of
      * 'trivial'  target <= 0
      * 'cone'     apex is in no edge (and the empty set is not an edge), I(H) is a cone
      * 'nonempty' target <= 1 and some vertex is not a singleton edge
      * 'split'    edge e containing no other edge; delete proves H - e, contract proves H/e with credit |e| - 1
    """
    hypergraph: Hypergraph
    target: int
    kind: str
    edge: frozenset = None
    apex: int = None
    delete: 'CertificateNode' = None
    contract: 'CertificateNode' = None

    @property
    def credit(self):
        return len(self.edge) - 1 if self.edge is not None else 0


class _BudgetExhausted(Exception):
    pass


@dataclass
class _SearchState:
    budget: int
    nodes: int = 0
    memo: dict = field(default_factory=dict)


def _hypergraph_apex(hypergraph):
    if frozenset() in hypergraph.edges:
        return None
    covered = frozenset().union(*hypergraph.edges)
    free = hypergraph.ground - covered
    return min(free) if free else None


def _candidate_edges(hypergraph):
    minimal = shortlex(hypergraph.minimal_edges())
    covered = frozenset().union(*minimal)
    if not covered:
        return minimal
    pivot = min(covered)
    return [e for e in minimal if pivot in e] + [e for e in minimal if pivot not in e]


def _prove(hypergraph, target, state):
    if target <= 0:
        return CertificateNode(hypergraph, target, 'trivial')
    key = (hypergraph, target)
    if key in state.memo:
        return state.memo[key]
    state.nodes += 1
    if state.nodes > state.budget:
        raise _BudgetExhausted()
    result = None
    if frozenset() not in hypergraph.edges:
        apex = _hypergraph_apex(hypergraph)
        if apex is not None:
            result = CertificateNode(hypergraph, target, 'cone', apex=apex)
        elif target == 1 and any(frozenset({v}) not in hypergraph.edges for v in hypergraph.ground):
            result = CertificateNode(hypergraph, target, 'nonempty')
        else:
            for e in _candidate_edges(hypergraph):
                deleted = _prove(delete_edge(hypergraph, e), target, state)
                if deleted is None:
                    continue
                contracted = _prove(contract_hypergraph(hypergraph, e), target - len(e) + 1, state)
                if contracted is None:
                    continue
                result = CertificateNode(hypergraph, target, 'split', edge=e, delete=deleted, contract=contracted)
                break
    state.memo[key] = result
    return result


def eta_lower_bound_certificate(hypergraph, target, budget=10000):
    """
    search for a deletion/contraction tree proving eta(I(H)) >= target without computing homology

    Depth first over edges containing no other edge, edges through a fixed pivot (the smallest covered vertex)
    first; leaves are cones, the nonempty-complex case for target 1, and targets <= 0.

    :param hypergraph: Hypergraph
    :param target: lower bound to prove
    :param budget: maximum number of expanded search nodes
    :return: CertificateNode, or None when no proof was found within the budget
    """
    state = _SearchState(budget=int(budget))
    try:
        return _prove(hypergraph, int(target), state)
    except _BudgetExhausted:
        return None


def replay_certificate(cert, hypergraph=None):
    """
    check every node of a certificate against the deletion/contraction bound

    :param cert: CertificateNode
    :param hypergraph: if given, the certificate root must be about this hypergraph
    :return: bool
    """
    if hypergraph is not None and cert.hypergraph != hypergraph:
        return False
    h = cert.hypergraph
    if cert.kind == 'trivial':
        return cert.target <= 0
    if frozenset() in h.edges:
        return False
    if cert.kind == 'cone':
        return cert.apex in h.ground and not any(cert.apex in e for e in h.edges)
    if cert.kind == 'nonempty':
        return cert.target <= 1 and any(frozenset({v}) not in h.edges for v in h.ground)
    if cert.kind != 'split':
        return False
    e = cert.edge
    if e not in h.edges or not _is_minimal_edge(h, e):
        return False
    if cert.delete is None or cert.contract is None:
        return False
    if cert.delete.hypergraph != delete_edge(h, e) or cert.contract.hypergraph != contract_hypergraph(h, e):
        return False
    if cert.delete.target < cert.target or cert.contract.target + len(e) - 1 < cert.target:
        return False
    return replay_certificate(cert.delete) and replay_certificate(cert.contract)


def certificate_size(cert):
    """
    number of nodes in a certificate tree
    """
    if cert is None:
        return 0
    return 1 + certificate_size(cert.delete) + certificate_size(cert.contract)


def certificate_depth(cert):
    if cert is None:
        return 0
    return 1 + max(certificate_depth(cert.delete), certificate_depth(cert.contract))

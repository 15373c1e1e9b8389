"""
created matt_dumont
on: 17/10/26

Rainbow sets in the intersection of two matroids.

Given matroids M and N on V and sets A_1..A_m independent in both, a partial rainbow set picks elements
x_1 in A_{i_1}, ..., x_k in A_{i_k} with i_1 < ... < i_k.  With m = 2n - 1 and |A_i| >= min(i, n) a partial rainbow
set of size n independent in both matroids always exists.  This module holds the exact finder, the layered ground
V' = {(x, i) : x in A_i} with the lifted matroids and the complex C used by the topological argument, the
complex-to-matroid matchability check and the partition-matroid lemma check.
"""
from dataclasses import dataclass
import warnings
from itertools import combinations, product
from typing import NamedTuple
import pandas as pd
from komanawa.rainbow_tools.complexes import (Hypergraph, complex_from_predicate,
                                              independence_complex, intersect_complexes, matroid_complex,
                                              restrict_complex)
from komanawa.rainbow_tools.homology import eta
from komanawa.rainbow_tools.matroids import (ProjectionMatroid, ScaleLimitError, circuits, closure, flats, fmt_set,
                                             partition_matroid, quotient_to, restrict, truncate)

MAX_RAINBOW_CANDIDATES = 40


class InstanceValidationError(ValueError):
    """
    raised when some A_i is not independent in both matroids

    :param message: error message
    :param bad_sets: list of (1-based index, matroid name) pairs
    """

    def __init__(self, message, bad_sets=()):
        super().__init__(message)
        self.bad_sets = list(bad_sets)


class LayeredElement(NamedTuple):
    """
    the pair (x, i) of the layered ground set: element x taken from A_i (layers are 1-based)
    """
    element: int
    layer: int

    def __str__(self):
        return f'({self.element} {self.layer})'


class LayeredGround(tuple):
    """
    V' as a tuple of LayeredElement; the position of a pair is its element id in the lifted ground set
    """

    def __new__(cls, pairs=()):
        pairs = tuple(LayeredElement(int(x), int(i)) for x, i in pairs)
        if len(set(pairs)) != len(pairs):
            raise ValueError('layered ground has repeated pairs')
        return super().__new__(cls, pairs)

    @property
    def layers(self):
        return sorted({p.layer for p in self})

    def by_layer(self, layer):
        """
        positions of the pairs in the given layer
        """
        return frozenset(i for i, p in enumerate(self) if p.layer == layer)


@dataclass(frozen=True)
class RainbowInstance:
    """
    two matroids on the same ground set, sets A_1..A_m and the target size n
    """
    matroid_m: object
    matroid_n: object
    sets: tuple
    target: int

    @property
    def ground(self):
        return self.matroid_m.ground

    @property
    def candidate_count(self):
        return sum(len(a) for a in self.sets)


@dataclass(frozen=True)
class RainbowSelection:
    """
    chosen layered elements, sorted by layer
    """
    chosen: tuple = ()

    @property
    def elements(self):
        return frozenset(p.element for p in self.chosen)

    @property
    def layers(self):
        return [p.layer for p in self.chosen]

    def __len__(self):
        return len(self.chosen)

    def __str__(self):
        return ' '.join(str(p) for p in self.chosen)


@dataclass(frozen=True)
class MatchabilityReport:
    """
    outcome of matchability_check

    hypothesis_ok: eta(C|S) >= rank(M.S) held for every S checked
    failing_flat: complement of the first S that failed (a flat unless strict mode was used)
    basis_found: a basis of M that is a face of C, if any
    """
    hypothesis_ok: bool
    failing_flat: frozenset = None
    basis_found: frozenset = None
    sets_checked: int = 0


@dataclass(frozen=True)
class LemmaCheckResult:
    """
    outcome of lemma_main_check; applicable is False when the rank hypothesis does not hold
    """
    applicable: bool
    ell: int
    indices: tuple = ()
    eta: float = None
    holds: bool = None
    reason: str = ''


def make_instance(matroid_m, matroid_n, sets, target, validate=True):
    """
    build a RainbowInstance, checking that every A_i is independent in both matroids

    The size hypothesis |A_i| >= min(i, n) is not enforced here, see check_degree_hypothesis.

    :param matroid_m: Matroid
    :param matroid_n: Matroid on the same ground set
    :param sets: list of sets A_1..A_m
    :param target: n
    :param validate: check independence of every A_i
    :return: RainbowInstance
    :raises InstanceValidationError: listing the (1-based) indices of sets that are not independent
    """
    if matroid_m.ground != matroid_n.ground:
        raise ValueError(f'M and N have different ground sets {fmt_set(matroid_m.ground)} and '
                         f'{fmt_set(matroid_n.ground)}')
    assert target >= 0, f'target must be non-negative, got {target}'
    sets = tuple(frozenset(int(x) for x in a) for a in sets)
    for i, a in enumerate(sets, start=1):
        if not a <= matroid_m.ground:
            raise ValueError(f'set {i} {fmt_set(a)} is not inside the ground set')
    if validate:
        bad = []
        for i, a in enumerate(sets, start=1):
            if not matroid_m.is_independent(a):
                bad.append((i, 'M'))
            if not matroid_n.is_independent(a):
                bad.append((i, 'N'))
        if bad:
            raise InstanceValidationError('sets not independent: ' + ', '.join(f'A_{i} in {w}' for i, w in bad),
                                          bad_sets=bad)
    return RainbowInstance(matroid_m, matroid_n, sets, int(target))


def degree_hypothesis_failures(inst):
    """
    1-based indices i with |A_i| < min(i, n)
    """
    return [i for i, a in enumerate(inst.sets, start=1) if len(a) < min(i, inst.target)]


def check_degree_hypothesis(inst):
    """
    m = 2n - 1 and |A_i| >= min(i, n) for every i (in the given order)

    :param inst: RainbowInstance
    :return: bool
    """
    return len(inst.sets) == 2 * inst.target - 1 and not degree_hypothesis_failures(inst)


def check_uniform_size_hypothesis(inst):
    """
    2n - 1 sets, all of size exactly n
    """
    return len(inst.sets) == 2 * inst.target - 1 and all(len(a) == inst.target for a in inst.sets)


def sort_sets_by_size(inst):
    """
    the same instance with the sets in nondecreasing order of size (stable)
    """
    return RainbowInstance(inst.matroid_m, inst.matroid_n, tuple(sorted(inst.sets, key=len)), inst.target)


def layered_ground(sets):
    """
    V' = {(x, i) : x in A_i}, ordered by layer and then element; position in the tuple is the element id in V'

    :param sets: list of sets A_1..A_m
    :return: LayeredGround
    """
    return LayeredGround((x, i) for i, a in enumerate(sets, start=1) for x in sorted(a))


def lift_matroid(matroid, layered):
    """
    M' on V': a set of pairs is independent iff its elements are pairwise distinct and independent in M
    (layers may repeat)

    :param matroid: Matroid on V
    :param layered: tuple of LayeredElement
    :return: ProjectionMatroid on 0..len(layered)-1
    """
    return ProjectionMatroid(matroid, [p.element for p in layered])


def _rainbow_face_predicate(matroid, layered):
    def is_face(subset):
        pairs = [layered[i] for i in subset]
        elements = {p.element for p in pairs}
        if len({p.layer for p in pairs}) != len(pairs) or len(elements) != len(pairs):
            return False
        return matroid.is_independent(elements)

    return is_face


def build_complex(matroid, layered, cross_check=False):
    """
    the complex C on V' whose faces have pairwise distinct layers, pairwise distinct elements, and elements
    independent in the given matroid

    :param matroid: Matroid on V (N in the main construction)
    :param layered: tuple of LayeredElement
    :param cross_check: also build I(complex_hypergraph) and assert the two agree
    :return: SimplicialComplex on 0..len(layered)-1
    """
    cplx = complex_from_predicate(len(layered), _rainbow_face_predicate(matroid, layered))
    if cross_check:
        assert cplx == independence_complex(complex_hypergraph(matroid, layered)), \
            'complex of rainbow faces differs from the independence complex of its hypergraph'
    return cplx


def complex_hypergraph(matroid, layered):
    """
    hypergraph on V' with I(H) = build_complex(matroid, layered): same-layer pairs, same-element pairs and the
    lifts of circuits of the matroid (one pair chosen per circuit element)
    """
    edges = []
    for i, j in combinations(range(len(layered)), 2):
        if layered[i].layer == layered[j].layer or layered[i].element == layered[j].element:
            edges.append({i, j})
    copies = {}
    for i, p in enumerate(layered):
        copies.setdefault(p.element, []).append(i)
    for c in circuits(matroid):
        if all(x in copies for x in c):
            for choice in product(*(copies[x] for x in sorted(c))):
                edges.append(set(choice))
    return Hypergraph(len(layered), edges)


def find_rainbow(inst, max_candidates=MAX_RAINBOW_CANDIDATES):
    """
    exact search for a partial rainbow set of size n independent in both matroids.

    Backtracking over layers in increasing index, trying elements in increasing order before skipping the layer.
    A branch is cut when too few layers remain, or when either matroid's rank of the picked elements together with
    every element still available falls below n.  Failed (layer, picked) states are remembered.

    :param inst: RainbowInstance
    :param max_candidates: cap on the total size of the sets
    :return: RainbowSelection, or None if no rainbow set of size n exists
    """
    if inst.candidate_count > max_candidates:
        raise ScaleLimitError(f'exact rainbow search is limited to {max_candidates} candidates, '
                              f'got {inst.candidate_count}')
    n = inst.target
    sets = [frozenset(a) for a in inst.sets]
    m = len(sets)
    m_mat, n_mat = inst.matroid_m, inst.matroid_n
    suffix = [frozenset()] * (m + 1)
    for i in range(m - 1, -1, -1):
        suffix[i] = suffix[i + 1] | sets[i]
    failed = set()

    def search(i, picked, chosen):
        if len(chosen) == n:
            return chosen
        if len(chosen) + (m - i) < n or (i, picked) in failed:
            return None
        reachable = picked | suffix[i]
        if m_mat.rank(reachable) < n or n_mat.rank(reachable) < n:
            failed.add((i, picked))
            return None
        for x in sorted(sets[i] - picked):
            new = picked | {x}
            if m_mat.is_independent(new) and n_mat.is_independent(new):
                found = search(i + 1, new, chosen + (LayeredElement(x, i + 1),))
                if found is not None:
                    return found
        found = search(i + 1, picked, chosen)
        if found is None:
            failed.add((i, picked))
        return found

    result = search(0, frozenset(), ())
    return None if result is None else RainbowSelection(result)


def brute_force_rainbow(inst):
    """
    exhaustive enumeration of layer-injective selections of size n; slow reference for find_rainbow

    :param inst: RainbowInstance
    :return: RainbowSelection or None
    """
    n = inst.target
    for layers in combinations(range(1, len(inst.sets) + 1), n):
        for elements in product(*(sorted(inst.sets[i - 1]) for i in layers)):
            if len(set(elements)) != n:
                continue
            if inst.matroid_m.is_independent(elements) and inst.matroid_n.is_independent(elements):
                return RainbowSelection(tuple(LayeredElement(x, i) for x, i in zip(elements, layers)))
    return None


def verify_selection(inst, sel):
    """
    check that a selection is a partial rainbow set of size n independent in both matroids

    :param inst: RainbowInstance
    :param sel: RainbowSelection
    :return: bool
    """
    chosen = list(sel.chosen)
    if len(chosen) != inst.target:
        return False
    layers = [p.layer for p in chosen]
    elements = [p.element for p in chosen]
    if len(set(layers)) != len(layers) or len(set(elements)) != len(elements):
        return False
    for p in chosen:
        if not 1 <= p.layer <= len(inst.sets) or p.element not in inst.sets[p.layer - 1]:
            return False
    return inst.matroid_m.is_independent(elements) and inst.matroid_n.is_independent(elements)


def _find_basis_face(matroid, cplx):
    r = matroid.rank()
    elements = sorted(matroid.ground)
    stack = [(frozenset(), 0)]
    while stack:
        current, start = stack.pop()
        if len(current) == r:
            return current
        for i in range(len(elements) - 1, start - 1, -1):
            candidate = current | {elements[i]}
            if candidate in cplx and matroid.is_independent(candidate):
                stack.append((candidate, i + 1))
    return None


def matchability_check(matroid, cplx, strict=False):
    """
    check eta(C|S) >= rank(M.S) over complements S of flats of M, and search for a basis of M that is a face of C

    When the condition holds a basis inside C must exist; a violation of that implication raises AssertionError.
    strict mode checks every S of the ground set instead of flat complements.

    :param matroid: Matroid
    :param cplx: SimplicialComplex on the same ground set
    :param strict: check all subsets S
    :return: MatchabilityReport
    :raises ValueError: on a ground mismatch or a void complex
    """
    if matroid.ground != cplx.ground:
        raise ValueError(f'matroid and complex have different grounds {fmt_set(matroid.ground)} and '
                         f'{fmt_set(cplx.ground)}')
    if cplx.is_void:
        raise ValueError('matchability needs a nonvoid complex')
    ground = matroid.ground
    if strict:
        if len(ground) > 10:
            warnings.warn(f'strict matchability check over all 2**{len(ground)} subsets, this may be slow')
        members = sorted(ground)
        candidates = [frozenset(c) for size in range(len(members) + 1) for c in combinations(members, size)]
    else:
        candidates = [ground - f for f in flats(matroid)]
    hypothesis_ok = True
    failing = None
    checked = 0
    for s in candidates:
        checked += 1
        if eta(restrict_complex(cplx, s)) < quotient_to(matroid, s).rank():
            hypothesis_ok = False
            failing = ground - s
            break
    basis = _find_basis_face(matroid, cplx)
    assert not (hypothesis_ok and basis is None), \
        f'matchability hypothesis holds but no basis of {matroid} is a face of {cplx}'
    return MatchabilityReport(hypothesis_ok=hypothesis_ok, failing_flat=failing, basis_found=basis,
                              sets_checked=checked)


def layered_matchability(inst, strict=False):
    """
    run matchability_check on the truncated lifted matroid M' (rank n) and the complex C of an instance

    :param inst: RainbowInstance
    :param strict: check all subsets of V'
    :return: (MatchabilityReport, RainbowSelection or None built from the basis found)
    """
    layered = layered_ground(inst.sets)
    lifted = truncate(lift_matroid(inst.matroid_m, layered), inst.target)
    cplx = build_complex(inst.matroid_n, layered)
    report = matchability_check(lifted, cplx, strict=strict)
    selection = None
    if report.basis_found is not None and len(report.basis_found) == inst.target:
        selection = RainbowSelection(tuple(sorted((layered[i] for i in report.basis_found),
                                                  key=lambda p: (p.layer, p.element))))
    return report, selection


def find_lemma_indices(blocks, matroid, ell):
    """
    indices i_1..i_{2l-1} (0-based) with rank(X_{i_j}) >= min(j, l), if any exist

    Taking the 2l-1 blocks of largest rank in nondecreasing order of rank is optimal.

    :param blocks: list of sets
    :param matroid: Matroid N
    :param ell: l >= 1
    :return: list of ints or None
    """
    need = 2 * ell - 1
    if len(blocks) < need:
        return None
    ranked = sorted(range(len(blocks)), key=lambda i: (matroid.rank(blocks[i]), i))[-need:]
    if all(matroid.rank(blocks[i]) >= min(j, ell) for j, i in enumerate(ranked, start=1)):
        return ranked
    return None


def lemma_hypergraph(blocks, matroid):
    """
    hypergraph of the circuits of N together with the 2-subsets of each block; its independence complex is the
    complex of sets independent in both the partition matroid of the blocks and N

    :param blocks: pairwise disjoint sets covering the matroid's ground set
    :param matroid: Matroid N
    :return: Hypergraph
    """
    edges = list(circuits(matroid))
    for b in blocks:
        edges.extend(set(pair) for pair in combinations(sorted(b), 2))
    return Hypergraph(matroid.ground, edges)


def partition_intersection_complex(blocks, matroid):
    """
    the complex P & N for the partition matroid P of the blocks, with N restricted to the union of the blocks

    Built facet-wise from both matroid complexes and cross checked against I(lemma_hypergraph).

    :param blocks: pairwise disjoint sets inside the matroid's ground set
    :param matroid: Matroid N
    :return: SimplicialComplex
    """
    blocks = [frozenset(b) for b in blocks]
    union = frozenset().union(*blocks)
    restricted = restrict(matroid, union)
    partition = partition_matroid(blocks, ground=union)
    cplx = intersect_complexes(matroid_complex(partition), matroid_complex(restricted))
    assert cplx == independence_complex(lemma_hypergraph(blocks, restricted)), \
        'P & N differs from the independence complex of the circuits and block pairs'
    return cplx


def lemma_main_check(blocks, matroid, ell, indices=None):
    """
    check eta(P & N) >= l for the partition matroid P of the blocks under the rank hypothesis

    The hypothesis asks for indices i_1..i_{2l-1} with rank_N(X_{i_j}) >= min(j, l).  When it does not hold the
    result is marked inapplicable rather than failed.

    :param blocks: pairwise disjoint sets X_1..X_m inside N's ground set
    :param matroid: Matroid N
    :param ell: l >= 1
    :param indices: 0-based indices into blocks, default searches with find_lemma_indices
    :return: LemmaCheckResult
    """
    assert ell >= 1, f'l must be at least 1, got {ell}'
    blocks = [frozenset(b) for b in blocks]
    if len(blocks) < 2 * ell - 1:
        return LemmaCheckResult(False, ell, reason=f'only {len(blocks)} blocks, need {2 * ell - 1}')
    if indices is None:
        indices = find_lemma_indices(blocks, matroid, ell)
        if indices is None:
            return LemmaCheckResult(False, ell, reason='no indices satisfy the rank hypothesis')
    indices = tuple(int(i) for i in indices)
    if len(indices) != 2 * ell - 1 or len(set(indices)) != len(indices):
        raise ValueError(f'need {2 * ell - 1} distinct indices, got {indices}')
    if not all(0 <= i < len(blocks) for i in indices):
        raise ValueError(f'indices {indices} out of range for {len(blocks)} blocks')
    for j, i in enumerate(indices, start=1):
        if matroid.rank(blocks[i]) < min(j, ell):
            return LemmaCheckResult(False, ell, indices,
                                    reason=f'rank of block {i} is {matroid.rank(blocks[i])} < {min(j, ell)}')
    value = eta(partition_intersection_complex(blocks, matroid))
    return LemmaCheckResult(True, ell, indices, eta=value, holds=value >= ell)


def proof_step_report(inst):
    """
    per-flat quantities of the topological argument for an instance, as a DataFrame.

    For every flat F' of the truncated lifted matroid M' (rank n) with complement S':
      * rank: k = rank(F')
      * rho_quotient: rank(M'.S'), expected <= n - k
      * eta_restricted: eta(C|S'), expected >= n - k under the hypothesis
      * correspondence: F' is the set of pairs over the flat F spanned by its elements in the truncated M
      * rank_shift: rank_M(A_i & S) >= rank_M(A_i) - k for every i, S the complement of F
      * lemma_eta / lemma_applicable: the lemma applied to the restriction of N' to S' with X_i the pairs of layer
        i in S' and l = n - k (both this and eta_restricted are reported)

    :param inst: RainbowInstance
    :return: pd.DataFrame, one row per flat
    """
    n = inst.target
    layered = layered_ground(inst.sets)
    lifted = truncate(lift_matroid(inst.matroid_m, layered), n)
    lifted_n = lift_matroid(inst.matroid_n, layered)
    truncated_m = truncate(inst.matroid_m, n)
    cplx = build_complex(inst.matroid_n, layered)
    everything = frozenset(range(len(layered)))
    rows = []
    for flat in flats(lifted):
        k = lifted.rank(flat)
        complement = everything - flat
        base_flat = closure(truncated_m, {layered[i].element for i in flat})
        lifted_back = frozenset(i for i, p in enumerate(layered) if p.element in base_flat)
        correspondence = lifted_back == flat and truncated_m.rank(base_flat) == k
        s = truncated_m.ground - base_flat
        rank_shift = all(truncated_m.rank(a & s) >= truncated_m.rank(a) - k for a in inst.sets)
        ell = n - k
        lemma_eta, lemma_applicable = None, False
        if ell >= 1:
            blocks = [frozenset(i for i in complement if layered[i].layer == layer)
                      for layer in range(1, len(inst.sets) + 1)]
            blocks = [b for b in blocks if b]
            result = lemma_main_check(blocks, restrict(lifted_n, complement), ell)
            lemma_applicable = result.applicable
            lemma_eta = result.eta
        rows.append(dict(
            flat=fmt_set(flat),
            rank=k,
            bound=ell,
            rho_quotient=quotient_to(lifted, complement).rank(),
            eta_restricted=eta(restrict_complex(cplx, complement)),
            correspondence=correspondence,
            rank_shift=rank_shift,
            lemma_applicable=lemma_applicable,
            lemma_eta=lemma_eta,
        ))
    return pd.DataFrame(rows, columns=['flat', 'rank', 'bound', 'rho_quotient', 'eta_restricted', 'correspondence',
                                       'rank_shift', 'lemma_applicable', 'lemma_eta'])

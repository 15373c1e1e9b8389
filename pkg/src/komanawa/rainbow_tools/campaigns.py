"""
created matt_dumont
on: 17/10/26

Random instance generators and the verification campaigns run by ``rainbow-tools verify``.

Every campaign turns its parameters into an ordered list of cases (random cases carry a child of
numpy.random.SeedSequence(seed)), checks each case with a module level function, and merges the outcomes in case
order into a VerificationReport.  Results therefore do not depend on the number of workers.
"""
import sys
import time
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from pathlib import Path
import numpy as np
import pandas as pd
from tqdm import tqdm
from komanawa.rainbow_tools.complexes import (Hypergraph, SimplicialComplex, cycle_graph_hypergraph,
                                              independence_complex, simplex_boundary_complex)
from komanawa.rainbow_tools.homology import (betti, brute_force_betti, brute_force_eta, certificate_size,
                                             eta, eta_lower_bound_certificate, eta_recursion_check, fmt_eta,
                                             replay_certificate, ETA_INF)
from komanawa.rainbow_tools.instance_io import format_complex, format_hypergraph, format_instance, parse_instance
from komanawa.rainbow_tools.matroids import (PartitionMatroid, ProjectionMatroid, ScaleLimitError,
                                             check_circuit_elimination, check_matroid_axioms, circuits, contract,
                                             fmt_set, free_matroid, from_circuits, graphic_matroid, independent_sets,
                                             linear_matroid, partition_matroid, quotient_to, uniform_matroid)
from komanawa.rainbow_tools.rainbow import (RainbowInstance, brute_force_rainbow, find_lemma_indices, find_rainbow,
                                            layered_matchability, lemma_main_check, make_instance,
                                            proof_step_report, verify_selection)
from komanawa.rainbow_tools.reductions import (drisko_instance, gen_complete_bipartite_example, gen_cycle_tightness,
                                               matchings_to_instance, selection_to_diagonal)

MATROID_KINDS = ('uniform', 'partition', 'graphic', 'linear')
MAX_HOMOLOGY_GROUND = 12
MAX_LAWS_GROUND = 8
MAX_ORACLE_CANDIDATES = 24
MAX_LAYERED_GROUND = 10
LEMMA_RETRIES = 50
DEFAULT_COUNTS = {
    'drisko': 1000,
    'main': 10000,
    'lemma': 1000,
    'eta-recursion': 1000,
    'matchability': 1000,
    'homology': 200,
    'certificate': 500,
    'matroid-laws': 200,
}


class InfeasibleInstanceError(ValueError):
    """
    raised when the random generator cannot satisfy the rainbow hypothesis within its retry budget
    """


def random_matroid(rng, ground, kind=None, max_vertices=6, primes=(2, 3)):
    """
    draw a random matroid on 0..ground-1

    :param rng: np.random.Generator
    :param ground: ground set size
    :param kind: 'uniform', 'partition', 'graphic', 'linear', 'free', or None for a random choice of the first four
    :param max_vertices: vertex bound for graphic matroids
    :param primes: field sizes for linear matroids
    :return: Matroid
    """
    if kind is None:
        kind = MATROID_KINDS[int(rng.integers(len(MATROID_KINDS)))]
    if kind == 'free':
        return free_matroid(ground)
    if kind == 'uniform':
        return uniform_matroid(ground, int(rng.integers(0, ground + 1)))
    if kind == 'partition':
        nblocks = int(rng.integers(1, ground + 1)) if ground else 1
        labels = rng.integers(0, nblocks, size=ground)
        blocks = [np.flatnonzero(labels == b).tolist() for b in range(nblocks)]
        return partition_matroid([b for b in blocks if b], ground=ground)
    if kind == 'graphic':
        vertices = int(rng.integers(2, max_vertices + 1))
        edges = [tuple(int(v) for v in rng.choice(vertices, size=2, replace=False)) for _ in range(ground)]
        return graphic_matroid(vertices, edges)
    if kind == 'linear':
        prime = int(rng.choice(primes))
        rows = int(rng.integers(1, max(ground, 1) + 1))
        return linear_matroid(prime, rng.integers(0, prime, size=(ground, rows)).tolist())
    raise ValueError(f'unknown matroid kind {kind!r}, expected one of {MATROID_KINDS + ("free",)}')


def _grow_common_independent(rng, matroid_m, matroid_n, size):
    picked = set()
    for x in rng.permutation(sorted(matroid_m.ground)):
        if len(picked) == size:
            break
        candidate = picked | {int(x)}
        if matroid_m.is_independent(candidate) and matroid_n.is_independent(candidate):
            picked = candidate
    return frozenset(picked)


def gen_random_instance(n, ground=6, kind_m=None, kind_n=None, seed=0, max_retries=50):
    """
    random instance satisfying the hypothesis: m = 2n - 1 sets, |A_i| >= min(i, n), each independent in both
    matroids.

    Each attempt draws both matroids, rejects them when either has rank below n, and grows every A_i greedily in a
    random order towards a random size between min(i, n) and n.  Attempts that cannot reach min(i, n) are redrawn.

    :param n: target size n >= 1
    :param ground: ground set size (>= n)
    :param kind_m: matroid kind for M (see random_matroid), None for random
    :param kind_n: matroid kind for N
    :param seed: int, SeedSequence or np.random.Generator
    :param max_retries: number of attempts
    :return: RainbowInstance
    :raises InfeasibleInstanceError: if no attempt succeeded
    """
    if n < 1:
        raise ValueError(f'n must be at least 1, got {n}')
    if ground < n:
        raise ValueError(f'ground {ground} is too small for n={n}')
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    for _ in range(max_retries):
        matroid_m = random_matroid(rng, ground, kind_m)
        matroid_n = random_matroid(rng, ground, kind_n)
        if matroid_m.rank() < n or matroid_n.rank() < n:
            continue
        sets = []
        for i in range(1, 2 * n):
            need = min(i, n)
            picked = _grow_common_independent(rng, matroid_m, matroid_n, int(rng.integers(need, n + 1)))
            if len(picked) < need:
                break
            sets.append(picked)
        else:
            return make_instance(matroid_m, matroid_n, sets, n)
    raise InfeasibleInstanceError(f'no instance with n={n} on {ground} elements (M {kind_m or "random"}, '
                                  f'N {kind_n or "random"}) after {max_retries} attempts')


@dataclass
class VerificationReport:
    """
    aggregated outcome of a campaign

    failures == 0 exactly when counterexample is None; counterexample holds the reproducer file of the first
    failing case.  details has one row per case in case order.
    """
    campaign: str
    checked: int = 0
    failures: int = 0
    skipped: int = 0
    counterexample: str = None
    wall_time: float = 0.0
    details: pd.DataFrame = field(default_factory=pd.DataFrame)

    @property
    def ok(self):
        return self.failures == 0

    def summary(self):
        """
        deterministic text summary (wall time excluded)
        """
        lines = [f'campaign {self.campaign}',
                 f'checked {self.checked}',
                 f'failures {self.failures}']
        if self.skipped:
            lines.append(f'skipped {self.skipped}')
        lines.append('PASS' if self.ok else 'FAIL')
        if self.counterexample is not None:
            lines.append('first counterexample:')
            lines.append(self.counterexample.rstrip('\n'))
        return '\n'.join(lines)

    def to_hdf(self, path, key=None):
        """
        write the details table to an hdf file (pandas / PyTables)

        :param path: output path
        :param key: hdf key, default the campaign name
        """
        if self.details.empty:
            warnings.warn(f'campaign {self.campaign} has no details, nothing written to {path}')
            return
        key = key or self.campaign.replace('-', '_')
        Path(path).parent.mkdir(parents=True, exist_ok=True)
        self.details.to_hdf(path, key=key, mode='a', format='table')


@dataclass
class _Outcome:
    row: dict
    failed: bool = False
    skipped: bool = False
    reproducer: str = None


def check_campaign_inputs(count, workers, seed):
    """
    convenience function to check the common campaign arguments
    """
    assert isinstance(count, (int, np.integer)) and count >= 0, f'count must be a non-negative integer, got {count}'
    assert isinstance(workers, (int, np.integer)) and workers >= 1, f'workers must be at least 1, got {workers}'
    assert isinstance(seed, (int, np.integer)) and seed >= 0, f'seed must be a non-negative integer, got {seed}'


def _seeds(seed, count):
    return np.random.SeedSequence(seed).spawn(count)


def run_campaign(name, cases, check, workers=1, progress=False, verbose=False):
    """
    check every case and merge the outcomes in case order

    :param name: campaign name
    :param cases: list of picklable cases
    :param check: module level function case -> _Outcome
    :param workers: process pool size (1 runs in process)
    :param progress: show a tqdm bar on stderr
    :param verbose: report each failing row through warnings.warn
    :return: VerificationReport
    """
    start = time.perf_counter()
    if workers > 1 and len(cases) > 1:
        chunksize = max(1, len(cases) // (workers * 8))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(tqdm(pool.map(check, cases, chunksize=chunksize), total=len(cases), desc=name,
                                 file=sys.stderr, disable=not progress))
    else:
        outcomes = [check(case) for case in tqdm(cases, desc=name, file=sys.stderr, disable=not progress)]
    report = VerificationReport(campaign=name)
    for outcome in outcomes:
        if outcome.skipped:
            report.skipped += 1
            continue
        report.checked += 1
        if outcome.failed:
            report.failures += 1
            if report.counterexample is None:
                report.counterexample = outcome.reproducer
            if verbose:
                warnings.warn(f'{name} failure: {outcome.row}')
    report.details = pd.DataFrame([o.row for o in outcomes])
    report.wall_time = time.perf_counter() - start
    assert (report.failures == 0) == (report.counterexample is None), 'every failure must carry a reproducer'
    return report


# drisko: row-Latin matrices, every n x (2n - 1) matrix with permutation columns has a diagonal holding 1..n

def _check_drisko(matrix):
    matrix = np.asarray(matrix, dtype=np.int64)
    n = matrix.shape[0]
    inst = drisko_instance(matrix)
    text = ';'.join(','.join(str(int(v)) for v in matrix[:, c]) for c in range(matrix.shape[1]))
    reproducer = format_instance(inst, comment=f'drisko matrix columns {text}')
    sel = find_rainbow(inst)
    row = dict(matrix=text, solved=sel is not None, cells='')
    if sel is None or not verify_selection(inst, sel):
        return _Outcome(row, failed=True, reproducer=reproducer)
    diagonal = selection_to_diagonal(sel, matrix, kind='drisko')
    row['cells'] = ' '.join(f'({r},{c})' for r, c in diagonal.cells)
    failed = sorted(diagonal.entries) != list(range(1, n + 1))
    return _Outcome(row, failed=failed, reproducer=reproducer if failed else None)


def drisko_matrices(n, exhaustive=False, count=1000, seed=0):
    """
    n x (2n - 1) matrices with permutation columns: all (n!)**(2n-1) of them, or count random ones
    """
    m = 2 * n - 1
    perms = [np.array(p) + 1 for p in permutations(range(n))]
    if exhaustive:
        if len(perms) ** m > 10 ** 5:
            raise ScaleLimitError(f'exhaustive drisko campaign for n={n} has {len(perms) ** m} matrices')
        return [np.column_stack(cols) for cols in product(perms, repeat=m)]
    out = []
    for child in _seeds(seed, count):
        rng = np.random.default_rng(child)
        out.append(np.column_stack([rng.permutation(n) + 1 for _ in range(m)]))
    return out


def verify_drisko(n=2, exhaustive=False, count=None, seed=0, workers=1, progress=False, verbose=False):
    count = DEFAULT_COUNTS['drisko'] if count is None else count
    check_campaign_inputs(count, workers, seed)
    if n < 1:
        raise ValueError(f'n must be at least 1, got {n}')
    matrices = drisko_matrices(n, exhaustive=exhaustive, count=count, seed=seed)
    return run_campaign('drisko', matrices, _check_drisko, workers, progress, verbose)


# main: random instances satisfying the hypothesis always have a rainbow set of size n

def _main_case_instance(n, ground, child):
    # n and the instance depend only on the child seed; matchability replays the same draws
    rng = np.random.default_rng(child)
    if n is None:
        n = int(rng.choice([2, 3]))
    try:
        return n, gen_random_instance(n, ground=ground, seed=rng), ''
    except InfeasibleInstanceError as err:
        return n, None, str(err)


def _check_main(case):
    index, n, ground, child = case
    n, inst, problem = _main_case_instance(n, ground, child)
    if inst is None:
        return _Outcome(dict(index=index, n=n, status='infeasible', detail=problem), skipped=True)
    reproducer = format_instance(inst, comment=f'main campaign case {index}')
    sel = find_rainbow(inst)
    row = dict(index=index, n=n, status='solved' if sel is not None else 'unsolved',
               detail='' if sel is None else str(sel))
    failed = sel is None or not verify_selection(inst, sel)
    if not failed and inst.candidate_count <= MAX_ORACLE_CANDIDATES:
        failed = brute_force_rainbow(inst) is None
    return _Outcome(row, failed=failed, reproducer=reproducer if failed else None)


def verify_main(n=None, ground=6, count=None, seed=0, workers=1, progress=False, verbose=False):
    count = DEFAULT_COUNTS['main'] if count is None else count
    check_campaign_inputs(count, workers, seed)
    cases = [(i, n, ground, child) for i, child in enumerate(_seeds(seed, count))]
    return run_campaign('main', cases, _check_main, workers, progress, verbose)


# matchability: flat complement hypothesis on the layered construction implies a basis inside C

def _check_matchability(case):
    index, n, ground, child = case
    drawn, inst, problem = _main_case_instance(None, ground, child)
    if drawn != n:
        return _Outcome(dict(index=index, status='other-n', detail=f'main case has n = {drawn}'), skipped=True)
    if inst is None:
        return _Outcome(dict(index=index, status='infeasible', detail=problem), skipped=True)
    if inst.candidate_count > MAX_LAYERED_GROUND:
        return _Outcome(dict(index=index, status='too-large', detail=f'|V\'| = {inst.candidate_count}'),
                        skipped=True)
    reproducer = format_instance(inst, comment=f'matchability campaign case {index}')
    row = dict(index=index, status='checked', detail='')
    try:
        report, sel = layered_matchability(inst)
        steps = proof_step_report(inst)
    except AssertionError as err:
        row['detail'] = str(err)
        return _Outcome(row, failed=True, reproducer=reproducer)
    row.update(hypothesis_ok=report.hypothesis_ok, basis_found=report.basis_found is not None,
               flats=len(steps))
    problems = []
    if sel is not None and not verify_selection(inst, sel):
        problems.append('basis is not a rainbow selection')
    if sel is not None and find_rainbow(inst) is None:
        problems.append('basis found but the finder reports none')
    if not steps['correspondence'].all():
        problems.append('flat correspondence')
    if not (steps['rho_quotient'] <= steps['bound']).all():
        problems.append('quotient rank above n - k')
    if not steps['rank_shift'].all():
        problems.append('rank shift')
    row['detail'] = '; '.join(problems)
    failed = bool(problems)
    return _Outcome(row, failed=failed, reproducer=reproducer if failed else None)


def verify_matchability(n=2, ground=6, count=None, seed=0, workers=1, progress=False, verbose=False):
    """
    replays the cases of verify_main(count=count, seed=seed, ground=ground) with n drawn per case and checks the
    ones whose n matches; the rest are skipped
    """
    count = DEFAULT_COUNTS['matchability'] if count is None else count
    check_campaign_inputs(count, workers, seed)
    cases = [(i, n, ground, child) for i, child in enumerate(_seeds(seed, count))]
    return run_campaign('matchability', cases, _check_matchability, workers, progress, verbose)


# lemma: eta(P & N) >= l under the rank hypothesis

def _integer_partitions(total, parts_min):
    def parts(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in parts(remaining - first, first):
                yield (first,) + rest

    for sizes in parts(total, total):
        if len(sizes) >= parts_min:
            yield sizes


def _blocks_from_sizes(sizes):
    blocks, start = [], 0
    for s in sizes:
        blocks.append(frozenset(range(start, start + s)))
        start += s
    return blocks


def format_lemma_case(blocks, matroid, ell, comment=None):
    """
    a lemma case as an instance file: the blocks are the parts of a partition matroid M, N is the lemma's matroid,
    l is the target and there are no set lines

    :param blocks: pairwise disjoint sets covering the dense ground 0..k-1 of matroid
    :param matroid: Matroid N
    :param ell: l
    :param comment: optional comment lines
    :return: str
    """
    holder = RainbowInstance(partition_matroid(blocks, ground=matroid.ground), matroid, (), ell)
    return format_instance(holder, comment=comment)


def parse_lemma_case(text):
    """
    read a file written by format_lemma_case

    :return: (blocks, matroid N, l)
    """
    inst = parse_instance(text)
    if not isinstance(inst.matroid_m, PartitionMatroid) or inst.sets:
        raise ValueError('a lemma case has a partition matroid M and no set lines')
    return list(inst.matroid_m.blocks), inst.matroid_n, inst.target


def _random_lemma_layout(rng, ell):
    m = int(rng.integers(2 * ell - 1, 2 * ell + 2))
    sizes = tuple(int(s) for s in rng.integers(1, max(ell, 2) + 1, size=m))
    return sizes, random_matroid(rng, sum(sizes))


def _check_lemma(case):
    index, ell, sizes, kind, child = case
    rng = np.random.default_rng(child)
    if sizes is None:
        # resample until the rank hypothesis can be met
        for _ in range(LEMMA_RETRIES):
            sizes, matroid = _random_lemma_layout(rng, ell)
            if find_lemma_indices(_blocks_from_sizes(sizes), matroid, ell) is not None:
                break
    else:
        total = sum(sizes)
        if kind == 'free':
            matroid = free_matroid(total)
        else:
            size = int(rng.integers(2, total + 1)) if total >= 2 else 1
            matroid = from_circuits(total, [rng.choice(total, size=size, replace=False).tolist()])
    blocks = _blocks_from_sizes(sizes)
    reproducer = format_lemma_case(blocks, matroid, ell, comment=f'lemma campaign case {index}')
    row = dict(index=index, ell=ell, sizes=','.join(str(s) for s in sizes), kind=kind)
    try:
        result = lemma_main_check(blocks, matroid, ell)
    except AssertionError as err:
        row.update(status='error', eta=None, detail=str(err))
        return _Outcome(row, failed=True, reproducer=reproducer)
    if not result.applicable:
        row.update(status='inapplicable', eta=None, detail=result.reason)
        return _Outcome(row, skipped=True)
    row.update(status='holds' if result.holds else 'violated', eta=fmt_eta(result.eta), detail='')
    return _Outcome(row, failed=not result.holds, reproducer=None if result.holds else reproducer)


def verify_lemma(ell=2, exhaustive=False, max_total=7, count=None, seed=0, workers=1, progress=False,
                 verbose=False):
    """
    exhaustive: every multiset of block sizes with total <= max_total and at least 2l - 1 blocks, with N free and
    with one random circuit; otherwise count random block layouts with random matroids, each resampled up to
    LEMMA_RETRIES times until some indices satisfy the rank hypothesis
    """
    count = DEFAULT_COUNTS['lemma'] if count is None else count
    check_campaign_inputs(count, workers, seed)
    if ell < 1:
        raise ValueError(f'l must be at least 1, got {ell}')
    if exhaustive:
        if max_total > MAX_LAWS_GROUND:
            raise ScaleLimitError(f'exhaustive lemma campaign is limited to {MAX_LAWS_GROUND} elements')
        layouts = [sizes for total in range(1, max_total + 1) for sizes in _integer_partitions(total, 2 * ell - 1)]
        children = _seeds(seed, len(layouts))
        cases = [(i, ell, sizes, kind, child) for i, (sizes, child) in enumerate(zip(layouts, children))
                 for kind in ('free', 'circuit')]
    else:
        cases = [(i, ell, None, 'random', child) for i, child in enumerate(_seeds(seed, count))]
    return run_campaign('lemma', cases, _check_lemma, workers, progress, verbose)


# eta-recursion: the deletion/contraction bound on random hypergraphs

def random_hypergraph(rng, ground, max_edges=6, max_edge_size=3):
    """
    random hypergraph on 0..ground-1 with 1..max_edges nonempty edges
    """
    edges = []
    for _ in range(int(rng.integers(1, max_edges + 1))):
        size = int(rng.integers(1, min(max_edge_size, ground) + 1))
        edges.append(rng.choice(ground, size=size, replace=False).tolist())
    return Hypergraph(ground, edges)


def _check_eta_recursion(case):
    index, ground, child = case
    rng = np.random.default_rng(child)
    hypergraph = random_hypergraph(rng, int(rng.integers(1, ground + 1)))
    minimal = hypergraph.minimal_edges()
    edge = minimal[int(rng.integers(len(minimal)))]
    result = eta_recursion_check(hypergraph, edge)
    row = dict(index=index, edge=fmt_set(edge), eta_whole=fmt_eta(result.eta_whole),
               eta_deleted=fmt_eta(result.eta_deleted), eta_contracted=fmt_eta(result.eta_contracted),
               holds=result.holds)
    reproducer = None
    if not result.holds:
        reproducer = format_hypergraph(hypergraph, pivot=edge, comment=f'eta-recursion campaign case {index}')
    return _Outcome(row, failed=not result.holds, reproducer=reproducer)


def verify_eta_recursion(ground=6, count=None, seed=0, workers=1, progress=False, verbose=False):
    count = DEFAULT_COUNTS['eta-recursion'] if count is None else count
    check_campaign_inputs(count, workers, seed)
    if not 1 <= ground <= MAX_HOMOLOGY_GROUND:
        raise ScaleLimitError(f'ground must be in 1..{MAX_HOMOLOGY_GROUND}, got {ground}')
    cases = [(i, ground, child) for i, child in enumerate(_seeds(seed, count))]
    return run_campaign('eta-recursion', cases, _check_eta_recursion, workers, progress, verbose)


# tightness: the cycle and complete bipartite families have no rainbow matching of size n

TIGHTNESS_FAMILIES = ('cycle', 'cycle-extended', 'complete-bipartite')


def tightness_instance(family, n):
    """
    :param family: 'cycle', 'cycle-extended' (one more matching appended) or 'complete-bipartite'
    :param n: size parameter
    :return: (RainbowInstance, expect_solvable)
    """
    if family == 'cycle':
        graph, matchings = gen_cycle_tightness(n)
    elif family == 'cycle-extended':
        graph, matchings = gen_cycle_tightness(n, extra=1)
    elif family == 'complete-bipartite':
        graph, matchings = gen_complete_bipartite_example(n)
    else:
        raise ValueError(f'unknown tightness family {family!r}, expected one of {TIGHTNESS_FAMILIES}')
    return matchings_to_instance(graph, matchings, n), family == 'cycle-extended'


def _check_tightness(case):
    family, n = case
    inst, expect_solvable = tightness_instance(family, n)
    sel = find_rainbow(inst, max_candidates=max(inst.candidate_count, 1))
    solvable = sel is not None
    if solvable:
        solvable = verify_selection(inst, sel)
    elif inst.candidate_count <= 2 * MAX_ORACLE_CANDIDATES:
        solvable = brute_force_rainbow(inst) is not None
    row = dict(family=family, n=n, result='SOLVABLE' if solvable else 'UNSOLVABLE',
               expected='SOLVABLE' if expect_solvable else 'UNSOLVABLE')
    failed = solvable != expect_solvable
    reproducer = format_instance(inst, comment=f'tightness {family} n={n}') if failed else None
    return _Outcome(row, failed=failed, reproducer=reproducer)


def verify_tightness(family='cycle', n=None, workers=1, progress=False, verbose=False):
    """
    tightness families are expected to be unsolvable (cycle-extended is expected to be solvable); a case fails
    when the finder disagrees with the expectation

    :param family: one of TIGHTNESS_FAMILIES
    :param n: a single n, default n = 2..5 for the cycle families and n in (2, 4) for complete-bipartite
    """
    if family not in TIGHTNESS_FAMILIES:
        raise ValueError(f'unknown tightness family {family!r}, expected one of {TIGHTNESS_FAMILIES}')
    if n is None:
        sizes = [2, 4] if family == 'complete-bipartite' else [2, 3, 4, 5]
    else:
        sizes = [n]
    check_campaign_inputs(len(sizes), workers, 0)
    return run_campaign(f'tightness-{family}', [(family, s) for s in sizes], _check_tightness, workers, progress,
                        verbose)


# homology: exact betti / eta against the dense brute force oracle

def random_complex(rng, ground, max_facets=5):
    """
    random complex on 0..ground-1; occasionally void or {empty set}
    """
    draw = rng.random()
    if draw < 0.05:
        return SimplicialComplex(ground, ())
    if draw < 0.1:
        return SimplicialComplex(ground, [()])
    facets = [np.flatnonzero(rng.random(ground) < 0.5).tolist() for _ in range(int(rng.integers(1, max_facets + 1)))]
    return SimplicialComplex(ground, facets)


def _known_homology_cases():
    cases = [('simplex-boundary', m, dict(eta=m - 1)) for m in (3, 4, 5)]
    cases.append(('cycle-graph', 5, dict(betti1=1, eta=2)))
    return cases


def _check_homology(case):
    index, ground, payload = case
    if isinstance(payload, tuple):
        name, size, expected = payload
        if name == 'simplex-boundary':
            cplx = simplex_boundary_complex(size)
        else:
            cplx = independence_complex(cycle_graph_hypergraph(size))
    else:
        rng = np.random.default_rng(payload)
        cplx = random_complex(rng, int(rng.integers(1, ground + 1)))
        name, size, expected = 'random', len(cplx.ground), {}
    fast = [betti(cplx, k) for k in range(-1, len(cplx.ground))]
    slow = [brute_force_betti(cplx, k) for k in range(-1, len(cplx.ground))]
    eta_fast, eta_plain, eta_slow = eta(cplx), eta(cplx, use_cone=False), brute_force_eta(cplx)
    problems = []
    if fast != slow:
        problems.append('betti')
    if not eta_fast == eta_plain == eta_slow:
        problems.append('eta')
    if 'eta' in expected and eta_slow != expected['eta']:
        problems.append('known eta')
    if 'betti1' in expected and slow[2] != expected['betti1']:
        problems.append('known betti_1')
    row = dict(index=index, family=name, size=size, betti=' '.join(str(b) for b in slow), eta=fmt_eta(eta_slow),
               detail='; '.join(problems))
    failed = bool(problems)
    reproducer = format_complex(cplx, comment=f'homology campaign case {index}') if failed else None
    return _Outcome(row, failed=failed, reproducer=reproducer)


def verify_homology(ground=6, count=None, seed=0, workers=1, progress=False, verbose=False):
    count = DEFAULT_COUNTS['homology'] if count is None else count
    check_campaign_inputs(count, workers, seed)
    if not 1 <= ground <= MAX_HOMOLOGY_GROUND:
        raise ScaleLimitError(f'ground must be in 1..{MAX_HOMOLOGY_GROUND}, got {ground}')
    payloads = _known_homology_cases() + list(_seeds(seed, count))
    cases = [(i, ground, p) for i, p in enumerate(payloads)]
    return run_campaign('homology', cases, _check_homology, workers, progress, verbose)


# certificate: deletion/contraction certificates are sound

def _check_certificate(case):
    index, ground, budget, child = case
    rng = np.random.default_rng(child)
    hypergraph = random_hypergraph(rng, int(rng.integers(1, ground + 1)))
    exact = eta(independence_complex(hypergraph))
    target = int(min(exact, len(hypergraph.ground))) if exact != ETA_INF else len(hypergraph.ground)
    target = max(target - int(rng.integers(0, 2)), 0)
    cert = eta_lower_bound_certificate(hypergraph, target, budget=budget)
    row = dict(index=index, eta=fmt_eta(exact), target=target, found=cert is not None,
               nodes=certificate_size(cert))
    failed = cert is not None and (not replay_certificate(cert, hypergraph) or exact < target)
    reproducer = None
    if failed:
        reproducer = format_hypergraph(hypergraph, target=target, comment=f'certificate campaign case {index}')
    return _Outcome(row, failed=failed, reproducer=reproducer)


def verify_certificate(ground=6, count=None, seed=0, budget=10000, workers=1, progress=False, verbose=False):
    count = DEFAULT_COUNTS['certificate'] if count is None else count
    check_campaign_inputs(count, workers, seed)
    if not 1 <= ground <= MAX_HOMOLOGY_GROUND:
        raise ScaleLimitError(f'ground must be in 1..{MAX_HOMOLOGY_GROUND}, got {ground}')
    cases = [(i, ground, budget, child) for i, child in enumerate(_seeds(seed, count))]
    return run_campaign('certificate', cases, _check_certificate, workers, progress, verbose)


# matroid-laws: rank axioms, circuit elimination, contraction and quotient on random realizations

def _subsets(elements):
    elements = sorted(elements)
    return [frozenset(c) for size in range(len(elements) + 1) for c in combinations(elements, size)]


def _greedy_basis(matroid, subset):
    basis = frozenset()
    for x in sorted(subset):
        if matroid.is_independent(basis | {x}):
            basis = basis | {x}
    return basis


def matroid_law_violations(matroid, rng):
    """
    names of the matroid laws that fail for a matroid (empty list if all hold)

    :param matroid: Matroid on a ground of at most MAX_LAWS_GROUND elements
    :param rng: np.random.Generator choosing the contracted set, quotient set and projection labels
    :return: list of str
    """
    ground = matroid.ground
    violations = []
    subsets = _subsets(ground)
    for s in subsets:
        r = matroid.rank(s)
        if not 0 <= r <= len(s):
            violations.append('rank bounds')
            break
        outside = sorted(ground - s)
        if any(not r <= matroid.rank(s | {x}) <= r + 1 for x in outside):
            violations.append('unit increase')
            break
        if any(matroid.rank(s | {x}) + matroid.rank(s | {y}) < matroid.rank(s | {x, y}) + r
               for x, y in combinations(outside, 2)):
            violations.append('submodularity')
            break
    if not check_matroid_axioms(ground, independent_sets(matroid)).ok:
        violations.append('independence axioms')
    if check_circuit_elimination(circuits(matroid)) is not None:
        violations.append('circuit elimination')
    chosen = frozenset(x for x in ground if rng.random() < 0.4)
    contracted = contract(matroid, chosen)
    basis = _greedy_basis(matroid, chosen)
    if any(contracted.is_independent(t) != matroid.is_independent(t | basis) for t in _subsets(ground - chosen)):
        violations.append('contraction')
    kept = frozenset(x for x in ground if rng.random() < 0.6)
    quotient = quotient_to(matroid, kept)
    outside_independent = independent_sets(matroid, within=ground - kept)
    for e in _subsets(kept):
        expected = all(matroid.is_independent(e | f) for f in outside_independent)
        if quotient.is_independent(e) != expected:
            violations.append('quotient')
            break
    if ground:
        labels = rng.choice(sorted(ground), size=int(rng.integers(1, MAX_LAWS_GROUND + 1))).tolist()
        projection = ProjectionMatroid(matroid, labels)
        if not check_matroid_axioms(projection.ground, independent_sets(projection)).ok:
            violations.append('projection')
    return violations


def _check_matroid_laws(case):
    index, ground, child = case
    rng = np.random.default_rng(child)
    kind = MATROID_KINDS[index % len(MATROID_KINDS)]
    matroid = random_matroid(rng, int(rng.integers(0, ground + 1)), kind)
    violations = matroid_law_violations(matroid, rng)
    row = dict(index=index, kind=kind, ground=len(matroid.ground), rank=matroid.rank(),
               violations='; '.join(violations))
    reproducer = None
    if violations:
        holder = RainbowInstance(matroid, free_matroid(len(matroid.ground)), (), 0)
        reproducer = format_instance(holder, comment=f'matroid-laws case {index}: {"; ".join(violations)} in M')
    return _Outcome(row, failed=bool(violations), reproducer=reproducer)


def verify_matroid_laws(ground=MAX_LAWS_GROUND, count=None, seed=0, workers=1, progress=False, verbose=False):
    count = DEFAULT_COUNTS['matroid-laws'] if count is None else count
    check_campaign_inputs(count, workers, seed)
    if not 0 <= ground <= MAX_LAWS_GROUND:
        raise ScaleLimitError(f'ground must be in 0..{MAX_LAWS_GROUND}, got {ground}')
    cases = [(i, ground, child) for i, child in enumerate(_seeds(seed, count))]
    return run_campaign('matroid-laws', cases, _check_matroid_laws, workers, progress, verbose)


CAMPAIGNS = {
    'drisko': verify_drisko,
    'main': verify_main,
    'lemma': verify_lemma,
    'eta-recursion': verify_eta_recursion,
    'matchability': verify_matchability,
    'tightness': verify_tightness,
    'homology': verify_homology,
    'certificate': verify_certificate,
    'matroid-laws': verify_matroid_laws,
}

"""
created matt_dumont
on: 17/10/26

Command line entry point ``rainbow-tools``.

Exit codes: 0 found / verified, 1 no rainbow set / campaign failures, 2 usage, parse or scale errors.  Results go to
stdout; wall time and progress bars go to stderr so identical invocations print identical stdout.
"""
import argparse
import sys
import time
import numpy as np
from komanawa.rainbow_tools.campaigns import (CAMPAIGNS, TIGHTNESS_FAMILIES, gen_random_instance, tightness_instance)
from komanawa.rainbow_tools.complexes import cycle_graph_hypergraph, simplex_boundary_complex
from komanawa.rainbow_tools.homology import (betti, betti_vector, certificate_size, eta, eta_lower_bound_certificate,
                                             eta_recursion_check, fmt_eta, reduced_euler_characteristic,
                                             replay_certificate, ETA_INF)
from komanawa.rainbow_tools.instance_io import (format_complex, format_hypergraph, format_instance, parse_complex_file,
                                                parse_instance, read_text, write_text)
from komanawa.rainbow_tools.rainbow import (check_degree_hypothesis, find_rainbow, proof_step_report,
                                            sort_sets_by_size)
from komanawa.rainbow_tools.reductions import drisko_instance
from komanawa.rainbow_tools.version import __version__

EXIT_OK = 0
EXIT_NONE = 1
EXIT_INPUT = 2

GEN_FAMILIES = TIGHTNESS_FAMILIES + ('drisko', 'random', 'simplex-boundary', 'cycle-graph')


def _error(message):
    print(f'error: {message}', file=sys.stderr)
    return EXIT_INPUT


def cmd_rainbow(args):
    try:
        inst = parse_instance(read_text(args.file))
    except (OSError, ValueError) as err:
        return _error(err)
    if args.sort:
        inst = sort_sets_by_size(inst)
    if not check_degree_hypothesis(inst):
        print('# hypothesis |A_i| >= min(i, n) with m = 2n - 1 does not hold', file=sys.stderr)
    try:
        sel = find_rainbow(inst)
    except ValueError as err:
        return _error(err)
    if args.proof_steps:
        print(proof_step_report(inst).to_string(index=False), file=sys.stderr)
    if sel is None:
        print('NONE')
        return EXIT_NONE
    print(sel)
    return EXIT_OK


def _print_betti_prefix(cplx, value):
    if cplx.is_void:
        return
    top = cplx.dimension if value == ETA_INF else int(value) - 1
    values = [betti(cplx, k) for k in range(-1, top + 1)]
    print(f'betti[-1..{top}] = {" ".join(str(v) for v in values)}')


def cmd_eta(args):
    try:
        parsed = parse_complex_file(read_text(args.file))
        cplx = parsed.to_complex()
        value = eta(cplx)
        _print_betti_prefix(cplx, value)
        print(f'eta {fmt_eta(value)}')
        if parsed.pivot is not None:
            result = eta_recursion_check(parsed.hypergraph(), parsed.pivot)
            print(f'eta deleted {fmt_eta(result.eta_deleted)}')
            print(f'eta contracted {fmt_eta(result.eta_contracted)}')
            print(f'bound {fmt_eta(result.bound)}')
            print(f'holds {str(result.holds).lower()}')
            if not result.holds:
                return EXIT_NONE
        target = args.certificate if args.certificate is not None else parsed.target
        if target is not None:
            hypergraph = parsed.hypergraph()
            cert = eta_lower_bound_certificate(hypergraph, target, budget=args.budget)
            if cert is None:
                print(f'certificate eta >= {target} not found')
                return EXIT_NONE
            print(f'certificate eta >= {target} nodes {certificate_size(cert)} '
                  f'replay {str(replay_certificate(cert, hypergraph)).lower()}')
    except (OSError, ValueError) as err:
        return _error(err)
    return EXIT_OK


def cmd_homology(args):
    try:
        cplx = parse_complex_file(read_text(args.file)).to_complex()
        if args.k is not None:
            print(f'betti[{args.k}] = {betti(cplx, args.k)}')
        elif cplx.is_void:
            print('void complex')
        else:
            print(f'betti[-1..{cplx.dimension}] = {" ".join(str(b) for b in betti_vector(cplx))}')
        print(f'euler {reduced_euler_characteristic(cplx)}')
    except (OSError, ValueError, AssertionError) as err:
        return _error(err)
    return EXIT_OK


def _campaign_kwargs(args):
    common = dict(workers=args.workers, progress=args.progress, verbose=args.verbose)
    name = args.campaign
    if name == 'tightness':
        return dict(family=args.family, n=args.n, **common)
    kwargs = dict(count=args.count, seed=args.seed, **common)
    if name == 'drisko':
        kwargs.update(n=args.n or 2, exhaustive=args.exhaustive)
    elif name == 'main':
        kwargs.update(n=args.n, ground=args.ground)
    elif name == 'matchability':
        kwargs.update(n=args.n or 2, ground=args.ground)
    elif name == 'lemma':
        kwargs.update(ell=args.ell, exhaustive=args.exhaustive, max_total=args.max_total)
    elif name == 'certificate':
        kwargs.update(ground=args.ground, budget=args.budget)
    elif name == 'matroid-laws':
        kwargs.update(ground=min(args.ground, 8))
    else:
        kwargs.update(ground=args.ground)
    return kwargs


def cmd_verify(args):
    start = time.perf_counter()
    try:
        report = CAMPAIGNS[args.campaign](**_campaign_kwargs(args))
    except (ValueError, AssertionError) as err:
        return _error(err)
    print(report.summary())
    print(f'wall time {time.perf_counter() - start:.2f} s', file=sys.stderr)
    if args.hdf:
        report.to_hdf(args.hdf)
    return EXIT_OK if report.ok else EXIT_NONE


def _generate(args):
    family = args.family
    if family in TIGHTNESS_FAMILIES:
        n = args.n or 2
        inst, _ = tightness_instance(family, n)
        return format_instance(inst, comment=f'{family} tightness family, n={n}')
    if family == 'drisko':
        n = args.n or 2
        rng = np.random.default_rng(args.seed)
        matrix = np.column_stack([rng.permutation(n) + 1 for _ in range(2 * n - 1)])
        text = ';'.join(','.join(str(int(v)) for v in matrix[:, c]) for c in range(matrix.shape[1]))
        return format_instance(drisko_instance(matrix), comment=f'drisko matrix columns {text}')
    if family == 'random':
        n = args.n or 2
        inst = gen_random_instance(n, ground=args.ground, seed=args.seed)
        return format_instance(inst, comment=f'random instance n={n} seed={args.seed}')
    if family == 'simplex-boundary':
        m = args.n or 3
        return format_complex(simplex_boundary_complex(m), comment=f'boundary of the {m - 1}-simplex')
    if family == 'cycle-graph':
        n = args.n or 5
        return format_hypergraph(cycle_graph_hypergraph(n), comment=f'edges of the {n}-cycle graph')
    raise ValueError(f'unknown family {family!r}')


def cmd_gen(args):
    try:
        text = _generate(args)
    except ValueError as err:
        return _error(err)
    if args.out:
        write_text(args.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog='rainbow-tools',
                                     description='rainbow sets in the intersection of two matroids')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('rainbow', help='find a partial rainbow set of size n independent in both matroids')
    p.add_argument('file', help='instance file (bare names also look in the packaged data)')
    p.add_argument('--sort', action='store_true', help='sort the sets by nondecreasing size first')
    p.add_argument('--proof-steps', action='store_true', help='print the per-flat proof step table to stderr')
    p.set_defaults(func=cmd_rainbow)

    p = sub.add_parser('eta', help='homological connectivity of a complex or of the independence complex of a '
                                   'hypergraph')
    p.add_argument('file', help='complex or hypergraph file')
    p.add_argument('--certificate', type=int, default=None,
                   help='search a deletion/contraction certificate for eta >= this value (hypergraph files)')
    p.add_argument('--budget', type=int, default=10000, help='certificate search node budget')
    p.set_defaults(func=cmd_eta)

    p = sub.add_parser('homology', help='reduced betti numbers over the rationals')
    p.add_argument('file', help='complex or hypergraph file')
    p.add_argument('--k', type=int, default=None, help='a single dimension (>= -1)')
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser('verify', help='run a verification campaign')
    p.add_argument('campaign', choices=sorted(CAMPAIGNS))
    p.add_argument('--n', type=int, default=None, help='target size (campaign default if omitted)')
    p.add_argument('--ell', type=int, default=2, help='l for the lemma campaign')
    p.add_argument('--family', choices=TIGHTNESS_FAMILIES, default='cycle', help='tightness family')
    p.add_argument('--ground', type=int, default=6, help='ground set size')
    p.add_argument('--count', type=int, default=None, help='number of random cases')
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--exhaustive', action='store_true', help='enumerate every case (drisko, lemma)')
    p.add_argument('--max-total', type=int, default=7, help='block size total for the exhaustive lemma campaign')
    p.add_argument('--budget', type=int, default=10000, help='certificate search node budget')
    p.add_argument('--workers', type=int, default=1, help='process pool size')
    p.add_argument('--progress', action='store_true', help='progress bar on stderr')
    p.add_argument('--verbose', action='store_true', help='warn on each failing case (stderr)')
    p.add_argument('--hdf', default=None, help='write the per-case table to this hdf file')
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser('gen', help='write an instance, complex or hypergraph file')
    p.add_argument('family', choices=GEN_FAMILIES)
    p.add_argument('--n', type=int, default=None, help='size parameter')
    p.add_argument('--ground', type=int, default=6, help='ground set size (random family)')
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--out', default=None, help='output path (stdout if omitted)')
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None):
    """
    :param argv: argument list, default sys.argv[1:]
    :return: exit code
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == '__main__':
    sys.exit(main())

# -*- coding:utf-8 -*-
import argparse
import sys

from traitlets import TraitError

from proxnorm.core import ProxnormError
from proxnorm.utils import const, logging
from .commands import cmd_gen, cmd_run, cmd_compare, cmd_sweep
from .config import ExperimentConfig

logger = logging.get_logger(__name__)


def _add_common(parser):
    parser.add_argument('--config', '-config',
                        default=None,
                        help='experiment config JSON file, command-line flags override its values')
    parser.add_argument('--output', '-output',
                        default=None,
                        help=f'output root, default "${const.ENV_OUTPUT_ROOT}" or the current directory')
    parser.add_argument('--log-level', '-log-level',
                        default=None,
                        help='logging level, one of D, I, W, E')


def _add_problem(parser):
    parser.add_argument('--kind', '-kind', default=None,
                        help='problem kind: quadratic, lasso, box, nonneg, logistic, sparse-logistic')
    parser.add_argument('--n', '-n', type=int, default=None,
                        help='dimension')
    parser.add_argument('--mu', '-mu', type=float, default=None,
                        help='strong convexity modulus of generated quadratics, default 1.0')
    parser.add_argument('--L', '-L', dest='lip', type=float, default=None,
                        help='smoothness constant of generated quadratics, default 10.0')
    parser.add_argument('--lambda', '-lambda', dest='lam', type=float, default=None,
                        help='l1 weight, default 0.5, relative to |grad f(0)|_inf for sparse-logistic')
    parser.add_argument('--lo', '-lo', type=float, default=None,
                        help='lower box bound, default -1.0')
    parser.add_argument('--hi', '-hi', type=float, default=None,
                        help='upper box bound, default 1.0')
    parser.add_argument('--m', '-m', type=int, default=None,
                        help='logistic sample count, default 10 n')
    parser.add_argument('--seed', '-seed', type=int, default=None,
                        help='generator seed, default 0')
    parser.add_argument('--name', '-name', default=None,
                        help='fixture name, default <kind>-n<n>-seed<seed>')


def _add_solver(parser):
    parser.add_argument('--fixture', '-fixture', default=None,
                        help='problem JSON written by gen, default <name>.problem.json under the output root')
    parser.add_argument('--solver', '-solver', default=None,
                        help='pgd, fgm or apg, default pgd')
    parser.add_argument('--eta', '-eta', type=float, default=None,
                        help='PGD step factor in (0, 1], t = eta / L, default 1.0')
    parser.add_argument('--K', '-K', type=int, default=None,
                        help='iteration count, default 500')
    parser.add_argument('--schedule', '-schedule', default=None,
                        help='APG/FGM schedule: default or tight')
    parser.add_argument('--early-stop', '-early-stop', dest='early_stop', type=float, default=None,
                        help='stop once |G| drops to this value, 0 (default) disables')
    parser.add_argument('--check', '-check', dest='checks', default=None,
                        help='comma separated checks, eg: "pgd-potential,norm-monotone"')
    parser.add_argument('--samples', '-samples', type=int, default=None,
                        help='sampled states per sampling check, default 100')
    parser.add_argument('--run-name', '-run-name', dest='run_name', default=None,
                        help='output file prefix, default <fixture>-<solver>')


def _make_parser():
    parser = argparse.ArgumentParser('proxnorm',
                                     description='generate fixtures, run solvers and certify their inequalities.')
    subparsers = parser.add_subparsers(dest='command')
    subparsers.required = True

    gen = subparsers.add_parser('gen', help='generate a problem fixture and its reference optimum')
    _add_common(gen)
    _add_problem(gen)

    run = subparsers.add_parser('run', help='run a solver on a fixture and check it')
    _add_common(run)
    _add_problem(run)
    _add_solver(run)

    compare = subparsers.add_parser('compare', help='per-k comparison CSV of two or more traces')
    _add_common(compare)
    compare.add_argument('--trace', '-trace', dest='traces', action='append', required=True,
                         help='trace JSON file, repeat for each trace')
    compare.add_argument('--fixture', '-fixture', required=True,
                         help='problem JSON the traces were run on')
    compare.add_argument('--name', '-name', default=None,
                         help='output file prefix')

    sweep = subparsers.add_parser('sweep', help='run several config files in parallel')
    _add_common(sweep)
    sweep.add_argument('configs', nargs='+',
                       help='experiment config JSON files, each runs in <output>/<config name>')
    sweep.add_argument('--n-jobs', '-n-jobs', dest='n_jobs', type=int, default=None,
                       help='joblib worker count, -1 for all cores')

    return parser


def _load_config(args, keys):
    config = ExperimentConfig.from_file(args.config) if args.config else ExperimentConfig()
    overrides = {k: getattr(args, k, None) for k in keys}
    if overrides.get('checks') is not None:
        overrides['checks'] = [c.strip() for c in overrides['checks'].split(',') if c.strip()]
    overrides['output'] = args.output
    return config.override(**overrides)


_PROBLEM_KEYS = ('kind', 'n', 'mu', 'lip', 'lam', 'lo', 'hi', 'm', 'seed', 'name')
_SOLVER_KEYS = ('fixture', 'solver', 'eta', 'K', 'schedule', 'early_stop', 'checks', 'samples', 'run_name')


def main(argv=None):
    parser = _make_parser()
    args = parser.parse_args(argv)

    if args.log_level is not None:
        logging.set_level(args.log_level)

    try:
        if args.command == 'gen':
            cmd_gen(_load_config(args, _PROBLEM_KEYS))
            return const.EXIT_OK
        elif args.command == 'run':
            return cmd_run(_load_config(args, _PROBLEM_KEYS + _SOLVER_KEYS))
        elif args.command == 'compare':
            cmd_compare(args.traces, args.fixture, output=args.output or '', name=args.name)
            return const.EXIT_OK
        else:
            return cmd_sweep(args.configs, output=args.output or '', n_jobs=args.n_jobs)
    except (ProxnormError, TraitError, OSError, ValueError) as e:
        logger.error(f'{type(e).__name__}: {e}')
        return const.EXIT_ERROR


if __name__ == '__main__':
    try:
        sys.exit(main())
    except KeyboardInterrupt as e:
        print('KeyboardInterrupt')
        sys.exit(const.EXIT_ERROR)

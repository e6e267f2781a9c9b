# -*- coding:utf-8 -*-
"""
Per-run experiment configuration: a JSON file plus command-line overrides.
"""
import json

from traitlets import HasTraits, Unicode, Int, Float, List, default, validate, TraitError

from proxnorm.certificates import check_dict
from proxnorm.core import InvalidArgumentError, FixtureMismatchError
from proxnorm.functions import problem_kinds, make_problem
from proxnorm.solvers import get_solver_name, get_schedule
from proxnorm.utils import const
from .cfg import ExperimentCfg

_SMOOTH_ONLY_KINDS = tuple(k for k, (_, g) in problem_kinds.items() if g == const.NONSMOOTH_ZERO)

_CHECK_SOLVERS = {
    'pgd-potential': (const.SOLVER_PGD,),
    'gd-potential': (const.SOLVER_PGD,),
    'apg-potential': (const.SOLVER_APG, const.SOLVER_FGM),
}


class ExperimentConfig(HasTraits):
    # problem
    kind = Unicode()
    n = Int()
    mu = Float()
    lip = Float()
    lam = Float()
    lo = Float()
    hi = Float()
    m = Int(0, help='logistic sample count, 0 for 10 n')
    seed = Int()
    name = Unicode('', help='fixture name, derived from the problem when empty')

    # solver
    fixture = Unicode('', help='path of the problem JSON of a generated fixture')
    solver = Unicode()
    eta = Float()
    K = Int()
    schedule = Unicode()
    early_stop = Float(0.0, help='stop once |G| <= early_stop, 0 disables')

    # checks and outputs
    checks = List(Unicode())
    samples = Int()
    run_name = Unicode('')
    output = Unicode('', help='output root, overrides the storage root when set')

    @default('kind')
    def _default_kind(self):
        return ExperimentCfg.kind

    @default('n')
    def _default_n(self):
        return ExperimentCfg.n

    @default('mu')
    def _default_mu(self):
        return ExperimentCfg.mu

    @default('lip')
    def _default_lip(self):
        return ExperimentCfg.lip

    @default('lam')
    def _default_lam(self):
        return ExperimentCfg.lam

    @default('lo')
    def _default_lo(self):
        return ExperimentCfg.lo

    @default('hi')
    def _default_hi(self):
        return ExperimentCfg.hi

    @default('seed')
    def _default_seed(self):
        return ExperimentCfg.seed

    @default('solver')
    def _default_solver(self):
        return ExperimentCfg.solver

    @default('eta')
    def _default_eta(self):
        return ExperimentCfg.eta

    @default('K')
    def _default_K(self):
        return ExperimentCfg.K

    @default('schedule')
    def _default_schedule(self):
        return ExperimentCfg.schedule

    @default('samples')
    def _default_samples(self):
        return ExperimentCfg.samples

    @validate('kind')
    def _validate_kind(self, proposal):
        if proposal['value'] not in problem_kinds:
            raise TraitError(f'Unsupported problem kind: {proposal["value"]!r}')
        return proposal['value']

    @validate('solver')
    def _validate_solver(self, proposal):
        try:
            return get_solver_name(proposal['value'])
        except ValueError:
            raise TraitError(f'Unsupported solver: {proposal["value"]!r}')

    @validate('checks')
    def _validate_checks(self, proposal):
        unknown = [c for c in proposal['value'] if c not in check_dict]
        if unknown:
            raise TraitError(f'Unknown checks: {unknown}, expected some of {sorted(check_dict.keys())}')
        return proposal['value']

    @property
    def fixture_name(self):
        if self.name:
            return self.name
        return f'{self.kind}-n{self.n}-seed{self.seed}'

    def problem_params(self):
        return dict(kind=self.kind, n=self.n, mu=self.mu, lip=self.lip, lam=self.lam, lo=self.lo, hi=self.hi,
                    m=self.m if self.m > 0 else None, seed=self.seed)

    def make_problem(self):
        return make_problem(name=self.fixture_name, **self.problem_params())

    def validate_run(self, smooth_only):
        """Solver hypotheses and solver/check compatibility, given whether the fixture has g = 0."""
        if self.solver == const.SOLVER_PGD and not (0 < self.eta <= 1):
            raise InvalidArgumentError(f'`eta` must lie in (0, 1], got {self.eta}.')
        if self.K < 1:
            raise InvalidArgumentError(f'`K` must be positive, got {self.K}.')
        if self.solver == const.SOLVER_FGM and not smooth_only:
            raise FixtureMismatchError('the fast gradient method needs a fixture with g = 0.')
        get_schedule(self.schedule, 1.0)

        for check in self.checks:
            solvers = _CHECK_SOLVERS.get(check)
            if solvers is not None and self.solver not in solvers:
                raise FixtureMismatchError(f'check {check} needs a {"/".join(solvers)} run, got {self.solver}.')
        if 'gd-potential' in self.checks and not (smooth_only and self.eta == 1.0):
            raise FixtureMismatchError('check gd-potential needs g = 0 and eta = 1.')
        return self

    def to_dict(self):
        return {name: getattr(self, name) for name in sorted(self.trait_names())}

    @staticmethod
    def from_dict(d):
        unknown = set(d.keys()) - set(ExperimentConfig.class_trait_names())
        if unknown:
            raise InvalidArgumentError(f'Unknown config keys: {sorted(unknown)}')
        try:
            return ExperimentConfig(**d)
        except TraitError as e:
            raise InvalidArgumentError(str(e)) from e

    @staticmethod
    def from_file(path):
        with open(path, 'r') as f:
            try:
                d = json.load(f)
            except json.JSONDecodeError as e:
                raise InvalidArgumentError(f'Failed to parse config file {path}: {e}') from e
        return ExperimentConfig.from_dict(d)

    def override(self, **kwargs):
        """Set every given value that is not None; flags win over file values."""
        unknown = set(kwargs.keys()) - set(self.trait_names())
        if unknown:
            raise InvalidArgumentError(f'Unknown config keys: {sorted(unknown)}')
        try:
            for k, v in kwargs.items():
                if v is not None:
                    setattr(self, k, v)
        except TraitError as e:
            raise InvalidArgumentError(str(e)) from e
        return self

    def __repr__(self):
        return f'ExperimentConfig({self.to_dict()!r})'

from proxnorm.conf import configure, Configurable, String, Int, Float
from proxnorm.utils import const


@configure()
class ExperimentCfg(Configurable):
    kind = String(const.PROBLEM_LASSO,
                  help='default problem kind.'
                  ).tag(config=True)
    n = Int(20, min=1,
            help='default problem dimension.'
            ).tag(config=True)
    mu = Float(1.0, min=0.0,
               help='default strong convexity modulus of generated quadratics.'
               ).tag(config=True)
    lip = Float(10.0, min=0.0,
                help='default smoothness constant of generated quadratics.'
                ).tag(config=True)
    lam = Float(0.5, min=0.0,
                help='default l1 weight.'
                ).tag(config=True)
    lo = Float(-1.0,
               help='default lower box bound.'
               ).tag(config=True)
    hi = Float(1.0,
               help='default upper box bound.'
               ).tag(config=True)
    seed = Int(0,
               help='default generator seed.'
               ).tag(config=True)

    solver = String(const.SOLVER_PGD,
                    help='default solver, one of pgd, fgm, apg.'
                    ).tag(config=True)
    eta = Float(1.0,
                help='default PGD step factor, t = eta / L.'
                ).tag(config=True)
    K = Int(500, min=1,
            help='default iteration count.'
            ).tag(config=True)
    schedule = String(const.SCHEDULE_DEFAULT,
                      help='default APG/FGM schedule.'
                      ).tag(config=True)
    samples = Int(100, min=2,
                  help='default number of sampled states per sampling check.'
                  ).tag(config=True)
    log_every = Int(100, min=1,
                    help='solver progress is logged every `log_every` iterations.'
                    ).tag(config=True)

    n_jobs = Int(1,
                 help='joblib worker count of the sweep command, -1 for all cores.'
                 ).tag(config=True)

from proxnorm.conf import configure, Configurable, Float


@configure()
class ToleranceCfg(Configurable):
    eps_abs = \
        Float(1e-10, min=0.0,
              help='absolute slack of the one-sided inequality convention.'
              ).tag(config=True)

    eps_rel = \
        Float(1e-8, min=0.0,
              help='relative slack, scaled by max(|lhs|, |rhs|).'
              ).tag(config=True)

    fixed_point_tol = \
        Float(1e-8, min=0.0,
              help='mapping norm accepted as zero at a reference minimizer.'
              ).tag(config=True)

    singular_guard = \
        Float(1e-8, min=0.0,
              help='largest |G(x+, t)| tolerated before zeroing the mu*t == 1 term of refined descent.'
              ).tag(config=True)

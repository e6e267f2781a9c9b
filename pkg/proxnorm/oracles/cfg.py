from proxnorm.conf import configure, Configurable, Float, Int


@configure()
class OracleCfg(Configurable):
    reference_tol = \
        Float(1e-12, min=0.0,
              help='mapping norm |G(x, 1/L)| at which the reference solve stops.'
              ).tag(config=True)

    reference_max_iter = \
        Int(10 ** 7, min=1,
            help='iteration cap of the reference solve.'
            ).tag(config=True)

    grid_step = \
        Float(1e-3, min=0.0,
              help='coarse grid step of the 1-D prox oracle.'
              ).tag(config=True)

    ternary_width = \
        Float(1e-10, min=0.0,
              help='final bracket width of the ternary refinement.'
              ).tag(config=True)

    enum_step = \
        Float(1e-4, min=0.0,
              help='grid step of the subdifferential enumeration.'
              ).tag(config=True)

    enum_radius = \
        Float(10.0, min=0.0,
              help='truncation radius of unbounded normal-cone intervals.'
              ).tag(config=True)

class Config:
    """Tolerances and step controls of the pairing solvers.

    :ivar values: Dictionary containing configuration key-value pairs
    :type values: dict

    **Configuration Keys**:
        * START_FRACTION: Coupling, relative to the target g, where continuation starts
        * INITIAL_STEP_FRACTION: First continuation step, relative to g
        * MAX_STEP_FRACTION: Largest continuation step, relative to g
        * MIN_STEP_FRACTION: Step below which continuation gives up
        * JUMP_FRACTION: Largest corrector move, relative to the moment size, before a step is rejected
        * NEWTON_TOL: Tolerance on the g-scaled Richardson residual and the moment equations
        * NEWTON_MAX_ITER: Newton iterations per continuation step
        * POLISH_ITER: Extra Newton iterations at the target coupling
        * CONJUGATE_TOL: Relative mismatch allowed between conjugate partners
        * IMAG_TOL: Largest imaginary part tolerated in the total energy
        * BISECTION_XTOL: Absolute tolerance of the scalar bisections
    """

    values = {
        "START_FRACTION": 1e-3,
        "INITIAL_STEP_FRACTION": 1e-2,
        "MAX_STEP_FRACTION": 1e-1,
        "MIN_STEP_FRACTION": 1e-10,
        "JUMP_FRACTION": 1e-1,
        "NEWTON_TOL": 1e-12,
        "NEWTON_MAX_ITER": 40,
        "POLISH_ITER": 3,
        "CONJUGATE_TOL": 1e-8,
        "IMAG_TOL": 1e-10,
        "BISECTION_XTOL": 1e-15,
    }

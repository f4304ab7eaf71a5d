class Config:
    """Numerical constants of the spectra package.

    :ivar values: Dictionary containing configuration key-value pairs
    :type values: dict

    **Configuration Keys**:
        * ALPHA: Default fine-structure constant
        * QUADRATURE_NODES: Gauss-Legendre nodes per angle on the three-sphere
        * BISECTION_XTOL: Absolute tolerance of the Dirac bisection oracle
        * SW_MAX_Z: Largest nuclear charge the discreteness scan accepts
    """

    values = {
        "ALPHA": 7.2973525693e-3,
        "QUADRATURE_NODES": 64,
        "BISECTION_XTOL": 1e-17,
        "SW_MAX_Z": 137,
    }

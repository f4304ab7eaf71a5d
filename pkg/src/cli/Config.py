class Config:
    """Configuration class for the command line front end.

    :ivar values: Dictionary containing configuration key-value pairs
    :type values: dict

    **Configuration Keys**:
        * PRECISION: Significant digits of every serialized number
        * DEFAULT_FORMAT: Report format when ``--format`` is absent
        * FORMATS: Accepted report formats
        * ENV_DATASET: Environment variable overriding ``--dataset-path``
        * ENV_LOG_LEVEL: Environment variable holding the logging level
        * VERIFY_SEED: Seed of every randomized property in ``verify``
        * ORACLE_MAX_SUBLEVELS: Largest model ``richardson`` checks against
          exact diagonalization
        * COMMANDS: Flag schema per command; each flag maps to its type and,
          for optional flags, its default
    """

    values = {
        "PRECISION": 15,
        "DEFAULT_FORMAT": "json",
        "FORMATS": ("json", "csv"),
        "ENV_DATASET": "MADELUNG_DATASET",
        "ENV_LOG_LEVEL": "MADELUNG_LOG_LEVEL",
        "VERIFY_SEED": 20250101,
        "ORACLE_MAX_SUBLEVELS": 12,
        "COMMANDS": {
            "aufbau": {
                "rule": {"type": "str", "default": "madelung"},
                "z": {"type": "int"},
                "classify": {"type": "switch", "default": False},
                "dataset-path": {"type": "path", "default": None},
            },
            "classify": {
                "z": {"type": "int", "default": None},
                "dataset-path": {"type": "path", "default": None},
            },
            "spectrum": {
                "z": {"type": "int", "default": 1},
                "n-max": {"type": "int", "default": 4},
            },
            "dirac": {
                "z": {"type": "int", "default": 1},
                "n-r": {"type": "int", "default": 0},
                "kappa": {"type": "int", "default": -1},
                "alpha": {"type": "float", "default": None},
            },
            "richardson": {
                "levels": {"type": "floats"},
                "degeneracies": {"type": "ints", "default": None},
                "g": {"type": "float"},
                "pairs": {"type": "int"},
            },
            "bdg": {
                "epsilon": {"type": "float"},
                "delta": {"type": "float"},
            },
            "verify": {
                "dataset-path": {"type": "path", "default": None},
            },
            "swscan": {
                "n-r": {"type": "int", "default": 0},
                "l": {"type": "int", "default": 0},
                "kappa": {"type": "int", "default": -1},
                "z-max": {"type": "int", "default": 137},
                "alpha": {"type": "float", "default": None},
            },
        },
    }

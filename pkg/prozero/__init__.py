__version__ = "0.1.0"


class _Defaults:
    """
    Stores and potentially updates default engine values (inspection window,
    Groebner degree cap etc.).
    This class should not be initiated directly, as this is automatically
    done when importing the prozero package.

    The values mirror prozero/bin/defaults/engine.yaml and may be replaced by
    a project's copy of that file via 'update_from_hparams'.
    """
    def __init__(self):
        # Number of tower levels materialized by the semi-decisions
        self.WINDOW = 8

        # Maximal total degree (in the ring variables) that may appear in any
        # polynomial produced during a Groebner basis computation
        self.DEGREE_CAP = 24

        # Parallelism hint for level materialization and task execution
        self.JOBS = 1

        # CLI output defaults
        self.FORMAT = "json"
        self.LOG_LEVEL = "INFO"

        # Versions of the problem file and report formats
        self.PROBLEM_SCHEMA_VERSION = 1
        self.REPORT_SCHEMA_VERSION = 1

    @property
    def engine_yaml_path(self):
        import os
        return os.path.join(os.path.dirname(os.path.abspath(__file__)),
                            "bin", "defaults", "engine.yaml")

    @property
    def engine_version(self):
        return __version__

    def update_from_hparams(self, hparams):
        """
        Sets default values from a (dict-like) YAMLHParams object. Keys not
        present in 'hparams' are left untouched.

        Args:
            hparams: (dict) Mapping with some of the keys 'window',
                            'degree_cap', 'jobs', 'format', 'log_level'
        """
        for key in ("window", "degree_cap", "jobs", "format", "log_level"):
            if hparams.get(key) is not None:
                setattr(self, key.upper(), hparams[key])

    def load_engine_yaml(self, path=None):
        """
        Loads the engine defaults from 'path' (default: the packaged
        engine.yaml) and applies them.
        """
        from prozero.hyperparameters import YAMLHParams
        hparams = YAMLHParams(path or self.engine_yaml_path)
        self.update_from_hparams(hparams)
        return hparams


defaults = _Defaults()

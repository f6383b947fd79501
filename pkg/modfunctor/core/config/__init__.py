import os
import warnings

from modfunctor.core.types import DEFAULT_COND_LIMIT, DEFAULT_TOLERANCE, Reading
from modfunctor.core.util.config import Config


ENV_PREFIX = "MODFUNCTOR_"
CONFIG_VARIABLE = "MODFUNCTOR_CONFIG"


def special_prefix(key):
    """
    All environment variables starting with this prefix require special handling
    """
    return key.startswith(ENV_PREFIX)


class environ(object):
    """Overrides environment variables (prefixed with ``MODFUNCTOR_``)
    for the duration of the call.

    Examples
    --------
    Loosen the tolerance for one run of the relation suite:

        >>> from modfunctor.core.config import environ
        >>> from modfunctor.core.relations import run_all
        >>> with environ(NUMERICS_TOL="1e-6"):
        >>>     run_all(basic_data)

    """
    def __init__(self, **kwargs):
        self.kwargs = kwargs

    def __enter__(self):
        self.orig = dict()
        for k, newval in self.kwargs.items():
            if not special_prefix(k):
                k = ENV_PREFIX + k
            old = os.environ.get(k, None)
            if newval is None:
                os.environ.pop(k, None)
            else:
                os.environ[k] = newval
            self.orig[k] = old
        return self

    def __exit__(self, *args):
        for k, oldval in self.orig.items():
            if oldval is None:
                os.environ.pop(k, None)
            else:
                os.environ[k] = oldval


class ModFunctorConfig(object):
    """
    Application specific configuration settings which can be loaded throughout
    the modfunctor codebase.

    Attributes
    ----------
    tol : float
        Default max-norm tolerance for documents that do not carry their own.
    cond_limit : float
        Largest condition number accepted for matrices that must be invertible.
    reading : Reading
        Default reading of the curve-operator and S(λ) formulas.
    jobs : int
        Number of worker processes used by exhaustive sweeps.
    strict : bool
        Whether documents are validated against the json schema before they are parsed.
    verbose : bool
        Controls output like from tqdm

    Examples
    --------
    Default configuration equivalent:

        >>> {
        >>>     "numerics": {
        >>>         "tol": 1e-9,
        >>>         "cond_limit": 1e6
        >>>     },
        >>>     "reading": "statement",
        >>>     "jobs": 1,
        >>>     "validation": {
        >>>         "strict": false
        >>>     },
        >>>     "verbose": true
        >>> }

    """

    def __init__(self) -> None:
        """
        Loads the configuration specified by the MODFUNCTOR_CONFIG environment variable.

        Parameters
        ----------
        MODFUNCTOR_CONFIG :
            Read from the environment; either a json string or "@" followed by a file name
            (default: @~/.modfunctor/config). Keys read include:

             - ["numerics"]["tol"]          (default: 1e-9)
             - ["numerics"]["cond_limit"]   (default: 1e6)
             - ["reading"]                  (default: "statement")
             - ["jobs"]                     (default: 1)
             - ["validation"]["strict"]     (default: False)
             - ["verbose"]                  (default: True)

            Every key can also be set by an environment variable constructed from the key parts
            and prefixed with MODFUNCTOR, e.g. MODFUNCTOR_NUMERICS_TOL.
        """
        config = os.environ.get(CONFIG_VARIABLE, "@~/.modfunctor/config")
        self._config_obj = Config(config)
        self._env_keys = [
            x for x in os.environ.keys()
            if special_prefix(x) and x != CONFIG_VARIABLE]

        self._tol = float(self._config_obj.lookup(
            ("numerics", "tol"), self.value("MODFUNCTOR_NUMERICS_TOL", DEFAULT_TOLERANCE),
            remove=True))
        self._cond_limit = float(self._config_obj.lookup(
            ("numerics", "cond_limit"),
            self.value("MODFUNCTOR_NUMERICS_COND_LIMIT", DEFAULT_COND_LIMIT),
            remove=True))
        self._reading = Reading(self._config_obj.lookup(
            ("reading",), self.value("MODFUNCTOR_READING", Reading.STATEMENT.value),
            remove=True))
        self._jobs = int(self._config_obj.lookup(
            ("jobs",), self.value("MODFUNCTOR_JOBS", 1), remove=True))
        self._strict = self._config_obj.lookup(
            ("validation", "strict"), self.flag("MODFUNCTOR_VALIDATION_STRICT", "false"),
            remove=True)
        self._verbose = self._config_obj.lookup(
            ("verbose",), self.flag("MODFUNCTOR_VERBOSE", "true"), remove=True)

        if self._tol <= 0:
            raise ValueError(f"tolerance must be positive, got {self._tol}")

        if self._config_obj.data:
            warnings.warn(f"unknown configuration: {self._config_obj.data}")
        if self._env_keys:
            warnings.warn(f"unknown environment variables: {self._env_keys}")

    def value(self, name, default_value):
        if name in os.environ:
            self._env_keys.remove(name)
            return os.environ[name]
        return default_value

    def flag(self, name, default_value=""):
        value = self.value(name, default_value)
        if isinstance(value, str):
            value = value.lower()
            return value in ("true", "1", "yes", "y", "on", "active", "enabled")
        return bool(value)

    @property
    def tol(self) -> float:
        return self._tol

    @property
    def cond_limit(self) -> float:
        return self._cond_limit

    @property
    def reading(self) -> Reading:
        return self._reading

    @property
    def jobs(self) -> int:
        return self._jobs

    @property
    def strict(self) -> bool:
        return self._strict

    @property
    def verbose(self) -> bool:
        return self._verbose

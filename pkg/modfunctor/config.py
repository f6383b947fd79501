from .core.config import environ, ModFunctorConfig  # noqa: F401

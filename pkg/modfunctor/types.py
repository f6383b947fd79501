from .core.types import (  # noqa: F401
    DecompositionTree,
    Reading,
    Relations,
    Route,
)

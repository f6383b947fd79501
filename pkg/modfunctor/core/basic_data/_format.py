"""Constants to support formatting for serialization and deserialization of basic-data documents."""

from semantic_version import Version

CURRENT_VERSION = Version("0.1.0")
MIN_SUPPORTED_VERSION = Version("0.1.0")
MAX_SUPPORTED_VERSION = Version("0.1.0")


class DocumentKeys:
    VERSION_KEY = 'version'
    COMMENT_KEY = 'comment'
    LABELS_KEY = 'labels'
    DAGGER_KEY = 'dagger'
    UNIT_KEY = 'unit'
    DIMS_KEY = 'dims'
    F_KEY = 'F'
    R_KEY = 'R'
    B_KEY = 'B'
    TWISTS_KEY = 'd'
    S_KEY = 'S'
    TOLERANCE_KEY = 'tol'
    QUAD_KEY = 'quad'
    NU_KEY = 'nu'
    NUTILDE_KEY = 'nutilde'
    TRIPLE_KEY = 'triple'
    MATRIX_KEY = 'matrix'

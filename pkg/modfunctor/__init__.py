from . import (
    # configuration management.
    config,
)
from .core import (
    is_release_tag as __is_release_tag__,
    version as __version__
)
# top-level objects
from .core.basic_data import BasicData, gauge_transform, load
from .core.curve_operators import c_matrix, curve_op_torus, dehn_coefficients
from .core.generators import generate
from .core.labels import DimTable, LabelSet, verlinde_dim
from .core.modfunctor import modfunctor
from .core.reconstruction import (
    compose_framed,
    FramedMapClass,
    reconstruct_s,
    run_torus_checks,
    s_from_twist_sandwich,
    s_lambda_main,
)
from .core.relations import ReportTable, run_all


if __name__ == "__main__":
    modfunctor()

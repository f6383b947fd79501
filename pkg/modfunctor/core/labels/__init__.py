from .dim_table import (
    check_flip_dim_consistency,
    dim_triple,
    DimTable,
    flip_dimensions,
    FusionMatrixFamily,
)
from .label_set import dual, LabelSet
from .verlinde import small_sphere_dim, verlinde_dim

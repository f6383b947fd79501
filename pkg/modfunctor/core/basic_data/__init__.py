from ._format import CURRENT_VERSION, DocumentKeys
from .basic_data import (
    BasicData,
    decode_matrix,
    e_scalar,
    encode_matrix,
    FKey,
    load,
    nonzero_f_keys,
    twisted_F_block,
)
from .gauge import gauge_transform

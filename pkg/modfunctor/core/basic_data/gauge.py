from typing import Dict, Mapping

import numpy as np

from modfunctor.core.types import Triple
from .basic_data import BasicData


def gauge_transform(bd: BasicData, changes: Mapping[Triple, np.ndarray]) -> BasicData:
    """Change the basis of some of the spaces Z_{λ,μ,ν} and transform F, R and B to match.

    ``changes[t]`` expresses the new basis of Z_t in terms of the old one (row i holds the
    coordinates of new vector i). A map M between spaces with changes g and h becomes
    g M h⁻¹. Spaces not listed keep their basis.

    Spaces containing the unit label carry the preferred vectors the relations are stated in,
    so their bases cannot be changed.

    Parameters
    ----------
    bd : BasicData
        the data to transform
    changes : Mapping[Triple, np.ndarray]
        invertible square matrices keyed by the triple of the space they act on

    Returns
    -------
    BasicData :
        gauge-equivalent basic data
    """
    ls = bd.label_set
    for triple, g in changes.items():
        if ls.unit in triple:
            raise ValueError(f"the basis of {triple} holds a preferred vector and is fixed")
        n = bd.dims.dim(*triple)
        if np.shape(g) != (n, n):
            raise ValueError(f"basis change for {triple} must have shape ({n}, {n})")

    def g(triple: Triple) -> np.ndarray:
        if triple in changes:
            return np.asarray(changes[triple], dtype=complex)
        return np.eye(bd.dims.dim(*triple), dtype=complex)

    def g_inv(triple: Triple) -> np.ndarray:
        return np.linalg.inv(g(triple))

    r: Dict[Triple, np.ndarray] = {}
    b: Dict[Triple, np.ndarray] = {}
    for x, y, z in bd.dims.triples():
        r[(x, y, z)] = g((x, y, z)) @ bd.r_matrix(x, y, z) @ g_inv((y, z, x))
        b[(x, y, z)] = g((x, y, z)) @ bd.b_matrix(x, y, z) @ g_inv((x, z, y))

    dual = ls.dual
    f_blocks = {}
    for key in bd.nonzero_f_keys():
        mu, xi, lam, kappa, nu, nutilde = key
        f_blocks[key] = np.einsum(
            "ip,jq,pqrs,rk,sl->ijkl",
            g((nu, mu, lam)), g((dual(nu), kappa, xi)),
            bd.f_block(*key),
            g_inv((nutilde, lam, kappa)), g_inv((dual(nutilde), xi, mu)),
        )

    return bd._replace(r=r, b=b, f_blocks=f_blocks)

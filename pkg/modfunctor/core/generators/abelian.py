import logging
from math import gcd

import numpy as np

from modfunctor.core.basic_data import BasicData
from modfunctor.core.errors import GeneratorError
from modfunctor.core.labels import DimTable, LabelSet
from ._standard import assemble, calibration_failures

logger = logging.getLogger(__name__)

MAX_ORDER = 12


def abelian_dims(k: int) -> DimTable:
    """Z/k fusion: labels "0" … "k-1", a† = −a, and dim Z_{a,b,c} = 1 iff a + b + c ≡ 0."""
    names = [str(a) for a in range(k)]
    label_set = LabelSet.from_names(names, {str(a): str(-a % k) for a in range(k)})
    return DimTable.from_rule(
        label_set, lambda a, b, c: int((int(a) + int(b) + int(c)) % k == 0))


def abelian(k: int) -> BasicData:
    """A Z/k theory with trivial F and twists θ_a = exp(iπ p a² / k).

    The level p runs over 1 … 2k−1 with p·k even and p prime to k, and S_{a,b} is
    exp(± 2πi p a b / k) / √k. The first level and sign passing the relation suite is returned.

    Raises
    ------
    GeneratorError :
        k out of range, or no level passes
    """
    if not 2 <= k <= MAX_ORDER:
        raise GeneratorError(f"abelian theories are generated for 2 <= k <= {MAX_ORDER}, got {k}")
    dims = abelian_dims(k)
    a = np.arange(k)
    for p in range(1, 2 * k):
        if (p * k) % 2 or gcd(p, k) != 1:
            continue
        theta = np.exp(1j * np.pi * p * a ** 2 / k)
        twists = {str(x): theta[x] for x in a}
        for sign in (1, -1):
            s_standard = np.exp(sign * 2j * np.pi * p * np.outer(a, a) / k) / np.sqrt(k)
            bd = assemble(
                dims, twists, s_standard,
                comment=f"abelian Z/{k}: standard gauge, level p={p}, S sign {sign:+d}")
            failures = calibration_failures(bd)
            if not failures:
                return bd
            logger.debug("abelian k=%d p=%d sign=%+d fails %s", k, p, sign,
                         failures[0].relation)
    raise GeneratorError(f"abelian Z/{k}: no level passes the relation suite")

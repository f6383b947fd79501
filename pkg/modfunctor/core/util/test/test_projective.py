import json

import numpy as np

from modfunctor.core.util.logging import LogEncoder, provenance
from ..projective import modular_relation, projective_fit


def test_projective_fit_recovers_scale():
    b = np.array([[1, 2j], [3, 4]])
    rho, residual = projective_fit(np.exp(0.3j) * b, b)
    assert np.isclose(rho, np.exp(0.3j))
    assert residual < 1e-12


def test_projective_fit_of_empty_and_zero():
    assert projective_fit(np.zeros((0, 0)), np.zeros((0, 0))) == (1, 0.0)
    rho, residual = projective_fit(np.ones((1, 1)), np.zeros((1, 1)))
    assert residual == 1


def test_modular_relation_of_trivial_data():
    rho, residual = modular_relation(np.ones((1, 1)), np.ones(1))
    assert rho == 1
    assert residual == 0


def test_provenance_is_json_encodable():
    entry = provenance("s_matrix", {"value": 1 + 2j, "array": np.arange(2)})
    decoded = json.loads(json.dumps(entry, cls=LogEncoder))
    assert decoded["arguments"]["value"] == [1.0, 2.0]
    assert decoded["arguments"]["array"] == [0, 1]
    assert {"method", "os", "dependencies", "release tag"} <= set(decoded)

import numpy as np
import pytest

from opsqft.fields import Domain, QuaternionField2D


def test_shape_validation():
    with pytest.raises(ValueError):
        QuaternionField2D(np.zeros((3, 4)))
    with pytest.raises(ValueError):
        QuaternionField2D(np.zeros((3, 4, 3)))
    with pytest.raises(ValueError):
        QuaternionField2D(np.zeros((0, 4, 4)))


def test_dtype_coercion_and_properties():
    field = QuaternionField2D(np.ones((2, 5, 4), dtype=np.float32))
    assert field.data.dtype == np.float64
    assert (field.n1, field.n2) == (2, 5)
    assert field.domain is Domain.SPATIAL


def test_zeros_and_tagged():
    z = QuaternionField2D.zeros(3, 2, Domain.FREQUENCY)
    assert z.data.shape == (3, 2, 4)
    assert not z.data.any()
    assert z.domain is Domain.FREQUENCY
    rt = z.tagged(Domain.SPATIAL)
    assert rt.domain is Domain.SPATIAL
    assert rt.data is z.data

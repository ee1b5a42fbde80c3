import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ladderstrength.model import (ALLV, PENTA, TRI, ModelSpec, build_hamiltonian,
                                  neighbors, split)


def test_tridiagonal_entries():
    h = build_hamiltonian(TRI.with_coupling(0.37))
    assert h[0, 1] == 0.37 and h[1, 0] == 0.37
    assert h[0, 2] == 0.0
    assert h[10, 10] == 10.0


def test_pentadiagonal_entries():
    h = build_hamiltonian(PENTA)
    assert h[0, 1] == h[0, 2] == 0.1
    assert h[0, 3] == 0.0


@pytest.mark.parametrize("spec", [TRI, PENTA, ALLV])
def test_zero_coupling_is_diagonal(spec):
    h = build_hamiltonian(spec.with_coupling(0.0))
    np.testing.assert_array_equal(h, np.diag(np.arange(11.0)))


def test_split_patterns():
    h0, w = split(TRI)
    expected = np.eye(11, k=1) + np.eye(11, k=-1)
    np.testing.assert_array_equal(w, expected)
    np.testing.assert_array_equal(h0, np.diag(np.arange(11.0)))
    _, w_all = split(ALLV)
    np.testing.assert_array_equal(w_all, np.ones((11, 11)) - np.eye(11))


def test_neighbors():
    assert neighbors(PENTA, 0) == [1, 2]
    assert neighbors(PENTA, 5) == [3, 4, 6, 7]
    assert neighbors(TRI, 10) == [9]


@pytest.mark.parametrize("kwargs", [
    dict(dim=1), dict(dim=65), dict(offsets=frozenset()), dict(offsets=frozenset({11})),
    dict(offsets=frozenset({0})), dict(spacing_E=0.0), dict(coupling_v=float("nan")),
])
def test_invalid_specs(kwargs):
    with pytest.raises(ValueError):
        ModelSpec(**kwargs)


def test_preset_names():
    assert ALLV.offsets == frozenset(range(1, 11))
    with pytest.raises(ValueError):
        ModelSpec.preset("hexa")


def test_dict_round_trip():
    spec = ModelSpec(7, 2.0, 0.3, frozenset({1, 3}), "custom")
    d = spec.to_dict()
    assert d == {"model": "custom", "dim": 7, "E": 2.0, "v": 0.3, "offsets": [1, 3]}
    assert ModelSpec.from_dict(d) == spec


specs = st.builds(
    lambda dim, offs, e, v: ModelSpec(dim, e, v, frozenset(o for o in offs if o < dim) or {1}),
    st.integers(2, 16), st.sets(st.integers(1, 15), min_size=1),
    st.floats(0.1, 10.0), st.floats(-5.0, 5.0),
)


@settings(max_examples=50, deadline=None)
@given(spec=specs)
def test_structure_properties(spec):
    h = build_hamiltonian(spec)
    np.testing.assert_array_equal(h, h.T)
    h0, w = split(spec)
    np.testing.assert_array_equal(h, h0 + spec.coupling_v * w)
    i, j = np.indices(h.shape)
    band = np.isin(np.abs(i - j), sorted(spec.offsets) + [0])
    assert np.all(h[~band] == 0.0)


@settings(max_examples=50, deadline=None)
@given(spec=specs, c=st.sampled_from([0.25, 0.5, 2.0, 4.0, 1024.0]))
def test_scaling_by_power_of_two_is_exact(spec, c):
    scaled = ModelSpec(spec.dim, c * spec.spacing_E, c * spec.coupling_v, spec.offsets)
    np.testing.assert_array_equal(build_hamiltonian(scaled), c * build_hamiltonian(spec))


@settings(max_examples=30, deadline=None)
@given(spec=specs, c=st.floats(0.01, 100.0))
def test_scaling_general(spec, c):
    scaled = ModelSpec(spec.dim, c * spec.spacing_E, c * spec.coupling_v, spec.offsets)
    np.testing.assert_allclose(build_hamiltonian(scaled), c * build_hamiltonian(spec),
                               rtol=1e-15, atol=0)

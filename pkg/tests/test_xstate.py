import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from dilaton_gme import (
    BlackHoleParams,
    InvalidDensity,
    ModeLayout,
    NotXState,
    ScaleCap,
    ScenarioSpec,
    SparseDensity,
    XState,
    bogoliubov,
    build_block_matrix,
    extract_xstate,
    flat_mode,
    scenario_density,
)


def test_xstate_to_array_layout():
    x = XState(a=(0.3, 0.2), b=(0.25, 0.25), c=(0.1, -0.05))
    mat = x.to_array()
    assert x.half_dimension == 2
    assert x.dimension == 4
    expected = np.array(
        [
            [0.3, 0.0, 0.0, 0.1],
            [0.0, 0.2, -0.05, 0.0],
            [0.0, -0.05, 0.25, 0.0],
            [0.1, 0.0, 0.0, 0.25],
        ]
    )
    np.testing.assert_allclose(mat, expected)


def test_xstate_validation():
    with pytest.raises(InvalidDensity):
        XState(a=(0.5,), b=(0.5, 0.0), c=(0.0,))  # length mismatch
    with pytest.raises(InvalidDensity):
        XState(a=(0.7,), b=(0.7,), c=(0.0,))  # trace 1.4
    with pytest.raises(InvalidDensity):
        XState(a=(1.2,), b=(-0.2,), c=(0.0,))  # negative population
    with pytest.raises(InvalidDensity):
        XState(a=(0.5,), b=(0.5,), c=(0.6,))  # coherence too large
    with pytest.raises(InvalidDensity):
        XState(a=(), b=(), c=())


@given(
    weights=st.lists(st.floats(0.01, 1.0), min_size=8, max_size=8),
    fractions=st.lists(st.floats(-1.0, 1.0), min_size=4, max_size=4),
)
def test_random_xstates_are_positive(weights, fractions):
    total = sum(weights)
    a = tuple(w / total for w in weights[:4])
    b = tuple(w / total for w in weights[4:])
    c = tuple(f * math.sqrt(ai * bi) for f, ai, bi in zip(fractions, a, b))
    x = XState(a, b, c)
    eigenvalues = np.linalg.eigvalsh(x.to_array())
    assert eigenvalues.min() >= -1e-12
    assert np.trace(x.to_array()) == pytest.approx(1.0, abs=1e-12)


def test_extract_from_sparse_density():
    layout = ModeLayout((flat_mode(1), flat_mode(2)))
    rho = SparseDensity(
        layout,
        {(0, 0): 0.4, (1, 1): 0.1, (2, 2): 0.15, (3, 3): 0.35, (0, 3): 0.2, (1, 2): -0.05},
    )
    x = extract_xstate(rho)
    assert x.a == (0.4, 0.1)
    assert x.b == (0.35, 0.15)
    assert x.c == (0.2, -0.05)


def test_extract_rejects_entries_off_the_x():
    layout = ModeLayout((flat_mode(1), flat_mode(2)))
    rho = SparseDensity(
        layout, {(0, 0): 0.5, (3, 3): 0.5, (0, 1): 0.01}
    )
    with pytest.raises(NotXState) as excinfo:
        extract_xstate(rho)
    assert (excinfo.value.row, excinfo.value.col) == (0, 1)


def test_extract_tolerates_junk_below_tol():
    layout = ModeLayout((flat_mode(1), flat_mode(2)))
    rho = SparseDensity(
        layout, {(0, 0): 0.5, (3, 3): 0.5, (0, 1): 1e-13}
    )
    x = extract_xstate(rho, tol=1e-12)
    assert x.a == (0.5, 0.0)
    with pytest.raises(NotXState):
        extract_xstate(rho, tol=1e-14)


# Frozen from a 60-digit evaluation of the block structure at
# N=3, n=2, p=q=1, theta=pi/6, mass=omega=1, D=0.6.
FROZEN_A = (
    0.7499354258227527,
    3.228639362298309e-05,
    3.228639362298309e-05,
    1.390001295157614e-09,
)
FROZEN_B1 = 0.25
FROZEN_C1 = 0.0028410558610745006


def test_build_block_matrix_frozen_triplets():
    spec = ScenarioSpec(3, 2, 1, 1, math.pi / 6)
    pair = bogoliubov(BlackHoleParams(1.0, 0.6, 1.0))
    x = build_block_matrix(spec, pair)
    assert x.half_dimension == 4
    for value, frozen in zip(x.a, FROZEN_A):
        assert value == pytest.approx(frozen, rel=1e-13)
    assert x.b == (0.0, pytest.approx(FROZEN_B1, rel=1e-15), 0.0, 0.0)
    assert x.c == (0.0, pytest.approx(FROZEN_C1, rel=1e-13), 0.0, 0.0)


def test_block_matrix_agrees_with_simulated_reduction():
    spec = ScenarioSpec(4, 3, 2, 1, 1.1)
    pair = bogoliubov(BlackHoleParams(1.0, 0.8, 1.0))
    from_blocks = build_block_matrix(spec, pair)
    from_oracle = extract_xstate(scenario_density(spec, pair))
    np.testing.assert_allclose(from_oracle.a, from_blocks.a, atol=1e-15)
    np.testing.assert_allclose(from_oracle.b, from_blocks.b, atol=1e-15)
    np.testing.assert_allclose(from_oracle.c, from_blocks.c, atol=1e-15)


@pytest.mark.parametrize("theta", [0.0, math.pi / 2])
def test_block_matrix_theta_endpoints(theta):
    spec = ScenarioSpec(3, 1, 0, 1, theta)
    pair = bogoliubov(BlackHoleParams(1.0, 0.4, 1.0))
    x = build_block_matrix(spec, pair)
    trace = math.fsum(x.a) + math.fsum(x.b)
    assert trace == pytest.approx(1.0, abs=1e-13)
    if theta == 0.0:
        assert max(x.b) == 0.0 and max(abs(v) for v in x.c) == 0.0
    else:
        assert x.b[1] == pytest.approx(1.0, abs=1e-15)


def test_block_matrix_scale_cap():
    pair = bogoliubov(BlackHoleParams(1.0, 0.5, 1.0))
    with pytest.raises(ScaleCap):
        build_block_matrix(ScenarioSpec(21, 3, 2, 1, 0.3), pair)
    with pytest.raises(ScaleCap):
        build_block_matrix(ScenarioSpec(20, 5, 3, 2, 0.3), pair)

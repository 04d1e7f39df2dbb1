"""Grid extraction of field intensities from kinetic-momentum commutators."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diraclab.constants import PhysicalConstants
from diraclab.errors import DomainError
from diraclab.lattice import (
    Grid3,
    PRESET_NAMES,
    commutator_field_extract,
    convergence_study,
    default_test_fields,
    gaussian_field,
    kinetic_momentum_apply,
    make_preset,
    plane_wave_field,
    validate_config,
)

K = PhysicalConstants()

# frozen: (hbar / h) sin(k h) for k = 1.3, h = 0.1
FROZEN_SYMBOL = 1.2963414261969486


def test_grid_geometry():
    grid = Grid3(n=9, h=0.25)
    assert grid.axis[0] == -1.0 and grid.axis[-1] == 1.0
    assert grid.axis[4] == 0.0
    inner = grid.interior_mask()
    assert inner.shape == (9, 9, 9)
    assert not inner[0].any() and not inner[-1].any()
    assert inner[4, 4, 4]


def test_grid_rejects_bad_parameters():
    with pytest.raises(DomainError):
        Grid3(n=8, h=0.1)
    with pytest.raises(DomainError):
        Grid3(n=7, h=0.1)
    with pytest.raises(DomainError):
        Grid3(n=9, h=-0.1)


def test_presets_and_validation():
    grid = Grid3(n=9, h=0.2)
    for name in PRESET_NAMES:
        validate_config(make_preset(name), grid, K)
    with pytest.raises(DomainError):
        make_preset("sideways")


def test_discrete_symbol_frozen():
    # central difference of exp(i k x) multiplies by (hbar / h) sin(k h)
    grid = Grid3(n=17, h=0.1)
    x, y, z = grid.meshgrid()
    tf = plane_wave_field((1.3, 0.0, 0.0))
    psi = tf.values(x, y, z)
    applied = kinetic_momentum_apply(1, make_preset("zero"), grid, psi, K)
    inner = grid.interior_mask()
    ratio = applied[inner] / psi[inner]
    assert np.max(np.abs(ratio - FROZEN_SYMBOL)) <= 1e-12
    assert abs(K.hbar * math.sin(1.3 * 0.1) / 0.1 - FROZEN_SYMBOL) == 0.0


@settings(max_examples=20, deadline=None)
@given(st.floats(-2, 2), st.floats(-2, 2))
def test_kinetic_momentum_linear(a, b):
    grid = Grid3(n=9, h=0.2)
    x, y, z = grid.meshgrid()
    f = plane_wave_field((0.9, -0.3, 0.4)).values(x, y, z)
    g = gaussian_field().values(x, y, z)
    cfg = make_preset("uniform_b")
    lhs = kinetic_momentum_apply(2, cfg, grid, a * f + b * g, K)
    rhs = (a * kinetic_momentum_apply(2, cfg, grid, f, K)
           + b * kinetic_momentum_apply(2, cfg, grid, g, K))
    inner = grid.interior_mask()
    assert np.nanmax(np.abs(lhs[inner] - rhs[inner])) <= 1e-12


def test_kinetic_momentum_constant_potential_pointwise():
    # with A = (-b0 y / 2, b0 x / 2, 0) the operator adds (e/C) A_j pointwise
    grid = Grid3(n=9, h=0.2)
    x, y, z = grid.meshgrid()
    psi = np.ones_like(x, dtype=complex)
    cfg = make_preset("uniform_b", b0=2.0)
    applied = kinetic_momentum_apply(2, cfg, grid, psi, K)
    inner = grid.interior_mask()
    want = (K.charge / K.c) * (2.0 * x / 2.0)  # second component of the gauge
    assert np.max(np.abs(applied[inner] - want[inner])) <= 1e-14


def test_extracted_uniform_intensity_coarse_grid():
    # even the coarse grid lands near the exact value
    grid = Grid3(n=9, h=0.2)
    res = commutator_field_extract(make_preset("uniform_b"), grid, constants=K)
    inner = res.interior
    vals = res.h_field[2][inner]
    assert np.isfinite(vals).all()
    b_ref = np.nanmean(vals)
    assert abs(b_ref - 1.0) <= 0.05


def test_extraction_discrete_uniform_b():
    grid = Grid3(n=17, h=0.1)
    res = commutator_field_extract(make_preset("uniform_b"), grid, constants=K)
    assert res.h_error <= 0.01
    assert res.e_error <= 0.01
    assert res.function_deviation <= 2.0 * max(res.h_error, res.e_error) + 1e-13
    vals = res.h_field[2][res.interior]
    assert np.nanmax(vals) - np.nanmin(vals) <= 2.0 * res.h_error + 1e-13


def test_extraction_analytic_is_exact_to_rounding():
    grid = Grid3(n=17, h=0.1)
    for name in ("uniform_b", "linear_phi"):
        res = commutator_field_extract(make_preset(name), grid, constants=K, mode="analytic")
        assert res.h_error <= 1e-12
        assert res.e_error <= 1e-12


def test_extraction_zero_preset_exact_zero():
    grid = Grid3(n=17, h=0.05)
    res = commutator_field_extract(make_preset("zero"), grid, constants=K)
    assert res.h_error == 0.0
    assert res.e_error == 0.0


def test_extraction_requires_three_test_functions():
    grid = Grid3(n=9, h=0.2)
    with pytest.raises(DomainError):
        commutator_field_extract(make_preset("zero"), grid,
                                 test_fields=default_test_fields()[:2], constants=K)


def test_convergence_second_order_uniform_b():
    study = convergence_study(make_preset("uniform_b"), (0.2, 0.1, 0.05), K)
    assert study.grid_sizes == (9, 17, 33)
    assert isinstance(study.order, float)
    assert abs(study.order - 2.0) <= 0.15
    assert study.errors[0] > study.errors[1] > study.errors[2]


def test_convergence_second_order_linear_phi():
    study = convergence_study(make_preset("linear_phi"), (0.2, 0.1, 0.05), K)
    assert isinstance(study.order, float)
    assert abs(study.order - 2.0) <= 0.15


def test_convergence_zero_preset_reports_exact():
    study = convergence_study(make_preset("zero"), (0.2, 0.1, 0.05), K)
    assert study.order == "exact"
    assert all(err == 0.0 for err in study.errors)


def test_convergence_rejects_bad_spacings():
    cfg = make_preset("uniform_b")
    with pytest.raises(DomainError):
        convergence_study(cfg, (0.2,), K)
    with pytest.raises(DomainError):
        convergence_study(cfg, (0.2, 0.15, 0.1), K)


def test_convergence_to_dict_layout():
    study = convergence_study(make_preset("zero"), (0.2, 0.1, 0.05), K)
    d = study.to_dict()
    assert list(d.keys()) == ["h", "n", "max_err", "order"]
    assert d["order"] == "exact"

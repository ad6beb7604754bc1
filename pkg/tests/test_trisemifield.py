import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from tripolar import spectra
from tripolar.errors import DivisorRealZero, GridMismatch, NegativeRealPart
from tripolar.spectra import DEFAULT_GRID, Grid, Spectrum
from tripolar.trisemifield import (
    TriCoeff, t_add, t_div, t_eq, t_is_zero, t_mul, t_recip, t_scale,
)

GRID = Grid(400, 440, 10)


def coeffs(min_q=0.0):
    return st.builds(
        lambda q, e: TriCoeff(q, Spectrum(GRID, e)),
        st.floats(min_q, 5.0),
        arrays(float, GRID.count, elements=st.floats(-5, 5)),
    )


def as_matrices(x):
    """Dual number q + p e as the lower-triangular matrix [[q, 0], [p, q]], per sample."""
    m = np.zeros((GRID.count, 2, 2))
    m[:, 0, 0] = m[:, 1, 1] = x.q
    m[:, 1, 0] = x.psi.samples
    return m


def from_matrices(m):
    assert np.allclose(m[:, 0, 0], m[:, 1, 1]) and np.allclose(m[:, 0, 1], 0.0)
    return TriCoeff(float(m[0, 0, 0]), Spectrum(GRID, m[:, 1, 0]))


@settings(max_examples=100, deadline=None)
@given(coeffs(), coeffs())
def test_mul_matches_matrix_oracle(x, y):
    expected = from_matrices(as_matrices(x) @ as_matrices(y))
    assert t_eq(t_mul(x, y), expected, 1e-12)


@settings(max_examples=100, deadline=None)
@given(coeffs(), coeffs(min_q=0.1))
def test_div_matches_matrix_oracle(x, y):
    expected = from_matrices(as_matrices(x) @ np.linalg.inv(as_matrices(y)))
    assert t_eq(t_div(x, y), expected, 1e-9)


@settings(max_examples=100, deadline=None)
@given(coeffs(), coeffs(), coeffs())
def test_semifield_laws(x, y, z):
    assert t_eq(t_add(t_add(x, y), z), t_add(x, t_add(y, z)), 1e-12)
    assert t_eq(t_add(x, y), t_add(y, x), 0.0)
    assert t_eq(t_mul(t_mul(x, y), z), t_mul(x, t_mul(y, z)), 1e-9)
    assert t_eq(t_mul(x, y), t_mul(y, x), 0.0)
    assert t_eq(t_mul(x, t_add(y, z)), t_add(t_mul(x, y), t_mul(x, z)), 1e-9)


@settings(max_examples=100, deadline=None)
@given(coeffs(min_q=0.2))
def test_reciprocal_gives_one(y):
    assert t_eq(t_mul(y, t_recip(y)), TriCoeff.one(GRID), 1e-12)


def test_small_worked_product():
    x = TriCoeff(2.0, spectra.constant(GRID, 3.0))
    y = TriCoeff(4.0, spectra.constant(GRID, -1.0))
    p = x * y
    assert p.q == 8.0 and np.all(p.psi.samples == 10.0)
    d = x / y
    assert d.q == 0.5 and np.allclose(d.psi.samples, (4 * 3 - 2 * -1) / 16)


def test_epsilon_squared_is_zero():
    e = TriCoeff(0.0, spectra.constant(GRID, 1.0))
    assert t_is_zero(e * e, 0.0)


def test_errors():
    with pytest.raises(NegativeRealPart):
        TriCoeff(-0.1, spectra.zero(GRID))
    with pytest.raises(NegativeRealPart):
        t_scale(TriCoeff.one(GRID), -1.0)
    eps_only = TriCoeff(0.0, spectra.constant(GRID, 1.0))
    with pytest.raises(DivisorRealZero):
        t_recip(eps_only)
    with pytest.raises(DivisorRealZero):
        t_div(TriCoeff.one(GRID), eps_only)
    with pytest.raises(GridMismatch):
        t_add(TriCoeff.one(GRID), TriCoeff.one(DEFAULT_GRID))


def test_scale_and_repr():
    x = t_scale(TriCoeff(1.5, spectra.constant(GRID, 2.0)), 2.0)
    assert x.q == 3.0 and np.all(x.psi.samples == 4.0)
    assert repr(TriCoeff.real(2.0, GRID)) == "[2]"

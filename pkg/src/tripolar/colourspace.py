"""The tri-polar colour space.

A colour is ``R[t_R] + G[t_G] + B[t_B]`` with triangular coefficients on the
three poles.  Two colours are the same colour when they differ by a grey
element ``R[a] + G[a] + B[a]`` (the cancellation law), so every comparison
here is made modulo that congruence.  Colours whose three real parts agree
form the singular ideal; modulo it, division is always possible.

Colours store their coefficients as arrays with the pole axis first:
``q`` has shape (3,) and ``eps`` shape (3, n).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import (
    GridMismatch,
    NegativeRealPart,
    PolarizationFailure,
    SingularDivisor,
    SquareMismatch,
)
from .poles import GROUP_SQUARES, POLES, LatinSquare, Pole, square as get_square
from .spectra import DEFAULT_GRID, Grid, Spectrum
from .trisemifield import DEFAULT_TOL, TriCoeff, t_recip

_BASIS = np.array(
    [[1.0, 1.0], [-1.0, 1.0], [0.0, -2.0]]
) / np.array([math.sqrt(2.0), math.sqrt(6.0)])


@dataclass(frozen=True, eq=False)
class Colour:
    square: LatinSquare
    q: np.ndarray
    eps: np.ndarray
    grid: Grid = DEFAULT_GRID

    def __post_init__(self):
        sq = get_square(self.square)
        if sq.index not in GROUP_SQUARES:
            raise SquareMismatch(
                f"colour multiplication needs a square with an identity pole, got {sq.index}"
            )
        q = np.ascontiguousarray(self.q, dtype=float)
        eps = np.ascontiguousarray(self.eps, dtype=float)
        if q.shape != (3,) or eps.shape != (3, self.grid.count):
            raise GridMismatch(
                f"expected q of shape (3,) and eps of shape (3, {self.grid.count}), "
                f"got {q.shape} and {eps.shape}"
            )
        if not math.isfinite(float(q.sum()) + float(eps.sum())):
            raise ValueError("colour coefficients must be finite")
        if q.min() < 0:
            raise NegativeRealPart(f"real parts must be >= 0, got {q.tolist()}")
        q.setflags(write=False)
        eps.setflags(write=False)
        object.__setattr__(self, "square", sq)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "eps", eps)

    @classmethod
    def from_coeffs(cls, R: TriCoeff, G: TriCoeff, B: TriCoeff, square=1) -> "Colour":
        grid = R.grid
        if G.grid != grid or B.grid != grid:
            raise GridMismatch("all three coefficients must share one grid")
        return cls(
            square,
            np.array([R.q, G.q, B.q]),
            np.stack([R.psi.samples, G.psi.samples, B.psi.samples]),
            grid,
        )

    def coeff(self, p: Pole) -> TriCoeff:
        return TriCoeff(self.q[p], Spectrum(self.grid, self.eps[p]))

    __getitem__ = coeff

    def _like(self, q, eps) -> "Colour":
        return Colour(self.square, q, eps, self.grid)

    def __add__(self, other):
        return c_add(self, other) if isinstance(other, Colour) else NotImplemented

    def __sub__(self, other):
        return c_sub(self, other) if isinstance(other, Colour) else NotImplemented

    def __neg__(self):
        return c_neg(self)

    def __mul__(self, other):
        return c_mul(self, other) if isinstance(other, Colour) else NotImplemented

    def __truediv__(self, other):
        return c_div(self, other) if isinstance(other, Colour) else NotImplemented

    def conj(self) -> "Colour":
        return c_conj(self)

    def __repr__(self):
        parts = []
        for p in POLES:
            e = float(np.max(np.abs(self.eps[p])))
            parts.append(f"{p}[{self.q[p]:g}" + (f" + <|eps|<={e:.3g}> e]" if e else "]"))
        return " + ".join(parts) + f" (square {self.square.index})"


def colour(r=0.0, g=0.0, b=0.0, square=1, grid: Grid | None = None) -> Colour:
    """Build a colour from three coefficients; plain numbers mean zero epsilon part."""
    coeffs = [r, g, b]
    if grid is None:
        grid = next((c.grid for c in coeffs if isinstance(c, TriCoeff)), DEFAULT_GRID)
    coeffs = [c if isinstance(c, TriCoeff) else TriCoeff.real(c, grid) for c in coeffs]
    return Colour.from_coeffs(*coeffs, square=square)


def zero_colour(grid: Grid = DEFAULT_GRID, square=1) -> Colour:
    return Colour(square, np.zeros(3), np.zeros((3, grid.count)), grid)


def unit(grid: Grid = DEFAULT_GRID, square=1) -> Colour:
    """Multiplicative unit: the square's identity pole with coefficient [1]."""
    sq = get_square(square)
    q = np.zeros(3)
    q[sq.identity_pole()] = 1.0
    return Colour(sq, q, np.zeros((3, grid.count)), grid)


def grey(t: TriCoeff, square=1) -> Colour:
    """The grey element ``R[t] + G[t] + B[t]``; congruent to zero."""
    return colour(t, t, t, square=square)


def x_polarized(p: Pole, t: TriCoeff, square=1) -> Colour:
    x = zero_colour(t.grid, square)
    q = x.q.copy()
    eps = x.eps.copy()
    q[p] = t.q
    eps[p] = t.psi.samples
    return x._like(q, eps)


def _check_pair(x: Colour, y: Colour) -> None:
    if x.square.index != y.square.index:
        raise SquareMismatch(
            f"colours use different Latin squares: {x.square.index} vs {y.square.index}"
        )
    if x.grid != y.grid:
        raise GridMismatch(f"colours live on different grids: {x.grid} vs {y.grid}")


def canonicalize(x: Colour) -> Colour:
    """Representative with smallest real part 0 and pole-mean epsilon part 0."""
    q, eps = kernels.canonical_form(x.q, x.eps)
    return x._like(q, eps)


def is_canonical(x: Colour, tol: float = DEFAULT_TOL) -> bool:
    return abs(float(x.q.min())) <= tol and bool(np.max(np.abs(x.eps.mean(axis=0))) <= tol)


def _max_gap(x: Colour, y: Colour) -> float:
    return max(float(np.max(np.abs(x.q - y.q))), float(np.max(np.abs(x.eps - y.eps))))


def eq_mod_O(x: Colour, y: Colour, tol: float = DEFAULT_TOL) -> bool:
    """Equal up to a grey summand (the cancellation-law congruence)."""
    _check_pair(x, y)
    return _max_gap(canonicalize(x), canonicalize(y)) <= tol


def eq_mod_S(x: Colour, y: Colour, tol: float = DEFAULT_TOL) -> bool:
    """Equal in the factor field: only the chromatic residues of the real parts count."""
    _check_pair(x, y)
    return abs(phi_chroma(x) - phi_chroma(y)) <= tol


def c_add(x: Colour, y: Colour) -> Colour:
    _check_pair(x, y)
    return x._like(x.q + y.q, x.eps + y.eps)


def c_neg(x: Colour) -> Colour:
    # each pole's coefficient moves onto the other two poles
    a, b = [1, 0, 0], [2, 2, 1]
    return x._like(x.q[a] + x.q[b], x.eps[a] + x.eps[b])


def c_sub(x: Colour, y: Colour) -> Colour:
    return c_add(x, c_neg(y))


def c_mul(x: Colour, y: Colour) -> Colour:
    _check_pair(x, y)
    q, eps = kernels.star_product(x.square.index_table(), x.q, x.eps, y.q, y.eps)
    return x._like(q, eps)


def c_scale(x: Colour, t: TriCoeff) -> Colour:
    """Multiply every coefficient by the same triangular coefficient."""
    if t.grid != x.grid:
        raise GridMismatch("scalar and colour live on different grids")
    eps = x.q[:, None] * t.psi.samples[None, :] + t.q * x.eps
    return x._like(x.q * t.q, eps)


def _require_square_one(x: Colour, what: str) -> None:
    if x.square.index != 1:
        raise SquareMismatch(
            f"{what} is only defined for square 1 (projection onto the R axis), "
            f"got square {x.square.index}"
        )


def c_conj(x: Colour) -> Colour:
    _require_square_one(x, "conjugation")
    order = [Pole.R, Pole.B, Pole.G]
    return x._like(x.q[order], x.eps[order])


def polarization_residue(x: Colour, p: Pole) -> float:
    """How far ``x`` is from having a representative supported on pole ``p`` alone.

    Zero exactly when the two other coefficients coincide and do not exceed
    the real part on ``p``.
    """
    a, b = (k for k in POLES if k != p)
    gap = max(abs(x.q[a] - x.q[b]), float(np.max(np.abs(x.eps[a] - x.eps[b]))))
    shortfall = max(0.0, 0.5 * (x.q[a] + x.q[b]) - x.q[p])
    return max(gap, shortfall)


def is_x_polarized(x: Colour, p: Pole, tol: float = DEFAULT_TOL) -> bool:
    return polarization_residue(x, p) <= tol


def polarized_coefficient(x: Colour, p: Pole) -> TriCoeff:
    """Coefficient of the ``p``-supported representative of ``x`` (assumes polarization)."""
    a, b = (k for k in POLES if k != p)
    q = x.q[p] - 0.5 * (x.q[a] + x.q[b])
    psi = x.eps[p] - 0.5 * (x.eps[a] + x.eps[b])
    return TriCoeff(max(q, 0.0), Spectrum(x.grid, psi))


def _scaled_tol(x: Colour, tol: float) -> float:
    return tol * max(1.0, float(np.max(np.abs(x.q))), float(np.max(np.abs(x.eps))))


def theta(y: Colour, tol: float = DEFAULT_TOL) -> TriCoeff:
    """The coefficient ``Θ`` with ``y * conj(y) = R[Θ]`` modulo grey.

    Its real part is half the sum of squared pairwise differences of the
    real parts of ``y``.  Computed on the canonical representative, which
    leaves ``Θ`` unchanged and avoids cancellation between large terms.
    """
    _require_square_one(y, "theta")
    y = canonicalize(y)
    prod = c_mul(y, c_conj(y))
    residue = polarization_residue(prod, Pole.R)
    if residue > _scaled_tol(prod, tol):
        raise PolarizationFailure(
            f"y * conj(y) is not R-polarized: G/B residue {residue:.3g}"
        )
    return polarized_coefficient(prod, Pole.R)


def is_achromatic(x: Colour, tol: float = DEFAULT_TOL) -> bool:
    c = canonicalize(x)
    return float(np.max(np.abs(c.q))) <= tol and float(np.max(np.abs(c.eps))) <= tol


def is_singular(x: Colour, tol: float = DEFAULT_TOL) -> bool:
    """True when all three real parts agree; epsilon parts do not matter."""
    return float(x.q.max() - x.q.min()) <= tol


def c_recip(y: Colour, tol: float = DEFAULT_TOL) -> Colour:
    """``conj(y) / Θ`` computed on the canonical representative of ``y``."""
    _require_square_one(y, "division")
    if is_singular(y, tol):
        raise SingularDivisor("cannot divide by a singular colour (equal real parts)")
    y = canonicalize(y)
    th = theta(y, tol)
    if th.q <= 0:
        raise SingularDivisor("cannot divide by a singular colour (Θ has zero real part)")
    result = c_scale(c_conj(y), t_recip(th))
    check = c_mul(result, y)
    if not eq_mod_S(check, unit(y.grid, y.square), tol):
        raise SingularDivisor(
            f"divisor is numerically singular: y * (1/y) misses the unit by "
            f"{abs(phi_chroma(check) - 1):.3g}"
        )
    return result


def c_div(x: Colour, y: Colour, tol: float = DEFAULT_TOL) -> Colour:
    _check_pair(x, y)
    return c_mul(x, c_recip(y, tol))


def phi_chroma(x: Colour) -> complex:
    """Chromatic residue ``r + g w + b w^2`` (w a primitive cube root of unity).

    For squares 2 and 3 the roots are assigned through the square's own
    character, so the identity pole maps to 1.
    """
    char = x.square.character()
    return complex(sum(char[p] * x.q[p] for p in POLES))


@dataclass(frozen=True, eq=False)
class BicomplexValue:
    """``re + eps * e`` with complex ``re``, complex samples ``eps`` and ``e*e = 0``."""

    re: complex
    eps: np.ndarray

    def __add__(self, other):
        return BicomplexValue(self.re + other.re, self.eps + other.eps)

    def __neg__(self):
        return BicomplexValue(-self.re, -self.eps)

    def __mul__(self, other):
        return BicomplexValue(
            self.re * other.re, self.re * other.eps + other.re * self.eps
        )

    def conjugate(self):
        return BicomplexValue(self.re.conjugate(), np.conj(self.eps))

    def approx_eq(self, other, tol: float = DEFAULT_TOL) -> bool:
        return abs(self.re - other.re) <= tol and bool(
            np.max(np.abs(self.eps - other.eps)) <= tol
        )

    def is_zero(self, tol: float = DEFAULT_TOL) -> bool:
        return abs(self.re) <= tol and bool(np.max(np.abs(self.eps)) <= tol)


def phi_bicomplex(x: Colour) -> BicomplexValue:
    char = x.square.character()
    w = np.array([char[p] for p in POLES])
    return BicomplexValue(complex(w @ x.q), w @ x.eps)


def quotient_determinant(y: Colour) -> float:
    """Determinant of ``z -> y * z`` on real parts, taken modulo the grey direction.

    Uses only the multiplication table, never conjugation, so it gives an
    independent singularity test for every group square.
    """
    table = y.square.index_table()
    m = np.zeros((3, 3))
    for i in POLES:
        for j in POLES:
            m[table[i, j], j] += y.q[i]
    return float(np.linalg.det(_BASIS.T @ m @ _BASIS))


# -- JSON -------------------------------------------------------------------


def _num(v: float) -> str:
    return "%.17g" % (float(v) + 0.0)


def _grid_json(grid: Grid) -> str:
    return f'{{"start":{_num(grid.start)},"stop":{_num(grid.stop)},"step":{_num(grid.step)}}}'


def to_json(x: Colour) -> str:
    """Serialize with 17 significant digits so floats round-trip exactly."""
    parts = [f'"square":{x.square.index}', f'"grid":{_grid_json(x.grid)}']
    for p in POLES:
        eps = ",".join(_num(v) for v in x.eps[p])
        parts.append(f'"{p}":{{"q":{_num(x.q[p])},"eps":[{eps}]}}')
    return "{" + ",".join(parts) + "}"


def from_json(text_or_obj) -> Colour:
    obj = json.loads(text_or_obj) if isinstance(text_or_obj, (str, bytes)) else text_or_obj
    try:
        g = obj["grid"]
        grid = Grid(g["start"], g["stop"], g["step"])
        q = [obj[p.name]["q"] for p in POLES]
        eps = [obj[p.name]["eps"] for p in POLES]
        sq = obj["square"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed colour JSON: missing {exc}") from None
    if any(len(e) != grid.count for e in eps):
        raise GridMismatch(f"eps arrays must have {grid.count} entries for grid {grid}")
    return Colour(sq, np.array(q, dtype=float), np.array(eps, dtype=float), grid)

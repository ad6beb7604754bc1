"""Triangular coefficients ``q + psi(f) e`` with ``e*e = 0`` and ``q >= 0``.

These are dual numbers whose infinitesimal part is a whole spectrum.  They
form a semi-field with zero: addition never leaves the set, and every
coefficient with ``q > 0`` has a reciprocal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import spectra
from .errors import DivisorRealZero, GridMismatch, NegativeRealPart
from .spectra import DEFAULT_GRID, Grid, Spectrum

DEFAULT_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class TriCoeff:
    q: float
    psi: Spectrum

    def __post_init__(self):
        q = float(self.q)
        if not math.isfinite(q):
            raise ValueError("real part must be finite")
        if q < 0:
            raise NegativeRealPart(f"real part must be >= 0, got {q!r}")
        object.__setattr__(self, "q", q)

    @property
    def grid(self) -> Grid:
        return self.psi.grid

    @classmethod
    def real(cls, q: float, grid: Grid = DEFAULT_GRID) -> "TriCoeff":
        return cls(q, spectra.zero(grid))

    @classmethod
    def zero(cls, grid: Grid = DEFAULT_GRID) -> "TriCoeff":
        return cls.real(0.0, grid)

    @classmethod
    def one(cls, grid: Grid = DEFAULT_GRID) -> "TriCoeff":
        return cls.real(1.0, grid)

    def __add__(self, other):
        return t_add(self, other) if isinstance(other, TriCoeff) else NotImplemented

    def __mul__(self, other):
        return t_mul(self, other) if isinstance(other, TriCoeff) else NotImplemented

    def __truediv__(self, other):
        return t_div(self, other) if isinstance(other, TriCoeff) else NotImplemented

    def __repr__(self):
        if self.psi.is_zero():
            return f"[{self.q:g}]"
        return f"[{self.q:g} + {self.psi!r} e]"


def _same_grid(x: TriCoeff, y: TriCoeff) -> None:
    if x.grid != y.grid:
        raise GridMismatch(f"coefficients live on different grids: {x.grid} vs {y.grid}")


def t_add(x: TriCoeff, y: TriCoeff) -> TriCoeff:
    _same_grid(x, y)
    return TriCoeff(x.q + y.q, x.psi + y.psi)


def t_mul(x: TriCoeff, y: TriCoeff) -> TriCoeff:
    _same_grid(x, y)
    eps = x.q * y.psi.samples + y.q * x.psi.samples
    return TriCoeff(x.q * y.q, Spectrum(x.grid, eps))


def t_div(x: TriCoeff, y: TriCoeff) -> TriCoeff:
    _same_grid(x, y)
    if y.q == 0:
        raise DivisorRealZero("cannot divide by a coefficient with zero real part")
    eps = (y.q * x.psi.samples - x.q * y.psi.samples) / (y.q * y.q)
    return TriCoeff(x.q / y.q, Spectrum(x.grid, eps))


def t_recip(y: TriCoeff) -> TriCoeff:
    if y.q == 0:
        raise DivisorRealZero("coefficient with zero real part has no reciprocal")
    return TriCoeff(1.0 / y.q, Spectrum(y.grid, -y.psi.samples / (y.q * y.q)))


def t_scale(x: TriCoeff, c: float) -> TriCoeff:
    if c < 0:
        raise NegativeRealPart(f"scale factor must be >= 0, got {c!r}")
    return TriCoeff(x.q * c, x.psi * c)


def t_eq(x: TriCoeff, y: TriCoeff, tol: float = DEFAULT_TOL) -> bool:
    _same_grid(x, y)
    return abs(x.q - y.q) <= tol and bool(
        np.max(np.abs(x.psi.samples - y.psi.samples)) <= tol
    )


def t_is_zero(x: TriCoeff, tol: float = DEFAULT_TOL) -> bool:
    return abs(x.q) <= tol and x.psi.is_zero(tol)

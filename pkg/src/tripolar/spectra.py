"""Sampled real functions of wavelength on a uniform grid.

A :class:`Spectrum` is the epsilon part of every triangular coefficient.
Values may be negative; NaN and infinities are rejected on construction.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import GridMismatch, MalformedCsv, NonPositiveSigma, OutOfSpan

# relative slack when deciding how many samples fit between start and stop
_COUNT_SLACK = 1e-9


@dataclass(frozen=True)
class Grid:
    """Uniform wavelength grid in nm: ``start, start+step, ...`` up to ``stop``."""

    start: float = 380.0
    stop: float = 780.0
    step: float = 5.0

    def __post_init__(self):
        for name in ("start", "stop", "step"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"grid {name} must be finite")
            object.__setattr__(self, name, value)
        if self.step <= 0:
            raise ValueError("grid step must be positive")
        if not self.start < self.stop:
            raise ValueError("grid start must be below stop")
        if self.count < 2:
            raise ValueError("grid needs at least two samples")

    @property
    def count(self) -> int:
        span = (self.stop - self.start) / self.step
        return int(math.floor(span + _COUNT_SLACK)) + 1

    @property
    def width(self) -> float:
        """Distance between the first and last sample."""
        return self.step * (self.count - 1)

    def positions(self) -> np.ndarray:
        return self.start + self.step * np.arange(self.count, dtype=float)

    @classmethod
    def parse(cls, text: str) -> "Grid":
        """Read ``start:stop:step``."""
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"grid must look like start:stop:step, got {text!r}")
        return cls(*(float(p) for p in parts))

    def __str__(self):
        return f"{self.start:g}:{self.stop:g}:{self.step:g}"


DEFAULT_GRID = Grid()


def _check_same_grid(a: "Spectrum", b: "Spectrum") -> None:
    if a.grid != b.grid:
        raise GridMismatch(f"spectra live on different grids: {a.grid} vs {b.grid}")


@dataclass(frozen=True, eq=False)
class Spectrum:
    grid: Grid
    samples: np.ndarray

    def __post_init__(self):
        values = np.array(self.samples, dtype=float)
        if values.shape != (self.grid.count,):
            raise GridMismatch(
                f"expected {self.grid.count} samples for grid {self.grid}, got shape {values.shape}"
            )
        if not math.isfinite(float(values.sum())):
            raise ValueError("spectrum samples must be finite")
        values.setflags(write=False)
        object.__setattr__(self, "samples", values)

    def __add__(self, other):
        if not isinstance(other, Spectrum):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other):
        if not isinstance(other, Spectrum):
            return NotImplemented
        return sub(self, other)

    def __neg__(self):
        return Spectrum(self.grid, -self.samples)

    def __mul__(self, c):
        if isinstance(c, Spectrum):
            return NotImplemented
        return scale(self, c)

    __rmul__ = __mul__

    def __len__(self):
        return self.grid.count

    def __repr__(self):
        return f"Spectrum(grid={self.grid}, max|.|={float(np.max(np.abs(self.samples))):.6g})"

    def is_zero(self, tol: float = 0.0) -> bool:
        return bool(np.max(np.abs(self.samples)) <= tol)


def zero(grid: Grid = DEFAULT_GRID) -> Spectrum:
    return Spectrum(grid, np.zeros(grid.count))


def constant(grid: Grid, value: float) -> Spectrum:
    return Spectrum(grid, np.full(grid.count, float(value)))


def gaussian(grid: Grid, mu: float, sigma: float, amp: float = 1.0) -> Spectrum:
    """``amp * exp(-(f - mu)^2 / (2 sigma^2))`` sampled on ``grid``."""
    if not sigma > 0:
        raise NonPositiveSigma(f"sigma must be positive, got {sigma}")
    f = grid.positions()
    return Spectrum(grid, amp * np.exp(-((f - mu) ** 2) / (2.0 * sigma * sigma)))


def add(a: Spectrum, b: Spectrum) -> Spectrum:
    _check_same_grid(a, b)
    return Spectrum(a.grid, a.samples + b.samples)


def sub(a: Spectrum, b: Spectrum) -> Spectrum:
    _check_same_grid(a, b)
    return Spectrum(a.grid, a.samples - b.samples)


def scale(a: Spectrum, c: float) -> Spectrum:
    return Spectrum(a.grid, a.samples * float(c))


def integrate(s: Spectrum) -> float:
    """Trapezoidal area under the sampled curve."""
    return float(np.trapezoid(s.samples, dx=s.grid.step))


def peak(s: Spectrum) -> tuple[float, float]:
    """(wavelength, amplitude) of the largest sample; ties go to the lowest wavelength."""
    i = int(np.argmax(s.samples))
    return float(s.grid.positions()[i]), float(s.samples[i])


def approx_eq(a: Spectrum, b: Spectrum, tol: float = 1e-9) -> bool:
    _check_same_grid(a, b)
    return bool(np.max(np.abs(a.samples - b.samples)) <= tol)


def resample_linear(s: Spectrum, grid: Grid) -> Spectrum:
    return _interp(s.grid.positions(), s.samples, grid)


def _interp(f: np.ndarray, values: np.ndarray, grid: Grid) -> Spectrum:
    target = grid.positions()
    slack = 1e-9 * max(1.0, abs(f[-1]))
    if target[0] < f[0] - slack or target[-1] > f[-1] + slack:
        raise OutOfSpan(
            f"target grid {grid} leaves source span [{f[0]:g}, {f[-1]:g}]"
        )
    return Spectrum(grid, np.interp(target, f, values))


def _read_rows(text: str, origin: str) -> tuple[np.ndarray, np.ndarray]:
    lines = text.splitlines()
    if not lines or lines[0].lstrip("\ufeff").strip() != "f,value":
        raise MalformedCsv(f"{origin}: header must be exactly 'f,value'")
    fs, vs = [], []
    for lineno, row in enumerate(csv.reader(lines[1:]), start=2):
        if not row:
            continue
        if len(row) != 2:
            raise MalformedCsv(f"{origin}:{lineno}: expected two columns, got {len(row)}")
        try:
            f, v = float(row[0]), float(row[1])
        except ValueError:
            raise MalformedCsv(f"{origin}:{lineno}: not a number: {row!r}") from None
        if not (math.isfinite(f) and math.isfinite(v)):
            raise MalformedCsv(f"{origin}:{lineno}: non-finite value")
        if fs and f <= fs[-1]:
            raise MalformedCsv(f"{origin}:{lineno}: f column must be strictly ascending")
        fs.append(f)
        vs.append(v)
    if len(fs) < 2:
        raise MalformedCsv(f"{origin}: need at least two rows")
    return np.array(fs), np.array(vs)


def parse_csv(text: str, grid: Grid | None = None, resample: bool = False,
              origin: str = "<csv>") -> Spectrum:
    f, values = _read_rows(text, origin)
    if grid is None:
        steps = np.diff(f)
        if not np.allclose(steps, steps[0], rtol=1e-9, atol=1e-9):
            raise MalformedCsv(f"{origin}: rows are not uniformly spaced and no grid was given")
        grid = Grid(f[0], f[-1], float(steps[0]))
    target = grid.positions()
    if len(f) == len(target) and np.allclose(f, target, rtol=0.0, atol=1e-9 * grid.step):
        return Spectrum(grid, values)
    if not resample:
        raise GridMismatch(f"{origin}: sample positions do not match grid {grid}")
    return _interp(f, values, grid)


def from_csv(path, grid: Grid | None = None, resample: bool = False) -> Spectrum:
    """Load a ``f,value`` CSV.

    With ``grid`` given, the rows must sit exactly on it unless ``resample``
    is set, in which case they are linearly interpolated onto it.
    """
    path = Path(path)
    return parse_csv(path.read_text(encoding="utf-8"), grid, resample, origin=str(path))


def format_csv(s: Spectrum) -> str:
    out = io.StringIO()
    out.write("f,value\n")
    for f, v in zip(s.grid.positions(), s.samples):
        out.write(f"{float(f)!r},{float(v)!r}\n")
    return out.getvalue()


def to_csv(s: Spectrum, path) -> None:
    Path(path).write_text(format_csv(s), encoding="utf-8", newline="\n")

"""Stimulus curves and hue / saturation / brightness read-outs for colours.

The default sensitivity curves are gaussian stand-ins (610, 540, 450 nm,
sigma 30 nm).  They are not physiological data.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from . import spectra
from .colourspace import Colour, canonicalize
from .errors import GridMismatch, NoPositivePeak
from .poles import POLES, Pole
from .spectra import DEFAULT_GRID, Grid, Spectrum

DEFAULT_CENTRES = {Pole.R: 610.0, Pole.G: 540.0, Pole.B: 450.0}
DEFAULT_SIGMA = 30.0


@dataclass(frozen=True)
class RenderModel:
    sensitivity: dict

    @property
    def grid(self) -> Grid:
        return self.sensitivity[Pole.R].grid

    @classmethod
    def default(cls, grid: Grid = DEFAULT_GRID) -> "RenderModel":
        return cls({p: spectra.gaussian(grid, DEFAULT_CENTRES[p], DEFAULT_SIGMA) for p in POLES})


@dataclass(frozen=True)
class HsbReport:
    hue_nm: float | None
    brightness_energy: float
    brightness_peak: float
    saturation: float | None
    swatch: str

    def to_json(self) -> str:
        return json.dumps(
            {
                "hue_nm": self.hue_nm,
                "energy": self.brightness_energy,
                "peak": self.brightness_peak,
                "saturation": self.saturation,
                "swatch": self.swatch,
            }
        )


def stimulus_curve(x: Colour, model: RenderModel | None = None) -> Spectrum:
    """``sum_X q_X * S_X + psi_X`` over the canonical form of ``x``.

    The canonical epsilon parts have zero pole-mean, so their sum vanishes
    and only the real parts shape the curve.
    """
    model = model or RenderModel.default(x.grid)
    if model.grid != x.grid:
        raise GridMismatch(f"render model grid {model.grid} differs from colour grid {x.grid}")
    c = canonicalize(x)
    total = np.zeros(x.grid.count)
    for p in POLES:
        total += c.q[p] * model.sensitivity[p].samples + c.eps[p]
    return Spectrum(x.grid, total)


def _positive_peak(s: Spectrum) -> tuple[int, float]:
    i = int(np.argmax(s.samples))
    amp = float(s.samples[i])
    if amp <= 0:
        raise NoPositivePeak("curve has no positive maximum")
    return i, amp


def hue(s: Spectrum) -> float:
    """Wavelength (nm) of the curve's maximum."""
    i, _ = _positive_peak(s)
    return float(s.grid.positions()[i])


def brightness(s: Spectrum) -> tuple[float, float]:
    """(area under the curve, peak amplitude)."""
    return spectra.integrate(s), spectra.peak(s)[1]


def fwhm(s: Spectrum) -> float:
    """Width of the contiguous band around the peak where the curve is at least half the peak.

    Crossings are located by linear interpolation between samples; a band
    that runs into a grid edge stops there.
    """
    i, amp = _positive_peak(s)
    half = 0.5 * amp
    v = s.samples
    f = s.grid.positions()
    lo = i
    while lo > 0 and v[lo - 1] >= half:
        lo -= 1
    hi = i
    while hi < len(v) - 1 and v[hi + 1] >= half:
        hi += 1
    left = f[lo]
    if lo > 0:
        left = f[lo - 1] + (half - v[lo - 1]) / (v[lo] - v[lo - 1]) * s.grid.step
    right = f[hi]
    if hi < len(v) - 1:
        right = f[hi] + (v[hi] - half) / (v[hi] - v[hi + 1]) * s.grid.step
    return float(right - left)


def saturation(s: Spectrum) -> float:
    """``1 - FWHM / grid width``, clamped to [0, 1]."""
    return float(np.clip(1.0 - fwhm(s) / s.grid.width, 0.0, 1.0))


def srgb_swatch(x: Colour) -> str:
    """Preview of the canonical real parts as ``#RRGGBB`` (max-normalised, gamma 1/2.2)."""
    q = canonicalize(x).q
    top = float(q.max())
    if top <= 0:
        return "#000000"
    levels = np.round(255.0 * (q / top) ** (1.0 / 2.2)).astype(int)
    return "#" + "".join(f"{int(v):02X}" for v in levels)


def report(x: Colour, model: RenderModel | None = None) -> tuple[Spectrum, HsbReport]:
    """Stimulus curve and its descriptors.

    Hue and saturation are reported as ``None`` when the curve has no
    positive maximum (for instance for grey colours).
    """
    curve = stimulus_curve(x, model)
    energy, amp = brightness(curve)
    try:
        h, sat = hue(curve), saturation(curve)
    except NoPositivePeak:
        h = sat = None
    return curve, HsbReport(h, energy, amp, sat, srgb_swatch(x))

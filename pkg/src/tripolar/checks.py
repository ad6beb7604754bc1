"""Seeded randomized property suites behind ``tripolar check``.

Every case draws from ``numpy.random.default_rng([seed, property, case])``,
so a report depends only on the seed and case count.  A failing property
is shrunk (epsilon parts dropped, real parts rounded) before it is reported.
"""

from __future__ import annotations

import dataclasses
import itertools
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import colourspace as cs
from . import poles as pl
from . import spectra
from .colourspace import Colour
from .errors import SingularDivisor
from .poles import POLES, Pole
from .spectra import Grid, Spectrum
from .trisemifield import TriCoeff, t_add, t_div, t_eq, t_mul, t_recip

# ---------------------------------------------------------------------------
# random inputs


def random_spectrum(rng: np.random.Generator, grid: Grid, scale: float = 1.0) -> Spectrum:
    """A bump plus noise, occasionally flat zero."""
    if rng.random() < 0.1:
        return spectra.zero(grid)
    mu = rng.uniform(grid.start, grid.stop)
    sigma = rng.uniform(5.0, 80.0)
    bump = spectra.gaussian(grid, mu, sigma, rng.normal(0.0, scale)).samples
    noise = rng.normal(0.0, 0.1 * scale, grid.count)
    return Spectrum(grid, bump + noise)


def random_q(rng: np.random.Generator, high: float = 3.0) -> float:
    return 0.0 if rng.random() < 0.1 else float(rng.uniform(0.0, high))


def random_coeff(rng, grid: Grid, positive: bool = False) -> TriCoeff:
    q = float(rng.uniform(0.2, 3.0)) if positive else random_q(rng)
    return TriCoeff(q, random_spectrum(rng, grid))


def random_colour(rng, grid: Grid, square=1) -> Colour:
    return cs.colour(*(random_coeff(rng, grid) for _ in POLES), square=square)


def random_grey(rng, grid: Grid, square=1) -> Colour:
    return cs.grey(random_coeff(rng, grid), square=square)


def random_singular(rng, grid: Grid, square=1) -> Colour:
    """Equal real parts, independent (and large) epsilon parts."""
    a = random_q(rng)
    return cs.colour(
        *(TriCoeff(a, random_spectrum(rng, grid, scale=10.0)) for _ in POLES), square=square
    )


def random_nonsingular(rng, grid: Grid, square=1, margin: float = 0.25) -> Colour:
    while True:
        y = random_colour(rng, grid, square)
        if float(y.q.max() - y.q.min()) >= margin:
            return y


def random_mixed(rng, grid: Grid, square=1) -> Colour:
    """Half singular, half generic."""
    if rng.random() < 0.5:
        return random_singular(rng, grid, square)
    return random_colour(rng, grid, square)


# ---------------------------------------------------------------------------
# operations under test (swappable for fault injection)


@dataclass(frozen=True)
class Ops:
    c_add: Callable = cs.c_add
    c_neg: Callable = cs.c_neg
    c_mul: Callable = cs.c_mul
    c_conj: Callable = cs.c_conj
    theta: Callable = cs.theta
    c_recip: Callable = cs.c_recip
    t_mul: Callable = t_mul

    def c_sub(self, x, y):
        return self.c_add(x, self.c_neg(y))

    def c_div(self, x, y, tol):
        return self.c_mul(x, self.c_recip(y, tol))


def _mul_without_cross_terms(x, y):
    return cs.c_mul(x, y)._like(cs.c_mul(x, y).q, np.zeros_like(x.eps))


def _mul_square4(x, y):
    table = pl.SQUARES[4].index_table()
    q = np.zeros(3)
    eps = np.zeros_like(x.eps)
    for i in POLES:
        for j in POLES:
            q[table[i, j]] += x.q[i] * y.q[j]
            eps[table[i, j]] += x.q[i] * y.eps[j] + y.q[j] * x.eps[i]
    return x._like(q, eps)


def _recip_two_over_theta(y, tol=1e-9):
    y = cs.canonicalize(y)
    th = cs.theta(y, tol)
    return cs.c_scale(cs.c_conj(y), t_recip(TriCoeff(th.q / 2.0, th.psi * 0.5)))


FAULTS = {
    "mul-no-cross": dataclasses.replace(Ops(), c_mul=_mul_without_cross_terms),
    "mul-square4": dataclasses.replace(Ops(), c_mul=_mul_square4),
    "neg-identity": dataclasses.replace(Ops(), c_neg=lambda x: x),
    "recip-two-over-theta": dataclasses.replace(Ops(), c_recip=_recip_two_over_theta),
    "tmul-no-cross": dataclasses.replace(
        Ops(), t_mul=lambda x, y: TriCoeff(x.q * y.q, spectra.zero(x.grid))
    ),
}


# ---------------------------------------------------------------------------
# properties


@dataclass(frozen=True)
class Property:
    name: str
    suite: str
    draw: Callable  # (rng, grid) -> tuple of inputs
    holds: Callable  # (ops, inputs, tol) -> bool


def _colours(n, gen=random_colour):
    return lambda rng, grid: tuple(gen(rng, grid) for _ in range(n))


def _coeffs(n, positive=False):
    return lambda rng, grid: tuple(random_coeff(rng, grid, positive) for _ in range(n))


def _phi_bi(x):
    return cs.phi_bicomplex(x)


def _theta_formula(y):
    u, v, t = y.q
    return ((u - v) ** 2 + (v - t) ** 2 + (t - u) ** 2) / 2.0


def _theta_eps_expansion(y):
    u, v, t = y.q
    s, c, x = y.eps
    return (u - v) * (s - c) + (u - t) * (s - x) + (v - t) * (c - x)


def _singular_every_square(y, tol):
    flags = []
    for k in pl.GROUP_SQUARES:
        yk = Colour(k, y.q, y.eps, y.grid)
        flags.append(abs(cs.quotient_determinant(yk)) <= tol)
    return flags


def _recip_then_check(ops, y, tol):
    try:
        ops.c_recip(y, tol)
    except SingularDivisor:
        return True
    return False

PROPERTIES = [
    # semi-field of triangular coefficients
    Property("t_add associative", "semifield", _coeffs(3),
             lambda o, a, tol: t_eq(t_add(t_add(a[0], a[1]), a[2]), t_add(a[0], t_add(a[1], a[2])), tol)),
    Property("t_add commutative", "semifield", _coeffs(2),
             lambda o, a, tol: t_eq(t_add(a[0], a[1]), t_add(a[1], a[0]), tol)),
    Property("t_mul associative", "semifield", _coeffs(3),
             lambda o, a, tol: t_eq(o.t_mul(o.t_mul(a[0], a[1]), a[2]), o.t_mul(a[0], o.t_mul(a[1], a[2])), tol)),
    Property("t_mul commutative", "semifield", _coeffs(2),
             lambda o, a, tol: t_eq(o.t_mul(a[0], a[1]), o.t_mul(a[1], a[0]), tol)),
    Property("t_mul distributes over t_add", "semifield", _coeffs(3),
             lambda o, a, tol: t_eq(o.t_mul(a[0], t_add(a[1], a[2])),
                                    t_add(o.t_mul(a[0], a[1]), o.t_mul(a[0], a[2])), tol)),
    Property("t_mul(y, t_recip(y)) = [1]", "semifield", _coeffs(1, positive=True),
             lambda o, a, tol: t_eq(o.t_mul(a[0], t_recip(a[0])), TriCoeff.one(a[0].grid), tol)),
    Property("t_div(x, y) = t_mul(x, t_recip(y))", "semifield",
             lambda rng, grid: (random_coeff(rng, grid), random_coeff(rng, grid, positive=True)),
             lambda o, a, tol: t_eq(t_div(a[0], a[1]), o.t_mul(a[0], t_recip(a[1])), 1e-12)),
    # ring modulo grey
    Property("c_add associative mod O", "ring", _colours(3),
             lambda o, c, tol: cs.eq_mod_O(o.c_add(o.c_add(c[0], c[1]), c[2]), o.c_add(c[0], o.c_add(c[1], c[2])), tol)),
    Property("c_add commutative mod O", "ring", _colours(2),
             lambda o, c, tol: cs.eq_mod_O(o.c_add(c[0], c[1]), o.c_add(c[1], c[0]), tol)),
    Property("grey elements are the additive zero", "ring",
             lambda rng, grid: (random_colour(rng, grid), random_grey(rng, grid)),
             lambda o, c, tol: cs.eq_mod_O(o.c_add(c[0], c[1]), c[0], tol)),
    Property("x - x is grey", "ring", _colours(1),
             lambda o, c, tol: cs.is_achromatic(o.c_sub(c[0], c[0]), tol)),
    Property("c_mul associative mod O", "ring", _colours(3),
             lambda o, c, tol: cs.eq_mod_O(o.c_mul(o.c_mul(c[0], c[1]), c[2]), o.c_mul(c[0], o.c_mul(c[1], c[2])), tol)),
    Property("c_mul commutative mod O", "ring", _colours(2),
             lambda o, c, tol: cs.eq_mod_O(o.c_mul(c[0], c[1]), o.c_mul(c[1], c[0]), tol)),
    Property("unit law", "ring", _colours(1),
             lambda o, c, tol: cs.eq_mod_O(o.c_mul(cs.unit(c[0].grid), c[0]), c[0], tol)),
    Property("distributivity mod O", "ring", _colours(3),
             lambda o, c, tol: cs.eq_mod_O(o.c_mul(c[0], o.c_add(c[1], c[2])),
                                          o.c_add(o.c_mul(c[0], c[1]), o.c_mul(c[0], c[2])), tol)),
    Property("product stable under grey translates", "ring",
             lambda rng, grid: (random_colour(rng, grid), random_colour(rng, grid),
                                random_grey(rng, grid), random_grey(rng, grid)),
             lambda o, c, tol: cs.eq_mod_O(o.c_mul(o.c_add(c[0], c[2]), o.c_add(c[1], c[3])),
                                          o.c_mul(c[0], c[1]), tol)),
    # conjugation and theta
    Property("conj involution", "conjugation", _colours(1),
             lambda o, c, tol: cs._max_gap(o.c_conj(o.c_conj(c[0])), c[0]) == 0.0),
    Property("conj additive", "conjugation", _colours(2),
             lambda o, c, tol: cs._max_gap(o.c_conj(o.c_add(c[0], c[1])), o.c_add(o.c_conj(c[0]), o.c_conj(c[1]))) <= tol),
    Property("conj multiplicative", "conjugation", _colours(2),
             lambda o, c, tol: cs._max_gap(o.c_conj(o.c_mul(c[0], c[1])), o.c_mul(o.c_conj(c[0]), o.c_conj(c[1]))) <= tol),
    Property("y * conj(y) is R-polarized", "conjugation", _colours(1),
             lambda o, c, tol: cs.polarization_residue(o.c_mul(c[0], o.c_conj(c[0])), Pole.R) <= tol),
    Property("real(theta) = half sum of squared differences", "conjugation", _colours(1),
             lambda o, c, tol: abs(o.theta(c[0], tol).q - _theta_formula(c[0])) <= tol),
    Property("real(theta) = |phi(y)|^2", "conjugation", _colours(1),
             lambda o, c, tol: abs(o.theta(c[0], tol).q - abs(cs.phi_chroma(c[0])) ** 2) <= tol),
    Property("eps(theta) matches the expansion", "conjugation", _colours(1),
             lambda o, c, tol: bool(np.max(np.abs(o.theta(c[0], tol).psi.samples - _theta_eps_expansion(c[0]))) <= tol)),
    # ideal of singular colours
    Property("singular closed under addition", "ideal", _colours(2, random_singular),
             lambda o, c, tol: cs.is_singular(o.c_add(c[0], c[1]), tol)),
    Property("singular absorbs multiplication", "ideal",
             lambda rng, grid: (random_singular(rng, grid), random_colour(rng, grid)),
             lambda o, c, tol: cs.is_singular(o.c_mul(c[0], c[1]), tol) and cs.is_singular(o.c_mul(c[1], c[0]), tol)),
    Property("singular iff real(theta) = 0", "ideal", _colours(1, random_mixed),
             lambda o, c, tol: cs.is_singular(c[0], tol) == (o.theta(c[0], tol).q <= tol)),
    Property("same singular set under squares 1-3", "ideal", _colours(1, random_mixed),
             lambda o, c, tol: len({cs.is_singular(c[0], tol), *_singular_every_square(c[0], tol)}) == 1),
    # field modulo the ideal
    Property("(x / y) * y = x mod S", "field",
             lambda rng, grid: (random_colour(rng, grid), random_nonsingular(rng, grid)),
             lambda o, c, tol: cs.eq_mod_S(o.c_mul(o.c_div(c[0], c[1], tol), c[1]), c[0], tol)),
    Property("phi(x / y) = phi(x) / phi(y)", "field",
             lambda rng, grid: (random_colour(rng, grid), random_nonsingular(rng, grid)),
             lambda o, c, tol: abs(cs.phi_chroma(o.c_div(c[0], c[1], tol))
                                   - cs.phi_chroma(c[0]) / cs.phi_chroma(c[1])) <= tol),
    Property("y * (1 / y) = unit mod O", "field", _colours(1, random_nonsingular),
             lambda o, c, tol: cs.eq_mod_O(o.c_mul(c[0], o.c_recip(c[0], tol)), cs.unit(c[0].grid), tol)),
    Property("singular divisors are rejected", "field", _colours(1, random_singular),
             lambda o, c, tol: _recip_then_check(o, c[0], tol)),
    # bicomplex oracle
    Property("Phi additive", "oracle", _colours(2),
             lambda o, c, tol: _phi_bi(o.c_add(c[0], c[1])).approx_eq(_phi_bi(c[0]) + _phi_bi(c[1]), tol)),
    Property("Phi multiplicative", "oracle", _colours(2),
             lambda o, c, tol: _phi_bi(o.c_mul(c[0], c[1])).approx_eq(_phi_bi(c[0]) * _phi_bi(c[1]), tol)),
    Property("Phi(-x) = -Phi(x)", "oracle", _colours(1),
             lambda o, c, tol: _phi_bi(o.c_neg(c[0])).approx_eq(-_phi_bi(c[0]), tol)),
    Property("Phi(conj x) = conj Phi(x)", "oracle", _colours(1),
             lambda o, c, tol: _phi_bi(o.c_conj(c[0])).approx_eq(_phi_bi(c[0]).conjugate(), tol)),
    Property("eq_mod_O iff Phi equal", "oracle",
             lambda rng, grid: (random_colour(rng, grid),
                                random_colour(rng, grid) if rng.random() < 0.5 else random_grey(rng, grid)),
             lambda o, c, tol: cs.eq_mod_O(c[0], o.c_add(c[0], c[1]), tol)
             == _phi_bi(o.c_add(c[0], c[1])).approx_eq(_phi_bi(c[0]), tol)),
    Property("eq_mod_S iff phi equal", "oracle",
             lambda rng, grid: (random_colour(rng, grid),
                                random_colour(rng, grid) if rng.random() < 0.5 else random_singular(rng, grid)),
             lambda o, c, tol: cs.eq_mod_S(c[0], o.c_add(c[0], c[1]), tol)
             == (abs(cs.phi_chroma(o.c_add(c[0], c[1])) - cs.phi_chroma(c[0])) <= tol)),
]


def pole_checks() -> list[tuple[str, bool]]:
    """Exhaustive (non-random) checks on the pole set and the six squares."""
    omega = {p: pl.OMEGA ** int(p) for p in POLES}
    total = sum(pl.value(p) for p in POLES)
    sq1 = pl.SQUARES[1]
    return [
        ("poles sum to the white point", abs(total) <= 1e-12),
        ("squares 1-3 and only those have an identity pole",
         [s.identity_pole() is not None for s in pl.SQUARES.values()] == [True] * 3 + [False] * 3),
        ("all six squares are symmetric Latin squares",
         all(s.is_latin() and s.is_symmetric() for s in pl.SQUARES.values())),
        ("square 1 is Z3 under R->1, G->w, B->w^2",
         all(abs(omega[sq1.compose(x, y)] - omega[x] * omega[y]) <= 1e-12
             for x, y in itertools.product(POLES, repeat=2))),
    ]


# ---------------------------------------------------------------------------
# runner


def _describe(inputs) -> str:
    parts = []
    for item in inputs:
        if isinstance(item, Colour):
            terms = []
            for p in POLES:
                e = float(np.max(np.abs(item.eps[p])))
                eps = f" + <eps, max|.|={e:.6g}> e" if e else ""
                terms.append(f"{p}[{item.q[p]:.17g}{eps}]")
            parts.append(" + ".join(terms))
        else:
            e = float(np.max(np.abs(item.psi.samples)))
            eps = f" + <eps, max|.|={e:.6g}> e" if e else ""
            parts.append(f"[{item.q:.17g}{eps}]")
    return "; ".join(parts)


def _fails(prop: Property, ops: Ops, inputs, tol: float) -> bool:
    try:
        return not prop.holds(ops, inputs, tol)
    except Exception:  # noqa: BLE001 - any crash counts as a failure
        return True


_SHRINKS = (
    lambda q, e: (q, np.zeros_like(e)),
    lambda q, e: (np.round(q), e),
    lambda q, e: (np.round(q, 1), e),
)
_MAX_SHRINK_PASSES = 20


def _shrunk(item, step):
    if isinstance(item, Colour):
        q, e = step(item.q, item.eps)
        return item._like(q, e)
    q, e = step(np.array([item.q]), item.psi.samples)
    return TriCoeff(float(q[0]), Spectrum(item.grid, e))


def shrink(prop: Property, ops: Ops, inputs, tol: float):
    """Greedy shrink: keep each simplification that still fails."""
    inputs = list(inputs)
    for _ in range(_MAX_SHRINK_PASSES):
        changed = False
        for i in range(len(inputs)):
            for step in _SHRINKS:
                cand = _shrunk(inputs[i], step)
                if _same(cand, inputs[i]):
                    continue
                trial = inputs[:i] + [cand] + inputs[i + 1:]
                if _fails(prop, ops, tuple(trial), tol):
                    inputs = trial
                    changed = True
        if not changed:
            break
    return tuple(inputs)


def _same(a, b) -> bool:
    if isinstance(a, Colour):
        return bool(np.array_equal(a.q, b.q) and np.array_equal(a.eps, b.eps))
    return a.q == b.q and bool(np.array_equal(a.psi.samples, b.psi.samples))


@dataclass
class CheckResult:
    lines: list
    failures: int

    @property
    def report(self) -> str:
        return "\n".join(self.lines) + "\n"


def run_checks(seed: int = 0, cases: int = 1000, tol: float = 1e-9,
               grid: Grid = spectra.DEFAULT_GRID, fault: str | None = None,
               suites=None) -> CheckResult:
    ops = FAULTS[fault] if fault else Ops()
    lines = [f"tripolar check: seed={seed} cases={cases} tol={tol:g} grid={grid}"]
    failures = 0
    if suites is None or "poles" in suites:
        for name, ok in pole_checks():
            lines.append(f"{'PASS' if ok else 'FAIL'} [poles] {name} (exhaustive)")
            failures += not ok
    for index, prop in enumerate(PROPERTIES):
        if suites is not None and prop.suite not in suites:
            continue
        failed_at = None
        for case in range(cases):
            rng = np.random.default_rng([seed, index, case])
            inputs = prop.draw(rng, grid)
            if _fails(prop, ops, inputs, tol):
                failed_at = (case, inputs)
                break
        if failed_at is None:
            lines.append(f"PASS [{prop.suite}] {prop.name} ({cases} cases)")
            continue
        failures += 1
        case, inputs = failed_at
        small = shrink(prop, ops, inputs, tol)
        lines.append(f"FAIL [{prop.suite}] {prop.name} at case {case}")
        lines.append(f"     minimal input: {_describe(small)}")
    lines.append(f"{failures} failing propert{'y' if failures == 1 else 'ies'}")
    return CheckResult(lines, failures)

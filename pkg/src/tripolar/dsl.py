"""Parser and evaluator for colour expressions.

Grammar (``conj`` binds tightest, then ``*`` ``/``, then ``+`` ``-``; all
binary operators are left associative)::

    expr    := term (("+" | "-") term)*
    term    := unary (("*" | "/") unary)*
    unary   := "conj" "(" expr ")" | primary
    primary := ("R" | "G" | "B") "[" coeff "]" | "(" expr ")"
    coeff   := number [("+" | "-") source "e"]
    source  := number | "csv:" path | "gauss" "(" number "," number "," number ")"

Example: ``R[1] + G[0.5 + gauss(520,20,0.3) e] * conj(B[2])``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from . import spectra
from .colourspace import Colour, c_add, c_conj, c_div, c_mul, c_sub, canonicalize, x_polarized
from .errors import ExprSyntaxError, SingularDivisor
from .poles import Pole
from .spectra import DEFAULT_GRID, Grid, Spectrum
from .trisemifield import DEFAULT_TOL, TriCoeff


@dataclass(frozen=True)
class CliConfig:
    grid: Grid = DEFAULT_GRID
    square: int = 1
    tol: float = DEFAULT_TOL
    resample: bool = False
    fmt: str = "json"
    seed: int = 0

    def __post_init__(self):
        if self.square not in (1, 2, 3):
            raise ValueError(f"square must be 1, 2 or 3, got {self.square}")
        if not self.tol > 0:
            raise ValueError("tolerance must be positive")


# -- AST ----------------------------------------------------------------------


@dataclass(frozen=True)
class ConstSource:
    value: float


@dataclass(frozen=True)
class GaussSource:
    mu: float
    sigma: float
    amp: float


@dataclass(frozen=True)
class CsvSource:
    path: str


@dataclass(frozen=True)
class PoleLit:
    pole: Pole
    q: float
    source: object
    sign: float
    text: str


@dataclass(frozen=True)
class Binary:
    op: str
    left: object
    right: object
    text: str


@dataclass(frozen=True)
class Conj:
    arg: object
    text: str


# -- tokens -------------------------------------------------------------------

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<csv>csv:[^\s\]]+)
  | (?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<punct>[-+*/()\[\],])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Tok:
    kind: str
    value: str
    pos: int


def _line_col(text: str, pos: int) -> tuple[int, int]:
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, col


def _error(text: str, pos: int, message: str) -> ExprSyntaxError:
    return ExprSyntaxError(message, *_line_col(text, pos))


def tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise _error(text, pos, f"unexpected character {text[pos]!r}")
        kind = m.lastgroup
        if kind != "ws":
            toks.append(_Tok(kind, m.group(), pos))
        pos = m.end()
    toks.append(_Tok("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def advance(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def at(self, value: str) -> bool:
        return self.tok.value == value and self.tok.kind in ("punct", "ident")

    def expect(self, value: str) -> _Tok:
        if not self.at(value):
            raise self.fail(f"expected {value!r}")
        return self.advance()

    def fail(self, message: str) -> ExprSyntaxError:
        t = self.tok
        found = "end of input" if t.kind == "end" else repr(t.value)
        return _error(self.text, t.pos, f"{message}, found {found}")

    def span(self, start: int) -> str:
        end = self.toks[self.i - 1]
        return self.text[start : end.pos + len(end.value)]

    def parse(self):
        node = self.expr()
        if self.tok.kind != "end":
            raise self.fail("unexpected trailing input")
        return node

    def expr(self):
        start = self.tok.pos
        node = self.term()
        while self.at("+") or self.at("-"):
            op = self.advance().value
            right = self.term()
            node = Binary(op, node, right, self.span(start))
        return node

    def term(self):
        start = self.tok.pos
        node = self.unary()
        while self.at("*") or self.at("/"):
            op = self.advance().value
            right = self.unary()
            node = Binary(op, node, right, self.span(start))
        return node

    def unary(self):
        start = self.tok.pos
        if self.at("conj"):
            self.advance()
            self.expect("(")
            arg = self.expr()
            self.expect(")")
            return Conj(arg, self.span(start))
        return self.primary()

    def primary(self):
        start = self.tok.pos
        if self.at("("):
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        t = self.tok
        if t.kind == "ident" and t.value in ("R", "G", "B"):
            self.advance()
            self.expect("[")
            q, sign, source = self.coeff()
            self.expect("]")
            return PoleLit(Pole[t.value], q, source, sign, self.span(start))
        raise self.fail("expected a pole literal R[...], G[...], B[...], conj(...) or '('")

    def number(self, signed: bool = False) -> float:
        neg = False
        if signed and (self.at("-") or self.at("+")):
            neg = self.advance().value == "-"
        if self.tok.kind != "num":
            raise self.fail("expected a number")
        v = float(self.advance().value)
        return -v if neg else v

    def coeff(self):
        if self.at("-"):
            raise _error(self.text, self.tok.pos, "negative real part: coefficients need q >= 0")
        q = self.number()
        if not (self.at("+") or self.at("-")):
            return q, 1.0, ConstSource(0.0)
        sign = 1.0 if self.advance().value == "+" else -1.0
        source = self.source()
        self.expect("e")
        return q, sign, source

    def source(self):
        t = self.tok
        if t.kind == "num":
            return ConstSource(self.number())
        if t.kind == "csv":
            self.advance()
            path = t.value[len("csv:"):]
            return CsvSource(path)
        if self.at("gauss"):
            self.advance()
            self.expect("(")
            mu = self.number(signed=True)
            self.expect(",")
            sigma = self.number(signed=True)
            self.expect(",")
            amp = self.number(signed=True)
            self.expect(")")
            return GaussSource(mu, sigma, amp)
        raise self.fail("expected an epsilon source: number, csv:<path> or gauss(mu,sigma,amp)")


def parse(text: str):
    """Parse an expression into an AST; raises :class:`ExprSyntaxError` with line/column."""
    return _Parser(text).parse()


# -- evaluation -----------------------------------------------------------------


def _spectrum(source, cfg: CliConfig, base_dir: Path | None) -> Spectrum:
    if isinstance(source, ConstSource):
        return spectra.constant(cfg.grid, source.value)
    if isinstance(source, GaussSource):
        return spectra.gaussian(cfg.grid, source.mu, source.sigma, source.amp)
    path = Path(source.path)
    if base_dir is not None and not path.is_absolute():
        path = base_dir / path
    return spectra.from_csv(path, cfg.grid, resample=cfg.resample)


def _eval(node, cfg: CliConfig, base_dir) -> Colour:
    if isinstance(node, PoleLit):
        psi = _spectrum(node.source, cfg, base_dir) * node.sign
        return x_polarized(node.pole, TriCoeff(node.q, psi), square=cfg.square)
    if isinstance(node, Conj):
        return c_conj(_eval(node.arg, cfg, base_dir))
    left = _eval(node.left, cfg, base_dir)
    right = _eval(node.right, cfg, base_dir)
    if node.op == "+":
        return c_add(left, right)
    if node.op == "-":
        return c_sub(left, right)
    if node.op == "*":
        return c_mul(left, right)
    try:
        return c_div(left, right, cfg.tol)
    except SingularDivisor as exc:
        raise SingularDivisor(f"{exc} in divisor `{node.right.text}`", node.right.text) from None


def evaluate(expr, cfg: CliConfig | None = None, base_dir: Path | None = None) -> Colour:
    """Evaluate a parsed expression (or source text) to a canonical colour."""
    cfg = cfg or CliConfig()
    if isinstance(expr, str):
        expr = parse(expr)
    return canonicalize(_eval(expr, cfg, base_dir))

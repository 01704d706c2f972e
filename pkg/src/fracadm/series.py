"""Finite generalized power series in x and y with fractional calculus rules.

The universal value type is :class:`FracSeries`: a normalized, immutable
sum of monomials ``c * x**px * y**py`` whose exponents are arbitrary reals
(py stays >= 0 in solver output; px may go negative at fractional orders).
On top of the plain algebra (add, scale, Cauchy product) the module
provides the two operators the solver is built from:

* ``caputo_deriv`` -- term-wise Caputo fractional derivative,
* ``rl_integral`` -- term-wise Riemann-Liouville fractional integral,

both reduced to the power rule ``x**p -> Gamma(p+1)/Gamma(p+1 -+ order)
* x**(p -+ order)``.  ``caputo_quadrature_oracle`` evaluates the Caputo
integral definition directly by adaptive quadrature; it exists so the
power rule can be validated against something that is not the power rule.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Union

from scipy.integrate import quad

from .gammafn import gamma_ratio, rgamma

__all__ = [
    "Axis",
    "FracTerm",
    "FracSeries",
    "TermCapError",
    "EvaluationDomainError",
    "NonIntegrableTermError",
    "QuadratureError",
    "caputo_deriv",
    "rl_integral",
    "caputo_quadrature_oracle",
    "format_series",
    "EXPONENT_TOL",
    "COEFF_DROP_REL",
    "DEFAULT_TERM_CAP",
]

# Exponents closer than this (per variable) denote the same monomial.
EXPONENT_TOL = 1e-12
# Terms with |coeff| <= COEFF_DROP_REL * max(1, largest |coeff|) are dropped,
# so cancellation residue from gamma arithmetic never leaks into results.
COEFF_DROP_REL = 1e-15
# Cauchy products larger than this raise instead of silently blowing up.
DEFAULT_TERM_CAP = 10_000


class Axis(Enum):
    X = "x"
    Y = "y"


class TermCapError(ArithmeticError):
    """A product would exceed the term cap."""

    def __init__(self, would_be: int, cap: int):
        self.would_be = would_be
        self.cap = cap
        super().__init__(f"product would create {would_be} terms (cap {cap})")


class EvaluationDomainError(ValueError):
    """Evaluation point outside the domain of some monomial."""


class NonIntegrableTermError(ValueError):
    """Fractional integral applied to an exponent <= -1 on that axis."""


class QuadratureError(ArithmeticError):
    """Adaptive quadrature failed to reach the requested accuracy."""


@dataclass(frozen=True)
class FracTerm:
    """One monomial coeff * x**px * y**py."""

    coeff: float
    px: float = 0.0
    py: float = 0.0


def _cluster(values_with_payload, key):
    """Sort by key and group runs whose keys differ by <= EXPONENT_TOL."""
    ordered = sorted(values_with_payload, key=key)
    groups = []
    for item in ordered:
        if groups and key(item) - key(groups[-1][0]) <= EXPONENT_TOL:
            groups[-1].append(item)
        else:
            groups.append([item])
    return groups


def _normalize(terms: Iterable[FracTerm]) -> tuple[FracTerm, ...]:
    merged = []
    # two-level clustering: exponent runs in px first, then py inside each run,
    # so near-equal px values cannot be split apart by differing py ordering
    for px_group in _cluster(list(terms), key=lambda t: t.px):
        px_rep = px_group[0].px
        for py_group in _cluster(px_group, key=lambda t: t.py):
            coeff = math.fsum(t.coeff for t in py_group)
            merged.append(FracTerm(coeff, px_rep, py_group[0].py))
    if not merged:
        return ()
    cutoff = COEFF_DROP_REL * max(1.0, max(abs(t.coeff) for t in merged))
    kept = tuple(t for t in merged if abs(t.coeff) > cutoff)
    return tuple(sorted(kept, key=lambda t: (t.px, t.py)))


class FracSeries:
    """Immutable normalized sum of FracTerm monomials.

    The constructor *is* the normalization: terms are merged within
    EXPONENT_TOL per exponent, sorted lexicographically by (px, py), and
    negligible coefficients dropped.  The empty series is the zero series.
    """

    __slots__ = ("terms",)

    terms: tuple[FracTerm, ...]

    def __init__(self, terms: Iterable[FracTerm] = ()):
        object.__setattr__(self, "terms", _normalize(terms))

    def __setattr__(self, name, value):
        raise AttributeError("FracSeries is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> "FracSeries":
        return cls()

    @classmethod
    def monomial(cls, coeff: float, px: float = 0.0, py: float = 0.0) -> "FracSeries":
        return cls((FracTerm(coeff, px, py),))

    @classmethod
    def constant(cls, value: float) -> "FracSeries":
        return cls.monomial(value)

    # -- container protocol --------------------------------------------------

    def __iter__(self) -> Iterator[FracTerm]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, FracSeries) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __repr__(self) -> str:
        return f"FracSeries({format_series(self)})"

    def __str__(self) -> str:
        return format_series(self)

    # -- algebra -------------------------------------------------------------

    def __add__(self, other: "FracSeries") -> "FracSeries":
        if not isinstance(other, FracSeries):
            return NotImplemented
        return FracSeries(self.terms + other.terms)

    def __neg__(self) -> "FracSeries":
        return self.scale(-1.0)

    def __sub__(self, other: "FracSeries") -> "FracSeries":
        if not isinstance(other, FracSeries):
            return NotImplemented
        return self + (-other)

    def scale(self, c: float) -> "FracSeries":
        return FracSeries(FracTerm(c * t.coeff, t.px, t.py) for t in self.terms)

    def __mul__(self, other: Union["FracSeries", float, int]) -> "FracSeries":
        if isinstance(other, FracSeries):
            return self.mul(other)
        if isinstance(other, (int, float)):
            return self.scale(float(other))
        return NotImplemented

    def __rmul__(self, other):
        return self.__mul__(other)

    def mul(self, other: "FracSeries", term_cap: int = DEFAULT_TERM_CAP) -> "FracSeries":
        """Full Cauchy product, guarded by the term cap."""
        would_be = len(self.terms) * len(other.terms)
        if would_be > term_cap:
            raise TermCapError(would_be, term_cap)
        return FracSeries(
            FracTerm(a.coeff * b.coeff, a.px + b.px, a.py + b.py)
            for a in self.terms
            for b in other.terms
        )

    # -- evaluation ----------------------------------------------------------

    def evaluate(self, x: float, y: float) -> float:
        """Sum coeff * x**px * y**py with the 0**0 = 1 convention."""
        if y < 0.0:
            raise EvaluationDomainError(f"y must be >= 0, got {y!r}")
        return math.fsum(
            t.coeff * _power(x, t.px, "x") * _power(y, t.py, "y") for t in self.terms
        )

    def max_abs_coeff(self) -> float:
        return max((abs(t.coeff) for t in self.terms), default=0.0)

    def min_exponent(self, axis: Axis) -> float:
        """Smallest exponent on the chosen axis (0.0 for the zero series)."""
        if not self.terms:
            return 0.0
        if axis is Axis.X:
            return min(t.px for t in self.terms)
        return min(t.py for t in self.terms)


def _power(base: float, expo: float, var: str) -> float:
    if abs(expo) <= EXPONENT_TOL:
        return 1.0  # includes the 0**0 = 1 convention
    if base == 0.0:
        if expo > 0.0:
            return 0.0
        raise EvaluationDomainError(f"{var} = 0 with negative exponent {expo!r}")
    if base < 0.0:
        nearest = round(expo)
        if abs(expo - nearest) <= EXPONENT_TOL:
            return math.pow(base, nearest)
        raise EvaluationDomainError(
            f"{var} = {base!r} < 0 with non-integer exponent {expo!r}"
        )
    return math.pow(base, expo)


# -- fractional operators ------------------------------------------------


def _split_axis(term: FracTerm, axis: Axis) -> tuple[float, float]:
    return (term.px, term.py) if axis is Axis.X else (term.py, term.px)


def _rebuild(coeff: float, on_axis: float, off_axis: float, axis: Axis) -> FracTerm:
    if axis is Axis.X:
        return FracTerm(coeff, on_axis, off_axis)
    return FracTerm(coeff, off_axis, on_axis)


def caputo_deriv(s: FracSeries, order: float, axis: Axis) -> FracSeries:
    """Term-wise Caputo fractional derivative of order in (0, 1] on one axis.

    Constants on the axis vanish; every other exponent p (negative ones
    included, formally) maps to Gamma(p+1)/Gamma(p+1-order) * x**(p-order).
    """
    if not 0.0 < order <= 1.0:
        raise ValueError(f"Caputo order must be in (0, 1], got {order!r}")
    out = []
    for t in s:
        p, q = _split_axis(t, axis)
        if abs(p) <= EXPONENT_TOL:
            continue  # derivative of a constant on this axis
        coeff = t.coeff * gamma_ratio(p + 1.0, p + 1.0 - order)
        out.append(_rebuild(coeff, p - order, q, axis))
    return FracSeries(out)


def rl_integral(s: FracSeries, order: float, axis: Axis) -> FracSeries:
    """Term-wise Riemann-Liouville fractional integral of positive order."""
    if order <= 0.0:
        raise ValueError(f"integral order must be > 0, got {order!r}")
    out = []
    for t in s:
        p, q = _split_axis(t, axis)
        if p <= -1.0 + EXPONENT_TOL:
            raise NonIntegrableTermError(
                f"exponent {p!r} on axis {axis.value} is not integrable"
            )
        coeff = t.coeff * gamma_ratio(p + 1.0, p + 1.0 + order)
        out.append(_rebuild(coeff, p + order, q, axis))
    return FracSeries(out)


def caputo_quadrature_oracle(p: float, order: float, x: float) -> float:
    """Caputo derivative of x**p straight from its defining integral.

    Evaluates (1/Gamma(1-order)) * int_0^x (x-e)**(-order) * p*e**(p-1) de
    by adaptive quadrature with the endpoint singularities handled by an
    algebraic weight.  Test oracle only; the solver uses the power rule.
    """
    if p <= 0.0:
        raise ValueError(f"oracle requires p > 0, got {p!r}")
    if not 0.0 < order < 1.0:
        raise ValueError(f"oracle requires order in (0, 1), got {order!r}")
    if x <= 0.0:
        raise ValueError(f"oracle requires x > 0, got {x!r}")
    # weight (e-0)**(p-1) * (x-e)**(-order) carries both singular factors
    value, abserr = quad(
        lambda _e: 1.0,
        0.0,
        x,
        weight="alg",
        wvar=(p - 1.0, -order),
        epsabs=1e-13,
        epsrel=1e-13,
        limit=200,
    )
    if abserr > 1e-10:
        raise QuadratureError(
            f"quadrature error estimate {abserr!r} exceeds 1e-10 "
            f"for p={p!r}, order={order!r}, x={x!r}"
        )
    return p * rgamma(1.0 - order) * value


# -- display ---------------------------------------------------------------


def _format_number(v: float, digits: int) -> str:
    return format(v, f".{digits}g")


def _term_body(t: FracTerm, digits: int) -> str:
    parts = [_format_number(abs(t.coeff), digits)]
    for var, expo in (("x", t.px), ("y", t.py)):
        if abs(expo) <= EXPONENT_TOL:
            continue
        if abs(expo - 1.0) <= EXPONENT_TOL:
            parts.append(var)
        else:
            parts.append(f"{var}^{_format_number(expo, digits)}")
    return "*".join(parts)


def format_series(s: FracSeries, digits: int = 17) -> str:
    """Render as ``c*x^p*y^q`` terms joined by signed ``+``/``-``.

    The output re-parses to the same series whenever all exponents are
    non-negative (the expression grammar does not admit negative powers).
    """
    if not s.terms:
        return "0"
    pieces = []
    for i, t in enumerate(s.terms):
        body = _term_body(t, digits)
        if i == 0:
            pieces.append(body if t.coeff >= 0 else f"-{body}")
        else:
            pieces.append(f" + {body}" if t.coeff >= 0 else f" - {body}")
    return "".join(pieces)

"""Decomposition-series solver for D_y^alpha u + u * D_x^beta u = g(x).

The unknown is expanded as u = sum_n u_n and the bilinear nonlinearity
N(u) = u * D_x^beta u as a sum of convolution polynomials

    A_n = sum_{i=0}^{n} u_i * D_x^beta u_{n-i},

after which the recursion is

    u_0     = f(x) + J_y^alpha g(x)
    u_{n+1} = -J_y^alpha A_n.

For a bilinear nonlinearity the convolution is identical to the classical
lambda-derivative construction of the decomposition polynomials;
``adomian_lambda_oracle`` keeps that construction alive as an independent
numerical check.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .gammafn import GammaPoleError
from .series import (
    DEFAULT_TERM_CAP,
    EXPONENT_TOL,
    Axis,
    FracSeries,
    NonIntegrableTermError,
    TermCapError,
    caputo_deriv,
    rl_integral,
)

__all__ = [
    "ProblemSpec",
    "SolutionSeries",
    "SolveError",
    "adomian_polynomial",
    "adomian_lambda_oracle",
    "solve",
    "residual",
]


class SolveError(ArithmeticError):
    """Numeric failure during the recursion; carries the offending depth."""

    def __init__(self, depth: int, message: str):
        self.depth = depth
        super().__init__(f"component u_{depth}: {message}")


@dataclass(frozen=True)
class ProblemSpec:
    """One initial-value problem D_y^alpha u + u*D_x^beta u = g, u(x,0) = f.

    Orders live in (0, 1], so the initial-condition sum collapses to the
    single value u(x, 0); ic and forcing are series in x alone.
    """

    alpha: float
    beta: float
    ic: FracSeries
    forcing: FracSeries
    n_terms: int

    def __post_init__(self):
        if not 0.0 < self.alpha <= 1.0:
            raise ValueError(f"alpha must be in (0, 1], got {self.alpha!r}")
        if not 0.0 < self.beta <= 1.0:
            raise ValueError(f"beta must be in (0, 1], got {self.beta!r}")
        if self.n_terms < 1:
            raise ValueError(f"n_terms must be >= 1, got {self.n_terms!r}")
        for name, s in (("ic", self.ic), ("forcing", self.forcing)):
            if any(abs(t.py) > EXPONENT_TOL for t in s):
                raise ValueError(f"{name} must not depend on y: {s}")


@dataclass(frozen=True)
class SolutionSeries:
    """Solver output: components u_0..u_{N-1} with cached partial sums."""

    problem: ProblemSpec
    components: tuple[FracSeries, ...]
    partial_sums: tuple[FracSeries, ...] = field(repr=False)

    def partial_sum(self, n: int) -> FracSeries:
        """Phi_n = u_0 + ... + u_{n-1} for 1 <= n <= n_terms."""
        if not 1 <= n <= len(self.partial_sums):
            raise IndexError(
                f"partial sum index {n} outside 1..{len(self.partial_sums)}"
            )
        return self.partial_sums[n - 1]


def adomian_polynomial(
    components: Sequence[FracSeries],
    n: int,
    beta: float,
    term_cap: int = DEFAULT_TERM_CAP,
) -> FracSeries:
    """A_n for the bilinear nonlinearity: sum_{i+j=n} u_i * D_x^beta u_j."""
    if n < 0:
        raise ValueError(f"polynomial index must be >= 0, got {n!r}")
    if len(components) < n + 1:
        raise ValueError(
            f"A_{n} needs {n + 1} components, only {len(components)} given"
        )
    acc = FracSeries.zero()
    for i in range(n + 1):
        acc = acc + components[i].mul(
            caputo_deriv(components[n - i], beta, Axis.X), term_cap
        )
    return acc


def adomian_lambda_oracle(
    components: Sequence[FracSeries],
    n: int,
    beta: float,
    probe_points: Iterable[tuple[float, float]],
) -> list[float]:
    """A_n via the lambda-coefficient construction, evaluated pointwise.

    N(sum_i lambda**i u_i) is a polynomial of degree 2n in lambda; sampling
    it at the (n+1)-st roots of unity and averaging against lambda**(-n)
    recovers the lambda**n coefficient exactly, because the only aliased
    coefficient indices (n + k*(n+1) for k >= 1) exceed the degree.
    """
    if len(components) < n + 1:
        raise ValueError(
            f"A_{n} needs {n + 1} components, only {len(components)} given"
        )
    m = n + 1
    nodes = [cmath.exp(2j * math.pi * k / m) for k in range(m)]
    if len(set(nodes)) != m:
        raise ValueError("duplicate lambda samples")
    derivs = [caputo_deriv(u, beta, Axis.X) for u in components[:m]]
    results = []
    for x, y in probe_points:
        u_vals = [u.evaluate(x, y) for u in components[:m]]
        du_vals = [d.evaluate(x, y) for d in derivs]
        acc = 0j
        for lam in nodes:
            pu = sum(v * lam**i for i, v in enumerate(u_vals))
            pdu = sum(v * lam**i for i, v in enumerate(du_vals))
            acc += pu * pdu * lam ** (-n)
        results.append((acc / m).real)
    return results


def solve(problem: ProblemSpec, term_cap: int = DEFAULT_TERM_CAP) -> SolutionSeries:
    """Run the recursion to problem.n_terms components."""
    alpha, beta = problem.alpha, problem.beta
    try:
        u0 = problem.ic + rl_integral(problem.forcing, alpha, Axis.Y)
    except (GammaPoleError, TermCapError, NonIntegrableTermError) as exc:
        raise SolveError(0, str(exc)) from exc
    components = [u0]
    sums = [u0]
    derivs: list[FracSeries] = []
    for n in range(problem.n_terms - 1):
        try:
            # differentiate lazily: u_{N-1} itself is never differentiated
            derivs.append(caputo_deriv(components[n], beta, Axis.X))
            a_n = FracSeries.zero()
            for i in range(n + 1):
                a_n = a_n + components[i].mul(derivs[n - i], term_cap)
            nxt = rl_integral(a_n, alpha, Axis.Y).scale(-1.0)
        except (GammaPoleError, TermCapError, NonIntegrableTermError) as exc:
            raise SolveError(n + 1, str(exc)) from exc
        components.append(nxt)
        sums.append(sums[-1] + nxt)
    return SolutionSeries(problem, tuple(components), tuple(sums))


def residual(
    problem: ProblemSpec,
    s: FracSeries,
    points: Iterable[tuple[float, float]],
    term_cap: int = DEFAULT_TERM_CAP,
) -> float:
    """Max |D_y^alpha s + s * D_x^beta s - g| over the given points."""
    lhs = (
        caputo_deriv(s, problem.alpha, Axis.Y)
        + s.mul(caputo_deriv(s, problem.beta, Axis.X), term_cap)
        - problem.forcing
    )
    return max(abs(lhs.evaluate(x, y)) for x, y in points)

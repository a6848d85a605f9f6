"""Finite-time blow-up upper bounds for power-law Caputo systems.

The scalar bound tau(u0, q, p) comes from minimizing the gamma-ratio
function B over its admissible half-line; the system-level certificate
reduces the two-component system to that scalar bound through a case
analysis on the time exponents. Everything is evaluated in log space:
B mixes gamma values across hundreds of orders of magnitude.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import BracketingError, DomainError, NotApplicableError, OverflowRangeError
from .special import ln_gamma, _LN_MAX

__all__ = [
    "ScalarBoundProblem",
    "ScalarBoundResult",
    "PowerLawParams",
    "Branch",
    "BoundCertificate",
    "conjugate_index",
    "big_B",
    "b_domain_lower",
    "minimize_big_B",
    "tau_bound",
    "theorem_bound",
]

_PROBE = 1e-6
_GS_TOL = 1e-10
_MAX_SPAN = 1e6
_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def conjugate_index(p: float) -> float:
    """Hoelder conjugate p/(p-1); requires p > 1."""
    p = float(p)
    if not (p > 1.0):
        raise DomainError(f"conjugate index requires p > 1, got {p}")
    return p / (p - 1.0)


@dataclass(frozen=True)
class ScalarBoundProblem:
    """One-component blow-up problem: D^alpha u >= K t^q u^p, u(0) = u0."""

    alpha: float
    u0: float
    q: float
    p: float

    def __post_init__(self):
        if not (0.0 < self.alpha < 1.0):
            raise DomainError(f"alpha must lie in (0, 1), got {self.alpha}")
        if not (self.u0 > 0.0):
            raise DomainError(f"u0 must be positive, got {self.u0}")
        if not (self.q >= 0.0):
            raise DomainError(f"q must be nonnegative, got {self.q}")
        if self.p == 1.0:
            raise DomainError(
                "p = 1 needs an infinite conjugate index and is rejected"
            )
        if not (self.p > 1.0):
            raise DomainError(f"p must exceed 1, got {self.p}")
        p_tilde = conjugate_index(self.p)
        if not (self.q + 1.0 > self.q * p_tilde):
            raise DomainError(
                f"inadmissible: q+1 = {self.q + 1} must exceed "
                f"q*p_tilde = {self.q * p_tilde}"
            )


@dataclass(frozen=True)
class ScalarBoundResult:
    tau_ub: float
    lambda_m: float
    B_min: float
    bracket: tuple[float, float]


class Branch(enum.Enum):
    DISTINCT_Q = "distinct_q"
    EQUAL_Q_BRANCH1 = "equal_q_branch1"
    EQUAL_Q_BRANCH2 = "equal_q_branch2"
    EQUAL_Q_BOTH = "equal_q_both"


@dataclass(frozen=True)
class PowerLawParams:
    """The two-component system t^q1 x^p11 y^p12 / t^q2 y^p21 x^p22."""

    alpha: float
    q1: float
    q2: float
    p11: float
    p12: float
    p21: float
    p22: float
    x0: float
    y0: float

    def __post_init__(self):
        if not (0.0 < self.alpha < 1.0):
            raise DomainError(f"alpha must lie in (0, 1), got {self.alpha}")
        for name in ("q1", "q2", "p11", "p12", "p21", "p22"):
            v = getattr(self, name)
            if not (v >= 0.0):
                raise DomainError(f"{name} must be nonnegative, got {v}")
        for name in ("x0", "y0"):
            v = getattr(self, name)
            if not (v > 0.0):
                raise DomainError(f"{name} must be positive, got {v}")


@dataclass(frozen=True)
class BoundCertificate:
    """Applicable branch plus the derived scalar problem and its bound.

    For EQUAL_Q_BOTH the fields describe the winning (smaller) branch and
    `alternate` retains the full certificate of the other one.
    """

    branch: Branch
    j: int
    gamma_j: float
    p_j: float
    p_tilde_j: float
    u_j: float
    q_j: float
    scalar: ScalarBoundResult
    tau_ub: float
    alternate: "BoundCertificate | None" = None


def _ln_big_B(lam: float, alpha: float, p_tilde: float, q: float) -> float:
    a1 = lam + 1.0
    a2 = lam + 1.0 - alpha * p_tilde
    a3 = q + lam + 2.0
    a4 = lam + 1.0 - alpha
    a5 = q + lam + 2.0 - p_tilde * (q + alpha)
    for name, a in (("lam+1", a1), ("lam+1-alpha*p_tilde", a2),
                    ("q+lam+2", a3), ("lam+1-alpha", a4),
                    ("q+lam+2-p_tilde*(q+alpha)", a5)):
        if not (a > 0.0):
            raise DomainError(f"gamma argument {name} = {a} is not positive")
    return ((p_tilde - 1.0) * ln_gamma(a1) + ln_gamma(a2) + ln_gamma(a3)
            - p_tilde * ln_gamma(a4) - ln_gamma(a5))


def big_B(lam: float, alpha: float, p_tilde: float, q: float) -> float:
    """The gamma-ratio function whose minimum enters the blow-up bound."""
    ln_b = _ln_big_B(lam, alpha, p_tilde, q)
    if ln_b > _LN_MAX:
        raise OverflowRangeError(
            f"B({lam}) = exp({ln_b:.2f}) exceeds the double-precision range"
        )
    return math.exp(ln_b)


def _domain_boundary(alpha: float, p_tilde: float, q: float) -> float:
    return max(alpha * p_tilde - 1.0, p_tilde * (q + alpha) - q - 2.0)


def b_domain_lower(alpha: float, p_tilde: float, q: float) -> float:
    """Infimum of the lambda domain of big_B; B is defined for lambda above it."""
    return _domain_boundary(alpha, p_tilde, q)


def _check_admissible(alpha: float, p_tilde: float, q: float) -> None:
    if not (0.0 < alpha < 1.0):
        raise DomainError(f"alpha must lie in (0, 1), got {alpha}")
    if not (p_tilde > 1.0):
        raise DomainError(f"p_tilde must exceed 1, got {p_tilde}")
    if not (q >= 0.0):
        raise DomainError(f"q must be nonnegative, got {q}")
    if not (q + 1.0 > q * p_tilde):
        raise DomainError(
            f"inadmissible: q+1 = {q + 1} must exceed q*p_tilde = {q * p_tilde}"
        )


def _minimize_ln_big_B(alpha: float, p_tilde: float, q: float):
    """Bracket and golden-section the log of B; returns full diagnostics."""
    _check_admissible(alpha, p_tilde, q)
    lo = _domain_boundary(alpha, p_tilde, q)
    f = lambda lam: _ln_big_B(lam, alpha, p_tilde, q)

    # expand geometrically away from the boundary until B turns upward
    scale = max(1.0, abs(lo))
    step = 1e-7 * scale
    x_prev = lo + step
    f_prev = f(x_prev)
    a = lo + step * 2.0 ** -16
    b = None
    while True:
        step *= 2.0
        if step > _MAX_SPAN:
            raise BracketingError(
                f"no interior minimum of B within ({lo}, {lo + _MAX_SPAN}]"
            )
        x = lo + step
        fx = f(x)
        if fx >= f_prev:
            b = x
            break
        a = x_prev
        x_prev, f_prev = x, fx

    # golden-section on [a, b] down to an absolute width of 1e-10
    bracket = (a, b)
    h = b - a
    c = b - _INV_PHI * h
    d = a + _INV_PHI * h
    fc, fd = f(c), f(d)
    while h > _GS_TOL:
        if fc < fd:
            b, d, fd = d, c, fc
            h = b - a
            c = b - _INV_PHI * h
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            h = b - a
            d = a + _INV_PHI * h
            fd = f(d)
    lam_m, ln_b_min = (c, fc) if fc < fd else (d, fd)

    # unimodality of B along the half-line is observed, not proven, so
    # verify: local two-sided probe plus a coarse scan of the search interval
    left_ok = lam_m - _PROBE <= lo or f(lam_m - _PROBE) >= ln_b_min
    if not left_ok or f(lam_m + _PROBE) < ln_b_min:
        raise BracketingError(
            f"converged point lambda = {lam_m} fails the local-minimum probe"
        )
    span_lo, span_hi = bracket
    for i in range(100):
        x = span_lo + (span_hi - span_lo) * (i + 0.5) / 100.0
        if f(x) < ln_b_min - 1e-9:
            raise BracketingError(
                f"scan found B({x}) below the converged minimum; "
                "B is not unimodal on the bracket"
            )
    return lam_m, ln_b_min, bracket


def minimize_big_B(alpha: float, p_tilde: float, q: float) -> tuple[float, float]:
    """Minimize B over its half-line; returns (lambda_m, B_min)."""
    lam_m, ln_b_min, _ = _minimize_ln_big_B(alpha, p_tilde, q)
    if ln_b_min > _LN_MAX:
        raise OverflowRangeError(
            f"B_min = exp({ln_b_min:.2f}) exceeds the double-precision range"
        )
    return lam_m, math.exp(ln_b_min)


def tau_bound(problem: ScalarBoundProblem) -> ScalarBoundResult:
    """Blow-up time upper bound for the scalar problem.

    tau = [Gamma(q(1-pt)+1) / (u0^p Gamma(q+1)) * B(lambda_m)]^(1/(pt(alpha+q)))
    evaluated in log space.
    """
    p_tilde = conjugate_index(problem.p)
    lam_m, ln_b_min, bracket = _minimize_ln_big_B(problem.alpha, p_tilde, problem.q)
    ln_tau = (
        ln_gamma(problem.q * (1.0 - p_tilde) + 1.0)
        - problem.p * math.log(problem.u0)
        - ln_gamma(problem.q + 1.0)
        + ln_b_min
    ) / (p_tilde * (problem.alpha + problem.q))
    if ln_tau > _LN_MAX or ln_b_min > _LN_MAX:
        raise OverflowRangeError("blow-up bound exceeds the double-precision range")
    return ScalarBoundResult(
        tau_ub=math.exp(ln_tau),
        lambda_m=lam_m,
        B_min=math.exp(ln_b_min),
        bracket=bracket,
    )


def _try_branch(branch, j, gamma_j, p_j, u_j, q_j, alpha, conditions):
    """conditions: list of (description, holds). Returns certificate or violations."""
    violations = [desc for desc, ok in conditions if not ok]
    if p_j <= 1.0:
        violations.append(
            f"derived exponent p_{j} = {p_j} does not exceed 1, so its "
            "conjugate index is undefined"
        )
    else:
        p_tilde = conjugate_index(p_j)
        if not (q_j + 1.0 > q_j * p_tilde):
            violations.append(
                f"admissibility q_{j}+1 > q_{j}*p_tilde_{j} fails: "
                f"{q_j + 1} <= {q_j * p_tilde}"
            )
    if violations:
        return None, violations
    scalar = tau_bound(ScalarBoundProblem(alpha=alpha, u0=u_j, q=q_j, p=p_j))
    cert = BoundCertificate(
        branch=branch,
        j=j,
        gamma_j=gamma_j,
        p_j=p_j,
        p_tilde_j=conjugate_index(p_j),
        u_j=u_j,
        q_j=q_j,
        scalar=scalar,
        tau_ub=scalar.tau_ub,
    )
    return cert, []


def theorem_bound(params: PowerLawParams) -> BoundCertificate:
    """Case analysis reducing the system to a scalar bound.

    Distinct time exponents single out the component with the larger one;
    equal exponents allow two symmetric reductions and both are tried,
    returning the smaller bound when both apply. When no branch's
    hypotheses hold the theorem says nothing and NotApplicableError
    carries every violated condition.
    """
    a = params.alpha
    if params.q1 != params.q2:
        # i has the smaller time exponent, j = 3 - i survives the reduction
        if params.q1 < params.q2:
            i, j = 1, 2
            p_ij, p_ji = params.p12, params.p21
            p_ii, p_jj = params.p11, params.p22
            u_j, q_j = params.y0, params.q2
        else:
            i, j = 2, 1
            p_ij, p_ji = params.p21, params.p12
            p_ii, p_jj = params.p22, params.p11
            u_j, q_j = params.x0, params.q1
        gamma_j = (p_ij + 1.0 - p_ji) / 2.0
        p_j = p_ji + p_jj * gamma_j
        cert, violations = _try_branch(
            Branch.DISTINCT_Q, j, gamma_j, p_j, u_j, q_j, a,
            [
                (f"p_{i}{j} >= 3 + p_{j}{i} fails: {p_ij} < {3.0 + p_ji}",
                 p_ij >= 3.0 + p_ji),
                (f"p_{i}{i} + 1 >= p_{j}{j} fails: {p_ii + 1.0} < {p_jj}",
                 p_ii + 1.0 >= p_jj),
            ],
        )
        if cert is None:
            raise NotApplicableError(violations)
        return cert

    gamma_1 = (params.p22 + 1.0 - params.p11) / 2.0
    p_1 = params.p11 + params.p12 * gamma_1
    cert1, viol1 = _try_branch(
        Branch.EQUAL_Q_BRANCH1, 1, gamma_1, p_1, params.x0, params.q1, a,
        [
            (f"p_22 >= 3 + p_11 fails: {params.p22} < {3.0 + params.p11}",
             params.p22 >= 3.0 + params.p11),
            (f"p_21 + 1 >= p_12 fails: {params.p21 + 1.0} < {params.p12}",
             params.p21 + 1.0 >= params.p12),
        ],
    )
    gamma_2 = (params.p12 + 1.0 - params.p21) / 2.0
    p_2 = params.p21 + params.p22 * gamma_2
    cert2, viol2 = _try_branch(
        Branch.EQUAL_Q_BRANCH2, 2, gamma_2, p_2, params.y0, params.q2, a,
        [
            (f"p_12 >= 3 + p_21 fails: {params.p12} < {3.0 + params.p21}",
             params.p12 >= 3.0 + params.p21),
            (f"p_11 + 1 >= p_22 fails: {params.p11 + 1.0} < {params.p22}",
             params.p11 + 1.0 >= params.p22),
        ],
    )
    if cert1 is not None and cert2 is not None:
        win, alt = (cert1, cert2) if cert1.tau_ub <= cert2.tau_ub else (cert2, cert1)
        return BoundCertificate(
            branch=Branch.EQUAL_Q_BOTH,
            j=win.j,
            gamma_j=win.gamma_j,
            p_j=win.p_j,
            p_tilde_j=win.p_tilde_j,
            u_j=win.u_j,
            q_j=win.q_j,
            scalar=win.scalar,
            tau_ub=win.tau_ub,
            alternate=alt,
        )
    if cert1 is not None:
        return cert1
    if cert2 is not None:
        return cert2
    raise NotApplicableError(
        [f"branch 1: {v}" for v in viol1] + [f"branch 2: {v}" for v in viol2]
    )

"""Entropy functionals of chi-squared family laws.

Six functionals of a density f, parametrized by positive orders:

* Shannon            H  = -int f log f
* Renyi              H_alpha = log(int f^alpha) / (1 - alpha)
* generalized Renyi  H_{alpha,beta} = (log int f^alpha - log int f^beta) / (beta - alpha)
* its diagonal       H_{alpha,alpha} = -(int f^alpha log f) / (int f^alpha)
* Tsallis            T_alpha = (int f^alpha - 1) / (1 - alpha)
* Sharma-Mittal      S_{alpha,beta} = ((int f^alpha)^((1-beta)/(1-alpha)) - 1) / (1 - beta)

Every evaluation is gated on the existence condition for this family:
the effective degrees of freedom must exceed 1, and each order a used
in an integral int f^a must satisfy k > 2 - 2/a, otherwise the defining
integral diverges at the origin.  Failing the gate yields an
``undefined`` result (never an exception), as do parameter choices on
the removable singularities (alpha = 1, or alpha = beta off-diagonal)
and quadrature that cannot certify its tolerance.

Results are tri-state (finite / infinite / undefined) so that limit
values of stochastic process marginals, which can be genuinely
infinite, flow through the same type.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .dist import CentralChiSq, GammaLaw, Law, NoncentralChiSq, ScaledLaw
from .quad import NonConvergence, QuadConfig, QuadResult, integrate_halfline
from .specfun import digamma, log_gamma

__all__ = [
    "EntropyKind",
    "EntropySpec",
    "EntropyResult",
    "GateDecision",
    "GateError",
    "REASON_GATE",
    "REASON_PARAMETER",
    "REASON_NONCONVERGENCE",
    "effective_dof",
    "existence_gate",
    "integral_f_alpha",
    "integral_f_alpha_log",
    "entropy",
    "scale_transform",
    "gamma_entropy_closed_form",
    "lambda_convergence_study",
    "LambdaRow",
]

# Reason codes carried by undefined results.
REASON_GATE = "existence-gate"
REASON_PARAMETER = "parameter"
REASON_NONCONVERGENCE = "non-convergence"

# Orders this close to a removable singularity (alpha = 1, or
# alpha = beta off-diagonal) are refused at evaluation time: the
# defining quotient amplifies quadrature error beyond usefulness.
_PARAM_EPS = 1e-9


class EntropyKind(enum.Enum):
    SHANNON = "shannon"
    RENYI = "renyi"
    GEN_RENYI = "gen-renyi"
    GEN_RENYI_DIAG = "gen-renyi-diag"
    TSALLIS = "tsallis"
    SHARMA_MITTAL = "sharma-mittal"


_NEEDS_ALPHA = {
    EntropyKind.RENYI,
    EntropyKind.GEN_RENYI,
    EntropyKind.GEN_RENYI_DIAG,
    EntropyKind.TSALLIS,
    EntropyKind.SHARMA_MITTAL,
}
_NEEDS_BETA = {EntropyKind.GEN_RENYI, EntropyKind.SHARMA_MITTAL}


@dataclass(frozen=True)
class EntropySpec:
    """Which functional to evaluate, with its order parameters.

    Orders must be positive and finite where required; the removable
    singularities (alpha = 1 for Renyi/Tsallis/Sharma-Mittal, beta = 1
    for Sharma-Mittal, alpha = beta for the off-diagonal generalized
    Renyi) are accepted here and reported as undefined at evaluation.
    """

    kind: EntropyKind
    alpha: float | None = None
    beta: float | None = None

    def __post_init__(self) -> None:
        if not isinstance(self.kind, EntropyKind):
            raise ValueError(f"kind must be an EntropyKind, got {self.kind!r}")
        if self.kind in _NEEDS_ALPHA:
            a = self.alpha
            if a is None or not math.isfinite(a) or a <= 0.0:
                raise ValueError(f"{self.kind.value} requires finite alpha > 0, got {a}")
            object.__setattr__(self, "alpha", float(a))
        elif self.alpha is not None:
            raise ValueError(f"{self.kind.value} takes no alpha")
        if self.kind in _NEEDS_BETA:
            b = self.beta
            if b is None or not math.isfinite(b) or b <= 0.0:
                raise ValueError(f"{self.kind.value} requires finite beta > 0, got {b}")
            object.__setattr__(self, "beta", float(b))
        elif self.beta is not None:
            raise ValueError(f"{self.kind.value} takes no beta")

    @classmethod
    def shannon(cls) -> "EntropySpec":
        return cls(EntropyKind.SHANNON)

    @classmethod
    def renyi(cls, alpha: float) -> "EntropySpec":
        return cls(EntropyKind.RENYI, alpha=alpha)

    @classmethod
    def gen_renyi(cls, alpha: float, beta: float) -> "EntropySpec":
        return cls(EntropyKind.GEN_RENYI, alpha=alpha, beta=beta)

    @classmethod
    def gen_renyi_diag(cls, alpha: float) -> "EntropySpec":
        return cls(EntropyKind.GEN_RENYI_DIAG, alpha=alpha)

    @classmethod
    def tsallis(cls, alpha: float) -> "EntropySpec":
        return cls(EntropyKind.TSALLIS, alpha=alpha)

    @classmethod
    def sharma_mittal(cls, alpha: float, beta: float) -> "EntropySpec":
        return cls(EntropyKind.SHARMA_MITTAL, alpha=alpha, beta=beta)

    def orders(self) -> tuple[float, ...]:
        """Orders a for which int f^a must exist."""
        if self.kind is EntropyKind.SHANNON:
            return (1.0,)
        if self.kind is EntropyKind.GEN_RENYI:
            return (self.alpha, self.beta)
        return (self.alpha,)


STATE_FINITE = "finite"
STATE_INFINITE = "infinite"
STATE_UNDEFINED = "undefined"


@dataclass(frozen=True)
class EntropyResult:
    """Tri-state outcome of an entropy evaluation.

    ``finite`` carries a value (and the quadrature error estimate when
    one exists); ``infinite`` means the functional diverges to +inf;
    ``undefined`` carries a reason code from the REASON_* constants.
    """

    state: str
    value: float | None = None
    reason: str | None = None
    error_estimate: float | None = None

    def __post_init__(self) -> None:
        if self.state not in (STATE_FINITE, STATE_INFINITE, STATE_UNDEFINED):
            raise ValueError(f"bad state {self.state!r}")
        if self.state == STATE_FINITE:
            if self.value is None or not math.isfinite(self.value):
                raise ValueError(f"finite result needs a finite value, got {self.value}")
        elif self.value is not None:
            raise ValueError(f"{self.state} result must not carry a value")
        if self.state == STATE_UNDEFINED and not self.reason:
            raise ValueError("undefined result needs a reason")

    @classmethod
    def finite(cls, value: float, error_estimate: float | None = None) -> "EntropyResult":
        return cls(STATE_FINITE, value=float(value), error_estimate=error_estimate)

    @classmethod
    def infinite(cls) -> "EntropyResult":
        return cls(STATE_INFINITE)

    @classmethod
    def undefined(cls, reason: str) -> "EntropyResult":
        return cls(STATE_UNDEFINED, reason=reason)

    @property
    def is_finite(self) -> bool:
        return self.state == STATE_FINITE

    @property
    def is_infinite(self) -> bool:
        return self.state == STATE_INFINITE

    @property
    def is_undefined(self) -> bool:
        return self.state == STATE_UNDEFINED

    def as_float(self) -> float:
        """Finite value, +inf for infinite; raises on undefined."""
        if self.is_finite:
            return self.value
        if self.is_infinite:
            return math.inf
        raise ValueError(f"entropy undefined: {self.reason}")


@dataclass(frozen=True)
class GateDecision:
    ok: bool
    detail: str | None = None

    def __bool__(self) -> bool:
        return self.ok


class GateError(ValueError):
    """Raised by the raw integral operations when the gate fails."""


def effective_dof(law: Law) -> float:
    """Degrees of freedom governing the origin singularity of the law."""
    if isinstance(law, (CentralChiSq, NoncentralChiSq)):
        return law.k
    if isinstance(law, GammaLaw):
        return 2.0 * law.shape
    if isinstance(law, ScaledLaw):
        return effective_dof(law.base)
    raise ValueError(f"unsupported law {type(law).__name__}")


def existence_gate(k: float, spec: EntropySpec) -> GateDecision:
    """Existence condition for ``spec`` on a law with dof ``k``.

    All functionals require ``k > 1``; each integral order a used by
    the functional additionally requires ``k > 2 - 2/a`` (only binding
    for a > 1).  The decision depends on the dof alone, not on the
    noncentrality.
    """
    kf = float(k)
    if math.isnan(kf):
        raise ValueError("k must not be NaN")
    if kf <= 1.0:
        return GateDecision(False, f"requires dof > 1, got {kf}")
    for a in spec.orders():
        threshold = 2.0 - 2.0 / a
        if kf <= threshold:
            return GateDecision(
                False,
                f"order {a} requires dof > {threshold}, got {kf}")
    return GateDecision(True)


def _renyi_like(alpha: float) -> EntropySpec:
    # internal helper: a spec whose gate checks the single order alpha
    if abs(alpha - 1.0) < 1e-15:
        return EntropySpec.shannon()
    return EntropySpec(EntropyKind.RENYI, alpha=alpha)


def _gate_or_raise(law: Law, alpha: float) -> None:
    decision = existence_gate(effective_dof(law), _renyi_like(alpha))
    if not decision:
        raise GateError(f"existence gate failed: {decision.detail}")


def _quad_f_alpha(law: Law, alpha: float, config: QuadConfig | None) -> QuadResult:
    def integrand(x: float) -> float:
        return math.exp(alpha * law.log_pdf(x))

    return integrate_halfline(integrand, config)


def _quad_f_alpha_log(law: Law, alpha: float, config: QuadConfig | None) -> QuadResult:
    def integrand(x: float) -> float:
        lp = law.log_pdf(x)
        w = math.exp(alpha * lp)
        return w * lp if w != 0.0 else 0.0

    return integrate_halfline(integrand, config)


def integral_f_alpha(law: Law, alpha: float,
                     config: QuadConfig | None = None) -> float:
    """int_0^inf f(x)^alpha dx by adaptive quadrature.

    Requires the existence gate for order ``alpha`` (raises
    :class:`GateError` otherwise); propagates quadrature errors.
    """
    a = float(alpha)
    if not (math.isfinite(a) and a > 0.0):
        raise ValueError(f"alpha must be finite and > 0, got {alpha}")
    _gate_or_raise(law, a)
    return _quad_f_alpha(law, a, config).value


def integral_f_alpha_log(law: Law, alpha: float,
                         config: QuadConfig | None = None) -> float:
    """int_0^inf f(x)^alpha log f(x) dx by adaptive quadrature."""
    a = float(alpha)
    if not (math.isfinite(a) and a > 0.0):
        raise ValueError(f"alpha must be finite and > 0, got {alpha}")
    _gate_or_raise(law, a)
    return _quad_f_alpha_log(law, a, config).value


def _parameter_exclusion(spec: EntropySpec) -> str | None:
    """Detail string if the order parameters hit a removable singularity."""
    a, b = spec.alpha, spec.beta
    if spec.kind in (EntropyKind.RENYI, EntropyKind.TSALLIS) and abs(a - 1.0) < _PARAM_EPS:
        return f"alpha = {a} too close to 1"
    if spec.kind is EntropyKind.SHARMA_MITTAL:
        if abs(a - 1.0) < _PARAM_EPS:
            return f"alpha = {a} too close to 1"
        if abs(b - 1.0) < _PARAM_EPS:
            return f"beta = {b} too close to 1"
    if spec.kind is EntropyKind.GEN_RENYI and abs(a - b) < _PARAM_EPS:
        return f"alpha = {a} and beta = {b} too close together"
    return None


def entropy(law: Law, spec: EntropySpec,
            config: QuadConfig | None = None, *,
            scaled_direct: bool = False) -> EntropyResult:
    """Evaluate ``spec`` on ``law``; never raises for in-domain laws.

    Scaled laws are evaluated by default through the exact scaling
    identities applied to the base law's entropy, which is cheaper and
    better conditioned; ``scaled_direct=True`` forces quadrature against
    the scaled density itself (useful for cross-checking).
    """
    if isinstance(law, ScaledLaw) and not scaled_direct:
        base = entropy(law.base, spec, config)
        return scale_transform(base, spec, law.factor)

    if _parameter_exclusion(spec) is not None:
        return EntropyResult.undefined(REASON_PARAMETER)
    if not existence_gate(effective_dof(law), spec):
        return EntropyResult.undefined(REASON_GATE)

    try:
        return _entropy_quadrature(law, spec, config)
    except NonConvergence:
        return EntropyResult.undefined(REASON_NONCONVERGENCE)


def _entropy_quadrature(law: Law, spec: EntropySpec,
                        config: QuadConfig | None) -> EntropyResult:
    kind = spec.kind
    if kind is EntropyKind.SHANNON:
        r = _quad_f_alpha_log(law, 1.0, config)
        return EntropyResult.finite(-r.value, r.error_estimate)

    a = spec.alpha
    if kind in (EntropyKind.RENYI, EntropyKind.TSALLIS, EntropyKind.SHARMA_MITTAL):
        ra = _quad_f_alpha(law, a, config)
        if ra.value <= 0.0:
            return EntropyResult.undefined(REASON_NONCONVERGENCE)
        if kind is EntropyKind.RENYI:
            value = math.log(ra.value) / (1.0 - a)
            err = ra.error_estimate / (abs(1.0 - a) * ra.value)
        elif kind is EntropyKind.TSALLIS:
            value = (ra.value - 1.0) / (1.0 - a)
            err = ra.error_estimate / abs(1.0 - a)
        else:
            expo = (1.0 - spec.beta) / (1.0 - a)
            value = math.expm1(expo * math.log(ra.value)) / (1.0 - spec.beta)
            deriv = abs(expo) * math.exp((expo - 1.0) * math.log(ra.value))
            err = deriv * ra.error_estimate / abs(1.0 - spec.beta)
        return EntropyResult.finite(value, err)

    if kind is EntropyKind.GEN_RENYI:
        b = spec.beta
        ra = _quad_f_alpha(law, a, config)
        rb = _quad_f_alpha(law, b, config)
        if ra.value <= 0.0 or rb.value <= 0.0:
            return EntropyResult.undefined(REASON_NONCONVERGENCE)
        value = (math.log(ra.value) - math.log(rb.value)) / (b - a)
        err = (ra.error_estimate / ra.value + rb.error_estimate / rb.value) / abs(b - a)
        return EntropyResult.finite(value, err)

    if kind is EntropyKind.GEN_RENYI_DIAG:
        num = _quad_f_alpha_log(law, a, config)
        den = _quad_f_alpha(law, a, config)
        if den.value <= 0.0:
            return EntropyResult.undefined(REASON_NONCONVERGENCE)
        value = -num.value / den.value
        err = (num.error_estimate
               + abs(num.value) * den.error_estimate / den.value) / den.value
        return EntropyResult.finite(value, err)

    raise ValueError(f"unhandled kind {kind!r}")


def _power_expm1(log_c: float, one_minus_order: float) -> float:
    """(C^p - 1) / p with p = one_minus_order, accurate for C near 1."""
    return math.expm1(one_minus_order * log_c) / one_minus_order


def scale_transform(base_result: EntropyResult, spec: EntropySpec,
                    factor: float) -> EntropyResult:
    """Entropy of ``factor * X`` from the entropy of ``X``.

    Additive kinds (Shannon, Renyi, both generalized Renyi forms) shift
    by ``log factor``.  Tsallis maps through
    ``C^(1-alpha) H + (C^(1-alpha) - 1) / (1 - alpha)`` and
    Sharma-Mittal does the same with ``beta``.  Infinite stays infinite
    (the affine maps have positive slope), undefined passes through.
    """
    c = float(factor)
    if not (math.isfinite(c) and c > 0.0):
        raise ValueError(f"factor must be finite and > 0, got {factor}")
    if not base_result.is_finite:
        return base_result

    log_c = math.log(c)
    kind = spec.kind
    if kind in (EntropyKind.SHANNON, EntropyKind.RENYI,
                EntropyKind.GEN_RENYI, EntropyKind.GEN_RENYI_DIAG):
        return EntropyResult.finite(base_result.value + log_c,
                                    base_result.error_estimate)

    if kind is EntropyKind.TSALLIS:
        p = 1.0 - spec.alpha
    elif kind is EntropyKind.SHARMA_MITTAL:
        p = 1.0 - spec.beta
    else:
        raise ValueError(f"unhandled kind {kind!r}")
    if abs(p) < _PARAM_EPS:
        return EntropyResult.undefined(REASON_PARAMETER)
    slope = math.exp(p * log_c)
    value = slope * base_result.value + _power_expm1(log_c, p)
    err = None if base_result.error_estimate is None else slope * base_result.error_estimate
    return EntropyResult.finite(value, err)


def _gamma_log_integral_moment(shape: float, scale: float, a: float) -> float:
    """log int f^a for a GammaLaw f, valid when a (shape-1) + 1 > 0.

    int f^a = Gamma(a(s-1)+1) / (Gamma(s)^a a^(a(s-1)+1) theta^(a-1))
    """
    g = a * (shape - 1.0) + 1.0
    return (log_gamma(g) - a * log_gamma(shape)
            + (1.0 - a) * math.log(scale) - g * math.log(a))


def gamma_entropy_closed_form(shape: float, scale: float,
                              spec: EntropySpec) -> EntropyResult:
    """Every functional of a GammaLaw in closed form (no quadrature).

    Built from the exact value of ``log int f^a`` for gamma densities;
    subject to the same existence gate as the quadrature route with
    effective dof ``2 * shape``, and to the same parameter exclusions.
    """
    s = float(shape)
    theta = float(scale)
    if not (math.isfinite(s) and s > 0.0):
        raise ValueError(f"shape must be finite and > 0, got {shape}")
    if not (math.isfinite(theta) and theta > 0.0):
        raise ValueError(f"scale must be finite and > 0, got {scale}")

    if _parameter_exclusion(spec) is not None:
        return EntropyResult.undefined(REASON_PARAMETER)
    if not existence_gate(2.0 * s, spec):
        return EntropyResult.undefined(REASON_GATE)

    kind = spec.kind
    if kind is EntropyKind.SHANNON:
        value = math.log(theta) + log_gamma(s) + s + (1.0 - s) * digamma(s)
        return EntropyResult.finite(value)

    a = spec.alpha
    if kind is EntropyKind.RENYI:
        return EntropyResult.finite(
            _gamma_log_integral_moment(s, theta, a) / (1.0 - a))
    if kind is EntropyKind.GEN_RENYI:
        b = spec.beta
        la = _gamma_log_integral_moment(s, theta, a)
        lb = _gamma_log_integral_moment(s, theta, b)
        return EntropyResult.finite((la - lb) / (b - a))
    if kind is EntropyKind.GEN_RENYI_DIAG:
        g = a * (s - 1.0) + 1.0
        value = (math.log(theta) + log_gamma(s)
                 + (s - 1.0) * (math.log(a) - digamma(g))
                 + (s - 1.0) + 1.0 / a)
        return EntropyResult.finite(value)
    if kind is EntropyKind.TSALLIS:
        return EntropyResult.finite(
            math.expm1(_gamma_log_integral_moment(s, theta, a)) / (1.0 - a))
    if kind is EntropyKind.SHARMA_MITTAL:
        b = spec.beta
        la = _gamma_log_integral_moment(s, theta, a)
        return EntropyResult.finite(
            math.expm1(la * (1.0 - b) / (1.0 - a)) / (1.0 - b))
    raise ValueError(f"unhandled kind {kind!r}")


@dataclass(frozen=True)
class LambdaRow:
    lam: float
    result: EntropyResult
    gap_to_central: float | None


def lambda_convergence_study(k: float, spec: EntropySpec,
                             lambda_grid, config: QuadConfig | None = None
                             ) -> list[LambdaRow]:
    """Entropies of NoncentralChiSq(k, lam) along a shrinking lam grid.

    ``lambda_grid`` must be strictly decreasing and nonnegative.  Each
    row carries |H(lam) - H(0)| against the central law when both are
    finite, exposing the continuity of every functional in lam at 0.
    """
    grid = [float(v) for v in lambda_grid]
    if not grid:
        raise ValueError("lambda_grid must be nonempty")
    if any(not math.isfinite(v) or v < 0.0 for v in grid):
        raise ValueError("lambda_grid entries must be finite and >= 0")
    if any(g1 <= g2 for g1, g2 in zip(grid, grid[1:])):
        raise ValueError("lambda_grid must be strictly decreasing")

    central = entropy(CentralChiSq(k), spec, config)
    rows = []
    for lam in grid:
        res = entropy(NoncentralChiSq(k, lam), spec, config)
        gap = None
        if res.is_finite and central.is_finite:
            gap = abs(res.value - central.value)
        rows.append(LambdaRow(lam=lam, result=res, gap_to_central=gap))
    return rows

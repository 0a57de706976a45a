"""Closed-form bounds for rejection sampling of uniform hypergraphs.

Asymptotic statements come with unquantified ``o(1)`` / ``O(.)`` terms.
Every calculator here drops those terms and, where the underlying result
is asymptotic, returns a :class:`Flagged` value whose ``valid`` field is a
concrete proxy for the asymptotic precondition (each proxy replaces
``x = o(M)`` with ``x <= M/10``). Probabilities are clamped to ``[0, 1]``;
a clamped-to-zero bound is vacuous, not an error.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import NamedTuple

from hypersample.config_model import expected_trials_valid, log_expected_trials
from hypersample.core import BipartiteDegreeSequence, HypergraphInstance
from hypersample.errors import IndivisibleTotal, InvalidRegion

# exact big-integer arithmetic below these sizes, log-gamma above
_EXACT_MAX_N = 10**6
_EXACT_MAX_K = 100


class Flagged(NamedTuple):
    value: float
    valid: bool


class C0Verdict(NamedTuple):
    holds: bool
    min_c0: float


def log_comb(a: int, b: int) -> float:
    if b < 0 or b > a:
        return -math.inf
    if a <= _EXACT_MAX_N and min(b, a - b) <= _EXACT_MAX_K:
        return math.log(math.comb(a, b))
    return math.lgamma(a + 1) - math.lgamma(b + 1) - math.lgamma(a - b + 1)


def _clamp(p: float) -> float:
    return min(1.0, max(0.0, p))


def _exact_ok(n: int, k: int) -> bool:
    return n <= _EXACT_MAX_N and k <= _EXACT_MAX_K


def regular_collision_ratio(n: int, d: int, k: int) -> Fraction:
    if (n * d) % k:
        raise IndivisibleTotal(f"k={k} does not divide nd={n * d}")
    m = n * d // k
    return Fraction(math.comb(m, 2), math.comb(n, k))


def regular_simplicity_bound_exact(n: int, d: int, k: int) -> Fraction:
    return max(Fraction(0), 1 - regular_collision_ratio(n, d, k))


def regular_simplicity_bound(n: int, d: int, k: int) -> float:
    """``max(0, 1 - C(m,2)/C(n,k))`` for d-regular degrees, ``m = nd/k``.

    Lower bound on the probability that a uniform element of B(n, d, k)
    is H-simple; non-asymptotic, requires ``k >= 3``.
    """
    return float(regular_simplicity_bound_exact(n, d, k))


def irregular_collision_ratio_exact(inst: HypergraphInstance) -> Fraction:
    n, k, M, m = inst.n, inst.k, inst.M, inst.m
    return Fraction(n * inst.d_max, M) ** k * Fraction(math.comb(m, 2), math.comb(n, k))


def collision_log_ratio(n: int, M: int, d_max: int, k: int) -> float:
    """``ln[(n d_max / M)^k C(M/k, 2) / C(n, k)]``, or ``-inf`` when ``M/k < 2``."""
    m = M // k
    if m < 2:
        return -math.inf
    return k * math.log(n * d_max / M) + log_comb(m, 2) - log_comb(n, k)


def irregular_collision_log_ratio(inst: HypergraphInstance) -> float:
    return collision_log_ratio(inst.n, inst.M, inst.d_max, inst.k)


def irregular_bound_value(n: int, M: int, d_max: int, k: int) -> float:
    """``max(0, 1 - (n d_max / M)^k C(M/k, 2) / C(n, k))`` from raw parameters."""
    lr = collision_log_ratio(n, M, d_max, k)
    return 0.0 if lr >= 0 else _clamp(-math.expm1(lr))


def irregular_simplicity_bound(inst: HypergraphInstance) -> Flagged:
    """Leading term of the sparse irregular lower bound on P(H-simple).

    ``valid`` reports ``k^2 d_max^2 <= M/10``.
    """
    value = irregular_bound_value(inst.n, inst.M, inst.d_max, inst.k)
    return Flagged(value, 10 * inst.k**2 * inst.d_max**2 <= inst.M)


def c0_condition(inst: HypergraphInstance, c0: float) -> C0Verdict:
    """Whether ``(d_max/d)^k C(m,2) <= c0 C(n,k)`` with ``d = M/n``.

    ``min_c0`` is the smallest c0 for which the inequality holds. The
    comparison is exact (rational) for moderate ``n`` and ``k``; ``c0`` is
    read through its decimal repr so ``0.05`` means 1/20.
    """
    if not 0 < c0 < 1:
        raise InvalidRegion(f"c0={c0} must lie in (0, 1)")
    if _exact_ok(inst.n, inst.k):
        ratio = irregular_collision_ratio_exact(inst)
        return C0Verdict(ratio <= Fraction(repr(c0)), float(ratio))
    lr = irregular_collision_log_ratio(inst)
    return C0Verdict(lr <= math.log(c0), math.exp(lr) if lr < 700 else math.inf)


def tv_output_bound(eps: float, c0: float) -> float:
    """TV distance of the hypergraph output from uniform: ``3 eps / (2 (1 - c0))``."""
    if not 0 < c0 < 1 or eps < 0:
        raise InvalidRegion(f"need 0 < c0 < 1 and eps >= 0, got c0={c0}, eps={eps}")
    return 3 * eps / (2 * (1 - c0))


def runtime_factor(eps: float, c0: float) -> float:
    """Expected-iteration multiplier ``1 / (1 - c0 - eps)``."""
    if c0 + eps >= 1:
        raise InvalidRegion(f"c0 + eps = {c0 + eps} >= 1")
    return 1 / (1 - c0 - eps)


def sampler_eps(eps: float, c0: float) -> float:
    """Accuracy to request from the bipartite sampler for output accuracy ``eps``."""
    return 2 * eps * (1 - c0) / 3


def gmw_log_count(bds: BipartiteDegreeSequence) -> Flagged:
    """Natural log of the leading-order count of B(d, kvec).

    ``ln M! - sum ln d_i! - sum ln k_j! - M_2 L_2 / (2 M^2)``; the big-O
    correction in the exponent is dropped. ``valid`` reports
    ``(k_max d_max)^(3/2) <= M/10``.
    """
    M = bds.M
    if M == 0:
        return Flagged(0.0, False)
    value = (
        math.lgamma(M + 1)
        - sum(math.lgamma(x + 1) for x in bds.d)
        - sum(math.lgamma(x + 1) for x in bds.kvec)
        - bds.M_r(2) * bds.L_r(2) / (2 * M * M)
    )
    return Flagged(value, 10 * (bds.k_max * bds.d_max) ** 1.5 <= M)


def mixing_budget_regular(n: int, d: int, eps: float) -> float:
    """ln of ``32 d^17 n^6 (2dn ln(2dn) + ln(1/eps))``.

    Switch-chain mixing bound on d-regular bipartite graphs with ``n``
    nodes on each side.
    """
    if not 0 < eps < 1:
        raise ValueError("eps must lie in (0, 1)")
    N = 2 * d * n
    return (
        math.log(32) + 17 * math.log(d) + 6 * math.log(n)
        + math.log(N * math.log(N) + math.log(1 / eps))
    )


def mixing_budget_irregular(inst: HypergraphInstance, eps: float) -> Flagged:
    """ln of ``D^10 M^7 (M ln(M) / 2 + ln(1/eps))`` with ``D = max(d_max, k)``.

    ``valid`` reports ``3 <= d_max, k <= sqrt(M)/3``.
    """
    if not 0 < eps <= 1:
        raise ValueError("eps must lie in (0, 1]")
    M = inst.M
    delta = max(inst.d_max, inst.k)
    value = (
        10 * math.log(delta) + 7 * math.log(M)
        + math.log(0.5 * M * math.log(M) + math.log(1 / eps))
    )
    hi = math.sqrt(M) / 3
    valid = 3 <= inst.d_max <= hi and 3 <= inst.k <= hi
    return Flagged(value, valid)


@dataclass
class BoundsReport:
    """Every closed-form bound for one instance.

    Fields that depend on ``c0``/``eps`` are None when those are undefined
    or out of range. ``gmw_log_count`` and the mixing budgets are natural
    logs and serialize as ``{"ln": value}``.
    """

    n: int
    k: int
    M: int
    m: int
    d_max: int
    theorem_range: str
    regular: bool
    regular_simplicity_lower_bound: float | None
    irregular_simplicity_lower_bound: float
    irregular_bound_valid: bool
    c0: float | None
    c0_feasible: bool | None
    implied_c0: float
    eps: float
    expected_config_trials: float
    expected_config_trials_valid: bool
    gmw_log_count: float
    gmw_valid: bool
    mixing_budget_regular: float | None
    mixing_budget_irregular: float
    mixing_irregular_range_ok: bool
    tv_output_bound: float | None
    runtime_factor: float | None
    fpaus_cap: int | None
    sampler_eps: float | None

    _LOG_FIELDS = ("gmw_log_count", "mixing_budget_regular", "mixing_budget_irregular")

    def to_dict(self) -> dict:
        out = asdict(self)
        for key in self._LOG_FIELDS:
            if out[key] is not None:
                out[key] = {"ln": out[key]}
        return out

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, data: dict) -> "BoundsReport":
        data = dict(data)
        for key in cls._LOG_FIELDS:
            if isinstance(data.get(key), dict):
                data[key] = data[key]["ln"]
        return cls(**data)


DEFAULT_EPS = 0.01


def bounds_report(
    inst: HypergraphInstance, c0: float | None = None, eps: float | None = None
) -> BoundsReport:
    """Assemble a :class:`BoundsReport`.

    Without ``c0`` the implied value (the smallest c0 satisfying the
    feasibility inequality) is used when it lies in (0, 1).
    """
    from hypersample.rejection import fpaus_cap

    eps = DEFAULT_EPS if eps is None else eps
    irr = irregular_simplicity_bound(inst)
    if _exact_ok(inst.n, inst.k):
        implied = float(irregular_collision_ratio_exact(inst))
    else:
        implied = math.exp(min(irregular_collision_log_ratio(inst), 700.0))
    if c0 is None and 0 < implied < 1:
        c0 = implied
    feasible = c0_condition(inst, c0).holds if c0 is not None else None

    tv = rf = cap = s_eps = None
    if c0 is not None and 0 < c0 < 1:
        tv = tv_output_bound(eps, c0)
        s_eps = sampler_eps(eps, c0)
        if c0 + eps < 1:
            rf = runtime_factor(eps, c0)
            cap = fpaus_cap(c0, eps)

    reg = inst.is_regular
    gmw = gmw_log_count(inst.bipartite())
    mix_irr = mixing_budget_irregular(inst, eps)
    return BoundsReport(
        n=inst.n,
        k=inst.k,
        M=inst.M,
        m=inst.m,
        d_max=inst.d_max,
        theorem_range="ok" if inst.in_theorem_range else "out of theorem range",
        regular=reg,
        regular_simplicity_lower_bound=(
            regular_simplicity_bound(inst.n, inst.d[0], inst.k) if reg else None
        ),
        irregular_simplicity_lower_bound=irr.value,
        irregular_bound_valid=irr.valid and inst.in_theorem_range,
        c0=c0,
        c0_feasible=feasible,
        implied_c0=implied,
        eps=eps,
        expected_config_trials=math.exp(min(log_expected_trials(inst), 700.0)),
        expected_config_trials_valid=expected_trials_valid(inst),
        gmw_log_count=gmw.value,
        gmw_valid=gmw.valid,
        # bound is for d-regular bipartite graphs with equal sides, i.e. d == k
        mixing_budget_regular=(
            mixing_budget_regular(inst.n, inst.k, eps)
            if reg and inst.d[0] == inst.k and eps < 1 else None
        ),
        mixing_budget_irregular=mix_irr.value,
        mixing_irregular_range_ok=mix_irr.valid,
        tv_output_bound=tv,
        runtime_factor=rf,
        fpaus_cap=cap,
        sampler_eps=s_eps,
    )

"""Closed-form lower and upper bounds on the k-limited packing number L_k(G).

Every bound is a :class:`BoundValue`.  Gated bounds carry ``applicable=False``
and a reason instead of a number; bounds that depend on an exact domination
search that ran out of budget carry ``status="unknown"``.

Binomials are exact integers; everything after that is double precision.
Integer forms use ``ceil(raw - EPS)`` for lower and ``floor(raw + EPS)`` for
upper bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .graph import Graph

EPS = 1e-9

LOWER_KEYS = ("main_eq1", "weak_cor1", "k1_eq2", "greedy_eq3", "degree_sum_eq4", "regular_k2_eq5", "trivial_n")
UPPER_KEYS = ("fraction_ineq5", "k_gamma", "gamma_times_k", "ktuple_formula_thm6", "regular_prop1", "trivial_n")


@dataclass(frozen=True)
class BoundValue:
    name: str
    kind: str  # "lower" | "upper"
    raw: float | None = None
    integer_form: int | None = None
    status: str = "ok"  # "ok" | "inapplicable" | "unknown"
    reason: str | None = None
    extra: dict = field(default_factory=dict, compare=False)

    @property
    def applicable(self) -> bool:
        return self.status == "ok"

    def to_json(self) -> dict:
        out = {
            "raw": self.raw,
            "integer_form": self.integer_form,
            "applicable": self.applicable,
            "status": self.status,
            "reason": self.reason,
        }
        out.update(self.extra)
        return out


def lower_int(raw: float) -> int:
    return math.ceil(raw - EPS)


def upper_int(raw: float) -> int:
    return math.floor(raw + EPS)


def strict_lower_int(raw: float) -> int:
    """Smallest integer strictly above ``raw`` (up to EPS)."""
    nearest = round(raw)
    if abs(raw - nearest) <= EPS:
        return nearest + 1
    return lower_int(raw)


def _lower(name: str, raw: float, **extra) -> BoundValue:
    return BoundValue(name, "lower", raw, lower_int(raw), extra=extra)


def _upper(name: str, raw: float, **extra) -> BoundValue:
    return BoundValue(name, "upper", raw, upper_int(raw), extra=extra)


def _gate(name: str, kind: str, reason: str) -> BoundValue:
    return BoundValue(name, kind, status="inapplicable", reason=reason)


def _unknown(name: str, kind: str, reason: str) -> BoundValue:
    return BoundValue(name, kind, status="unknown", reason=reason)


def _kth_root(c: int, k: float) -> float:
    # int -> float overflows past ~1e308, logs do not
    if c.bit_length() < 1000:
        return float(c) ** (1.0 / k)
    return math.exp(math.log(c) / k)


def main_eq1_raw(n: int, max_deg: int, k: int) -> float:
    c = math.comb(max_deg + 1, k + 1)
    return k * n / (_kth_root(c, k) * (1 + k) ** (1 + 1 / k))


def main_eq1_rewritten_raw(n: int, max_deg: int, k: int) -> float:
    """Same bound as ``k n / ((k+1) * (C(max_deg, k) (max_deg+1))^(1/k))``."""
    c = math.comb(max_deg, k) * (max_deg + 1)
    return k * n / ((k + 1) * _kth_root(c, k))


def lb_main(n: int, max_deg: int, k: int) -> BoundValue:
    if k < 1:
        return _gate("main_eq1", "lower", "requires k >= 1")
    if k > max_deg:
        return _gate("main_eq1", "lower", f"requires k <= max_deg ({k} > {max_deg}); L_k = n")
    return _lower("main_eq1", main_eq1_raw(n, max_deg, k))


def lb_weak(n: int, max_deg: int, k: int) -> BoundValue:
    """``k n / (e (1+max_deg)^(1+1/k))``, a strict lower bound.

    Strictness means an (almost) integral raw value r still forces
    L_k >= r + 1, except for the empty graph.
    """
    if k < 1 or max_deg < 1:
        return _gate("weak_cor1", "lower", "requires k >= 1 and max_deg >= 1")
    if k > max_deg:
        return _gate("weak_cor1", "lower", f"weakening of main_eq1, requires k <= max_deg ({k} > {max_deg})")
    raw = k * n / (math.e * (1 + max_deg) ** (1 + 1 / k))
    integer = 0 if n == 0 else strict_lower_int(raw)
    return BoundValue("weak_cor1", "lower", raw, integer)


def lb_k1(n: int, max_deg: int) -> BoundValue:
    if max_deg < 1:
        return _gate("k1_eq2", "lower", "requires max_deg >= 1")
    return _lower("k1_eq2", n / (2 * max_deg * (max_deg + 1)))


def lb_greedy(n: int, max_deg: int, min_deg: int) -> BoundValue:
    if max_deg < 1:
        return _gate("greedy_eq3", "lower", "requires max_deg >= 1")
    denom = max_deg * max_deg + 1
    return _lower("greedy_eq3", (n + max_deg * (max_deg - min_deg)) / denom, weaker=n / denom)


def lb_degree_sum(degrees: Sequence[int], max_deg: int | None = None) -> BoundValue:
    if max_deg is None:
        max_deg = max(degrees, default=0)
    if max_deg < 1:
        return _gate("degree_sum_eq4", "lower", "requires max_deg >= 1")
    return _lower("degree_sum_eq4", math.fsum(1.0 / (d * max_deg + 1) for d in degrees))


def lb_regular_k2(n: int, max_deg: int, regular: bool) -> BoundValue:
    if not regular:
        return _gate("regular_k2_eq5", "lower", "requires a regular graph")
    if max_deg < 3:
        return _gate("regular_k2_eq5", "lower", f"requires degree >= 3, got {max_deg}")
    return _lower("regular_k2_eq5", 2 * n / (max_deg * max_deg - max_deg + 2))


def lb_trivial(n: int, max_deg: int, k: int) -> BoundValue:
    if k < max_deg + 1:
        return _gate("trivial_n", "lower", "requires k >= max_deg + 1")
    return _lower("trivial_n", float(n))


def ub_fraction(n: int, k: int, connected: bool, min_deg: int) -> BoundValue:
    if not connected:
        return _gate("fraction_ineq5", "upper", "requires a connected graph")
    if k > min_deg:
        return _gate("fraction_ineq5", "upper", f"requires k <= min_deg ({k} > {min_deg})")
    return _upper("fraction_ineq5", k * n / (k + 1))


def ub_ktuple_formula(n: int, min_deg: int, k: int) -> BoundValue:
    if k < 1 or k > min_deg:
        return _gate("ktuple_formula_thm6", "upper", f"requires 1 <= k <= min_deg ({k} vs {min_deg})")
    dp = min_deg - k + 1
    b = math.comb(min_deg + 1, k - 1)
    raw = (1 - dp / (_kth_root(b, dp) * (1 + dp) ** (1 + 1 / dp))) * n
    return _upper("ktuple_formula_thm6", raw, delta_prime=dp, b_tilde=b)


def ub_regular(n: int, max_deg: int, k: int, regular: bool) -> BoundValue:
    if not regular:
        return _gate("regular_prop1", "upper", "requires a regular graph")
    return _upper("regular_prop1", k * n / (max_deg + 1))


def ub_trivial(n: int) -> BoundValue:
    return _upper("trivial_n", float(n))


def ub_k_gamma(k: int, gamma: int) -> BoundValue:
    return _upper("k_gamma", float(k * gamma), gamma=gamma)


def ub_gamma_times_k(value: int) -> BoundValue:
    return _upper("gamma_times_k", float(value))


@dataclass(frozen=True)
class BoundsReport:
    n: int
    m: int
    max_deg: int
    min_deg: int
    degrees: tuple[int, ...]
    connected: bool
    regular: bool
    k: int
    lower: dict[str, BoundValue]
    upper: dict[str, BoundValue]

    def best_lower(self) -> int | None:
        vals = [b.integer_form for b in self.lower.values() if b.applicable]
        return max(vals) if vals else None

    def best_upper(self) -> int | None:
        vals = [b.integer_form for b in self.upper.values() if b.applicable]
        return min(vals) if vals else None

    def diagnostics(self) -> list[str]:
        """Every applicable lower bound must not exceed any applicable upper bound."""
        out = []
        for lo in self.lower.values():
            if not lo.applicable:
                continue
            for up in self.upper.values():
                if up.applicable and lo.integer_form > up.integer_form:
                    out.append(f"lower {lo.name}={lo.integer_form} > upper {up.name}={up.integer_form}")
        return out

    @property
    def consistent(self) -> bool:
        return not self.diagnostics()

    def check_value(self, value: int) -> list[str]:
        """Violations of ``best_lower <= value <= best_upper`` for a known L_k."""
        out = []
        for lo in self.lower.values():
            if lo.applicable and lo.integer_form > value:
                out.append(f"lower {lo.name}={lo.integer_form} > L_k={value}")
        for up in self.upper.values():
            if up.applicable and value > up.integer_form:
                out.append(f"L_k={value} > upper {up.name}={up.integer_form}")
        return out

    def to_json(self) -> dict:
        return {
            "graph": {
                "n": self.n,
                "m": self.m,
                "max_deg": self.max_deg,
                "min_deg": self.min_deg,
                "degrees": list(self.degrees),
                "connected": self.connected,
                "regular": self.regular,
            },
            "k": self.k,
            "lower": {key: b.to_json() for key, b in self.lower.items()},
            "upper": {key: b.to_json() for key, b in self.upper.items()},
            "best_lower": self.best_lower(),
            "best_upper": self.best_upper(),
            "consistent": self.consistent,
            "diagnostics": self.diagnostics(),
        }


def bounds_report(
    g: Graph,
    k: int,
    with_exact_domination: bool = False,
    budget: int | None = None,
    gamma=None,
    gamma_k=None,
) -> BoundsReport:
    """Evaluate every bound for ``(g, k)``.

    ``gamma`` / ``gamma_k`` may be precomputed DominationResults; otherwise
    they are searched for when ``with_exact_domination`` is set.
    """
    from . import domination

    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    n, dmax, dmin = g.n, g.max_deg, g.min_deg
    connected, regular = g.is_connected(), g.is_regular()
    only_k1 = "bounds rho = L_1 only"

    lower = {
        "main_eq1": lb_main(n, dmax, k),
        "weak_cor1": lb_weak(n, dmax, k),
        "k1_eq2": lb_k1(n, dmax) if k == 1 else _gate("k1_eq2", "lower", only_k1),
        "greedy_eq3": lb_greedy(n, dmax, dmin) if k == 1 else _gate("greedy_eq3", "lower", only_k1),
        "degree_sum_eq4": lb_degree_sum(g.deg, dmax) if k == 1 else _gate("degree_sum_eq4", "lower", only_k1),
        "regular_k2_eq5": lb_regular_k2(n, dmax, regular) if k == 2 else _gate("regular_k2_eq5", "lower", "bounds L_2 only"),
        "trivial_n": lb_trivial(n, dmax, k),
    }

    kw = {} if budget is None else {"budget": budget}
    not_requested = "exact domination not requested"
    if gamma is None and with_exact_domination:
        gamma = domination.gamma_exact(g, **kw)
    if gamma is None:
        k_gamma = _gate("k_gamma", "upper", not_requested)
    elif not gamma.complete:
        k_gamma = _unknown("k_gamma", "upper", "domination search budget exhausted")
    else:
        k_gamma = ub_k_gamma(k, gamma.value)

    if dmin < k - 1:
        gamma_xk = _gate("gamma_times_k", "upper", f"k-tuple domination undefined for min_deg {dmin} < k-1")
    else:
        if gamma_k is None and with_exact_domination:
            gamma_k = gamma if (k == 1 and gamma is not None) else domination.gamma_ktuple_exact(g, k, **kw)
        if gamma_k is None:
            gamma_xk = _gate("gamma_times_k", "upper", not_requested)
        elif not gamma_k.complete:
            gamma_xk = _unknown("gamma_times_k", "upper", "k-tuple domination search budget exhausted")
        else:
            gamma_xk = ub_gamma_times_k(gamma_k.value)

    upper = {
        "fraction_ineq5": ub_fraction(n, k, connected, dmin),
        "k_gamma": k_gamma,
        "gamma_times_k": gamma_xk,
        "ktuple_formula_thm6": ub_ktuple_formula(n, dmin, k),
        "regular_prop1": ub_regular(n, dmax, k, regular),
        "trivial_n": ub_trivial(n),
    }
    return BoundsReport(n, g.m, dmax, dmin, tuple(g.deg), connected, regular, k, lower, upper)

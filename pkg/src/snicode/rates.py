"""Problem description and achievable-rate search.

A problem instance has K messages on a cycle; receiver t wants message t,
is interfered by the U previous and D next messages, and knows all the
rest as side information.  A vector code of block length b maps the
m = K*b message symbols to n = b*(D+1) + a coded symbols, for a
per-receiver rate of (D+1) + a/b.  The pair (a, b) is achievable when
gcd(b*K, b*(D+1) + a) >= b*(U+1).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "SniProblem",
    "RatePair",
    "in_S",
    "make_pair",
    "canonical_pair",
    "search_best_pair",
    "rate_gap",
    "monotonicity_check",
    "truncate4",
    "format_rate",
]


@dataclass(frozen=True)
class SniProblem:
    """K messages on a cycle, interference span U back / D forward."""

    K: int
    D: int
    U: int

    def __post_init__(self):
        if self.K < 1 or self.D < 0 or self.U < 0:
            raise ValueError(f"bad problem ({self.K}, {self.D}, {self.U})")
        if self.U > self.D:
            raise ValueError(f"need U <= D, got U={self.U} > D={self.D}")
        if self.U + self.D >= self.K:
            raise ValueError(f"need U + D < K, got {self.U} + {self.D} >= {self.K}")

    def interference(self, t):
        K = self.K
        back = [(t + d) % K for d in range(-self.U, 0)]
        fwd = [(t + d) % K for d in range(1, self.D + 1)]
        return tuple(back + fwd)

    def side_info(self, t):
        known = set(range(self.K)) - {t} - set(self.interference(t))
        return tuple(sorted(known))


@dataclass(frozen=True)
class RatePair:
    a: int
    b: int
    m: int
    n: int
    rate: Fraction


def in_S(problem, a, b):
    """Membership of (a, b) in the achievable set of the problem.

    Requires 0 <= a <= b*(K - D - 1) (so that m >= n) and the divisor
    condition gcd(b*K, b*(D+1) + a) >= b*(U+1).
    """
    if b < 1 or a < 0 or a > b * (problem.K - problem.D - 1):
        return False
    return math.gcd(b * problem.K, b * (problem.D + 1) + a) >= b * (problem.U + 1)


def make_pair(problem, a, b):
    return RatePair(
        a=a,
        b=b,
        m=problem.K * b,
        n=b * (problem.D + 1) + a,
        rate=problem.D + 1 + Fraction(a, b),
    )


def canonical_pair(problem):
    """The always-achievable pair (K mod (D+1), K // (D+1)), rate K/b."""
    gamma = problem.K // (problem.D + 1)
    alpha = problem.K % (problem.D + 1)
    pair = make_pair(problem, alpha, gamma)
    assert in_S(problem, alpha, gamma)
    return pair


def search_best_pair(problem, b_max=64):
    """Lowest-rate achievable pair with b <= b_max.

    Ties break toward smaller b, then smaller a (the scan order).  Never
    empty: a = b*(K - D - 1) is always a member.
    """
    best = None
    for b in range(1, b_max + 1):
        for a in range(0, b * (problem.K - problem.D - 1) + 1):
            if in_S(problem, a, b):
                rate = problem.D + 1 + Fraction(a, b)
                if best is None or rate < best.rate:
                    best = make_pair(problem, a, b)
                break  # larger a only worsens the rate at this b
    return best


def rate_gap(problem):
    """canonical rate minus the interference-free floor D + 1."""
    return Fraction(problem.K % (problem.D + 1), problem.K // (problem.D + 1))


def monotonicity_check(K, D, u_low, u_high, b_max=35):
    """Every pair achievable at interference span u_high stays achievable
    at the narrower span u_low (the achievable sets are nested in U)."""
    if not 0 <= u_low <= u_high:
        raise ValueError("need 0 <= u_low <= u_high")
    hi = SniProblem(K, D, u_high)
    lo = SniProblem(K, D, u_low)
    for b in range(1, b_max + 1):
        for a in range(0, b * (K - D - 1) + 1):
            if in_S(hi, a, b) and not in_S(lo, a, b):
                return False
    return True


def truncate4(rate):
    """4-decimal display, truncated (never rounded): 71/7 -> '10.1428'."""
    rate = Fraction(rate)
    scaled = rate.numerator * 10000 // rate.denominator
    return f"{scaled // 10000}.{scaled % 10000:04d}"


def format_rate(rate):
    """Exact and truncated forms in one cell: '71/14=5.0714'."""
    return f"{Fraction(rate)}={truncate4(rate)}"

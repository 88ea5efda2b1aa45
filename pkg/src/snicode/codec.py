"""Encoding, decoding plans, and decodability verification.

The encoder is a plain vector-matrix product against an AIR generator.  Two
decoders are provided:

* a plan decoder — each receiver symbol is recovered as an XOR of a small,
  precomputed set of coded symbols plus known side-information symbols; the
  plan is derived from the chain geometry of the generator and is what makes
  the scheme low-complexity.  Plans execute over GF(2).
* an oracle decoder — solves for a linear combining matrix T with
  A_W @ T = E over the receiver's window of unknown blocks, then decodes as
  (y - side @ S) @ T.  Works over any small prime field and serves as the
  correctness reference for the plan decoder.

`verify_lemma1` checks the decodability condition itself: every receiver's
wanted block must add full rank on top of its interference rows.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import gf
from .air import build_air, partitions
from .distances import down_distance, right_distance, tau_profile
from .rates import SniProblem, in_S

__all__ = [
    "NotAchievablePair",
    "NotDecodable",
    "PlanError",
    "PlanEntry",
    "DecodePlan",
    "encoding_matrix",
    "encode",
    "symbolic_codes",
    "decode_plan",
    "plan_decode",
    "format_plan",
    "OracleDecoder",
    "oracle_decode",
    "verify_lemma1",
    "lemma1_failures",
    "complexity_stats",
    "predicted_side_counts",
]


class NotAchievablePair(Exception):
    """(a, b) is outside the achievable set of the problem."""


class NotDecodable(Exception):
    """The receiver cannot linearly isolate its block from its window."""


class PlanError(Exception):
    """A derived plan violates its own consistency requirements."""


def _require_member(problem, a, b):
    if not in_S(problem, a, b):
        m = problem.K * b
        n = b * (problem.D + 1) + a
        raise NotAchievablePair(
            f"(a={a}, b={b}) not achievable for K={problem.K}, D={problem.D}, "
            f"U={problem.U}: gcd({m}, {n}) = {math.gcd(m, n)} < "
            f"b*(U+1) = {b * (problem.U + 1)}"
        )


def encoding_matrix(problem, a, b):
    """The AIR generator for pair (a, b); raises NotAchievablePair."""
    _require_member(problem, a, b)
    return build_air(problem.K * b, b * (problem.D + 1) + a)


def encode(matrix, x, p=2):
    """y = x @ G mod p.  ``x`` may be a vector or a (trials, m) batch."""
    x = np.asarray(x)
    y = x.astype(np.float64) @ matrix.bits.astype(np.float64)
    return np.mod(y, p).astype(np.uint8)


def _label(k, b):
    return k // b, k % b + 1


def symbolic_codes(matrix, b):
    """Lines 'c_k = x_{t,j} + ...' describing each coded symbol."""
    lines = []
    for k in range(matrix.n):
        terms = " + ".join(
            "x_{%d,%d}" % _label(int(r), b) for r in matrix.column_support(k)
        )
        lines.append(f"c_{k} = {terms}")
    return lines


@dataclass(frozen=True)
class PlanEntry:
    t: int
    j: int          # 1-based symbol index within the block
    case: str       # "I" | "II" | "III" | "IV"
    codes: tuple    # coded-symbol indices to XOR
    side: tuple     # message-row indices of the side terms, ascending
    cancelled: tuple  # message rows that appear an even number of times


@dataclass(frozen=True)
class DecodePlan:
    problem: SniProblem
    a: int
    b: int
    m: int
    n: int
    entries: dict  # (t, j) -> PlanEntry

    def entry(self, t, j):
        return self.entries[(t, j)]


@lru_cache(maxsize=1024)
def _plan_geometry(m, n):
    """Per-codeword-index decode recipe for the m x n generator.

    Returns a tuple over k in [0, m) of (case, codes, side_rows, cancelled),
    independent of the problem: the case dispatch and code choices depend
    only on the chain, and the side terms are the symmetric difference of
    the chosen columns' supports (the wanted row excluded).
    """
    matrix = build_air(m, n)
    chain = matrix.chain
    parts = partitions(chain)
    lam0 = chain.lam(0)
    last = (chain.l + 1) // 2
    supports = [tuple(map(int, matrix.column_support(c))) for c in range(n)]

    out = []
    for k in range(m):
        if k < lam0:
            case, codes = "I", (k % n,)
        else:
            for i, ct in enumerate(parts.cols_shifted):
                if k in ct:
                    break
            else:
                raise AssertionError("codeword bands must cover [lam0, m)")
            kp = k - lam0
            if k in parts.middle[i]:
                d = down_distance(chain, kp)
                mu = right_distance(chain, kp + d, kp)
                case, codes = "II", (kp, kp + mu)
            elif i < last:
                prof = tau_profile(matrix, kp)
                case = "III"
                codes = (kp, kp + prof.mu) + tuple(kp + t for t in prof.taus)
            else:
                case, codes = "IV", (kp,)
        picked = set()
        for c in codes:
            picked ^= set(supports[c])
        if k not in picked:
            raise PlanError(f"codeword index {k}: wanted row absent from XOR")
        picked.discard(k)
        union = set()
        for c in codes:
            union |= set(supports[c])
        cancelled = tuple(sorted(union - picked - {k}))
        out.append((case, codes, tuple(sorted(picked)), cancelled))
    return tuple(out)


def decode_plan(problem, a, b):
    """Build and validate the decode plan for (problem, a, b)."""
    _require_member(problem, a, b)
    m = problem.K * b
    n = b * (problem.D + 1) + a
    entries = {}
    for k, (case, codes, side, cancelled) in enumerate(_plan_geometry(m, n)):
        t, j = _label(k, b)
        known = set(problem.side_info(t))
        for r in side:
            if r // b not in known:
                raise PlanError(
                    f"plan for t={t}, j={j} uses row {r} from block {r // b}, "
                    f"which receiver {t} does not know"
                )
        entries[(t, j)] = PlanEntry(
            t=t, j=j, case=case, codes=codes, side=side, cancelled=cancelled
        )
    return DecodePlan(problem=problem, a=a, b=b, m=m, n=n, entries=entries)


def plan_decode(plan, y, side_info, t, j):
    """Execute one plan entry over GF(2).

    ``y`` is the coded vector (or a (trials, n) batch); ``side_info`` maps
    known block index -> that block's symbols, shaped like ``y``.
    """
    e = plan.entries[(t, j)]
    y = np.asarray(y)
    acc = y[..., list(e.codes)].sum(axis=-1)
    b = plan.b
    for r in e.side:
        acc = acc + np.asarray(side_info[r // b])[..., r % b]
    return (acc % 2).astype(np.uint8)


def format_plan(plan):
    """One text line per (t, j):
    't j CASE II codes 0,13 side (0,1);(2,4);(5,2)'."""
    lines = []
    for (t, j) in sorted(plan.entries):
        e = plan.entries[(t, j)]
        codes = ",".join(str(c) for c in e.codes)
        side = ";".join("(%d,%d)" % _label(r, plan.b) for r in e.side) or "-"
        lines.append(f"{t} {j} CASE {e.case} codes {codes} side {side}")
    return lines


def _window_blocks(problem, t):
    K = problem.K
    return [(t + d) % K for d in range(-problem.U, problem.D + 1)]


def _unit_columns(matrix):
    """unit_col[j] = the single 1's column for weight-1 rows, else -1."""
    bits = matrix.bits
    weights = bits.sum(axis=1)
    return np.where(weights == 1, bits.argmax(axis=1), -1)


def verify_lemma1(matrix, problem, p=2):
    """Decodability check: for every receiver, the wanted block's rows add
    rank b on top of the interference rows of its window, over GF(p)."""
    return not lemma1_failures(matrix, problem, p)


def _absorb_blocks(elim, blocks, b, unit_col, bits):
    if not blocks:
        return
    rows = np.concatenate([np.arange(blk * b, blk * b + b) for blk in blocks])
    ucols = unit_col[rows]
    elim.add_units(ucols[ucols >= 0])
    for r in rows[ucols < 0]:
        elim.add_row(bits[r])


def lemma1_failures(matrix, problem, p=2):
    """Receivers (if any) whose wanted block does not add full rank on top
    of the interference rows of its window, over GF(p)."""
    if matrix.m % problem.K:
        raise ValueError(f"m={matrix.m} is not a multiple of K={problem.K}")
    b = matrix.m // problem.K
    unit_col = _unit_columns(matrix)
    bad = []
    for t in range(problem.K):
        elim = gf.IncrementalRref(matrix.n, p)
        _absorb_blocks(elim, problem.interference(t), b, unit_col, matrix.bits)
        before = elim.rank
        _absorb_blocks(elim, (t,), b, unit_col, matrix.bits)
        if elim.rank - before != b:
            bad.append(t)
    return bad


class OracleDecoder:
    """Reference decoder for one receiver over GF(p).

    Solves A_W @ T = E where A_W stacks the generator rows of the
    receiver's unknown blocks (interference + wanted) and E selects the
    wanted block; decoding is then (y - x_side @ S) @ T.
    """

    def __init__(self, matrix, problem, t, p=2):
        K = problem.K
        if matrix.m % K:
            raise ValueError(f"m={matrix.m} is not a multiple of K={K}")
        b = matrix.m // K
        n = matrix.n
        self.p = p
        self.b = b
        self.t = t
        unit_col = _unit_columns(matrix)
        elim = gf.IncrementalRref(n + b, p)
        inter = problem.interference(t)
        if inter:
            rows = np.concatenate([np.arange(blk * b, blk * b + b) for blk in inter])
            ucols = unit_col[rows]
            elim.add_units(ucols[ucols >= 0])
            pad = np.zeros(b, dtype=np.int64)
            for r in rows[ucols < 0]:
                elim.add_row(np.concatenate([matrix.bits[r], pad]))
        for i in range(b):
            aug = np.zeros(n + b, dtype=np.int64)
            aug[:n] = matrix.bits[t * b + i]
            aug[n + i] = 1
            elim.add_row(aug)
        T = np.zeros((n, b), dtype=np.int64)
        for c, row in elim.pivot_rows():
            if c >= n:
                raise NotDecodable(
                    f"receiver {t} cannot isolate its block over GF({p})"
                )
            T[c] = row[n:]
        self._T = T.astype(np.float64)
        self.side_order = problem.side_info(t)
        side_rows = np.concatenate(
            [np.arange(blk * b, blk * b + b) for blk in self.side_order]
        ) if self.side_order else np.empty(0, dtype=np.int64)
        self._S = matrix.bits[side_rows].astype(np.float64)

    def decode(self, y, side_info):
        """Recover the wanted block; batched when y is (trials, n)."""
        y = np.asarray(y, dtype=np.float64)
        if self.side_order:
            xs = np.concatenate(
                [np.asarray(side_info[blk]) for blk in self.side_order], axis=-1
            ).astype(np.float64)
            z = y - xs @ self._S
        else:
            z = y
        return np.mod(z @ self._T, self.p).astype(np.uint8)


def oracle_decode(matrix, problem, y, side_info, t, p=2):
    return OracleDecoder(matrix, problem, t, p).decode(y, side_info)


def complexity_stats(plan):
    """(t, j) -> dict with the decode cost of each plan entry: number of
    coded symbols combined and number of side-information terms added."""
    return {
        key: {"num_codes": len(e.codes), "num_side": len(e.side)}
        for key, e in plan.entries.items()
    }


def predicted_side_counts(matrix, plan):
    """Side-term counts derived from column supports alone.

    With N_c the support size of column c, a plan entry using columns
    (c1, ..., cr) has N_{c1} - 1 side terms for the single-column cases,
    N_{c1} + N_{c2} - 3 for the two-column case, and
    sum(N_ci) - 2*(r - 2) - 3 in general: every extra column past the
    second cancels exactly two rows of the running XOR.
    """
    N = matrix.bits.sum(axis=0)
    out = {}
    for key, e in plan.entries.items():
        total = int(sum(N[c] for c in e.codes))
        if e.case in ("I", "IV"):
            out[key] = total - 1
        elif e.case == "II":
            out[key] = total - 3
        else:
            out[key] = total - 2 * (len(e.codes) - 2) - 3
    return out

"""Adjacent-independent-row (AIR) generator matrices.

An AIR matrix is an ``m x n`` binary matrix (``m >= n``) in which every
window of ``n`` cyclically adjacent rows is nonsingular.  The construction
is a staircase of identity blocks: a stack of ``I_n`` copies on top, then an
interleaved tail whose shape is governed by the remainder chain of the
Euclidean algorithm on ``(n, m - n)``.

The chain ``lambda_{-1} = n, lambda_0 = m - n, lambda_{i-1} = beta_i *
lambda_i + lambda_{i+1}`` terminates at ``lambda_l = gcd(m, n)`` (with
``lambda_{l+1} = 0``).  Each chain step contributes one submatrix band to
the tail: even steps are short wide bands of horizontally repeated
identities, odd steps are tall narrow bands of vertically stacked
identities.  The same chain later drives all decoding geometry, so it is
kept alongside the bits.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import gf

__all__ = [
    "LambdaChain",
    "AirMatrix",
    "LayoutCell",
    "Located",
    "IntervalPartition",
    "euclid_chain",
    "build_air",
    "layout_cells",
    "locate",
    "partitions",
    "all_windows_full_rank",
    "format_matrix",
    "parse_matrix",
]


@dataclass(frozen=True)
class LambdaChain:
    """Remainder chain of (n, m - n) with its quotients.

    ``lambdas[0]`` is lambda_{-1} = n, so ``lambdas[i + 1]`` is lambda_i and
    the list ends at lambda_l = gcd(m, n).  ``betas[i]`` is the quotient
    beta_i for 0 <= i <= l.  For m == n the chain is empty: l == -1,
    ``lambdas == (n,)`` and ``betas == ()``.
    """

    m: int
    n: int
    lambdas: tuple
    betas: tuple

    @property
    def l(self):
        return len(self.betas) - 1

    @property
    def gcd(self):
        return self.lambdas[-1]

    def lam(self, i):
        """lambda_i, with lambda_{-2} = m and lambda_i = 0 past the end."""
        if i == -2:
            return self.m
        if -1 <= i <= self.l:
            return self.lambdas[i + 1]
        return 0

    def beta(self, i):
        """beta_i, 0 outside [0, l]."""
        if 0 <= i <= self.l:
            return self.betas[i]
        return 0


def euclid_chain(m, n):
    if not 1 <= n <= m:
        raise ValueError(f"need 1 <= n <= m, got m={m}, n={n}")
    lams = [n]
    betas = []
    prev, cur = n, m - n
    while cur:
        lams.append(cur)
        betas.append(prev // cur)
        prev, cur = cur, prev % cur
    assert lams[-1] == math.gcd(m, n)
    return LambdaChain(m=m, n=n, lambdas=tuple(lams), betas=tuple(betas))


@dataclass(frozen=True, eq=False)
class AirMatrix:
    m: int
    n: int
    bits: np.ndarray  # (m, n) uint8, read-only
    chain: LambdaChain

    def column_support(self, k):
        return np.flatnonzero(self.bits[:, k])


@lru_cache(maxsize=256)
def build_air(m, n):
    """Build the m x n AIR matrix.

    Alternates between filling rows of the unfilled corner with vertically
    stacked identities and filling columns with horizontally repeated ones,
    shrinking the corner by the Euclidean remainders until it closes.
    """
    chain = euclid_chain(m, n)
    bits = np.zeros((m, n), dtype=np.uint8)
    top, left = 0, 0
    mm, nn = m, n
    while True:
        q, r = divmod(mm, nn)
        i = np.arange(q * nn)
        bits[top + i, left + i % nn] = 1
        top += q * nn
        if r == 0:
            break
        q2, r2 = divmod(nn, r)
        j = np.arange(q2 * r)
        bits[top + j % r, left + j] = 1
        left += q2 * r
        if r2 == 0:
            break
        mm, nn = r, r2
    bits.flags.writeable = False
    return AirMatrix(m=m, n=n, bits=bits, chain=chain)


@dataclass(frozen=True)
class LayoutCell:
    """One identity band of the layout.

    ``kind`` is "top" for the leading I_n, else "even"/"odd" for the chain
    band with index ``index``.  The entry (j, k) inside the cell is 1 iff
    ``(j - rows.start) == (k - cols.start)  (mod modulus)``.
    """

    kind: str
    index: int
    rows: range
    cols: range
    modulus: int

    def has_one(self, j, k):
        return (j - self.rows.start) % self.modulus == (k - self.cols.start) % self.modulus


@lru_cache(maxsize=4096)
def layout_cells(chain):
    """All nonempty layout cells of the matrix described by ``chain``."""
    m, n = chain.m, chain.n
    cells = [LayoutCell("top", -1, range(0, n), range(0, n), n)]
    for s in range(chain.l + 1):
        if s % 2 == 0:
            cell = LayoutCell(
                "even",
                s,
                range(m - chain.lam(s), m),
                range(n - chain.lam(s - 1), n - chain.lam(s + 1)),
                chain.lam(s),
            )
        else:
            cell = LayoutCell(
                "odd",
                s,
                range(m - chain.lam(s - 1), m - chain.lam(s + 1)),
                range(n - chain.lam(s), n),
                chain.lam(s),
            )
        if len(cell.rows) and len(cell.cols):
            cells.append(cell)
    return tuple(cells)


@dataclass(frozen=True)
class Located:
    cell: LayoutCell
    j_r: int  # row offset inside the cell
    k_r: int  # column offset inside the cell


def locate(chain, j, k):
    """The layout cell containing entry (j, k) and the offsets within it."""
    if not (0 <= j < chain.m and 0 <= k < chain.n):
        raise ValueError(f"entry ({j}, {k}) outside a {chain.m} x {chain.n} matrix")
    for cell in layout_cells(chain):
        if j in cell.rows and k in cell.cols:
            return Located(cell, j - cell.rows.start, k - cell.cols.start)
    raise AssertionError("layout cells must tile the matrix")


@dataclass(frozen=True)
class IntervalPartition:
    """Row/column index bands derived from the chain.

    ``rows[i]``/``cols[i]`` band the matrix row and column indices by chain
    depth.  ``cols_shifted[i]`` is ``cols[i]`` translated by lambda_0 into
    codeword-index space; it splits into ``middle[i]`` (codewords whose
    column meets a horizontally repeated band away from its right edge) and
    ``boundary[i]`` (the rest).  The last boundary band is always
    ``[m - gcd(m, n), m)``.
    """

    rows: tuple
    cols: tuple
    cols_shifted: tuple
    middle: tuple
    boundary: tuple


@lru_cache(maxsize=4096)
def partitions(chain):
    m, n = chain.m, chain.n
    row_bands = tuple(
        range(m - chain.lam(2 * (i - 1)), m - chain.lam(2 * i))
        for i in range(chain.l // 2 + 2)
    )
    n_c = (chain.l + 1) // 2 + 1
    col_bands = tuple(
        range(n - chain.lam(2 * i - 1), n - chain.lam(2 * i + 1)) for i in range(n_c)
    )
    shifted = tuple(
        range(m - chain.lam(2 * i - 1), m - chain.lam(2 * i + 1)) for i in range(n_c)
    )
    middle = []
    boundary = []
    for i in range(n_c):
        ct = shifted[i]
        dlen = max(chain.beta(2 * i) - 1, 0) * chain.lam(2 * i) if len(ct) else 0
        middle.append(range(ct.start, ct.start + dlen))
        boundary.append(range(ct.start + dlen, ct.stop))
    return IntervalPartition(
        rows=row_bands,
        cols=col_bands,
        cols_shifted=shifted,
        middle=tuple(middle),
        boundary=tuple(boundary),
    )


def all_windows_full_rank(matrix, p=2):
    """Check that every cyclic window of n adjacent rows is nonsingular.

    Walks the window one row at a time, maintaining the inverse of the
    current window through rank-1 updates; the update factor vanishing is
    exactly a singular window.
    """
    m, n = matrix.m, matrix.n
    bits = matrix.bits.astype(np.int64)
    winv = gf.inverse(bits[:n], p)
    if winv is None:
        return False
    for k in range(1, m):
        slot = (k - 1) % n
        u = (bits[(k + n - 1) % m] - bits[(k - 1) % m]) % p
        if not u.any():
            continue
        ucol = u @ winv % p
        g = (1 + ucol[slot]) % p
        if g == 0:
            return False
        coef = pow(int(g), p - 2, p)
        winv = (winv - coef * np.outer(winv[:, slot], ucol)) % p
    return True


def format_matrix(matrix):
    lines = [f"{matrix.m} {matrix.n}"]
    lines.extend("".join("1" if v else "0" for v in row) for row in matrix.bits)
    return "\n".join(lines) + "\n"


def parse_matrix(text):
    """Parse the text form back into (m, n, bits)."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    m, n = map(int, lines[0].split())
    if len(lines) - 1 != m:
        raise ValueError(f"expected {m} rows, got {len(lines) - 1}")
    bits = np.zeros((m, n), dtype=np.uint8)
    for j, ln in enumerate(lines[1:]):
        if len(ln) != n or set(ln) - {"0", "1"}:
            raise ValueError(f"bad row {j}: {ln!r}")
        bits[j] = np.frombuffer(ln.encode(), dtype=np.uint8) - ord("0")
    return m, n, bits

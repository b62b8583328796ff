r"""Orthogonal polynomial sequences: tridiagonal H, three-term recurrences.

When H is tridiagonal with rows (alpha_k, beta_k, 1) and every alpha_k is
nonzero, the sequence satisfies

    p_{n+1}(t) = (t - beta_n) p_n(t) - alpha_n p_{n-1}(t)

and is orthogonal for the moment functional tau read off column 0 of A:

    tau(p_n p_m) = 0 for n != m,   tau(p_n^2) = alpha_1 * ... * alpha_n.

The fixed-k linearization slice then obeys a four-term scalar recurrence

    d(n+1,m,k) = d(n,m+1,k) + (beta_m - beta_n) d(n,m,k)
                 + alpha_m d(n,m-1,k) - alpha_n d(n-1,m,k)

with out-of-range d treated as zero.  Slice k = 0 is the diagonal matrix of
squared norms.

Banded generalization: if H is monic of index -1 with nonzero entries only on
diagonals -1..band-2, then tau(p_n p_m) = 0 whenever m >= (band-2)*n + 1
(e.g. band 4: m >= 2n+1; band 5: m >= 3n+1).  partial_orthogonality_check
tests this claim entry by entry instead of assuming it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    PolyseqError,
    PropertyViolationError,
    SpecTooShortError,
    StructureError,
    WindowError,
    ZeroAlphaError,
)
from .linearize import LinTensor, required_size
from .matrix import TruncMatrix
from .oracle import poly_mul
from .sequences import (
    HSpec,
    SequencePair,
    build_P_recurrence,
    realize_H,
    tau_apply,
    tau_moments,
)


@dataclass(frozen=True)
class ThreeTermRecurrence:
    """Recurrence data: beta[k] = beta_k for k >= 0, alpha[i] = alpha_{i+1}."""

    beta: tuple
    alpha: tuple

    def __init__(self, beta: Sequence, alpha: Sequence):
        object.__setattr__(self, "beta", tuple(Fraction(b) for b in beta))
        object.__setattr__(self, "alpha", tuple(Fraction(a) for a in alpha))

    def require(self, n_beta: int, n_alpha: int) -> None:
        """Demand enough coefficients, all used alphas nonzero."""
        if len(self.beta) < n_beta:
            raise SpecTooShortError("beta list", n_beta, len(self.beta))
        if len(self.alpha) < n_alpha:
            raise SpecTooShortError("alpha list", n_alpha, len(self.alpha))
        for i in range(n_alpha):
            if self.alpha[i] == 0:
                raise ZeroAlphaError(i + 1)

    def alpha_at(self, n: int) -> Fraction:
        """alpha_n (n >= 1)."""
        return self.alpha[n - 1]


def op_sequence(rec: ThreeTermRecurrence, size: int) -> SequencePair:
    """The sequence pair of the tridiagonal matrix a recurrence describes."""
    rec.require(size, size - 1)
    h = realize_H(HSpec.tridiagonal(rec.beta, rec.alpha), size)
    return build_P_recurrence(h)


def op_lin_recurrence(rec: ThreeTermRecurrence, n_max: int, k: int) -> list:
    """One fixed-k linearization slice from the four-term scalar recurrence."""
    if not 0 <= k <= 2 * n_max:
        raise PolyseqError(f"k must lie in 0..{2 * n_max}, got {k}")
    width0 = 2 * n_max
    rec.require(max(width0, 1), max(width0 - 1, 0))
    beta, alpha = rec.beta, rec.alpha
    rows = [[Fraction(1) if m == k else Fraction(0) for m in range(width0 + 1)]]
    for n in range(n_max):
        width = width0 - (n + 1)
        cur = rows[n]
        nxt = []
        for m in range(width + 1):
            v = cur[m + 1] + (beta[m] - beta[n]) * cur[m]
            if m >= 1:
                v += alpha[m - 1] * cur[m - 1]
            if n >= 1:
                v -= alpha[n - 1] * rows[n - 1][m]
            nxt.append(v)
        rows.append(nxt)
    out = [[rows[n][m] for m in range(n_max + 1)] for n in range(n_max + 1)]
    for n in range(n_max + 1):
        for m in range(n):
            if out[n][m] != out[m][n]:
                raise PropertyViolationError(f"slice k={k} lost symmetry at ({n},{m})")
    return out


def squared_norms(rec: ThreeTermRecurrence, n_max: int) -> list:
    """[tau(p_n^2) for n <= n_max] = running products of the alphas."""
    rec.require(1, n_max)
    out = [Fraction(1)]
    for n in range(1, n_max + 1):
        out.append(out[-1] * rec.alpha_at(n))
    return out


def orthogonality_table(pair: SequencePair, n_max: int) -> list:
    """G[n][m] = tau(p_n * p_m) via the moment functional on raw products."""
    required = required_size(n_max)
    if pair.size < required:
        raise WindowError(required, pair.size, f"orthogonality_table(n_max={n_max})")
    moments = tau_moments(pair)
    table = [[Fraction(0)] * (n_max + 1) for _ in range(n_max + 1)]
    for n in range(n_max + 1):
        for m in range(n, n_max + 1):
            v = tau_apply(moments, poly_mul(pair.polys[n], pair.polys[m]))
            table[n][m] = table[m][n] = v
    return table


def support_check(tensor: LinTensor):
    """Orthogonal-case support bound: d(n,m,k) = 0 whenever k < |n - m|.

    Returns (True, None) or (False, (n, m, k)) for the first violation.
    """
    for k in range(tensor.k_max + 1):
        sl = tensor.slices[k]
        for n in range(tensor.n_max + 1):
            for m in range(tensor.n_max + 1):
                if k < abs(n - m) and sl[n][m] != 0:
                    return False, (n, m, k)
    return True, None


def partial_orthogonality_check(h: TruncMatrix, band: int, n_max: int):
    """Test tau(p_n p_m) = 0 for m >= (band-2)*n + 1, n, m <= n_max.

    h must be monic of index -1 with no entries below diagonal band-2 (a
    narrower matrix passes; the claim is then weaker than what holds).
    Returns (True, None) or (False, (n, m)) for the first nonzero value.
    """
    if band < 3:
        raise PolyseqError(f"band must be at least 3, got {band}")
    spread = band - 2
    for i in range(h.size):
        for j in range(0, i - spread):
            if h.rows[i][j] != 0:
                raise StructureError(
                    f"entry ({i},{j}) lies below diagonal {spread}; "
                    f"matrix is wider than band {band}"
                )
    max_n = (n_max - 1) // spread if n_max >= 1 else 0
    max_deg = max_n + n_max
    required = max_deg + 2
    if h.size < required:
        raise WindowError(required, h.size, f"partial_orthogonality_check(n_max={n_max})")
    pair = build_P_recurrence(h)
    moments = tau_moments(pair)
    for n in range(max_n + 1):
        for m in range(spread * n + 1, n_max + 1):
            if tau_apply(moments, poly_mul(pair.polys[n], pair.polys[m])) != 0:
                return False, (n, m)
    return True, None

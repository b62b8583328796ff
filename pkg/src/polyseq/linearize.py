r"""Linearization, mixed and connection coefficients by matrix methods.

For the sequence p_k attached to a monic Hessenberg H, multiplication by any
polynomial w expands in the same basis through the matrix w(H):

    p_n(t) * w(t) = sum_k w(H)[n][k] * p_k(t).

Taking w = p_m gives the linearization coefficients

    d(n, m, k) = p_m(H)[n][k],       p_n * p_m = sum_k d(n,m,k) p_k,

computed two independent ways here: "direct" runs the matrix recurrence

    p_{m+1}(H) = H @ p_m(H) - sum(H[m][j] * p_j(H) for j in range(m + 1))

and reads entries; "recurrence" fills a fixed-k slice scalar by scalar from

    d(n+1,m,k) = d(n,m+1,k) + (H[m][m]-H[n][n]) d(n,m,k)
                 + sum(H[m][j] d(n,j,k) for j in range(m))
                 - sum(H[n][j] d(j,m,k) for j in range(n))

using the symmetry d(m,j,k) = d(j,m,k) for the last sum.  The slices satisfy
four structural identities (validated on the direct route):

    d(n,m,k) = d(m,n,k);  d = 0 if n+m < k;  d = 1 if n+m = k;
    d(0,m,k) = 1 if m == k else 0.

With a second sequence u_k attached to K, the mixed coefficients expand
p_n * p_m in the u-basis:

    e(n,m,k) = sum_j d(n,m,j) * p_j(K)[0][k],

and row 0 of p_m(K) alone gives the connection coefficients p_m = sum_k
C[m][k] u_k, a unit lower triangular change of basis whose two directions
multiply to the identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import PolyseqError, PropertyViolationError, StructureError, WindowError
from .matrix import TruncMatrix, identity, poly_of_matrix
from .polynomial import Polynomial
from .sequences import SequencePair, check_unit_hessenberg


@dataclass(frozen=True)
class LinTensor:
    """Slices slices[k][n][m] = coefficient of basis element k for the
    product of sequence members n and m; k runs 0..k_max = 2*n_max."""

    n_max: int
    k_max: int
    slices: tuple

    def value(self, n: int, m: int, k: int) -> Fraction:
        if k > self.k_max:
            return Fraction(0)
        return self.slices[k][n][m]


def required_size(n_max: int, m_max: int = None) -> int:
    """Truncation size guaranteeing exact output up to the requested ranges
    (one extra row of safety margin)."""
    if m_max is None:
        m_max = n_max
    return n_max + m_max + 2


def recurrence_poly_matrices(h: TruncMatrix, at: TruncMatrix, m_max: int) -> list:
    """[p_0(M), ..., p_{m_max}(M)] where the p's obey h's recurrence and M=at.

    Each multiplication by the Hessenberg argument costs one certified row,
    so p_m(M) is exact on rows 0..size-m-1 at least.
    """
    if h.size != at.size:
        raise StructureError(f"size mismatch: {h.size} vs {at.size}")
    if m_max >= h.size:
        raise WindowError(m_max + 2, h.size, "polynomial matrix recurrence")
    mats = [identity(at.size)]
    for m in range(m_max):
        nxt = at @ mats[m]
        hrow = h.rows[m]
        for j in range(m + 1):
            c = hrow[j]
            if c:
                nxt = nxt - mats[j].scale(c)
        mats.append(nxt)
    return mats


def linearize_with_w(pair: SequencePair, w: Polynomial, n: int) -> list:
    """Coefficients of p_n * w in the p-basis: row n of w(H), length n+deg+1."""
    deg = max(w.degree, 0)
    required = n + deg + 2
    if pair.size < required:
        raise WindowError(required, pair.size, f"linearize_with_w(n={n}, deg={deg})")
    wh = poly_of_matrix(w, pair.H)
    if n >= wh.exact_rows:
        raise WindowError(required, pair.size, f"row {n} of w(H)")
    return list(wh.rows[n][: n + deg + 1])


def _validate_d_properties(slices, n_max: int) -> None:
    for k, sl in enumerate(slices):
        for n in range(n_max + 1):
            for m in range(n_max + 1):
                v = sl[n][m]
                if v != sl[m][n]:
                    raise PropertyViolationError(
                        f"d({n},{m},{k}) != d({m},{n},{k}): {v} vs {sl[m][n]}"
                    )
                if n + m < k and v != 0:
                    raise PropertyViolationError(
                        f"d({n},{m},{k}) = {v}, expected 0 (n+m < k)"
                    )
                if n + m == k and v != 1:
                    raise PropertyViolationError(
                        f"d({n},{m},{k}) = {v}, expected 1 (n+m = k)"
                    )
                if n == 0:
                    want = 1 if m == k else 0
                    if v != want:
                        raise PropertyViolationError(
                            f"d(0,{m},{k}) = {v}, expected {want}"
                        )


def lin_tensor_direct(pair: SequencePair, n_max: int) -> LinTensor:
    """All slices k = 0..2*n_max from the matrix recurrence for p_m(H)."""
    required = required_size(n_max)
    if pair.size < required:
        raise WindowError(required, pair.size, f"lin_tensor_direct(n_max={n_max})")
    mats = recurrence_poly_matrices(pair.H, pair.H, n_max)
    k_max = 2 * n_max
    slices = tuple(
        tuple(
            tuple(mats[m].rows[n][k] for m in range(n_max + 1))
            for n in range(n_max + 1)
        )
        for k in range(k_max + 1)
    )
    _validate_d_properties(slices, n_max)
    return LinTensor(n_max=n_max, k_max=k_max, slices=slices)


def lin_tensor_recurrence(h: TruncMatrix, n_max: int, k: int) -> list:
    """One fixed-k slice, (n_max+1) square, from the scalar recurrence.

    Row n is filled for m up to 2*n_max - n (row n+1 consumes column m+1 of
    row n, so widths shrink by one per row); the returned square block is
    checked for symmetry as it completes.
    """
    if not 0 <= k <= 2 * n_max:
        raise PolyseqError(f"k must lie in 0..{2 * n_max}, got {k}")
    required = required_size(n_max)
    if h.size < required:
        raise WindowError(required, h.size, f"lin_tensor_recurrence(n_max={n_max})")
    check_unit_hessenberg(h)
    width0 = 2 * n_max
    rows = [[Fraction(1) if m == k else Fraction(0) for m in range(width0 + 1)]]
    for n in range(n_max):
        width = width0 - (n + 1)
        cur = rows[n]
        hn = h.rows[n]
        nxt = []
        for m in range(width + 1):
            hm = h.rows[m]
            v = cur[m + 1] + (hm[m] - hn[n]) * cur[m]
            for j in range(m):
                c = hm[j]
                if c:
                    v += c * cur[j]
            for j in range(n):
                c = hn[j]
                if c:
                    v -= c * rows[j][m]
            nxt.append(v)
        rows.append(nxt)
    out = [[rows[n][m] for m in range(n_max + 1)] for n in range(n_max + 1)]
    for n in range(n_max + 1):
        for m in range(n):
            if out[n][m] != out[m][n]:
                raise PropertyViolationError(
                    f"slice k={k} lost symmetry at ({n},{m})"
                )
    return out


def connection_matrix(pair_p: SequencePair, pair_u: SequencePair, m_max: int) -> list:
    """C with p_m = sum_k C[m][k] u_k: row 0 of each p_m evaluated at u's H."""
    required = m_max + 2
    if pair_p.size < required or pair_u.size < required:
        raise WindowError(
            required, min(pair_p.size, pair_u.size), f"connection_matrix(m_max={m_max})"
        )
    if pair_p.size != pair_u.size:
        raise StructureError(
            f"size mismatch: {pair_p.size} vs {pair_u.size}"
        )
    mats = recurrence_poly_matrices(pair_p.H, pair_u.H, m_max)
    return [
        [mats[m].rows[0][kk] for kk in range(m_max + 1)] for m in range(m_max + 1)
    ]


def mixed_tensor(pair_p: SequencePair, pair_u: SequencePair, n_max: int) -> LinTensor:
    """e(n,m,k): products from the p-sequence expanded in the u-basis."""
    required = required_size(n_max)
    if pair_p.size != pair_u.size:
        raise StructureError(
            f"size mismatch: {pair_p.size} vs {pair_u.size}"
        )
    if pair_p.size < required:
        raise WindowError(required, pair_p.size, f"mixed_tensor(n_max={n_max})")
    k_max = 2 * n_max
    d = lin_tensor_direct(pair_p, n_max)
    # Row 0 of p_j evaluated at u's matrix is p_j in the u-basis.
    conn = recurrence_poly_matrices(pair_p.H, pair_u.H, k_max)
    c = [[conn[j].rows[0][kk] for kk in range(k_max + 1)] for j in range(k_max + 1)]
    slices = []
    for k in range(k_max + 1):
        sl = [[Fraction(0)] * (n_max + 1) for _ in range(n_max + 1)]
        for j in range(k, k_max + 1):
            cjk = c[j][k]
            if cjk == 0:
                continue
            dj = d.slices[j]
            for n in range(n_max + 1):
                row = dj[n]
                for m in range(n_max + 1):
                    if row[m]:
                        sl[n][m] += cjk * row[m]
        slices.append(tuple(tuple(r) for r in sl))
    return LinTensor(n_max=n_max, k_max=k_max, slices=tuple(slices))


def verify_inverse_connection(pair_p: SequencePair, pair_u: SequencePair, m_max: int):
    """Check the two connection directions multiply to the identity.

    Returns (True, None) or (False, (m, n)) for the first violating entry.
    """
    c_pu = connection_matrix(pair_p, pair_u, m_max)
    c_up = connection_matrix(pair_u, pair_p, m_max)
    for m in range(m_max + 1):
        for n in range(m_max + 1):
            acc = Fraction(0)
            for k in range(m_max + 1):
                v = c_pu[m][k]
                if v:
                    acc += v * c_up[k][n]
            if acc != (1 if m == n else 0):
                return False, (m, n)
    return True, None


def tensors_agree(t1: LinTensor, t2: LinTensor):
    """First (n, m, k) where two tensors differ, or None if they agree."""
    if t1.n_max != t2.n_max or t1.k_max != t2.k_max:
        raise StructureError("tensors have different shapes")
    for k in range(t1.k_max + 1):
        s1, s2 = t1.slices[k], t2.slices[k]
        for n in range(t1.n_max + 1):
            for m in range(t1.n_max + 1):
                if s1[n][m] != s2[n][m]:
                    return (n, m, k)
    return None

r"""Monic polynomial sequences attached to monic Hessenberg matrices.

A monic matrix H of index -1 (ones on the superdiagonal) determines a unique
monic lower triangular A with A@H = X@A, built row by row from row_0 = e_0 via

    row_{j+1} = row_j @ H.

P = A^{-1} is again monic lower triangular, satisfies H@P = P@X, and its rows
are the coefficient vectors of a monic polynomial sequence p_0, p_1, ...
obeying

    p_{k+1}(t) = t*p_k(t) - sum(H[k][j] * p_j(t) for j in range(k + 1)).

Rows of A are the coefficients of the inverse sequence u_k (the expansion of
t^k in the p-basis), and column 0 of A lists the moments of the linear
functional tau with tau(p_n) = 0 for n >= 1: tau(t^k) = A[k][0].

H also has an explicit right inverse: with Y = H@Xhat (monic lower
triangular) set Hhat = Xhat @ Y^{-1}.  Then H@Hhat = I, Hhat@H differs from I
only in column 0, and P@Xhat = Hhat@P, which yields P column by column:
column 0 of P equals column 0 of -Hhat@H with its top entry set to 1, and
col_{k+1} = Hhat @ col_k.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    InsufficientMomentsError,
    PropertyViolationError,
    SpecTooShortError,
    StructureError,
)
from .families import FamilyParams, family_tridiagonal
from .matrix import (
    TruncMatrix,
    lower_tri_inverse,
    make_operator,
)
from .polynomial import Polynomial


@dataclass(frozen=True)
class HSpec:
    """Finite description of an infinite monic Hessenberg matrix.

    kind is one of "tridiagonal" (beta/alpha coefficient lists), "rows"
    (explicit row data) or "family" (named parametric family).
    """

    kind: str
    beta: tuple = ()
    alpha: tuple = ()
    rows: tuple = ()
    family: FamilyParams | None = None

    @classmethod
    def tridiagonal(cls, beta: Sequence, alpha: Sequence) -> "HSpec":
        return cls(
            kind="tridiagonal",
            beta=tuple(Fraction(b) for b in beta),
            alpha=tuple(Fraction(a) for a in alpha),
        )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "HSpec":
        return cls(
            kind="rows",
            rows=tuple(tuple(Fraction(v) for v in row) for row in rows),
        )

    @classmethod
    def from_family(cls, params: FamilyParams) -> "HSpec":
        return cls(kind="family", family=params)


def realize_H(spec: HSpec, size: int) -> TruncMatrix:
    """The exact size x size truncation of the matrix a spec describes."""
    if size < 1:
        raise StructureError("size must be at least 1")
    if spec.kind == "tridiagonal":
        return _tridiagonal_matrix(spec.beta, spec.alpha, size)
    if spec.kind == "family":
        beta, alpha = family_tridiagonal(spec.family, size)
        return _tridiagonal_matrix(beta, alpha, size)
    if spec.kind == "rows":
        return _rows_matrix(spec.rows, size)
    raise StructureError(f"unknown spec kind {spec.kind!r}")


def _tridiagonal_matrix(beta, alpha, size) -> TruncMatrix:
    # Row k carries (alpha_k, beta_k, 1); T rows consume beta_0..beta_{T-1}
    # and alpha_1..alpha_{T-1}.
    if len(beta) < size:
        raise SpecTooShortError("beta list", size, len(beta))
    if len(alpha) < size - 1:
        raise SpecTooShortError("alpha list", size - 1, len(alpha))
    rows = [[Fraction(0)] * size for _ in range(size)]
    for k in range(size):
        rows[k][k] = Fraction(beta[k])
        if k + 1 < size:
            rows[k][k + 1] = Fraction(1)
        if k >= 1:
            rows[k][k - 1] = Fraction(alpha[k - 1])
    return TruncMatrix(rows, index=-1, exact_rows=size)


def _rows_matrix(data, size) -> TruncMatrix:
    # Row k may list just columns 0..k (the free lower part; the monic 1 at
    # column k+1 is implied) or extend further, in which case the entry at
    # k+1 must be 1 and everything past it 0.
    if len(data) < size:
        raise SpecTooShortError("row list", size, len(data))
    rows = [[Fraction(0)] * size for _ in range(size)]
    for k in range(size):
        row = data[k]
        if len(row) > k + 1:
            if Fraction(row[k + 1]) != 1:
                raise StructureError(
                    f"row {k} must have 1 at column {k + 1} to be monic of index -1"
                )
            for j in range(k + 2, len(row)):
                if Fraction(row[j]) != 0:
                    raise StructureError(
                        f"row {k} has a nonzero entry at column {j}, above the superdiagonal"
                    )
        for j in range(min(len(row), k + 1, size)):
            rows[k][j] = Fraction(row[j])
        if k + 1 < size:
            rows[k][k + 1] = Fraction(1)
    return TruncMatrix(rows, index=-1, exact_rows=size)


def check_unit_hessenberg(h: TruncMatrix) -> None:
    """Require ones on the superdiagonal and zeros above it."""
    t = h.size
    for i in range(t):
        row = h.rows[i]
        if i + 1 < t and row[i + 1] != 1:
            raise StructureError(f"entry ({i},{i + 1}) must be 1, got {row[i + 1]}")
        for j in range(i + 2, t):
            if row[j] != 0:
                raise StructureError(f"entry ({i},{j}) must be 0, got {row[j]}")


def row_poly(m: TruncMatrix, k: int) -> Polynomial:
    """Row k read as polynomial coefficients (column j -> t^j)."""
    return Polynomial(m.rows[k])


@dataclass(frozen=True)
class SequencePair:
    """A matrix H with its similarity data: A@H = X@A, P = A^{-1}.

    polys[k] is the degree-k monic polynomial whose coefficients are row k
    of P.
    """

    H: TruncMatrix
    A: TruncMatrix
    P: TruncMatrix
    polys: tuple

    @property
    def size(self) -> int:
        return self.H.size


def build_A_rows(h: TruncMatrix) -> TruncMatrix:
    """The unique monic triangular A with A@H = X@A, one row at a time.

    row_{j+1} = row_j @ H; row j has support in columns 0..j, so the
    truncation never loses mass and all size rows are exact.
    """
    check_unit_hessenberg(h)
    t = h.size
    rows = [[Fraction(0)] * t for _ in range(t)]
    rows[0][0] = Fraction(1)
    for j in range(t - 1):
        cur = rows[j]
        nxt = rows[j + 1]
        for k in range(j + 2):
            if k >= t:
                break
            acc = Fraction(0)
            for i in range(max(0, k - 1), j + 1):
                v = cur[i]
                if v:
                    acc += v * h.rows[i][k]
            nxt[k] = acc
    return TruncMatrix(rows, index=0, exact_rows=t)


def build_P_recurrence(h: TruncMatrix) -> SequencePair:
    """The full sequence pair for a monic Hessenberg truncation.

    Runs the polynomial recurrence for p_0..p_{T-1}, inverts P to get A, and
    verifies the defining identities before returning; failure of any of
    them is a hard internal error.
    """
    check_unit_hessenberg(h)
    t = h.size
    polys = [Polynomial.one()]
    for k in range(t - 1):
        nxt = polys[k].times_t()
        hrow = h.rows[k]
        for j in range(k + 1):
            c = hrow[j]
            if c:
                nxt = nxt - polys[j].scale(c)
        polys.append(nxt)
    p = TruncMatrix(
        (poly.padded(t) for poly in polys), index=0, exact_rows=t
    )
    a = lower_tri_inverse(p)
    pair = SequencePair(H=h, A=a, P=p, polys=tuple(polys))
    _verify_pair(pair)
    return pair


def _verify_pair(pair: SequencePair) -> None:
    t = pair.size
    x = make_operator("X", t)
    ident = make_operator("I", t)
    if (pair.A @ pair.P) != ident:
        raise PropertyViolationError("A @ P differs from the identity")
    # Left-multiplying by X loses the last row of the window.
    lhs, rhs = pair.A @ pair.H, x @ pair.A
    if not lhs.equal_on_window(rhs):
        raise PropertyViolationError("A @ H and X @ A disagree on the exact window")
    lhs, rhs = pair.H @ pair.P, pair.P @ x
    if not lhs.equal_on_window(rhs):
        raise PropertyViolationError("H @ P and P @ X disagree on the exact window")
    for k, poly in enumerate(pair.polys):
        if poly.degree != k or not poly.is_monic:
            raise PropertyViolationError(f"p_{k} is not monic of degree {k}")


def build_Hhat(h: TruncMatrix) -> TruncMatrix:
    """The right inverse Hhat = Xhat @ (H@Xhat)^{-1}, exact on the block.

    Y = H@Xhat just shifts H's columns left; its last diagonal entry lies
    outside the stored block but equals 1 by monic structure, so Y is
    completed from that certificate before the (exact, triangular) inversion.
    """
    check_unit_hessenberg(h)
    t = h.size
    y = [[Fraction(0)] * t for _ in range(t)]
    for i in range(t):
        for k in range(t - 1):
            y[i][k] = h.rows[i][k + 1]
    y[t - 1][t - 1] = Fraction(1)
    yinv = lower_tri_inverse(TruncMatrix(y, index=0, exact_rows=t))
    return make_operator("Xhat", t) @ yinv


def _mat_vec(m: TruncMatrix, v: list) -> list:
    out = []
    for i in range(m.size):
        hi = min(m.size - 1, i - m.index)
        acc = Fraction(0)
        row = m.rows[i]
        for j in range(0, hi + 1):
            rv = row[j]
            if rv:
                acc += rv * v[j]
        out.append(acc)
    return out


def build_P_columns(h: TruncMatrix) -> TruncMatrix:
    """P built column-first through the right inverse.

    Column 0 is column 0 of -Hhat@H with the top entry set to 1; then
    col_{k+1} = Hhat @ col_k.  Hhat has index 1, so every column is exact.
    """
    t = h.size
    hhat = build_Hhat(h)
    hhat_h = hhat @ h
    col = [-hhat_h.rows[i][0] for i in range(t)]
    col[0] = Fraction(1)
    cols = [col]
    for _ in range(t - 1):
        cols.append(_mat_vec(hhat, cols[-1]))
    rows = [[cols[k][i] for k in range(t)] for i in range(t)]
    return TruncMatrix(rows, index=0, exact_rows=t)


def tau_moments(pair: SequencePair) -> list:
    """Moments tau(t^k) of the sequence's functional: column 0 of A."""
    return [pair.A.rows[k][0] for k in range(pair.size)]


def tau_apply(moments: Sequence, q: Polynomial) -> Fraction:
    """Apply the functional with the given moments to a polynomial."""
    if q.degree >= len(moments):
        raise InsufficientMomentsError(
            f"need moments up to degree {q.degree}, have {len(moments)}"
        )
    return sum((c * moments[j] for j, c in enumerate(q.coeffs)), Fraction(0))

"""Truncations of infinite lower Hessenberg-type matrices over the rationals.

An infinite matrix (a[j][k], j,k >= 0) "has index m" when a[j][k] = 0 whenever
j - k < m: all entries live on or below the m-th diagonal.  Index -1 gives a
lower Hessenberg matrix (one superdiagonal), index 0 a lower triangular one.
The product of a matrix of index m with one of index n has index m + n, and
each product entry is a finite sum:

    c[i][k] = sum(a[i][j] * b[j][k] for j in range(k + n, i - m + 1))

A TruncMatrix stores the leading T x T block of such a matrix together with
its declared index (a certified lower bound on the true index) and an
``exact_rows`` certificate: rows 0..exact_rows-1 of the stored block are
guaranteed to coincide with the untruncated object.  Multiplication shrinks
the certificate exactly when the left factor reaches above the stored block:
row i of A@B needs rows of B up to i - ind(A), so

    exact_rows(A@B) = min(er(A), er(B) + ind(A), T + ind(A))

clamped to [0, T].  Only factors of negative index ever lose rows; triangular
work (index >= 0) is exact under truncation.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NotInvertibleError, StructureError
from .polynomial import Polynomial

OPERATOR_KINDS = ("X", "Xhat", "D", "Dhat", "I", "J0")

_ZERO = Fraction(0)


class TruncMatrix:
    """A T x T truncation with a declared index and an exactness certificate."""

    __slots__ = ("size", "index", "rows", "exact_rows")

    def __init__(self, rows: Iterable[Sequence], index: int, exact_rows: int | None = None):
        rows = tuple(tuple(Fraction(v) for v in row) for row in rows)
        size = len(rows)
        for row in rows:
            if len(row) != size:
                raise StructureError("matrix rows must form a square block")
        for i, row in enumerate(rows):
            for k, v in enumerate(row):
                if v != 0 and i - k < index:
                    raise StructureError(
                        f"entry ({i},{k}) is nonzero but declared index {index} "
                        f"demands zeros above diagonal {index}"
                    )
        self.rows = rows
        self.size = size
        self.index = index
        self.exact_rows = size if exact_rows is None else max(0, min(size, exact_rows))

    # -- access ------------------------------------------------------------

    def entry(self, i: int, k: int) -> Fraction:
        return self.rows[i][k]

    def row(self, i: int) -> tuple:
        return self.rows[i]

    def column(self, k: int) -> tuple:
        return tuple(row[k] for row in self.rows)

    def leading(self, n: int) -> "TruncMatrix":
        """Leading n x n principal submatrix (certificate clipped to n)."""
        if n > self.size:
            raise StructureError(f"cannot take leading {n} block of size {self.size}")
        return TruncMatrix(
            (row[:n] for row in self.rows[:n]),
            index=self.index,
            exact_rows=min(self.exact_rows, n),
        )

    def __eq__(self, other) -> bool:
        # Structural equality of the stored blocks; certificates are metadata.
        return (
            isinstance(other, TruncMatrix)
            and self.size == other.size
            and self.rows == other.rows
        )

    __hash__ = None  # type: ignore[assignment]

    def equal_on_window(self, other: "TruncMatrix") -> bool:
        """Equality on the block both certificates guarantee exact."""
        return equal_on_window(self, other)

    def __repr__(self) -> str:
        return (
            f"TruncMatrix(size={self.size}, index={self.index}, "
            f"exact_rows={self.exact_rows})"
        )

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "TruncMatrix") -> "TruncMatrix":
        _check_sizes(self, other)
        return TruncMatrix(
            (tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows)),
            index=min(self.index, other.index),
            exact_rows=min(self.exact_rows, other.exact_rows),
        )

    def __sub__(self, other: "TruncMatrix") -> "TruncMatrix":
        _check_sizes(self, other)
        return TruncMatrix(
            (tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows)),
            index=min(self.index, other.index),
            exact_rows=min(self.exact_rows, other.exact_rows),
        )

    def __neg__(self) -> "TruncMatrix":
        return self.scale(-1)

    def scale(self, c) -> "TruncMatrix":
        c = Fraction(c)
        return TruncMatrix(
            (tuple(c * v for v in row) for row in self.rows),
            index=self.index,
            exact_rows=self.exact_rows,
        )

    def __matmul__(self, other: "TruncMatrix") -> "TruncMatrix":
        return mat_mul(self, other)

    def transpose(self) -> "TruncMatrix":
        return transpose(self)


def _check_sizes(a: TruncMatrix, b: TruncMatrix) -> None:
    if a.size != b.size:
        raise StructureError(f"size mismatch: {a.size} vs {b.size}")


def zeros(size: int, index: int | None = None) -> TruncMatrix:
    # The zero matrix vacuously has every index; declaring `size` certifies
    # there is no nonzero diagonal inside the truncation at all.
    idx = size if index is None else index
    return TruncMatrix(
        (((_ZERO,) * size) for _ in range(size)), index=idx, exact_rows=size
    )


def identity(size: int) -> TruncMatrix:
    return make_operator("I", size)


def make_operator(kind: str, size: int) -> TruncMatrix:
    """One of the standard operators as an exact T x T truncation.

    X    : ones on the first superdiagonal (right shift); index -1
    Xhat : transpose of X (left shift); index 1
    D    : D[k+1][k] = k+1 (derivative in the monomial basis); index 1
    Dhat : transpose of D; index -1
    I    : identity; index 0
    J0   : identity with the (0,0) entry zeroed; index 0
    """
    if size < 1:
        raise StructureError("size must be at least 1")
    rows = [[_ZERO] * size for _ in range(size)]
    if kind == "X":
        for j in range(size - 1):
            rows[j][j + 1] = Fraction(1)
        index = -1
    elif kind == "Xhat":
        for j in range(size - 1):
            rows[j + 1][j] = Fraction(1)
        index = 1
    elif kind == "D":
        for k in range(size - 1):
            rows[k + 1][k] = Fraction(k + 1)
        index = 1
    elif kind == "Dhat":
        for k in range(size - 1):
            rows[k][k + 1] = Fraction(k + 1)
        index = -1
    elif kind == "I":
        for j in range(size):
            rows[j][j] = Fraction(1)
        index = 0
    elif kind == "J0":
        for j in range(1, size):
            rows[j][j] = Fraction(1)
        index = 0
    else:
        raise ValueError(
            f"unknown operator kind {kind!r}; expected one of {OPERATOR_KINDS}"
        )
    return TruncMatrix(rows, index=index, exact_rows=size)


def mat_mul(a: TruncMatrix, b: TruncMatrix) -> TruncMatrix:
    """Product of stored blocks with index-bounded summation.

    The summation range per entry comes from the two declared indices, so
    entries that are structurally zero are never touched.  The result's
    certificate follows the rule in the module docstring.
    """
    _check_sizes(a, b)
    t = a.size
    ar, br = a.rows, b.rows
    ia, ib = a.index, b.index
    out = []
    for i in range(t):
        arow = ar[i]
        hi = min(t - 1, i - ia)
        row = [_ZERO] * t
        for k in range(t):
            lo = max(0, k + ib)
            if lo > hi:
                continue
            acc = _ZERO
            for j in range(lo, hi + 1):
                av = arow[j]
                if av:
                    bv = br[j][k]
                    if bv:
                        acc += av * bv
            row[k] = acc
        out.append(row)
    er = max(0, min(a.exact_rows, b.exact_rows + ia, t + ia))
    return TruncMatrix(out, index=ia + ib, exact_rows=min(er, t))


def transpose(a: TruncMatrix) -> TruncMatrix:
    """Transpose; index flips sign.

    A fully exact block transposes to a fully exact block.  A partially exact
    one has per-column guarantees that do not fit the row certificate, so the
    certificate collapses conservatively.
    """
    t = a.size
    rows = tuple(tuple(a.rows[j][i] for j in range(t)) for i in range(t))
    er = t if a.exact_rows == t else 0
    return TruncMatrix(rows, index=-a.index, exact_rows=er)


def lower_tri_inverse(a: TruncMatrix) -> TruncMatrix:
    """Exact inverse of a lower triangular truncation by forward substitution.

    Row i of the inverse only involves rows 0..i of the input, so truncation
    loses nothing: the certificate carries over unchanged.
    """
    if a.index < 0:
        raise StructureError(
            f"inverse needs a lower triangular matrix (index >= 0), got index {a.index}"
        )
    t = a.size
    ar = a.rows
    for i in range(t):
        if ar[i][i] == 0:
            raise NotInvertibleError(i)
    inv = [[_ZERO] * t for _ in range(t)]
    for i in range(t):
        piv = ar[i][i]
        inv[i][i] = Fraction(1) / piv
        arow = ar[i]
        for k in range(i - 1, -1, -1):
            acc = _ZERO
            for j in range(k, i):
                av = arow[j]
                if av:
                    bv = inv[j][k]
                    if bv:
                        acc += av * bv
            if acc:
                inv[i][k] = -acc / piv
    return TruncMatrix(inv, index=0, exact_rows=a.exact_rows)


def poly_of_matrix(w: Polynomial, m: TruncMatrix) -> TruncMatrix:
    """Evaluate w at a matrix truncation by Horner's rule.

    Each multiplication by a negative-index matrix costs exact rows per the
    product rule; for index >= 0 the result is exact on the whole block.
    """
    t = m.size
    if w.is_zero:
        return zeros(t)
    coeffs = w.coeffs
    eye = identity(t)
    acc = eye.scale(coeffs[-1])
    for c in reversed(coeffs[:-1]):
        acc = acc @ m
        if c != 0:
            acc = acc + eye.scale(c)
    return acc


def equal_on_window(a: TruncMatrix, b: TruncMatrix) -> bool:
    """Compare two truncations on the block both certify exact.

    Rows up to the smaller certificate, columns up to the smaller size.  The
    blocks may have different sizes; both represent the same infinite object
    wherever their certificates overlap.
    """
    rows = min(a.exact_rows, b.exact_rows)
    cols = min(a.size, b.size)
    for i in range(rows):
        ra, rb = a.rows[i], b.rows[i]
        for k in range(cols):
            if ra[k] != rb[k]:
                return False
    return True


def window_rows(a: TruncMatrix, b: TruncMatrix) -> int:
    """Number of leading rows on which a and b are both certified exact."""
    return min(a.exact_rows, b.exact_rows)

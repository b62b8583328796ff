"""Brute-force polynomial-algebra cross-checks.

Everything here works only with explicit coefficient vectors: schoolbook
products and back-substitution against a graded monic basis.  No matrix of a
polynomial is ever formed, so these routes are independent of the Hessenberg
machinery they are used to validate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BasisError, WindowError
from .linearize import LinTensor
from .polynomial import Polynomial
from .sequences import SequencePair


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    """Exact product by coefficient convolution."""
    return f * g


@dataclass(frozen=True)
class BasisExpansion:
    target: Polynomial
    coeffs: tuple

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if k < len(self.coeffs) else Fraction(0)


def expand_in_basis(target: Polynomial, basis) -> BasisExpansion:
    """Coefficients of target in a graded monic basis, by back-substitution.

    basis[k] must be monic of degree exactly k, and the basis must reach the
    target's degree.  The system is unit upper triangular when read from the
    top coefficient down, so the expansion is exact and unique; a nonzero
    residual would mean the basis is broken and raises.
    """
    basis = list(basis)
    for k, b in enumerate(basis):
        if b.degree != k or not b.is_monic:
            raise BasisError(f"basis element {k} is not monic of degree {k}")
    if target.degree >= len(basis):
        raise BasisError(
            f"basis reaches degree {len(basis) - 1}, target has degree {target.degree}"
        )
    coeffs = [Fraction(0)] * len(basis)
    residual = target
    while not residual.is_zero:
        d = residual.degree
        c = residual.coeffs[d]
        coeffs[d] = c
        residual = residual - basis[d].scale(c)
        if not residual.is_zero and residual.degree >= d:
            raise BasisError(f"degree failed to drop at {d}; basis is not graded")
    return BasisExpansion(target=target, coeffs=tuple(coeffs))


def lin_tensor_oracle(pair: SequencePair, n_max: int) -> LinTensor:
    """Linearization slices recomputed from raw polynomial algebra.

    d(n,m,.) = expansion of polys[n] * polys[m] in the p-basis itself.
    """
    if pair.size <= 2 * n_max:
        raise WindowError(2 * n_max + 1, pair.size, f"lin_tensor_oracle(n_max={n_max})")
    k_max = 2 * n_max
    width = n_max + 1
    table = [[None] * width for _ in range(width)]
    for n in range(width):
        for m in range(n, width):
            exp = expand_in_basis(
                pair.polys[n] * pair.polys[m], pair.polys[: n + m + 1]
            )
            table[n][m] = exp
    slices = tuple(
        tuple(
            tuple(
                (table[n][m] if n <= m else table[m][n]).coeff(k)
                for m in range(width)
            )
            for n in range(width)
        )
        for k in range(k_max + 1)
    )
    return LinTensor(n_max=n_max, k_max=k_max, slices=slices)

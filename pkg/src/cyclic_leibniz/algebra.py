"""Cyclic Leibniz algebras over the complex numbers.

An n-dimensional cyclic Leibniz algebra is generated by a single element a
with basis {a, a^2, ..., a^n}, where a^(k+1) = a * a^k.  The whole product
is pinned down by the single relation

    a * a^n = alpha_2 a^2 + alpha_3 a^3 + ... + alpha_n a^n,

so the defining data is the dimension n and the tail (alpha_2, ..., alpha_n).
The coefficient alpha_1 is forced to vanish (a^(n+1) * a = alpha_1 a^2 = 0),
which this representation encodes by not having a slot for it.

Left multiplication by a is the companion operator L_a; for a general
element x = c_1 a + ... + c_n a^n, left multiplication is L_x = c_1 L_a
because every a^j with j >= 2 is a left annihilator.  With that product the
left-multiplication-is-a-derivation identity

    x(yz) = (xy)z + y(xz)

holds for every choice of tail; ``verify_leibniz`` re-checks it from first
principles on all n^3 basis triples rather than trusting the construction.

Elements are plain coordinate vectors (numpy arrays of complex) relative to
{a, a^2, ..., a^n}.  Basis indices in reports are 1-based to match the
a^k notation; array indices are 0-based as usual.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .scalars import DEFAULT_EPS

Element = np.ndarray


class NotAGeneratorError(ValueError):
    """An element required to be a cyclic generator is not one."""


@dataclass(frozen=True)
class CyclicAlgebra:
    """Dimension n plus the tail (alpha_2, ..., alpha_n) defining a*a^n."""

    n: int
    tail: tuple[complex, ...]
    eps: float = DEFAULT_EPS

    def __post_init__(self) -> None:
        if isinstance(self.n, np.integer):
            object.__setattr__(self, "n", int(self.n))
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 1:
            raise ValueError(f"dimension must be a positive integer, got {self.n!r}")
        tail = tuple(complex(t) for t in self.tail)
        if len(tail) != self.n - 1:
            raise ValueError(
                f"tail must have exactly n-1 = {self.n - 1} entries, got {len(tail)}"
            )
        if any(not cmath.isfinite(t) for t in tail):
            raise ValueError("tail entries must be finite")
        if not (self.eps > 0 and cmath.isfinite(self.eps)):
            raise ValueError(f"eps must be a positive finite number, got {self.eps!r}")
        object.__setattr__(self, "tail", tail)

    # -- basic structure ---------------------------------------------------

    def companion(self) -> np.ndarray:
        """The matrix of L_a: subdiagonal ones, last column (0, alpha_2, ..., alpha_n)."""
        L = np.zeros((self.n, self.n), dtype=complex)
        for j in range(self.n - 1):
            L[j + 1, j] = 1.0
        L[1:, self.n - 1] = self.tail
        return L

    def element(self, coords: Sequence[complex]) -> Element:
        """Coerce coordinates (c_1, ..., c_n) to a validated element vector."""
        x = np.asarray(coords, dtype=complex)
        if x.shape != (self.n,):
            raise ValueError(f"element must have {self.n} coordinates, got shape {x.shape}")
        return x

    def basis_element(self, k: int) -> Element:
        """The coordinate vector of a^k, 1 <= k <= n."""
        if not 1 <= k <= self.n:
            raise ValueError(f"basis index must be in 1..{self.n}, got {k}")
        e = np.zeros(self.n, dtype=complex)
        e[k - 1] = 1.0
        return e

    def generator(self) -> Element:
        """The distinguished cyclic generator a."""
        return self.basis_element(1)

    # -- products ----------------------------------------------------------

    def left_mult(self, x: Sequence[complex]) -> np.ndarray:
        """The matrix of L_x = c_1 * L_a."""
        x = self.element(x)
        return x[0] * self.companion()

    def multiply(self, x: Sequence[complex], y: Sequence[complex]) -> Element:
        """The product x*y = c_1(x) * L_a(y)."""
        x = self.element(x)
        y = self.element(y)
        return x[0] * (self.companion() @ y)

    def power_basis(self, x: Sequence[complex]) -> list[Element]:
        """[x, x^2, ..., x^n] with x^(j+1) = x * x^j.  Independence is not checked."""
        x = self.element(x)
        powers = [x]
        for _ in range(self.n - 1):
            powers.append(self.multiply(x, powers[-1]))
        return powers

    def is_generator(self, x: Sequence[complex]) -> bool:
        """True iff the leading coordinate satisfies |c_1| > eps."""
        x = self.element(x)
        return abs(x[0]) > self.eps

    def multiplication_table(self) -> np.ndarray:
        """table[i, j, :] = coordinates of a^(i+1) * a^(j+1); shape (n, n, n)."""
        table = np.zeros((self.n, self.n, self.n), dtype=complex)
        table[0] = self.companion().T  # a * a^(j+1) = column j of L_a
        return table

    # -- verification ------------------------------------------------------

    def verify_leibniz(self) -> LeibnizReport:
        """Check x(yz) = (xy)z + y(xz) on all n^3 basis triples."""
        return leibniz_check(self.multiplication_table(), self.eps)

    def char_poly(self) -> tuple[complex, ...]:
        """Monic coefficients of f(t) = t^n - alpha_n t^(n-1) - ... - alpha_2 t.

        Read off the tail symbolically (a is a cyclic vector for L_a, so this
        is the characteristic polynomial of the companion operator); returned
        from the leading t^n coefficient down to the constant term.
        """
        coeffs = [1.0 + 0.0j]
        coeffs.extend(-t for t in reversed(self.tail))
        coeffs.append(0.0j)
        return tuple(coeffs)

    def cayley_hamilton_residual(self) -> float:
        """Max-norm of f(L_a) over the basis vectors; zero in exact arithmetic."""
        L = self.companion()
        f_of_L = np.linalg.matrix_power(L, self.n)
        for i in range(2, self.n + 1):
            f_of_L -= self.tail[i - 2] * np.linalg.matrix_power(L, i - 1)
        return float(np.max(np.abs(f_of_L)))


@dataclass(frozen=True)
class LeibnizReport:
    """Outcome of a from-first-principles Leibniz identity check."""

    passed: bool
    max_residual: float
    worst_triple: tuple[int, int, int] | None = None  # 1-based (i, j, k), fail only


def leibniz_check(table: np.ndarray, eps: float = DEFAULT_EPS) -> LeibnizReport:
    """Check the Leibniz identity for an arbitrary multiplication table.

    ``table[i, j, :]`` holds the coordinates of the product of basis vectors
    i and j; the product of general elements is the bilinear extension.  The
    identity is trilinear, so checking all basis triples covers the whole
    algebra.  This path deliberately does not assume the companion structure
    so it can also audit hand-injected tables.
    """
    n = table.shape[0]
    if table.shape != (n, n, n):
        raise ValueError(f"table must have shape (n, n, n), got {table.shape}")
    lhs = np.einsum("jkm,imr->ijkr", table, table)
    rhs = np.einsum("ijm,mkr->ijkr", table, table) + np.einsum(
        "ikm,jmr->ijkr", table, table
    )
    residuals = np.max(np.abs(lhs - rhs), axis=3)
    max_residual = float(np.max(residuals)) if n else 0.0
    if max_residual <= eps:
        return LeibnizReport(True, max_residual)
    i, j, k = np.unravel_index(int(np.argmax(residuals)), residuals.shape)
    return LeibnizReport(False, max_residual, (int(i) + 1, int(j) + 1, int(k) + 1))


def build(
    n: int,
    tail: Sequence[complex],
    eps: float = DEFAULT_EPS,
) -> CyclicAlgebra:
    """Construct the cyclic Leibniz algebra with a*a^n = sum(tail[i-2] * a^i)."""
    return CyclicAlgebra(n=n, tail=tuple(complex(t) for t in tail), eps=eps)

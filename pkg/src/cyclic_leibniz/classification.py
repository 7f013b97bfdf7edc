"""Canonical forms and isomorphism for cyclic Leibniz algebras.

The classification pipeline, for an algebra with tail (alpha_2, ..., alpha_n):

1. *Type detection.*  The type index k is the smallest index with
   alpha_k != 0; if the whole tail vanishes the algebra is the (unique)
   nilpotent one.  k is an isomorphism invariant.

2. *Normalization.*  The generator x = c_1 a with c_1 = alpha_k^(1/(k-n-1))
   has leading law coefficient 1, turning the law into

       x x^n = x^k + gamma_{k+1} x^(k+1) + ... + gamma_n x^n,
       gamma_{k+i} = c_1^(n-k+1-i) * alpha_{k+i}.

3. *Orbit canonicalization.*  Two reduced tuples describe the same algebra
   exactly when they lie on one orbit of the weighted rescaling

       (g_1, ..., g_d)  ->  (w^d g_1, w^(d-1) g_2, ..., w g_d),

   w running over the (d+1)-th roots of unity, d = n - k.  The canonical
   representative is the orbit member that is lexicographically minimal
   under the eps-grid key of each component; its entries are stored snapped
   to that grid so equal classes print and serialize identically.

Isomorphism then reduces to equality of canonical forms.  The whole chain
is cross-checked against explicit basis-map searches in the oracle module.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import CyclicAlgebra, NotAGeneratorError, build
from .scalars import (
    DEFAULT_EPS,
    approx_eq,
    canonical_key,
    format_complex,
    principal_root,
    roots_of_unity,
    snap,
)

GammaTuple = tuple[complex, ...]


@dataclass(frozen=True)
class TypeLabel:
    """Isomorphism-class coarse label: nilpotent, or type k with 2 <= k <= n."""

    k: int | None = None

    def __post_init__(self) -> None:
        if self.k is not None and self.k < 2:
            raise ValueError(f"type index must be at least 2, got {self.k}")

    @property
    def is_nilpotent(self) -> bool:
        return self.k is None

    def __str__(self) -> str:
        return "nilpotent" if self.k is None else f"type {self.k}"


NILPOTENT = TypeLabel(None)


@dataclass(frozen=True)
class CanonicalForm:
    """Isomorphism-class fingerprint: dimension, type label, canonical tuple.

    ``gamma`` is the lexicographically minimal orbit member with each entry
    snapped to the eps grid, so two algebras are isomorphic exactly when
    their canonical forms compare equal within tolerance (and, for snapped
    forms computed at the same eps, usually exactly equal).
    """

    n: int
    label: TypeLabel
    gamma: GammaTuple

    def __post_init__(self) -> None:
        expected = 0 if self.label.is_nilpotent else self.n - self.label.k
        if len(self.gamma) != expected:
            raise ValueError(
                f"gamma must have {expected} entries for {self.label} in dimension "
                f"{self.n}, got {len(self.gamma)}"
            )

    def law(self) -> str:
        """Human-readable canonical law, e.g. 'a·a^3 = a^2 + (-1)·a^3'."""
        if self.label.is_nilpotent:
            return f"a·a^{self.n} = 0"
        k = self.label.k
        terms = [f"a^{k}"]
        for i, g in enumerate(self.gamma, start=1):
            if g != 0:
                terms.append(f"({format_complex(g)})·a^{k + i}")
        return f"a·a^{self.n} = " + " + ".join(terms)

    def as_algebra(self, eps: float = DEFAULT_EPS) -> CyclicAlgebra:
        """Rebuild the representative algebra: zeros, then 1 at index k, then gamma."""
        tail = [0.0j] * (self.n - 1)
        if not self.label.is_nilpotent:
            k = self.label.k
            tail[k - 2] = 1.0 + 0.0j
            for i, g in enumerate(self.gamma, start=1):
                tail[k - 2 + i] = g
        return build(self.n, tail, eps)


def detect_type(A: CyclicAlgebra) -> TypeLabel:
    """Nilpotent if the tail vanishes within eps, else type k at the first |alpha_k| > eps."""
    for i, alpha in enumerate(A.tail, start=2):
        if abs(alpha) > A.eps:
            return TypeLabel(i)
    return NILPOTENT


def generator_law(A: CyclicAlgebra, c1: complex) -> GammaTuple:
    """Law coefficients (over indices k..n) of any generator with leading coordinate c1.

    Every generator x = c_1 a + ... + c_n a^n satisfies

        x x^n = c_1^(n-k+1) alpha_k x^k + c_1^(n-k) alpha_{k+1} x^(k+1)
                + ... + c_1 alpha_n x^n,

    depending on c_1 only.  For a nilpotent algebra every generator law is
    zero; the all-zero tuple over indices 2..n is returned rather than
    raising.
    """
    if abs(c1) <= A.eps:
        raise NotAGeneratorError(
            f"leading coordinate {format_complex(c1)} is within eps of zero"
        )
    label = detect_type(A)
    if label.is_nilpotent:
        return (0.0j,) * (A.n - 1)
    k = label.k
    return tuple(
        c1 ** (A.n - k + 1 - i) * A.tail[k - 2 + i] for i in range(A.n - k + 1)
    )


def embed_law(law: GammaTuple, n: int) -> tuple[complex, ...]:
    """Place law coefficients (over indices k..n) into a full tail (alpha_2..alpha_n).

    ``build(n, embed_law(generator_law(A, s), n))`` realizes the algebra whose
    distinguished generator has the law of A's generator s*a; it is isomorphic
    to A.
    """
    if len(law) > n - 1:
        raise ValueError(f"law has {len(law)} entries, more than n-1 = {n - 1}")
    tail = [0.0j] * (n - 1)
    offset = (n - 1) - len(law)
    for i, g in enumerate(law):
        tail[offset + i] = complex(g)
    return tuple(tail)


def rescale(gamma: GammaTuple, omega: complex) -> GammaTuple:
    """The weighted root-of-unity action (g_1,...,g_d) -> (w^d g_1, ..., w g_d)."""
    d = len(gamma)
    return tuple(omega ** (d - i) * g for i, g in enumerate(gamma))


def orbit(gamma: GammaTuple, eps: float = DEFAULT_EPS) -> list[GammaTuple]:
    """All distinct rescalings of gamma under the (d+1)-th roots of unity.

    Members are deduplicated within eps (by grid key) and sorted by the
    lexicographic grid-key order, so ``orbit(g)[0]`` is the canonical
    representative of g's equivalence class.  The orbit size always divides
    d + 1 (orbit-stabilizer for a cyclic group).
    """
    d = len(gamma)
    members: dict[tuple[tuple[int, int], ...], GammaTuple] = {}
    for omega in roots_of_unity(d + 1):
        member = rescale(gamma, omega)
        key = tuple(canonical_key(g, eps) for g in member)
        members.setdefault(key, member)
    return [members[key] for key in sorted(members)]


def equivalent(g1: GammaTuple, g2: GammaTuple, eps: float = DEFAULT_EPS) -> bool:
    """True iff g2 matches some weighted rescaling of g1 within eps, componentwise."""
    if len(g1) != len(g2):
        raise ValueError(f"tuple lengths differ: {len(g1)} vs {len(g2)}")
    for omega in roots_of_unity(len(g1) + 1):
        member = rescale(g1, omega)
        if all(approx_eq(a, b, eps) for a, b in zip(member, g2)):
            return True
    return False


def normalize(A: CyclicAlgebra) -> CanonicalForm:
    """The canonical form of A: type label plus canonical orbit representative.

    The reducing generator is x = c_1 a with c_1 = alpha_k^(1/(k-n-1)),
    realized as ``principal_root(alpha_k, -1, n-k+1)``; the branch ambiguity
    (a factor that is an (n-k+1)-th root of unity) is exactly the orbit
    action, so the subsequent orbit minimization makes the result
    branch-independent.
    """
    label = detect_type(A)
    if label.is_nilpotent:
        return CanonicalForm(A.n, label, ())
    k = label.k
    m = A.n - k + 1
    alpha_k = A.tail[k - 2]
    c1 = principal_root(alpha_k, -1, m)
    lead = c1**m * alpha_k
    # 1e-12 floor: the check must survive eps set below machine rounding.
    assert abs(lead - 1.0) <= max(A.eps, 1e-12), f"normalization drift: {lead}"
    raw = tuple(c1 ** (m - i) * A.tail[k - 2 + i] for i in range(1, A.n - k + 1))
    representative = orbit(raw, A.eps)[0]
    return CanonicalForm(A.n, label, tuple(snap(g, A.eps) for g in representative))


def isomorphic(A: CyclicAlgebra, B: CyclicAlgebra) -> bool:
    """Decide isomorphism by comparing canonical forms.

    Equivalent to testing ``equivalent()`` on the raw reduced tuples; the
    oracle module re-derives the same answer by explicit generator search.
    """
    if A.n != B.n:
        return False
    fa, fb = normalize(A), normalize(B)
    if fa.label != fb.label:
        return False
    eps = max(A.eps, B.eps)
    return all(approx_eq(a, b, eps) for a, b in zip(fa.gamma, fb.gamma))


@dataclass(frozen=True)
class Family:
    """One parameterized isomorphism-class family of a fixed dimension."""

    label: TypeLabel
    law: str
    parameters: int  # complex parameters after normalization (n - k)
    orbit_order: int | None  # roots-of-unity group order n - k + 1, None if nilpotent


def family_table(n: int) -> list[Family]:
    """The classification families in dimension n.

    One nilpotent family, the parameter-free family with law a·a^n = a^n,
    and for each k = n-1 down to 2 an (n-k)-parameter family whose tuples
    are identified up to the weighted action of the (n-k+1)-th roots of
    unity.
    """
    if not 2 <= n <= 16:
        raise ValueError(f"dimension must be in 2..16, got {n}")
    families = [
        Family(NILPOTENT, f"a·a^{n} = 0", 0, None),
        Family(TypeLabel(n), f"a·a^{n} = a^{n}", 0, 1),
    ]
    for k in range(n - 1, 1, -1):
        terms = [f"a^{k}"] + [f"γ{j}·a^{j}" for j in range(k + 1, n + 1)]
        families.append(
            Family(TypeLabel(k), f"a·a^{n} = " + " + ".join(terms), n - k, n - k + 1)
        )
    return families

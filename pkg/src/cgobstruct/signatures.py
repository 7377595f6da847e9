"""Levine-Tristram signatures and nullities of T(2,q) and of cabled sums.

The twisted form at w is H(w) = (1-w)V + (1-conj(w))V^T for the standard
bidiagonal Seifert matrix V of T(2,q).  Signatures are computed by double
precision eigenvalue counts guarded by a tolerance; any eigenvalue inside
the tolerance band triggers the exact Sturm-chain evaluation in `sturm`,
so every returned value is certified.  Nullities never touch floating
point: the kernel of H(w) is nontrivial exactly when w is a root of the
Alexander polynomial of T(2,q), an arithmetic condition on the order of w.

The signature function of a whole knot (used as a sliceness diagnostic)
is evaluated by exact jump counting at rational angles, via the explicit
eigenvalue parametrization of H along the unit circle.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .knots import GAKnot
from .sturm import signature_nullity_exact

DEFAULT_PRECISION_EXPONENT = 8


@dataclass(frozen=True)
class RootOfUnity:
    """exp(2*pi*i*a/m), stored in lowest terms with 0 <= a < m."""

    a: int
    m: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"order must be positive, got {self.m}")
        a = self.a % self.m
        g = math.gcd(a, self.m)
        object.__setattr__(self, "a", a // g)
        object.__setattr__(self, "m", self.m // g)

    @property
    def is_one(self) -> bool:
        return self.m == 1

    @property
    def order(self) -> int:
        return self.m

    def conjugate(self) -> "RootOfUnity":
        return RootOfUnity(self.m - self.a, self.m) if self.a else self

    def as_complex(self) -> complex:
        return complex(np.exp(2j * np.pi * self.a / self.m))


def _precision_exponent() -> int:
    raw = os.environ.get("CG_OBSTRUCT_PRECISION", "")
    try:
        return int(raw) if raw else DEFAULT_PRECISION_EXPONENT
    except ValueError:
        return DEFAULT_PRECISION_EXPONENT


def seifert_matrix_T2(q: int) -> np.ndarray:
    """Standard (q-1)x(q-1) Seifert matrix of T(2,q): -1 diagonal, +1 super.

    Satisfies det(tV - V^T) = Delta_{T(2,q)}(t) up to units and
    sign(V + V^T) = -(q-1).
    """
    if q < 3 or q % 2 == 0:
        raise ValueError(f"q must be odd and >= 3, got {q}")
    V = -np.eye(q - 1, dtype=np.int64)
    for i in range(q - 2):
        V[i, i + 1] = 1
    return V


def _hermitian_form(q: int, omega: RootOfUnity) -> np.ndarray:
    w = omega.as_complex()
    V = seifert_matrix_T2(q).astype(np.complex128)
    return (1 - w) * V + (1 - w.conjugate()) * V.T


@lru_cache(maxsize=65536)
def _lt_pair(q: int, a: int, m: int, exponent: int) -> tuple[int, int]:
    """(signature, nullity) of T(2,q) at exp(2*pi*i*a/m), certified."""
    nullity = _nullity_arith(q, a, m)
    H = _hermitian_form(q, RootOfUnity(a, m))
    eig = np.linalg.eigvalsh(H)
    tau = 10.0 ** (-exponent) * max(1.0, float(np.abs(H).sum(axis=1).max()))
    small = int(np.count_nonzero(np.abs(eig) <= tau))
    if small == nullity:
        # every eigenvalue outside the band is certainly nonzero, and the
        # in-band ones are exactly the arithmetic kernel
        pos = int(np.count_nonzero(eig > tau))
        neg = int(np.count_nonzero(eig < -tau))
        return pos - neg, nullity
    sig, nul = signature_nullity_exact(q, a, m)
    if nul != nullity:
        raise ArithmeticError(
            f"nullity mismatch between arithmetic shortcut and exact chain: q={q}, a={a}, m={m}"
        )
    return sig, nul


def _nullity_arith(q: int, a: int, m: int) -> int:
    """Kernel dimension of H at exp(2*pi*i*a/m), by pure arithmetic.

    Roots of Delta_{T(2,q)} are the w with w^q = -1, w != -1, i.e. the
    roots of unity whose order divides 2q but neither divides q nor
    equals 2.  The tridiagonal form is unreduced, so the kernel is at
    most one dimensional.
    """
    g = math.gcd(a % m, m)
    order = m // g
    return 1 if (2 * q) % order == 0 and q % order != 0 and order != 2 else 0


def lt_signature(q: int, omega: RootOfUnity) -> int:
    """Levine-Tristram signature of T(2,q) at omega (0 for q = 1 or omega = 1)."""
    if q < 1 or q % 2 == 0:
        raise ValueError(f"q must be odd and >= 1, got {q}")
    if q == 1 or omega.is_one:
        return 0
    return _lt_pair(q, omega.a, omega.m, _precision_exponent())[0]


def lt_nullity(q: int, omega: RootOfUnity) -> int:
    """Nullity of the twisted form of T(2,q) at omega; exact, no numerics."""
    if q < 1 or q % 2 == 0:
        raise ValueError(f"q must be odd and >= 1, got {q}")
    if q == 1 or omega.is_one:
        return 0
    return _nullity_arith(q, omega.a, omega.m)


def signature_at_minus_one(K: GAKnot) -> int:
    """Ordinary signature sigma_K(-1) of the connected sum.

    At w = -1 the companion factor is evaluated at w^2 = 1 where it
    vanishes, so each piece contributes sign * (-(p-1)).
    """
    return sum(pc.sign * (-(pc.cable_p - 1)) for pc in K.pieces)


# ---------------------------------------------------------------------------
# Exact signature function along the circle
# ---------------------------------------------------------------------------


def torus_signature_at_angle(m: int, x: Fraction) -> int:
    """Signature of T(2,m) at w = exp(i*pi*x) for rational x in (0, 2).

    The eigenvalues of H along the circle factor as a positive multiple
    of cos(k*pi/m) - cos(|1-x|*pi/2), k = 1..m-1, so counting signs is
    counting lattice points: #pos = #{k : k/m < |1-x|/2}.  Exact in
    integer arithmetic; eigenvalues at k/m = |1-x|/2 are zero modes.
    """
    if m < 1 or m % 2 == 0:
        raise ValueError(f"torus parameter must be odd and >= 1, got {m}")
    if not 0 < x < 2:
        raise ValueError(f"angle fraction must lie in (0, 2), got {x}")
    if m == 1:
        return 0
    y = abs(1 - x) / 2  # in [0, 1/2)
    # pos = #{1 <= k <= m-1 : k < m*y}
    t = m * y
    kmax = t.numerator // t.denominator
    if t.denominator == 1:
        kmax -= 1  # strict inequality
    pos = min(m - 1, max(0, kmax))
    zero = 1 if t.denominator == 1 and 1 <= t.numerator <= m - 1 else 0
    neg = (m - 1) - pos - zero
    return pos - neg


def _hits_alexander_root(K: GAKnot, x: Fraction) -> bool:
    """Whether exp(i*pi*x) or its square is a root of any piece factor."""
    for pc in K.pieces:
        for m, xx in ((pc.cable_p, x), (pc.companion_q, (2 * x) % 2)):
            if m == 1 or xx == 0:
                continue
            t = m * abs(1 - xx) / 2
            if t.denominator == 1 and 1 <= t.numerator <= m - 1:
                return True
    return False


def signature_function_samples(K: GAKnot, resolution: int) -> list[tuple[Fraction, int]]:
    """Sample sigma_K at w = exp(i*pi*j/resolution), j = 1..resolution-1.

    Sampling angles that land on an Alexander root are perturbed by half a
    step (the perturbed angle has even denominator, roots have odd, so the
    perturbed sample is always regular).  Each piece contributes
    sign * (sigma_{T(2,p)}(w) + sigma_{T(2,q')}(w^2)) by the cabling rule.
    """
    if resolution < 1:
        raise ValueError(f"resolution must be >= 1, got {resolution}")
    out: list[tuple[Fraction, int]] = []
    half = Fraction(1, 2 * resolution)
    for j in range(1, resolution):
        x = Fraction(j, resolution)
        if _hits_alexander_root(K, x):
            x += half
        total = 0
        for pc in K.pieces:
            s = torus_signature_at_angle(pc.cable_p, x)
            x2 = (2 * x) % 2
            if pc.companion_q > 1 and x2 != 0:
                s += torus_signature_at_angle(pc.companion_q, x2)
            total += pc.sign * s
        out.append((x, total))
    return out

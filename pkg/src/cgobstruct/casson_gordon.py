"""Casson-Gordon sigma invariants and nullities, in exact rational arithmetic.

For the (2,p)-cable of T(2,q') and the character picking out residue a
mod p on the cover's p-summand:

    sigma = -p + 2a(p-a)/p + 2 * sigma_{T(2,q')}(xi_p^a)      (a != 0)
    eta   = 2 * nullity_{T(2,q')}(xi_p^a)

with both zero at a = 0.  Values add over connected sums; mirrors negate
sigma and preserve eta; a character with support of size s contributes an
extra s-1 to the nullity of the sum.  Exact rationals are Python
Fractions throughout (denominators always divide the product of support
primes); the scaled-integer tables consumed by the scan kernels clear the
denominator by the prime p, so they are exact int64 values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .knots import GAKnot
from .primes import is_odd_prime
from .signatures import RootOfUnity, lt_nullity, lt_signature

ExactRational = Fraction


@dataclass(frozen=True)
class Character:
    """One residue per piece: residues[j] = a_j mod cable prime p_j."""

    residues: tuple[int, ...]

    @staticmethod
    def for_knot(K: GAKnot, residues) -> "Character":
        res = tuple(int(r) for r in residues)
        if len(res) != len(K.pieces):
            raise ValueError(
                f"character length {len(res)} does not match piece count {len(K.pieces)}"
            )
        for j, (r, pc) in enumerate(zip(res, K.pieces)):
            if not 0 <= r < pc.cable_p:
                raise ValueError(f"residue {r} at piece {j} not reduced mod {pc.cable_p}")
        return Character(res)

    def negated(self, K: GAKnot) -> "Character":
        return Character(
            tuple((-r) % pc.cable_p for r, pc in zip(self.residues, K.pieces))
        )

    @property
    def is_trivial(self) -> bool:
        return not any(self.residues)


def sigma_torus(q: int, a: int) -> Fraction:
    """sigma(T(2,q), chi_a) = -q + 2a(q-a)/q, and 0 at a = 0."""
    if not is_odd_prime(q):
        raise ValueError(f"q must be an odd prime, got {q}")
    if not 0 <= a < q:
        raise ValueError(f"residue {a} out of range mod {q}")
    if a == 0:
        return Fraction(0)
    return -q + Fraction(2 * a * (q - a), q)


def sigma_cable(qc: int, p: int, a: int) -> Fraction:
    """sigma of the (2,p)-cable of T(2,qc) at residue a mod p.

    qc = 1 (unknot companion) reduces to sigma_torus(p, a): the correction
    term 2*sigma_{T(2,1)} vanishes identically.
    """
    if qc < 1 or qc % 2 == 0:
        raise ValueError(f"companion parameter must be odd and >= 1, got {qc}")
    if not is_odd_prime(p):
        raise ValueError(f"cable parameter must be an odd prime, got {p}")
    if math.gcd(p, 2 * qc) != 1:
        raise ValueError(f"need gcd(p, 2*qc) = 1, got p={p}, qc={qc}")
    if not 0 <= a < p:
        raise ValueError(f"residue {a} out of range mod {p}")
    if a == 0:
        return Fraction(0)
    return -p + Fraction(2 * a * (p - a), p) + 2 * lt_signature(qc, RootOfUnity(a, p))


def eta_cable(qc: int, p: int, a: int) -> int:
    """Nullity contribution of one cable piece: 2 * nullity at xi_p^a.

    Zero for every a when gcd(p, 2*qc) = 1, which holds for all valid
    pieces; kept explicit so the additivity bookkeeping stays honest.
    """
    if qc < 1 or qc % 2 == 0:
        raise ValueError(f"companion parameter must be odd and >= 1, got {qc}")
    if not is_odd_prime(p):
        raise ValueError(f"cable parameter must be an odd prime, got {p}")
    if not 0 <= a < p:
        raise ValueError(f"residue {a} out of range mod {p}")
    if a == 0:
        return 0
    return 2 * lt_nullity(qc, RootOfUnity(a, p))


def sigma_knot(K: GAKnot, chi: Character) -> Fraction:
    """Additive sigma of the connected sum; mirrors contribute negated."""
    _check_character(K, chi)
    total = Fraction(0)
    for pc, a in zip(K.pieces, chi.residues):
        if a:
            total += pc.sign * sigma_cable(pc.companion_q, pc.cable_p, a)
    return total


def eta_knot(K: GAKnot, chi: Character) -> int:
    """Nullity of the sum: (support size - 1) plus per-piece contributions.

    Zero for the trivial character.
    """
    _check_character(K, chi)
    support = sum(1 for a in chi.residues if a)
    if support == 0:
        return 0
    extra = sum(
        eta_cable(pc.companion_q, pc.cable_p, a)
        for pc, a in zip(K.pieces, chi.residues)
        if a
    )
    return (support - 1) + extra


def _check_character(K: GAKnot, chi: Character) -> None:
    if len(chi.residues) != len(K.pieces):
        raise ValueError(
            f"character length {len(chi.residues)} does not match piece count {len(K.pieces)}"
        )
    for j, (a, pc) in enumerate(zip(chi.residues, K.pieces)):
        if not 0 <= a < pc.cable_p:
            raise ValueError(f"residue {a} at piece {j} not reduced mod {pc.cable_p}")


@dataclass(frozen=True)
class SigmaTable:
    """Per-prime lookup tables for the scan kernels.

    For each piece j with cable prime p (in piece order):
      sigma[i][a]      sign-folded Fraction sigma contribution at residue a
      eta[i][a]        integer nullity contribution at residue a
      scaled_sigma     int64 array, [i, a] = p * sigma[i][a]  (exact)
      eta_arr          int64 array of eta
    Conjugation symmetry entry[a] = entry[p-a] halves the construction
    cost; row index i follows piece_indices.
    """

    p: int
    piece_indices: tuple[int, ...]
    sigma: tuple[tuple[Fraction, ...], ...]
    eta: tuple[tuple[int, ...], ...]
    scaled_sigma: np.ndarray
    eta_arr: np.ndarray


def build_sigma_tables(K: GAKnot, p: int) -> SigmaTable:
    """Tabulate sign * sigma_cable and eta_cable over all residues mod p."""
    idx = tuple(j for j, pc in enumerate(K.pieces) if pc.cable_p == p)
    if not idx:
        raise ValueError(f"{p} is not a cable prime of the knot")
    sig_rows: list[tuple[Fraction, ...]] = []
    eta_rows: list[tuple[int, ...]] = []
    for j in idx:
        pc = K.pieces[j]
        sig = [Fraction(0)] * p
        eta = [0] * p
        for a in range(1, (p - 1) // 2 + 1):
            s = pc.sign * sigma_cable(pc.companion_q, p, a)
            e = eta_cable(pc.companion_q, p, a)
            sig[a] = sig[p - a] = s
            eta[a] = eta[p - a] = e
        sig_rows.append(tuple(sig))
        eta_rows.append(tuple(eta))
    scaled = np.empty((len(idx), p), dtype=np.int64)
    etas = np.empty((len(idx), p), dtype=np.int64)
    for i, (srow, erow) in enumerate(zip(sig_rows, eta_rows)):
        for a in range(p):
            num = srow[a] * p
            if num.denominator != 1:
                raise ArithmeticError(f"denominator of sigma at a={a} does not divide {p}")
            scaled[i, a] = _checked_int64(int(num))
            etas[i, a] = erow[a]
    return SigmaTable(p, idx, tuple(sig_rows), tuple(eta_rows), scaled, etas)


def _checked_int64(v: int) -> int:
    if not -(2**62) <= v <= 2**62:
        raise OverflowError(f"scaled sigma value {v} exceeds the int64 budget")
    return v

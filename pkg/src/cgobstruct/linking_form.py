"""p-primary parts of the double-branched-cover linking form.

Each piece cabled over the prime p contributes one Z_p summand to the
cover's first homology, with self-linking +1/p for a positive piece and
-1/p for a mirror.  The p-primary part is therefore the diagonal form
sum_i eps_i x_i^2 / p on F_p^{r_p}, and the characters relevant to the
genus obstruction are its isotropic vectors.  Since the obstruction
verdict is invariant under scaling a vector, enumeration works projectively:
one representative per scalar class, first nonzero coordinate normalized
to 1, ascending lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .casson_gordon import Character
from .knots import GAKnot

PrimaryVector = tuple[int, ...]


@dataclass(frozen=True)
class PrimaryPart:
    """Diagonal sign form of one prime: Q(x) = sum eps_i x_i^2 mod p."""

    p: int
    piece_indices: tuple[int, ...]
    signs: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.piece_indices)

    def to_character(self, x: PrimaryVector, K: GAKnot) -> Character:
        """Place residue x_i on piece piece_indices[i], zero elsewhere."""
        res = [0] * len(K.pieces)
        for i, j in enumerate(self.piece_indices):
            res[j] = x[i] % self.p
        return Character(tuple(res))


def primary_parts(K: GAKnot) -> list[PrimaryPart]:
    """One part per distinct cable prime, in first-appearance piece order."""
    parts: list[PrimaryPart] = []
    for p in K.primes():
        idx = tuple(j for j, pc in enumerate(K.pieces) if pc.cable_p == p)
        signs = tuple(K.pieces[j].sign for j in idx)
        parts.append(PrimaryPart(p, idx, signs))
    return parts


def is_isotropic(x: PrimaryVector, part: PrimaryPart) -> bool:
    """Whether sum eps_i x_i^2 = 0 mod p."""
    if len(x) != part.rank:
        raise ValueError(f"vector length {len(x)} does not match rank {part.rank}")
    return sum(e * v * v for e, v in zip(part.signs, x)) % part.p == 0


@lru_cache(maxsize=64)
def sqrt_table(p: int) -> tuple[int, ...]:
    """Smallest square root of each residue mod p, or -1 for non-residues."""
    table = [-1] * p
    for r in range((p - 1) // 2, -1, -1):
        table[r * r % p] = r
    return tuple(table)


def enumerate_projective_isotropic(part: PrimaryPart) -> Iterator[PrimaryVector]:
    """Projective isotropic vectors: one representative per scalar class.

    Representatives have first nonzero coordinate 1 and stream in
    ascending lexicographic order.  For each choice of leading position
    and free middle coordinates, the last coordinate is solved from the
    quadratic condition via the square-root table, so the cost is
    O(p^(rank-2)) classes times O(1), never a full p^rank filter.
    """
    p, signs, r = part.p, part.signs, part.rank
    roots = sqrt_table(p)
    inv_last = pow(int(signs[-1]) % p, p - 2, p) if r >= 1 else 0
    for lead in range(r - 1, -1, -1):
        if lead == r - 1:
            # x = (0,...,0,1) has Q(x) = eps != 0 mod p: never isotropic
            continue
        base = [0] * r
        base[lead] = 1
        yield from _solve_tail(base, lead, part, roots, inv_last)


def _solve_tail(
    base: list[int],
    lead: int,
    part: PrimaryPart,
    roots: tuple[int, ...],
    inv_last: int,
) -> Iterator[PrimaryVector]:
    """Iterate free coordinates lead+1..r-2 and solve coordinate r-1."""
    p, signs, r = part.p, part.signs, part.rank
    free = range(lead + 1, r - 1)
    x = base[:]
    partial0 = signs[lead] % p  # contribution of the leading 1

    def rec(pos: int, partial: int) -> Iterator[PrimaryVector]:
        if pos == r - 1:
            target = (-partial) * inv_last % p
            root = roots[target]
            if root < 0:
                return
            x[r - 1] = root
            yield tuple(x)
            if root != 0:
                x[r - 1] = p - root
                yield tuple(x)
            return
        for v in range(p):
            x[pos] = v
            yield from rec(pos + 1, (partial + signs[pos] * v * v) % p)
        x[pos] = 0

    yield from rec(free.start if free else r - 1, partial0)

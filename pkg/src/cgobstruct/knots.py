"""Generalized algebraic knots as formal connected sums of cabled torus knots.

A knot here is an ordered list of signed pieces, each piece being the
(2,p)-cable of a (2,q') torus knot with p an odd prime.  The companion
parameter q' = 1 degenerates to an unknot companion, so the piece is the
plain torus knot T(2,p).  A sign of -1 marks the reverse mirror image of
the positive piece; every invariant computed in this package is blind to
reversal, so only the mirror flag is stored.

Alexander polynomials are carried exactly and only in the structured form
that cabling produces, which is what makes the slice-compatibility check
(`fox_milnor_check`) a finite pairing problem instead of a factorization
problem.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterator

from .primes import is_odd_prime


@dataclass(frozen=True)
class Piece:
    """One signed connected-sum piece: the (2,cable_p)-cable of T(2,companion_q).

    companion_q = 1 encodes the torus knot T(2,cable_p) itself.  sign = -1
    is the reverse mirror image.
    """

    companion_q: int
    cable_p: int
    sign: int

    def __post_init__(self) -> None:
        q, p, s = self.companion_q, self.cable_p, self.sign
        if s not in (1, -1):
            raise ValueError(f"piece sign must be +1 or -1, got {s}")
        if q < 1 or q % 2 == 0:
            raise ValueError(f"companion parameter must be odd and >= 1, got {q}")
        if not is_odd_prime(p):
            raise ValueError(f"cable parameter must be an odd prime, got {p}")
        # nonsingularity of every evaluation downstream needs gcd(p, 2q') = 1
        if math.gcd(p, 2 * q) != 1:
            raise ValueError(
                f"cable prime {p} must not divide twice the companion parameter {q}"
            )

    @property
    def is_plain_torus(self) -> bool:
        return self.companion_q == 1

    def mirror(self) -> "Piece":
        return Piece(self.companion_q, self.cable_p, -self.sign)

    def __str__(self) -> str:
        body = (
            f"T(2,{self.cable_p})"
            if self.is_plain_torus
            else f"T(2,{self.companion_q};2,{self.cable_p})"
        )
        return body if self.sign > 0 else "-" + body


@dataclass(frozen=True)
class GAKnot:
    """Ordered connected sum of pieces (n >= 1)."""

    pieces: tuple[Piece, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.pieces, tuple):
            object.__setattr__(self, "pieces", tuple(self.pieces))
        if len(self.pieces) == 0:
            raise ValueError("a knot needs at least one piece")

    def __len__(self) -> int:
        return len(self.pieces)

    def __iter__(self) -> Iterator[Piece]:
        return iter(self.pieces)

    def __add__(self, other: "GAKnot") -> "GAKnot":
        """Connected sum: concatenation of piece lists."""
        return GAKnot(self.pieces + other.pieces)

    def mirror(self) -> "GAKnot":
        return GAKnot(tuple(pc.mirror() for pc in self.pieces))

    def primes(self) -> list[int]:
        """Distinct cable primes in first-appearance order."""
        seen: list[int] = []
        for pc in self.pieces:
            if pc.cable_p not in seen:
                seen.append(pc.cable_p)
        return seen

    def rank(self, p: int) -> int:
        """Number of pieces cabled over the prime p (the rank r_p)."""
        return sum(1 for pc in self.pieces if pc.cable_p == p)

    def __str__(self) -> str:
        out = str(self.pieces[0])
        for pc in self.pieces[1:]:
            s = str(pc)
            out += " # -" + s[1:] if s.startswith("-") else " # " + s
        return out


def build_family(p1: int, p2: int, q1: int, q2: int, q3: int) -> GAKnot:
    """The 8-piece hyperbolic-form knot over two primes.

    Piece order (signs alternate +,-,+,-,+,-,+,-):

        +T(2,q1;2,p1)  -T(2,q2;2,p1)  +T(2,p1)       -T(2,q3;2,p1)
        +T(2,q2;2,p2)  -T(2,p2)       +T(2,q3;2,p2)  -T(2,q1;2,p2)

    Each prime p1, p2 carries exactly four pieces, so both primary parts
    of the double branched cover are rank 4 with signs (+,-,+,-): two
    hyperbolic planes.  All five parameters must be pairwise distinct odd
    primes.
    """
    params = (p1, p2, q1, q2, q3)
    for v in params:
        if not is_odd_prime(v):
            raise ValueError(f"family parameters must be odd primes, got {v}")
    if len(set(params)) != 5:
        raise ValueError(f"family parameters must be pairwise distinct, got {params}")
    return GAKnot(
        (
            Piece(q1, p1, +1),
            Piece(q2, p1, -1),
            Piece(1, p1, +1),
            Piece(q3, p1, -1),
            Piece(q2, p2, +1),
            Piece(1, p2, -1),
            Piece(q3, p2, +1),
            Piece(q1, p2, -1),
        )
    )


def is_algebraic_piece(piece: Piece) -> bool:
    """Whether the unsigned piece is the link of a plane curve singularity.

    Plain torus knots always are.  The (2,p)-cable of T(2,q') is when the
    cable parameter clears the iterated-singularity threshold p > 2*2*q'.
    Negative pieces report the property of their mirror.
    """
    if piece.is_plain_torus:
        return True
    return piece.cable_p > 4 * piece.companion_q


# ---------------------------------------------------------------------------
# Laurent polynomials (Alexander polynomial carrier)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LaurentPoly:
    """Integer Laurent polynomial as an exponent -> coefficient map."""

    coeffs: tuple[tuple[int, int], ...]  # sorted ((exponent, coefficient), ...)

    @staticmethod
    def from_dict(d: dict[int, int]) -> "LaurentPoly":
        return LaurentPoly(tuple(sorted((e, c) for e, c in d.items() if c != 0)))

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly(((0, 1),))

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        acc: dict[int, int] = {}
        for e1, c1 in self.coeffs:
            for e2, c2 in other.coeffs:
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        return LaurentPoly.from_dict(acc)

    def substitute_square(self) -> "LaurentPoly":
        """t -> t**2."""
        return LaurentPoly(tuple((2 * e, c) for e, c in self.coeffs))

    def normalized(self) -> "LaurentPoly":
        """Shift so the lowest exponent is 0 and its coefficient is positive."""
        if not self.coeffs:
            return self
        lo, c_lo = self.coeffs[0]
        flip = -1 if c_lo < 0 else 1
        return LaurentPoly(tuple((e - lo, flip * c) for e, c in self.coeffs))

    def degree_span(self) -> int:
        """Highest exponent minus lowest exponent (0 for constants)."""
        if not self.coeffs:
            return 0
        return self.coeffs[-1][0] - self.coeffs[0][0]

    def __call__(self, t: int) -> int:
        """Exact evaluation at an integer t != 0 (negative exponents allowed
        only when they cancel; normalized polynomials never have them)."""
        total = 0
        for e, c in self.coeffs:
            if e < 0:
                raise ValueError("evaluate only normalized (nonnegative exponent) polynomials")
            total += c * t**e
        return total

    def is_palindromic(self) -> bool:
        """After normalization, coefficients read the same in both directions."""
        p = self.normalized()
        d = dict(p.coeffs)
        span = p.degree_span()
        return all(d.get(e, 0) == d.get(span - e, 0) for e in range(span + 1))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in reversed(self.coeffs):
            mag = abs(c)
            term = (
                f"{mag}"
                if e == 0
                else ("t" if e == 1 else f"t^{e}") if mag == 1 else (f"{mag}*t" if e == 1 else f"{mag}*t^{e}")
            )
            parts.append(("- " if c < 0 else "+ ") + term)
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]


def torus_alexander(m: int) -> LaurentPoly:
    """Alexander polynomial of T(2,m) for odd m: (t^m + 1)/(t + 1).

    Alternating coefficients t^(m-1) - t^(m-2) + ... + 1; the constant 1
    for m = 1.
    """
    if m < 1 or m % 2 == 0:
        raise ValueError(f"torus parameter must be odd and >= 1, got {m}")
    return LaurentPoly(tuple((e, (-1) ** e) for e in range(m)))


def alexander_polynomial(K: GAKnot) -> LaurentPoly:
    """Product over pieces of companion factor at t^2 times cable factor.

    Each piece contributes Delta_{T(2,q')}(t^2) * Delta_{T(2,p)}(t); mirrors
    leave the polynomial unchanged up to units.  Result is normalized:
    lowest exponent 0, positive lowest coefficient.
    """
    acc = LaurentPoly.one()
    for pc in K.pieces:
        if pc.companion_q > 1:
            acc = acc * torus_alexander(pc.companion_q).substitute_square()
        acc = acc * torus_alexander(pc.cable_p)
    return acc.normalized()


@dataclass(frozen=True)
class FoxMilnorResult:
    """Outcome of the structured slice-compatibility check.

    ok is true when every irreducible-in-structure factor of the Alexander
    polynomial occurs an even number of times.  pairs lists, per factor,
    the piece indices matched two by two; unpaired lists the leftovers that
    caused a failure.
    """

    ok: bool
    pairs: tuple[tuple[str, int, int], ...]
    unpaired: tuple[tuple[str, int], ...]


def fox_milnor_check(K: GAKnot) -> FoxMilnorResult:
    """Pair up the structured Alexander factors of K.

    The factor multiset consists of one cable factor Delta_{T(2,p)}(t) per
    piece and one companion factor Delta_{T(2,q')}(t^2) per piece with
    q' > 1.  If every factor appears an even number of times then
    Delta_K = f(t) * f(1/t) up to units (each factor is palindromic), which
    is the Alexander-polynomial condition satisfied by every slice knot.
    This decides only the structured form; it never factors polynomials.
    """
    occurrences: dict[str, list[int]] = {}
    for j, pc in enumerate(K.pieces):
        occurrences.setdefault(f"cable[{pc.cable_p}]", []).append(j)
        if pc.companion_q > 1:
            occurrences.setdefault(f"companion[{pc.companion_q}]", []).append(j)
    pairs: list[tuple[str, int, int]] = []
    unpaired: list[tuple[str, int]] = []
    for label in sorted(occurrences):
        idx = occurrences[label]
        for a, b in zip(idx[0::2], idx[1::2]):
            pairs.append((label, a, b))
        if len(idx) % 2:
            unpaired.append((label, idx[-1]))
    return FoxMilnorResult(not unpaired, tuple(pairs), tuple(unpaired))


# ---------------------------------------------------------------------------
# Knot strings
# ---------------------------------------------------------------------------

_TERM_RE = re.compile(
    r"""^(?P<sign>-?)
         T\(2,(?P<first>\d+)
         (?:;2,(?P<second>\d+))?
         \)$""",
    re.VERBOSE,
)
_FAMILY_RE = re.compile(r"^family\((?P<args>[\d,]+)\)$")


def parse_knot(text: str) -> GAKnot:
    """Parse a knot string.

    Grammar: '#'-separated terms, each 'T(2,q;2,p)', '-T(2,q;2,p)',
    'T(2,p)', '-T(2,p)', or 'family(p1,p2,q1,q2,q3)'.  Whitespace is
    ignored everywhere.
    """
    compact = re.sub(r"\s+", "", text)
    if not compact:
        raise ValueError("empty knot string")
    pieces: list[Piece] = []
    for term in compact.split("#"):
        fam = _FAMILY_RE.match(term)
        if fam:
            args = [int(x) for x in fam.group("args").split(",") if x]
            if len(args) != 5:
                raise ValueError(f"family(...) takes 5 primes, got {len(args)}: {term!r}")
            pieces.extend(build_family(*args).pieces)
            continue
        m = _TERM_RE.match(term)
        if not m:
            raise ValueError(f"cannot parse knot term {term!r}")
        sign = -1 if m.group("sign") else 1
        first = int(m.group("first"))
        second = m.group("second")
        if second is None:
            pieces.append(Piece(1, first, sign))
        else:
            pieces.append(Piece(first, int(second), sign))
    return GAKnot(tuple(pieces))


def format_knot(K: GAKnot) -> str:
    """Canonical string form; parse_knot(format_knot(K)) == K."""
    return str(K)

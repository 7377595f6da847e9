"""Small deterministic primality helpers.

Every prime handled by this package is far below 3.3 * 10^14, so the
deterministic Miller-Rabin witness set {2, 3, 5, 7, 11, 13, 17} suffices.
"""

from __future__ import annotations

_WITNESSES = (2, 3, 5, 7, 11, 13, 17)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3 * 10^14."""
    if n < 2:
        return False
    for w in _WITNESSES:
        if n == w:
            return True
        if n % w == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for w in _WITNESSES:
        x = pow(w, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_odd_prime(n: int) -> bool:
    return n != 2 and is_prime(n)


def odd_primes_in(lo: int, hi: int) -> list[int]:
    """Odd primes p with lo <= p <= hi, ascending."""
    start = max(lo, 3)
    if start % 2 == 0:
        start += 1
    return [n for n in range(start, hi + 1, 2) if is_prime(n)]

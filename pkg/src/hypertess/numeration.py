"""Recurrence bases for {p,q} tilings and greedy positional numeration.

Each hyperbolic tiling {p,q} comes with an integer sequence u_0, u_1, ...
(the level sizes of the tree spanning one angular sector).  Natural numbers
are written greedily in that basis; those digit strings are the per-sector
part of a tile coordinate.
"""

from __future__ import annotations

from bisect import bisect_right


def is_hyperbolic(p: int, q: int) -> bool:
    """True iff regular p-gons, q around a vertex, tile the hyperbolic plane."""
    return 2 * (p + q) < p * q


def check_pq(p: int, q: int) -> None:
    if p < 3 or q < 3:
        raise ValueError(f"need p >= 3 and q >= 3, got {{{p},{q}}}")
    if not is_hyperbolic(p, q):
        raise ValueError(f"{{{p},{q}}} is not hyperbolic: 1/{p} + 1/{q} >= 1/2")


class Basis:
    """Growable sequence u_0..u_k for a valid {p,q}, with greedy encode/decode.

    Even q = 2h:  u_{n+2} = ((p-3)(h-1)+1) u_{n+1} + (h-3) u_n,
                  u_0 = 1, u_1 = (p-3)(h-1)+1.
    Odd q = 2h+1 >= 5:
                  u_{n+3} = ((p-3)(h-1)+1) u_{n+2} + ((p-2)(h-1)-2) u_{n+1}
                            + (h-3) u_n,
                  u_0 = 1, u_1 = (p-3)(h-1)+2,
                  u_2 = ((p-3)(h-1))^2 + (4p-11)(h-1).
    q = 3 shares its sector tree with {p-2, 4} and reuses that recurrence.

    Terms are Python ints (they grow like beta^n, beta > 1).
    """

    def __init__(self, p: int, q: int, count: int = 8):
        check_pq(p, q)
        if count < 3:
            raise ValueError("count must be >= 3")
        self.p = p
        self.q = q
        self.h = q // 2 if q % 2 == 0 else (q - 1) // 2
        # q = 3 delegates wholesale to the {p-2, 4} recurrence.
        rp, rq = (p - 2, 4) if q == 3 else (p, q)
        rh = rq // 2 if rq % 2 == 0 else (rq - 1) // 2
        self._rp, self._rh, self._rodd = rp, rh, rq % 2 == 1
        a = (rp - 3) * (rh - 1)
        if self._rodd:
            self._terms = [1, a + 2, a * a + (4 * rp - 11) * (rh - 1)]
        else:
            self._terms = [1, a + 1, (a + 1) * (a + 1) + (rh - 3)]
        self.ensure(count)

    def ensure(self, count: int) -> None:
        """Grow the term list so that at least `count` terms exist."""
        a = (self._rp - 3) * (self._rh - 1)
        t = self._terms
        while len(t) < count:
            if self._rodd:
                t.append((a + 1) * t[-1]
                         + ((self._rp - 2) * (self._rh - 1) - 2) * t[-2]
                         + (self._rh - 3) * t[-3])
            else:
                t.append((a + 1) * t[-1] + (self._rh - 3) * t[-2])

    @property
    def terms(self) -> list[int]:
        return list(self._terms)

    def term(self, i: int) -> int:
        self.ensure(i + 1)
        return self._terms[i]

    def __repr__(self):
        return f"Basis(p={self.p}, q={self.q}, terms={self._terms[:6]}...)"


def basis(p: int, q: int, count: int) -> Basis:
    """Basis with exactly `count` materialized terms (more may grow later)."""
    b = Basis(p, q, count)
    del b._terms[count:]
    return b


def encode(n: int, b: Basis) -> list[int]:
    """Greedy digits of n, most significant first.

    Scans from the largest u_k <= n downward, taking floor quotients.  This
    realizes the representation with the greatest number of digits.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return [0]
    while b._terms[-1] <= n:
        b.ensure(len(b._terms) + 1)
    terms = b._terms
    k = bisect_right(terms, n) - 1
    digits = []
    rem = n
    for i in range(k, -1, -1):
        d, rem = divmod(rem, terms[i])
        digits.append(d)
    return digits


def decode(digits: list[int], b: Basis) -> int:
    """Value of a most-significant-first digit string: sum a_i u_i."""
    if any(d < 0 for d in digits):
        raise ValueError("digits must be non-negative")
    b.ensure(len(digits))
    terms = b._terms
    return sum(d * terms[i] for i, d in enumerate(reversed(digits)))


def polynomial_coeffs(p: int, q: int) -> list[int]:
    """Coefficients (descending) of the characteristic polynomial P(X).

    Even q: X^2 - ((p-3)(h-1)+1) X - (h-3).
    Odd q >= 5: X^3 - ((p-3)(h-1)+1) X^2 - ((p-2)(h-1)-2) X - (h-3).
    q = 3 uses the {p-2, 4} polynomial.
    """
    check_pq(p, q)
    if q == 3:
        p, q = p - 2, 4
    if q % 2 == 0:
        h = q // 2
        return [1, -((p - 3) * (h - 1) + 1), -(h - 3)]
    h = (q - 1) // 2
    return [1, -((p - 3) * (h - 1) + 1), -((p - 2) * (h - 1) - 2), -(h - 3)]


def beta(p: int, q: int, tol: float = 1e-12) -> float:
    """Greatest real root of P(X), by bracketed bisection; always > 1."""
    if tol <= 0:
        raise ValueError("tol must be > 0")
    coeffs = polynomial_coeffs(p, q)

    def P(x: float) -> float:
        acc = 0.0
        for c in coeffs:
            acc = acc * x + c
        return acc

    hi = 1.0 + sum(abs(c) for c in coeffs[1:])
    # Find a point with P < 0 below the dominant root (P(1) may be 0 exactly).
    lo = None
    for k in range(2049):
        x = 1.0 + (hi - 1.0) * k / 2048.0
        if P(x) < 0:
            lo = x
            break
    if lo is None:
        raise ArithmeticError(f"no bracket for the dominant root of {{{p},{q}}}")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if P(mid) < 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def is_regular_language_case(p: int, q: int) -> bool:
    """Whether greedy representations form a regular language (Pisot root).

    False exactly for {4,5}, whose polynomial is not Pisot.
    """
    check_pq(p, q)
    return (p, q) != (4, 5)

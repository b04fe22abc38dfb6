"""Certified isolation of the largest non-negative real root, in exact rationals.

The certificate language is Descartes' rule of signs on transformed
polynomials:

  * no roots in (c, oo):   sign variations of p(x + c) equal zero;
  * roots in (c, d):       bounded by the variations of the Moebius transform
                           (1+t)^deg * p((c + d*t)/(1+t)); zero variations
                           certify the interval empty, one variation certifies
                           exactly one root inside.

isolate_max_root() deflates the root at 0, reduces to the squarefree part,
starts from the Cauchy bound (where the shifted polynomial provably has no
sign variations, all derivatives being positive beyond every root), and scans
intervals right to left, bisecting until the rightmost root is pinned in a
bracket no wider than the requested width.  Everything is Fraction
arithmetic; no floating point enters any decision.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .polynomials import Poly

__all__ = [
    "sign_variations",
    "taylor_shift",
    "cauchy_root_bound",
    "squarefree_part",
    "variations_in_interval",
    "no_roots_above",
    "RootBracket",
    "isolate_max_root",
]


def sign_variations(coeffs) -> int:
    """Number of sign changes in a coefficient sequence, zeros skipped."""
    count = 0
    prev = 0
    for c in coeffs:
        if c == 0:
            continue
        s = 1 if c > 0 else -1
        if prev and s != prev:
            count += 1
        prev = s
    return count


def _shift(coeffs: list[Fraction], c: Fraction) -> list[Fraction]:
    """Coefficients of p(x + c), by repeated synthetic division."""
    out = list(coeffs)
    n = len(out)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            out[j] += c * out[j + 1]
    return out


def taylor_shift(p: Poly, c) -> Poly:
    """p(x + c) as a Poly."""
    return Poly(_shift(list(p.coeffs), Fraction(c)))


def cauchy_root_bound(p: Poly) -> Fraction:
    """1 + max |a_i| / |lead|: strictly exceeds the modulus of every root."""
    if p.degree < 1:
        raise ValueError("root bound needs a nonconstant polynomial")
    lead = abs(p.leading)
    rest = [abs(c) for c in p.coeffs[:-1]]
    return Fraction(1) + (max(rest) / lead if rest else Fraction(0))


def _divmod_exact(a: list[Fraction], b: list[Fraction]):
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    while r and len(r) >= len(b):
        f = r[-1] / b[-1]
        off = len(r) - len(b)
        q[off] = f
        for i in range(len(b)):
            r[off + i] -= f * b[i]
        while r and r[-1] == 0:
            r.pop()
    return q, r


def _gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    while b:
        _, r = _divmod_exact(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def squarefree_part(p: Poly) -> Poly:
    """p with repeated factors collapsed: p / gcd(p, p')."""
    if p.degree < 1:
        return p
    coeffs = list(p.coeffs)
    deriv = [i * c for i, c in enumerate(coeffs)][1:]
    g = _gcd(coeffs, deriv)
    if len(g) == 1:
        return p
    q, r = _divmod_exact(coeffs, g)
    if r:
        raise ArithmeticError("gcd does not divide its polynomial")
    return Poly(q)


def variations_in_interval(p: Poly, lo, hi) -> int:
    """Descartes bound on the number of roots of p in the open interval (lo, hi).

    Zero certifies no roots; one certifies exactly one (the bound has the same
    parity as the root count).
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if hi <= lo:
        raise ValueError(f"need lo < hi; got [{lo}, {hi}]")
    shifted = _shift(list(p.coeffs), lo)
    width = hi - lo
    scaled = [c * width**i for i, c in enumerate(shifted)]
    moebius = _shift(list(reversed(scaled)), Fraction(1))
    return sign_variations(moebius)


def no_roots_above(p: Poly, c, max_depth: int = 64) -> bool:
    """Certify that p has no real roots in (c, oo).

    Tries the direct shift certificate first; if variations remain (complex
    roots can keep them positive), subdivides (c, cauchy bound) until every
    piece certifies empty.  Returns False if a piece cannot be certified
    within max_depth halvings (in particular when a root really is there).
    """
    c = Fraction(c)
    if sign_variations(_shift(list(p.coeffs), c)) == 0:
        return True
    bound = cauchy_root_bound(p)
    if bound <= c:
        return True

    def empty(lo: Fraction, hi: Fraction, depth: int) -> bool:
        if variations_in_interval(p, lo, hi) == 0:
            return True
        if depth >= max_depth:
            return False
        mid = (lo + hi) / 2
        if p(mid) == 0:
            return False
        return empty(lo, mid, depth + 1) and empty(mid, hi, depth + 1)

    return p(bound) != 0 and empty(c, bound, 0)


class RootBracket(NamedTuple):
    """[lo, hi] containing the largest non-negative real root; has_root is
    False when the polynomial has no non-negative root at all (bracket pinned
    at 0)."""

    lo: Fraction
    hi: Fraction
    has_root: bool


def isolate_max_root(p: Poly, width) -> RootBracket:
    """Bracket the largest non-negative real root of p within the given width.

    Certificates: the returned hi has no roots of p above it (Descartes, via
    the scan invariant), and either lo == hi is an exact root or the open
    interval (lo, hi) carries Moebius variation count 1 (exactly one root).
    Requires a nonconstant p; the sign of the leading coefficient is
    normalized away.
    """
    width = Fraction(width)
    if width <= 0:
        raise ValueError(f"width must be positive, got {width}")
    if p.degree < 1:
        raise ValueError("cannot isolate roots of a constant polynomial")
    coeffs = list(p.coeffs)
    if coeffs[-1] < 0:
        coeffs = [-c for c in coeffs]
    zero_mult = 0
    while coeffs[0] == 0:
        coeffs.pop(0)
        zero_mult += 1
    if len(coeffs) == 1:
        return RootBracket(Fraction(0), Fraction(0), zero_mult > 0)

    reduced = squarefree_part(Poly(coeffs))
    bound = cauchy_root_bound(reduced)
    if sign_variations(_shift(list(reduced.coeffs), bound)) != 0:
        raise AssertionError("Cauchy bound failed its variation certificate")

    def scan(lo: Fraction, hi: Fraction):
        # Largest root of `reduced` in the open interval (lo, hi); the caller
        # guarantees there are no roots in [hi, oo).
        v = variations_in_interval(reduced, lo, hi)
        if v == 0:
            return None
        if v == 1 and hi - lo <= width:
            return (lo, hi)
        mid = (lo + hi) / 2
        if reduced(mid) == 0:
            found = scan(mid, hi)
            return found if found is not None else (mid, mid)
        found = scan(mid, hi)
        if found is not None:
            return found
        return scan(lo, mid)

    bracket = scan(Fraction(0), bound)
    if bracket is None:
        return RootBracket(Fraction(0), Fraction(0), zero_mult > 0)
    return RootBracket(bracket[0], bracket[1], True)

"""Dense exact-rational polynomials and the overpartition polynomial family.

pbar_poly(n) is the degree-n polynomial with constant term 0 (for n >= 1),
defined by pbar_poly(0) = 1 and

    n * P_n(x) = x * sum_{k=1..n} sigma_bar(k) * P_{n-k}(x),

so that P_n(k) counts k-colored overpartitions of n and P_n(1) = pbar(n).
All coefficients of P_n are strictly positive for n >= 1 and the leading
coefficient is 2^n / n!.

The module also provides:

  * pbar_derivative(n) = sum_{k=1..n} sigma_bar(k)/k * P_{n-k}, which must
    equal the formal coefficient-wise derivative of pbar_poly(n);
  * product_gap_poly(a, b) = P_a * P_b - P_{a+b}, whose largest non-negative
    real root marks where the product inequality P_a(x) P_b(x) > P_{a+b}(x)
    starts to hold;
  * series_expand(N): the truncated formal exponential of
    x * sum_{n<=N} sigma_bar(n) q^n / n, whose q^n coefficient must reproduce
    pbar_poly(n) exactly;
  * colored_count_via_product(n, k): the coefficient of q^n in the integer
    q-series prod_m ((1+q^m)/(1-q^m))^k, an expansion route independent of
    the recursion.

Coefficients are fractions.Fraction, normalized by construction; polynomial
equality is structural.  Poly values are immutable; the pbar_poly memo grows
sequentially under a lock and is safe to read concurrently once warm.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .divisors import sigma_bar

__all__ = [
    "Poly",
    "formal_derivative",
    "eval_rat",
    "pbar_poly",
    "pbar_derivative",
    "product_gap_poly",
    "SeriesTable",
    "series_exp",
    "series_expand",
    "colored_count_via_product",
]


class Poly:
    """Immutable dense univariate polynomial over Fraction.

    Coefficients are stored ascending by degree with no trailing zeros; the
    zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Poly):
            if not self.coeffs or not other.coeffs:
                return Poly()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a:
                    for j, b in enumerate(other.coeffs):
                        out[i + j] += a * b
            return Poly(out)
        c = Fraction(other)
        return Poly([a * c for a in self.coeffs])

    __rmul__ = __mul__

    def __call__(self, x) -> Fraction:
        """Exact Horner evaluation at a rational point."""
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = str(abs(c))
            if i == 0:
                body = mag
            else:
                xs = "x" if i == 1 else f"x^{i}"
                body = xs if abs(c) == 1 else f"{mag}*{xs}"
            terms.append(("-" if c < 0 else "+", body))
        sign, first = terms[0]
        text = ("-" if sign == "-" else "") + first
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def formal_derivative(p: Poly) -> Poly:
    """Coefficient-wise derivative."""
    return p.derivative()


def eval_rat(p: Poly, x) -> Fraction:
    """Exact value p(x) at a rational point."""
    return p(x)


_X = Poly([0, 1])

_poly_memo: list[Poly] = [Poly([1])]
_poly_lock = threading.Lock()


def _pbar_poly_prefix(n: int) -> list[Poly]:
    if len(_poly_memo) <= n:
        with _poly_lock:
            while len(_poly_memo) <= n:
                m = len(_poly_memo)
                acc = Poly()
                for k in range(1, m + 1):
                    acc = acc + sigma_bar(k) * _poly_memo[m - k]
                _poly_memo.append(_X * acc * Fraction(1, m))
    return _poly_memo[: n + 1]


def pbar_poly(n: int) -> Poly:
    """The overpartition polynomial P_n as an exact rational polynomial."""
    if n < 0:
        raise ValueError(f"pbar_poly undefined for n={n}; need n >= 0")
    return _pbar_poly_prefix(n)[n]


def pbar_derivative(n: int) -> Poly:
    """P_n'(x) via the identity sum_{k=1..n} sigma_bar(k)/k * P_{n-k}(x).

    Computed from the identity, not by differentiating pbar_poly(n); the two
    routes must agree exactly and the tests check this coefficient by
    coefficient.
    """
    if n < 1:
        raise ValueError(f"pbar_derivative undefined for n={n}; need n >= 1")
    prefix = _pbar_poly_prefix(n - 1)
    acc = Poly()
    for k in range(1, n + 1):
        acc = acc + Fraction(sigma_bar(k), k) * prefix[n - k]
    return acc


def product_gap_poly(a: int, b: int) -> Poly:
    """P_a * P_b - P_{a+b}.

    Constant term is 0 and the derivative at 0 is -sigma_bar(a+b)/(a+b).
    """
    if a < 1 or b < 1:
        raise ValueError(f"product_gap_poly needs a, b >= 1; got a={a}, b={b}")
    prefix = _pbar_poly_prefix(a + b)
    return prefix[a] * prefix[b] - prefix[a + b]


@dataclass(frozen=True)
class SeriesTable:
    """Truncated q-series whose coefficients are polynomials in x.

    coeff_polys[n] is the coefficient of q^n, for 0 <= n <= order.
    """

    order: int
    coeff_polys: tuple[Poly, ...]

    def __post_init__(self):
        if len(self.coeff_polys) != self.order + 1:
            raise ValueError("coeff_polys must have length order + 1")
        if self.coeff_polys[0] != Poly([1]):
            raise ValueError("constant coefficient of the series must be 1")


def series_exp(linear_coeffs, order: int) -> list[Poly]:
    """exp of a q-series with zero constant term, truncated at q^order.

    linear_coeffs[k] (1-indexed via linear_coeffs[k-1]) is the Poly-in-x
    coefficient of q^k of the exponent B.  Uses the standard recurrence for
    E = exp(B):  n * e_n = sum_{k=1..n} k * b_k * e_{n-k},  e_0 = 1.
    """
    es = [Poly([1])]
    for n in range(1, order + 1):
        acc = Poly()
        for k in range(1, n + 1):
            bk = linear_coeffs[k - 1]
            if bk:
                acc = acc + (k * bk) * es[n - k]
        es.append(acc * Fraction(1, n))
    return es


def series_expand(order: int) -> SeriesTable:
    """Truncated exp(x * sum_{n<=order} sigma_bar(n) q^n / n).

    The coefficient of q^n must equal pbar_poly(n) exactly for all n <= order;
    the generating-function equivalence tests enforce it.
    """
    if order < 0:
        raise ValueError(f"series_expand needs order >= 0; got {order}")
    exponent = [Poly([0, Fraction(sigma_bar(k), k)]) for k in range(1, order + 1)]
    return SeriesTable(order, tuple(series_exp(exponent, order)))


def colored_count_via_product(n: int, k: int) -> int:
    """Coefficient of q^n in prod_{m=1..n} ((1+q^m)/(1-q^m))^k, all-integer.

    (1+q^m)^k expands by binomial coefficients and 1/(1-q^m)^k by
    stars-and-bars coefficients; every factor is truncated at q^n.  Must equal
    eval_rat(pbar_poly(n), k).
    """
    if n < 0:
        raise ValueError(f"colored_count_via_product needs n >= 0; got {n}")
    if k < 1:
        raise ValueError(f"colored_count_via_product needs k >= 1; got {k}")
    series = [0] * (n + 1)
    series[0] = 1
    for m in range(1, n + 1):
        plus = [0] * (n + 1)
        for j in range(n // m + 1):
            plus[m * j] = comb(k, j)
        inv = [0] * (n + 1)
        for j in range(n // m + 1):
            inv[m * j] = comb(k + j - 1, j)
        series = _mul_trunc(series, plus, n)
        series = _mul_trunc(series, inv, n)
    return series[n]


def _mul_trunc(a: list[int], b: list[int], n: int) -> list[int]:
    out = [0] * (n + 1)
    for i, x in enumerate(a):
        if x:
            for j in range(min(len(b), n - i + 1)):
                if b[j]:
                    out[i + j] += x * b[j]
    return out

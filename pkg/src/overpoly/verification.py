"""The inequality-verification suite.

Exact big-integer and exact-rational checks for the product inequalities and
their grids, the monotonicity chains, descent certificates below 1, the
analytic sandwich with the truncated-series main term, the machine check over
the full triple range, log-concavity, and the certified table of largest
non-negative real roots of the gap polynomials.

Exception sets are data, not code: each claim's declared exceptions live in a
constant next to its checker, and a run only "holds" when the exceptions it
finds are exactly the declared ones, so a regression that accidentally
"fixes" an exception fails loudly.

Transcendental comparisons run in double precision with a relative
inconclusive band of 1e-9: a comparison whose relative slack is inside the
band is flagged rather than counted as pass or fail.  The single exception is
the truncation-remainder check, where the bound sits below double-precision
resolution of the compared quantities for large n (the bound over the count
shrinks like 2^(9/2) e^(-mu/2)/mu, which drops under 2^-52 before n reaches
400); that one comparison is evaluated with mpmath at 50 significant digits
and reported alongside double-precision display values.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath as mp

from .divisors import pbar_exact, pbar_prefix
from .polynomials import pbar_poly, product_gap_poly
from .rootisolation import isolate_max_root, no_roots_above
from .serial import decode, encode

__all__ = [
    "INCONCLUSIVE_BAND",
    "DEFAULT_GRID_XS",
    "TH1_EXCEPTIONS",
    "TH4_EXCEPTIONS",
    "VerifyReport",
    "BoundTriple",
    "RootRecord",
    "check_th1",
    "check_th3_grid",
    "check_th4_grid",
    "check_colored",
    "check_le3",
    "check_logconcave",
    "find_descent_x",
    "check_descent",
    "sandwich",
    "check_ie7",
    "check_ie8",
    "check_ie11",
    "isolate_max_root",
    "roots_table",
    "roots_csv",
    "certify_root_record",
    "CLAIMS",
    "run_claim",
]

INCONCLUSIVE_BAND = 1e-9

DEFAULT_GRID_XS = (Fraction(1), Fraction(3, 2), Fraction(2), Fraction(5, 2), Fraction(3))

TH1_EXCEPTIONS = frozenset({(1, 1), (2, 1)})
# Ordered pairs; the symmetric (1, 2, 1) mirrors (2, 1, 1).
TH4_EXCEPTIONS = frozenset(
    {(1, 1, Fraction(1)), (2, 1, Fraction(1)), (1, 2, Fraction(1))}
)


@dataclass(frozen=True)
class VerifyReport:
    """One claim checked over one range."""

    claim: str
    range_checked: str
    holds: bool
    exceptions: tuple = ()
    counterexample: object = None
    inconclusive: tuple = ()
    stats: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "range_checked": self.range_checked,
            "holds": self.holds,
            "exceptions": encode(self.exceptions),
            "counterexample": encode(self.counterexample),
            "inconclusive": encode(self.inconclusive),
            "stats": encode(self.stats),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "VerifyReport":
        return cls(
            claim=data["claim"],
            range_checked=data["range_checked"],
            holds=data["holds"],
            exceptions=decode(data["exceptions"]),
            counterexample=decode(data["counterexample"]),
            inconclusive=decode(data["inconclusive"]),
            stats=decode(data["stats"]),
        )


def _rel_slack(lhs: float, rhs: float) -> float:
    """Slack of lhs > rhs, relative to the larger magnitude (floor 1)."""
    return (lhs - rhs) / max(abs(lhs), abs(rhs), 1.0)


def check_th1(n_max: int) -> VerifyReport:
    """pbar(a) pbar(b) > pbar(a+b) for a >= b >= 1, a+b <= n_max, exact integers.

    Equality is declared at (1,1) and (2,1) and nowhere else.
    """
    if n_max < 2:
        raise ValueError(f"need n_max >= 2, got {n_max}")
    pb = pbar_prefix(n_max)
    found = []
    counterexample = None
    for total in range(2, n_max + 1):
        for b in range(1, total // 2 + 1):
            a = total - b
            lhs, rhs = pb[a] * pb[b], pb[total]
            if lhs == rhs:
                found.append((a, b))
            elif lhs < rhs:
                counterexample = (a, b)
    expected = {e for e in TH1_EXCEPTIONS if e[0] + e[1] <= n_max}
    holds = counterexample is None and set(found) == expected
    return VerifyReport(
        claim="th1",
        range_checked=f"a >= b >= 1, a+b <= {n_max}",
        holds=holds,
        exceptions=tuple(sorted(found)),
        counterexample=counterexample,
        stats={"pairs": sum(t // 2 for t in range(2, n_max + 1))},
    )


def check_th3_grid(n_max: int, xs=DEFAULT_GRID_XS) -> VerifyReport:
    """P_n(x) < P_{n+1}(x) and 2 <= P_n'(x) < P_{n+1}'(x), exact, on a grid of x >= 1."""
    xs = tuple(Fraction(x) for x in xs)
    if not xs or any(x < 1 for x in xs):
        raise ValueError("grid points must be rationals >= 1")
    polys = [pbar_poly(n) for n in range(n_max + 1)]
    derivs = [p.derivative() for p in polys]
    counterexample = None
    for n in range(1, n_max):
        for x in xs:
            if not polys[n](x) < polys[n + 1](x):
                counterexample = ("value", n, x)
            dn, dn1 = derivs[n](x), derivs[n + 1](x)
            if not (2 <= dn < dn1):
                counterexample = ("derivative", n, x)
    return VerifyReport(
        claim="th3",
        range_checked=f"1 <= n < {n_max}, x in {{{', '.join(map(str, xs))}}}",
        holds=counterexample is None,
        counterexample=counterexample,
    )


def check_th4_grid(a_max: int, xs=DEFAULT_GRID_XS) -> VerifyReport:
    """P_a(x) P_b(x) > P_{a+b}(x), exact, over all ordered pairs with a+b <= a_max.

    Equality is declared at (a, b, x) in {(1,1,1), (2,1,1), (1,2,1)} and
    nowhere else; any reversed inequality is a counterexample.
    """
    xs = tuple(Fraction(x) for x in xs)
    if not xs or any(x < 1 for x in xs):
        raise ValueError("grid points must be rationals >= 1")
    polys = [pbar_poly(n) for n in range(a_max + 1)]
    values = {x: [p(x) for p in polys] for x in xs}
    found = []
    counterexample = None
    for total in range(2, a_max + 1):
        for a in range(1, total):
            b = total - a
            for x in xs:
                lhs = values[x][a] * values[x][b]
                rhs = values[x][total]
                if lhs == rhs:
                    found.append((a, b, x))
                elif lhs < rhs:
                    counterexample = (a, b, x)
    expected = {e for e in TH4_EXCEPTIONS if e[0] + e[1] <= a_max and e[2] in xs}
    holds = counterexample is None and set(found) == expected
    return VerifyReport(
        claim="th4",
        range_checked=f"a, b >= 1, a+b <= {a_max}, x in {{{', '.join(map(str, xs))}}}",
        holds=holds,
        exceptions=tuple(sorted(found)),
        counterexample=counterexample,
    )


def check_colored(a_max: int, k_set=(2, 3)) -> VerifyReport:
    """P_a(k) P_b(k) > P_{a+b}(k) strictly, exact, for every k >= 2 in k_set."""
    k_set = tuple(k_set)
    if any(k < 2 for k in k_set):
        raise ValueError("colored check needs k >= 2")
    polys = [pbar_poly(n) for n in range(a_max + 1)]
    counterexample = None
    for k in k_set:
        vals = [p(Fraction(k)) for p in polys]
        for total in range(2, a_max + 1):
            for b in range(1, total // 2 + 1):
                a = total - b
                if not vals[a] * vals[b] > vals[total]:
                    counterexample = (a, b, k)
    return VerifyReport(
        claim="th5",
        range_checked=f"a >= b >= 1, a+b <= {a_max}, k in {set(k_set)}",
        holds=counterexample is None,
        counterexample=counterexample,
    )


def check_le3(n_max: int) -> VerifyReport:
    """pbar(n) > 1 + ln(2n), double precision, with minimum-slack reporting."""
    if n_max < 1:
        raise ValueError(f"need n_max >= 1, got {n_max}")
    pb = pbar_prefix(n_max)
    counterexample = None
    inconclusive = []
    min_slack, argmin = math.inf, None
    for n in range(1, n_max + 1):
        slack = _rel_slack(float(pb[n]), 1 + math.log(2 * n))
        if abs(slack) < INCONCLUSIVE_BAND:
            inconclusive.append(n)
        elif slack < 0:
            counterexample = n
        if slack < min_slack:
            min_slack, argmin = slack, n
    return VerifyReport(
        claim="le3",
        range_checked=f"1 <= n <= {n_max}",
        holds=counterexample is None and not inconclusive,
        counterexample=counterexample,
        inconclusive=tuple(inconclusive),
        stats={"min_rel_slack": min_slack, "argmin": argmin},
    )


def check_logconcave(n_max: int) -> VerifyReport:
    """pbar(n)^2 >= pbar(n-1) pbar(n+1) for 2 <= n <= n_max, exact integers."""
    if n_max < 2:
        raise ValueError(f"need n_max >= 2, got {n_max}")
    pb = pbar_prefix(n_max + 1)
    counterexample = None
    equalities = []
    for n in range(2, n_max + 1):
        lhs, rhs = pb[n] ** 2, pb[n - 1] * pb[n + 1]
        if lhs == rhs:
            equalities.append(n)
        elif lhs < rhs:
            counterexample = n
    return VerifyReport(
        claim="logconcave",
        range_checked=f"2 <= n <= {n_max}",
        holds=counterexample is None,
        counterexample=counterexample,
        stats={"equalities": tuple(equalities)},
    )


def find_descent_x(n: int) -> Fraction:
    """A rational x in (0, 1) with the exact certificate P_{n+1}(x) < P_n(x).

    Defined for n+1 = 2^s with s > 1, where the difference polynomial has
    negative derivative at 0; searches x = 1/2, 1/4, ... down to 2^-40.
    """
    m = n + 1
    if n < 3 or m & (m - 1) != 0:
        raise ValueError(f"descent point needs n+1 = 2^s with s > 1; got n={n}")
    delta = pbar_poly(n + 1) - pbar_poly(n)
    x = Fraction(1, 2)
    while x >= Fraction(1, 2**40):
        if delta(x) < 0:
            return x
        x /= 2
    raise RuntimeError(f"descent search exhausted below 2**-40 for n={n}")


def check_descent(ns=(3, 7, 15, 31)) -> VerifyReport:
    """Descent certificates for each n in ns, re-verified exactly."""
    points = {}
    counterexample = None
    for n in ns:
        x = find_descent_x(n)
        certified = 0 < x < 1 and pbar_poly(n + 1)(x) < pbar_poly(n)(x)
        if not certified:
            counterexample = n
        points[str(n)] = x
    return VerifyReport(
        claim="descent",
        range_checked=f"n in {tuple(ns)}",
        holds=counterexample is None,
        counterexample=counterexample,
        stats={"points": points},
    )


@dataclass(frozen=True)
class BoundTriple:
    """Sandwich bounds and truncated-series data for one n."""

    n: int
    lower: float
    upper: float
    exact: int
    mu: float
    main_term: float
    remainder_bound: float
    remainder_ok: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "mu": self.mu,
            "main_term": self.main_term,
            "remainder_bound": self.remainder_bound,
            "remainder_ok": self.remainder_ok,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "BoundTriple":
        return cls(**data)


def sandwich(n: int) -> BoundTriple:
    """e^mu (1 - 1/sqrt(n)) / 8n  <  pbar(n)  <  e^mu (1 + 1/n) / 8n, mu = pi sqrt(n).

    Also evaluates the truncated-series main term
    M(n) = (pi sqrt(n) cosh(mu) - sinh(mu)) / (4 pi n^{3/2}) and the remainder
    bound 2^{5/2} sinh(mu/2) / (n mu); remainder_ok is their comparison,
    computed at 50 significant digits (see the module note on precision).
    """
    if n < 1:
        raise ValueError(f"sandwich needs n >= 1, got {n}")
    exact = pbar_exact(n)
    mu = math.pi * math.sqrt(n)
    scale = math.exp(mu) / (8 * n)
    lower = scale * (1 - 1 / math.sqrt(n))
    upper = scale * (1 + 1 / n)
    with mp.workdps(50):
        mu_hp = mp.pi * mp.sqrt(n)
        main = (mp.pi * mp.sqrt(n) * mp.cosh(mu_hp) - mp.sinh(mu_hp)) / (
            4 * mp.pi * mp.power(n, mp.mpf(3) / 2)
        )
        bound = mp.power(2, mp.mpf(5) / 2) * mp.sinh(mu_hp / 2) / (n * mu_hp)
        remainder_ok = abs(exact - main) <= bound
        main_f, bound_f = float(main), float(bound)
    return BoundTriple(
        n=n,
        lower=lower,
        upper=upper,
        exact=exact,
        mu=mu,
        main_term=main_f,
        remainder_bound=bound_f,
        remainder_ok=remainder_ok,
    )


def check_ie7(n_max: int, n_min: int = 1) -> VerifyReport:
    """Sandwich strict for n_min..n_max; remainder bound holds for n >= 2."""
    pbar_prefix(n_max)
    counterexample = None
    inconclusive = []
    min_lower_slack = min_upper_slack = math.inf
    for n in range(n_min, n_max + 1):
        t = sandwich(n)
        lo_slack = _rel_slack(float(t.exact), t.lower)
        up_slack = _rel_slack(t.upper, float(t.exact))
        for label, slack in (("lower", lo_slack), ("upper", up_slack)):
            if abs(slack) < INCONCLUSIVE_BAND:
                inconclusive.append((label, n))
            elif slack < 0:
                counterexample = (label, n)
        if n >= 2 and not t.remainder_ok:
            counterexample = ("remainder", n)
        min_lower_slack = min(min_lower_slack, lo_slack)
        min_upper_slack = min(min_upper_slack, up_slack)
    return VerifyReport(
        claim="ie7",
        range_checked=f"{n_min} <= n <= {n_max} (remainder from n=2)",
        holds=counterexample is None and not inconclusive,
        counterexample=counterexample,
        inconclusive=tuple(inconclusive),
        stats={
            "min_lower_rel_slack": min_lower_slack,
            "min_upper_rel_slack": min_upper_slack,
        },
    )


def check_ie8(a_max: int) -> VerifyReport:
    """pbar(a+b-k) > (1 + ln(2a)) pbar(b-k) for all 1 <= k < b <= a <= a_max.

    Exact pbar values, double-precision logarithm, minimum slack reported.
    The full machine-check range is a_max = 93.
    """
    if a_max < 2:
        raise ValueError(f"need a_max >= 2, got {a_max}")
    pb = pbar_prefix(2 * a_max - 1)
    counterexample = None
    inconclusive = []
    min_slack, argmin = math.inf, None
    triples = 0
    for a in range(1, a_max + 1):
        factor = 1 + math.log(2 * a)
        for b in range(2, a + 1):
            for k in range(1, b):
                triples += 1
                slack = _rel_slack(float(pb[a + b - k]), factor * float(pb[b - k]))
                if abs(slack) < INCONCLUSIVE_BAND:
                    inconclusive.append((a, b, k))
                elif slack < 0:
                    counterexample = (a, b, k)
                if slack < min_slack:
                    min_slack, argmin = slack, (a, b, k)
    return VerifyReport(
        claim="ie8",
        range_checked=f"1 <= k < b <= a <= {a_max}",
        holds=counterexample is None and not inconclusive,
        counterexample=counterexample,
        inconclusive=tuple(inconclusive),
        stats={"triples": triples, "min_rel_slack": min_slack, "argmin": argmin},
    )


def _ie11_sides(a: int) -> tuple[float, float]:
    lhs = math.exp(math.pi * math.sqrt(a) / 3)
    rhs = (1 + math.log(2 * a)) * (1 + a) * 2 / (1 - 1 / math.sqrt(a))
    return lhs, rhs


def check_ie11(a_lo: int, a_hi: int, threshold: int = 94) -> VerifyReport:
    """e^(pi sqrt(a)/3) > (1 + ln(2a)) (1+a) * 2 / (1 - 1/sqrt(a)).

    Reports the smallest a in [a_lo, a_hi] where the inequality holds and
    confirms it holds for every a >= threshold in range.
    """
    if a_lo < 2:
        raise ValueError(f"need a_lo >= 2, got {a_lo}")
    first_passing = None
    counterexample = None
    inconclusive = []
    for a in range(a_lo, a_hi + 1):
        lhs, rhs = _ie11_sides(a)
        slack = _rel_slack(lhs, rhs)
        if abs(slack) < INCONCLUSIVE_BAND:
            inconclusive.append(a)
            continue
        if slack > 0:
            if first_passing is None:
                first_passing = a
        elif a >= threshold:
            counterexample = a
    return VerifyReport(
        claim="ie11",
        range_checked=f"{a_lo} <= a <= {a_hi}, claim from a >= {threshold}",
        holds=counterexample is None and not inconclusive,
        counterexample=counterexample,
        inconclusive=tuple(inconclusive),
        stats={"first_passing": first_passing, "threshold": threshold},
    )


@dataclass(frozen=True)
class RootRecord:
    """Certified bracket for the largest non-negative real root of one gap polynomial."""

    a: int
    b: int
    bracket_lo: Fraction
    bracket_hi: Fraction
    rounded: str

    def to_dict(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "bracket_lo": encode(self.bracket_lo),
            "bracket_hi": encode(self.bracket_hi),
            "rounded": self.rounded,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "RootRecord":
        return cls(
            a=data["a"],
            b=data["b"],
            bracket_lo=decode(data["bracket_lo"]),
            bracket_hi=decode(data["bracket_hi"]),
            rounded=data["rounded"],
        )


def round_half_away(q: Fraction, places: int = 2) -> str:
    """Decimal string with `places` digits, ties away from zero."""
    sign = -1 if q < 0 else 1
    scaled = abs(q) * 10**places
    units = scaled.numerator // scaled.denominator
    if scaled - units >= Fraction(1, 2):
        units += 1
    units *= sign
    head, tail = divmod(abs(units), 10**places)
    prefix = "-" if units < 0 else ""
    return f"{prefix}{head}.{tail:0{places}d}"


def _roots_cell(args) -> RootRecord:
    a, b, width = args
    bracket = isolate_max_root(product_gap_poly(a, b), width)
    mid = (bracket.lo + bracket.hi) / 2
    return RootRecord(a, b, bracket.lo, bracket.hi, round_half_away(mid))


def roots_table(
    a_max: int,
    b_max: int,
    width=Fraction(1, 10**4),
    workers: int | None = None,
) -> list[RootRecord]:
    """Certified max-root brackets for every gap polynomial cell, row-major.

    Cells are independent; with workers > 1 they are computed in a process
    pool after the polynomial memo is warmed sequentially in the parent.
    """
    width = Fraction(width)
    if workers is None:
        workers = int(os.environ.get("OVERPOLY_WORKERS", "1"))
    pbar_poly(a_max + b_max)  # warm the shared memo before any fork
    cells = [(a, b, width) for a in range(1, a_max + 1) for b in range(1, b_max + 1)]
    if workers > 1:
        chunk = max(1, len(cells) // (4 * workers))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_roots_cell, cells, chunksize=chunk))
    return [_roots_cell(cell) for cell in cells]


def roots_csv(records) -> str:
    """The root table as CSV with header a,b,root."""
    lines = ["a,b,root"]
    lines.extend(f"{r.a},{r.b},{r.rounded}" for r in records)
    return "\n".join(lines) + "\n"


def certify_root_record(record: RootRecord, width=Fraction(1, 10**4)) -> bool:
    """Re-verify a RootRecord against its polynomial with exact arithmetic.

    Checks the bracket width, the endpoint signs (value <= 0 at lo or an exact
    root inside, > 0 at hi unless hi is itself the root), and that no root
    lies above bracket_hi.
    """
    poly = product_gap_poly(record.a, record.b)
    lo, hi = record.bracket_lo, record.bracket_hi
    if not (0 <= lo <= hi and hi - lo <= Fraction(width)):
        return False
    at_lo, at_hi = poly(lo), poly(hi)
    if not (at_lo <= 0 or lo == 0):
        return False
    if not (at_hi > 0 or at_hi == 0):
        return False
    return no_roots_above(poly, hi)


CLAIMS = ("th1", "th3", "th4", "th5", "le3", "ie7", "ie8", "ie11", "logconcave", "descent")


def run_claim(
    claim: str,
    n_max: int | None = None,
    a_max: int | None = None,
    a_lo: int | None = None,
    a_hi: int | None = None,
    xs=None,
    k_set=None,
    ns=None,
) -> VerifyReport:
    """Dispatch a named claim with its default desk-scale range."""
    xs = DEFAULT_GRID_XS if xs is None else xs
    k_set = (2, 3) if k_set is None else k_set
    if claim == "th1":
        return check_th1(n_max or 120)
    if claim == "th3":
        return check_th3_grid(n_max or 40, xs)
    if claim == "th4":
        return check_th4_grid(a_max or 40, xs)
    if claim == "th5":
        return check_colored(a_max or 40, k_set)
    if claim == "le3":
        return check_le3(n_max or 500)
    if claim == "ie7":
        return check_ie7(n_max or 500)
    if claim == "ie8":
        return check_ie8(a_max or 93)
    if claim == "ie11":
        return check_ie11(a_lo or 2, a_hi or 500)
    if claim == "logconcave":
        return check_logconcave(n_max or 500)
    if claim == "descent":
        return check_descent(ns or (3, 7, 15, 31))
    raise ValueError(f"unknown claim {claim!r}")

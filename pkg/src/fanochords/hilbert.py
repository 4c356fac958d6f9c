"""Hilbert series and Hilbert polynomials of homogeneous ideals.

The series of S/I equals the series of S/LT(I), and the numerator of a
monomial ideal is found by the pivot recursion

    N(I) = N(I + (x)) + t * N(I : x),

pivoting on the variable that occurs in the most minimal generators.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .groebner import DEFAULT_TIMEOUT, Ideal
from .algebra.monomial import GREVLEX


class NotHomogeneous(ValueError):
    pass


class NotACurve(ValueError):
    pass


def _minimalize(gens: list[tuple]) -> list[tuple]:
    gens = sorted(set(gens), key=sum)
    out: list[tuple] = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g)
    return out


def _poly_add(a: list[int], b: list[int]) -> list[int]:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def monomial_numerator(gens: list[tuple]) -> list[int]:
    """Numerator N(t) of the series N(t)/(1-t)^n of S/(gens)."""
    gens = _minimalize(gens)
    return _numerator(gens)


def _numerator(gens: list[tuple]) -> list[int]:
    if not gens:
        return [1]
    if any(sum(g) == 0 for g in gens):
        return [0]
    counts = Counter(j for g in gens for j, e in enumerate(g) if e)
    pivot, freq = counts.most_common(1)[0]
    if freq == 1:
        # pairwise coprime generators
        out = [1]
        for g in gens:
            d = sum(g)
            out = _poly_mul(out, [1] + [0] * (d - 1) + [-1])
        return out
    n = len(gens[0])
    x = tuple(1 if j == pivot else 0 for j in range(n))
    plus = _minimalize([g for g in gens if g[pivot] == 0] + [x])
    colon = _minimalize([tuple(e - 1 if j == pivot and e else e for j, e in enumerate(g))
                         for g in gens])
    return _poly_add(_numerator(plus), [0] + _numerator(colon))


@dataclass(frozen=True)
class HilbertSeries:
    """The series numerator(t) / (1 - t)^nvars."""

    numerator: tuple[int, ...]
    nvars: int

    def reduced(self) -> tuple[list[int], int]:
        """Cancel (1 - t) factors: returns (N̄, d) with N̄(1) != 0."""
        num = list(self.numerator)
        d = self.nvars
        while num and d > 0 and sum(num) == 0:
            # synthetic division by (1 - t): q_i = sum_{j <= i} num_j
            q, acc = [], 0
            for c in num[:-1]:
                acc += c
                q.append(acc)
            num = q
            d -= 1
        while len(num) > 1 and num[-1] == 0:
            num.pop()
        return num, d

    def coefficients(self, upto: int) -> list[int]:
        """Expanded series coefficients h(0), ..., h(upto)."""
        num, d = self.reduced()
        out = []
        for s in range(upto + 1):
            out.append(sum(c * comb(s - k + d - 1, d - 1) for k, c in enumerate(num)
                           if s >= k) if d > 0 else (num[s] if s < len(num) else 0))
        return out


@dataclass(frozen=True)
class HilbertData:
    projective_dimension: int
    degree: int
    hilbert_polynomial: tuple[Fraction, ...]  # coefficients, lowest degree first

    def evaluate(self, t) -> Fraction:
        return sum((c * Fraction(t) ** i for i, c in enumerate(self.hilbert_polynomial)), Fraction(0))

    def polynomial_text(self, var: str = "t") -> str:
        terms = []
        for i in reversed(range(len(self.hilbert_polynomial))):
            c = self.hilbert_polynomial[i]
            if c == 0:
                continue
            mag = abs(c)
            coef = "" if (mag == 1 and i > 0) else str(mag)
            mon = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            body = coef + ("*" if coef and mon and "/" in coef else "") + mon
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        text = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for s, b in terms[1:]:
            text += f" {s} {b}"
        return text


def hilbert_series(I: Ideal, timeout: float | None = DEFAULT_TIMEOUT) -> HilbertSeries:
    if not I.is_homogeneous():
        raise NotHomogeneous("Hilbert series needs a homogeneous ideal")
    gb = I.groebner(GREVLEX, timeout=timeout)
    n = I.ring.nvars
    if not gb.elements:
        return HilbertSeries((1,), n)
    return series_from_leading_terms(gb.leading_exponents(), n)


def series_from_leading_terms(lead: list[tuple], nvars: int) -> HilbertSeries:
    num = monomial_numerator([tuple(e) for e in lead])
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return HilbertSeries(tuple(num), nvars)


def _poly_from_series(num: list[int], d: int) -> tuple[Fraction, ...]:
    """Hilbert polynomial sum_k num_k * C(t - k + d - 1, d - 1), by binomial expansion."""
    if d == 0:
        return ()
    total = [Fraction(0)] * d
    denom = factorial(d - 1)
    for k, c in enumerate(num):
        if not c:
            continue
        # prod_{i=1}^{d-1} (t - k + i)
        poly = [Fraction(1)]
        for i in range(1, d):
            shift = Fraction(i - k)
            poly = [a + b for a, b in zip([Fraction(0)] + poly, [shift * x for x in poly] + [Fraction(0)])]
        for i, a in enumerate(poly):
            total[i] += c * a / denom
    while total and total[-1] == 0:
        total.pop()
    return tuple(total)


def data_from_series(hs: HilbertSeries) -> HilbertData:
    num, d = hs.reduced()
    return HilbertData(d - 1, sum(num), _poly_from_series(num, d))


def dimension_degree(I: Ideal, timeout: float | None = DEFAULT_TIMEOUT) -> HilbertData:
    return data_from_series(hilbert_series(I, timeout=timeout))


def arithmetic_genus(I: Ideal, timeout: float | None = DEFAULT_TIMEOUT) -> int:
    """p_a = 1 - P(0) for a one-dimensional projective scheme."""
    hd = dimension_degree(I, timeout=timeout)
    if hd.projective_dimension != 1:
        raise NotACurve(f"projective dimension is {hd.projective_dimension}, not 1")
    const = hd.hilbert_polynomial[0] if hd.hilbert_polynomial else Fraction(0)
    g = 1 - const
    if g.denominator != 1:
        raise ArithmeticError("non-integral arithmetic genus")
    return int(g)

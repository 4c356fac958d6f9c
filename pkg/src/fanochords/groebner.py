"""Buchberger's algorithm and the ideal operations built on it.

Reduced Gröbner bases are computed with the normal selection strategy
(pairs ordered by total degree of the lcm, ties by the order) and the
Gebauer-Möller installation of the product and chain criteria.  All
operations work over F_p and over Q; the prime-field path has a
specialised reduction loop.
"""
from __future__ import annotations

import contextlib
import contextvars
import heapq
import math
import random
import time
from fractions import Fraction
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from .algebra.field import Field
from .algebra.linalg import inverse, matmul, rref
from .algebra.monomial import GREVLEX, OrderKind, elim
from .algebra.polynomial import Polynomial, PolynomialRing, RingMismatch
from .algebra import univariate

DEFAULT_TIMEOUT = 600.0


class GroebnerTimeout(RuntimeError):
    """Budget exhausted; ``progress`` describes how far the run got."""

    def __init__(self, message: str, progress: dict):
        super().__init__(message)
        self.progress = progress


class NotZeroDimensional(ValueError):
    pass


_deadline: contextvars.ContextVar[float | None] = contextvars.ContextVar("gb_deadline", default=None)


@contextlib.contextmanager
def time_budget(seconds: float | None):
    """Cap every Gröbner run inside the block by a shared wall-clock deadline."""
    if seconds is None:
        yield
        return
    outer = _deadline.get()
    mine = time.monotonic() + seconds
    token = _deadline.set(mine if outer is None else min(outer, mine))
    try:
        yield
    finally:
        _deadline.reset(token)


def _primitive(terms: dict) -> tuple[int, dict]:
    """Primitive integer multiple of a rational polynomial with positive leading coefficient."""
    den = 1
    for c in terms.values():
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = {k: int(c * den) for k, c in terms.items()}
    g = math.gcd(*ints.values())
    if ints[max(ints)] < 0:
        g = -g
    ints = {k: v // g for k, v in ints.items()}
    return ints[max(ints)], ints


class _Reducers:
    """Monic reducer polynomials with a cached divisor lookup.

    Over Q each reducer also keeps a primitive integer copy, and reduction
    runs fraction-free on integers with a single rational scale.
    """

    def __init__(self, ring: PolynomialRing):
        self.ring = ring
        self.mo = ring.mo
        self.F = ring.field
        self.lms: list[int] = []
        self.masks: list[int] = []
        self.tails: list[list[tuple[int, object]]] = []
        self.polys: list[dict] = []
        self.ileads: list[int] = []
        self.itails: list[list[tuple[int, int]]] = []
        self._cache: dict[int, int] = {}

    def add(self, terms: dict) -> int:
        lm = max(terms)
        F = self.F
        inv = F.inv(terms[lm])
        if inv != 1:
            terms = {k: F.mul(c, inv) for k, c in terms.items()}
        self.lms.append(lm)
        self.masks.append(self.mo.divmask(lm))
        self.tails.append([(k, c) for k, c in terms.items() if k != lm])
        self.polys.append(terms)
        if not F.is_prime_field:
            lead, ints = _primitive(terms)
            self.ileads.append(lead)
            self.itails.append([(k, c) for k, c in ints.items() if k != lm])
        return len(self.lms) - 1

    def divisor(self, m: int, allowed=None) -> int:
        """Index of a reducer whose leading monomial divides m, or -1."""
        if allowed is not None:
            return self._scan(m, allowed)
        hit = self._cache.get(m)
        n = len(self.lms)
        if hit is not None:
            if hit >= 0:
                return hit
            start = -hit - 1
            if start == n:
                return -1
        else:
            start = 0
        mm = self.mo.divmask(m) | self.mo.guard
        g = self.mo.guard
        masks = self.masks
        for j in range(start, n):
            if (mm - masks[j]) & g == g:
                self._cache[m] = j
                return j
        self._cache[m] = -n - 1
        return -1

    def _scan(self, m, allowed):
        mm = self.mo.divmask(m) | self.mo.guard
        g = self.mo.guard
        for j in allowed:
            if (mm - self.masks[j]) & g == g:
                return j
        return -1

    def reduce(self, f: dict, full: bool = True, allowed=None) -> dict:
        """Reduce the dict ``f`` in place; return the remainder."""
        F = self.F
        rem = {}
        divisor = self.divisor
        lms, tails = self.lms, self.tails
        if F.is_prime_field:
            p = F.p
            while f:
                m = max(f)
                j = divisor(m, allowed)
                if j < 0:
                    if not full:
                        return f
                    rem[m] = f.pop(m)
                    continue
                c = f.pop(m)
                shift = m - lms[j]
                get = f.get
                for k, v in tails[j]:
                    nk = k + shift
                    val = (get(nk, 0) - c * v) % p
                    if val:
                        f[nk] = val
                    else:
                        f.pop(nk, None)
        else:
            return self._reduce_rational(f, full, allowed)
        return rem


    def _reduce_rational(self, f: dict, full: bool, allowed) -> dict:
        if not f:
            return {}
        _, ints = _primitive({k: Fraction(v) for k, v in f.items()})
        # ints = scale * f
        scale = Fraction(ints[max(ints)]) / Fraction(f[max(f)])
        f = ints
        rem: dict = {}
        divisor = self.divisor
        lms, itails, ileads = self.lms, self.itails, self.ileads
        steps = 0
        while f:
            m = max(f)
            j = divisor(m, allowed)
            if j < 0:
                if not full:
                    break
                rem[m] = f.pop(m)
                continue
            c = f.pop(m)
            a = ileads[j]
            g = math.gcd(a, c)
            mf, mg = a // g, c // g
            if mf != 1:
                for k in f:
                    f[k] *= mf
                for k in rem:
                    rem[k] *= mf
                scale *= mf
            shift = m - lms[j]
            for k, v in itails[j]:
                nk = k + shift
                val = f.get(nk, 0) - mg * v
                if val:
                    f[nk] = val
                else:
                    f.pop(nk, None)
            steps += 1
            if steps % 8 == 0 and (f or rem):
                d = math.gcd(*f.values(), *rem.values())
                if d > 1:
                    f = {k: v // d for k, v in f.items()}
                    rem = {k: v // d for k, v in rem.items()}
                    scale /= d
        out = rem if full else f
        return {k: Fraction(v) / scale for k, v in out.items()}


@dataclass
class GroebnerStats:
    pairs_total: int = 0
    pairs_reduced: int = 0
    zero_reductions: int = 0
    seconds: float = 0.0


class GroebnerBasis:
    """A reduced, monic Gröbner basis, elements sorted by decreasing leading monomial."""

    def __init__(self, ring: PolynomialRing, elements: list[Polynomial],
                 stats: GroebnerStats | None = None):
        self.ring = ring
        self.order = ring.order
        self.elements = elements
        self.stats = stats or GroebnerStats()
        self._reducers = None

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self):
        return f"GroebnerBasis({self.order}, {self.elements})"

    def _red(self) -> _Reducers:
        if self._reducers is None:
            red = _Reducers(self.ring)
            for g in self.elements:
                red.add(g.terms)
            self._reducers = red
        return self._reducers

    def leading_exponents(self) -> list[tuple]:
        return [g.leading_exponents() for g in self.elements]

    def is_unit(self) -> bool:
        return len(self.elements) == 1 and self.elements[0].is_constant()

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self)

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self).is_zero()

    def is_zero_dimensional(self) -> bool:
        n = self.ring.nvars
        pure = set()
        for e in self.leading_exponents():
            support = [j for j, x in enumerate(e) if x]
            if len(support) == 1:
                pure.add(support[0])
            elif not support:
                return True
        return len(pure) == n

    def standard_monomials(self) -> list[tuple]:
        """Monomials outside the leading-term ideal (zero-dimensional case)."""
        if not self.is_zero_dimensional():
            raise NotZeroDimensional("ideal is not zero-dimensional")
        if self.is_unit():
            return []
        n = self.ring.nvars
        lead = self.leading_exponents()

        def standard(e):
            return not any(all(a <= b for a, b in zip(l, e)) for l in lead)

        seen = {tuple([0] * n)}
        frontier = [tuple([0] * n)]
        while frontier:
            nxt = []
            for e in frontier:
                for j in range(n):
                    f = list(e)
                    f[j] += 1
                    f = tuple(f)
                    if f not in seen and standard(f):
                        seen.add(f)
                        nxt.append(f)
            frontier = nxt
        mo = self.ring.mo
        return sorted(seen, key=mo.encode)

    def s_pairs_reduce_to_zero(self) -> bool:
        """Buchberger's criterion checked on every pair of elements."""
        red = self._red()
        F = self.ring.field
        mo = self.ring.mo
        for i in range(len(self.elements)):
            for j in range(i + 1, len(self.elements)):
                s = _s_poly(red, i, j, mo, F)
                if s and red.reduce(s, full=False):
                    return False
        return True


def _s_poly(red: _Reducers, i: int, j: int, mo, F) -> dict:
    lcm = mo.lcm(red.lms[i], red.lms[j])
    si, sj = lcm - red.lms[i], lcm - red.lms[j]
    out = {k + si: c for k, c in red.tails[i]}
    if F.is_prime_field:
        p = F.p
        for k, c in red.tails[j]:
            nk = k + sj
            v = (out.get(nk, 0) - c) % p
            if v:
                out[nk] = v
            else:
                out.pop(nk, None)
    else:
        ai, aj = red.ileads[i], red.ileads[j]
        g = math.gcd(ai, aj)
        ci, cj = aj // g, ai // g
        out = {k + si: ci * c for k, c in red.itails[i]}
        for k, c in red.itails[j]:
            nk = k + sj
            v = out.get(nk, 0) - cj * c
            if v:
                out[nk] = v
            else:
                out.pop(nk, None)
        out = {k: Fraction(v) for k, v in out.items()}
    return out


def buchberger(gens: Sequence[Polynomial], ring: PolynomialRing | None = None,
               timeout: float | None = DEFAULT_TIMEOUT, max_pairs: int | None = None,
               ) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal generated by ``gens`` in ``ring``.

    ``ring`` fixes the monomial order; generators from a ring with the same
    variables but another order are re-encoded.
    """
    start = time.monotonic()
    deadline = _deadline.get()
    if ring is None:
        if not gens:
            raise ValueError("need a ring for an empty generator list")
        ring = gens[0].ring
    polys = []
    for g in gens:
        if g.ring != ring:
            if g.ring.names != ring.names or g.ring.field != ring.field:
                raise RingMismatch("generator outside the target ring")
            g = g.to_ring(ring)
        if g:
            polys.append(g)
    stats = GroebnerStats()
    if not polys:
        return GroebnerBasis(ring, [], stats)
    mo = ring.mo
    F = ring.field
    red = _Reducers(ring)
    active: list[int] = []
    pairs: list[tuple] = []
    live: set[tuple[int, int]] = set()
    lcm_of: dict[tuple[int, int], int] = {}

    graded = ring.mo.kind.name != "lex"

    def degree(m):
        # normal strategy: smallest lcm; pure lex skips the degree tie-break
        return sum(mo.decode(m)) if graded else 0

    def disjoint(a, b):
        return mo.gcd(a, b) == 0

    def update(h: int):
        lh = red.lms[h]
        cands = {g: mo.lcm(lh, red.lms[g]) for g in active}
        # chain criterion among the new pairs
        keep = []
        items = list(cands.items())
        for idx, (g, l) in enumerate(items):
            if disjoint(lh, red.lms[g]):
                keep.append((g, l))
                continue
            dominated = False
            for g2, l2 in items:
                if g2 != g and mo.divides(l2, l) and (l2 != l or g2 < g):
                    dominated = True
                    break
            if not dominated:
                keep.append((g, l))
        # drop old pairs killed by the new leading monomial
        for pr in list(live):
            a, b = pr
            l = lcm_of[pr]
            if mo.divides(lh, l) and mo.lcm(red.lms[a], lh) != l and mo.lcm(red.lms[b], lh) != l:
                live.discard(pr)
        for g, l in keep:
            if disjoint(lh, red.lms[g]):
                continue
            pr = (g, h)
            live.add(pr)
            lcm_of[pr] = l
            heapq.heappush(pairs, (degree(l), l, g, h))
            stats.pairs_total += 1
        active[:] = [g for g in active if not mo.divides(lh, red.lms[g])]
        active.append(h)

    # seed with generators, smallest leading monomial first
    for g in sorted(polys, key=lambda f: (f.degree(), f.lm)):
        rem = red.reduce(dict(g.terms), full=True) if red.lms else dict(g.terms)
        if rem:
            h = red.add(rem)
            update(h)
            if mo.decode(red.lms[h]) == (0,) * ring.nvars:
                return GroebnerBasis(ring, [ring.one()], stats)

    while pairs:
        _, _, i, j = heapq.heappop(pairs)
        if (i, j) not in live:
            continue
        live.discard((i, j))
        now = time.monotonic()
        if (timeout is not None and now - start > timeout) or (deadline is not None and now > deadline):
            raise GroebnerTimeout(
                "Gröbner run exceeded its time budget",
                {"basis_size": len(active), "pairs_left": len(live),
                 "pairs_reduced": stats.pairs_reduced})
        if max_pairs is not None and stats.pairs_reduced >= max_pairs:
            raise GroebnerTimeout(
                f"Gröbner run exceeded {max_pairs} pairs",
                {"basis_size": len(active), "pairs_left": len(live),
                 "pairs_reduced": stats.pairs_reduced})
        stats.pairs_reduced += 1
        s = _s_poly(red, i, j, mo, F)
        rem = red.reduce(s, full=True) if s else s
        if not rem:
            stats.zero_reductions += 1
            continue
        h = red.add(rem)
        if red.lms[h] == 0:
            stats.seconds = time.monotonic() - start
            return GroebnerBasis(ring, [ring.one()], stats)
        update(h)

    # interreduce the minimal basis
    final = []
    for g in active:
        lm = red.lms[g]
        tail = dict(red.tails[g])
        others = [a for a in active if a != g]
        rem = red.reduce(tail, full=True, allowed=others) if tail else {}
        rem[lm] = F.one()
        final.append(Polynomial(ring, rem))
    final.sort(key=lambda f: f.lm, reverse=True)
    stats.seconds = time.monotonic() - start
    return GroebnerBasis(ring, final, stats)


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    ring = G.ring
    if f.ring != ring:
        if f.ring.names != ring.names or f.ring.field != ring.field:
            raise RingMismatch("polynomial and basis live in different rings")
        f = f.to_ring(ring)
    if not G.elements:
        return f
    rem = G._red().reduce(dict(f.terms), full=True)
    return Polynomial(ring, rem)


class Ideal:
    """Generators in a common ring plus a per-order cache of reduced bases."""

    def __init__(self, ring: PolynomialRing, generators: Iterable[Polynomial] = ()):
        gens = []
        for g in generators:
            g = ring.coerce(g) if not isinstance(g, Polynomial) else g
            if g.ring != ring:
                if g.ring.names == ring.names and g.ring.field == ring.field:
                    g = g.to_ring(ring)
                else:
                    raise RingMismatch("generator outside the ideal's ring")
            if g:
                gens.append(g)
        self.ring = ring
        self.generators = gens
        self._cache: dict[OrderKind, GroebnerBasis] = {}

    def __repr__(self):
        return f"Ideal({self.ring!r}, {len(self.generators)} generators)"

    def __add__(self, other):
        if isinstance(other, Ideal):
            extra = other.generators
        else:
            extra = list(other)
        return Ideal(self.ring, self.generators + [g.to_ring(self.ring) if g.ring != self.ring else g
                                                   for g in extra])

    def groebner(self, order: OrderKind | None = None, timeout: float | None = DEFAULT_TIMEOUT
                 ) -> GroebnerBasis:
        order = order or self.ring.order
        gb = self._cache.get(order)
        if gb is None:
            gb = buchberger(self.generators, self.ring.with_order(order), timeout=timeout)
            gb = self._cache.setdefault(order, gb)
        return gb

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def contains(self, f: Polynomial) -> bool:
        return self.groebner().contains(f)

    def is_unit(self) -> bool:
        return self.groebner().is_unit()

    def equals(self, other: "Ideal") -> bool:
        G, H = self.groebner(), other.groebner()
        return all(G.contains(h) for h in other.generators) and all(
            H.contains(g) for g in self.generators)


def eliminate(I: Ideal, first_block_size: int, timeout: float | None = DEFAULT_TIMEOUT) -> Ideal:
    """I intersected with the subring of the last n-k variables, in that smaller ring."""
    k = first_block_size
    ring = I.ring
    if k < 0 or k >= ring.nvars:
        raise ValueError("block size must satisfy 0 <= k < number of variables")
    if k == 0:
        return I
    gb = I.groebner(elim(k), timeout=timeout)
    sub = PolynomialRing(ring.names[k:], ring.field, GREVLEX)
    mo = gb.ring.mo
    kept = []
    for g in gb.elements:
        if not any(mo.decode(g.lm)[:k]):
            kept.append(g.to_ring(sub, [j - k if j >= k else 0 for j in range(ring.nvars)]))
    return Ideal(sub, kept)


def _fresh_name(ring: PolynomialRing, base: str = "t") -> str:
    name = base
    n = 0
    while name in ring.names:
        n += 1
        name = f"{base}{n}"
    return name


def saturate(I: Ideal, g: Polynomial, timeout: float | None = DEFAULT_TIMEOUT) -> Ideal:
    """I : g^infinity via a fresh variable t, the relation t*g - 1 and elimination of t."""
    ring = I.ring
    g = ring.coerce(g) if g.ring != ring else g
    if g.is_zero():
        raise ValueError("cannot saturate by the zero polynomial")
    if g.is_constant():
        return I
    t = _fresh_name(ring)
    big = PolynomialRing((t,) + ring.names, ring.field, GREVLEX)
    shift = list(range(1, ring.nvars + 1))
    gens = [f.to_ring(big, shift) for f in I.generators]
    gens.append(big.var(0) * g.to_ring(big, shift) - 1)
    out = eliminate(Ideal(big, gens), 1, timeout=timeout)
    return Ideal(ring, [f.to_ring(ring, list(range(ring.nvars))) for f in out.generators])


def count_points(I: Ideal, order: OrderKind | None = None) -> int:
    """Dimension of the quotient ring = number of solutions with multiplicity."""
    gb = I.groebner(order)
    if gb.is_unit():
        return 0
    if not gb.is_zero_dimensional():
        raise NotZeroDimensional("ideal is not zero-dimensional")
    return len(gb.standard_monomials())


class QuotientAlgebra:
    """The finite-dimensional algebra F[x]/I of a zero-dimensional ideal."""

    def __init__(self, I: Ideal):
        self.ideal = I
        self.gb = I.groebner()
        self.basis = self.gb.standard_monomials()
        self.ring = self.gb.ring
        self.field = self.ring.field
        self._index = {self.ring.mo.encode(e): i for i, e in enumerate(self.basis)}
        self._basis_polys = [self.ring.monomial(e) for e in self.basis]

    def __len__(self):
        return len(self.basis)

    def coordinates(self, f: Polynomial) -> list:
        nf = normal_form(f, self.gb)
        v = [self.field.zero()] * len(self.basis)
        for k, c in nf.terms.items():
            v[self._index[k]] = c
        return v

    def multiplication_matrix(self, f: Polynomial) -> list[list]:
        """Matrix (acting on column coordinate vectors) of multiplication by f."""
        f = f.to_ring(self.ring) if f.ring != self.ring else f
        cols = [self.coordinates(f * b) for b in self._basis_polys]
        return [list(row) for row in zip(*cols)]

    def minimal_polynomial(self, M: list[list], rng: random.Random) -> list:
        return minimal_polynomial(M, self.field, rng)


def _krylov_minpoly(M, v, F: Field) -> list:
    n = len(M)
    vecs = [v]
    for _ in range(n):
        vecs.append([sum((F.mul(a, b) for a, b in zip(row, vecs[-1])), F.zero()) if not F.is_prime_field
                     else sum(a * b for a, b in zip(row, vecs[-1])) % F.p for row in M])
    cols = [list(col) for col in zip(*vecs)]
    R, piv = rref(cols, F)
    k = next(i for i in range(n + 1) if i not in piv)
    coeffs = [F.zero()] * (k + 1)
    for row, pc in zip(R, piv):
        if pc < k:
            coeffs[pc] = F.neg(F.convert(row[k]))
    coeffs[k] = F.one()
    return coeffs


def _poly_of_matrix_is_zero(coeffs, M, F: Field) -> bool:
    n = len(M)
    acc = [[F.zero()] * n for _ in range(n)]
    for c in reversed(coeffs):
        acc = matmul(acc, M, F)
        for i in range(n):
            acc[i][i] = F.add(acc[i][i], c)
    return all(x == 0 for row in acc for x in row)


def minimal_polynomial(M: list[list], F: Field, rng: random.Random) -> list:
    """Minimal polynomial of a square matrix (coefficients, lowest degree first)."""
    n = len(M)
    if n == 0:
        return [F.one()]
    m = [F.one()]
    for _ in range(8):
        v = [F.convert(rng.randrange(1, 1 << 30)) for _ in range(n)]
        m = univariate.lcm(m, _krylov_minpoly(M, v, F), F)
        if _poly_of_matrix_is_zero(m, M, F):
            return m
    raise RuntimeError("minimal polynomial did not stabilise")


def _random_scalar(F: Field, rng: random.Random):
    if F.is_prime_field:
        return rng.randrange(1, F.p)
    return F.convert(rng.randint(-99, 99) or 1)


def random_linear_form(ring: PolynomialRing, rng: random.Random) -> Polynomial:
    F = ring.field
    return ring.from_dict({tuple(1 if i == j else 0 for i in range(ring.nvars)): _random_scalar(F, rng)
                           for j in range(ring.nvars)})


def is_radical_zero_dim(I: Ideal, seed: int = 0, trials: int = 2) -> bool:
    """Squarefree eliminant of random linear forms on the quotient algebra."""
    gb = I.groebner()
    if not gb.is_unit() and not gb.is_zero_dimensional():
        raise NotZeroDimensional("ideal is not zero-dimensional")
    if gb.is_unit():
        return True
    A = QuotientAlgebra(I)
    rng = random.Random(seed)
    F = A.field
    for _ in range(trials):
        ell = random_linear_form(A.ring, rng)
        m = minimal_polynomial(A.multiplication_matrix(ell), F, rng)
        if not univariate.is_squarefree(m, F):
            return False
    return True


def count_distinct_values(I: Ideal, num: Polynomial, den: Polynomial, seed: int = 0) -> int:
    """Number of distinct values of num/den on the points of a radical zero-dimensional ideal."""
    A = QuotientAlgebra(I)
    F = A.field
    rng = random.Random(seed)
    Mn = A.multiplication_matrix(num)
    Md = A.multiplication_matrix(den)
    M = matmul(inverse(Md, F), Mn, F)
    return len(minimal_polynomial(M, F, rng)) - 1

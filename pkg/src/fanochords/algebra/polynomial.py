"""Sparse multivariate polynomials over an exact field.

A polynomial is a dict mapping packed monomial keys (see ``monomial``) to
raw coefficients.  Zero coefficients are never stored.  Values are treated
as immutable once built; the Gröbner kernels in ``groebner`` work on the
raw dicts directly.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .field import Field, FieldElement, GF, DEFAULT_PRIME
from .monomial import GREVLEX, MAX_DEGREE, MonomialOverflow, OrderKind, monomial_order


class RingMismatch(ValueError):
    pass


class ArityMismatch(ValueError):
    pass


class PolynomialRing:
    """Variables, coefficient field and monomial order."""

    def __init__(self, names: Iterable[str], field: Field | None = None,
                 order: OrderKind = GREVLEX):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        if not self.names:
            raise ValueError("a ring needs at least one variable")
        self.field = field if field is not None else GF(DEFAULT_PRIME)
        self.order = order
        self.nvars = len(self.names)
        self.mo = monomial_order(order, self.nvars)
        self._index = {n: i for i, n in enumerate(self.names)}

    def __eq__(self, other):
        return (isinstance(other, PolynomialRing) and self.names == other.names
                and self.field == other.field and self.order == other.order)

    def __hash__(self):
        return hash((self.names, self.field, self.order))

    def __repr__(self):
        return f"PolynomialRing({','.join(self.names)}; {self.field!r}; {self.order})"

    def header(self) -> str:
        return f"ring vars={','.join(self.names)} field={self.field.spec()} order={self.order}"

    def with_order(self, order: OrderKind) -> "PolynomialRing":
        return PolynomialRing(self.names, self.field, order)

    def with_field(self, field: Field) -> "PolynomialRing":
        return PolynomialRing(self.names, field, self.order)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}") from None

    # constructors

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        c = self.field.convert(c)
        return Polynomial(self, {0: c} if c != 0 else {})

    def var(self, name_or_index) -> "Polynomial":
        j = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        return Polynomial(self, {self.mo.var_keys[j]: self.field.one()})

    def gens(self) -> list["Polynomial"]:
        return [self.var(j) for j in range(self.nvars)]

    def monomial(self, exps: Sequence[int], coeff=1) -> "Polynomial":
        c = self.field.convert(coeff)
        return Polynomial(self, {self.mo.encode(exps): c} if c != 0 else {})

    def from_dict(self, terms: dict) -> "Polynomial":
        """Build from ``{exponent tuple: coefficient}``."""
        out: dict[int, object] = {}
        conv = self.field.convert
        for exps, c in terms.items():
            c = conv(c)
            if c != 0:
                k = self.mo.encode(exps)
                c = self.field.add(out.get(k, self.field.zero()), c)
                if c != 0:
                    out[k] = c
                else:
                    out.pop(k, None)
        return Polynomial(self, out)

    def coerce(self, x) -> "Polynomial":
        if isinstance(x, Polynomial):
            if x.ring != self:
                raise RingMismatch(f"{x.ring!r} is not {self!r}")
            return x
        if isinstance(x, (int, Fraction, FieldElement)):
            return self.constant(x)
        raise TypeError(f"cannot coerce {type(x).__name__} into {self!r}")

    def parse(self, text: str) -> "Polynomial":
        from .textio import parse_polynomial
        return parse_polynomial(self, text)


class Polynomial:
    __slots__ = ("ring", "terms", "_lm")

    def __init__(self, ring: PolynomialRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._lm = None

    # structure

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    @property
    def lm(self) -> int:
        """Leading monomial key."""
        if self._lm is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading monomial")
            self._lm = max(self.terms)
        return self._lm

    @property
    def lc(self):
        return self.terms[self.lm]

    def leading_exponents(self) -> tuple:
        return self.ring.mo.decode(self.lm)

    def sorted_terms(self) -> list[tuple[tuple, object]]:
        """Terms as ``(exponents, raw coefficient)``, largest monomial first."""
        dec = self.ring.mo.decode
        return [(dec(k), self.terms[k]) for k in sorted(self.terms, reverse=True)]

    def exponent_dict(self) -> dict:
        dec = self.ring.mo.decode
        return {dec(k): c for k, c in self.terms.items()}

    def degree(self) -> int:
        if not self.terms:
            return -1
        dec = self.ring.mo.decode
        return max(sum(dec(k)) for k in self.terms)

    def is_homogeneous(self) -> bool:
        dec = self.ring.mo.decode
        return len({sum(dec(k)) for k in self.terms}) <= 1

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def variables(self) -> set[int]:
        dec = self.ring.mo.decode
        used = set()
        for k in self.terms:
            used.update(j for j, e in enumerate(dec(k)) if e)
        return used

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        F = self.ring.field
        inv = F.inv(self.lc)
        if inv == 1:
            return self
        return Polynomial(self.ring, {k: F.mul(c, inv) for k, c in self.terms.items()})

    # arithmetic

    def _other(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatch("polynomials live in different rings")
            return other
        return self.ring.coerce(other)

    def __add__(self, other):
        g = self._other(other)
        F = self.ring.field
        out = dict(self.terms)
        for k, c in g.terms.items():
            if k in out:
                s = F.add(out[k], c)
                if s != 0:
                    out[k] = s
                else:
                    del out[k]
            else:
                out[k] = c
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.ring.field
        return Polynomial(self.ring, {k: F.neg(c) for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._other(other))

    def __rsub__(self, other):
        return self._other(other) - self

    def scale(self, c) -> "Polynomial":
        F = self.ring.field
        c = F.convert(c)
        if c == 0:
            return self.ring.zero()
        return Polynomial(self.ring, {k: F.mul(v, c) for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            return self.scale(other)
        g = self._other(other)
        if not self.terms or not g.terms:
            return self.ring.zero()
        if self.degree() + g.degree() > MAX_DEGREE:
            raise MonomialOverflow("product degree exceeds the monomial encoding")
        F = self.ring.field
        acc: dict[int, object] = {}
        get = acc.get
        if F.is_prime_field:
            p = F.p
            for k1, c1 in self.terms.items():
                for k2, c2 in g.terms.items():
                    k = k1 + k2
                    acc[k] = get(k, 0) + c1 * c2
            out = {}
            for k, c in acc.items():
                c %= p
                if c:
                    out[k] = c
        else:
            for k1, c1 in self.terms.items():
                for k2, c2 in g.terms.items():
                    k = k1 + k2
                    acc[k] = get(k, 0) + c1 * c2
            out = {k: c for k, c in acc.items() if c != 0}
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def mul_term(self, key: int, c) -> "Polynomial":
        """Multiply by the monomial with packed key ``key`` times raw ``c``."""
        F = self.ring.field
        return Polynomial(self.ring, {k + key: F.mul(v, c) for k, v in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        try:
            return self.terms == self.ring.coerce(other).terms
        except (TypeError, RingMismatch):
            return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __repr__(self):
        from .textio import format_polynomial
        return format_polynomial(self)

    # calculus and evaluation

    def diff(self, var) -> "Polynomial":
        ring = self.ring
        j = var if isinstance(var, int) else ring.index(var)
        F = ring.field
        dec = ring.mo.decode
        w = ring.mo.var_keys[j]
        out = {}
        for k, c in self.terms.items():
            e = dec(k)[j]
            if e:
                v = F.mul(c, F.convert(e))
                if v != 0:
                    out[k - w] = v
        return Polynomial(ring, out)

    def evaluate(self, point) -> FieldElement:
        """Evaluate at a point given as field elements or plain numbers."""
        ring = self.ring
        F = ring.field
        if len(point) != ring.nvars:
            raise ArityMismatch(f"expected {ring.nvars} coordinates, got {len(point)}")
        vals = [F.convert(x) for x in point]
        dec = ring.mo.decode
        total = F.zero()
        for k, c in self.terms.items():
            t = c
            for v, e in zip(vals, dec(k)):
                if e:
                    t = F.mul(t, v ** e if not F.is_prime_field else pow(v, e, F.p))
            total = F.add(total, t)
        return FieldElement(F, total)

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Apply the ring map sending variable j to ``images[j]``."""
        ring = self.ring
        if len(images) != ring.nvars:
            raise ArityMismatch(f"expected {ring.nvars} images, got {len(images)}")
        target = images[0].ring
        for im in images:
            if im.ring != target:
                raise RingMismatch("images live in different rings")
        if target.field != ring.field:
            raise RingMismatch("substitution must preserve the coefficient field")
        dec = ring.mo.decode
        powers: dict[tuple[int, int], Polynomial] = {}

        def power(j, e):
            key = (j, e)
            if key not in powers:
                powers[key] = images[j] if e == 1 else power(j, e - 1) * images[j]
            return powers[key]

        out = target.zero()
        acc: dict = {}
        F = target.field
        for k, c in self.terms.items():
            t = None
            for j, e in enumerate(dec(k)):
                if e:
                    t = power(j, e) if t is None else t * power(j, e)
            if t is None:
                t = target.one()
            for kk, cc in t.terms.items():
                acc[kk] = F.add(acc.get(kk, F.zero()), F.mul(cc, c))
        out = Polynomial(target, {kk: cc for kk, cc in acc.items() if cc != 0})
        return out

    def to_ring(self, ring: PolynomialRing, var_map: Sequence[int] | None = None) -> "Polynomial":
        """Re-encode in ``ring``; ``var_map[j]`` is the target index of variable j.

        Without a map, variables are matched by name.
        """
        src = self.ring
        if var_map is None:
            var_map = [ring.index(n) for n in src.names]
        if ring.field != src.field:
            F = ring.field
            conv = F.convert
        else:
            conv = None
        dec = src.mo.decode
        keys = ring.mo.var_keys
        out = {}
        for k, c in self.terms.items():
            nk = 0
            for j, e in enumerate(dec(k)):
                if e:
                    nk += e * keys[var_map[j]]
            out[nk] = conv(c) if conv else c
        return Polynomial(ring, {k: c for k, c in out.items() if c != 0})


def jacobian_matrix(fs: Sequence[Polynomial], point) -> list[list[FieldElement]]:
    """Entry (i, j) is d fs[i] / d x_j evaluated at ``point``."""
    if not fs:
        return []
    ring = fs[0].ring
    for f in fs:
        if f.ring != ring:
            raise RingMismatch("jacobian rows in different rings")
    if len(point) != ring.nvars:
        raise ArityMismatch(f"expected {ring.nvars} coordinates, got {len(point)}")
    return [[f.diff(j).evaluate(point) for j in range(ring.nvars)] for f in fs]


def poly_arith(f: Polynomial, g: Polynomial, op: str) -> Polynomial:
    if f.ring != g.ring:
        raise RingMismatch("polynomials live in different rings")
    if op == "add":
        return f + g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown operation {op!r}")

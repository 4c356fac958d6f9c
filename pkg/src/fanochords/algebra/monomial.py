"""Monomial orders and the packed-integer monomial encoding.

Every supported order (lex, grevlex, block elimination) is a weight-matrix
order whose rows are non-negative and lower-triangular per block.  A
monomial is stored as a single Python int that packs those row values in
16-bit fields, most significant row first.  The packing is linear in the
exponent vector, so

* monomial multiplication is integer addition,
* the monomial order is integer comparison,
* the quotient m / d (when d divides m) is integer subtraction.

Divisibility needs the plain exponents; ``MonomialOrder.divmask`` returns
a second packing with a guard bit per field for a branch-free test.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

FIELD_BITS = 16
MAX_DEGREE = (1 << (FIELD_BITS - 1)) - 1
_FIELD_MASK = (1 << FIELD_BITS) - 1


class MonomialOverflow(OverflowError):
    pass


@dataclass(frozen=True)
class OrderKind:
    """Order descriptor: ``lex``, ``grevlex`` or ``elim`` with a first-block size."""

    name: str
    block: int = 0

    def __post_init__(self):
        if self.name not in ("lex", "grevlex", "elim"):
            raise ValueError(f"unknown monomial order {self.name!r}")
        if self.name == "elim" and self.block < 0:
            raise ValueError("block size must be non-negative")

    @classmethod
    def parse(cls, text: str) -> "OrderKind":
        text = text.strip()
        if text.startswith("elim:"):
            return cls("elim", int(text[5:]))
        return cls(text)

    def __str__(self):
        return f"elim:{self.block}" if self.name == "elim" else self.name


LEX = OrderKind("lex")
GREVLEX = OrderKind("grevlex")


def elim(k: int) -> OrderKind:
    return OrderKind("elim", k)


class MonomialOrder:
    """Encoder/decoder for one order on a fixed number of variables."""

    def __init__(self, kind: OrderKind, nvars: int):
        if kind.name == "elim" and kind.block > nvars:
            raise ValueError("elimination block larger than the ring")
        self.kind = kind
        self.nvars = nvars
        if kind.name == "lex":
            self.blocks = [("lex", 0, nvars)]
        elif kind.name == "grevlex":
            self.blocks = [("grevlex", 0, nvars)]
        else:
            k = kind.block
            self.blocks = [b for b in (("grevlex", 0, k), ("grevlex", k, nvars)) if b[2] > b[1]]
        rows = []
        for style, lo, hi in self.blocks:
            if style == "lex":
                for j in range(lo, hi):
                    rows.append([1 if i == j else 0 for i in range(nvars)])
            else:
                # partial sums e_lo + ... + e_j for j = hi-1 down to lo
                for j in range(hi - 1, lo - 1, -1):
                    rows.append([1 if lo <= i <= j else 0 for i in range(nvars)])
        self.rows = rows
        n = nvars
        self.shifts = [FIELD_BITS * (n - 1 - r) for r in range(n)]
        # packed image of each variable
        self.var_keys = [
            sum(rows[r][j] << self.shifts[r] for r in range(n)) for j in range(n)
        ]
        self.var_masks = [1 << (FIELD_BITS * j) for j in range(n)]
        self.guard = sum(1 << (FIELD_BITS * j + FIELD_BITS - 1) for j in range(n))
        self._decode_cache: dict[int, tuple] = {}
        self._mask_cache: dict[int, int] = {}

    def encode(self, exps) -> int:
        if len(exps) != self.nvars:
            raise ValueError("exponent vector has wrong length")
        if sum(exps) > MAX_DEGREE or min(exps, default=0) < 0:
            raise MonomialOverflow(f"exponents {tuple(exps)} out of range")
        key = 0
        for e, w in zip(exps, self.var_keys):
            if e:
                key += e * w
        return key

    def decode(self, key: int) -> tuple:
        cached = self._decode_cache.get(key)
        if cached is not None:
            return cached
        vals = [(key >> s) & _FIELD_MASK for s in self.shifts]
        exps = [0] * self.nvars
        r = 0
        for style, lo, hi in self.blocks:
            size = hi - lo
            chunk = vals[r:r + size]
            r += size
            if style == "lex":
                exps[lo:hi] = chunk
            else:
                # chunk[0] = S(hi-1), chunk[1] = S(hi-2), ..., chunk[-1] = S(lo)
                sums = chunk[::-1]
                prev = 0
                for i, s in enumerate(sums):
                    exps[lo + i] = s - prev
                    prev = s
        out = tuple(exps)
        self._decode_cache[key] = out
        return out

    def divmask(self, key: int) -> int:
        """Exponents packed one field per variable, guard bits clear."""
        m = self._mask_cache.get(key)
        if m is None:
            m = 0
            for e, w in zip(self.decode(key), self.var_masks):
                if e:
                    m += e * w
            self._mask_cache[key] = m
        return m

    def divides(self, a: int, b: int) -> bool:
        """True iff monomial a divides monomial b."""
        g = self.guard
        return ((self.divmask(b) | g) - self.divmask(a)) & g == g

    def lcm(self, a: int, b: int) -> int:
        ea, eb = self.decode(a), self.decode(b)
        return self.encode([x if x > y else y for x, y in zip(ea, eb)])

    def gcd(self, a: int, b: int) -> int:
        ea, eb = self.decode(a), self.decode(b)
        return self.encode([x if x < y else y for x, y in zip(ea, eb)])

    def degree(self, key: int) -> int:
        return sum(self.decode(key))

    def compare(self, a_exps, b_exps) -> int:
        a, b = self.encode(a_exps), self.encode(b_exps)
        return (a > b) - (a < b)


@lru_cache(maxsize=None)
def monomial_order(kind: OrderKind, nvars: int) -> MonomialOrder:
    return MonomialOrder(kind, nvars)

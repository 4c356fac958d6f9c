"""Schubert calculus on G(k, n) by repeated Pieri multiplication with sigma_1.

A Schubert class of G(k, n) is indexed by a partition inside a box with
k+1 rows and n-k columns.  Multiplying by sigma_1 adds one box in every
possible way; the degree of G(k, n) in its Plücker embedding is the
coefficient of the full box in sigma_1 raised to the dimension.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import factorial


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(p for p in self.parts if p)
        if any(p < 0 for p in self.parts):
            raise ValueError("parts must be non-negative")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts {self.parts} are not weakly decreasing")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def fits(self, rows: int, cols: int) -> bool:
        return len(self.parts) <= rows and all(p <= cols for p in self.parts)

    def add_box(self, rows: int, cols: int) -> list["Partition"]:
        """All partitions in the box obtained by adding a single box."""
        padded = list(self.parts) + [0]
        out = []
        for i in range(min(len(padded), rows)):
            if padded[i] < cols and (i == 0 or padded[i - 1] > padded[i]):
                new = padded.copy()
                new[i] += 1
                out.append(Partition(tuple(new)))
        return out

    def __str__(self):
        return "sigma_" + (",".join(map(str, self.parts)) if self.parts else "0")


class SchubertCycle:
    """Integer combination of Schubert classes in a fixed box."""

    def __init__(self, rows: int, cols: int, coeffs: dict[Partition, int] | None = None):
        if rows < 1 or cols < 0:
            raise ValueError("box needs at least one row and non-negative width")
        self.rows, self.cols = rows, cols
        self.coeffs: dict[Partition, int] = {}
        for lam, c in (coeffs or {}).items():
            if not lam.fits(rows, cols):
                raise ValueError(f"{lam} does not fit the {rows}x{cols} box")
            if c:
                self.coeffs[lam] = c

    @classmethod
    def point_class(cls, rows: int, cols: int) -> "SchubertCycle":
        return cls(rows, cols, {Partition((cols,) * rows): 1})

    @classmethod
    def fundamental(cls, rows: int, cols: int) -> "SchubertCycle":
        return cls(rows, cols, {Partition(()): 1})

    def __eq__(self, other):
        return (isinstance(other, SchubertCycle) and (self.rows, self.cols) == (other.rows, other.cols)
                and self.coeffs == other.coeffs)

    def __repr__(self):
        terms = " + ".join(f"{c}*{lam}" if c != 1 else str(lam)
                           for lam, c in sorted(self.coeffs.items()))
        return f"SchubertCycle({self.rows}x{self.cols}: {terms or '0'})"

    def coefficient(self, lam: Partition | tuple) -> int:
        if not isinstance(lam, Partition):
            lam = Partition(tuple(lam))
        return self.coeffs.get(lam, 0)

    def weighted_size(self) -> int:
        return sum(c * lam.size for lam, c in self.coeffs.items())


def pieri_multiply(c: SchubertCycle) -> SchubertCycle:
    """c * sigma_1."""
    acc: Counter = Counter()
    for lam, k in c.coeffs.items():
        for mu in lam.add_box(c.rows, c.cols):
            acc[mu] += k
    return SchubertCycle(c.rows, c.cols, dict(acc))


def grassmannian_degree(k: int, n: int) -> int:
    """Plücker degree of G(k, n), the k-planes in P^n."""
    if not 0 < k + 1 <= n + 1:
        raise ValueError("need 0 <= k <= n")
    rows, cols = k + 1, n - k
    c = SchubertCycle.fundamental(rows, cols)
    for _ in range(rows * cols):
        c = pieri_multiply(c)
    return c.coefficient((cols,) * rows)


def rectangle_tableaux(rows: int, cols: int) -> int:
    """Standard Young tableaux of a rows x cols rectangle, by the hook-length formula."""
    hooks = 1
    for i in range(rows):
        for j in range(cols):
            hooks *= (rows - i - 1) + (cols - j - 1) + 1
    return factorial(rows * cols) // hooks

"""Lines in P^5, the quartic scroll and its chords.

Coordinates on P^5 are labelled ``00 01 02 10 11 12`` (z_ij = x_i y0^(2-j) y1^j
on the scroll).  Plücker coordinates are indexed by pairs A < B of those
labels in lexicographic order, with sign convention row1 ^ row2, so
p_AB = a_A b_B - a_B b_A for the line through a and b.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .algebra.field import DEFAULT_PRIME, GF, Field, FieldElement
from .algebra.linalg import nullspace, rank, rref
from .algebra.monomial import GREVLEX
from .algebra.polynomial import Polynomial, PolynomialRing, jacobian_matrix
from .groebner import (DEFAULT_TIMEOUT, Ideal, count_distinct_values, count_points, eliminate,
                       is_radical_zero_dim, random_linear_form, saturate)

LABELS = ("00", "01", "02", "10", "11", "12")
PAIRS = tuple(itertools.combinations(range(6), 2))
PLUCKER_NAMES = tuple(f"p{LABELS[a]}{LABELS[b]}" for a, b in PAIRS)
Z_NAMES = tuple(f"z{l}" for l in LABELS)
INFINITE = "infinite"


class GeometryError(ValueError):
    pass


class CoincidentPoints(GeometryError):
    pass


class PointOnSurface(GeometryError):
    pass


class PointNotOnVariety(GeometryError):
    pass


class InterpolationFailure(GeometryError):
    pass


def pair_index(a: int, b: int) -> tuple[int, int]:
    """Position of p_ab in PAIRS and the sign relating p_ab to the stored coordinate."""
    if a == b:
        raise ValueError("p_aa is identically zero")
    if a < b:
        return PAIRS.index((a, b)), 1
    return PAIRS.index((b, a)), -1


def plucker_ring(field: Field | None = None) -> PolynomialRing:
    return PolynomialRing(PLUCKER_NAMES, field or GF(DEFAULT_PRIME))


def z_ring(field: Field | None = None) -> PolynomialRing:
    return PolynomialRing(Z_NAMES, field or GF(DEFAULT_PRIME))


# Plücker points ---------------------------------------------------------------

class PluckerPoint:
    """A point of P^14 given by the 15 Plücker coordinates of a line in P^5."""

    __slots__ = ("field", "coords")

    def __init__(self, field: Field, coords: Sequence):
        if len(coords) != 15:
            raise GeometryError("a Plücker point has 15 coordinates")
        self.field = field
        self.coords = tuple(field.convert(c) for c in coords)
        if not any(self.coords):
            raise GeometryError("all Plücker coordinates vanish")

    def normalized(self) -> tuple:
        F = self.field
        lead = next(c for c in self.coords if c != 0)
        inv = F.inv(lead)
        return tuple(F.mul(c, inv) for c in self.coords)

    def __eq__(self, other):
        return (isinstance(other, PluckerPoint) and self.field == other.field
                and self.normalized() == other.normalized())

    def __hash__(self):
        return hash(self.normalized())

    def __repr__(self):
        nz = {PLUCKER_NAMES[i]: c for i, c in enumerate(self.coords) if c != 0}
        return f"PluckerPoint({nz})"

    def as_list(self) -> list:
        return list(self.coords)

    def satisfies_plucker_relations(self) -> bool:
        ring = plucker_ring(self.field)
        return all(r.evaluate(self.coords).value == 0 for r in plucker_relations(ring))


def plucker_line(a: Sequence, b: Sequence, field: Field | None = None) -> PluckerPoint:
    """Plücker point of the line through a and b (2x2 minors of the matrix [a; b])."""
    F = field or GF(DEFAULT_PRIME)
    if len(a) != 6 or len(b) != 6:
        raise GeometryError("points of P^5 have 6 coordinates")
    a = [F.convert(x) for x in a]
    b = [F.convert(x) for x in b]
    coords = [F.sub(F.mul(a[i], b[j]), F.mul(a[j], b[i])) for i, j in PAIRS]
    if not any(coords):
        raise CoincidentPoints("the two points coincide projectively")
    return PluckerPoint(F, coords)


def plucker_relations(ring: PolynomialRing, n: int = 5) -> list[Polynomial]:
    """The Grassmann-Plücker quadrics of G(1, n) in a ring with C(n+1, 2) variables."""
    pairs = list(itertools.combinations(range(n + 1), 2))
    if ring.nvars != len(pairs):
        raise GeometryError("ring does not match G(1, n)")
    idx = {pr: i for i, pr in enumerate(pairs)}
    v = ring.gens()
    out = []
    for i, j, k, l in itertools.combinations(range(n + 1), 4):
        out.append(v[idx[i, j]] * v[idx[k, l]] - v[idx[i, k]] * v[idx[j, l]]
                   + v[idx[i, l]] * v[idx[j, k]])
    return out


def grassmannian_ring(n: int, field: Field | None = None) -> PolynomialRing:
    names = [f"p{i}_{j}" for i, j in itertools.combinations(range(n + 1), 2)]
    return PolynomialRing(names, field or GF(DEFAULT_PRIME))


def plucker_ideal(n: int, field: Field | None = None) -> Ideal:
    ring = grassmannian_ring(n, field)
    return Ideal(ring, plucker_relations(ring, n))


# linear subspaces -----------------------------------------------------------------

class LinearSubspace:
    """Row span of a basis of vectors in F^ambient (a projective subspace)."""

    def __init__(self, basis: Sequence[Sequence], field: Field | None = None, ambient: int = 6):
        F = field or GF(DEFAULT_PRIME)
        rows = [[F.convert(x) for x in row] for row in basis]
        if any(len(r) != ambient for r in rows):
            raise GeometryError("basis vectors have the wrong length")
        if rank(rows, F) != len(rows) if rows else False:
            raise GeometryError("basis rows are linearly dependent")
        self.field = F
        self.ambient = ambient
        self.basis = rows

    @classmethod
    def from_equations(cls, equations: Sequence[Sequence], field: Field | None = None,
                       ambient: int = 6) -> "LinearSubspace":
        """Subspace cut out by linear forms given as coefficient vectors."""
        F = field or GF(DEFAULT_PRIME)
        eqs = [[F.convert(x) for x in e] for e in equations]
        return cls(nullspace(eqs, F, ambient) if eqs else
                   [[1 if i == j else 0 for i in range(ambient)] for j in range(ambient)], F, ambient)

    @property
    def projective_dimension(self) -> int:
        return len(self.basis) - 1

    def equations(self) -> list[list]:
        """Coefficient vectors of the linear forms vanishing on the subspace."""
        return nullspace(self.basis, self.field, self.ambient)

    def contains_point(self, v: Sequence) -> bool:
        F = self.field
        return rank(self.basis + [[F.convert(x) for x in v]], F) == len(self.basis)

    def contains(self, other: "LinearSubspace") -> bool:
        return all(self.contains_point(v) for v in other.basis)

    def intersect(self, other: "LinearSubspace") -> "LinearSubspace":
        return LinearSubspace.from_equations(self.equations() + other.equations(), self.field,
                                             self.ambient)

    def span(self, other: "LinearSubspace") -> "LinearSubspace":
        R, _ = rref(self.basis + other.basis, self.field)
        return LinearSubspace(R, self.field, self.ambient)

    def wedge(self) -> dict[tuple, object]:
        """Coordinates of the decomposable multivector v_0 ^ ... ^ v_k."""
        F = self.field
        k = len(self.basis)
        out = {}
        for cols in itertools.combinations(range(self.ambient), k):
            d = _det([[row[c] for c in cols] for row in self.basis], F)
            if d != 0:
                out[cols] = d
        return out

    def random_point(self, rng: random.Random) -> list:
        F = self.field
        coeffs = [_rand(F, rng) for _ in self.basis]
        return [sum((F.mul(c, row[i]) for c, row in zip(coeffs, self.basis)), F.zero())
                for i in range(self.ambient)]

    def __repr__(self):
        return f"LinearSubspace(dim={self.projective_dimension}, basis={self.basis})"


def _rand(F: Field, rng: random.Random):
    return F.convert(rng.randrange(1, F.p) if F.is_prime_field else rng.randint(-50, 50))


def _det(M, F: Field):
    M = [list(r) for r in M]
    n = len(M)
    det = F.one()
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c] != 0), None)
        if piv is None:
            return F.zero()
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = F.neg(det)
        det = F.mul(det, M[c][c])
        inv = F.inv(M[c][c])
        for r in range(c + 1, n):
            if M[r][c] != 0:
                f = F.mul(M[r][c], inv)
                M[r] = [F.sub(a, F.mul(f, b)) for a, b in zip(M[r], M[c])]
    return det


def _perm_sign(seq: Sequence[int]) -> int:
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def incidence_conditions(sub: LinearSubspace, ring: PolynomialRing | None = None) -> list[Polynomial]:
    """Linear forms in Plücker coordinates cutting out the lines that meet ``sub``.

    They are the coordinates of p ^ (v_0 ^ ... ^ v_k): one form for a P^3,
    six for a plane, fifteen for a line.
    """
    if sub.ambient != 6:
        raise GeometryError("incidence conditions are implemented for P^5")
    if sub.projective_dimension not in (1, 2, 3):
        raise GeometryError("unsupported subspace dimension "
                            f"{sub.projective_dimension}; need 1, 2 or 3")
    ring = ring or plucker_ring(sub.field)
    F = ring.field
    W = sub.wedge()
    size = len(sub.basis) + 2
    forms: dict[tuple, dict] = {T: {} for T in itertools.combinations(range(6), size)}
    for pi, (a, b) in enumerate(PAIRS):
        for S, w in W.items():
            if a in S or b in S:
                continue
            T = tuple(sorted((a, b) + S))
            sgn = _perm_sign((a, b) + S)
            e = tuple(1 if i == pi else 0 for i in range(15))
            forms[T][e] = F.add(forms[T].get(e, F.zero()), F.convert(sgn * w) if sgn > 0 else F.neg(w))
    return [ring.from_dict(forms[T]) for T in sorted(forms)]


def containment_conditions(sub: LinearSubspace, ring: PolynomialRing | None = None) -> list[Polynomial]:
    """Linear forms cutting out the lines contained in ``sub``.

    For each linear form h vanishing on ``sub`` the contraction
    sum_A h_A p_AB must vanish for every B.
    """
    ring = ring or plucker_ring(sub.field)
    F = ring.field
    out = []
    for h in sub.equations():
        for B in range(6):
            terms = {}
            for A in range(6):
                if A == B or h[A] == 0:
                    continue
                i, s = pair_index(A, B)
                e = tuple(1 if k == i else 0 for k in range(15))
                terms[e] = h[A] if s > 0 else F.neg(h[A])
            f = ring.from_dict(terms)
            if f:
                out.append(f)
    return out


def line_through(a: Sequence, b: Sequence, field: Field | None = None) -> LinearSubspace:
    return LinearSubspace([a, b], field)


# parametrizations ---------------------------------------------------------------------

@dataclass
class Parametrization:
    """A multihomogeneous map from a product of projective spaces.

    ``factors`` groups the source variables into projective factors; an
    empty list means affine parameters (as for the Grassmannian charts).
    """

    source: PolynomialRing
    components: list[Polynomial]
    factors: list[tuple[int, ...]] = dc_field(default_factory=list)
    target_names: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.components or all(c.is_zero() for c in self.components):
            raise GeometryError("all components vanish identically")
        if not self.target_names:
            self.target_names = tuple(f"w{i}" for i in range(len(self.components)))
        if self.factors:
            degs = {self.multidegree(c) for c in self.components if c}
            if len(degs) != 1:
                raise GeometryError("components must share one multidegree")

    @property
    def field(self) -> Field:
        return self.source.field

    def multidegree(self, f: Polynomial) -> tuple:
        md = set()
        for exps, _ in f.sorted_terms():
            md.add(tuple(sum(exps[j] for j in grp) for grp in self.factors))
        if len(md) != 1:
            raise GeometryError("component is not multihomogeneous")
        return md.pop()

    def target_ring(self, order=GREVLEX) -> PolynomialRing:
        return PolynomialRing(self.target_names, self.field, order)

    def __call__(self, params: Sequence) -> list:
        return [c.evaluate(params).value for c in self.components]

    def pullback(self, form: Polynomial) -> Polynomial:
        return form.substitute(self.components)

    def random_chart(self, rng: random.Random, names: Sequence[str] | None = None
                     ) -> tuple[PolynomialRing, list[Polynomial]]:
        """Affine chart after a random invertible change of coordinates per factor.

        Returns the chart ring (one variable per affine coordinate) and the
        images of the source variables in it.
        """
        F = self.field
        n_aff = sum(len(g) - 1 for g in self.factors)
        names = list(names) if names else [f"u{i}" for i in range(n_aff)]
        chart = PolynomialRing(names, F)
        us = chart.gens()
        images: list[Polynomial | None] = [None] * self.source.nvars
        pos = 0
        for grp in self.factors:
            k = len(grp)
            while True:
                M = [[_rand(F, rng) for _ in range(k)] for _ in range(k)]
                if _det(M, F) != 0:
                    break
            local = us[pos:pos + k - 1] + [chart.one()]
            pos += k - 1
            for r, j in enumerate(grp):
                images[j] = sum((lv.scale(M[r][c]) for c, lv in enumerate(local)), chart.zero())
        return chart, images

    def random_source_point(self, rng: random.Random) -> list:
        return [_rand(self.field, rng) for _ in range(self.source.nvars)]


def scroll_parametrization(field: Field | None = None) -> Parametrization:
    """P^1 x P^1 -> P^5 by bidegree (1, 2): z_ij = x_i y0^(2-j) y1^j."""
    S = PolynomialRing(("x0", "x1", "y0", "y1"), field or GF(DEFAULT_PRIME))
    x0, x1, y0, y1 = S.gens()
    return Parametrization(S, scroll_components(x0, x1, y0, y1), [(0, 1), (2, 3)], Z_NAMES)


def scroll_components(x0, x1, y0, y1) -> list:
    return [x0 * y0 ** 2, x0 * y0 * y1, x0 * y1 ** 2, x1 * y0 ** 2, x1 * y0 * y1, x1 * y1 ** 2]


def scroll_point(x: Sequence, y: Sequence, field: Field | None = None) -> list:
    F = field or GF(DEFAULT_PRIME)
    x0, x1 = (F.convert(v) for v in x)
    y0, y1 = (F.convert(v) for v in y)
    m = [F.mul(y0, y0), F.mul(y0, y1), F.mul(y1, y1)]
    return [F.mul(x0, c) for c in m] + [F.mul(x1, c) for c in m]


def chord_components(zp: Sequence, zq: Sequence) -> list:
    return [zp[a] * zq[b] - zp[b] * zq[a] for a, b in PAIRS]


def chord_map(field: Field | None = None) -> Parametrization:
    """(P^1 x P^1)^2 -> P^14, (p, q) -> Plücker point of the line pq; multidegree (1,2,1,2)."""
    S = PolynomialRing(("x0", "x1", "y0", "y1", "u0", "u1", "v0", "v1"), field or GF(DEFAULT_PRIME))
    x0, x1, y0, y1, u0, u1, v0, v1 = S.gens()
    zp = scroll_components(x0, x1, y0, y1)
    zq = scroll_components(u0, u1, v0, v1)
    return Parametrization(S, chord_components(zp, zq), [(0, 1), (2, 3), (4, 5), (6, 7)],
                           PLUCKER_NAMES)


def cubic_veronese(field: Field | None = None) -> Parametrization:
    """P^2 -> P^9 by all cubic monomials (the del Pezzo surface of degree 9)."""
    S = PolynomialRing(("s0", "s1", "s2"), field or GF(DEFAULT_PRIME))
    mons = [e for e in itertools.product(range(4), repeat=3) if sum(e) == 3]
    mons.sort(reverse=True)
    comps = [S.monomial(e) for e in mons]
    return Parametrization(S, comps, [(0, 1, 2)], tuple(f"c{a}{b}{c}" for a, b, c in mons))


def quadric_surface_parametrization(field: Field | None = None) -> Parametrization:
    """Segre embedding P^1 x P^1 -> P^3, (x, y) -> (x0y0, x0y1, x1y0, x1y1)."""
    S = PolynomialRing(("x0", "x1", "y0", "y1"), field or GF(DEFAULT_PRIME))
    x0, x1, y0, y1 = S.gens()
    return Parametrization(S, [x0 * y0, x0 * y1, x1 * y0, x1 * y1], [(0, 1), (2, 3)],
                           ("w0", "w1", "w2", "w3"))


def monomials_of_degree(n: int, d: int) -> list[tuple]:
    out = []
    for combo in itertools.combinations_with_replacement(range(n), d):
        e = [0] * n
        for j in combo:
            e[j] += 1
        out.append(tuple(e))
    return out


def image_ideal_interpolation(phi: Parametrization, degree: int, samples: int | None = None,
                              seed: int = 0) -> list[Polynomial]:
    """Degree-d forms vanishing on the image of ``phi``, certified symbolically.

    The forms span the kernel of the evaluation matrix at ``samples`` random
    image points; each one is then checked by substituting ``phi``.
    """
    T = phi.target_ring()
    F = T.field
    mons = monomials_of_degree(T.nvars, degree)
    samples = samples if samples is not None else 2 * len(mons)
    if samples < 2 * len(mons):
        raise InterpolationFailure(f"need at least {2 * len(mons)} samples, got {samples}")
    rng = random.Random(seed)
    rows = []
    while len(rows) < samples:
        vals = phi(phi.random_source_point(rng))
        if not any(vals):
            continue
        row = []
        for e in mons:
            v = F.one()
            for x, k in zip(vals, e):
                if k:
                    v = F.mul(v, pow(x, k, F.p) if F.is_prime_field else x ** k)
            row.append(v)
        rows.append(row)
    kernel = nullspace(rows, F, len(mons))
    forms = [T.from_dict({e: c for e, c in zip(mons, v) if c != 0}) for v in kernel]
    for f in forms:
        if not phi.pullback(f).is_zero():
            raise InterpolationFailure(f"form {f} does not vanish on the image")
    return forms


# slicing and counting -------------------------------------------------------------------

class LinearSection(Ideal):
    """I plus k random linear forms; keeps the forms and the seed."""

    def __init__(self, base: Ideal, forms: list[Polynomial], seed: int):
        super().__init__(base.ring, base.generators + forms)
        self.base = base
        self.forms = forms
        self.seed = seed


def random_linear_section(I: Ideal, k: int, seed: int) -> LinearSection:
    rng = random.Random(seed)
    forms = [random_linear_form(I.ring, rng) for _ in range(k)]
    return LinearSection(I, forms, seed)


def projective_point_count(I: Ideal, seed: int) -> int:
    """Length of a zero-dimensional projective scheme, counted in a random affine chart."""
    rng = random.Random(seed)
    ell = random_linear_form(I.ring, rng)
    return count_points(I + [ell - 1])


def slice_degree(I: Ideal, dim: int, seed: int) -> int:
    """Degree of a projective variety of dimension ``dim`` by random slicing and counting."""
    S = random_linear_section(I, dim, seed)
    return projective_point_count(S, seed + 7919)


# the scroll, G^3_3 and secants -------------------------------------------------------------

def scroll_quadrics(ring: PolynomialRing | None = None) -> list[Polynomial]:
    """2x2 minors of [[z00 z01 z10 z11], [z01 z02 z11 z12]], which cut out R^4."""
    ring = ring or z_ring()
    z = dict(zip(LABELS, ring.gens()))
    top = [z["00"], z["01"], z["10"], z["11"]]
    bot = [z["01"], z["02"], z["11"], z["12"]]
    return [top[i] * bot[j] - top[j] * bot[i] for i, j in itertools.combinations(range(4), 2)]


def g33_equations(ring: PolynomialRing | None = None) -> list[Polynomial]:
    """rank [[z00 z01 z02], [z10 z11 z12]] <= 1: the 3-fold swept by the conic planes."""
    ring = ring or z_ring()
    z = dict(zip(LABELS, ring.gens()))
    top = [z["00"], z["01"], z["02"]]
    bot = [z["10"], z["11"], z["12"]]
    return [top[i] * bot[j] - top[j] * bot[i] for i, j in itertools.combinations(range(3), 2)]


def on_scroll(q: Sequence, field: Field) -> bool:
    ring = z_ring(field)
    return all(f.evaluate(q).value == 0 for f in scroll_quadrics(ring))


def on_g33(q: Sequence, field: Field) -> bool:
    ring = z_ring(field)
    return all(f.evaluate(q).value == 0 for f in g33_equations(ring))


@dataclass
class SecantLocus:
    """Pairs of scroll points whose chord passes through q, in a random chart."""

    ideal: Ideal
    chord: list[Polynomial]
    count: int | str

    def is_chord(self, line: PluckerPoint) -> bool:
        """True iff every solution pair spans ``line`` (2x2 minors against it lie in the ideal)."""
        c = line.coords
        for i, j in itertools.combinations(range(15), 2):
            f = self.chord[i].scale(c[j]) - self.chord[j].scale(c[i])
            if not self.ideal.contains(f):
                return False
        return True


def _minors3(rows: Sequence[Sequence]) -> list:
    out = []
    for cols in itertools.combinations(range(6), 3):
        M = [[r[c] for c in cols] for r in rows]
        out.append(M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1])
                   - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0])
                   + M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]))
    return out


def _chord_chart(field: Field, seed: int, extra: Sequence[str] = ()):
    """Chart ring for pairs of scroll points, with optional extra leading variables."""
    src, images = chord_map(field).random_chart(random.Random(seed))
    ring = PolynomialRing(tuple(extra) + src.names, field)
    images = [im.to_ring(ring) for im in images]
    x0, x1, y0, y1, u0, u1, v0, v1 = images
    zp = scroll_components(x0, x1, y0, y1)
    zq = scroll_components(u0, u1, v0, v1)
    return ring, zp, zq, y0 * v1 - y1 * v0


def _apply_linear(coeffs: Sequence, zs: Sequence[Polynomial]) -> Polynomial:
    return sum((z.scale(c) for c, z in zip(coeffs, zs) if c != 0), zs[0].ring.zero())


@dataclass
class ChordSlice:
    """Pairs (p, q) on the scroll whose chord lies on k hyperplanes of P^14."""

    ideal: Ideal
    forms: list[Polynomial]
    count: int
    radical: bool
    distinct_lines: int


def chord_slice(field: Field | None = None, seed: int = 0, k: int = 4,
                timeout: float | None = DEFAULT_TIMEOUT) -> ChordSlice:
    """Pull k random hyperplanes of P^14 back along the chord map and count.

    The diagonal, where every minor vanishes, is removed by saturating
    with det(y, y'), the locus of pairs on one line of the ruling.
    """
    F = field or GF(DEFAULT_PRIME)
    rng = random.Random(seed)
    P = plucker_ring(F)
    forms = [random_linear_form(P, rng) for _ in range(k)]
    ring, zp, zq, diag = _chord_chart(F, rng.randrange(1 << 30))
    minors = chord_components(zp, zq)
    I = saturate(Ideal(ring, [f.substitute(minors) for f in forms]), diag, timeout=timeout)
    n = count_points(I)
    radical = is_radical_zero_dim(I, seed=rng.randrange(1 << 30))
    num = random_linear_form(P, rng).substitute(minors)
    den = random_linear_form(P, rng).substitute(minors)
    distinct = count_distinct_values(I, num, den, seed=rng.randrange(1 << 30))
    return ChordSlice(I, forms, n, radical, distinct)


def projection_from_line(l: LinearSubspace, timeout: float | None = DEFAULT_TIMEOUT) -> Ideal:
    """Ideal in P^3 of the image of the scroll under projection from the line l."""
    F = l.field
    hs = l.equations()
    S = PolynomialRing(("x0", "x1", "y0", "y1", "w0", "w1", "w2", "w3"), F)
    x0, x1, y0, y1, *w = S.gens()
    z = scroll_components(x0, x1, y0, y1)
    graph = [wi - _apply_linear(h, z) for wi, h in zip(w, hs)]
    return eliminate(Ideal(S, graph), 4, timeout=timeout)


def _det_poly(M: list[list[Polynomial]]) -> Polynomial:
    if len(M) == 1:
        return M[0][0]
    out = M[0][0].ring.zero()
    for j in range(len(M)):
        if not M[0][j]:
            continue
        term = M[0][j] * _det_poly([r[:j] + r[j + 1:] for r in M[1:]])
        out = out + term if j % 2 == 0 else out - term
    return out


@dataclass
class JoinSlice:
    """Points of (union of chords meeting l) ∩ (a random P^3), with their chords."""

    ideal: Ideal
    count: int
    radical: bool
    distinct_points: int


def chords_meeting_line_slice(l: LinearSubspace, seed: int = 0,
                              timeout: float | None = DEFAULT_TIMEOUT) -> JoinSlice:
    """Degree of the ruled surface swept by the chords that meet l.

    Solutions are triples (p, q, lam) with pq meeting l and p + lam*q on
    two random hyperplanes; (q, p, 1/lam) gives the same point of P^5.
    """
    F = l.field
    rng = random.Random(seed)
    ring, zp, zq, diag = _chord_chart(F, rng.randrange(1 << 30), extra=("lam",))
    lam = ring.var(0)
    L = [[ring.constant(c) for c in row] for row in l.basis]
    eqs = []
    for cols in itertools.combinations(range(6), 4):
        m = _det_poly([[r[c] for c in cols] for r in [zp, zq] + L])
        if m:
            eqs.append(m)
    z = [a + lam * b for a, b in zip(zp, zq)]
    for _ in range(2):
        eqs.append(_apply_linear([_rand(F, rng) for _ in range(6)], z))
    I = saturate(Ideal(ring, eqs), diag, timeout=timeout)
    I = saturate(I, lam, timeout=timeout)
    n = count_points(I)
    radical = is_radical_zero_dim(I, seed=rng.randrange(1 << 30))
    Z = z_ring(F)
    num = random_linear_form(Z, rng).substitute(z)
    den = random_linear_form(Z, rng).substitute(z)
    distinct = count_distinct_values(I, num, den, seed=rng.randrange(1 << 30))
    return JoinSlice(I, n, radical, distinct)


def secant_locus(q: Sequence, field: Field | None = None, seed: int = 0,
                 timeout: float | None = DEFAULT_TIMEOUT) -> SecantLocus:
    F = field or GF(DEFAULT_PRIME)
    q = [F.convert(v) for v in q]
    if on_scroll(q, F):
        raise PointOnSurface("q lies on the scroll")
    chart, zp, zq, diag = _chord_chart(F, seed)
    qrow = [chart.constant(v) for v in q]
    eqs = [m for m in _minors3([qrow, zp, zq]) if m]
    # pairs on a common ruling line (y = y') include the diagonal
    I = saturate(Ideal(chart, eqs), diag, timeout=timeout)
    gb = I.groebner(timeout=timeout)
    if gb.is_unit():
        count: int | str = 0
    elif gb.is_zero_dimensional():
        n = count_points(I)
        if n % 2:
            raise GeometryError("odd number of ordered pairs")
        count = n // 2
    else:
        count = INFINITE
    return SecantLocus(I, chord_components(zp, zq), count)


def secants_through_point(q: Sequence, field: Field | None = None, seed: int = 0) -> int | str:
    """Number of chords of R^4 through q, or ``"infinite"``."""
    return secant_locus(q, field, seed).count


def jacobian_rank_at(I: Ideal, point: Sequence) -> int:
    F = I.ring.field
    for g in I.generators:
        if g.evaluate(point).value != 0:
            raise PointNotOnVariety(f"generator {g} does not vanish at the point")
    J = jacobian_matrix(I.generators, point)
    return rank([[e.value for e in row] for row in J], F)


# Grassmannian charts and orbit representatives ------------------------------------------------

def chart_from_rows(source: PolynomialRing, row_a: Sequence, row_b: Sequence) -> Parametrization:
    """Plücker minors of a 2x6 matrix of polynomials over affine parameters."""
    a = [source.coerce(v) for v in row_a]
    b = [source.coerce(v) for v in row_b]
    return Parametrization(source, chord_components(a, b), [], PLUCKER_NAMES)


def chart_1_1(field: Field | None = None) -> Parametrization:
    """The 4-parameter chart of M_4 around the line z01=z02=z11=z12=0 (a ruling line)."""
    S = PolynomialRing(("a01", "a11", "b01", "b11"), field or GF(DEFAULT_PRIME))
    a01, a11, b01, b11 = S.gens()
    row_a = [1, a01, a01 ** 2 + a11 * b01, 0, a11, a11 * (a01 + b11)]
    row_b = [0, b01, b01 * (a01 + b11), 1, b11, a11 * b01 + b11 ** 2]
    return chart_from_rows(S, row_a, row_b)


def chart_2_2(field: Field | None = None) -> Parametrization:
    """The 4-parameter chart of M_4 around the conic tangent z02=z10=z11=z12=0."""
    S = PolynomialRing(("a02", "a10", "b02", "b10"), field or GF(DEFAULT_PRIME))
    a02, a10, b02, b10 = S.gens()
    row_a = [1, 0, a02, a10, a02 * b10, a02 * (a10 + b10 * b02)]
    row_b = [0, 1, b02, b10, a10 + b02 * b10, a10 * b02 + b10 * a02 + b10 * b02 ** 2]
    return chart_from_rows(S, row_a, row_b)


def chart_containment_check(chart: Parametrization, forms: Sequence[Polynomial]) -> bool:
    """True iff every form vanishes identically on the chart."""
    T = PolynomialRing(PLUCKER_NAMES, chart.field)
    return all(chart.pullback(f.to_ring(T) if f.ring != T else f).is_zero() for f in forms)


@dataclass(frozen=True)
class OrbitRepresentative:
    label: str
    point: PluckerPoint
    expected_corank: int = 4


def orbit_representatives(field: Field | None = None) -> list[OrbitRepresentative]:
    """One chord per orbit of GL2 x GL2 on M_4."""
    F = field or GF(DEFAULT_PRIME)
    e = [[1 if i == j else 0 for i in range(6)] for j in range(6)]
    E = dict(zip(LABELS, e))
    tangent = [a + b for a, b in zip(E["01"], E["10"])]
    return [
        OrbitRepresentative("0_4", plucker_line(E["00"], E["12"], F)),
        OrbitRepresentative("0_3", plucker_line(E["00"], tangent, F)),
        OrbitRepresentative("2_3", plucker_line(E["00"], E["02"], F)),
        OrbitRepresentative("2_2", plucker_line(E["00"], E["01"], F)),
        OrbitRepresentative("1_1", plucker_line(E["00"], E["10"], F)),
    ]


def line_scroll_intersection_length(a: Sequence, b: Sequence, field: Field,
                                    rng: random.Random) -> int:
    """Length of (line ab) ∩ R^4, computed on the line's affine parameter."""
    F = field
    S = PolynomialRing(("s",), F)
    s = S.var(0)
    # re-span the line by two random points so neither chart point lies on R^4
    for _ in range(20):
        c = [_rand(F, rng) for _ in range(4)]
        p0 = [F.add(F.mul(c[0], x), F.mul(c[1], y)) for x, y in zip(a, b)]
        p1 = [F.add(F.mul(c[2], x), F.mul(c[3], y)) for x, y in zip(a, b)]
        if not on_scroll(p1, F) and any(F.sub(F.mul(c[0], c[3]), F.mul(c[1], c[2])) for _ in [0]):
            break
    pts = [S.constant(x) * s + S.constant(y) for x, y in zip(p0, p1)]
    eqs = [f.substitute(pts) for f in scroll_quadrics(z_ring(F))]
    return count_points(Ideal(S, eqs))

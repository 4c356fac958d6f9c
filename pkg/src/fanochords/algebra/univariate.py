"""Dense univariate polynomials as coefficient lists, lowest degree first."""
from __future__ import annotations

from .field import Field


def trim(a: list) -> list:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def derivative(a: list, F: Field) -> list:
    return trim([F.mul(F.convert(i), c) for i, c in enumerate(a)][1:])


def divmod_poly(a: list, b: list, F: Field) -> tuple[list, list]:
    a, b = trim(a), trim(b)
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    inv = F.inv(b[-1])
    q = [F.zero()] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    while len(r) >= len(b) and r:
        c = F.mul(r[-1], inv)
        shift = len(r) - len(b)
        q[shift] = c
        for i, bc in enumerate(b):
            r[shift + i] = F.sub(r[shift + i], F.mul(c, bc))
        r = trim(r)
    return trim(q), r


def gcd(a: list, b: list, F: Field) -> list:
    a, b = trim(a), trim(b)
    while b:
        a, b = b, divmod_poly(a, b, F)[1]
    if a:
        inv = F.inv(a[-1])
        a = [F.mul(c, inv) for c in a]
    return a


def lcm(a: list, b: list, F: Field) -> list:
    g = gcd(a, b, F)
    prod = [F.zero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = F.add(prod[i + j], F.mul(x, y))
    return divmod_poly(prod, g, F)[0]


def is_squarefree(a: list, F: Field) -> bool:
    return len(gcd(a, derivative(a, F), F)) <= 1

"""Divisor arithmetic on y^2 = f(x) for monic quintics over odd finite
fields: composition and reduction on degree-at-most-2 representatives,
full group enumeration at small q, and the point-count order oracle."""

from __future__ import annotations

from .finitefield import (
    GF,
    padd,
    pdivmod,
    peval,
    pmod,
    pmonic,
    pmul,
    psub,
    pxgcd,
)


class DegreeShapeError(ValueError):
    pass


class NonzeroQuarticCoefficientError(ValueError):
    pass


class NonReducedInputError(ValueError):
    pass


class RootsNotRationalError(ValueError):
    pass


def mumford_verify(F, u, v, r):
    """Check a decomposition triple and return the quintic u*v + r^2.

    u, v monic of degrees nu and 5 - nu, deg r <= nu - 1; the product
    must be a monic quintic with vanishing quartic coefficient.
    """
    nu = len(u) - 1
    if not u or u[-1] != 1 or nu not in (0, 1, 2):
        raise DegreeShapeError("u must be monic of degree 0, 1 or 2")
    if not v or v[-1] != 1 or len(v) - 1 != 5 - nu:
        raise DegreeShapeError("v must be monic of degree 5 - deg u")
    if len(r) > max(0, nu):
        raise DegreeShapeError("r must have degree below deg u")
    f = padd(F, pmul(F, u, v), pmul(F, r, r))
    if len(f) != 6 or f[5] != 1:
        raise DegreeShapeError("product is not a monic quintic")
    if f[4] != 0:
        raise NonzeroQuarticCoefficientError("quartic coefficient is nonzero")
    return f


def is_reduced(F, f, D) -> bool:
    u, v = D
    if not u or u[-1] != 1 or len(u) - 1 > 2:
        return False
    if len(v) >= len(u) and not (len(u) == 1 and not v):
        return False
    return not pmod(F, psub(F, pmul(F, v, v), f), u)


IDENTITY = ([1], [])


def cantor_neg(F, D):
    u, v = D
    return (u, [F.neg(c) for c in v])


def cantor_add(F, f, D1, D2):
    """Group law on reduced divisors for y^2 = f(x), deg f = 5."""
    for D in (D1, D2):
        if not is_reduced(F, f, D):
            raise NonReducedInputError(repr(D))
    u1, v1 = D1
    u2, v2 = D2
    # composition
    d1, e1, e2 = pxgcd(F, u1, u2)
    d, c1, c2 = pxgcd(F, d1, padd(F, v1, v2))
    # d = s1 u1 + s2 u2 + s3 (v1 + v2)
    s1 = pmul(F, c1, e1)
    s2 = pmul(F, c1, e2)
    s3 = c2
    u = pdivmod(F, pmul(F, u1, u2), pmul(F, d, d))[0]
    num = padd(F, padd(F, pmul(F, pmul(F, s1, u1), v2),
                       pmul(F, pmul(F, s2, u2), v1)),
               pmul(F, s3, padd(F, pmul(F, v1, v2), f)))
    v = pmod(F, pdivmod(F, num, d)[0], u)
    # reduction
    while len(u) - 1 > 2:
        u_new = pdivmod(F, psub(F, f, pmul(F, v, v)), u)[0]
        u_new = pmonic(F, u_new)
        v = [F.neg(c) for c in pmod(F, v, u_new)]
        u = u_new
    return (pmonic(F, u), v)


def cantor_mul(F, f, D, n: int):
    out = IDENTITY
    base = D
    while n:
        if n & 1:
            out = cantor_add(F, f, out, base)
        base = cantor_add(F, f, base, base)
        n >>= 1
    return out


def enumerate_jacobian(F, f):
    """All reduced divisors (u, v) with u | f - v^2, deg u <= 2."""
    out = [IDENTITY]
    q = F.q
    # degree 1: u = x - t, v = (r) with r^2 = f(t)
    for t in F.elements():
        val = peval(F, f, t)
        r = F.sqrt(val)
        if r is None:
            continue
        roots = {r, F.neg(r)}
        for rr in roots:
            out.append(([F.neg(t), 1], [rr] if rr else []))
    # degree 2: u monic quadratic, v of degree < 2 with u | f - v^2
    for u0 in F.elements():
        for u1 in F.elements():
            u = [u0, u1, 1]
            for v1 in F.elements():
                for v0 in F.elements():
                    v = [v0, v1] if v1 else ([v0] if v0 else [])
                    if not pmod(F, psub(F, pmul(F, v, v), f), u):
                        out.append((u, v))
    return out


def curve_count(F, f) -> int:
    """|C(F_q)| for the smooth projective model (one point at infinity)."""
    n = 1
    for x in F.elements():
        val = peval(F, f, x)
        if val == 0:
            n += 1
        elif F.is_square(val):
            n += 2
    return n


def jacobian_order_zeta(p: int, coeffs) -> int:
    """|J(F_p)| from the curve counts over F_p and F_{p^2}."""
    Fp = GF(p)
    f1 = [c % p for c in coeffs]
    n1 = curve_count(Fp, f1)
    Fq = GF(p * p)
    f2 = [Fq.from_int(c) for c in coeffs]
    n2 = curve_count(Fq, f2)
    a1 = n1 - p - 1
    a2 = (n2 - p * p - 1 + a1 * a1) // 2
    assert (n2 - p * p - 1 + a1 * a1) % 2 == 0
    return 1 + a1 + a2 + p * a1 + p * p

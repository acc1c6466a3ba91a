"""Exact arithmetic in the cubic field Q(r), where r^3 + r^2 - 1 = 0.

Elements are stored on the power basis (1, r, r^2) with Fraction
coordinates, always fully reduced modulo the defining relation, so
structural equality coincides with equality in the field.  The single
real root of x^3 + x^2 - 1 is r ~ 0.7548776662.
"""

from __future__ import annotations

from fractions import Fraction

# x^3 + x^2 - 1, ascending coefficients
MIN_POLY = (Fraction(-1), Fraction(0), Fraction(1), Fraction(1))


def _as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise TypeError(f"cannot coerce {v!r} to a rational")


class NFElem:
    """An element c0 + c1*r + c2*r^2 of Q(r)."""

    __slots__ = ("c0", "c1", "c2")

    def __init__(self, c0=0, c1=0, c2=0):
        object.__setattr__(self, "c0", _as_fraction(c0))
        object.__setattr__(self, "c1", _as_fraction(c1))
        object.__setattr__(self, "c2", _as_fraction(c2))

    def __setattr__(self, name, value):
        raise AttributeError("NFElem is immutable")

    # -- coercion ------------------------------------------------------

    @staticmethod
    def coerce(v) -> "NFElem":
        if isinstance(v, NFElem):
            return v
        if isinstance(v, (int, Fraction)):
            return NFElem(v)
        raise TypeError(f"cannot coerce {v!r} to NFElem")

    def coords(self):
        return (self.c0, self.c1, self.c2)

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return not (self.c0 or self.c1 or self.c2)

    def is_rational(self) -> bool:
        return not (self.c1 or self.c2)

    def __bool__(self):
        return not self.is_zero()

    # -- ring operations -----------------------------------------------

    def __add__(self, other):
        try:
            o = NFElem.coerce(other)
        except TypeError:
            return NotImplemented
        return NFElem(self.c0 + o.c0, self.c1 + o.c1, self.c2 + o.c2)

    __radd__ = __add__

    def __neg__(self):
        return NFElem(-self.c0, -self.c1, -self.c2)

    def __sub__(self, other):
        try:
            o = NFElem.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        try:
            o = NFElem.coerce(other)
        except TypeError:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        try:
            o = NFElem.coerce(other)
        except TypeError:
            return NotImplemented
        a0, a1, a2 = self.c0, self.c1, self.c2
        b0, b1, b2 = o.c0, o.c1, o.c2
        e0 = a0 * b0
        e1 = a0 * b1 + a1 * b0
        e2 = a0 * b2 + a1 * b1 + a2 * b0
        e3 = a1 * b2 + a2 * b1
        e4 = a2 * b2
        # r^3 = 1 - r^2,  r^4 = -1 + r + r^2
        return NFElem(e0 + e3 - e4, e1 + e4, e2 - e3 + e4)

    __rmul__ = __mul__

    def inverse(self) -> "NFElem":
        return nf_invert(self)

    def __truediv__(self, other):
        return self * NFElem.coerce(other).inverse()

    def __rtruediv__(self, other):
        return NFElem.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "NFElem":
        if not isinstance(n, int):
            raise TypeError("exponent must be an integer")
        if n < 0:
            return self.inverse() ** (-n)
        out = NF_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- equality / hashing ---------------------------------------------

    def __eq__(self, other):
        try:
            o = NFElem.coerce(other)
        except TypeError:
            return NotImplemented
        return self.coords() == o.coords()

    def __hash__(self):
        return hash(("NFElem", self.c0, self.c1, self.c2))

    # -- printing --------------------------------------------------------

    def __str__(self):
        return nf_str(self)

    def __repr__(self):
        return f"NFElem({self.c0!r}, {self.c1!r}, {self.c2!r})"


NF_ZERO = NFElem(0)
NF_ONE = NFElem(1)
NF_R = NFElem(0, 1)


def nf_reduce(coeffs) -> NFElem:
    """Reduce a rational polynomial in r (ascending coefficients) mod r^3+r^2-1."""
    cs = [_as_fraction(c) for c in coeffs]
    for k in range(len(cs) - 1, 2, -1):
        c = cs[k]
        if c:
            # r^k = r^(k-3) - r^(k-1)
            cs[k - 3] += c
            cs[k - 1] -= c
        cs[k] = Fraction(0)
    while len(cs) < 3:
        cs.append(Fraction(0))
    return NFElem(cs[0], cs[1], cs[2])


def _poly_divmod(f, g):
    """Quotient and remainder of rational coefficient lists (ascending)."""
    f = list(f)
    dg = len(g) - 1
    while g and not g[-1]:
        g = g[:-1]
        dg -= 1
    q = [Fraction(0)] * max(len(f) - dg, 0)
    inv_lead = 1 / g[-1]
    for k in range(len(f) - 1, dg - 1, -1):
        if f[k]:
            c = f[k] * inv_lead
            q[k - dg] = c
            for j in range(dg + 1):
                f[k - dg + j] -= c * g[j]
    while f and not f[-1]:
        f.pop()
    return q, f


def nf_invert(a: NFElem) -> NFElem:
    """Multiplicative inverse in Q(r), by the extended Euclidean algorithm."""
    a = NFElem.coerce(a)
    if a.is_zero():
        raise ZeroDivisionError("cannot invert 0 in Q(r)")
    # run gcdex(a, min_poly) over Q[x]; the gcd is a nonzero constant
    r0, r1 = [a.c0, a.c1, a.c2], list(MIN_POLY)
    s0, s1 = [Fraction(1)], []
    while r1:
        q, rem = _poly_divmod(r0, r1)
        r0, r1 = r1, rem
        # s_{k+1} = s_{k-1} - q*s_k
        prod = [Fraction(0)] * (len(q) + len(s1)) if s1 else []
        for i, qi in enumerate(q):
            if not qi:
                continue
            for j, sj in enumerate(s1):
                prod[i + j] += qi * sj
        new = [Fraction(0)] * max(len(s0), len(prod))
        for i, c in enumerate(s0):
            new[i] += c
        for i, c in enumerate(prod):
            new[i] -= c
        while new and not new[-1]:
            new.pop()
        s0, s1 = s1, new
    # r0 is the (constant) gcd, s0 the cofactor of a
    g = r0[0]
    inv = [c / g for c in s0]
    return nf_reduce(inv)


def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _piece(q: Fraction, power: int) -> str:
    mono = "" if power == 0 else ("r" if power == 1 else f"r^{power}")
    if not mono:
        return _frac_str(q)
    if q == 1:
        return mono
    if q == -1:
        return "-" + mono
    return f"{_frac_str(q)}*{mono}"


def nf_str(a: NFElem) -> str:
    """Canonical print: ascending powers of r, reduced fractions, explicit signs."""
    pieces = [(c, k) for k, c in enumerate(a.coords()) if c]
    if not pieces:
        return "0"
    out = _piece(*pieces[0])
    for c, k in pieces[1:]:
        if c > 0:
            out += " + " + _piece(c, k)
        else:
            out += " - " + _piece(-c, k)
    return out

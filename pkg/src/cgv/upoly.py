"""Dense univariate polynomials over an exact field (Fraction or NFElem)."""

from __future__ import annotations

from fractions import Fraction

from .nf import NFElem


def _is_scalar(v):
    return isinstance(v, (int, Fraction, NFElem))


class UPoly:
    """Coefficients stored ascending; the zero polynomial is the empty tuple."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UPoly is immutable")

    @classmethod
    def x(cls, field_one=1):
        return cls((field_one * 0, field_one))

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        """Degree, with deg 0 = -1 by convention."""
        return len(self.coeffs) - 1

    def lead(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UPoly):
            return self.coeffs == other.coeffs
        if _is_scalar(other):
            return self == UPoly((other,))
        return NotImplemented

    def __hash__(self):
        return hash(("UPoly", self.coeffs))

    def __add__(self, other):
        if _is_scalar(other):
            other = UPoly((other,))
        n = max(len(self.coeffs), len(other.coeffs))
        out = []
        for i in range(n):
            a = self.coeffs[i] if i < len(self.coeffs) else 0
            b = other.coeffs[i] if i < len(other.coeffs) else 0
            out.append(a + b)
        return UPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if _is_scalar(other):
            other = UPoly((other,))
        return self + (-other)

    def __rsub__(self, other):
        return UPoly((other,)) - self

    def __mul__(self, other):
        if _is_scalar(other):
            if not other:
                return UPoly()
            return UPoly(tuple(c * other for c in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return UPoly()
        out = [self.coeffs[0] * other.coeffs[0] * 0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        out = UPoly((self.lead() / self.lead(),)) if self.coeffs else UPoly((1,))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dg = other.degree()
        lead_inv = 1 / other.lead() if not isinstance(other.lead(), NFElem) else other.lead().inverse()
        q = [self.coeffs[0] * 0 if self.coeffs else 0] * max(len(rem) - dg, 0)
        for k in range(len(rem) - 1, dg - 1, -1):
            if rem[k]:
                c = rem[k] * lead_inv
                q[k - dg] = c
                for j in range(dg + 1):
                    rem[k - dg + j] = rem[k - dg + j] - c * other.coeffs[j]
        return UPoly(q), UPoly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if self.is_zero():
            raise ValueError("cannot normalize the zero polynomial")
        inv = 1 / self.lead() if not isinstance(self.lead(), NFElem) else self.lead().inverse()
        return self * inv

    def derivative(self):
        return UPoly(tuple(c * k for k, c in enumerate(self.coeffs) if k >= 1))

    def __call__(self, v):
        out = None
        for c in reversed(self.coeffs):
            out = c if out is None else out * v + c
        return out if out is not None else v * 0

    def shift_mul_x(self, k: int):
        """Multiply by x^k."""
        if self.is_zero():
            return self
        zero = self.coeffs[0] * 0
        return UPoly((zero,) * k + self.coeffs)

    def to_str(self, var: str = "x") -> str:
        if self.is_zero():
            return "0"
        pieces = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            cs = str(c)
            if mono and cs == "1":
                body = mono
            elif mono and cs == "-1":
                body = "-" + mono
            elif mono:
                body = f"({cs})*{mono}" if (" " in cs) else f"{cs}*{mono}"
            else:
                body = f"({cs})" if " " in cs else cs
            pieces.append(body)
        out = pieces[0]
        for p in pieces[1:]:
            if p.startswith("-"):
                out += " - " + p[1:]
            else:
                out += " + " + p
        return out

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"UPoly({list(self.coeffs)!r})"


def upoly_gcd(f: UPoly, g: UPoly) -> UPoly:
    """Monic gcd; rejects gcd(0, 0)."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def squarefree_part(f: UPoly) -> UPoly:
    """f / gcd(f, f'), monic; the result has no repeated roots."""
    if f.is_zero():
        raise ValueError("squarefree part of 0 is undefined")
    if f.degree() == 0:
        return f.monic()
    g = upoly_gcd(f, f.derivative())
    q, rem = divmod(f, g)
    if not rem.is_zero():
        raise ArithmeticError("gcd does not divide its input")
    return q.monic()

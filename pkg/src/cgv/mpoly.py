"""Sparse polynomials over Q(r) in the variables X, Y, Z, T and the parameter m.

Terms map exponent vectors to NFElem coefficients; zero coefficients are
never stored, so structural equality is ring equality.  The canonical
term order is graded lexicographic with X > Y > Z > T > m.
"""

from __future__ import annotations

from fractions import Fraction

from .nf import NFElem, NF_ONE, nf_str
from .upoly import UPoly

VARS = ("X", "Y", "Z", "T", "m")
VAR_INDEX = {v: i for i, v in enumerate(VARS)}
GEOM_VARS = VARS[:4]
NVARS = len(VARS)
ZERO_EXP = (0,) * NVARS


def _coerce_coeff(v) -> NFElem:
    return NFElem.coerce(v)


class MPoly:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for exp, c in terms.items():
                c = _coerce_coeff(c)
                if not c.is_zero():
                    clean[tuple(exp)] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MPoly is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def constant(cls, c) -> "MPoly":
        return cls({ZERO_EXP: _coerce_coeff(c)})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "MPoly":
        if name not in VAR_INDEX:
            raise KeyError(f"unknown variable {name!r}")
        exp = [0] * NVARS
        exp[VAR_INDEX[name]] = power
        return cls({tuple(exp): NF_ONE})

    @classmethod
    def zero(cls) -> "MPoly":
        return cls()

    @staticmethod
    def coerce(v) -> "MPoly":
        if isinstance(v, MPoly):
            return v
        return MPoly.constant(v)

    # -- structure -------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return all(e == ZERO_EXP for e in self.terms)

    def as_nfelem(self) -> NFElem:
        if not self.terms:
            return NFElem(0)
        if not self.is_constant():
            raise ValueError(f"not a scalar: {self}")
        return self.terms[ZERO_EXP]

    def total_degree(self):
        """Total degree over all five variables; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def geom_degree(self):
        """Degree in X, Y, Z, T only (m is a parameter)."""
        return max((sum(e[:4]) for e in self.terms), default=-1)

    def is_homogeneous(self, degree=None):
        """Homogeneity in the geometric variables X, Y, Z, T."""
        degs = {sum(e[:4]) for e in self.terms}
        if not degs:
            return True
        if len(degs) > 1:
            return False
        return True if degree is None else degs == {degree}

    def involves(self, name: str) -> bool:
        i = VAR_INDEX[name]
        return any(e[i] for e in self.terms)

    def coefficient(self, exp) -> NFElem:
        return self.terms.get(tuple(exp), NFElem(0))

    def sorted_terms(self):
        """Graded-lex descending, X > Y > Z > T > m."""
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        o = MPoly.coerce(other)
        out = dict(self.terms)
        for e, c in o.terms.items():
            s = out.get(e)
            out[e] = c if s is None else s + c
        return MPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-MPoly.coerce(other))

    def __rsub__(self, other):
        return MPoly.coerce(other) + (-self)

    def __mul__(self, other):
        o = MPoly.coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                s = out.get(e)
                out[e] = c if s is None else s + c
        return MPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        out = MPoly.constant(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, NFElem)):
            other = MPoly.constant(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(("MPoly", frozenset(self.terms.items())))

    # -- ring maps ---------------------------------------------------------

    def substitute(self, mapping) -> "MPoly":
        """Ring homomorphism sending each variable to its image.

        `mapping` takes variable names to MPoly, NFElem, Fraction or int;
        missing variables map to themselves.
        """
        images = []
        for i, v in enumerate(VARS):
            img = mapping.get(v)
            images.append(None if img is None else MPoly.coerce(img))
        out = MPoly.zero()
        for e, c in self.terms.items():
            term = MPoly.constant(c)
            for i, k in enumerate(e):
                if not k:
                    continue
                img = images[i]
                if img is None:
                    term = term * MPoly.var(VARS[i], k)
                else:
                    term = term * img ** k
            out = out + term
        return out

    def specialize_m(self, value) -> "MPoly":
        return self.substitute({"m": MPoly.coerce(value)})

    def partial(self, name: str) -> "MPoly":
        """Formal partial derivative."""
        i = VAR_INDEX[name]
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if not k:
                continue
            ne = list(e)
            ne[i] = k - 1
            out[tuple(ne)] = c * k
        return MPoly(out)

    def coeff_of_geom(self, geom_exp) -> "MPoly":
        """Coefficient of the X,Y,Z,T-monomial, as a polynomial in m."""
        geom_exp = tuple(geom_exp)
        out = {}
        for e, c in self.terms.items():
            if e[:4] == geom_exp:
                out[(0, 0, 0, 0, e[4])] = c
        return MPoly(out)

    def geom_support(self):
        """Sorted list of distinct X,Y,Z,T exponent vectors."""
        return sorted({e[:4] for e in self.terms}, reverse=True)

    def m_upoly(self) -> UPoly:
        """View a polynomial involving only m as a UPoly over NFElem."""
        cs = {}
        for e, c in self.terms.items():
            if any(e[:4]):
                raise ValueError("polynomial involves geometric variables")
            cs[e[4]] = c
        n = max(cs, default=-1) + 1
        return UPoly(tuple(cs.get(k, NFElem(0)) for k in range(n)))

    def div_by_var(self, name: str):
        """Exact division by a variable: (quotient, True) or (self, False)."""
        i = VAR_INDEX[name]
        out = {}
        for e, c in self.terms.items():
            if e[i] < 1:
                return self, False
            ne = list(e)
            ne[i] -= 1
            out[tuple(ne)] = c
        return MPoly(out), True

    # -- printing ------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                (v if k == 1 else f"{v}^{k}")
                for v, k in zip(VARS, e)
                if k
            )
            cs = nf_str(c)
            if not mono:
                body = f"({cs})" if (" " in cs) else cs
            elif cs == "1":
                body = mono
            elif cs == "-1":
                body = "-" + mono
            elif " " in cs:
                body = f"({cs})*{mono}"
            else:
                body = f"{cs}*{mono}"
            pieces.append(body)
        out = pieces[0]
        for p in pieces[1:]:
            if p.startswith("-"):
                out += " - " + p[1:]
            else:
                out += " + " + p
        return out

    def __repr__(self):
        return f"MPoly<{self}>"


M_ZERO = MPoly.zero()
M_ONE = MPoly.constant(1)


def mp_substitute(f: MPoly, mapping) -> MPoly:
    return f.substitute(mapping)


def mp_partial(f: MPoly, name: str) -> MPoly:
    return f.partial(name)


def geom_monomial(exps4) -> MPoly:
    e = tuple(exps4) + (0,)
    return MPoly({e: NF_ONE})

"""Structure-driven property tests over randomized inputs."""

from hypothesis import given, settings, strategies as st

from cgv.mpoly import MPoly
from cgv.nf import NFElem, nf_invert
from cgv.parsing import parse_poly
from cgv.upoly import UPoly, squarefree_part, upoly_gcd

fractions = st.fractions(min_value=-30, max_value=30, max_denominator=12)
nf_elems = st.builds(NFElem, fractions, fractions, fractions)
exponents = st.tuples(*(st.integers(min_value=0, max_value=3) for _ in range(5)))
mpolys = st.dictionaries(exponents, nf_elems, max_size=5).map(MPoly)


@settings(max_examples=150, deadline=None)
@given(nf_elems, nf_elems, nf_elems)
def test_nf_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b * c) == (a * b) * c
    assert a * (b + c) == a * b + a * c


@settings(max_examples=100, deadline=None)
@given(nf_elems)
def test_nf_inverse(a):
    if not a.is_zero():
        assert a * nf_invert(a) == NFElem(1)


@settings(max_examples=100, deadline=None)
@given(mpolys)
def test_print_parse_roundtrip(p):
    assert parse_poly(str(p)) == p


@settings(max_examples=80, deadline=None)
@given(mpolys, mpolys)
def test_partial_leibniz(f, g):
    for v in ("X", "T"):
        assert (f * g).partial(v) == f * g.partial(v) + g * f.partial(v)


upolys = st.lists(fractions, max_size=6).map(lambda cs: UPoly(tuple(cs)))


@settings(max_examples=100, deadline=None)
@given(upolys, upolys)
def test_gcd_divides(f, g):
    if f.is_zero() and g.is_zero():
        return
    h = upoly_gcd(f, g)
    for p in (f, g):
        if not p.is_zero():
            assert (p % h).is_zero()


@settings(max_examples=80, deadline=None)
@given(upolys)
def test_squarefree_has_no_repeated_roots(f):
    if f.is_zero():
        return
    s = squarefree_part(f)
    if s.degree() >= 1:
        assert upoly_gcd(s, s.derivative()).degree() == 0

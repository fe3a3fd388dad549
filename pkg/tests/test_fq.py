import pytest
from hypothesis import given, strategies as st

from drinfeld_hecke.errors import DegreeTooLarge, FieldTooLarge, NonPrimeCharacteristic
from drinfeld_hecke.fq import (
    APoly,
    all_apolys,
    format_apoly,
    fq_init,
    is_irreducible,
    monic_irreducibles,
    parse_apoly,
    parse_q,
)

QS = [(2, 1), (3, 1), (2, 2), (5, 1), (3, 2), (2, 3)]


def _mobius(n):
    out, m, d = 1, n, 2
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                return 0
            out = -out
        d += 1
    return -out if m > 1 else out


def necklace(q, d):
    return sum(_mobius(d // k) * q**k for k in range(1, d + 1) if d % k == 0) // d


@pytest.mark.parametrize("p,e", QS)
def test_field_axioms_exhaustive(p, e):
    fq = fq_init(p, e)
    q = fq.q
    for a in range(q):
        assert fq.add(a, fq.neg(a)) == 0
        assert fq.mul(a, 1) == a
        if a:
            assert fq.mul(a, fq.inv(a)) == 1
            assert fq.pow(a, q - 1) == 1
        assert fq.pow(a, q) == a
    # distributivity on a few triples
    for a in range(q):
        for b in range(q):
            c = (a + 2 * b + 1) % q
            assert fq.mul(a, fq.add(b, c)) == fq.add(fq.mul(a, b), fq.mul(a, c))


@pytest.mark.parametrize("p,e", QS)
def test_frobenius_is_additive(p, e):
    fq = fq_init(p, e)
    for a in range(fq.q):
        for b in range(fq.q):
            assert fq.pow(fq.add(a, b), p) == fq.add(fq.pow(a, p), fq.pow(b, p))


def test_guards():
    with pytest.raises(NonPrimeCharacteristic):
        fq_init(4, 1)
    with pytest.raises(FieldTooLarge):
        fq_init(2, 17)


def test_parse_q():
    assert parse_q("2^2").q == 4
    assert parse_q("9").q == 9 and parse_q("9").p == 3
    assert parse_q(3).q == 3


@pytest.mark.parametrize("p,e,d", [(2, 1, 1), (2, 1, 2), (2, 1, 3), (2, 1, 4), (3, 1, 2), (3, 1, 3), (2, 2, 2)])
def test_irreducible_counts(p, e, d):
    fq = fq_init(p, e)
    assert len(monic_irreducibles(fq, d)) == necklace(fq.q, d)


def test_irreducible_degree_guard():
    with pytest.raises(DegreeTooLarge):
        monic_irreducibles(fq_init(2, 1), 5)


def apolys(fq, max_deg=4):
    return st.lists(st.integers(0, fq.q - 1), min_size=0, max_size=max_deg + 1).map(
        lambda cs: APoly(fq, tuple(cs)))


F3 = fq_init(3, 1)
F4 = fq_init(2, 2)


@given(apolys(F3), apolys(F3), apolys(F3))
def test_apoly_ring(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert (a - a).is_zero()


@given(apolys(F4), apolys(F4, 3).filter(lambda x: not x.is_zero()))
def test_apoly_divmod(a, b):
    qq, rr = divmod(a, b)
    assert qq * b + rr == a
    assert rr.is_zero() or rr.degree < b.degree


@given(apolys(F4, 5))
def test_format_parse_roundtrip(a):
    assert parse_apoly(F4, format_apoly(a)) == a


def test_parse_ascii_and_examples():
    fq = fq_init(2, 1)
    assert parse_apoly(fq, "T^2+T+1") == parse_apoly(fq, "θ^2+θ+1")
    assert is_irreducible(parse_apoly(fq, "θ^2+θ+1"))
    assert not is_irreducible(parse_apoly(fq, "θ^2+1"))
    assert len(all_apolys(fq, 1)) == 4

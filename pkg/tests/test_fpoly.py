import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import gcd_bruteforce, monic_polys, poly_mod_divides
from dgscert.fpoly import (
    FpPoly,
    factor_fp,
    gcd_fp,
    is_irreducible,
    lift_to_int,
    multiple_irreducible_factors,
    reduce_mod_p,
    squarefree_decomposition,
    squarefree_part,
)

P = lambda *c, p=3: FpPoly.from_ints(c, p)  # noqa: E731


def polys(p, max_deg=6):
    return st.lists(st.integers(0, p - 1), min_size=1, max_size=max_deg + 1).map(
        lambda c: FpPoly.from_ints(c, p)
    )


def irreducibles_by_enumeration(p, deg):
    """Monic irreducibles of the given degree: no monic divisor of degree 1..deg/2."""
    out = []
    for f in monic_polys(p, deg):
        if len(f) - 1 != deg:
            continue
        if not any(poly_mod_divides(d, f, p) for d in monic_polys(p, deg // 2) if len(d) > 1):
            out.append(f)
    return out


def test_basic_arithmetic():
    f = P(1, 1)
    assert str(f * f) == "x^2+2x+1"
    assert (f**2 - f * f).is_zero()
    assert P(0).degree == -1 and P(0).is_zero()
    assert P(4).is_one()
    q, r = divmod(P(2, 0, 1), P(1, 1))
    assert q * P(1, 1) + r == P(2, 0, 1)
    assert P(1, 2, 1)(2) == 0
    assert P(0, 0, 0, 1).derivative().is_zero()


def test_construction_errors():
    with pytest.raises(ValueError):
        FpPoly.from_ints([1, 1], 4)
    with pytest.raises(ValueError):
        FpPoly.from_ints([1, 1], 2)
    with pytest.raises(ValueError):
        FpPoly(3, (1, 0))


def test_gcd_examples():
    assert gcd_fp(P(1, 2, 1), P(2, 2)) == P(1, 1)  # (x+1)^2 and 2(x+1)
    assert gcd_fp(P(1, 2, 1), P(2, 1)) == P(1)  # roots 2 and 1
    assert gcd_fp(P(2, 0, 1), P(1, 1)) == P(1, 1)  # x^2-1 = (x-1)(x+1)
    assert gcd_fp(P(1, 0, 1), P(1, 1)) == P(1)  # x^2+1 irreducible mod 3
    assert gcd_fp(P(0), P(0)).is_zero()
    assert gcd_fp(P(0), P(2, 2)) == P(1, 1)


def test_gcd_modulus_mismatch():
    with pytest.raises(ValueError, match="modulus"):
        gcd_fp(P(1, 1), FpPoly.from_ints([1, 1], 5))


@settings(max_examples=150, deadline=None)
@given(st.sampled_from([3, 5]).flatmap(lambda p: st.tuples(polys(p, 4), polys(p, 4))))
def test_gcd_matches_bruteforce(fg):
    f, g = fg
    if f.is_zero() or g.is_zero():
        return
    assert list(gcd_fp(f, g).coeffs) == gcd_bruteforce(list(f.coeffs), list(g.coeffs), f.p)


def test_squarefree_part_examples():
    assert squarefree_part(P(1, 2, 1)) == P(1, 1)
    # x^3 + 1 = (x+1)^3 mod 3: derivative vanishes, sfp is still x+1
    assert squarefree_part(P(1, 0, 0, 1)) == P(1, 1)
    assert squarefree_part(P(2) * P(1, 1) ** 2 * P(2, 1) ** 3) == P(1, 1) * P(2, 1)
    with pytest.raises(ValueError):
        squarefree_part(P(0))


def test_squarefree_part_naive_formula_fails_in_char_p():
    # f / gcd(f, f') is not the squarefree part when p divides a multiplicity
    f = P(1, 1) ** 3 * P(2, 1)
    naive = f // gcd_fp(f, f.derivative())
    assert naive != squarefree_part(f)
    assert squarefree_part(f) == P(1, 1) * P(2, 1)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([3, 5, 7]).flatmap(lambda p: polys(p, 7)))
def test_squarefree_part_properties(f):
    if f.is_zero():
        return
    s = squarefree_part(f)
    fac = factor_fp(f)
    expected = P(1, p=f.p)
    for g, _ in fac.factors:
        expected = expected * g
    assert s == expected
    # f / gcd(f, f') agrees whenever no multiplicity is divisible by p
    if all(m % f.p for _, m in fac.factors):
        assert (f // gcd_fp(f, f.derivative())).monic() == s


def test_squarefree_decomposition():
    f = P(1, 1) ** 2 * P(2, 1) ** 3 * P(1, 0, 1)
    dec = squarefree_decomposition(f)
    prod = P(1)
    for g, m in dec:
        prod = prod * g**m
    assert prod == f.monic()
    assert dict((m, g) for g, m in dec) == {1: P(1, 0, 1), 2: P(1, 1), 3: P(2, 1)}


def test_factor_phi3_and_phi5_of_example3():
    phi3 = P(1, 1) ** 2 * P(2, 1) ** 3
    fac = factor_fp(phi3)
    assert [(str(g), m) for g, m in fac.factors] == [("x+1", 2), ("x+2", 3)]
    assert str(fac) == "(x+1)^2 (x+2)^3"
    phi5 = FpPoly.from_ints([2, 1], 5) ** 2
    assert str(factor_fp(phi5)) == "(x+2)^2"
    assert multiple_irreducible_factors(phi3) == [P(1, 1), P(2, 1)]
    assert multiple_irreducible_factors(P(1, 1) * P(2, 1)) == []


def test_factor_unit_and_zero():
    fac = factor_fp(P(2, 2))
    assert fac.unit == 2 and fac.factors == ((P(1, 1), 1),)
    assert str(factor_fp(P(2))) == "2"
    with pytest.raises(ValueError):
        factor_fp(P(0))


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([3, 5, 7, 11]).flatmap(lambda p: polys(p, 8)))
def test_factor_reconstructs_and_is_irreducible(f):
    if f.is_zero():
        return
    fac = factor_fp(f)
    assert fac.expand() == f
    for g, m in fac.factors:
        assert m >= 1 and g.coeffs[-1] == 1 and g.degree >= 1
        assert is_irreducible(g)
    keys = [(len(g.coeffs), g.coeffs) for g, _ in fac.factors]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)


@pytest.mark.parametrize("p, deg", [(3, 2), (3, 3), (3, 4), (5, 2), (5, 3), (7, 2)])
def test_irreducibility_matches_enumeration(p, deg):
    irr = {tuple(f) for f in irreducibles_by_enumeration(p, deg)}
    for f in monic_polys(p, deg):
        if len(f) - 1 == deg:
            assert is_irreducible(FpPoly.from_ints(f, p)) == (tuple(f) in irr)


def test_large_prime_factor():
    # beyond the root-search cutoff: Cantor-Zassenhaus path
    p = 1_000_003
    f = FpPoly.from_ints([3, 1], p) * FpPoly.from_ints([p - 7, 1], p) ** 2 * FpPoly.from_ints([2, 0, 1], p)
    fac = factor_fp(f)
    assert fac.expand() == f
    assert all(is_irreducible(g) for g, _ in fac.factors)
    # x^2 + 2 splits iff -2 is a square mod p
    splits = pow(p - 2, (p - 1) // 2, p) == 1
    assert sorted(m for _, m in fac.factors) == ([1, 1, 1, 2] if splits else [1, 1, 2])


def test_lift_and_reduce():
    f = reduce_mod_p([-1, 4, 0], 3)
    assert f == P(2, 1)
    assert lift_to_int(f) == [2, 1]
    assert reduce_mod_p(lift_to_int(f), 3) == f
    rng = random.Random(0)
    for _ in range(50):
        c = [rng.randint(-50, 50) for _ in range(rng.randint(1, 6))]
        g = reduce_mod_p(c, 7)
        assert all(0 <= x < 7 for x in lift_to_int(g))
        assert all((a - b) % 7 == 0 for a, b in itertools.zip_longest(c, lift_to_int(g), fillvalue=0))

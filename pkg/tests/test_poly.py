import random
from fractions import Fraction

import pytest

from chowcheck.poly import (NotDivisible, PolyParseError, PolyRing,
                            ProjectivePoint, check_parametrization,
                            enumerate_monomials, exact_divide,
                            multiplicity_at_point, parse_poly,
                            partial_derivative, substitute)

XY = PolyRing.rationals(("x", "y"))
XYZ = PolyRing.rationals(("x", "y", "z"))


def test_parse_round_trip():
    for text in ("x^4 + 2*x*y^3 - 1/2", "x", "-x + y", "3", "-5/7",
                 "x*y*x*y", "2*x^2*y - y + 1"):
        f = parse_poly(text, XY)
        assert parse_poly(f.to_text(), XY) == f


def test_parse_parentheses_and_powers():
    f = parse_poly("(x + y)^2 * (x - y)", XY)
    g = parse_poly("x^3 + x^2*y - x*y^2 - y^3", XY)
    assert f == g
    assert parse_poly("-(x + y) + x", XY) == parse_poly("-y", XY)
    assert parse_poly("((x))", XY) == parse_poly("x", XY)
    assert parse_poly("2*(x + 1)^3", XY).total_degree() == 3


def test_parse_rational_coefficients():
    f = parse_poly("1/2*x + 1/3*y", XY)
    assert f.terms[(1, 0)] == Fraction(1, 2)
    assert f.terms[(0, 1)] == Fraction(1, 3)


@pytest.mark.parametrize("bad", ["x +", "x + + y", "x^", "(x", "x)", "x^y",
                                 "q + x", "1/0", "", "x 2"])
def test_parse_errors_carry_position(bad):
    with pytest.raises(PolyParseError) as info:
        parse_poly(bad, XY)
    assert isinstance(info.value.position, int)
    assert 0 <= info.value.position <= len(bad)


def _random_poly(ring, rng, degree, homogeneous=False):
    terms = {}
    monos = enumerate_monomials(ring.nvars, degree)
    if homogeneous:
        pool = monos
    else:
        pool = [m for d in range(degree + 1)
                for m in enumerate_monomials(ring.nvars, d)]
    for m in rng.sample(pool, k=min(len(pool), rng.randrange(1, 6))):
        terms[m] = Fraction(rng.randrange(-9, 10) or 1, rng.randrange(1, 4))
    monomial = ring.monomial
    out = ring.zero()
    for e, c in terms.items():
        out = out + monomial(e, c)
    return out


def test_ring_laws_on_random_polynomials():
    rng = random.Random(123)
    for _ in range(20):
        f = _random_poly(XYZ, rng, 3)
        g = _random_poly(XYZ, rng, 3)
        h = _random_poly(XYZ, rng, 2)
        assert (f + g) * h == f * h + g * h
        assert f * g == g * f
        assert f - f == XYZ.zero()


def test_euler_identity_for_homogeneous_polynomials():
    rng = random.Random(2718)
    for _ in range(50):
        degree = rng.randrange(1, 6)
        f = _random_poly(XYZ, rng, degree, homogeneous=True)
        euler = XYZ.zero()
        for name in XYZ.names:
            euler = euler + XYZ.variable(name) * partial_derivative(f, name)
        assert euler == f.scale(degree)


def test_exact_divide():
    f = parse_poly("x^2 - y^2", XY)
    g = parse_poly("x - y", XY)
    q = exact_divide(f, g)
    assert q == parse_poly("x + y", XY)
    assert q * g == f
    with pytest.raises(NotDivisible) as info:
        exact_divide(parse_poly("x^2 + y^2", XY), g)
    assert not info.value.remainder.is_zero()


def test_substitute_across_rings():
    target = PolyRing.rationals(("s", "u"))
    f = parse_poly("x^2 + y*z", XYZ)
    image = substitute(f, {"x": parse_poly("s", target),
                           "y": parse_poly("u", target),
                           "z": parse_poly("s + u", target)}, target)
    assert image == parse_poly("s^2 + u*s + u^2", target)
    with pytest.raises(ValueError):
        substitute(f, {"x": parse_poly("s", target)}, target)


def test_tower_relations():
    tower = PolyRing.tower(("x", "lam", "t"), "lam")
    w = parse_poly("w", tower)
    a = parse_poly("a", tower)
    lam = parse_poly("lam", tower)
    one = tower.one()
    assert w * w * w == one
    assert w * w + w + one == tower.zero()
    assert a * a * a == -lam
    assert (a * w) ** 3 == -lam
    assert ((a * w * w) ** 3) == -lam


def test_homogeneity_in_subset_of_variables():
    f = parse_poly("x^2*z + y^2*z + z^3", XYZ)
    assert f.is_homogeneous()
    g = parse_poly("x^2 + y^2*z", XYZ)
    assert not g.is_homogeneous()
    assert not g.is_homogeneous(("y",))
    h = parse_poly("x^2*z + x^2", XYZ)
    assert h.is_homogeneous(("x",))


def test_multiplicity_at_point():
    # nodal cubic: double point at (0 : 0 : 1)
    f = parse_poly("y^2*z - x^3 - x^2*z", XYZ)
    assert multiplicity_at_point(f, (0, 0, 1), ("x", "y", "z")) == 2
    assert multiplicity_at_point(f, (-1, 0, 1), ("x", "y", "z")) == 1
    assert multiplicity_at_point(f, (1, 1, 1), ("x", "y", "z")) == 0
    with pytest.raises(ValueError):
        multiplicity_at_point(f, (0, 0, 2), ("x", "y", "z"))


def test_multiplicity_with_symbolic_parameter():
    ring = PolyRing.rationals(("x", "y", "z", "t"))
    f = parse_poly("y^2*z - x^3 + t*z^3", ring)
    # generic parameter: the point is on the curve only at t = 0, where it
    # is smooth; for symbolic t the dehomogenised polynomial has a constant
    assert multiplicity_at_point(f, (0, 0, 1), ("x", "y", "z")) == 0


def test_check_parametrization():
    f = parse_poly("x*z - y^2", XYZ)
    target = PolyRing.rationals(("s", "u"))
    ok, witness = check_parametrization(
        f, {"x": parse_poly("s^2", target), "y": parse_poly("s*u", target),
            "z": parse_poly("u^2", target)}, target)
    assert ok and witness is None
    ok, witness = check_parametrization(
        f, {"x": parse_poly("s^2", target), "y": parse_poly("s*u", target),
            "z": parse_poly("u^2 + 1", target)}, target)
    assert not ok and witness == parse_poly("s^2", target)


def test_projective_point_normalisation():
    assert ProjectivePoint((2, 4)) == ProjectivePoint((1, 2))
    assert ProjectivePoint((0, 3, 6)).coords == (0, 1, 2)
    assert hash(ProjectivePoint((2, 4))) == hash(ProjectivePoint((1, 2)))
    with pytest.raises(ValueError):
        ProjectivePoint((0, 0))


def test_leading_term_and_text():
    f = parse_poly("x*y + x^2", XY)
    e, c = f.leading_term()
    assert e == (2, 0) and c == 1
    assert parse_poly("0", XY).is_zero()
    assert parse_poly("x - x", XY).to_text() == "0"

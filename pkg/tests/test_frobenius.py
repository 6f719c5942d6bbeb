"""Coefficient twists and q-power factorization exponents."""

import pytest

from quotrel.fields import GF, QQ
from quotrel.frobenius import frobenius_exponent, frobenius_twist
from quotrel.poly import PolyRing
from quotrel.ring import AmbientRing


def line(p):
    pr = PolyRing(GF(p), ("t",))
    A = AmbientRing.quotient(pr, [])
    return A, A.embed(0, pr.var(0))


def eval_cert(cert, gens, ring):
    """Substitute the subalgebra generators into a certificate."""
    total = ring.zero
    for m, coeff in cert.terms.items():
        term = ring.one.scale(coeff)
        for g, e in zip(gens, m):
            term = term * g ** e
        total = total + term
    return total


def test_twist_needs_positive_characteristic():
    pr = PolyRing(QQ, ("x",))
    with pytest.raises(ValueError):
        frobenius_twist(pr.parse("x"), 2)


def test_twist_validates_the_power():
    pr = PolyRing(GF(2), ("x",))
    f = pr.parse("x + 1")
    with pytest.raises(ValueError, match="not a power"):
        frobenius_twist(f, 3)
    with pytest.raises(ValueError, match="not a power"):
        frobenius_twist(f, 6)
    assert frobenius_twist(f, 4) == f


def test_twist_fixes_prime_field_coefficients():
    pr = PolyRing(GF(7), ("x", "y"))
    f = pr.parse("3*x^2*y + 5*y - 2")
    for q in (1, 7, 49):
        assert frobenius_twist(f, q) == f


@pytest.mark.parametrize("p", [2, 3, 5])
def test_cusp_needs_one_twist(p):
    A, t = line(p)
    w = frobenius_exponent([t ** 2, t ** 3], [t])
    assert (w.p, w.r, w.q) == (p, 1, p)
    # certificate evaluates back to the power it certifies
    b, cert = w.certificates[0]
    assert eval_cert(cert, [t ** 2, t ** 3], A) == b ** w.q


def test_witness_render():
    _, t = line(5)
    w = frobenius_exponent([t ** 2, t ** 3], [t])
    assert w.render().splitlines() == [
        "q = 5^1 = 5",
        "  t^5 = w1*w2 in the generators",
    ]


def test_containment_gives_exponent_zero():
    A, t = line(3)
    w = frobenius_exponent([t], [t ** 2])
    assert (w.r, w.q) == (0, 1)
    assert [(g.render(), c.ring.render(c)) for g, c in w.certificates] == [
        ("t^2", "w1^2")
    ]


def test_even_powers_in_characteristic_two_only():
    A2, t2 = line(2)
    w = frobenius_exponent([t2 ** 2], [t2])
    assert w.r == 1
    A3, t3 = line(3)
    assert frobenius_exponent([t3 ** 2], [t3], r_max=3) is None


def test_exponent_is_stable_under_a_larger_search_bound():
    _, t = line(2)
    small = frobenius_exponent([t ** 2, t ** 3], [t], r_max=1)
    large = frobenius_exponent([t ** 2, t ** 3], [t], r_max=8)
    assert small.r == large.r == 1


def test_nilpotents_collapse_on_the_fat_point():
    pr = PolyRing(GF(2), ("y",))
    F = AmbientRing.quotient(pr, [pr.parse("y^2")])
    y = F.embed(0, pr.var(0))
    w = frobenius_exponent([], [y], r_max=4)
    assert w.r == 1
    assert [c.ring.render(c) for _, c in w.certificates] == ["0"]


def test_exponent_validation():
    A, t = line(2)
    with pytest.raises(ValueError):
        frobenius_exponent([t], [])
    B, s = line(3)
    with pytest.raises(ValueError):
        frobenius_exponent([t], [s])
    pr = PolyRing(QQ, ("t",))
    C = AmbientRing.quotient(pr, [])
    with pytest.raises(ValueError, match="positive characteristic"):
        frobenius_exponent([C.embed(0, pr.var(0))], [C.embed(0, pr.var(0))])

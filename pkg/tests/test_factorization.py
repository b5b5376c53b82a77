import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from gtilde._errors import (
    ParseError,
    PoleOnDisc,
    RootOnOriginMissing,
    ZeroPolynomial,
)
from gtilde.factorization import (
    PolyC,
    balanced_factorize,
    blaschke_factor,
    poly_roots,
)

roots_strategy = st.lists(
    st.complex_numbers(min_magnitude=0.1, max_magnitude=3.0, allow_nan=False),
    min_size=1,
    max_size=4,
)


def test_poly_basics():
    p = PolyC([1, 2, 0, 0])
    assert p.degree == 1
    assert p.lead == 2
    assert p(1.5) == 4
    assert PolyC([0, 0]).is_zero()
    assert (p * p).coeffs == (1, 4, 4)
    assert (1 - p).coeffs == (0, -2)
    assert (p - 1).coeffs == (0, 2)
    assert (-p + p).is_zero()
    assert PolyC.monomial(2, 3j).coeffs == (0, 0, 3j)
    assert PolyC([1, 2, 3]).derivative().coeffs == (2, 6)
    assert PolyC([5]).derivative().is_zero()
    assert (PolyC([2, 4]) / 2).coeffs == (1, 2)
    np.testing.assert_allclose(p(np.array([0.0, 1.0])), [1, 3])


def test_poly_json():
    p = PolyC([1 + 1j, -0.5])
    assert PolyC.from_json(p.to_json()) == p
    with pytest.raises(ParseError):
        PolyC.from_json([])


def test_from_roots():
    p = PolyC.from_roots([1, -1], lead=2)
    assert p.coeffs == (-2, 0, 2)
    assert PolyC.from_roots([], lead=3).coeffs == (3,)


@settings(deadline=None)
@given(roots_strategy)
def test_poly_roots_recover_distinct_roots(roots):
    # simple, well separated roots
    assume(
        all(abs(a - b) >= 0.5 for i, a in enumerate(roots) for b in roots[i + 1 :])
    )
    found = poly_roots(PolyC.from_roots(roots))
    assert len(found) == len(roots)
    for r in roots:
        assert min(abs(r - f) for f in found) < 1e-6 * max(1, abs(r))


def test_poly_roots_deflates_origin():
    roots = poly_roots(PolyC([0, 0, 1, 1]))
    assert roots[:2] == [0j, 0j]
    assert roots[2] == pytest.approx(-1)
    assert poly_roots([0, 0, 2]) == [0j, 0j]
    with pytest.raises(ZeroPolynomial):
        poly_roots(PolyC([0]))


def test_blaschke_factor_is_unimodular():
    circle = np.exp(1j * np.linspace(0, 2 * np.pi, 50))
    np.testing.assert_allclose(np.abs(blaschke_factor(0.4 - 0.2j, circle)), 1.0)
    assert blaschke_factor(0.4, 0.4) == 0


def test_balanced_factorize():
    h = PolyC.from_roots([0, 0.5, 2.0 + 1j, -0.3j], lead=3)
    fac = balanced_factorize(h)
    assert sorted(abs(a) for a in fac.inside) == pytest.approx([0.3, 0.5])
    assert len(fac.outside) == 1
    residuals = fac.check(h)
    assert max(residuals.values()) < 1e-9
    assert fac.g(0) == 0
    circle = np.exp(1j * np.linspace(0, 2 * np.pi, 100))
    np.testing.assert_allclose(np.abs(fac.f(circle)), np.abs(fac.g(circle)))
    lam = 0.2 + 0.4j
    assert fac.f(lam) * fac.g(lam) == pytest.approx(h(lam))


def test_balanced_factorize_with_divisor():
    h = PolyC.from_roots([0, 0.5])
    d = PolyC([2, 1])
    fac = balanced_factorize(h, d)
    lam = -0.3 + 0.1j
    assert fac.f(lam) * fac.g(lam) == pytest.approx(h(lam) / d(lam) ** 2)
    assert fac.to_json()["divisor"] == d.to_json()


def test_balanced_factorize_errors():
    with pytest.raises(ZeroPolynomial):
        balanced_factorize(PolyC([0]))
    with pytest.raises(RootOnOriginMissing):
        balanced_factorize(PolyC([1, 1]))
    with pytest.raises(PoleOnDisc):
        balanced_factorize(PolyC([0, 1]), PolyC([0.5, 1]))


def test_balanced_factorize_monomial():
    fac = balanced_factorize(PolyC([0, 1]))
    assert fac.f(0.5) == 1
    assert fac.g(0.5) == 0.5

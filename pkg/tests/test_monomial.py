"""Unit tests for the monomial ideal engine, with brute-force oracles."""

from itertools import product as iproduct

import pytest

from idealkit import monomial as mo


def brute_colength(I):
    bounds = mo.pure_bounds(I)
    return sum(1 for v in iproduct(*(range(b) for b in bounds))
               if not I.contains_monomial(v))


def test_minimalize_drops_dominated_generators():
    I = mo.minimalize(2, [(2, 0), (3, 1), (0, 3), (1, 4), (2, 2)])
    assert I.gens == ((0, 3), (2, 0))


def test_colength_small_staircase():
    I = mo.minimalize(2, [(2, 0), (1, 1), (0, 3)])
    assert mo.colength(I) == 4
    assert mo.colength(I) == brute_colength(I)


def test_colength_matches_brute_force_on_batch():
    cases = [
        [(3, 0), (0, 3)],
        [(4, 0), (2, 1), (0, 2)],
        [(2, 0, 0), (0, 3, 0), (0, 0, 4), (1, 1, 1)],
        [(5, 0, 0), (0, 5, 0), (0, 0, 5), (2, 2, 0), (0, 1, 3)],
    ]
    for raw in cases:
        I = mo.minimalize(len(raw[0]), raw)
        assert mo.colength(I) == brute_colength(I)


def test_not_m_primary_raises():
    I = mo.minimalize(2, [(2, 0), (1, 1)])  # no pure power of y
    with pytest.raises(mo.NotMPrimary):
        mo.colength(I)
    assert not mo.is_m_primary(I)


def test_product_and_power():
    m = mo.minimalize(2, [(1, 0), (0, 1)])
    m3 = mo.power(m, 3)
    assert m3.gens == ((0, 3), (1, 2), (2, 1), (3, 0))
    assert mo.colength(m3) == 6
    assert mo.power(m, 0).is_unit


def test_colon_pure_powers():
    J = mo.minimalize(3, [(7, 0, 0), (0, 7, 0), (0, 0, 7)])
    C = mo.colon(J, mo.minimalize(3, [(2, 2, 2)]))
    assert C.gens == ((0, 0, 5), (0, 5, 0), (5, 0, 0))
    assert mo.colength(C) == 125


def test_colon_socle():
    Q = mo.minimalize(2, [(2, 0), (0, 2)])
    m = mo.minimalize(2, [(1, 0), (0, 1)])
    assert mo.colon(Q, m).gens == ((0, 2), (1, 1), (2, 0))


def test_intersect():
    I = mo.minimalize(2, [(2, 0)])
    J = mo.minimalize(2, [(0, 3)])
    assert mo.intersect(I, J).gens == ((2, 3),)


def test_newton_halfspaces_of_mixed_ideal():
    I = mo.minimalize(2, [(4, 0), (0, 4), (1, 1)])
    NP = mo.newton(I)
    assert ((1, 3), 4) in NP.halfspaces
    assert ((3, 1), 4) in NP.halfspaces
    assert mo.np_contains(NP, (1, 1))
    assert not mo.np_contains(NP, (1, 0))


def test_integral_closure_adds_diagonal():
    I = mo.minimalize(2, [(2, 0), (0, 2)])
    assert mo.integral_closure(I).gens == ((0, 2), (1, 1), (2, 0))


def test_integral_closure_idempotent():
    for raw in ([(3, 0), (0, 3), (1, 1)], [(4, 0), (0, 5)], [(2, 0, 0), (0, 2, 0), (0, 0, 2)]):
        I = mo.minimalize(len(raw[0]), raw)
        c1 = mo.integral_closure(I)
        assert mo.integral_closure(c1).gens == c1.gens


def test_closure_powers_contain_ordinary_powers():
    I = mo.minimalize(2, [(3, 0), (0, 2)])
    for n in range(1, 5):
        closure = mo.integral_closure(I, n)
        assert closure.contains_ideal(mo.power(I, n))


def test_closure_data_matches_direct_computation():
    I = mo.minimalize(2, [(2, 0), (0, 3)])
    NP = mo.newton(I)
    data = mo.closure_data(I, 4, NP=NP)
    for n, (lam, nu_n) in enumerate(data, start=1):
        closure = mo.integral_closure(I, n, NP=NP)
        assert lam == mo.colength(closure)
        assert nu_n == mo.nu(closure)


def test_sample_integral_element_is_integral_not_member():
    J = mo.minimalize(2, [(4, 0), (0, 4)])
    h = mo.sample_integral_element(J, rng_seed=11)
    assert mo.np_contains(mo.newton(J), h)
    assert not J.contains_monomial(h)
    # deterministic in the seed
    assert h == mo.sample_integral_element(J, rng_seed=11)


def test_sample_integral_element_exhausted_on_closed_ideal():
    closed = mo.minimalize(2, [(1, 0), (0, 1)])
    with pytest.raises(mo.Exhausted):
        mo.sample_integral_element(closed, rng_seed=0)


def test_order_and_nu():
    I = mo.minimalize(2, [(3, 0), (1, 1), (0, 2)])
    assert mo.order(I) == 2
    assert mo.nu(I) == 3

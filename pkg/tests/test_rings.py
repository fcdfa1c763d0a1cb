import random

import pytest

from quadinv import (
    NotInImage, eq_go_even, express_in_generators, make_ring, normal_form, psi_embed,
    relation_generators,
)
from quadinv.poly import enumerate_monomials
from quadinv.rings import is_zero_go_even, lambda_free_names, odd_degree_injective
from quadinv.sampling import random_poly


def test_ring_inventories():
    assert set(make_ring("BGO_even", 4).names) == {"lambda", "a1", "a3", "b4", "b8", "d{1,2}"}
    assert set(make_ring("BGO_even", 2).names) == {"lambda", "a1", "b4"}
    assert set(make_ring("BO", 3).names) == {"w1", "w2", "w3"}
    assert set(make_ring("BGO_odd", 5).names) == {"wh2", "wh3", "wh4", "wh5", "c"}


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_dT_count(n):
    ring = make_ring("BGO_even", 2 * n)
    assert sum(v.family == "dT" for v in ring.vars) == 2 ** n - n - 1


def test_dT_degrees():
    ring = make_ring("BGO_even", 6)
    assert ring.var("d{1,2}").degree == 5
    assert ring.var("d{2,3}").degree == 9
    assert ring.var("d{1,2,3}").degree == 11


@pytest.mark.parametrize("family,rank", [("BGO_even", 3), ("BGO_odd", 4), ("BO", 0), ("XX", 2)])
def test_bad_rings(family, rank):
    with pytest.raises(ValueError):
        make_ring(family, rank)


def test_psi_examples():
    r = make_ring("BGO_even", 4)
    bo = make_ring("BO", 4)
    lam, a1 = r["lambda"], r["a1"]
    img = psi_embed(lam * a1)
    assert img.is_zero()
    img = psi_embed(r["d{1,2}"])
    assert img.bo_part == bo["w1"] * bo["w4"] + bo["w3"] * bo["w2"]
    assert not img.lambda_part
    img = psi_embed(lam * r["b4"])
    assert not img.bo_part and img.lambda_part == lam * r["b4"]


def test_eq_examples():
    r = make_ring("BGO_even", 4)
    assert eq_go_even(r["d{1,2}"] ** 2, r["a1"] ** 2 * r["b8"] + r["a3"] ** 2 * r["b4"])
    assert eq_go_even(r["lambda"] * r["a1"], r.zero)
    assert eq_go_even(r["lambda"] * r["a1"], 0)
    assert not eq_go_even(r["a1"], r["a3"])
    assert not eq_go_even(r["lambda"] * r["b4"], r.zero)


def test_normal_form_examples():
    r = make_ring("BGO_even", 4)
    assert normal_form(r["lambda"] * r["a1"] + r["a3"]) == r["a3"]
    assert normal_form(r.zero) == r.zero
    assert normal_form(r["d{1,2}"] ** 2 + r["a1"] ** 2 * r["b8"] + r["a3"] ** 2 * r["b4"]) == r.zero


@pytest.mark.parametrize("rank", [2, 4, 6])
def test_normal_form_idempotent_and_faithful(rank):
    rng = random.Random(rank)
    ring = make_ring("BGO_even", rank)
    for _ in range(40):
        p = random_poly(ring, rng, max_degree=14)
        nf = normal_form(p)
        assert normal_form(nf) == nf
        assert eq_go_even(nf, p)


@pytest.mark.parametrize("rank", [2, 4, 6, 8])
def test_relations_vanish(rank):
    ring = make_ring("BGO_even", rank)
    rels = relation_generators(ring)
    assert rels
    for label, r in rels:
        assert r, label
        assert is_zero_go_even(r), label


@pytest.mark.parametrize("rank", [4, 6])
def test_ideal_elements_vanish(rank):
    rng = random.Random(99)
    ring = make_ring("BGO_even", rank)
    rels = [r for _, r in relation_generators(ring)]
    for _ in range(50):
        m = random_poly(ring, rng, max_degree=6)
        assert is_zero_go_even(m * rng.choice(rels))


def test_psi_multiplicative():
    rng = random.Random(5)
    for rank in (2, 4, 6):
        ring = make_ring("BGO_even", rank)
        for _ in range(200):
            p, q = random_poly(ring, rng, 8), random_poly(ring, rng, 8)
            assert psi_embed(p * q) == psi_embed(p) * psi_embed(q)


def test_express_examples():
    r = make_ring("BGO_even", 4)
    bo = make_ring("BO", 4)
    assert express_in_generators(bo["w1"], r) == r["a1"]
    g = express_in_generators(bo["w1"] * bo["w4"] + bo["w3"] * bo["w2"], r)
    assert eq_go_even(g, r["d{1,2}"])
    with pytest.raises(NotInImage):
        express_in_generators(bo["w2"], r)


@pytest.mark.parametrize("rank", [2, 4, 6])
def test_express_round_trip(rank):
    ring = make_ring("BGO_even", rank)
    names = lambda_free_names(ring)
    for deg in range(17):
        for m in enumerate_monomials(ring, deg, names):
            g = ring.monomial(dict(zip(ring.names, m)))
            back = express_in_generators(psi_embed(g).bo_part, ring)
            assert eq_go_even(back, g)


@pytest.mark.parametrize("rank", [4, 6])
def test_pullback_injective_in_odd_degrees(rank):
    ring = make_ring("BGO_even", rank)
    for deg in range(1, 20, 2):
        assert odd_degree_injective(ring, deg)

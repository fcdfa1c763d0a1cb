import random
from functools import lru_cache

import pytest
from hypothesis import given, settings, strategies as st

from quadinv import (
    ContextMismatch, DegreeCapExceeded, HomMap, Polynomial, UnboundVariable,
    binom_mod2, make_ring, set_degree_cap, substitute,
)
from quadinv.poly import enumerate_monomials, identity_map
from quadinv.sampling import random_poly


@lru_cache(maxsize=None)
def pascal(n):
    row = [1]
    for _ in range(n):
        row = [1] + [(row[i] + row[i + 1]) % 2 for i in range(len(row) - 1)] + [1]
    return tuple(row)


def test_binom_small_cases():
    assert binom_mod2(5, 0) == 1
    assert binom_mod2(4, 2) == 0
    assert binom_mod2(3, 2) == 1
    assert binom_mod2(2, 3) == 0


def test_binom_against_pascal():
    for n in range(65):
        row = pascal(n)
        for k in range(n + 1):
            assert binom_mod2(n, k) == row[k], (n, k)


def test_addition_cancels(bo2):
    w1, w2 = bo2["w1"], bo2["w2"]
    assert (w1 + w2) + w1 == w2
    assert w1 + bo2.zero == w1
    assert w1 + w1 == bo2.zero


def test_multiplication(bo2):
    w1, w2 = bo2["w1"], bo2["w2"]
    assert (w1 + w2) * (w1 + w2) == w1 ** 2 + w2 ** 2
    assert bo2.one * w2 == w2
    assert (w1 + w2) * w1 == w1 ** 2 + w1 * w2
    assert 1 * w1 == w1 and w1 + 0 == w1


def test_mixed_rings_rejected(bo2):
    with pytest.raises(ContextMismatch):
        bo2["w1"] + make_ring("BO", 3)["w1"]


def test_substitute_examples():
    bo = make_ring("BO", 3)
    hat = make_ring("BGO_odd", 3)
    h = HomMap(hat, bo, {"wh2": bo["w1"] ** 2 + bo["w2"], "wh3": bo["w3"], "c": bo["w1"] ** 2})
    assert substitute(hat["wh2"], h) == bo["w1"] ** 2 + bo["w2"]
    assert h(hat["wh2"] ** 2) == bo["w1"] ** 4 + bo["w2"] ** 2
    p = hat["wh2"] * hat["c"] + hat["wh3"]
    assert identity_map(hat)(p) == p


def test_substitute_missing_image(bo2):
    h = HomMap(bo2, bo2, {"w1": bo2["w2"]})
    with pytest.raises(UnboundVariable):
        h(bo2["w2"])


def test_substitute_is_ring_map():
    rng = random.Random(7)
    src = make_ring("BO", 4)
    tgt = make_ring("BGO_even", 4)
    images = {v: random_poly(tgt, rng, max_degree=4) for v in src.names}
    h = HomMap(src, tgt, images)
    for _ in range(60):
        p, q = random_poly(src, rng, 6), random_poly(src, rng, 6)
        assert h(p * q) == h(p) * h(q)
        assert h(p + q) == h(p) + h(q)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_frobenius_and_self_cancel(seed):
    rng = random.Random(seed)
    ring = make_ring("BGO_even", 4)
    p, q = random_poly(ring, rng), random_poly(ring, rng)
    assert p + p == ring.zero
    assert (p + q) ** 2 == p ** 2 + q ** 2


def test_enumerate_small():
    bo = make_ring("BO", 2)
    got = {str(Polynomial(bo, (m,))) for m in enumerate_monomials(bo, 2)}
    assert got == {"w1^2", "w2"}
    assert enumerate_monomials(bo, 0) == (tuple([0, 0]),)
    r = make_ring("BGO_even", 2)
    got = {str(Polynomial(r, (m,))) for m in enumerate_monomials(r, 3, ["lambda", "a1"])}
    assert got == {"lambda*a1", "a1^3"}


def series_count(degrees, top):
    coeffs = [1] + [0] * top
    for d in degrees:
        for k in range(d, top + 1):
            coeffs[k] += coeffs[k - d]
    return coeffs


@pytest.mark.parametrize("family,rank", [
    ("BO", 4), ("BO", 6), ("BGO_odd", 5), ("BGO_even", 4), ("BGO_even", 6),
    ("BGL", 3), ("TodaA", 6),
])
def test_enumerate_matches_generating_function(family, rank):
    ring = make_ring(family, rank)
    expected = series_count(ring.degrees, 20)
    for deg in range(21):
        monos = enumerate_monomials(ring, deg)
        assert len(monos) == expected[deg]
        assert len(set(monos)) == len(monos)


def test_degree_cap(bo2):
    set_degree_cap(10)
    with pytest.raises(DegreeCapExceeded):
        enumerate_monomials(bo2, 11)
    assert enumerate_monomials(bo2, 10)


def test_output_order_is_independent_of_construction():
    r = make_ring("BGO_even", 4)
    p = r["b8"] + r["a1"] ** 2 * r["lambda"] ** 3 + r["d{1,2}"] * r["a3"]
    q = Polynomial(r, reversed(p.sorted_terms()))
    assert p.to_json() == q.to_json()
    assert str(p) == str(q)
    # one graded-lex order: highest degree first, then by exponents
    assert [r.mono_degree(m) for m in p.sorted_terms()] == sorted(
        (r.mono_degree(m) for m in p.terms), reverse=True)

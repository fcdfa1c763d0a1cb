from itertools import combinations

import pytest

from quadinv import (
    action_even, action_odd, binom_mod2, chern_to_go_even, chern_to_go_odd, eq_go_even,
    make_ring, phi_map, pistar_even, pistar_odd, theta_compat_check, w_to_what, what_to_w,
)
from quadinv.maps import action_dpq_closed, chern_equivariance_check, coaction_dT_by_solve


def test_pistar_odd():
    bo = make_ring("BO", 3)
    src = make_ring("BGO_odd", 3)
    h = pistar_odd(1)
    w1, w2, w3 = bo["w1"], bo["w2"], bo["w3"]
    assert h(src["c"]) == w1 ** 2
    assert h(src["wh2"]) == w1 ** 2 + w2
    assert h(src["wh3"]) == w1 * w2 + w3


def test_pistar_even():
    bo = make_ring("BO", 4)
    src = make_ring("BGO_even", 4)
    h = pistar_even(2)
    assert h(src["lambda"]) == bo.zero
    assert h(src["b4"]) == bo["w2"] ** 2
    assert h(src["d{1,2}"]) == bo["w1"] * bo["w4"] + bo["w3"] * bo["w2"]


def test_w_to_what_rank3():
    h = w_to_what(1)
    tgt = h.target
    w, wh2, wh3 = tgt["w"], tgt["wh2"], tgt["wh3"]
    assert h(h.source["w3"]) == w ** 3 + w * wh2 + wh3
    assert h(h.source["w2"]) == w ** 2 + wh2


@pytest.mark.parametrize("n", [1, 2, 3])
def test_change_of_basis_inverse(n):
    fwd, back = w_to_what(n), what_to_w(n)
    for name in fwd.source.names:
        assert back(fwd(fwd.source[name])) == fwd.source[name]
    for name in back.source.names:
        assert fwd(back(back.source[name])) == back.source[name]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_chern_even_low_classes(n):
    h = chern_to_go_even(n)
    r = h.target
    lam = r["lambda"]
    assert eq_go_even(h(h.source["cb1"]), r["a1"] ** 2 + (n % 2) * lam)
    c3 = n * (n - 1) * (2 * n - 1) // 6 % 2
    expect = r["a3"] ** 2 + c3 * lam ** 3 + ((n - 1) % 2) * lam * r["b4"]
    assert eq_go_even(h(h.source["cb3"]), expect)


def test_chern_even_rank4():
    h = chern_to_go_even(2)
    r = h.target
    assert eq_go_even(h(h.source["cb3"]), r["a3"] ** 2 + r["lambda"] ** 3 + r["lambda"] * r["b4"])


def test_chern_odd():
    h = chern_to_go_odd(1)
    r = h.target
    assert h(h.source["cb1"]) == r["c"]
    assert h(h.source["cb2"]) == r["c"] ** 2 + r["wh2"] ** 2
    assert h(h.source.one) == r.one


@pytest.mark.parametrize("hom", [
    pistar_odd(2), pistar_even(3), chern_to_go_even(3), chern_to_go_odd(2), w_to_what(2),
    action_even(3), action_odd(2),
], ids=lambda h: f"{h.source!r}->{h.target!r}")
def test_maps_preserve_degree(hom):
    for v in hom.source.vars:
        img = hom.image(v.name)
        assert img.is_homogeneous()
        assert not img or img.degree() == v.degree


def test_action_even_rank4():
    h = action_even(2)
    r = h.target
    t = r["t"]
    a1, a3, b4, b8, lam = r["a1"], r["a3"], r["b4"], r["b8"], r["lambda"]
    assert h(h.source["lambda"]) == lam
    assert eq_go_even(h(h.source["b8"]),
                      b8 + (a3 ** 2 + lam ** 3 + lam * b4) * t + b4 * t ** 2 + a1 ** 2 * t ** 3 + t ** 4)
    assert eq_go_even(h(h.source["b4"]), b4 + a1 ** 2 * t)
    assert eq_go_even(h(h.source["d{1,2}"]), r["d{1,2}"] + a1 * t ** 2)


def test_action_odd():
    h = action_odd(1)
    r = h.target
    assert h(h.source["wh2"]) == r["wh2"]
    assert h(h.source["c"]) == r["c"] + r["t"]
    assert h(h.source["c"] ** 2) == r["c"] ** 2 + r["t"] ** 2


@pytest.mark.parametrize("hom", [action_even(1), action_even(2), action_even(3), action_odd(1),
                                 action_odd(3)], ids=repr)
def test_counit(hom):
    zero_t = {v.name: hom.target[v.name] for v in hom.source.vars}
    for name in hom.source.names:
        img = hom.image(name)
        assert img.coefficients("t").get(0, img.ring.zero) == zero_t[name]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_theta_compatibility(n):
    ring = make_ring("BGO_even", 2 * n)
    for name in ring.names:
        assert theta_compat_check(n, ring[name]), name
    odd = make_ring("BGO_odd", 2 * n + 1)
    for name in odd.names:
        assert theta_compat_check(n, odd[name]), name


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_closed_dpq_formula(n):
    for p, q in combinations(range(1, n + 1), 2):
        assert eq_go_even(action_dpq_closed(n, p, q), coaction_dT_by_solve(n, (p, q)))


def test_unweighted_dpq_formula_fails_at_rank6():
    # the bare double sum overcounts d_{1,2} here
    assert not eq_go_even(action_dpq_closed(3, 2, 3, weighted=False), coaction_dT_by_solve(3, (2, 3)))
    assert eq_go_even(action_dpq_closed(2, 1, 2, weighted=False), coaction_dT_by_solve(2, (1, 2)))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_chern_equivariance(n):
    for r in range(1, 2 * n + 1):
        assert chern_equivariance_check(n, r)


@pytest.mark.parametrize("family,N", [("BO", 5), ("BGL", 3), ("TodaA", 6)])
def test_phi_coefficients(family, N):
    h = phi_map(family, N)
    var = "w" if family == "BO" else "t"
    for k in range(1, N + 1):
        img = h.image(h.source.names[k - 1])
        coeffs = img.coefficients(var)
        for i in range(0, k):
            want = binom_mod2(N - i, k - i)
            got = coeffs.get(k - i)
            assert bool(got) == bool(want), (k, i)

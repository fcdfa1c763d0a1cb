"""Ring homomorphisms between the models: pullbacks, changes of basis,
Chern-class maps and the coactions B(mu)^*.

Maps are indexed by ``n`` as in the literature: the even-rank maps concern
rank 2n, the odd-rank ones rank 2n+1.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import InternalInvariantViolation
from .poly import HomMap, Polynomial, Ring, Var, binom_mod2, dT_name
from .rings import (
    eq_go_even, express_in_generators, make_ring, pistar_even_map, subsets,
)

T_VAR = Var("t", 2, "t")
W_VAR = Var("w", 1, "w1-class")


def adjoin_t(ring: Ring, var: Var = T_VAR) -> Ring:
    return ring.adjoin(var)


def extend_map(hom: HomMap, extra: dict, source: Ring, target: Ring) -> HomMap:
    """``hom`` on base variables plus ``extra`` images on adjoined ones."""
    images = {v.name: img.to_ring(target) for v, img in zip(hom.source.vars, hom.images)
              if img is not None}
    images.update(extra)
    return HomMap(source, target, images, name=hom.name + "+")


# ---------------------------------------------------------------------------
# pullbacks and the odd-rank change of basis

@lru_cache(maxsize=None)
def pistar_odd(n: int) -> HomMap:
    """pi^*: H*(BGO(2n+1)) -> H*(BO(2n+1))."""
    r = 2 * n + 1
    src, bo = make_ring("BGO_odd", r), make_ring("BO", r)
    w1 = bo.gen("w1")
    images = {"c": w1 ** 2}
    for k in range(2, r + 1):
        img = binom_mod2(2 * n, k) * w1 ** k
        for i in range(2, k + 1):
            img = img + binom_mod2(2 * n + 1 - i, k - i) * w1 ** (k - i) * bo.gen(f"w{i}")
        images[f"wh{k}"] = img
    return HomMap(src, bo, images, name="pi*")


def pistar_even(n: int) -> HomMap:
    """pi^*: H*(BGO(2n)) -> H*(BO(2n))."""
    return pistar_even_map(2 * n)


@lru_cache(maxsize=None)
def w_to_what(n: int) -> HomMap:
    """Rewrite w_1..w_{2n+1} in the coordinates w, wh_2..wh_{2n+1} of BO(2n+1)."""
    r = 2 * n + 1
    bo, hat = make_ring("BO", r), make_ring("BO_hat", r)
    w = hat.gen("w")
    images = {"w1": w}
    for k in range(2, r + 1):
        img = binom_mod2(r, k) * w ** k
        for i in range(2, k + 1):
            img = img + binom_mod2(r - i, k - i) * w ** (k - i) * hat.gen(f"wh{i}")
        images[f"w{k}"] = img
    return HomMap(bo, hat, images, name="w->wh")


@lru_cache(maxsize=None)
def what_to_w(n: int) -> HomMap:
    """Inverse of :func:`w_to_what`."""
    r = 2 * n + 1
    bo, hat = make_ring("BO", r), make_ring("BO_hat", r)
    pi = pistar_odd(n)
    images = {"w": bo.gen("w1")}
    for k in range(2, r + 1):
        images[f"wh{k}"] = pi.image(f"wh{k}")
    return HomMap(hat, bo, images, name="wh->w")


# ---------------------------------------------------------------------------
# Chern-class maps

@lru_cache(maxsize=None)
def chern_matrices(n: int):
    """The unitriangular matrix A over F2[lambda^2] and its inverse B.

    Entries are polynomials in the ``lambda`` generator of BGO_even(2n);
    indices run 1..n (row/column 0 unused).
    """
    ring = make_ring("BGO_even", 2 * n)
    lam = ring.gen("lambda")
    A = [[ring.zero] * (n + 1) for _ in range(n + 1)]
    for r in range(1, n + 1):
        A[r][r] = ring.one
        for k in range(1, r):
            A[r][k] = binom_mod2(n - k, 2 * r - 2 * k) * lam ** (2 * r - 2 * k)
    # forward substitution; signs vanish in characteristic 2
    B = [[ring.zero] * (n + 1) for _ in range(n + 1)]
    for k in range(1, n + 1):
        B[k][k] = ring.one
        for r in range(k + 1, n + 1):
            acc = ring.zero
            for j in range(k, r):
                acc = acc + A[r][j] * B[j][k]
            B[r][k] = acc
    return A, B


@lru_cache(maxsize=None)
def f_poly(n: int, r: int) -> Polynomial:
    """The correction polynomial f_{n,r}(lambda, b_4, ..., b_{4r-4})."""
    ring = make_ring("BGO_even", 2 * n)
    lam = ring.gen("lambda")
    _, B = chern_matrices(n)
    out = binom_mod2(n, 2 * r - 1) * lam ** (2 * r - 2)
    for k in range(1, r):
        inner = ring.zero
        for j in range(1, k + 1):
            inner = inner + B[k][j] * (ring.gen(f"b{4 * j}") + binom_mod2(n, 2 * j) * lam ** (2 * j))
        out = out + binom_mod2(n - k, 2 * r - 1 - 2 * k) * lam ** (2 * r - 2 - 2 * k) * inner
    return out


@lru_cache(maxsize=None)
def chern_to_go_even(n: int) -> HomMap:
    """H*(BGL(2n)) -> H*(BGO(2n)) induced by GO(2n) < GL(2n)."""
    gl, ring = make_ring("BGL", 2 * n), make_ring("BGO_even", 2 * n)
    lam = ring.gen("lambda")
    images = {}
    for r in range(1, n + 1):
        images[f"cb{2 * r - 1}"] = ring.gen(f"a{2 * r - 1}") ** 2 + lam * f_poly(n, r)
        images[f"cb{2 * r}"] = ring.gen(f"b{4 * r}")
    return HomMap(gl, ring, images, name="p*")


@lru_cache(maxsize=None)
def chern_to_go_odd(n: int) -> HomMap:
    """H*(BGL(2n+1)) -> H*(BGO(2n+1)); the binomial top argument is read as 2n+1."""
    m = 2 * n + 1
    gl, ring = make_ring("BGL", m), make_ring("BGO_odd", m)
    c = ring.gen("c")
    images = {}
    for r in range(1, m + 1):
        img = binom_mod2(m, r) * c ** r
        for i in range(2, r + 1):
            img = img + binom_mod2(m - i, r - i) * c ** (r - i) * ring.gen(f"wh{i}") ** 2
        images[f"cb{r}"] = img
    return HomMap(gl, ring, images, name="p*")


# ---------------------------------------------------------------------------
# coactions

def _indexed(ring: Ring, k: int) -> Polynomial:
    prefix = {"BO": "w", "TodaA": "x", "BGL": "cb"}[ring.family]
    return ring.gen(f"{prefix}{k}")


@lru_cache(maxsize=None)
def phi_map(family: str, N: int) -> HomMap:
    """The coaction x_r -> sum_i C(N-i, r-i) u^{r-i} x_i on BO(N), BGL(N) or A = F2[x_1..x_N].

    The adjoined variable u is ``w`` (degree 1) for BO, ``t`` of degree 2
    for BGL and ``t`` of degree 1 for the abstract ring A.
    """
    ring = make_ring(family, N)
    var = {"BO": W_VAR, "BGL": T_VAR, "TodaA": Var("t", 1, "t")}[family]
    tgt = ring.adjoin(var)
    u = tgt.gen(var.name)
    images = {}
    for r in range(1, N + 1):
        img = tgt.zero
        for i in range(0, r + 1):
            if binom_mod2(N - i, r - i):
                xi = tgt.one if i == 0 else _indexed(ring, i).to_ring(tgt)
                img = img + u ** (r - i) * xi
        images[ring.vars[r - 1].name] = img
    return HomMap(ring, tgt, images, name="phi")


@lru_cache(maxsize=None)
def theta_map(ring_family: str, rank: int) -> HomMap:
    """H*(BGO(r))[t] -> H*(BO(r))[w]: pi^* on coefficients and t -> w^2."""
    src = adjoin_t(make_ring(ring_family, rank))
    bo_w = make_ring("BO", rank).adjoin(W_VAR)
    pi = pistar_even_map(rank) if ring_family == "BGO_even" else pistar_odd(rank // 2)
    return extend_map(pi, {"t": bo_w.gen("w") ** 2}, src, bo_w)


def _express_with_t(y: Polynomial, ring: Ring) -> Polynomial:
    """Pull back y in BO(2n)[w] along theta, for y of odd degree."""
    tgt = adjoin_t(ring)
    t = tgt.gen("t")
    bo = make_ring("BO", ring.rank)
    out = tgt.zero
    for k, coef in y.coefficients("w").items():
        if k % 2:
            raise InternalInvariantViolation("odd power of w in the image of theta")
        out = out + express_in_generators(coef.to_ring(bo), ring).to_ring(tgt) * t ** (k // 2)
    return out


def coaction_dT_by_solve(n: int, T) -> Polynomial:
    """B(mu)^* d_T through the BO side and a pullback along theta."""
    ring = make_ring("BGO_even", 2 * n)
    pi = pistar_even_map(2 * n)
    y = phi_map("BO", 2 * n)(pi.image(dT_name(T)))
    return _express_with_t(y, ring)


@lru_cache(maxsize=None)
def action_even(n: int) -> HomMap:
    """B(mu)^*: H*(BGO(2n)) -> H*(BGO(2n))[t]."""
    ring = make_ring("BGO_even", 2 * n)
    tgt = adjoin_t(ring)
    t = tgt.gen("t")
    g = lambda name: tgt.gen(name)  # noqa: E731
    images = {"lambda": g("lambda")}
    for r in range(1, n + 1):
        img = tgt.zero
        for i in range(1, r + 1):
            img = img + binom_mod2(2 * n + 1 - 2 * i, 2 * r - 2 * i) * g(f"a{2 * i - 1}") * t ** (r - i)
        images[f"a{2 * r - 1}"] = img
    for r in range(1, n + 1):
        img = binom_mod2(2 * n, 2 * r) * t ** (2 * r)
        for i in range(1, r + 1):
            inner = (g(f"b{4 * i}") + g("lambda") * f_poly(n, i).to_ring(tgt) * t
                     + g(f"a{2 * i - 1}") ** 2 * t)
            img = img + binom_mod2(2 * n - 2 * i, 2 * r - 2 * i) * inner * t ** (2 * r - 2 * i)
        images[f"b{4 * r}"] = img
    for T in subsets(n):
        images[dT_name(T)] = coaction_dT_by_solve(n, T)
    return HomMap(ring, tgt, images, name="B(mu)*")


def action_dpq_closed(n: int, p: int, q: int, weighted: bool = True) -> Polynomial:
    """Closed formula for B(mu)^* d_{p,q}, p < q.

    With ``weighted`` the double sum over d_{i,j} carries the factor
    C(2n-2i, 2p-2i) C(2n-2j, 2q-2j), as the BO-side coaction forces.
    Without it the bare sum is used; that version is wrong from n = 3 on.
    """
    ring = make_ring("BGO_even", 2 * n)
    tgt = adjoin_t(ring)
    t = tgt.gen("t")
    aa = lambda i: tgt.gen(f"a{2 * i - 1}")  # noqa: E731
    out = tgt.zero
    for i in range(1, p + 1):
        out = out + binom_mod2(2 * n, 2 * q) * binom_mod2(2 * n - 2 * i, 2 * p - 2 * i) * aa(i) * t ** (p + q - i)
    for j in range(1, q + 1):
        out = out + binom_mod2(2 * n, 2 * p) * binom_mod2(2 * n - 2 * j, 2 * q - 2 * j) * aa(j) * t ** (p + q - j)
    for i in range(1, p + 1):
        for j in range(1, q + 1):
            if i == j:
                continue
            if weighted and not (binom_mod2(2 * n - 2 * i, 2 * p - 2 * i)
                                 and binom_mod2(2 * n - 2 * j, 2 * q - 2 * j)):
                continue
            out = out + t ** (p + q - i - j) * tgt.gen(dT_name((min(i, j), max(i, j))))
    return out


@lru_cache(maxsize=None)
def action_odd(n: int) -> HomMap:
    """B(mu)^* on H*(BGO(2n+1)): c -> c + t, wh_i fixed."""
    ring = make_ring("BGO_odd", 2 * n + 1)
    tgt = adjoin_t(ring)
    images = {v.name: tgt.gen(v.name) for v in ring.vars}
    images["c"] = tgt.gen("c") + tgt.gen("t")
    return HomMap(ring, tgt, images, name="B(mu)*")


def theta_compat_check(n: int, x: Polynomial) -> bool:
    """Does theta(B(mu)^* x) equal B(mu)^*(pi^* x) in H*(BO)[w]?"""
    ring = x.ring
    if ring.family == "BGO_even":
        act, pi = action_even(n), pistar_even(n)
    else:
        act, pi = action_odd(n), pistar_odd(n)
    lhs = theta_map(ring.family, ring.rank)(act(x))
    rhs = phi_map("BO", ring.rank)(pi(x))
    return lhs == rhs


def chern_equivariance_check(n: int, r: int) -> bool:
    """B(mu)^* commutes with the Chern map on cb_r (t of degree 2 on both sides)."""
    gl = make_ring("BGL", 2 * n)
    ring = make_ring("BGO_even", 2 * n)
    tgt = adjoin_t(ring)
    chern = chern_to_go_even(n)
    chern_t = extend_map(chern, {"t": tgt.gen("t")}, adjoin_t(gl), tgt)
    lhs = action_even(n)(chern.image(f"cb{r}"))
    rhs = chern_t(phi_map("BGL", 2 * n).image(f"cb{r}"))
    return eq_go_even(lhs, rhs)

"""Quadric invariants: the primitivity test and generating sets."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import ContextMismatch, InternalInvariantViolation, NotInImage, UnsupportedRank
from .generators import GeneratorSet
from .maps import action_even, action_odd, chern_to_go_even, phi_map
from .gf2 import GF2Solver, KeyIndex, bits
from .poly import Polynomial, Ring, enumerate_monomials
from .rings import express_in_generators, is_zero_go_even, make_ring, normal_form, odd_degree_injective
from .toda import toda_context


def _coaction_defect(P: Polynomial) -> Polynomial:
    """B(mu)^*(P) - 1 (x) P, before any reduction."""
    fam = P.ring.family
    if fam == "BGO_even":
        img = action_even(P.ring.rank // 2)(P)
    elif fam == "BGO_odd":
        img = action_odd(P.ring.rank // 2)(P)
    elif fam in ("BO", "BGL", "TodaA"):
        img = phi_map(fam, P.ring.rank)(P)
    else:
        raise ContextMismatch(f"no coaction on {P.ring!r}")
    return img + P.to_ring(img.ring)


def primitive_check(P: Polynomial) -> bool:
    """Is P a quadric invariant (a primitive of the ring's coaction)?"""
    defect = _coaction_defect(P)
    if P.ring.family == "BGO_even":
        return is_zero_go_even(defect)
    return not defect


def primitive_witness(P: Polynomial) -> Polynomial:
    """The t-dependent part of B(mu)^*(P), coefficients in normal form; 0 iff primitive."""
    defect = _coaction_defect(P)
    if P.ring.family != "BGO_even":
        return defect
    tgt = defect.ring
    t = tgt.gen("t")
    out = tgt.zero
    for k, coef in defect.coefficients("t").items():
        out = out + normal_form(coef.to_ring(P.ring)).to_ring(tgt) * t ** k
    return out


def primitive_subspace(ring: Ring, degree: int) -> list:
    """A basis of the primitives of one degree, for the free rings (not BGO_even)."""
    if ring.family == "BGO_even":
        raise ContextMismatch("primitive_subspace works on free polynomial rings only")
    monos = enumerate_monomials(ring, degree)
    rows = KeyIndex()
    cols = [rows.vector(_coaction_defect(Polynomial(ring, frozenset([m]))).terms) for m in monos]
    return [Polynomial(ring, frozenset(monos[j] for j in bits(k))) for k in GF2Solver(cols).kernel]


@dataclass(frozen=True)
class Rank4m2Data:
    """Everything built on the way to the rank 4m+2 generators."""

    m: int
    generators: GeneratorSet
    alpha: dict      # i -> alpha'_{2i-1}
    delta: dict      # T -> delta'_T
    g: dict          # i -> g_{2i+1}
    b_hat: dict      # i -> p^*(c^_{2i})
    c_hat: dict      # k -> c^_k in BGL(4m+2)
    beta: dict       # i -> beta'_{4i}


def _pullback_odd(h: Polynomial, ring: Ring, what: str) -> Polynomial:
    deg = h.degree()
    if not odd_degree_injective(ring, deg):
        raise InternalInvariantViolation(f"pi^* not injective in degree {deg}")
    try:
        return express_in_generators(h, ring)
    except NotInImage as exc:
        raise InternalInvariantViolation(f"{what} has no preimage under pi^*") from exc


@lru_cache(maxsize=None)
def rank_4m2_data(m: int) -> Rank4m2Data:
    if m < 0:
        raise ValueError("m must be nonnegative")
    N, n = 4 * m + 2, 2 * m + 1
    ring = make_ring("BGO_even", N)
    bo = toda_context(N, "BO")
    gl = toda_context(N, "BGL")
    w1, w2 = bo.x(1), bo.x(2)
    chern = chern_to_go_even(n)

    alpha = {i: _pullback_odd(bo.alpha(i), ring, f"alpha_{2 * i - 1}") for i in range(1, n + 1)}
    delta = {}
    for r in range(2, n):
        for T in combinations(range(2, n + 1), r):
            delta[T] = _pullback_odd(bo.delta(T), ring, f"delta_{T}")
    c_hat = {k: gl.hat(k) for k in range(1, N + 1)}
    b_hat, g, beta = {}, {}, {}
    for i in range(2, n + 1):
        b_hat[i] = chern(c_hat[2 * i])
        g[i] = _pullback_odd(bo.hat(2 * i) * w1 + bo.hat(2 * i - 1) * w2, ring, f"g_{2 * i + 1}")
        beta[i] = b_hat[i] + alpha[i] * g[i]

    entries = [("lambda", ring.gen("lambda")), ("alpha'_1", alpha[1])]
    entries += [(f"alpha'_{2 * i - 1}", alpha[i]) for i in range(2, n + 1)]
    entries += [(f"beta'_{4 * i}", beta[i]) for i in range(2, n + 1)]
    entries += [("delta'_{" + ",".join(map(str, T)) + "}", p) for T, p in delta.items()]
    gens = GeneratorSet(ring, tuple(entries))
    return Rank4m2Data(m, gens, alpha, delta, g, b_hat, c_hat, beta)


def construct_rank_4m2_generators(m: int) -> GeneratorSet:
    return rank_4m2_data(m).generators


@lru_cache(maxsize=None)
def ph_generators(ring: Ring) -> GeneratorSet:
    """Generators of the ring of quadric invariants of H*(BGO(r))."""
    r = ring.rank
    if ring.family == "BGO_odd":
        return GeneratorSet(ring, tuple((f"wh{k}", ring.gen(f"wh{k}")) for k in range(2, r + 1)))
    if ring.family != "BGO_even":
        raise ContextMismatch(f"generating sets are provided for BGO rings, not {ring!r}")
    if r % 4 == 2:
        return construct_rank_4m2_generators((r - 2) // 4)
    if r == 4:
        g = ring.gen
        return GeneratorSet(ring, (
            ("lambda", g("lambda")),
            ("a1", g("a1")),
            ("a1*a3 + b4", g("a1") * g("a3") + g("b4")),
            ("a3^2 + a1*d{1,2}", g("a3") ** 2 + g("a1") * g("d{1,2}")),
        ))
    raise UnsupportedRank(f"no generating set is known for rank {r}")

"""Concrete models of the cohomology rings of BO(n), BGO(n), BGL(n) over F2.

Everything except H*(BGO(2n)) is a free polynomial ring.  H*(BGO(2n)) is a
quotient of the free ring on lambda, a_{2i-1}, b_{4i}, d_T by the five
relation families in ``relation_generators``; equality there is decided by the
two-component embedding ``psi_embed``:

* ``bo_part``: the pullback to H*(BO(2n)) (lambda -> 0, a -> w_odd,
  b -> w_even^2, d_T -> s(v_T)),
* ``lambda_part``: a, d -> 0, keeping lambda and b.

The kernel of the pullback is lambda * F2[lambda, b], on which the second
component is injective, so the pair is injective on the quotient.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from .errors import ContextMismatch, InternalInvariantViolation, NoSolution, NotInImage
from .gf2 import GF2Solver, KeyIndex, bits
from .poly import HomMap, Polynomial, Ring, Var, dT_name, enumerate_monomials

FAMILIES = ("BO", "BO_hat", "BGO_odd", "BGO_even", "BGL", "TodaA")


def subsets(n: int, min_size: int = 2, universe: Iterable[int] | None = None) -> list:
    """Subsets of ``universe`` (default 1..n) of size >= min_size, ordered by (size, lex)."""
    items = list(universe) if universe is not None else list(range(1, n + 1))
    out = []
    for r in range(min_size, len(items) + 1):
        out.extend(combinations(items, r))
    return out


@lru_cache(maxsize=None)
def make_ring(family: str, rank: int) -> Ring:
    """Build the ring model for ``family`` at ``rank``.

    For BGO_even and BGO_odd, ``rank`` is the matrix size r (so BGO_even(4)
    has n = 2).  BO_hat(2n+1) is H*(BO(2n+1)) in the coordinates
    w, wh2, ..., wh_{2n+1}.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown ring family {family!r}")
    if rank < 1:
        raise ValueError("rank must be at least 1")
    if family == "BO":
        vs = [Var(f"w{i}", i, "w", (i,)) for i in range(1, rank + 1)]
    elif family == "TodaA":
        vs = [Var(f"x{i}", i, "x", (i,)) for i in range(1, rank + 1)]
    elif family == "BGL":
        vs = [Var(f"cb{i}", 2 * i, "cbar", (i,)) for i in range(1, rank + 1)]
    elif family in ("BGO_odd", "BO_hat"):
        if rank % 2 == 0:
            raise ValueError(f"{family} needs an odd rank, got {rank}")
        vs = [Var(f"wh{i}", i, "wh", (i,)) for i in range(2, rank + 1)]
        if family == "BGO_odd":
            vs.append(Var("c", 2, "c"))
        else:
            vs.insert(0, Var("w", 1, "w1-class"))
    else:
        if rank % 2:
            raise ValueError(f"BGO_even needs an even rank, got {rank}")
        n = rank // 2
        vs = [Var("lambda", 2, "lambda")]
        vs += [Var(f"a{2 * i - 1}", 2 * i - 1, "a", (i,)) for i in range(1, n + 1)]
        vs += [Var(f"b{4 * i}", 4 * i, "b", (i,)) for i in range(1, n + 1)]
        vs += [Var(dT_name(T), 2 * sum(T) - 1, "dT", tuple(T)) for T in subsets(n)]
    vs.sort(key=lambda v: v.sort_key)
    return Ring(family, rank, tuple(vs))


def half_rank(ring: Ring) -> int:
    if ring.family != "BGO_even":
        raise ContextMismatch(f"expected a BGO_even ring, got {ring!r}")
    return ring.rank // 2


def a(ring: Ring, i: int) -> Polynomial:
    """a_{2i-1}."""
    return ring.gen(f"a{2 * i - 1}")


def b(ring: Ring, i: int) -> Polynomial:
    """b_{4i}."""
    return ring.gen(f"b{4 * i}")


def d(ring: Ring, T: Iterable[int]) -> Polynomial:
    """d_T, extended by d_{} = 0 and d_{i} = a_{2i-1}."""
    T = tuple(sorted(T))
    if not T:
        return ring.zero
    if len(T) == 1:
        return a(ring, T[0])
    return ring.gen(dT_name(T))


def v_T(bo: Ring, T: Iterable[int]) -> Polynomial:
    p = bo.one
    for j in T:
        p = p * bo.gen(f"w{2 * j}")
    return p


@lru_cache(maxsize=None)
def pistar_even_map(rank: int) -> HomMap:
    """pi^*: H*(BGO(2n)) -> H*(BO(2n))."""
    src = make_ring("BGO_even", rank)
    bo = make_ring("BO", rank)
    n = rank // 2
    w = lambda k: bo.gen(f"w{k}")  # noqa: E731
    images = {"lambda": bo.zero}
    for i in range(1, n + 1):
        images[f"a{2 * i - 1}"] = w(2 * i - 1)
        images[f"b{4 * i}"] = w(2 * i) ** 2
    for T in subsets(n):
        images[dT_name(T)] = sum((w(2 * i - 1) * v_T(bo, set(T) - {i}) for i in T), bo.zero)
    return HomMap(src, bo, images, name="pi*")


@lru_cache(maxsize=None)
def _strip_map(rank: int) -> HomMap:
    ring = make_ring("BGO_even", rank)
    images = {}
    for v in ring.vars:
        images[v.name] = ring.gen(v.name) if v.family in ("lambda", "b") else ring.zero
    return HomMap(ring, ring, images, name="strip")


@dataclass(frozen=True)
class EmbeddingImage:
    bo_part: Polynomial
    lambda_part: Polynomial

    def __add__(self, other: "EmbeddingImage") -> "EmbeddingImage":
        return EmbeddingImage(self.bo_part + other.bo_part, self.lambda_part + other.lambda_part)

    def __mul__(self, other: "EmbeddingImage") -> "EmbeddingImage":
        return EmbeddingImage(self.bo_part * other.bo_part, self.lambda_part * other.lambda_part)

    def is_zero(self) -> bool:
        return not self.bo_part and not self.lambda_part


def psi_embed(P: Polynomial) -> EmbeddingImage:
    """The faithful image of ``P`` (a BGO_even polynomial) in BO x F2[lambda, b]."""
    half_rank(P.ring)
    if P.ring.base != P.ring.nvars:
        raise ContextMismatch("psi_embed takes base-ring polynomials; split adjoined variables first")
    return EmbeddingImage(pistar_even_map(P.ring.rank)(P), _strip_map(P.ring.rank)(P))


def _split_adjoined(P: Polynomial) -> dict:
    """Group terms by the exponents of adjoined variables, projecting to the base ring."""
    ring = P.ring
    k = ring.base
    base = ring.base_ring()
    groups: dict = {}
    for m in P.terms:
        groups.setdefault(m[k:], set()).add(m[:k])
    return {tail: Polynomial(base, frozenset(ms)) for tail, ms in groups.items()}


def is_zero_go_even(P: Polynomial) -> bool:
    """True iff ``P`` vanishes in H*(BGO(2n)) (adjoined variables treated as free)."""
    return all(psi_embed(c).is_zero() for c in _split_adjoined(P).values())


def eq_go_even(P: Polynomial, Q: Polynomial) -> bool:
    """Equality in H*(BGO(2n)), or in H*(BGO(2n))[t, ...] when variables were adjoined."""
    if isinstance(Q, int):
        Q = P.ring.one if Q % 2 else P.ring.zero
    if P.ring != Q.ring:
        raise ContextMismatch(f"{P.ring!r} vs {Q.ring!r}")
    half_rank(P.ring)
    return is_zero_go_even(P + Q)


# ---------------------------------------------------------------------------
# per-degree linear algebra

def _psi_vector(index: KeyIndex, img: EmbeddingImage) -> int:
    return index.vector([("w", m) for m in img.bo_part.terms] +
                        [("l", m) for m in img.lambda_part.terms])


@lru_cache(maxsize=None)
def _normal_basis(ring: Ring, degree: int):
    """Basis monomials of H^degree(BGO(2n)) and a solver over their Psi-images."""
    index = KeyIndex()
    monos = enumerate_monomials(ring, degree)
    solver = GF2Solver([_psi_vector(index, psi_embed(Polynomial(ring, (m,)))) for m in monos])
    return monos, solver, index


def normal_form(P: Polynomial) -> Polynomial:
    """Canonical representative of the class of ``P`` in H*(BGO(2n)).

    Per degree, the basis consists of the generator monomials (in
    graded-lex order) whose images are independent of the images of the
    monomials before them; ``P`` is rewritten over that basis.
    """
    ring = P.ring
    half_rank(ring)
    out = ring.zero
    for deg, comp in P.homogeneous_components().items():
        monos, solver, index = _normal_basis(ring, deg)
        img = psi_embed(comp)
        keys = [("w", m) for m in img.bo_part.terms] + [("l", m) for m in img.lambda_part.terms]
        if any(k not in index.pos for k in keys):
            raise InternalInvariantViolation("image vector outside the span of all monomials")
        vec = 0
        for k in keys:
            vec ^= 1 << index.pos[k]
        try:
            x = solver.solve_basic(vec)
        except NoSolution as exc:
            raise InternalInvariantViolation("normal_form: class not spanned") from exc
        out = out + Polynomial(ring, frozenset(monos[j] for j in bits(x)))
    return out


def lambda_free_names(ring: Ring) -> list:
    return [v.name for v in ring.vars if v.family != "lambda"]


@lru_cache(maxsize=None)
def _express_system(ring: Ring, degree: int):
    pistar = pistar_even_map(ring.rank)
    monos = enumerate_monomials(ring, degree, lambda_free_names(ring))
    index = KeyIndex()
    cols = [index.vector(pistar(Polynomial(ring, (m,))).terms) for m in monos]
    return monos, GF2Solver(cols), index


def express_in_generators(h: Polynomial, ring: Ring) -> Polynomial:
    """A lambda-free G in the generators of ``ring`` = BGO_even(2n) with pi^*(G) = h.

    Raises :class:`NotInImage` when ``h`` is not in the kernel of the
    derivation s (equivalently not in the image of pi^*).
    """
    half_rank(ring)
    bo = make_ring("BO", ring.rank)
    if h.ring != bo:
        raise ContextMismatch(f"expected a polynomial in {bo!r}, got {h.ring!r}")
    out = ring.zero
    for deg, comp in h.homogeneous_components().items():
        monos, solver, index = _express_system(ring, deg)
        if any(m not in index.pos for m in comp.terms):
            raise NotInImage(f"{comp} is not a pullback from BGO({ring.rank})")
        vec = 0
        for m in comp.terms:
            vec ^= 1 << index.pos[m]
        try:
            x = solver.solve(vec)
        except NoSolution:
            raise NotInImage(f"{comp} is not a pullback from BGO({ring.rank})") from None
        out = out + Polynomial(ring, frozenset(monos[j] for j in bits(x)))
    return out


def odd_degree_injective(ring: Ring, degree: int) -> bool:
    """Check that pi^* is injective on H^degree(BGO(2n)) for odd ``degree``.

    Compares the rank of the pullback images with the dimension of the
    quotient computed from Psi.
    """
    _, pulled, _ = _express_system(ring, degree)
    _, quotient, _ = _normal_basis(ring, degree)
    return pulled.rank == quotient.rank


# ---------------------------------------------------------------------------
# the relation ideal

def relation_generators(ring: Ring) -> list:
    """All generators of the relation ideal, as ``(label, polynomial)`` pairs."""
    n = half_rank(ring)
    lam = ring.gen("lambda")
    rels = []
    for i in range(1, n + 1):
        rels.append((f"lambda*a{2 * i - 1}", lam * a(ring, i)))
    Ts = subsets(n)
    for T in Ts:
        rels.append((f"lambda*{dT_name(T)}", lam * d(ring, T)))
    for T in subsets(n, 3):
        r = sum((a(ring, i) * d(ring, set(T) - {i}) for i in T), ring.zero)
        rels.append((f"sum a*d for {dT_name(T)}", r))
    for i, j in combinations(range(1, n + 1), 2):
        r = d(ring, (i, j)) ** 2 + a(ring, i) ** 2 * b(ring, j) + a(ring, j) ** 2 * b(ring, i)
        rels.append((f"{dT_name((i, j))}^2", r))
    for T in Ts:
        for U in Ts:
            if T == U and len(T) == 2:
                continue
            r = d(ring, T) * d(ring, U)
            sT, sU = set(T), set(U)
            for p in T:
                term = a(ring, p)
                for q in (sT & sU) - {p}:
                    term = term * b(ring, q)
                r = r + term * d(ring, (sT - {p}) ^ sU)
            rels.append((f"{dT_name(T)}*{dT_name(U)}", r))
    return rels

"""Toda's comodule A = F2[x_1..x_N] with the coaction phi, the subspace B and
its preimage map, the hat elements and the generators of the primitive ring.

Everything is written for a :class:`TodaContext`, which can sit on the
abstract ring A (deg x_i = i), on H*(BO(N)) (x_i = w_i) or on H*(BGL(N))
(x_i = cb_i, degrees doubled); the combinatorics do not change.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import InternalInvariantViolation, MathDomainError, NoSolution
from .generators import GeneratorSet
from .gf2 import GF2Solver, KeyIndex, bits
from .maps import phi_map
from .poly import Polynomial, binom_mod2, enumerate_monomials
from .rings import make_ring

_PREFIX = {"TodaA": "x", "BO": "w", "BGL": "cb"}
_COVAR = {"TodaA": "t", "BO": "w", "BGL": "t"}


@dataclass(frozen=True)
class RecursionDiscrepancy:
    index: int
    from_recursion: Polynomial
    from_solve: Polynomial


class TodaContext:
    def __init__(self, N: int, family: str = "TodaA"):
        if N < 1:
            raise ValueError("N must be positive")
        self.N = N
        self.family = family
        self.ring = make_ring(family, N)
        self.phi = phi_map(family, N)
        self.covar = _COVAR[family]
        self.q = N & -N
        self.h = N // self.q
        self._hats: dict = {}
        self._B: dict = {}

    def __repr__(self):
        return f"TodaContext(N={self.N}, {self.family})"

    def x(self, k: int) -> Polynomial:
        if k == 0:
            return self.ring.one
        return self.ring.gen(f"{_PREFIX[self.family]}{k}")

    # ---- coaction and its components ------------------------------------
    def coaction(self, P: Polynomial) -> Polynomial:
        return self.phi(P)

    def components(self, P: Polynomial) -> dict:
        """``{i: d_i(P)}`` for the nonzero components."""
        return {i: c.to_ring(self.ring) for i, c in self.phi(P).coefficients(self.covar).items() if c}

    def d(self, P: Polynomial, i: int) -> Polynomial:
        if i < 0:
            raise ValueError("i must be nonnegative")
        return self.components(P).get(i, self.ring.zero)

    def is_in_B(self, P: Polynomial) -> bool:
        return all(i < self.q for i in self.components(P))

    def is_primitive(self, P: Polynomial) -> bool:
        return self.phi(P) == P.to_ring(self.phi.target)

    # ---- B and psi^{-1} -------------------------------------------------
    def _B_basis(self, degree: int):
        """A basis of B in one degree, with its solver modulo x_q."""
        hit = self._B.get(degree)
        if hit is not None:
            return hit
        monos = enumerate_monomials(self.ring, degree)
        tgt = self.phi.target
        tpos = tgt.index(self.covar)
        rows = KeyIndex()
        cols = []
        for m in monos:
            img = self.phi(Polynomial(self.ring, frozenset([m])))
            cols.append(rows.vector(tm for tm in img.terms if tm[tpos] >= self.q))
        kernel = GF2Solver(cols).kernel
        basis = [Polynomial(self.ring, frozenset(monos[j] for j in bits(k))) for k in kernel]
        qpos = self.ring.index(f"{_PREFIX[self.family]}{self.q}")
        red = KeyIndex()
        red_cols = [red.vector(m for m in b.terms if m[qpos] == 0) for b in basis]
        solver = GF2Solver(red_cols)
        if solver.rank != len(basis):
            raise InternalInvariantViolation(f"B -> A/x_q A is not injective in degree {degree}")
        hit = self._B[degree] = (basis, red, solver, qpos)
        return hit

    def psi_inverse(self, a: Polynomial) -> Polynomial:
        """The unique b in B with b = a modulo x_q (``a`` homogeneous)."""
        if a.ring != self.ring:
            a = a.to_ring(self.ring)
        if not a:
            return self.ring.zero
        if not a.is_homogeneous():
            raise MathDomainError("psi_inverse needs a homogeneous input")
        basis, red, solver, qpos = self._B_basis(a.degree())
        keys = [m for m in a.terms if m[qpos] == 0]
        if any(m not in red.pos for m in keys):
            raise InternalInvariantViolation("residue outside the span of B")
        try:
            x = solver.solve_basic(red.vector(keys))
        except NoSolution as exc:
            raise InternalInvariantViolation(str(exc)) from exc
        out = self.ring.zero
        for j in bits(x):
            out = out + basis[j]
        return out

    # ---- hat elements ---------------------------------------------------
    def hat(self, k: int) -> Polynomial:
        if not 1 <= k <= self.N:
            raise ValueError(f"index {k} out of range 1..{self.N}")
        p = self._hats.get(k)
        if p is None:
            top = -(-k // self.q) * self.q
            if k <= self.q:
                p = self.x(k)
            elif top == k:
                p = self.psi_inverse(self.x(k))
            else:
                # x^_{kq-i} = d_i(x^_{kq}); this is not psi^{-1}(x_{kq-i}) in general
                p = self.d(self.hat(top), top - k)
            self._hats[k] = p
        return p

    def hats(self) -> tuple:
        return tuple(self.hat(k) for k in range(1, self.N + 1))

    def recursion_discrepancies(self) -> list:
        """Compare the s/t recursion with the solved hats, indices >= 3 (N = 4m+2)."""
        self._require_4m2()
        N = self.N
        x2, x1 = self.x(2), self.x(1)
        s, t = [self.ring.one], [self.ring.zero]
        for _ in range(N):
            s.append(x2 * t[-1])
            t.append(s[-2] + x1 * t[-1])
        out = []
        for r in range(1, N // 2 + 1):
            even = odd = self.ring.zero
            for i in range(0, 2 * r + 1):
                if binom_mod2(N - 2 * r + i, i):
                    even = even + self.x(2 * r - i) * s[i]
                    odd = odd + self.x(2 * r - i) * t[i]
            for k, val in ((2 * r - 1, odd), (2 * r, even)):
                if k >= 3 and val != self.hat(k):
                    out.append(RecursionDiscrepancy(k, val, self.hat(k)))
        return out

    # ---- the primitive generators for N = 4m+2 ---------------------------
    def _require_4m2(self):
        if self.N % 4 != 2:
            raise MathDomainError(f"N = {self.N} is not congruent to 2 mod 4")

    def star(self, b: Polynomial, c: Polynomial) -> Polynomial:
        return b * c + self.d(b, 1) * self.d(c, 1) * self.x(2)

    def alpha(self, k: int) -> Polynomial:
        return self.hat(2 * k - 1)

    def beta(self, k: int) -> Polynomial:
        h = self.hat(2 * k)
        return self.star(h, h) + self.x(1) * self.hat(2 * k - 1) * h

    def delta(self, T) -> Polynomial:
        T = sorted(T)
        acc = self.hat(2 * T[0])
        for p in T[1:]:
            acc = self.star(acc, self.hat(2 * p))
        return self.d(acc, 1)

    def generators(self) -> GeneratorSet:
        self._require_4m2()
        top = self.N // 2
        entries = [(f"alpha_{2 * k - 1}", self.alpha(k)) for k in range(1, top + 1)]
        entries += [(f"beta_{4 * k}", self.beta(k)) for k in range(2, top + 1)]
        for r in range(2, top):
            for T in combinations(range(2, top + 1), r):
                entries.append(("delta_{" + ",".join(map(str, T)) + "}", self.delta(T)))
        return GeneratorSet(self.ring, tuple(entries))


@lru_cache(maxsize=None)
def toda_context(N: int, family: str = "TodaA") -> TodaContext:
    return TodaContext(N, family)


def coaction_phi(P: Polynomial, N: int) -> Polynomial:
    return toda_context(N, P.ring.family).coaction(P)


def d_i_op(P: Polynomial, i: int, N: int) -> Polynomial:
    return toda_context(N, P.ring.family).d(P, i)


def is_in_B(P: Polynomial, N: int) -> bool:
    return toda_context(N, P.ring.family).is_in_B(P)


def psi_inverse(a: Polynomial, N: int) -> Polynomial:
    return toda_context(N, a.ring.family).psi_inverse(a)


def hat_elements(N: int, family: str = "TodaA") -> tuple:
    """x^_1..x^_N for odd N (q = 1) or N = 4m+2."""
    if N % 2 == 0 and N % 4 != 2:
        raise MathDomainError(f"hat elements are provided for odd N and N = 4m+2, not {N}")
    return toda_context(N, family).hats()


def star_product(b: Polynomial, c: Polynomial, N: int) -> Polynomial:
    return toda_context(N, b.ring.family).star(b, c)


def toda_generators(N: int, family: str = "TodaA") -> GeneratorSet:
    return toda_context(N, family).generators()


def toda_generators_N4() -> GeneratorSet:
    ctx = toda_context(4)
    x = ctx.x
    return GeneratorSet(ctx.ring, (
        ("x1", x(1)),
        ("d4", x(2) ** 2 + x(1) * x(3)),
        ("d6", x(3) ** 2 + x(1) ** 2 * x(4) + x(1) * x(2) * x(3)),
    ))


def primitive_check_A(P: Polynomial, N: int) -> bool:
    return toda_context(N, P.ring.family).is_primitive(P)

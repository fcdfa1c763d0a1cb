"""Gysin boundaries of the circle/sphere fibrations BO -> BGO and the
degeneration boundaries built from them."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import ContextMismatch
from .maps import pistar_even, pistar_odd, w_to_what
from .poly import HomMap, Polynomial, dT_name
from .rings import make_ring


def _require_bo(P: Polynomial, rank: int | None = None) -> None:
    if P.ring.family != "BO" or (rank is not None and P.ring.rank != rank):
        want = f"BO({rank})" if rank is not None else "a BO ring"
        raise ContextMismatch(f"expected a polynomial in {want}, got {P.ring!r}")


def derivation_s(P: Polynomial) -> Polynomial:
    """The derivation s with s(w_{2i}) = w_{2i-1} and s(w_{2i-1}) = 0."""
    _require_bo(P)
    out = set()
    for m in P.terms:
        for j in range(1, len(m), 2):        # position j holds w_{j+1}, an even class
            if m[j] % 2:
                new = list(m)
                new[j] -= 1
                new[j - 1] += 1
                out ^= {tuple(new)}
    return Polynomial(P.ring, frozenset(out))


@dataclass(frozen=True)
class MonomialFactorization:
    """m = f(w_odd) * g(w_even^2) * prod_{i in T} w_{2i}.

    ``odd_part[i-1]`` is the exponent of w_{2i-1}; ``even_square_part[i-1]``
    the exponent of w_{2i}^2.
    """

    odd_part: tuple
    even_square_part: tuple
    squarefree_even: frozenset

    @classmethod
    def of(cls, m: tuple) -> "MonomialFactorization":
        odd = tuple(m[0::2])
        even = m[1::2]
        return cls(odd, tuple(e // 2 for e in even),
                   frozenset(i + 1 for i, e in enumerate(even) if e % 2))

    def reassemble(self, nvars: int) -> tuple:
        out = [0] * nvars
        for i, e in enumerate(self.odd_part):
            out[2 * i] = e
        for i, e in enumerate(self.even_square_part):
            out[2 * i + 1] = 2 * e + (1 if i + 1 in self.squarefree_even else 0)
        return tuple(out)


def gysin_d_even(P: Polynomial, n: int) -> Polynomial:
    """d: H*(BO(2n)) -> H*(BGO(2n)), of degree -1."""
    _require_bo(P, 2 * n)
    ring = make_ring("BGO_even", 2 * n)
    out = ring.zero
    for m in P.terms:
        fac = MonomialFactorization.of(m)
        T = sorted(fac.squarefree_even)
        if not T:
            continue
        exps = {f"a{2 * i + 1}": e for i, e in enumerate(fac.odd_part) if e}
        for i, e in enumerate(fac.even_square_part):
            if e:
                exps[f"b{4 * (i + 1)}"] = e
        if len(T) == 1:
            tail = f"a{2 * T[0] - 1}"
            exps[tail] = exps.get(tail, 0) + 1
        else:
            exps[dT_name(T)] = 1
        out = out + ring.monomial(exps)
    return out


def gysin_d_odd(P: Polynomial, n: int) -> Polynomial:
    """d: H*(BO(2n+1)) -> H*(BGO(2n+1)) via sum w^i f_i(wh) -> sum c^j f_{2j+1}(wh).

    ``P`` may be given in BO(2n+1) or already in the (w, wh) coordinates.
    """
    if P.ring.family == "BO":
        _require_bo(P, 2 * n + 1)
        P = w_to_what(n)(P)
    elif P.ring != make_ring("BO_hat", 2 * n + 1):
        raise ContextMismatch(f"expected BO({2 * n + 1}) or its hat coordinates, got {P.ring!r}")
    tgt = make_ring("BGO_odd", 2 * n + 1)
    c = tgt.gen("c")
    out = tgt.zero
    for k, f in P.coefficients("w").items():
        if k % 2:
            out = out + c ** (k // 2) * f.to_ring(tgt)
    return out


@lru_cache(maxsize=None)
def restrict_top(rank: int) -> HomMap:
    """H*(BO(rank)) -> H*(BO(rank-1)), killing w_rank."""
    src, tgt = make_ring("BO", rank), make_ring("BO", rank - 1)
    images = {f"w{k}": tgt.gen(f"w{k}") for k in range(1, rank)}
    images[f"w{rank}"] = 0
    return HomMap(src, tgt, images, name="restrict")


def _check_parity(parity: int) -> int:
    if parity not in (0, 1):
        raise ValueError(f"parity must be 0 or 1, got {parity!r}")
    return parity


def boundary_odd_to_even(h: Polynomial, n: int, parity: int = 1) -> Polynomial:
    """Boundary for a rank 2n+1 family degenerating to rank 2n.

    ``h`` is a polynomial in wh_2..wh_{2n+1}, given in BGO(2n+1) or in the
    hat coordinates of BO(2n+1); it may not involve c (resp. w).
    """
    _check_parity(parity)
    odd = make_ring("BGO_odd", 2 * n + 1)
    if h.ring == make_ring("BO_hat", 2 * n + 1):
        if "w" in h.variables():
            raise ContextMismatch("the input must not involve w")
        h = h.to_ring(odd)
    elif h.ring != odd:
        raise ContextMismatch(f"expected a polynomial in the wh classes of rank {2 * n + 1}")
    if "c" in h.variables():
        raise ContextMismatch("the input must be a polynomial in the wh classes only")
    if not parity:
        return make_ring("BGO_even", 2 * n).zero
    return gysin_d_even(restrict_top(2 * n + 1)(pistar_odd(n)(h)), n)


def boundary_even_to_odd(h: Polynomial, n: int, parity: int = 1) -> Polynomial:
    """Boundary for a rank 2n+2 family degenerating to rank 2n+1."""
    _check_parity(parity)
    if h.ring != make_ring("BGO_even", 2 * n + 2):
        raise ContextMismatch(f"expected a polynomial in BGO({2 * n + 2}), got {h.ring!r}")
    if not parity:
        return make_ring("BGO_odd", 2 * n + 1).zero
    return gysin_d_odd(restrict_top(2 * n + 2)(pistar_even(n + 1)(h)), n)

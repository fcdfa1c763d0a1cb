"""Random polynomials for property checks."""

from __future__ import annotations

import random
from typing import Sequence

from .poly import Polynomial, Ring


def random_monomial(ring: Ring, rng: random.Random, max_degree: int,
                    variables: Sequence[str] | None = None) -> tuple:
    """A monomial of degree at most ``max_degree``, built by random multiplication."""
    names = list(variables) if variables is not None else list(ring.names[:ring.base])
    exps = [0] * ring.nvars
    budget = rng.randint(0, max_degree)
    for _ in range(4 * max_degree):
        if budget <= 0:
            break
        i = ring.index(rng.choice(names))
        deg = ring.vars[i].degree
        if deg <= budget:
            exps[i] += 1
            budget -= deg
    return tuple(exps)


def random_poly(ring: Ring, rng: random.Random, max_degree: int = 12, max_terms: int = 4,
                variables: Sequence[str] | None = None, homogeneous: bool = False) -> Polynomial:
    terms = set()
    for _ in range(rng.randint(1, max_terms)):
        terms ^= {random_monomial(ring, rng, max_degree, variables)}
    p = Polynomial(ring, frozenset(terms))
    if homogeneous and p:
        comps = p.homogeneous_components()
        p = comps[rng.choice(sorted(comps))]
    return p

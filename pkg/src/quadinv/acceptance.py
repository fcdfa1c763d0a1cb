"""The acceptance checks, shared by ``quadinv selftest`` and the test suite.

Each check returns an :class:`Outcome`; nothing here raises on a failed
identity, so every check always reports.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .gysin import (
    boundary_even_to_odd, boundary_odd_to_even, derivation_s, gysin_d_even, gysin_d_odd,
)
from .maps import (
    action_dpq_closed, action_even, action_odd, chern_to_go_even, phi_map, pistar_even,
    theta_compat_check, w_to_what, what_to_w,
)
from .poly import HomMap, Polynomial, Var, binom_mod2, dT_name
from .primitive import primitive_check, ph_generators, rank_4m2_data
from .rings import (
    eq_go_even, express_in_generators, make_ring, psi_embed, relation_generators,
)
from .sampling import random_monomial, random_poly
from .toda import toda_context, toda_generators, toda_generators_N4, primitive_check_A


@dataclass
class Outcome:
    ok: bool
    detail: str = ""
    failures: list = field(default_factory=list)
    seconds: float = 0.0


class _Tally:
    def __init__(self):
        self.count = 0
        self.failures = []

    def check(self, cond: bool, what: str):
        self.count += 1
        if not cond:
            self.failures.append(what)

    def outcome(self, summary: str = "") -> Outcome:
        ok = not self.failures
        detail = summary or f"{self.count} identities"
        if not ok:
            detail += f"; {len(self.failures)} failed: " + "; ".join(self.failures[:6])
        return Outcome(ok, detail, list(self.failures))


def _gens(family, rank):
    r = make_ring(family, rank)
    return r, r.gen


# ---------------------------------------------------------------------------

def rank3_to_2_table() -> Outcome:
    o, W = _gens("BGO_odd", 3)
    e, G = _gens("BGO_even", 2)
    a1, b4 = G("a1"), G("b4")
    tally = _Tally()
    for i in range(3):
        for j in range(3):
            base = (a1 ** 4 + b4) ** i * b4 ** j
            cases = [
                (W("wh2") ** (2 * i) * W("wh3") ** (2 * j), e.zero),
                (W("wh2") ** (2 * i + 1) * W("wh3") ** (2 * j), base * a1 ** (2 * j + 1)),
                (W("wh2") ** (2 * i) * W("wh3") ** (2 * j + 1), base * a1 ** (2 * j + 2)),
                (W("wh2") ** (2 * i + 1) * W("wh3") ** (2 * j + 1), base * a1 ** (2 * j + 4)),
            ]
            for h, want in cases:
                tally.check(eq_go_even(boundary_odd_to_even(h, 1), want), f"d({h})")
    return tally.outcome(f"{tally.count} table entries, i, j <= 2")


def rank4_to_3_table() -> Outcome:
    e, G = _gens("BGO_even", 4)
    o, W = _gens("BGO_odd", 3)
    cases = [
        (G("lambda"), o.zero),
        (G("a1"), o.one),
        (G("a1") * G("a3") + G("b4"), W("wh3")),
        (G("a3") ** 2 + G("a1") * G("d{1,2}"), W("c") * W("wh3") + W("wh2") * W("wh3")),
    ]
    tally = _Tally()
    for h, want in cases:
        got = boundary_even_to_odd(h, 1)
        tally.check(got == want, f"d({h}) = {got}, expected {want}")
    return tally.outcome("4 table entries")


def rank6_to_5_table() -> Outcome:
    data = rank_4m2_data(1)
    gens = data.generators
    o, W = _gens("BGO_odd", 5)
    c, w2, w3, w4, w5 = W("c"), W("wh2"), W("wh3"), W("wh4"), W("wh5")
    expected = {
        "lambda": o.zero,
        "alpha'_1": o.one,
        "alpha'_3": c + w2,
        "alpha'_5": c * w2 + w2 ** 2,
        "beta'_8": w3 * w4 + c ** 2 * w3 + w2 ** 2 * w3,
        "beta'_12": c ** 2 * w2 * w5 + w2 * w4 * w5 + c * w2 ** 3 * w3 + w2 ** 2 * w3 * w4,
        "delta'_{2,3}": c ** 3 * w2 + w2 ** 4 + w5 * w3,
    }
    tally = _Tally()
    tally.check(set(gens.labels) == set(expected), f"labels {gens.labels}")
    for lab, want in expected.items():
        got = boundary_even_to_odd(gens[lab], 2)
        tally.check(got == want, f"d({lab}) = {got}")
    return tally.outcome("7 boundary values from the constructed rank-6 generators")


def intro_examples() -> Outcome:
    o, W = _gens("BGO_odd", 3)
    e, G = _gens("BGO_even", 2)
    tally = _Tally()
    tally.check(eq_go_even(boundary_odd_to_even(W("wh3"), 1, 1), G("a1") ** 2), "wh3")
    tally.check(eq_go_even(boundary_odd_to_even(W("wh2") ** 3, 1, 1),
                           G("a1") ** 5 + G("a1") * G("b4")), "wh2^3")
    for h in (W("wh3"), W("wh2") ** 3):
        tally.check(not boundary_odd_to_even(h, 1, 0), f"parity 0 on {h}")
    return tally.outcome("2 values, both parities")


def odd_degeneration_closed_forms() -> Outcome:
    tally = _Tally()
    for n in (1, 2, 3):
        o, W = _gens("BGO_odd", 2 * n + 1)
        e, G = _gens("BGO_even", 2 * n)
        a1 = G("a1")
        for r in range(1, n + 1):
            even = sum((binom_mod2(2 * n + 1 - 2 * i, 2 * r - 2 * i) * a1 ** (2 * r - 2 * i) * G(f"a{2 * i - 1}")
                        for i in range(1, r + 1)), e.zero)
            d2 = boundary_odd_to_even(W(f"wh{2 * r}"), n)
            tally.check(eq_go_even(d2, even), f"n={n} wh{2 * r}")
            if 2 * r + 1 <= 2 * n + 1:
                d3 = boundary_odd_to_even(W(f"wh{2 * r + 1}"), n)
                tally.check(eq_go_even(d3, a1 * even), f"n={n} wh{2 * r + 1}")
                tally.check(eq_go_even(d3, a1 * d2), f"n={n} Wu relation r={r}")
    return tally.outcome("all r <= n <= 3")


def rank4_coaction_table() -> Outcome:
    act = action_even(2)
    T = act.target
    g, t = T.gen, T.gen("t")
    expected = {
        "lambda": g("lambda"),
        "a1": g("a1"),
        "a3": g("a3") + g("a1") * t,
        "d{1,2}": g("d{1,2}") + g("a1") * t ** 2,
        "b4": g("b4") + g("a1") ** 2 * t,
        "b8": g("b8") + (g("a3") ** 2 + g("lambda") ** 3 + g("lambda") * g("b4")) * t
              + g("b4") * t ** 2 + g("a1") ** 2 * t ** 3 + t ** 4,
    }
    tally = _Tally()
    for name, want in expected.items():
        got = act.image(name)
        tally.check(got == want and eq_go_even(got, want), f"{name} -> {got}")
    return tally.outcome("6 generator images, exact")


def coaction_cross_check() -> Outcome:
    n = 3
    ring = make_ring("BGO_even", 2 * n)
    act = action_even(n)
    tally = _Tally()
    literal_misses = []
    for p, q in combinations(range(1, n + 1), 2):
        solved = act.image(dT_name((p, q)))
        tally.check(eq_go_even(solved, action_dpq_closed(n, p, q)), f"d{{{p},{q}}}")
        if not eq_go_even(solved, action_dpq_closed(n, p, q, weighted=False)):
            literal_misses.append(f"{{{p},{q}}}")
    for v in ring.vars:
        tally.check(theta_compat_check(n, ring.gen(v.name)), f"theta on {v.name}")
    note = "closed form with binomial weights on the d_{i,j} sum"
    if literal_misses:
        note += "; unweighted sum differs at " + ", ".join(literal_misses)
    return tally.outcome(f"{tally.count} checks; {note}")


def relation_suite() -> Outcome:
    tally = _Tally()
    for n in (1, 2, 3, 4):
        ring = make_ring("BGO_even", 2 * n)
        for label, rel in relation_generators(ring):
            tally.check(psi_embed(rel).is_zero(), f"rank {2 * n}: {label}")
    e, G = _gens("BGO_even", 4)
    tally.check(eq_go_even(G("d{1,2}") ** 2, G("a1") ** 2 * G("b8") + G("a3") ** 2 * G("b4")),
                "d{1,2}^2")
    return tally.outcome(f"{tally.count - 1} relations vanish under the embedding, ranks 2..8")


def chern_identities() -> Outcome:
    tally = _Tally()
    for n in (2, 3, 4):
        e, G = _gens("BGO_even", 2 * n)
        lam = G("lambda")
        ch = chern_to_go_even(n)
        tally.check(eq_go_even(ch.image("cb1"), G("a1") ** 2 + (n % 2) * lam), f"cb1, n={n}")
        c3 = G("a3") ** 2 + (n * (n - 1) * (2 * n - 1) // 6 % 2) * lam ** 3 + ((n - 1) % 2) * lam * G("b4")
        tally.check(eq_go_even(ch.image("cb3"), c3), f"cb3, n={n}")
    e, G = _gens("BGO_even", 4)
    b8t = action_even(2).image("b8").coefficients("t")[1].to_ring(e)
    tally.check(eq_go_even(b8t, chern_to_go_even(2).image("cb3")), "t-coefficient of b8 at rank 4")
    tally.check(eq_go_even(b8t, G("a3") ** 2 + G("lambda") ** 3 + G("lambda") * G("b4")), "rank-4 table")
    return tally.outcome("cb1, cb3 for n = 2..4 and the rank-4 b8 coefficient")


def primitivity_suites() -> Outcome:
    tally = _Tally()
    for r in (2, 3, 4, 5, 6, 7):
        ring = make_ring("BGO_even" if r % 2 == 0 else "BGO_odd", r)
        for lab, p in ph_generators(ring):
            tally.check(primitive_check(p), f"rank {r}: {lab}")
    e, G = _gens("BGO_even", 4)
    tally.check(not primitive_check(G("b4")), "b4 must fail")
    tally.check(not primitive_check(G("a3")), "a3 must fail")
    for lab, p in toda_generators_N4():
        tally.check(primitive_check_A(p, 4), f"N=4: {lab}")
    for lab, p in toda_generators(6):
        tally.check(primitive_check_A(p, 6), f"N=6: {lab}")
    return tally.outcome(f"{tally.count} membership checks")


# ---- randomized properties ------------------------------------------------

def _coassociative(hom: HomMap, P: Polynomial, eq) -> bool:
    R, Rv = hom.source, hom.target
    v = Rv.vars[-1]
    u = Var(v.name + "'", v.degree, v.family)
    S = Rv.adjoin(u)
    base = {x.name: S.gen(x.name) for x in R.vars}
    ren = HomMap(Rv, S, {**base, v.name: S.gen(u.name)})
    inner = HomMap(Rv, S, {**{x: ren(hom.image(x)) for x in base}, v.name: S.gen(v.name)})
    outer = HomMap(Rv, S, {**base, v.name: S.gen(v.name) + S.gen(u.name)})
    y = hom(P)
    return eq(inner(y), outer(y))


def _counit(hom: HomMap, P: Polynomial) -> Polynomial:
    Rv = hom.target
    v = Rv.vars[-1]
    kill = HomMap(Rv, hom.source, {**{x.name: hom.source.gen(x.name) for x in hom.source.vars}, v.name: 0})
    return kill(hom(P))


def property_suites(cases: int = 200, seed: int = 20240611) -> Outcome:
    rng = random.Random(seed)
    tally = _Tally()
    exact = lambda x, y: x == y  # noqa: E731

    def pick_n():
        return rng.randint(1, 3)

    for _ in range(cases):
        n = pick_n()
        bo = make_ring("BO", 2 * n)
        P = random_poly(bo, rng, 12)
        tally.check(not derivation_s(derivation_s(P)), f"s s ({P})")

    for _ in range(cases):
        n = pick_n()
        bo = make_ring("BO", 2 * n)
        m = Polynomial(bo, frozenset([random_monomial(bo, rng, 12)]))
        tally.check(pistar_even(n)(gysin_d_even(m, n)) == derivation_s(m), f"pi* d = s on {m}")

    for _ in range(cases):
        n = pick_n()
        P = random_poly(make_ring("BO", 2 * n), rng, 6)
        tally.check(eq_go_even(gysin_d_even(P ** 2, n), 0), f"d(P^2) even, {P}")
        Q = random_poly(make_ring("BO", 2 * n + 1), rng, 6)
        tally.check(not gysin_d_odd(Q ** 2, n), f"d(P^2) odd, {Q}")

    for _ in range(cases):
        n = pick_n()
        ring, bo = make_ring("BGO_even", 2 * n), make_ring("BO", 2 * n)
        x = random_poly(ring, rng, 6, 3)
        y = random_poly(bo, rng, 6, 3)
        tally.check(eq_go_even(gysin_d_even(pistar_even(n)(x) * y, n), x * gysin_d_even(y, n)),
                    f"module property x={x}, y={y}")

    for _ in range(cases):
        n = pick_n()
        ring = make_ring("BGO_even", 2 * n)
        P, Q = random_poly(ring, rng, 6, 3), random_poly(ring, rng, 6, 3)
        diff = psi_embed(P * Q) + psi_embed(P) * psi_embed(Q)
        tally.check(diff.is_zero(), f"psi multiplicative on {P}, {Q}")

    for _ in range(cases):
        n = pick_n()
        kind = rng.choice(["BO", "BGL", "TodaA", "BGO_even", "BGO_odd"])
        if kind == "BGO_even":
            hom, eq = action_even(n), eq_go_even
            P = random_poly(hom.source, rng, 8, 3)
        elif kind == "BGO_odd":
            hom, eq = action_odd(n), exact
            P = random_poly(hom.source, rng, 8, 3)
        else:
            N = rng.randint(1, 8)
            hom, eq = phi_map(kind, N), exact
            P = random_poly(hom.source, rng, 8 if kind != "BGL" else 12, 3)
        tally.check(eq(_counit(hom, P), P), f"counit {kind} {P}")
        tally.check(_coassociative(hom, P, eq), f"coassociativity {kind} {P}")

    for _ in range(cases):
        n = pick_n()
        bo = make_ring("BO", 2 * n + 1)
        P = random_poly(bo, rng, 12)
        tally.check(what_to_w(n)(w_to_what(n)(P)) == P, f"hat round trip {P}")

    for _ in range(cases):
        a = rng.randint(0, 60)
        b = rng.randint(0, 60)
        tally.check(binom_mod2(a, b) == _pascal(a, b) % 2, f"C({a},{b})")

    for _ in range(cases):
        n = pick_n()
        ring = make_ring("BGO_even", 2 * n)
        x = random_poly(ring, rng, 12, 3, homogeneous=True)
        h = pistar_even(n)(x)
        y = express_in_generators(h, ring)
        ok = pistar_even(n)(y) == h
        if x and x.degree() % 2:
            ok = ok and eq_go_even(x, y)
        tally.check(ok, f"express round trip {x}")

    return tally.outcome(f"{tally.count} randomized identities, {cases} cases per family")


@lru_cache(maxsize=None)
def _pascal_row(a: int) -> tuple:
    if a == 0:
        return (1,)
    prev = _pascal_row(a - 1)
    return tuple((prev[k - 1] if k else 0) + (prev[k] if k < len(prev) else 0) for k in range(a + 1))


def _pascal(a: int, b: int) -> int:
    return _pascal_row(a)[b] if 0 <= b <= a else 0


def toda_machinery() -> Outcome:
    ctx = toda_context(6)
    tally = _Tally()
    hats = ctx.hats()
    qpos = ctx.ring.index("x2")

    def mod_x2(p):
        return Polynomial(p.ring, frozenset(m for m in p.terms if m[qpos] == 0))

    for k, h in enumerate(hats, 1):
        tally.check(ctx.is_in_B(h), f"x^_{k} in B")
        if k != ctx.q:
            tally.check(mod_x2(h) == mod_x2(ctx.x(k)), f"x^_{k} = x_{k} mod x2")
    for k in range(2, 4):
        tally.check(ctx.d(hats[2 * k - 1], 1) == hats[2 * k - 2], f"x^_{2 * k - 1} = d1 x^_{2 * k}")
    data = rank_4m2_data(1)
    ring = make_ring("BGO_even", 6)
    lam = ring.gen("lambda")
    bo = toda_context(6, "BO")
    chern = chern_to_go_even(3)
    for i in (2, 3):
        tally.check(eq_go_even(chern(data.c_hat[2 * i - 1]), data.alpha[i] ** 2), f"p*(c^_{2 * i - 1}) = alpha'^2")
        tally.check(pistar_even(3)(data.beta[i]) == bo.beta(i), f"pi*(beta'_{4 * i}) = beta_{4 * i}")
        tally.check(eq_go_even(lam * data.beta[i], lam * data.b_hat[i]), f"lambda beta'_{4 * i}")
    return tally.outcome(f"{tally.count} checks at N = 6 and rank 6")


CRITERIA = (
    (1, "rank 3 -> 2 boundary table", rank3_to_2_table),
    (2, "rank 4 -> 3 boundary table", rank4_to_3_table),
    (3, "rank 6 -> 5 boundary table", rank6_to_5_table),
    (4, "introductory boundary examples", intro_examples),
    (5, "odd degeneration closed forms", odd_degeneration_closed_forms),
    (6, "rank 4 coaction table", rank4_coaction_table),
    (7, "coaction on d_{p,q}: solve vs closed form", coaction_cross_check),
    (8, "relation suite", relation_suite),
    (9, "Chern class identities", chern_identities),
    (10, "primitivity suites", primitivity_suites),
    (11, "randomized property suites", property_suites),
    (12, "Toda machinery and rank-6 identities", toda_machinery),
)


def run(number: int) -> Outcome:
    for k, _, fn in CRITERIA:
        if k == number:
            t0 = time.perf_counter()
            out = fn()
            out.seconds = time.perf_counter() - t0
            return out
    raise KeyError(number)


def report_line(number: int, outcome: Outcome) -> str:
    title = dict((k, t) for k, t, _ in CRITERIA)[number]
    status = "PASS" if outcome.ok else "FAIL"
    return f"[{status}] {number:2d}. {title}: {outcome.detail} ({outcome.seconds:.2f}s)"


def run_all(echo=print) -> bool:
    ok = True
    for k, _, _ in CRITERIA:
        out = run(k)
        ok &= out.ok
        echo(report_line(k, out))
    return ok

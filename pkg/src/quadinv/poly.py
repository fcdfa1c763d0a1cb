"""Polynomials over F2 in graded variables.

A polynomial is a frozenset of exponent tuples aligned with the variable
list of its :class:`Ring`; the coefficient of every listed monomial is 1.
Addition is symmetric difference of term sets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .errors import ContextMismatch, DegreeCapExceeded, UnboundVariable

_degree_cap = 48


def degree_cap() -> int:
    return _degree_cap


def set_degree_cap(cap: int) -> None:
    """Set the largest degree for which monomials may be enumerated."""
    global _degree_cap
    if cap < 0:
        raise ValueError("degree cap must be nonnegative")
    _degree_cap = cap


def check_degree(degree: int) -> None:
    if degree > _degree_cap:
        raise DegreeCapExceeded(f"degree {degree} exceeds cap {_degree_cap}")


def binom_mod2(n: int, k: int) -> int:
    """C(n, k) mod 2 by Lucas: odd iff the bits of k are a subset of those of n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return 1 if (k & (n - k)) == 0 else 0


# Global variable order; ties inside a family are broken by the index.
FAMILY_ORDER = {
    "lambda": 0, "a": 1, "b": 2, "dT": 3, "w": 4, "wh": 5, "c": 6,
    "t": 7, "w1-class": 8, "x": 9, "cbar": 10, "chat": 11,
}


@dataclass(frozen=True)
class Var:
    name: str
    degree: int
    family: str
    index: tuple = ()

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f"variable {self.name} must have positive degree")

    @property
    def sort_key(self):
        return (FAMILY_ORDER[self.family], len(self.index), self.index, self.name)


def dT_name(T: Iterable[int]) -> str:
    return "d{" + ",".join(str(i) for i in sorted(T)) + "}"


@dataclass(frozen=True, eq=False)
class Ring:
    """A free graded F2-algebra on ``vars``, tagged with the space it models.

    ``base`` is the number of leading variables belonging to the underlying
    ring; variables past it were adjoined (e.g. ``t`` for a coaction).
    """

    family: str
    rank: int
    vars: tuple
    base: int = -1
    _index: dict = field(init=False, repr=False, compare=False)
    _key: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        names = [v.name for v in self.vars]
        if len(set(names)) != len(names):
            raise ValueError("variable names must be unique within a ring")
        if self.base < 0:
            object.__setattr__(self, "base", len(self.vars))
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})
        object.__setattr__(self, "_key", (self.family, self.rank, self.vars))

    def __eq__(self, other):
        return self is other or (isinstance(other, Ring) and self._key == other._key)

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        extra = [v.name for v in self.vars[self.base:]]
        tail = f"[{','.join(extra)}]" if extra else ""
        return f"{self.family}({self.rank}){tail}"

    @property
    def nvars(self) -> int:
        return len(self.vars)

    @property
    def degrees(self) -> tuple:
        return tuple(v.degree for v in self.vars)

    @property
    def names(self) -> tuple:
        return tuple(v.name for v in self.vars)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnboundVariable(f"{name!r} is not a generator of {self!r}") from None

    def has(self, name: str) -> bool:
        return name in self._index

    def var(self, name: str) -> Var:
        return self.vars[self.index(name)]

    def gen(self, name: str) -> "Polynomial":
        exps = [0] * self.nvars
        exps[self.index(name)] = 1
        return Polynomial(self, (tuple(exps),))

    def __getitem__(self, name: str) -> "Polynomial":
        return self.gen(name)

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self)

    @property
    def one(self) -> "Polynomial":
        return Polynomial(self, ((0,) * self.nvars,))

    def monomial(self, exps: Mapping[str, int]) -> "Polynomial":
        m = [0] * self.nvars
        for name, e in exps.items():
            if e < 0:
                raise ValueError("exponents must be nonnegative")
            m[self.index(name)] += e
        return Polynomial(self, (tuple(m),))

    def adjoin(self, *new_vars: Var) -> "Ring":
        return _adjoin(self, new_vars)

    def base_ring(self) -> "Ring":
        if self.base == self.nvars:
            return self
        return _base_ring(self)

    def mono_degree(self, m: tuple) -> int:
        return sum(e * d for e, d in zip(m, self.degrees) if e)


@lru_cache(maxsize=None)
def _adjoin(ring: Ring, new_vars: tuple) -> Ring:
    return Ring(ring.family, ring.rank, ring.vars + tuple(new_vars), base=ring.base)


@lru_cache(maxsize=None)
def _base_ring(ring: Ring) -> Ring:
    return Ring(ring.family, ring.rank, ring.vars[: ring.base])


Scalar = int


class Polynomial:
    """An element of the free F2-algebra of ``ring``."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: Iterable[tuple] = ()):
        self.ring = ring
        if isinstance(terms, frozenset):
            self.terms = terms
        else:
            acc: set = set()
            for m in terms:
                m = tuple(m)
                if len(m) != ring.nvars:
                    raise ValueError("monomial length does not match ring")
                acc ^= {m}
            self.terms = frozenset(acc)

    # ---- arithmetic -----------------------------------------------------
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ContextMismatch(f"{self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, int):
            return self.ring.one if other % 2 else self.ring.zero
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial(self.ring, self.terms ^ other.terms)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (mb,) = b
            return Polynomial(self.ring, frozenset(
                tuple(x + y for x, y in zip(ma, mb)) for ma in a))
        acc: set = set()
        for mb in b:
            for ma in a:
                m = tuple(x + y for x, y in zip(ma, mb))
                if m in acc:
                    acc.remove(m)
                else:
                    acc.add(m)
        return Polynomial(self.ring, frozenset(acc))

    __rmul__ = __mul__

    def frobenius(self, k: int = 1) -> "Polynomial":
        """The 2^k-th power, computed termwise."""
        f = 1 << k
        return Polynomial(self.ring, frozenset(tuple(e * f for e in m) for m in self.terms))

    def __pow__(self, e: int) -> "Polynomial":
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one
        k = 0
        while e:
            if e & 1:
                result = result * self.frobenius(k)
            e >>= 1
            k += 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self._coerce(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, self.terms))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple]:
        return iter(self.sorted_terms())

    # ---- structure ------------------------------------------------------
    def sorted_terms(self) -> list:
        """Terms in graded-lex order, highest degree first."""
        deg = self.ring.mono_degree
        return sorted(self.terms, key=lambda m: (deg(m), m), reverse=True)

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(self.ring.mono_degree(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        return len({self.ring.mono_degree(m) for m in self.terms}) <= 1

    def homogeneous_components(self) -> dict:
        parts: dict = {}
        for m in self.terms:
            parts.setdefault(self.ring.mono_degree(m), set()).add(m)
        return {d: Polynomial(self.ring, frozenset(ms)) for d, ms in sorted(parts.items())}

    def variables(self) -> set:
        used = set()
        for m in self.terms:
            used.update(i for i, e in enumerate(m) if e)
        return {self.ring.vars[i].name for i in used}

    def coefficients(self, name: str) -> dict:
        """Split by the power of one variable: ``{k: coefficient of name^k}``."""
        i = self.ring.index(name)
        parts: dict = {}
        for m in self.terms:
            parts.setdefault(m[i], set()).add(m[:i] + (0,) + m[i + 1:])
        return {k: Polynomial(self.ring, frozenset(v)) for k, v in sorted(parts.items())}

    def to_ring(self, target: Ring) -> "Polynomial":
        """Reinterpret in a ring containing every variable this polynomial uses."""
        if target == self.ring:
            return self
        pos = []
        for i, v in enumerate(self.ring.vars):
            pos.append(target._index.get(v.name))
        out = set()
        for m in self.terms:
            new = [0] * target.nvars
            for i, e in enumerate(m):
                if e:
                    j = pos[i]
                    if j is None or target.vars[j].degree != self.ring.vars[i].degree:
                        raise ContextMismatch(
                            f"{self.ring.vars[i].name} has no counterpart in {target!r}")
                    new[j] = e
            out.add(tuple(new))
        return Polynomial(target, frozenset(out))

    # ---- printing -------------------------------------------------------
    def mono_str(self, m: tuple) -> str:
        parts = []
        for v, e in zip(self.ring.vars, m):
            if e == 1:
                parts.append(v.name)
            elif e > 1:
                parts.append(f"{v.name}^{e}")
        return "*".join(parts) if parts else "1"

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(self.mono_str(m) for m in self.sorted_terms())

    def __repr__(self):
        return f"<{self.ring!r}: {self}>"

    def to_json(self) -> list:
        return [[[v.name, e] for v, e in zip(self.ring.vars, m) if e]
                for m in self.sorted_terms()]


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


PolyLike = Union[Polynomial, int]


class HomMap:
    """An F2-algebra map between free rings, given on generators.

    ``images`` maps source variable names to target polynomials; a name may
    be absent, in which case substituting a polynomial that uses it raises
    :class:`UnboundVariable`.
    """

    def __init__(self, source: Ring, target: Ring, images: Mapping[str, PolyLike], name: str = ""):
        self.source = source
        self.target = target
        self.name = name
        imgs: list = [None] * source.nvars
        for key, val in images.items():
            if isinstance(val, int):
                val = target.one if val % 2 else target.zero
            if val.ring != target:
                raise ContextMismatch(f"image of {key} lives in {val.ring!r}, not {target!r}")
            imgs[source.index(key)] = val
        self.images = tuple(imgs)
        self._powers: dict = {}

    def __repr__(self):
        return f"HomMap({self.name or '?'}: {self.source!r} -> {self.target!r})"

    def image(self, name: str) -> Polynomial:
        img = self.images[self.source.index(name)]
        if img is None:
            raise UnboundVariable(f"{self.name or 'map'} has no image for {name}")
        return img

    def _power(self, i: int, e: int) -> Polynomial:
        key = (i, e)
        p = self._powers.get(key)
        if p is None:
            base = self.images[i]
            if base is None:
                raise UnboundVariable(
                    f"{self.name or 'map'} has no image for {self.source.vars[i].name}")
            p = base ** e
            self._powers[key] = p
        return p

    def __call__(self, p: PolyLike) -> Polynomial:
        return substitute(p, self)

    def compose(self, inner: "HomMap") -> "HomMap":
        """``self ∘ inner``."""
        if inner.target != self.source:
            raise ContextMismatch("cannot compose: target/source mismatch")
        imgs = {v.name: self(img) for v, img in zip(inner.source.vars, inner.images)
                if img is not None}
        return HomMap(inner.source, self.target, imgs,
                      name=f"{self.name}∘{inner.name}")

    def check_homogeneous(self) -> bool:
        """True if every image is homogeneous of its generator's degree."""
        for v, img in zip(self.source.vars, self.images):
            if img is None or not img:
                continue
            if not img.is_homogeneous() or img.degree() != v.degree:
                return False
        return True


def substitute(p: PolyLike, hom: HomMap) -> Polynomial:
    """Evaluate ``p`` under the algebra map determined by ``hom``'s images."""
    if isinstance(p, int):
        return hom.target.one if p % 2 else hom.target.zero
    if p.ring != hom.source:
        raise ContextMismatch(f"{p.ring!r} is not the source {hom.source!r}")
    acc: frozenset = frozenset()
    one = hom.target.one
    for m in p.terms:
        img = one
        for i, e in enumerate(m):
            if e:
                img = img * hom._power(i, e)
                if not img:
                    break
        acc = acc ^ img.terms
    return Polynomial(hom.target, acc)


def identity_map(ring: Ring) -> HomMap:
    return HomMap(ring, ring, {n: ring.gen(n) for n in ring.names}, name="id")


def enumerate_monomials(ring: Ring, degree: int, variables: Sequence[str] | None = None) -> tuple:
    """All monomials of exactly ``degree`` as exponent tuples, graded-lex descending.

    ``variables`` restricts to a subset of generators (others get exponent 0).
    """
    check_degree(degree)
    if degree < 0:
        return ()
    allowed = tuple(range(ring.nvars)) if variables is None else tuple(
        sorted(ring.index(n) for n in variables))
    return _enumerate(ring.degrees, allowed, degree)


@lru_cache(maxsize=4096)
def _enumerate(degrees: tuple, allowed: tuple, degree: int) -> tuple:
    n = len(degrees)
    out: list = []
    exps = [0] * n

    def rec(k: int, remaining: int):
        if k == len(allowed):
            if remaining == 0:
                out.append(tuple(exps))
            return
        i = allowed[k]
        d = degrees[i]
        for e in range(remaining // d, -1, -1):
            exps[i] = e
            rec(k + 1, remaining - e * d)
        exps[i] = 0

    rec(0, degree)
    return tuple(out)

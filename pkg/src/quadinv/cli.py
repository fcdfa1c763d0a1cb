"""Command line front end: ``quadinv <command> --ring go:4 --expr "..."``."""

from __future__ import annotations

import argparse
import json
import sys

from . import acceptance
from .errors import (
    ContextMismatch, DegreeCapExceeded, ExprSyntaxError, InternalInvariantViolation,
    MathDomainError, UnboundVariable,
)
from .expr import parse_poly
from .gysin import boundary_even_to_odd, boundary_odd_to_even, gysin_d_even, gysin_d_odd
from .maps import (
    action_even, action_odd, chern_to_go_even, chern_to_go_odd, phi_map, pistar_even, pistar_odd,
)
from .poly import Polynomial, Ring, set_degree_cap
from .primitive import ph_generators, primitive_check, primitive_witness
from .rings import eq_go_even, express_in_generators, make_ring, normal_form, relation_generators
from .toda import hat_elements, toda_context, toda_generators_N4

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_INTERNAL = 0, 2, 3, 4

_FAMILIES = {"o": "BO", "gl": "BGL", "toda": "TodaA"}


class UsageError(Exception):
    pass


def parse_ring(selector: str) -> Ring:
    fam, sep, rank = selector.partition(":")
    if not sep or not rank.isdigit() or int(rank) < 1:
        raise UsageError(f"bad ring selector {selector!r}; expected family:rank, e.g. go:4")
    r = int(rank)
    if fam == "go":
        return make_ring("BGO_even" if r % 2 == 0 else "BGO_odd", r)
    if fam not in _FAMILIES:
        raise UsageError(f"unknown ring family {fam!r}; choose go, o, gl or toda")
    return make_ring(_FAMILIES[fam], r)


def _labels_for(ring: Ring, src: str) -> dict:
    if "'" in src and ring.family == "BGO_even" and ring.rank % 4 == 2:
        return dict(ph_generators(ring).entries)
    return {}


class Output:
    def __init__(self, fmt: str, stream):
        self.fmt = fmt
        self.stream = stream

    def emit(self, ring: Ring, result, text: str | None = None):
        if self.fmt == "json":
            doc = {"ring": {"family": ring.family, "rank": ring.rank}, "result": _jsonable(result)}
            self.stream.write(json.dumps(doc, sort_keys=False) + "\n")
        else:
            self.stream.write((text if text is not None else _text(result)) + "\n")


def _jsonable(x):
    if isinstance(x, Polynomial):
        return x.to_json()
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    return x


def _text(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    return str(x)


# ---- commands --------------------------------------------------------------

def _need_exprs(args, count=None):
    exprs = args.expr or []
    if not exprs or (count is not None and len(exprs) != count):
        want = f"exactly {count}" if count else "at least one"
        raise UsageError(f"{args.command} needs {want} --expr")
    return exprs


def _need_ring(args) -> Ring:
    sel = getattr(args, "ring", None) or getattr(args, "source", None)
    if not sel:
        raise UsageError(f"{args.command} needs --ring")
    return parse_ring(sel)


def _polys(args, ring: Ring, count=None):
    return [parse_poly(e, ring, _labels_for(ring, e)) for e in _need_exprs(args, count)]


def cmd_ring_info(args, out):
    ring = _need_ring(args)
    gens = [[v.name, v.degree] for v in ring.vars]
    info = {"generators": gens}
    lines = [f"{ring.family}({ring.rank}), {ring.nvars} generators"]
    lines += [f"  {name}  degree {deg}" for name, deg in gens]
    if ring.family == "BGO_even":
        info["relations"] = len(relation_generators(ring))
        lines.append(f"{info['relations']} relation generators")
    out.emit(ring, info, "\n".join(lines))


def cmd_normalize(args, out):
    ring = _need_ring(args)
    for p in _polys(args, ring):
        out.emit(ring, normal_form(p) if ring.family == "BGO_even" else p)


def cmd_eq(args, out):
    ring = _need_ring(args)
    p, q = _polys(args, ring, 2)
    out.emit(ring, eq_go_even(p, q) if ring.family == "BGO_even" else p == q)


def cmd_pistar(args, out):
    ring = _need_ring(args)
    if ring.family not in ("BGO_even", "BGO_odd"):
        raise UsageError("pistar needs a go ring")
    hom = pistar_even(ring.rank // 2) if ring.family == "BGO_even" else pistar_odd(ring.rank // 2)
    for p in _polys(args, ring):
        out.emit(hom.target, hom(p))


def cmd_action(args, out):
    ring = _need_ring(args)
    if ring.family == "BGO_even":
        hom = action_even(ring.rank // 2)
    elif ring.family == "BGO_odd":
        hom = action_odd(ring.rank // 2)
    else:
        hom = phi_map(ring.family, ring.rank)
    for p in _polys(args, ring):
        img = hom(p)
        if ring.family == "BGO_even":
            t = img.ring.gen("t")
            img = sum((normal_form(c.to_ring(ring)).to_ring(img.ring) * t ** k
                       for k, c in img.coefficients("t").items()), img.ring.zero)
        out.emit(img.ring, img)


def cmd_chern(args, out):
    ring = _need_ring(args)
    if ring.family != "BGL":
        raise UsageError("chern needs a gl ring")
    hom = chern_to_go_even(ring.rank // 2) if ring.rank % 2 == 0 else chern_to_go_odd(ring.rank // 2)
    for p in _polys(args, ring):
        img = hom(p)
        out.emit(hom.target, normal_form(img) if hom.target.family == "BGO_even" else img)


def cmd_gysin_d(args, out):
    ring = _need_ring(args)
    if ring.family != "BO":
        raise UsageError("gysin-d needs an o ring")
    n = ring.rank // 2
    for p in _polys(args, ring):
        img = gysin_d_even(p, n) if ring.rank % 2 == 0 else gysin_d_odd(p, n)
        out.emit(img.ring, normal_form(img) if img.ring.family == "BGO_even" else img)


def cmd_boundary(args, out):
    ring = _need_ring(args)
    if ring.family == "BGO_odd":
        fn, n = boundary_odd_to_even, ring.rank // 2
    elif ring.family == "BGO_even" and ring.rank >= 2:
        fn, n = boundary_even_to_odd, ring.rank // 2 - 1
    else:
        raise UsageError("boundary needs a go ring as source")
    for p in _polys(args, ring):
        if args.check_primitive and not primitive_check(p):
            raise UsageError(f"{p} is not a quadric invariant")
        img = fn(p, n, args.parity)
        out.emit(img.ring, normal_form(img) if img.ring.family == "BGO_even" else img)


def cmd_primitive(args, out):
    ring = _need_ring(args)
    for p in _polys(args, ring):
        ok = primitive_check(p)
        if ok:
            out.emit(ring, {"primitive": True} if out.fmt == "json" else True)
        else:
            wit = primitive_witness(p)
            out.emit(wit.ring, {"primitive": False, "witness": wit}, f"false\nwitness: {wit}")


def cmd_primitive_generators(args, out):
    ring = _need_ring(args)
    gens = ph_generators(ring)
    out.emit(ring, [{"label": lab, "poly": p} for lab, p in gens],
             "\n".join(f"{lab} = {p}" for lab, p in gens))


def cmd_express(args, out):
    ring = _need_ring(args)
    if ring.family != "BGO_even":
        raise UsageError("express needs an even go ring")
    bo = make_ring("BO", ring.rank)
    for p in _polys(args, bo):
        out.emit(ring, express_in_generators(p, ring))


def _toda_ctx(args):
    ring = _need_ring(args)
    if ring.family not in ("TodaA", "BO", "BGL"):
        raise UsageError("needs a toda, o or gl ring")
    return toda_context(ring.rank, ring.family)


def cmd_toda_hat(args, out):
    ctx = _toda_ctx(args)
    hats = hat_elements(ctx.N, ctx.family)
    names = [f"hat({v.name})" for v in ctx.ring.vars]
    out.emit(ctx.ring, [{"label": lab, "poly": h} for lab, h in zip(names, hats)],
             "\n".join(f"{lab} = {h}" for lab, h in zip(names, hats)))


def cmd_toda_generators(args, out):
    ctx = _toda_ctx(args)
    gens = toda_generators_N4() if (ctx.N == 4 and ctx.family == "TodaA") else ctx.generators()
    out.emit(ctx.ring, [{"label": lab, "poly": p} for lab, p in gens],
             "\n".join(f"{lab} = {p}" for lab, p in gens))


def cmd_selftest(args, out):
    lines = []
    ok = acceptance.run_all(echo=lines.append)
    out.stream.write("\n".join(lines) + "\n")
    return EXIT_OK if ok else 1


COMMANDS = {
    "ring-info": (cmd_ring_info, "list generators and degrees"),
    "normalize": (cmd_normalize, "canonical representative of a class"),
    "eq": (cmd_eq, "decide equality of two expressions"),
    "pistar": (cmd_pistar, "pull back to H*(BO)"),
    "action": (cmd_action, "apply the coaction B(mu)^* or phi"),
    "chern": (cmd_chern, "image of Chern classes in H*(BGO)"),
    "gysin-d": (cmd_gysin_d, "Gysin boundary H*(BO) -> H*(BGO)"),
    "boundary": (cmd_boundary, "boundary for a degenerating family"),
    "primitive": (cmd_primitive, "is the element a quadric invariant"),
    "primitive-generators": (cmd_primitive_generators, "generators of the quadric invariants"),
    "express": (cmd_express, "preimage under pi^* of a class in H*(BO)"),
    "toda-hat": (cmd_toda_hat, "Toda's hat elements"),
    "toda-generators": (cmd_toda_generators, "generators of Toda's primitive ring"),
    "selftest": (cmd_selftest, "run the acceptance checks"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quadinv", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--ring", help="family:rank with family in go, o, gl, toda")
        if name == "boundary":
            sp.add_argument("--from", dest="source", help="alias of --ring")
            sp.add_argument("--check-primitive", action="store_true",
                            help="refuse inputs that are not quadric invariants")
        sp.add_argument("--expr", action="append", help="expression (repeatable)")
        sp.add_argument("--parity", type=int, choices=(0, 1), default=1)
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--degree-cap", type=int)
    return parser


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = Output(args.format, stdout)
    try:
        if args.degree_cap is not None:
            set_degree_cap(args.degree_cap)
        code = COMMANDS[args.command][0](args, out)
        return EXIT_OK if code is None else code
    except (MathDomainError, DegreeCapExceeded) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_DOMAIN
    except (UsageError, ExprSyntaxError, ContextMismatch, UnboundVariable, ValueError) as exc:
        stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except InternalInvariantViolation as exc:
        stderr.write(f"internal error: {exc}\n")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())

import io
import json
import os
import random
import subprocess
import sys

import pytest

from quadinv import (
    DegreeCapExceeded, ExprSyntaxError, UnknownGenerator, make_ring, normal_form, parse_expr,
    parse_poly, set_degree_cap,
)
from quadinv.cli import main
from quadinv.expr import Gen, Sum
from quadinv.sampling import random_poly


def gens_in(node):
    if isinstance(node, Gen):
        return [node.name]
    out = []
    for child in getattr(node, "terms", ()) or getattr(node, "factors", ()):
        out += gens_in(child)
    if hasattr(node, "base"):
        out += gens_in(node.base)
    return out


def test_parse_ast():
    r = make_ring("BGO_even", 4)
    ast = parse_expr("a1*d{1,2} + b4^2", r)
    assert isinstance(ast, Sum)
    assert gens_in(ast) == ["a1", "d{1,2}", "b4"]
    assert parse_poly("lambda^3 + lambda*b4", r) == r["lambda"] ** 3 + r["lambda"] * r["b4"]


def test_parse_values():
    bo = make_ring("BO", 2)
    assert parse_poly("(w1+w2)^2", bo) == bo["w1"] ** 2 + bo["w2"] ** 2
    odd = make_ring("BGO_odd", 3)
    assert parse_poly("wh2^3", odd) == odd["wh2"] ** 3
    r = make_ring("BGO_even", 4)
    assert normal_form(parse_poly("d{1,2}^2 + a1^2*b8 + a3^2*b4", r)) == r.zero
    assert parse_poly("d{2,1}", r) == r["d{1,2}"]
    assert parse_poly("0", r) == r.zero and parse_poly("1 + 1", r) == r.zero


def test_unknown_generator_position():
    with pytest.raises(UnknownGenerator) as exc:
        parse_expr("w1 + w9", make_ring("BO", 6))
    assert exc.value.position == 5
    assert exc.value.name == "w9"


@pytest.mark.parametrize("src,pos", [("w1 +", 4), ("w1 $ w2", 3), ("(w1", 3), ("w1^", 3), ("2*w1", 0)])
def test_syntax_errors(src, pos):
    with pytest.raises(ExprSyntaxError) as exc:
        parse_poly(src, make_ring("BO", 2))
    assert exc.value.position == pos


def test_labels():
    r = make_ring("BGO_even", 4)
    labels = {"beta'_8": r["b8"] + r["a1"]}
    assert parse_poly("beta'_8 + a1", r, labels) == r["b8"]


def test_degree_cap_on_parse():
    set_degree_cap(10)
    with pytest.raises(DegreeCapExceeded):
        parse_poly("w1^11", make_ring("BO", 2))


@pytest.mark.parametrize("family,rank", [
    ("BO", 5), ("BGO_odd", 5), ("BGO_even", 6), ("BGL", 3), ("TodaA", 6), ("BO_hat", 5),
])
def test_round_trip(family, rank):
    rng = random.Random(rank)
    ring = make_ring(family, rank)
    for _ in range(50):
        p = random_poly(ring, rng, 14, 6)
        assert parse_poly(str(p), ring) == p


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_cli_boundary():
    assert run("boundary", "--from", "go:3", "--parity", "1", "--expr", "wh3") == (0, "a1^2\n", "")
    assert run("boundary", "--ring", "go:3", "--parity", "0", "--expr", "wh3")[1] == "0\n"


def test_cli_primitive():
    code, out, _ = run("primitive", "--ring", "go:4", "--expr", "b4")
    assert code == 0
    assert out.splitlines() == ["false", "witness: a1^2*t"]
    assert run("primitive", "--ring", "go:4", "--expr", "a1*a3 + b4")[1] == "true\n"


def test_cli_generators():
    code, out, _ = run("primitive-generators", "--ring", "go:6")
    assert code == 0
    assert len(out.splitlines()) == 7


def test_cli_labels_and_boundary_table():
    code, out, _ = run("boundary", "--ring", "go:6", "--expr", "alpha'_3")
    assert (code, out) == (0, "wh2 + c\n")


def test_cli_json():
    code, out, _ = run("normalize", "--ring", "go:4", "--expr", "lambda*a1 + a3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc == {"ring": {"family": "BGO_even", "rank": 4}, "result": [[["a3", 1]]]}


def test_cli_eq_and_express():
    assert run("eq", "--ring", "go:4", "--expr", "d{1,2}^2", "--expr", "a1^2*b8 + a3^2*b4")[1] == "true\n"
    assert run("express", "--ring", "go:4", "--expr", "w1")[1] == "a1\n"


@pytest.mark.parametrize("argv,code", [
    (["normalize", "--ring", "go:4", "--expr", "w9"], 2),
    (["normalize", "--ring", "zz:4", "--expr", "1"], 2),
    (["normalize", "--ring", "go:4"], 2),
    (["bogus"], 2),
    (["express", "--ring", "go:4", "--expr", "w2"], 3),
    (["primitive-generators", "--ring", "go:8"], 3),
    (["normalize", "--ring", "o:2", "--degree-cap", "4", "--expr", "w1^5"], 3),
])
def test_cli_exit_codes(argv, code, capsys):
    assert run(*argv)[0] == code


def test_cli_selftest_lists_criteria():
    code, out, _ = run("selftest")
    lines = out.splitlines()
    assert len(lines) == 12
    assert code == (0 if all("PASS" in ln for ln in lines) else 1)


def test_output_is_byte_identical_across_processes():
    cmd = [sys.executable, "-m", "quadinv", "action", "--ring", "go:6", "--expr", "d{1,2,3}",
           "--format", "json"]
    outs = set()
    for seed in ("1", "2", "3"):
        env = dict(os.environ, PYTHONHASHSEED=seed)
        outs.add(subprocess.run(cmd, capture_output=True, env=env, check=True).stdout)
    assert len(outs) == 1

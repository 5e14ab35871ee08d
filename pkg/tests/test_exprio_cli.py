import json

import pytest
from hypothesis import given

from conftest import X, Y, t_elements
from framedlie.cli import main
from framedlie.exprio import (
    BracketNode,
    DiamondNode,
    ElaborationError,
    ParseError,
    Sum,
    Tensor,
    elaborate,
    format_element,
    parse,
    read_element,
    read_g,
)
from framedlie.free_lie import bracket, diamond, diamond_mono, gen
from framedlie.maps import K_map
from framedlie.oracle import random_diamond, save_table, sl2
from framedlie.tensor import t_word, unit

x, y, z = gen(0), gen(1), gen(2)


def test_parse_examples():
    assert isinstance(parse("x*y - y*x"), Sum)
    assert isinstance(parse("d(x,y)"), DiamondNode)
    tree = parse("[x,[y,z]]*w")
    assert isinstance(tree, Tensor) and isinstance(tree.factors[0], BracketNode)


def test_elaborate_examples():
    assert elaborate(parse("x*y - d(x,y)")) == K_map(t_word((x, y)))
    assert elaborate(parse("1")) == unit()
    assert elaborate(parse("[x, x]")) == 0
    assert read_element("2·x*y + 1/2 z") == t_word((x, y), 2) + t_word((z,), "1/2")
    assert read_g("[x,y] + d(y,x)") == bracket(X, Y) + diamond(Y, X)


def test_precedence():
    assert read_element("x + y*z") == t_word((x,)) + t_word((y, z))
    assert read_element("(x + y)*z") == t_word((x, z)) + t_word((y, z))
    assert read_element("-x*y + 3") == t_word((x, y), -1) + unit() * 3


def test_custom_names():
    u = read_element("a*b - d(a,b)", ["a", "b"])
    assert u == K_map(t_word((x, y)))
    assert format_element(u, ["a", "b"]) == "a*b - d(a,b)"


@pytest.mark.parametrize("src,line,col", [("x +", 1, 4), ("x\n  * )", 2, 5), ("[x y]", 1, 4), ("x $ y", 1, 3)])
def test_parse_errors_have_positions(src, line, col):
    with pytest.raises(ParseError) as err:
        parse(src)
    assert (err.value.line, err.value.column) == (line, col)


@pytest.mark.parametrize("src", ["[x*y, z]", "d(x, 1)", "q + x"])
def test_elaboration_errors(src):
    with pytest.raises(ElaborationError):
        read_element(src)


def test_format_examples():
    assert format_element(t_word((x, y)) - t_word((diamond_mono(x, y),))) == "x*y - d(x,y)"
    assert format_element(unit() * 0) == "0"
    assert format_element(t_word((y,), -2) + unit()) == "-2 y + 1"


@given(t_elements(max_len=3, max_degree=2))
def test_print_parse_roundtrip(u):
    assert read_element(format_element(u)) == u


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_apply(capsys):
    assert _run(capsys, "apply", "--map", "K", "--input", "x*y") == (0, "x*y - d(x,y)\n", "")
    assert _run(capsys, "apply", "--map", "Kinv", "--input", "x*y")[1] == "x*y + d(x,y)\n"
    assert _run(capsys, "apply", "--map", "p", "--input", "y*x")[1] == "x*y - [x,y]\n"
    assert _run(capsys, "apply", "--map", "t", "--input", "1", "--omega", "x,y")[1] == (
        "d(x,y) - d(y,x) - [x,y]\n")
    assert _run(capsys, "apply", "--map", "e", "--input", "1", "--omega", "x,y")[1] == (
        "x*y - y*x - [x,y]\n")
    code, out, _ = _run(capsys, "apply", "--map", "r", "--input", "1", "--omega", "x,y", "--v", "z")
    assert code == 0 and "d(x,d(y,z))" in out
    for m in ("rho", "kappa"):
        assert _run(capsys, "apply", "--map", m, "--input", "z", "--omega", "x,y", "--v", "w")[0] == 0


def test_cli_usage_errors(capsys):
    assert _run(capsys, "apply", "--map", "t", "--input", "1")[0] == 2
    assert _run(capsys, "apply", "--map", "K", "--input", "x +")[0] == 2
    assert _run(capsys, "apply", "--map", "bogus", "--input", "x")[0] == 2
    assert _run(capsys, "identity", "--n", "3", "--pos", "3")[0] == 2
    assert _run(capsys, "oracle", "--algebra", "nope")[0] == 2
    assert _run(capsys)[0] == 2


def test_cli_identity(capsys):
    code, out, _ = _run(capsys, "identity", "--n", "3", "--pos", "1", "--format", "index")
    assert code == 0
    assert out.encode("utf-8") == "∇_i∇_j∇_k−∇_j∇_i∇_k+T_{ij}^l∇_l∇_k+R_{ijk}^l∇_l=0\n".encode("utf-8")
    assert _run(capsys, "identity", "--n", "4", "--pos", "2", "--format", "sexp")[1].startswith("(identity")


def test_cli_verify_small(capsys):
    code, out, _ = _run(capsys, "verify", "--gens", "2", "--max-u", "1", "--max-v", "1",
                        "--lemmas", "--max-degree", "4")
    assert code == 0
    assert "FAIL" not in out and "commutation theorem" in out


def test_cli_oracle_with_json(tmp_path, capsys):
    path = tmp_path / "framed.json"
    save_table(random_diamond(sl2(), 9), path)
    data = json.loads(path.read_text())
    assert set(data) == {"dim", "bracket", "diamond"}
    code, out, _ = _run(capsys, "oracle", "--algebra", str(path), "--trials", "1", "--max-len", "1",
                        "--keep-diamond")
    assert code == 0 and out.strip().endswith("8/8 cases passed")


def test_cli_is_deterministic(capsys):
    first = _run(capsys, "oracle", "--seed", "3", "--trials", "1", "--max-len", "1")
    assert first == _run(capsys, "oracle", "--seed", "3", "--trials", "1", "--max-len", "1")

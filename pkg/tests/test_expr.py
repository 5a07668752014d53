import pytest

from trisolve import expr as ex


def test_eval_basic():
    e = ex.Add(ex.Mul(ex.const(3), ex.Pow(ex.param("x"), 2)), ex.const(-5))
    assert e.eval({"x": 4}) == 43
    assert ex.Neg(ex.param("x")).eval({"x": 7}) == -7


def test_exact_division():
    e = ex.ExactDiv(ex.param("a"), ex.param("b"))
    assert e.eval({"a": 12, "b": 3}) == 4
    with pytest.raises(ex.ExactDivisionError):
        e.eval({"a": 7, "b": 3})
    with pytest.raises(ex.ExactDivisionError):
        e.eval({"a": 7, "b": 0})


def test_gcd_node():
    e = ex.Gcd(ex.param("a"), ex.param("b"))
    assert e.eval({"a": 12, "b": -18}) == 6
    assert e.eval({"a": 0, "b": 5}) == 5


def test_monomial_expr_rendering():
    e = ex.monomial_expr(-2, [("x", 3), ("y", 1)])
    assert e.eval({"x": 2, "y": 5}) == -80
    s = str(e)
    assert "x^3" in s and "y" in s


def test_strings_are_reparseable_shapes():
    e = ex.ExactDiv(
        ex.Add(ex.Pow(ex.param("u"), 3), ex.const(-1)),
        ex.Pow(ex.param("v"), 3))
    assert str(e) == "((u^3-1))/(v^3)"

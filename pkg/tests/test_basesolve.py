import os
import stat
import textwrap

import pytest

from trisolve.basesolve import (
    check_runge_c1,
    pell_fundamental,
    RungeConditionError,
    solve_quadratic,
    solve_runge_finite,
    solve_superelliptic,
)
from trisolve.eqparse import parse_equation
from trisolve.oracle import brute_force


def test_pell_fundamental():
    assert pell_fundamental(2) == (3, 2)
    assert pell_fundamental(3) == (2, 1)
    assert pell_fundamental(61) == (1766319049, 226153980)
    with pytest.raises(ValueError):
        pell_fundamental(9)


def test_quadratic_circle():
    s = solve_quadratic(1, 1, -1)
    assert s.finite == {(1, 0), (-1, 0), (0, 1), (0, -1)}


def test_quadratic_pell_orbit():
    s = solve_quadratic(1, -2, -1)
    pts, exact = s.enumerate_box(10**6)
    assert exact
    for (u, v) in pts:
        assert u * u - 2 * v * v == 1
    assert (3, 2) in set(pts) and (577, 408) in set(pts)
    # recurrence preserves the form along ten steps
    fam = s.families[0]
    vec = (3, 2)
    for _ in range(10):
        vec = fam.step(vec)
        assert vec[0] ** 2 - 2 * vec[1] ** 2 == 1


def test_quadratic_empty():
    assert solve_quadratic(1, 1, 1).is_empty_claim()


def test_quadratic_degenerate_square_disc():
    # u^2 - 4 v^2 = 9: (u-2v)(u+2v) = 9
    s = solve_quadratic(1, -4, -9)
    pts, _ = s.enumerate_box(100)
    truth = brute_force(parse_equation("u^2-4*v^2-9"), 100).solutions
    assert set(pts) == set(truth)


def test_quadratic_linear_factor_families():
    # u^2 = 9 v^2
    s = solve_quadratic(1, -9, 0)
    pts, _ = s.enumerate_box(30)
    truth = brute_force(parse_equation("u^2-9*v^2"), 30).solutions
    assert set(pts) == set(truth)


def test_quadratic_vs_oracle_random():
    import random

    rng = random.Random(5)
    for _ in range(60):
        A = rng.randint(-6, 6)
        B = rng.randint(-6, 6)
        C = rng.randint(-20, 20)
        if A == 0 and B == 0 and C != 0:
            continue
        s = solve_quadratic(A, B, C)
        pts, exact = s.enumerate_box(40)
        poly = s.equation
        if poly is None or not poly.monomials:
            continue
        run_vars = poly.variables
        truth = set(brute_force(poly, 40).solutions)
        got = set(pts)
        if len(run_vars) < 2:
            # a missing variable is free; compare on the present one only
            continue
        assert got == truth, (A, B, C)


def test_superelliptic_worked_examples():
    s = solve_superelliptic(1, -2, -1, 5, 5, bound=50, variables=["U", "v"])
    assert s.finite == {(-1, 1), (0, -1)}
    assert str(s.status) == "Complete"
    s = solve_superelliptic(1, -8, -1, 5, 5, bound=50, variables=["V", "u"])
    assert s.finite == {(0, -1)}
    assert str(s.status) == "SearchedToBound(50)"


def test_superelliptic_mordell():
    s = solve_superelliptic(1, 1, 1, 3, 2, bound=100)
    assert s.finite == {(-1, 0), (0, 1), (0, -1), (2, 3), (2, -3)}


def test_superelliptic_linear_family_complete():
    # 3y = x^2 + 2
    s = solve_superelliptic(3, 1, 2, 2, 1, bound=100)
    pts, exact = s.enumerate_box(25)
    assert exact and str(s.status) == "Complete"
    truth = brute_force(s.equation, 25).solutions
    assert set(pts) == set(truth)


def test_superelliptic_residue_empty():
    # 3y = x^2 + 1 has no solutions (x^2 = 2 mod 3 impossible)
    s = solve_superelliptic(3, 1, 1, 2, 1, bound=100)
    assert s.is_empty_claim()


def test_superelliptic_padic_emptiness():
    s = solve_superelliptic(1, -2, -44, 5, 5, bound=100)
    assert s.is_empty_claim() and str(s.status) == "Complete"


def test_superelliptic_swap_branch():
    # m > n: a y^5 = b x^2 + c handled by swapping
    s = solve_superelliptic(1, 1, 1, 2, 5, bound=100, variables=["x", "y"])
    truth = brute_force(s.equation, 50).solutions
    pts, _ = s.enumerate_box(50)
    assert set(pts) == set(truth)
    assert s.equation.variables == ["x", "y"]


def test_superelliptic_monotone_in_bound():
    small = solve_superelliptic(1, 1, -7, 3, 3, bound=20).finite
    large = solve_superelliptic(1, 1, -7, 3, 3, bound=200).finite
    assert small <= large


def test_runge_condition_checks():
    # x^4 + x^2 y^4 + y^2 with (n, m) = (4, 4): middle monomial passes (C1)
    assert check_runge_c1(parse_equation("x^4+x^2*y^4+y^2"))
    # x^4 + x y + y^3: every monomial fails the strict inequality
    assert not check_runge_c1(parse_equation("x^4+x*y+y^3"))
    with pytest.raises(RungeConditionError):
        solve_runge_finite(parse_equation("x^4+x*y+y^3"), 10)
    with pytest.raises(RungeConditionError):
        check_runge_c1(parse_equation("x^2+x^3+y^0"))


def test_runge_bounded_search():
    out = solve_runge_finite(parse_equation("x^2+x^2*y^4+y^2"), 10)
    truth = brute_force(parse_equation("x^2+x^2*y^4+y^2"), 10).solutions
    assert set(out.finite) == set(truth)
    assert str(out.status) == "SearchedToBound(10)"
    assert str(solve_runge_finite(
        parse_equation("x^2+x^2*y^4+y^2"), 10,
        effective_bound=True).status) == "Complete"


def test_backend_hook(tmp_path):
    script = tmp_path / "fake_backend.py"
    script.write_text(textwrap.dedent("""\
        #!/usr/bin/env python3
        import sys
        line = sys.stdin.readline().split()
        assert line[0] == "SOLVE"
        print("SOL 0 -1")
        print("END COMPLETE")
        """))
    script.chmod(script.stat().st_mode | stat.S_IEXEC)
    s = solve_superelliptic(1, -8, -1, 5, 5, bound=50,
                            backend=f"python3 {script}")
    assert str(s.status) == "Complete"
    assert (0, -1) in s.finite


def test_superelliptic_linear_random_complete():
    # a y = b x^n + c families are oracle-complete on boxes
    import random

    rng = random.Random(314)
    for _ in range(100):
        a = rng.choice([1, 2, 3, 4, 5, -2, -3])
        b = rng.choice([1, 2, 3, -1, -2])
        c = rng.randint(-6, 6)
        n = rng.randint(1, 4)
        s = solve_superelliptic(a, b, c, n, 1, bound=100)
        assert str(s.status) == "Complete"
        pts, exact = s.enumerate_box(30)
        assert exact
        truth = brute_force(s.equation, 30).solutions
        assert set(pts) == set(truth), (a, b, c, n)

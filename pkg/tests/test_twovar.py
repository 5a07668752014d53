import random

from trisolve.eqparse import parse_trinomial
from trisolve.oracle import brute_force
from trisolve.twovar import (
    TwoVarForm,
    normalize_two_var,
    solve_equality_case,
    solve_masser,
    solve_two_var,
)


def box_match(text, B=30, bound=2000):
    eq = parse_trinomial(text)
    rep = solve_two_var(eq, bound=bound)
    pts, exact = rep.solutions.enumerate_box(B)
    truth = brute_force(eq.full_polynomial(), B).solutions
    assert set(pts) == set(truth), (
        text, sorted(set(truth) - set(pts))[:5], sorted(set(pts) - set(truth))[:5])
    return rep


def test_normalize_to_form():
    eq = parse_trinomial("x^4+2*x*y+y^3")
    form = normalize_two_var(eq)
    assert isinstance(form, TwoVarForm)
    assert (form.n, form.k, form.l, form.m) == (4, 1, 1, 3)


def test_normalize_divisor_case():
    # x^4 y + x y^2 + y cancels y, leaving a constant monomial and two mixed
    eq = parse_trinomial("x^4*y + x*y^2 + y")
    norm = normalize_two_var(eq)
    assert isinstance(norm, TwoVarForm) or isinstance(norm, tuple)
    box_match("x^4*y + x*y^2 + y", B=20)


def test_monomial_gcd_cancellation():
    rep = box_match("x^2*y^2 + x^3*y + x*y", B=20)
    assert rep.equation.cancelled == {"x": 1, "y": 1}


def test_worked_example():
    eq = parse_trinomial("x^4+x*y+2*y^3")
    rep = solve_two_var(eq, bound=300)
    pts, _ = rep.solutions.enumerate_box(100)
    assert set(pts) == {(0, 0), (-1, -1)}
    # the two intermediate equations appear in the trace with their solutions
    descriptions = {r.description: set(map(tuple, r.solutions))
                    for r in rep.base_records}
    thue1 = [d for d in descriptions
             if "2*y^5" in d and descriptions[d]]  # v^5 + 2U^5 = -1 variants
    thue2 = [d for d in descriptions if "8" in d.split("*")[0] or
             d.startswith("-8")]
    assert any({(-1, 0), (1, -1)} <= {(v, u) for (v, u) in descriptions[d]}
               or {(-1, 0), (1, -1)} == {(v, u) for (v, u) in descriptions[d]}
               for d in thue1)
    assert any(descriptions[d] == {(0, -1)} or descriptions[d] == {(0, 1)}
               for d in thue2)


def test_equality_case_rows():
    # x^4 + x^2 y + y^2 = 0 reduces to t^2 + t + 1 with no rational roots
    rep = box_match("x^4+x^2*y+y^2", B=40)
    assert "equality" in rep.path
    assert {t for t in rep.solutions.enumerate_box(40)[0]} == {(0, 0)}


def test_equality_case_factorable():
    # x^2 - 3xy + 2y^2 = 0: t^2 - 3t + 2, roots 1 and 2
    rep = box_match("x^2-3*x*y+2*y^2", B=25)
    assert "equality" in rep.path
    pts = rep.solutions.enumerate_box(6)[0]
    assert (2, 1) in set(pts) and (3, 3) in set(pts) and (6, 3) in set(pts)


def test_equality_case_negative_discriminant():
    rep = box_match("x^2+x*y+y^2", B=25)
    assert rep.solutions.enumerate_box(25)[0] == [(0, 0)]


def test_strict_case_identity_assertion():
    # the derived-exponent identities hold on every oriented strict instance
    rng = random.Random(31)
    checked = 0
    while checked < 200:
        n = rng.randint(1, 7)
        k = rng.randint(0, n - 1) if n > 1 else 0
        m = rng.randint(1, 7)
        l = rng.randint(0, m - 1) if m > 1 else 0
        if n * l + m * k >= m * n or (k == 0 and l == 0):
            continue
        form = TwoVarForm(1, 1, 1, n, k, l, m, ["x", "y"])
        lp, np_, mp, kp, ev, eu = form.strict_data()
        assert n * lp - k * lp - l * np_ == 0
        assert m * kp - k * mp - l * kp == 0
        assert ev > 0 and eu > 0
        checked += 1


def test_table2_family_rows_box100():
    for text in ("x^4+x*y^2+y^3", "x^4+x^2*y+y^3", "x^5+x^2*y^2+y^4"):
        rep = box_match(text, B=100, bound=10_000)
        assert str(rep.solutions.status) == "Complete"


def test_runge_path():
    rep = box_match("x^2+x^3*y^3+y^2", B=25)
    assert "runge" in rep.path


def test_masser_rows():
    s = solve_masser(6, bound=3000)
    assert {t for t in s.finite if t != (0, 0)} == {
        (-6, -12), (-2, -4), (-2, 2), (3, -3)}
    s = solve_masser(88, bound=5000)
    assert {t for t in s.finite if t != (0, 0)} == {(396, -2904)}
    s = solve_masser(1, bound=2000)
    assert {t for t in s.finite if t != (0, 0)} == set()


def test_masser_zero_coefficient():
    s = solve_masser(0, bound=100)
    pts, _ = s.enumerate_box(20)
    for (x, y) in pts:
        assert x**4 + y**3 == 0
    assert {(0, 0), (-1, -1), (1, -1), (8, -16)} <= set(pts)


def test_random_small_trinomials_vs_oracle():
    rng = random.Random(17)
    checked = 0
    while checked < 25:
        rows = set()
        while len(rows) < 3:
            rows.add((rng.randint(0, 4), rng.randint(0, 4)))
        rows = list(rows)
        coeffs = [rng.choice([1, 2, 3, -1, -2]) for _ in range(3)]
        text = ""
        for c, (i, j) in zip(coeffs, rows):
            body = str(c)
            if i:
                body += f"*x^{i}"
            if j:
                body += f"*y^{j}"
            text += ("+" if not body.startswith("-") and text else "") + body
        eq = parse_trinomial(text)
        if len(eq.variables) != 2:
            continue
        checked += 1
        box_match(text, B=12, bound=400)

"""The complete pipeline for two-variable three-monomial equations:
trivial split, normalization to a*x^n + b*x^k*y^l + c*y^m = 0, the finite
divisor branches, the equality case (rational roots of a one-variable
trinomial), the strict case (prime-split candidates and base equations), the
Runge fallback, and the dedicated x^4 + a*x*y + y^3 solver.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .basesolve import BaseSolveRecord, solve_superelliptic, solve_runge_finite
from .eqparse import Monomial, Polynomial, TrinomialEquation, parse_trinomial
from .intcore import divisors, exact_iroot, factorize, solve_univariate, valuation
from .lindioph import solve_two_term, solve_xy_eq_zt
from .solset import (
    COMPLETE,
    AllIntegers,
    MappedFamily,
    SolutionFamily,
    SolutionSet,
    searched,
)
from . import expr as ex


@dataclass
class TwoVarForm:
    """a*x^n + b*x^k*y^l + c*y^m = 0."""

    a: int
    b: int
    c: int
    n: int
    k: int
    l: int
    m: int
    variables: list[str]

    def strict_data(self):
        """The derived exponents l', n', m', k' and the base-equation
        exponents; asserts the defining identities."""
        n, k, l, m = self.n, self.k, self.l, self.m
        g1 = gcd(l, n - k)
        lp, np_ = l // g1, (n - k) // g1
        g2 = gcd(k, m - l)
        mp, kp = (m - l) // g2, k // g2
        ev = n * mp - k * mp - l * kp
        eu = m * np_ - k * lp - l * np_
        assert n * lp - k * lp - l * np_ == 0
        assert m * kp - k * mp - l * kp == 0
        assert ev > 0 and eu > 0
        return lp, np_, mp, kp, ev, eu


@dataclass
class TwoVarReport:
    equation: TrinomialEquation
    path: list[str]
    solutions: SolutionSet
    base_records: list[BaseSolveRecord] = field(default_factory=list)


# ---------------------------------------------------------------------------
# trivial solutions (some variable zero) of the full, uncancelled equation
# ---------------------------------------------------------------------------

def trivial_two_var(full_poly: Polynomial, variables: list[str]) -> SolutionSet:
    out = SolutionSet(variables, status=COMPLETE, equation=full_poly)
    for idx, var in enumerate(variables):
        other = variables[1 - idx]
        sub = full_poly.substitute_zero({var})
        if not sub.monomials:
            out.families.append(_axis_family(variables, idx))
            continue
        deg = sub.degree_in(other)
        coeffs = [0] * (deg + 1)
        for mono in sub.monomials:
            coeffs[mono.exp_of(other)] += mono.coeff
        if all(c == 0 for c in coeffs):
            out.families.append(_axis_family(variables, idx))
            continue
        for root in solve_univariate(coeffs)[0]:
            tup = [0, 0]
            tup[1 - idx] = root
            out.add_finite(tuple(tup))
    return out


def _axis_family(variables, zero_index):
    free = variables[1 - zero_index]

    def witness(sol):
        return {"w": sol[1 - zero_index]} if sol[zero_index] == 0 else None

    return SolutionFamily(
        variables=list(variables),
        params=[("w", AllIntegers())],
        exprs={variables[zero_index]: ex.const(0), free: ex.param("w")},
        witness=witness, exact_box=True,
        note=f"{variables[zero_index]} = 0")


# ---------------------------------------------------------------------------
# normalization to the (n, k, l, m) form
# ---------------------------------------------------------------------------

def normalize_two_var(eq: TrinomialEquation):
    """Either a TwoVarForm, or ('divisors', const_coeff) when both non-constant
    monomials involve both variables (finite check through divisors)."""
    if len(eq.variables) != 2:
        raise ValueError("normalize_two_var needs exactly two variables")
    xs = [row[0] for row in eq.rows]
    ys = [row[1] for row in eq.rows]
    pure_x = [i for i in range(3) if ys[i] == 0]
    pure_y = [j for j in range(3) if xs[j] == 0]
    for i in pure_x:
        for j in pure_y:
            if i != j:
                mid = 3 - i - j
                return TwoVarForm(
                    a=eq.coeffs[i], b=eq.coeffs[mid], c=eq.coeffs[j],
                    n=xs[i], k=xs[mid], l=ys[mid], m=ys[j],
                    variables=list(eq.variables))
    # the only y-free monomial is also the only x-free one: a constant,
    # and the other two involve both variables
    const = pure_x[0]
    return ("divisors", const)


# ---------------------------------------------------------------------------
# finite divisor branches
# ---------------------------------------------------------------------------

def _solve_y_power(coeff: int, l: int, rhs: int) -> list[int]:
    """Integer y with coeff * y**l == rhs."""
    if rhs % coeff:
        return []
    val = rhs // coeff
    if val == 0:
        return [0]
    root = exact_iroot(abs(val), l)
    out = []
    for y in ({root, -root} if root is not None else set()):
        if y is not None and y**l == val:
            out.append(y)
    return out


def _divisor_branch_const(eq: TrinomialEquation, const_index: int) -> SolutionSet:
    """Both non-constant monomials contain y (and x): y divides the constant
    coefficient; substitute each divisor and solve for x."""
    variables = list(eq.variables)
    out = SolutionSet(variables, status=COMPLETE, equation=eq.polynomial())
    c_const = eq.coeffs[const_index]
    poly = eq.polynomial()
    vx, vy = variables
    for y0 in _signed_divs(c_const):
        coeffs = _substitute_univariate(poly, vy, y0, vx)
        if all(co == 0 for co in coeffs):
            continue
        for x0 in solve_univariate(coeffs)[0]:
            if x0 != 0:
                out.add_finite((x0, y0))
    return out


def _substitute_univariate(poly: Polynomial, var: str, value: int,
                           remaining: str) -> list[int]:
    deg = poly.degree_in(remaining)
    coeffs = [0] * (deg + 1)
    for mono in poly.monomials:
        coeffs[mono.exp_of(remaining)] += mono.coeff * value ** mono.exp_of(var)
    return coeffs


def _signed_divs(n: int) -> list[int]:
    out = divisors(n)
    return [-d for d in reversed(out)] + out


def _divisor_branch_form(form: TwoVarForm) -> SolutionSet:
    """(11)-form with m = 0 and k*l > 0: x divides c, finitely many x."""
    variables = form.variables
    out = SolutionSet(variables, status=COMPLETE)
    for x0 in _signed_divs(form.c):
        rhs = -(form.a * x0**form.n + form.c)
        for y in _solve_y_power(form.b * x0**form.k, form.l, rhs):
            if y != 0:
                out.add_finite((x0, y))
    return out


# ---------------------------------------------------------------------------
# equality case: nl + mk = mn
# ---------------------------------------------------------------------------

def solve_equality_case(form: TwoVarForm, trace=None) -> SolutionSet:
    """Reduce to a one-variable trinomial a t^u + b t^r + c via t = x^w / y^v
    and solve a two-monomial equation per rational root."""
    from .twomon import solve_power_product

    n, k, l, m = form.n, form.k, form.l, form.m
    u, v, w, r = (abs(t) for t in solve_xy_eq_zt(m, k, n, m - l))
    coeffs = [0] * (u + 1)
    coeffs[0] += form.c
    coeffs[r] += form.b
    coeffs[u] += form.a
    _, rationals = solve_univariate(coeffs)
    out = SolutionSet(form.variables, status=COMPLETE)
    if trace is not None:
        trace.append(BaseSolveRecord(
            f"{form.a}*t^{u} + {form.b}*t^{r} + {form.c} = 0",
            [], f"rational roots {[str(q) for q in rationals]}"))
    for root in rationals:
        part = solve_power_product([w, -v], root, form.variables)
        out = out.union(part)
    return out


# ---------------------------------------------------------------------------
# strict case: nl + mk < mn
# ---------------------------------------------------------------------------

def _candidate_pairs(form: TwoVarForm):
    """All (x_i, y_i) candidate magnitudes from splitting the primes of abc
    into the three valuation cases, with bounded enumeration in the first."""
    n, k, l, m = form.n, form.k, form.l, form.m
    primes = factorize(form.a * form.b * form.c).primes()
    D = n * m - k * m - l * n
    g = gcd(n, m)
    per_prime_options: list[list[list[tuple[int, int]]]] = []
    for p in primes:
        ap, bp, cp = (valuation(form.a, p), valuation(form.b, p),
                      valuation(form.c, p))
        opts_by_case = []
        # case 3: b-monomial valuation strictly largest
        s = solve_two_term(n, m, cp - ap)
        case3 = []
        if s.solvable:
            hp = bp + k * s.x0 + l * s.y0 - ap - n * s.x0
            if hp * g >= 1:
                u_max = (hp * g - 1) // D
                for uu in range(u_max + 1):
                    case3.append((s.x0 + s.step_x * uu, s.y0 + s.step_y * uu))
        opts_by_case.append(case3)
        # case 4: equality with the first monomial
        s = solve_two_term(n - k, l, bp - ap)
        opts_by_case.append([(s.x0, s.y0)] if s.solvable else [])
        # case 5: equality with the third monomial
        s = solve_two_term(k, m - l, cp - bp)
        opts_by_case.append([(s.x0, s.y0)] if s.solvable else [])
        per_prime_options.append(opts_by_case)

    candidates = {(1, 1)}
    for p, opts_by_case in zip(primes, per_prime_options):
        new = set()
        merged = [pair for case in opts_by_case for pair in case]
        for xe, ye in merged:
            for cx, cy in candidates:
                new.add((cx * p**xe, cy * p**ye))
        candidates = new
        if not candidates:
            break
    return sorted(candidates)


def solve_strict_case(form: TwoVarForm, bound: int = 10_000,
                      backend: str | None = None,
                      trace: list | None = None) -> SolutionSet:
    lp, np_, mp, kp, ev, eu = form.strict_data()
    variables = form.variables
    out = SolutionSet(variables, status=COMPLETE)
    cache: dict[tuple, SolutionSet] = {}
    for xa, ya in _candidate_pairs(form):
        for sx in (1, -1):
            for sy in (1, -1):
                xi, yi = sx * xa, sy * ya
                A = form.c * yi**form.m
                B = -form.a * xi**form.n
                C = -form.b * xi**form.k * yi**form.l
                key = (A, B, C, ev, eu)
                if key not in cache:
                    cache[key] = solve_superelliptic(
                        A, B, C, ev, eu, bound=bound,
                        variables=["v", "u"], backend=backend, trace=trace)
                base = cache[key]
                out.status = out.status.combine(base.status)
                out.provenance = sorted(set(out.provenance)
                                        | set(base.provenance))
                for (v0, u0) in base.finite:
                    x = xi * u0**lp * v0**mp
                    y = yi * u0**np_ * v0**kp
                    if x != 0 and y != 0:
                        out.add_finite((x, y))
                for fam in base.families:
                    out.families.append(_lifted_family(
                        fam, variables, xi, yi, lp, np_, mp, kp))
    return out


def _lifted_family(fam, variables, xi, yi, lp, np_, mp, kp):
    inner = SolutionSet(["v", "u"], families=[fam], status=COMPLETE)

    def lift(point):
        v0, u0 = point
        x = xi * u0**lp * v0**mp
        y = yi * u0**np_ * v0**kp
        return [(x, y)] if x != 0 and y != 0 else []

    return MappedFamily(
        variables=list(variables), inner=inner, lift=lift,
        inner_bound=lambda b: b,
        exact_box=fam.exact_box,
        note=f"strict-case lift x={xi}*u^{lp}*v^{mp}, y={yi}*u^{np_}*v^{kp}")


# ---------------------------------------------------------------------------
# Runge path
# ---------------------------------------------------------------------------

def solve_runge_path(form: TwoVarForm, bound: int,
                     trace: list | None = None) -> SolutionSet:
    n, k, l, m = form.n, form.k, form.l, form.m
    d = gcd(gcd(n, m), gcd(k, l))
    vx, vy = form.variables
    monos = []
    for coeff, (i, j) in ((form.a, (n, 0)), (form.b, (k, l)), (form.c, (0, m))):
        exps = {}
        if i:
            exps[vx] = i // d
        if j:
            exps[vy] = j // d
        monos.append(Monomial.make(coeff, exps))
    sub_poly = Polynomial(monos, [vx, vy])
    inner = solve_runge_finite(sub_poly, bound)
    from .intcore import iroot

    eff = iroot(bound, d) if d > 1 else bound
    out = SolutionSet(form.variables, status=searched(eff))
    if trace is not None:
        trace.append(BaseSolveRecord(
            f"runge d={d}: {len(inner.finite)} solutions of the power form",
            sorted(inner.finite), str(inner.status)))
    for (X, Y) in inner.finite:
        for x in _dth_roots(X, d):
            for y in _dth_roots(Y, d):
                if x != 0 and y != 0:
                    out.add_finite((x, y))
    return out


def _dth_roots(value: int, d: int) -> list[int]:
    if d == 1:
        return [value]
    if value < 0 and d % 2 == 0:
        return []
    root = exact_iroot(value, d)
    if root is None:
        return []
    return sorted({root, -root}) if d % 2 == 0 else [root]


# ---------------------------------------------------------------------------
# dispatcher
# ---------------------------------------------------------------------------

def solve_two_var(eq: TrinomialEquation, bound: int = 10_000,
                  backend: str | None = None) -> TwoVarReport:
    variables = list(eq.variables)
    trace: list[BaseSolveRecord] = []
    path = []
    trivial = trivial_two_var(eq.full_polynomial(), variables)
    norm = normalize_two_var(eq)
    if isinstance(norm, tuple):
        path.append("divisor-branch")
        nonzero = _divisor_branch_const(eq, norm[1])
    else:
        nonzero, path = _solve_form(norm, bound, backend, trace)
    merged = trivial.union(nonzero)
    merged.equation = eq.full_polynomial()
    return TwoVarReport(eq, path, merged, trace)


def _solve_form(form: TwoVarForm, bound, backend, trace):
    from .twomon import solve_power_product

    n, k, l, m = form.n, form.k, form.l, form.m
    path: list[str] = []

    if n == 0 and m == 0:
        path.append("constant-ends")
        target = Fraction(-(form.a + form.c), form.b)
        if target == 0:
            return SolutionSet(form.variables, status=COMPLETE), path
        return solve_power_product([k, l], target, form.variables), path

    if k == 0 and l == 0:
        path.append("base-equation")
        out = solve_superelliptic(form.c, -form.a, -form.b, n, m,
                                  bound=bound, variables=form.variables,
                                  backend=backend, trace=trace)
        return out, path

    if l == 0:
        if n == 0:
            path.append("base-equation")
            out = solve_superelliptic(form.c, -form.b, -form.a, k, m,
                                      bound=bound, variables=form.variables,
                                      backend=backend, trace=trace)
            return out, path
        if k > n:
            form = TwoVarForm(form.b, form.a, form.c, k, n, 0, m,
                              form.variables)
        path.append("strict")
        return solve_strict_case(form, bound, backend, trace), path

    if k == 0:
        if m == 0:
            path.append("base-equation")
            out = solve_superelliptic(form.b, -form.a, -form.c, n, l,
                                      bound=bound, variables=form.variables,
                                      backend=backend, trace=trace)
            return out, path
        if l > m:
            form = TwoVarForm(form.a, form.c, form.b, n, 0, m, l,
                              form.variables)
        path.append("strict")
        return solve_strict_case(form, bound, backend, trace), path

    # k*l > 0 from here on
    if m == 0:
        path.append("divisor-branch")
        return _divisor_branch_form(form), path
    if n == 0:
        flipped = TwoVarForm(form.c, form.b, form.a, m, l, k, 0,
                             [form.variables[1], form.variables[0]])
        path.append("divisor-branch")
        sols = _divisor_branch_form(flipped)
        out = SolutionSet(form.variables, status=sols.status)
        for (y, x) in sols.finite:
            out.add_finite((x, y))
        return out, path

    lhs, rhs = n * l + m * k, m * n
    if lhs < rhs:
        path.append("strict")
        return solve_strict_case(form, bound, backend, trace), path
    if lhs == rhs:
        path.append("equality")
        return solve_equality_case(form, trace), path
    path.append("runge")
    return solve_runge_path(form, bound, trace), path


# ---------------------------------------------------------------------------
# x^4 + a x y + y^3 = 0
# ---------------------------------------------------------------------------

def solve_masser(a: int, bound: int = 10_000,
                 backend: str | None = None,
                 trace: list | None = None) -> SolutionSet:
    """Dedicated solver for x^4 + a*x*y + y^3 = 0 via the gcd substitution:
    candidates (u, w) with u*w | a, then one quintic base equation each."""
    variables = ["x", "y"]
    if a == 0:
        from .twomon import solve_two_monomial
        from .eqparse import parse_equation

        out = SolutionSet(variables, status=COMPLETE)
        out.add_finite((0, 0))
        return out.union(solve_two_monomial(parse_equation("x^4 + y^3")))
    eq = parse_trinomial(f"x^4 + {a}*x*y + y^3" if a >= 0
                         else f"x^4 - {-a}*x*y + y^3")
    out = SolutionSet(variables, status=COMPLETE, equation=eq.polynomial())
    out.add_finite((0, 0))
    for u in divisors(a):
        for w in divisors(abs(a) // u):
            # u w^2 x1^5 + w u^3 v^5 = -a, variables (x1, v)
            base = solve_superelliptic(
                w * u**3, -u * w**2, -a, 5, 5, bound=bound,
                variables=["x1", "v"], backend=backend, trace=trace)
            out.status = out.status.combine(base.status)
            out.provenance = sorted(set(out.provenance) | set(base.provenance))
            for (x1, v) in base.finite:
                if x1 == 0 or v == 0:
                    continue
                kk = u * v * w
                d = kk * x1
                x, y = d * x1, d * u * v * v
                if x**4 + a * x * y + y**3 == 0:
                    out.add_finite((x, y))
    return out

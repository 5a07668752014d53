"""Solvers for the base equation shapes a*y^m = b*x^n + c, quadratic forms
A*u^2 + B*v^2 + C = 0, and Runge-condition bounded search.

Everything elementary is solved completely (m <= 1, quadratics, two-monomial,
definite or factorable power forms, p-adically impossible equations).  The
remaining Thue / superelliptic cases run a bounded search whose status is
SearchedToBound unless an external backend certifies completeness, or the
equation has |C| = 1 in reduced two-power form and the search exhibits the
unique positive solution (uniqueness by Bennett's theorem on |ax^n - by^n|=1).
"""

from __future__ import annotations

import shlex
import subprocess
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from . import expr as ex
from .eqparse import Monomial, Polynomial
from .intcore import (
    exact_iroot,
    factorize,
    rational_root_d,
    solve_univariate,
    valuation,
)
from .solset import (
    COMPLETE,
    AllIntegers,
    RecurrenceFamily,
    SolutionFamily,
    SolutionSet,
    searched,
)

BENNETT_CITATION = ("uniqueness of the positive solution of |a*x^n - b*y^n| = 1 "
                    "(Bennett, J. reine angew. Math. 535, 2001)")


class ResourceLimit(RuntimeError):
    pass


class RungeConditionError(ValueError):
    pass


@dataclass
class BaseSolveRecord:
    """One solved base equation, for dispatch traces."""

    description: str
    solutions: list[tuple[int, int]]
    status: str
    families: int = 0


# ---------------------------------------------------------------------------
# Quadratic forms A u^2 + B v^2 + C = 0
# ---------------------------------------------------------------------------

def pell_fundamental(d: int) -> tuple[int, int]:
    """Least (t, s) with t^2 - d*s^2 = 1, t,s > 0; d a positive non-square."""
    a0 = isqrt(d)
    if a0 * a0 == d:
        raise ValueError("d must not be a square")
    m, den, a = 0, 1, a0
    num1, num = 1, a0
    den1, den_c = 0, 1
    while num * num - d * den_c * den_c != 1:
        m = den * a - m
        den = (d - m * m) // den
        a = (a0 + m) // den
        num1, num = num, a * num + num1
        den1, den_c = den_c, a * den_c + den1
    return num, den_c


def solve_quadratic(A: int, B: int, C: int,
                    variables: list[str] | None = None,
                    seed_limit: int = 2_000_000) -> SolutionSet:
    """Complete integer solution set of A u^2 + B v^2 + C = 0."""
    variables = variables or ["u", "v"]
    eq = _quad_poly(A, B, C, variables)
    out = SolutionSet(variables, status=COMPLETE, equation=eq)

    if A == 0 and B == 0:
        if C == 0:
            out.families.append(_free_family(variables))
        return out
    if A == 0 or B == 0:
        coef = B if A == 0 else A
        fixed_index = 1 if A == 0 else 0
        if C % coef != 0 or -C // coef < 0:
            return out
        s = exact_iroot(-C // coef, 2)
        if s is None:
            return out
        for val in {s, -s}:
            out.families.append(
                _line_family(variables, fixed_index, val))
        return out
    if C == 0:
        out.add_finite((0, 0))
        root = rational_root_d(Fraction(-B, A), 2) if -B * A > 0 else None
        if root is not None:
            p, q = root.numerator, root.denominator
            for sp in (p, -p):
                out.families.append(_ray_family(variables, sp, q))
        return out

    if A * B > 0:
        sign = 1 if A > 0 else -1
        if (-C) * sign <= 0:
            return out
        for u in range(0, isqrt((-C) // A if sign == 1 else C // (-A)) + 1):
            rem = -C - A * u * u
            if rem % B:
                continue
            vv = rem // B
            if vv < 0:
                continue
            v = exact_iroot(vv, 2)
            if v is None:
                continue
            for su in {u, -u}:
                for sv in {v, -v}:
                    out.add_finite((su, sv))
        return out

    # indefinite: A*B < 0
    D = -A * B
    s0 = exact_iroot(D, 2)
    N = -A * C
    if s0 is not None:
        # (Au - s0 v)(Au + s0 v) = N with N != 0
        for d in _signed_divisors(N):
            e = N // d
            if (d + e) % 2 or (e - d) % 2:
                continue
            x, y2 = (d + e) // 2, (e - d) // 2
            if x % A or y2 % s0:
                continue
            out.add_finite((x // A, y2 // s0))
        return out

    t, s = pell_fundamental(D)
    matrix = ((t, B * s), (-A * s, t))
    seeds = set()
    if N > 0:
        vmax = isqrt((N * (t - 1)) // (2 * D)) + 1
        vmin = 0
    else:
        vmin = isqrt((-N) // D)
        vmax = isqrt(((-N) * (t + 1)) // (2 * D)) + 1
    if vmax - vmin > seed_limit:
        raise ResourceLimit(f"Pell seed scan of {vmax - vmin} values")
    for v in range(vmin, vmax + 1):
        xx = N + D * v * v
        if xx < 0:
            continue
        x = exact_iroot(xx, 2)
        if x is None or x % A:
            continue
        for su in {x // A, -x // A}:
            for sv in {v, -v}:
                if A * su * su + B * sv * sv + C == 0:
                    seeds.add((su, sv))
    if seeds:
        fam = RecurrenceFamily(variables=list(variables),
                               seeds=sorted(seeds), matrix=matrix,
                               note=f"Pell orbit, automorph of ({A},{B})")
        out.families.append(fam)
    return out


def _quad_poly(A, B, C, variables):
    monos = []
    if A:
        monos.append(Monomial.make(A, {variables[0]: 2}))
    if B:
        monos.append(Monomial.make(B, {variables[1]: 2}))
    if C:
        monos.append(Monomial.make(C, {}))
    return Polynomial(monos, list(variables))


def _free_family(variables):
    return SolutionFamily(
        variables=list(variables),
        params=[(f"u_{v}", AllIntegers()) for v in variables],
        exprs={v: ex.param(f"u_{v}") for v in variables},
        witness=lambda sol: {f"u_{v}": x for v, x in zip(variables, sol)},
        exact_box=True, note="identically zero")


def _line_family(variables, fixed_index, value):
    free_var = variables[1 - fixed_index]

    def witness(sol):
        if sol[fixed_index] != value:
            return None
        return {"w": sol[1 - fixed_index]}

    return SolutionFamily(
        variables=list(variables),
        params=[("w", AllIntegers())],
        exprs={variables[fixed_index]: ex.const(value), free_var: ex.param("w")},
        witness=witness, exact_box=True,
        note=f"{variables[fixed_index]} = {value}")


def _ray_family(variables, p, q):
    def witness(sol):
        if q and sol[1] % q == 0 and sol[0] * q == p * (sol[1] // q):
            return {"t": sol[1] // q}
        return None

    return SolutionFamily(
        variables=list(variables),
        params=[("t", AllIntegers())],
        exprs={variables[0]: ex.monomial_expr(p, [("t", 1)]),
               variables[1]: ex.monomial_expr(q, [("t", 1)])},
        witness=witness, exact_box=True,
        note=f"ray ({p}t, {q}t)")


def _signed_divisors(n: int) -> list[int]:
    from .intcore import divisors

    out = divisors(n)
    return [-d for d in reversed(out)] + out


# ---------------------------------------------------------------------------
# Two-power equations A x^N + B y^M = C: certificates and search
# ---------------------------------------------------------------------------

@dataclass
class _TwoPower:
    """A x^N + B y^M = C with the original variables recoverable via
    x_orig = mul_x * x, y_orig = mul_y * y."""

    A: int
    B: int
    C: int
    N: int
    M: int
    mul_x: int = 1
    mul_y: int = 1

    def describe(self) -> str:
        return f"{self.A}*x^{self.N} + {self.B}*y^{self.M} = {self.C}"


def _twopower_descend(tp: _TwoPower, rounds: int = 64):
    """Strip forced prime powers from the variables; detect p-adic
    impossibility.  Returns (tp', empty: bool)."""
    for _ in range(rounds):
        g = gcd(gcd(tp.A, tp.B), tp.C)
        if g > 1:
            tp = _TwoPower(tp.A // g, tp.B // g, tp.C // g, tp.N, tp.M,
                           tp.mul_x, tp.mul_y)
        moved = False
        for p in factorize(abs(tp.A) * abs(tp.B) * abs(tp.C)).primes():
            ap, bp, cp = (valuation(tp.A, p), valuation(tp.B, p),
                          valuation(tp.C, p))
            if ap == 0 and bp == 0 and cp == 0:
                continue
            feas = _feasible_valuations(ap, bp, cp, tp.N, tp.M, p)
            if feas == "empty":
                return tp, True
            if feas == "x":
                tp = _TwoPower(tp.A * p**tp.N, tp.B, tp.C, tp.N, tp.M,
                               tp.mul_x * p, tp.mul_y)
                moved = True
                break
            if feas == "y":
                tp = _TwoPower(tp.A, tp.B * p**tp.M, tp.C, tp.N, tp.M,
                               tp.mul_x, tp.mul_y * p)
                moved = True
                break
        if not moved:
            return tp, False
    return tp, False


def _feasible_valuations(ap: int, bp: int, cp: int, N: int, M: int, p: int):
    """Classify the p-adic options for (v_p(x), v_p(y)) in A x^N + B y^M = C.

    Returns 'empty' (no option: the equation has no integer solutions with
    xy != 0 ... and none with xy = 0 either, checked separately), 'x' or 'y'
    (that variable is forced divisible by p), or 'free'.
    """
    options = []
    # alpha, beta are v_p(x), v_p(y); term valuations ap+N*alpha, bp+M*beta, cp
    # Case I: ap + N a = bp + M b <= cp
    for a in range(0, cp // N + 2):
        lhs = ap + N * a
        if lhs > cp:
            break
        if (lhs - bp) % M == 0 and lhs >= bp:
            options.append((a, (lhs - bp) // M))
    # Case II: ap + N a = cp <= bp + M b
    if (cp - ap) % N == 0 and cp >= ap:
        a = (cp - ap) // N
        b_min = max(0, -(-(cp - bp) // M))
        options.append((a, b_min))
    # Case III: bp + M b = cp <= ap + N a
    if (cp - bp) % M == 0 and cp >= bp:
        b = (cp - bp) // M
        a_min = max(0, -(-(cp - ap) // N))
        options.append((a_min, b))
    # xy = 0 cases are handled by the caller's direct substitution; here a
    # solution with x = 0 corresponds to alpha = infinity, covered by case III
    # tails, and vice versa, so `options` nonempty is what matters.
    if not options:
        return "empty"
    if all(a >= 1 for a, _ in options):
        return "x"
    if all(b >= 1 for _, b in options):
        return "y"
    return "free"


def _twopower_axis_solutions(tp: _TwoPower) -> list[tuple[int, int]] | None:
    """Solutions with x = 0 or y = 0, or None when 0 = C makes them free
    (cannot happen for C != 0)."""
    out = []
    # x = 0: B y^M = C
    if tp.C % tp.B == 0:
        root = exact_iroot(abs(tp.C // tp.B), tp.M)
        for y in ({root, -root} if root is not None else set()):
            if y is not None and tp.B * y**tp.M == tp.C:
                out.append((0, y))
    if tp.C % tp.A == 0:
        root = exact_iroot(abs(tp.C // tp.A), tp.N)
        for x in ({root, -root} if root is not None else set()):
            if x is not None and tp.A * x**tp.N == tp.C:
                out.append((x, 0))
    return sorted(set(out))


def _twopower_search(tp: _TwoPower, bound: int) -> list[tuple[int, int]]:
    """All solutions with |x| <= bound (y solved exactly by root extraction)."""
    out = set(_twopower_axis_solutions(tp))
    A, B, C, N, M = tp.A, tp.B, tp.C, tp.N, tp.M
    absB = abs(B)
    residues = {r for r in range(absB)
                if (C - A * pow(r, N, absB)) % absB == 0}
    for x in range(-bound, bound + 1):
        if x == 0 or x % absB not in residues:
            continue
        rem = C - A * x**N
        val = rem // B  # exact: x passed the residue filter
        if val == 0:
            continue
        if M % 2 == 0:
            if val < 0:
                continue
            root = exact_iroot(val, M)
            if root is None:
                continue
            out.add((x, root))
            out.add((x, -root))
        else:
            root = exact_iroot(val, M)
            if root is not None:
                out.add((x, root))
    return sorted(out)


def _twopower_factorable(tp: _TwoPower) -> list[tuple[int, int]] | None:
    """Complete solving when N == M and -B/A is a d-th power of a rational:
    substitute U = q x, V = p y and enumerate divisors of the difference."""
    if tp.N != tp.M:
        return None
    D = tp.N
    root = rational_root_d(Fraction(-tp.B, tp.A), D)
    if root is None:
        return None
    p, q = root.numerator, root.denominator
    # A q^D x^D - A (p y)^D = C q^D, i.e. U^D - V^D = C q^D / A
    if (tp.C * q**D) % tp.A:
        return []
    T = tp.C * q**D // tp.A
    out = set()
    if T == 0:
        return None  # C == 0 is not this shape's business
    for d in _signed_divisors(T):
        # U = V + d; (V + d)^D - V^D = T: polynomial in V
        coeffs = _binomial_shift_coeffs(d, D)
        coeffs[0] -= T
        if all(c == 0 for c in coeffs):
            continue
        for v in solve_univariate(coeffs)[0]:
            u = v + d
            if u % q or v % p:
                continue
            x, y = u // q, v // p
            if tp.A * x**D + tp.B * y**D == tp.C:
                out.add((x, y))
    return sorted(out)


def _binomial_shift_coeffs(d: int, D: int) -> list[int]:
    """Coefficients of (V + d)^D - V^D as a polynomial in V."""
    from math import comb

    coeffs = [comb(D, k) * d ** (D - k) for k in range(D + 1)]
    coeffs[D] -= 1
    return coeffs


def _twopower_definite(tp: _TwoPower) -> list[tuple[int, int]] | None:
    if tp.N % 2 or tp.M % 2 or tp.A * tp.B < 0:
        return None
    sign = 1 if tp.A > 0 else -1
    if tp.C * sign < 0:
        return []
    limit = iroot_upper(abs(tp.C), abs(tp.A), tp.N)
    out = set()
    for x in range(0, limit + 1):
        rem = tp.C - tp.A * x**tp.N
        if rem % tp.B:
            continue
        val = rem // tp.B
        if val < 0:
            continue
        y = exact_iroot(val, tp.M)
        if y is None:
            continue
        for sx in {x, -x}:
            for sy in {y, -y}:
                out.add((sx, sy))
    return sorted(out)


def iroot_upper(c: int, a: int, n: int) -> int:
    from .intcore import iroot

    return iroot(c // a, n) + 1


def _twopower_bennett(tp: _TwoPower, found: list[tuple[int, int]]) -> bool:
    """With N == M = D >= 3 and |C| = 1, every solution with xy != 0 maps to
    a positive solution of ||A| u^D - |B| v^D| = 1 (odd D absorbs signs; even
    D with equal signs is the definite case).  That equation has at most one
    positive solution, so once the search exhibits it, the list is complete."""
    if tp.N != tp.M or tp.N < 3 or abs(tp.C) != 1:
        return False
    if tp.N % 2 == 0 and tp.A * tp.B > 0:
        return False
    return any(x != 0 and y != 0 for x, y in found)


# ---------------------------------------------------------------------------
# Backend hook
# ---------------------------------------------------------------------------

def run_backend(command: str, a: int, b: int, c: int, n: int, m: int,
                timeout: float = 600.0):
    """Line protocol for an external solver of a*y^m = b*x^n + c:
    send 'SOLVE a b c n m', read 'SOL x y' lines until
    'END COMPLETE' or 'END BOUNDED'."""
    proc = subprocess.run(
        shlex.split(command), input=f"SOLVE {a} {b} {c} {n} {m}\n",
        capture_output=True, text=True, timeout=timeout, check=True)
    sols = []
    complete = False
    for line in proc.stdout.splitlines():
        parts = line.split()
        if not parts:
            continue
        if parts[0] == "SOL":
            sols.append((int(parts[1]), int(parts[2])))
        elif parts[0] == "END":
            complete = parts[1] == "COMPLETE"
    return sols, complete


# ---------------------------------------------------------------------------
# The superelliptic base equation a y^m = b x^n + c
# ---------------------------------------------------------------------------

def solve_superelliptic(a: int, b: int, c: int, n: int, m: int,
                        bound: int = 10_000,
                        variables: list[str] | None = None,
                        backend: str | None = None,
                        trace: list | None = None) -> SolutionSet:
    """Complete-where-elementary solver for a*y^m = b*x^n + c; the terminal
    Thue/superelliptic cases run a bounded search with explicit status."""
    variables = variables or ["x", "y"]
    if a == 0 or b == 0:
        raise ValueError("need a, b nonzero")
    poly = _superelliptic_poly(a, b, c, n, m, variables)
    vx, vy = variables

    def record(desc, sols, status, families=0):
        if trace is not None:
            trace.append(BaseSolveRecord(desc, sorted(sols), status, families))

    # univariate shapes
    if m == 0 or n == 0:
        return _superelliptic_univariate(a, b, c, n, m, poly, variables, record)

    if c == 0:
        from .twomon import solve_two_monomial

        out = solve_two_monomial(poly)
        out.equation = poly
        out.add_finite((0, 0))
        record(f"{a}*y^{m} = {b}*x^{n}", sorted(out.finite), "complete",
               len(out.families))
        return out

    if m > n:
        inner = solve_superelliptic(-b, -a, c, m, n, bound,
                                    [vy, vx], backend, trace)
        flipped = SolutionSet(variables, status=inner.status,
                              provenance=inner.provenance, equation=poly)
        for (y, x) in inner.finite:
            flipped.add_finite((x, y))
        for fam in inner.families:
            flipped.families.append(_swap_family(fam, variables))
        return flipped

    if m == 1:
        return _superelliptic_linear(a, b, c, n, poly, variables, record)

    if m == n == 2:
        # b x^2 - a y^2 + c = 0
        out = solve_quadratic(b, -a, c, variables)
        out.equation = poly
        record(f"{a}*y^2 = {b}*x^2 + {c}", sorted(out.finite),
               "complete", len(out.families))
        return out

    # terminal: 2 <= m <= n, n >= 3, c != 0
    tp = _TwoPower(b, -a, -c, n, m)
    tp, empty = _twopower_descend(tp)
    out = SolutionSet(variables, status=COMPLETE, equation=poly)
    if empty:
        record(tp.describe(), [], "complete-empty (p-adic obstruction)")
        return out

    if backend is not None:
        sols, complete = run_backend(backend, a, b, c, n, m)
        for x, y in sols:
            out.add_finite((x, y))
        out.status = COMPLETE if complete else searched(bound)
        record(f"{a}*y^{m} = {b}*x^{n} + {c} [backend]", sols,
               str(out.status))
        return out

    provenance = []
    sols = _twopower_definite(tp)
    status = "complete-definite"
    if sols is None:
        sols = _twopower_factorable(tp)
        status = "complete-factored"
    if sols is None:
        sols = _twopower_search(tp, bound)
        if _twopower_bennett(tp, sols):
            status = "complete-bennett"
            provenance.append(BENNETT_CITATION)
        else:
            status = f"searched({bound})"
            out.status = searched(bound)
    for x, y in sols:
        out.add_finite((tp.mul_x * x, tp.mul_y * y))
    out.provenance.extend(provenance)
    record(tp.describe(), sols, status)
    return out


def _superelliptic_poly(a, b, c, n, m, variables):
    vx, vy = variables
    monos = [Monomial.make(a, {vy: m} if m else {}),
             Monomial.make(-b, {vx: n} if n else {})]
    if c:
        monos.append(Monomial.make(-c, {}))
    merged: dict = {}
    for mo in monos:
        merged[mo.exps] = merged.get(mo.exps, 0) + mo.coeff
    return Polynomial([Monomial(co, e) for e, co in merged.items() if co],
                      list(variables))


def _superelliptic_univariate(a, b, c, n, m, poly, variables, record):
    out = SolutionSet(variables, status=COMPLETE, equation=poly)
    # a y^m - b x^n - c = 0 with one variable absent
    if m == 0 and n == 0:
        if a - b - c == 0:
            out.families.append(_free_family(variables))
        record("constant", [], "complete", len(out.families))
        return out
    if m == 0:
        # -b x^n + (a - c) = 0
        coeffs = [a - c] + [0] * (n - 1) + [-b]
        roots = solve_univariate(coeffs)[0]
        for r in roots:
            out.families.append(_line_family(variables, 0, r))
        record(f"{b}*x^{n} = {a - c}", [(r, 0) for r in roots], "complete",
               len(out.families))
        return out
    coeffs = [-c] + [0] * (m - 1) + [a]
    roots = solve_univariate(coeffs)[0]
    for r in roots:
        out.families.append(_line_family(variables, 1, r))
    record(f"{a}*y^{m} = {c}", [(0, r) for r in roots], "complete",
           len(out.families))
    return out


def _superelliptic_linear(a, b, c, n, poly, variables, record):
    """a y = b x^n + c: one family per residue class r with a | b r^n + c."""
    from math import comb

    out = SolutionSet(variables, status=COMPLETE, equation=poly)
    aa = abs(a)
    vx, vy = variables
    count = 0
    for r in range(aa):
        if (b * pow(r, n, aa) + c) % aa:
            continue
        count += 1
        terms = []
        for k in range(n + 1):
            coef = b * comb(n, k) * aa**k * r ** (n - k)
            if k == 0:
                coef += c
            if coef:
                terms.append(ex.monomial_expr(coef, [("w", k)] if k else []))
        y_expr = ex.ExactDiv(ex.Add(*terms) if terms else ex.const(0),
                             ex.const(a))
        x_expr = ex.Add(ex.monomial_expr(aa, [("w", 1)]), ex.const(r))

        def witness(sol, _r=r):
            x, _ = sol
            if (x - _r) % aa:
                return None
            return {"w": (x - _r) // aa}

        out.families.append(SolutionFamily(
            variables=list(variables),
            params=[("w", AllIntegers())],
            exprs={vx: x_expr, vy: y_expr},
            witness=witness, exact_box=True,
            note=f"x = {aa}w + {r}"))
    record(f"{a}*y = {b}*x^{n} + {c}", [], "complete", count)
    return out


def _swap_family(fam, variables):
    if isinstance(fam, SolutionFamily):
        swapped = SolutionFamily(
            variables=list(variables),
            params=fam.params,
            exprs={variables[0]: fam.exprs[fam.variables[1]],
                   variables[1]: fam.exprs[fam.variables[0]]},
            witness=(lambda sol: fam.witness((sol[1], sol[0])))
            if fam.witness else None,
            param_bound=fam.param_bound,
            exact_box=fam.exact_box,
            note=fam.note,
            box_enumerator=(lambda b: {(t[1], t[0])
                                       for t in fam.box_enumerator(b)})
            if fam.box_enumerator else None,
        )
        return swapped
    if isinstance(fam, RecurrenceFamily):
        # conjugate the matrix by the swap permutation
        (p, q), (r, s) = fam.matrix
        return RecurrenceFamily(
            variables=list(variables),
            seeds=[(y, x) for (x, y) in fam.seeds],
            matrix=((s, r), (q, p)),
            note=fam.note)
    raise NotImplementedError(f"cannot swap family {type(fam)}")


# ---------------------------------------------------------------------------
# Runge-condition bounded solving
# ---------------------------------------------------------------------------

def check_runge_c1(poly: Polynomial) -> bool:
    """Condition (C1): some monomial a_ij x^i y^j has n*j + m*i > m*n, where
    n, m are the degrees in x and y."""
    if len(poly.variables) != 2:
        raise ValueError("Runge check needs a bivariate polynomial")
    vx, vy = poly.variables
    n = poly.degree_in(vx)
    m = poly.degree_in(vy)
    if n == 0 or m == 0:
        raise RungeConditionError("polynomial must use both variables")
    return any(n * mo.exp_of(vy) + m * mo.exp_of(vx) > m * n
               for mo in poly.monomials)


def solve_runge_finite(poly: Polynomial, bound: int,
                       effective_bound: bool = False) -> SolutionSet:
    """Bounded search for equations satisfying Runge's condition (C1); the
    status is Complete only when the caller certifies the bound effective."""
    if not check_runge_c1(poly):
        raise RungeConditionError("condition (C1) does not hold")
    from .oracle import brute_force

    run = brute_force(poly, bound)
    out = SolutionSet(list(poly.variables),
                      status=COMPLETE if effective_bound else searched(bound),
                      equation=poly)
    for t in run.solutions:
        out.add_finite(t)
    return out

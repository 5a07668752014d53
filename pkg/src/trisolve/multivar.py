"""n-variable machinery: the direct parametrization, the sufficient-condition
solver, the reduction of an arbitrary three-monomial equation to equations
with independent monomials, family classification, cyclic equations, the
Monte-Carlo experiment, and the master dispatcher.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from . import expr as ex
from .basesolve import BaseSolveRecord
from .eqparse import (
    Monomial,
    NotATrinomial,
    Polynomial,
    TrinomialEquation,
    canonicalize,
    parse_equation,
    poly_to_string,
)
from .intcore import factorize, valuation
from .lindioph import (
    hilbert_basis,
    minimal_divisibility_set,
    solve_monoid_target_2d,
    solve_system_nonneg,
)
from .solset import (
    COMPLETE,
    REDUCED_ONLY,
    UNKNOWN,
    AllIntegers,
    DivisorSet,
    MappedFamily,
    SolutionFamily,
    SolutionSet,
    Status,
    searched,
)
from .twomon import solve_two_monomial

# re-exported surface
__all__ = [
    "Prop4Certificate", "ReducedEquation", "SolveReport",
    "trivial_solutions", "check_prop4", "direct_formula", "solve_prop4",
    "solve_separated_linear", "solve_x1k_x2", "solve_two_monomial",
    "reduce_to_independent", "classify_family", "classify_cyclic",
    "monte_carlo_prop4", "solve",
]


# ---------------------------------------------------------------------------
# trivial solutions (some variable = 0)
# ---------------------------------------------------------------------------

def trivial_solutions(eq: TrinomialEquation) -> SolutionSet:
    """All solutions of the (uncancelled) equation with at least one zero
    variable, organized by the set of zeroed variables."""
    poly = eq.full_polynomial()
    variables = list(eq.variables)
    out = SolutionSet(variables, status=COMPLETE, equation=poly)
    n = len(variables)
    for mask in range(1, 1 << n):
        zeros = {variables[i] for i in range(n) if mask >> i & 1}
        rest = [v for v in variables if v not in zeros]
        sub = poly.substitute_zero(zeros)
        if not sub.monomials:
            out.families.append(_zero_family(variables, zeros))
            continue
        if len(sub.monomials) == 1:
            continue  # single monomial cannot vanish with the rest nonzero
        if len(sub.monomials) == 2:
            inner = solve_two_monomial(sub)
            fam = _embed_family(variables, zeros, rest, inner,
                                require_nonzero=True)
            if fam is not None:
                out.families.append(fam)
        # three monomials surviving would mean zeros hit no monomial at all,
        # impossible since every variable occurs somewhere
    return out


def _zero_family(variables, zeros):
    rest = [v for v in variables if v not in zeros]
    exprs = {}
    params = []
    for v in variables:
        if v in zeros:
            exprs[v] = ex.const(0)
        else:
            params.append((f"w_{v}", AllIntegers()))
            exprs[v] = ex.param(f"w_{v}")

    def witness(sol):
        env = {}
        for v, x in zip(variables, sol):
            if v in zeros:
                if x != 0:
                    return None
            else:
                env[f"w_{v}"] = x
        return env

    return SolutionFamily(
        variables=list(variables), params=params, exprs=exprs,
        witness=witness, exact_box=True,
        note=f"{'='.join(sorted(zeros))}=0, rest free")


def _embed_family(variables, zeros, rest, inner: SolutionSet,
                  require_nonzero: bool):
    """Embed a solution set over `rest` into the full variable list with the
    `zeros` pinned to 0; with require_nonzero, rest-coordinates must all be
    nonzero (other zero patterns belong to other subsets)."""
    if inner.is_empty_claim():
        return None
    rest_idx = [rest.index(v) if v in rest else None for v in variables]

    def lift(point):
        if require_nonzero and any(x == 0 for x in point):
            return []
        tup = []
        for v, ri in zip(variables, rest_idx):
            tup.append(0 if v in zeros else point[ri])
        return [tuple(tup)]

    return MappedFamily(
        variables=list(variables), inner=inner, lift=lift,
        inner_bound=lambda b: b,
        exact_box=all(f.exact_box for f in inner.families),
        note=f"{','.join(sorted(zeros))}=0")


# ---------------------------------------------------------------------------
# the sufficient condition and the direct formula
# ---------------------------------------------------------------------------

@dataclass
class Prop4Certificate:
    """Orientation index i: monomial i plays the right-hand role, so with
    (alpha, beta) the other two exponent rows and gamma = row i,
    sum(alpha*z) = sum(beta*z) = sum(gamma*z) - 1 holds exactly."""

    orientation: int
    z: tuple[int, ...]
    t: tuple[int, ...] | None
    unknown: bool = False


def _orientation_rows(eq: TrinomialEquation, i: int):
    others = [j for j in range(3) if j != i]
    alpha = eq.rows[others[0]]
    beta = eq.rows[others[1]]
    gamma = eq.rows[i]
    return alpha, beta, gamma, others


def _system_solve(alpha, beta, gamma, target_sign: int, budget: int):
    """Non-negative z with sum(alpha z) = sum(beta z) = sum(gamma z) - s for
    s = target_sign (1 or -1).  Returns (status, vector)."""
    nv = len(alpha)
    coef = [[alpha[i] - beta[i] for i in range(nv)],
            [beta[i] - gamma[i] for i in range(nv)]]
    small = all(abs(c) <= 30 for row in coef for c in row) and nv <= 8
    if small:
        mb = solve_system_nonneg(coef, [0, -target_sign], budget=20000)
        if mb.status == "complete":
            if mb.particular:
                return "feasible", min(mb.particular)
            return "infeasible", None
    gens = [(alpha[i] - beta[i], gamma[i] - alpha[i]) for i in range(nv)]
    status, vec = solve_monoid_target_2d(gens, (0, target_sign), budget)
    return status, tuple(vec) if vec is not None else None


def check_prop4(eq: TrinomialEquation, budget: int = 1_000_000
                ) -> Prop4Certificate | None:
    """First orientation (in monomial order) whose z-system is solvable in
    non-negative integers; the t-system is attempted as well to decide
    whether the direct formula applies.  Returns a certificate, None when
    every orientation is infeasible, or a certificate flagged unknown when a
    search exceeded its budget."""
    saw_unknown = False
    for i in range(3):
        alpha, beta, gamma, _ = _orientation_rows(eq, i)
        status, z = _system_solve(alpha, beta, gamma, 1, budget)
        if status == "unknown":
            saw_unknown = True
            continue
        if status != "feasible":
            continue
        assert _check_sums(alpha, beta, gamma, z, 1)
        status_t, t = _system_solve(alpha, beta, gamma, -1, budget)
        tvec = tuple(t) if status_t == "feasible" else None
        if tvec is not None:
            assert _check_sums(alpha, beta, gamma, tvec, -1)
        return Prop4Certificate(i, tuple(z), tvec)
    if saw_unknown:
        return Prop4Certificate(-1, (), None, unknown=True)
    return None


def _check_sums(alpha, beta, gamma, z, s):
    sa = sum(a * zi for a, zi in zip(alpha, z))
    sb = sum(b * zi for b, zi in zip(beta, z))
    sg = sum(g * zi for g, zi in zip(gamma, z))
    return sa == sb == sg - s


def direct_formula(eq: TrinomialEquation, cert: Prop4Certificate
                   ) -> SolutionFamily:
    """The closed-form family for eq given both exponent systems solvable:
    x_i = (a prod u^alpha + b prod u^beta)^{z_i} (c prod u^gamma)^{t_i}
          w^{-z_i-t_i} u_i,
    with w a common divisor of the two bracketed values.  The witness takes
    u = x and w = c prod x^gamma."""
    if cert.t is None:
        raise ValueError("direct formula needs both systems solvable")
    alpha, beta, gamma, others = _orientation_rows(eq, cert.orientation)
    a = eq.coeffs[others[0]]
    b = eq.coeffs[others[1]]
    c = -eq.coeffs[cert.orientation]
    variables = list(eq.variables)
    uname = {v: f"u_{v}" for v in variables}

    def mono_expr(coeff, row):
        return ex.monomial_expr(
            coeff, [(uname[v], e) for v, e in zip(variables, row) if e])

    lhs = ex.Add(mono_expr(a, alpha), mono_expr(b, beta))
    rhs = mono_expr(c, gamma)
    params = [(uname[v], AllIntegers()) for v in variables]
    params.append(("w", DivisorSet(1, ex.Gcd(lhs, rhs))))
    exprs = {}
    for idx, v in enumerate(variables):
        zi, ti = cert.z[idx], cert.t[idx]
        num = ex.Mul(ex.Pow(lhs, zi), ex.Pow(rhs, ti), ex.param(uname[v]))
        exprs[v] = (ex.ExactDiv(num, ex.Pow(ex.param("w"), zi + ti))
                    if zi + ti else num)

    gmap = dict(zip(variables, gamma))

    def witness(solution):
        if any(x == 0 for x in solution):
            return None
        env = {uname[v]: x for v, x in zip(variables, solution)}
        w = c
        for v, x in zip(variables, solution):
            w *= x ** gmap[v]
        if w == 0:
            return None
        env["w"] = w
        return env

    def box_enumerator(bound):
        out = set()
        nz = [v for v in range(-bound, bound + 1) if v != 0]
        for combo in itertools.product(nz, repeat=len(variables)):
            env = {uname[v]: u for v, u in zip(variables, combo)}
            lv, rv = lhs.eval(env), rhs.eval(env)
            g = gcd(lv, rv)
            if g == 0:
                continue
            from .intcore import divisors_k

            for w in divisors_k(g, 1):
                env["w"] = w
                try:
                    tup = tuple(exprs[v].eval(env) for v in variables)
                except ex.ExactDivisionError:
                    continue
                if all(abs(x) <= bound for x in tup):
                    out.add(tup)
        return out

    return SolutionFamily(
        variables=variables, params=params, exprs=exprs,
        witness=witness, exact_box=True, note="direct formula",
        box_enumerator=box_enumerator)


# ---------------------------------------------------------------------------
# separated-linear equations: a*x_i + P(rest) = 0
# ---------------------------------------------------------------------------

class ResidueLimit(RuntimeError):
    pass


def find_separated_linear(poly: Polynomial):
    """Index of a monomial that is a single variable of degree 1 not
    occurring in any other monomial, or None."""
    for idx, mono in enumerate(poly.monomials):
        if len(mono.exps) != 1:
            continue
        (v, e), = mono.exps
        if e != 1:
            continue
        if any(other.exp_of(v) for j, other in enumerate(poly.monomials)
               if j != idx):
            continue
        return idx
    return None


def solve_separated_linear(poly: Polynomial, limit: int = 1_000_000
                           ) -> SolutionSet:
    """Complete solving of a*x + P(rest) = 0: free parametrization for
    |a| = 1, one family per admissible residue class modulo |a| otherwise."""
    idx = find_separated_linear(poly)
    if idx is None:
        raise ValueError("no separated linear monomial")
    mono = poly.monomials[idx]
    (xvar, _), = mono.exps
    a = mono.coeff
    rest = [m for j, m in enumerate(poly.monomials) if j != idx]
    rest_vars = [v for v in poly.variables if v != xvar]
    variables = list(poly.variables)
    out = SolutionSet(variables, status=COMPLETE, equation=poly)
    aa = abs(a)

    if aa == 1:
        params = [(f"u_{v}", AllIntegers()) for v in rest_vars]
        terms = [ex.monomial_expr(-m.coeff * a,
                                  [(f"u_{v}", m.exp_of(v))
                                   for v in rest_vars if m.exp_of(v)])
                 for m in rest]
        exprs = {v: ex.param(f"u_{v}") for v in rest_vars}
        exprs[xvar] = ex.Add(*terms) if terms else ex.const(0)

        def witness(sol):
            return {f"u_{v}": x for v, x in zip(variables, sol)
                    if v != xvar}

        out.families.append(SolutionFamily(
            variables=variables, params=params, exprs=exprs,
            witness=witness, exact_box=True, note=f"{xvar} = -P/{a}"))
        return out

    if aa ** len(rest_vars) > limit:
        raise ResidueLimit(f"{aa}^{len(rest_vars)} residue classes")
    for res in itertools.product(range(aa), repeat=len(rest_vars)):
        env = dict(zip(rest_vars, res))
        total = sum(m.coeff * _eval_mono(m, env) for m in rest)
        if total % aa:
            continue
        out.families.append(_residue_family(variables, xvar, a, rest,
                                            rest_vars, res))
    return out


def _eval_mono(mono: Monomial, env: dict[str, int]) -> int:
    val = 1
    for v, e in mono.exps:
        val *= env[v] ** e
    return val


def _residue_family(variables, xvar, a, rest, rest_vars, residues):
    aa = abs(a)
    # substitute v = aa*w_v + r_v in P and divide by -a, exactly
    expanded: dict[tuple, int] = {}
    for m in rest:
        acc = {tuple([0] * len(rest_vars)): m.coeff}
        for pos, v in enumerate(rest_vars):
            e = m.exp_of(v)
            if not e:
                continue
            # (aa*w + r)^e expanded
            from math import comb

            branch = {}
            for k in range(e + 1):
                coef = comb(e, k) * aa**k * residues[pos] ** (e - k)
                if coef:
                    branch[k] = coef
            acc2 = {}
            for exps, co in acc.items():
                for k, co2 in branch.items():
                    key = list(exps)
                    key[pos] += k
                    key = tuple(key)
                    acc2[key] = acc2.get(key, 0) + co * co2
            acc = acc2
        for key, co in acc.items():
            expanded[key] = expanded.get(key, 0) + co
    terms = []
    for exps, co in sorted(expanded.items()):
        if co == 0:
            continue
        assert co % a == 0 or any(exps), "residue class not divisible"
        terms.append(ex.monomial_expr(
            co, [(f"w_{v}", e) for v, e in zip(rest_vars, exps) if e]))
    x_expr = ex.ExactDiv(ex.Neg(ex.Add(*terms)) if terms else ex.const(0),
                         ex.const(a))
    exprs = {xvar: x_expr}
    params = [(f"w_{v}", AllIntegers()) for v in rest_vars]
    for v, r in zip(rest_vars, residues):
        exprs[v] = ex.Add(ex.monomial_expr(aa, [(f"w_{v}", 1)]), ex.const(r))

    def witness(sol):
        env = {}
        for v, x in zip(variables, sol):
            if v == xvar:
                continue
            r = residues[rest_vars.index(v)]
            if (x - r) % aa:
                return None
            env[f"w_{v}"] = (x - r) // aa
        return env

    return SolutionFamily(
        variables=list(variables), params=params, exprs=exprs,
        witness=witness, exact_box=True,
        param_bound=lambda b: b // aa + 1,
        note=f"residues {dict(zip(rest_vars, residues))} mod {aa}")


# ---------------------------------------------------------------------------
# form (20): a block x1^k * x2 inside a monomial
# ---------------------------------------------------------------------------

def solve_x1k_x2(poly: Polynomial, block_idx: int,
                 subsolver=None) -> SolutionSet:
    """Solve an equation whose monomial `block_idx` contains a variable of
    exponent 1: substitute the whole block y := prod(vars^exps), solve the
    resulting separated-linear equation in y, then recover the block
    variables through chained divisor domains."""
    mono = poly.monomials[block_idx]
    exps = list(mono.exps)
    lin = next((v for v, e in exps if e == 1), None)
    if lin is None:
        raise ValueError("no exponent-1 variable in the block monomial")
    if any(other.variables() & mono.variables()
           for j, other in enumerate(poly.monomials) if j != block_idx):
        raise ValueError("block variables must not occur elsewhere")
    block_vars = [v for v, _ in exps]
    other_vars = [v for v in poly.variables if v not in block_vars]
    yname = "y_block"
    sub_monos = [Monomial.make(mono.coeff, {yname: 1})]
    for j, other in enumerate(poly.monomials):
        if j != block_idx:
            sub_monos.append(other)
    sub_poly = Polynomial(sub_monos, [yname] + other_vars)
    inner = (subsolver or solve_separated_linear)(sub_poly)

    variables = list(poly.variables)
    out = SolutionSet(variables, status=inner.status, equation=poly,
                      provenance=list(inner.provenance))
    for fam in inner.families:
        out.families.append(_unsub_block_family(
            fam, variables, yname, other_vars, exps, lin))
    for tup in inner.finite:
        # finite inner solutions fix the block value; expand via divisors
        inner_env = dict(zip([yname] + other_vars, tup))
        out.families.append(_finite_block_family(
            variables, exps, lin, other_vars, inner_env))
    return out


def _unsub_block_family(fam: SolutionFamily, variables, yname, other_vars,
                        exps, lin):
    """Compose an inner family (over y_block and the other variables) with
    the divisor-chain recovery of the block variables."""
    y_expr = fam.exprs[yname]
    params = list(fam.params)
    exprs = {v: fam.exprs[v] for v in other_vars}
    remaining = y_expr
    denom_terms: list[ex.Expr] = []
    for v, e in exps:
        if v == lin:
            continue
        pname = f"d_{v}"
        if denom_terms:
            remaining = ex.ExactDiv(y_expr, ex.Mul(*denom_terms))
        params.append((pname, DivisorSet(e, remaining)))
        exprs[v] = ex.param(pname)
        denom_terms.append(ex.Pow(ex.param(pname), e))
    if denom_terms:
        exprs[lin] = ex.ExactDiv(y_expr, ex.Mul(*denom_terms))
    else:
        exprs[lin] = y_expr

    block_exp = dict(exps)

    def witness(sol):
        env_sol = dict(zip(variables, sol))
        if any(env_sol[v] == 0 for v, _ in exps):
            return None
        yval = 1
        for v, e in exps:
            yval *= env_sol[v] ** e
        inner_sol = [yval] + [env_sol[v] for v in other_vars]
        base = fam.witness(tuple(inner_sol)) if fam.witness else None
        if base is None:
            return None
        env = dict(base)
        for v, _ in exps:
            if v != lin:
                env[f"d_{v}"] = env_sol[v]
        return env

    note = f"block {'*'.join(f'{v}^{e}' for v, e in exps)} via divisors"
    return SolutionFamily(
        variables=list(variables), params=params, exprs=exprs,
        witness=witness, exact_box=fam.exact_box, note=note)


def _finite_block_family(variables, exps, lin, other_vars, inner_env):
    yval = inner_env["y_block"]
    params = []
    exprs = {v: ex.const(inner_env[v]) for v in other_vars}
    remaining_val = ex.const(yval)
    denom_terms: list[ex.Expr] = []
    for v, e in exps:
        if v == lin:
            continue
        pname = f"d_{v}"
        src = (ex.ExactDiv(ex.const(yval), ex.Mul(*denom_terms))
               if denom_terms else ex.const(yval))
        params.append((pname, DivisorSet(e, src)))
        exprs[v] = ex.param(pname)
        denom_terms.append(ex.Pow(ex.param(pname), e))
    exprs[lin] = (ex.ExactDiv(ex.const(yval), ex.Mul(*denom_terms))
                  if denom_terms else ex.const(yval))

    def witness(sol):
        env_sol = dict(zip(variables, sol))
        for v in other_vars:
            if env_sol[v] != inner_env[v]:
                return None
        env = {}
        prod = 1
        for v, e in exps:
            if env_sol[v] == 0:
                return None
            if v != lin:
                env[f"d_{v}"] = env_sol[v]
            prod *= env_sol[v] ** e
        if prod != yval:
            return None
        return env

    return SolutionFamily(
        variables=list(variables), params=params, exprs=exprs,
        witness=witness, exact_box=True,
        note=f"block value {yval}")

# ---------------------------------------------------------------------------
# reduction to independent monomials
# ---------------------------------------------------------------------------

@dataclass
class ReducedTerm:
    """One transformed term coeff * prod(var^exp) of a reduced equation,
    together with the recipe for recovering the original block variables."""

    coeff: int
    exps: tuple[int, ...]          # exponents of the fresh variables
    varnames: tuple[str, ...]
    kind: str                      # 'const' | 'case2' | 'case3' | 'plain'
    # case 'const': side equation prod U^{side_exps} = side_target
    side_exps: tuple[int, ...] = ()
    side_target: int = 0
    # case 'case2': prod U^{orig_exps/d} = root_num/root_den * U' (sign split
    # for even d); orig block exponent list and substitution data
    orig_exps: tuple[int, ...] = ()
    d: int = 1
    qstar: int = 1
    vdiv: int = 1
    # case 'case3': U_k = scale_k * U'_k
    scales: tuple[int, ...] = ()
    # free block variables (exponent 0 in the term) by original index
    free_idx: tuple[int, ...] = ()

    def describe(self) -> str:
        body = "*".join(
            f"{v}^{e}" if e != 1 else v
            for v, e in zip(self.varnames, self.exps) if e)
        if not body:
            return str(self.coeff)
        if self.coeff == 1:
            return body
        if self.coeff == -1:
            return f"-{body}"
        return f"{self.coeff}*{body}"


@dataclass
class ReducedEquation:
    """A * prod W^g + B * prod V^f + C * prod U^e = 0 with integral
    coefficients, non-negative exponents, disjoint fresh variables, and a
    back map onto the source equation.  Only primitive solutions (block
    variables pairwise coprime across blocks) are needed; the solvers here
    do not exploit that, which is sound."""

    source: TrinomialEquation
    terms: tuple[ReducedTerm, ReducedTerm, ReducedTerm]
    signs: tuple[int, int, int]
    particular: tuple[int, ...]              # P_i per source variable
    bases: tuple[tuple[tuple[int, ...], ...], ...]  # E/F/G basis row lists
    primitive_only: bool = True

    def describe(self) -> str:
        out = ""
        for term in self.terms:
            s = term.describe()
            out += s if not out else (s if s.startswith("-") else "+" + s)
        return out + "=0"

    def polynomial(self) -> Polynomial:
        monos = []
        merged: dict = {}
        for term in self.terms:
            exps = {v: e for v, e in zip(term.varnames, term.exps) if e}
            key = tuple(sorted(exps.items()))
            merged[key] = merged.get(key, 0) + term.coeff
        variables = []
        for term in self.terms:
            for v, e in zip(term.varnames, term.exps):
                if e and v not in variables:
                    variables.append(v)
        for key, co in merged.items():
            if co:
                monos.append(Monomial(co, key))
        return Polynomial(monos, variables)


def _block_term_options(coeff: Fraction, eks: list[int], prefix: str):
    """Transform the term coeff * prod(U_k^{e_k}) (e_k of any sign, coeff
    rational) into integral options per the three representability cases."""
    from .intcore import rational_root_d as _root

    s, q = coeff.numerator, coeff.denominator
    nz = [e for e in eks if e != 0]
    free_idx = tuple(i for i, e in enumerate(eks) if e == 0)
    options: list[ReducedTerm] = []
    if not nz:
        if q == 1:
            options.append(ReducedTerm(
                coeff=s, exps=(), varnames=(), kind="const",
                side_exps=(), side_target=1, free_idx=free_idx))
        return options

    if all(e < 0 for e in nz):
        # term = s / (q * prod U^{|e|}): enumerate integer values m
        from .intcore import divisors

        for m in [d for d in divisors(s)] + [-d for d in divisors(s)]:
            num, den = s, q * m
            if num % den:
                continue
            target = num // den
            if target == 0:
                continue
            from .twomon import _enumerate_exact_products

            side_exps = tuple(-e for e in eks)
            if not _enumerate_exact_products(
                    [e for e in side_exps if e], target):
                continue
            options.append(ReducedTerm(
                coeff=m, exps=(), varnames=(), kind="const",
                side_exps=side_exps, side_target=target, free_idx=free_idx))
        return options

    if any(e < 0 for e in nz):
        d = 0
        for e in nz:
            d = gcd(d, abs(e))
        # q* = least positive with q | (q*)^d
        qstar = 1
        for p, qp in factorize(q).factors:
            qstar *= p ** (-(-qp // d))
        for v in [dv for dv in _pos_divisors(s) if s % dv**d == 0]:
            new_coeff = s * qstar**d // (v**d * q)
            options.append(ReducedTerm(
                coeff=new_coeff, exps=(d,), varnames=(f"{prefix}1",),
                kind="case2", orig_exps=tuple(eks), d=d, qstar=qstar,
                vdiv=v, free_idx=free_idx))
        return options

    # all >= 0, some > 0
    mds = minimal_divisibility_set(list(eks), q)
    for scales in mds.tuples:
        prod = 1
        for sc, e in zip(scales, eks):
            prod *= sc**e
        new_coeff = s * prod // q
        names = tuple(f"{prefix}{i + 1}" for i in range(len(eks)))
        options.append(ReducedTerm(
            coeff=new_coeff, exps=tuple(eks), varnames=names,
            kind="case3", scales=tuple(scales), free_idx=free_idx))
    return options


def _pos_divisors(n: int) -> list[int]:
    from .intcore import divisors

    return divisors(n)


def reduce_to_independent(eq: TrinomialEquation,
                          max_branches: int = 4096) -> list[ReducedEquation]:
    """Theorem-3 style reduction: enumerate prime splits and particular
    minimal solutions, form the rational coefficients, and apply the
    per-term representability substitutions, yielding integral independent
    -monomial equations with back maps."""
    variables = list(eq.variables)
    nv = len(variables)
    r1, r2, r3 = eq.rows
    a, b, c = eq.coeffs
    diff_ab = [r1[i] - r2[i] for i in range(nv)]
    diff_ag = [r1[i] - r3[i] for i in range(nv)]
    diff_bg = [r2[i] - r3[i] for i in range(nv)]

    e_basis = hilbert_basis([diff_ab]).homogeneous
    f_basis = hilbert_basis([diff_ag]).homogeneous
    g_basis = hilbert_basis([diff_bg]).homogeneous

    def block_exp(basis, weights):
        return [sum(w * v for w, v in zip(weights, vec)) for vec in basis]

    e_exp = block_exp(e_basis, [r3[i] - r1[i] for i in range(nv)])
    f_exp = block_exp(f_basis, [r2[i] - r3[i] for i in range(nv)])
    g_exp = block_exp(g_basis, [r1[i] - r2[i] for i in range(nv)])

    primes = factorize(a * b * c).primes()
    out: list[ReducedEquation] = []

    # particular minimal solutions per prime and class
    per_prime: dict[tuple[int, int], list[tuple[int, ...]]] = {}
    for p in primes:
        ap, bp, cp = valuation(a, p), valuation(b, p), valuation(c, p)
        for cls, (coefrow, rhs) in enumerate((
                (diff_ab, bp - ap), (diff_ag, cp - ap), (diff_bg, cp - bp))):
            if rhs == 0:
                per_prime[(p, cls)] = [tuple([0] * nv)]
                continue
            mb = solve_system_nonneg([coefrow], [rhs], budget=200000)
            per_prime[(p, cls)] = list(mb.particular)

    splits = itertools.product(range(3), repeat=len(primes))
    for split in splits:
        choice_lists = []
        dead = False
        for p, cls in zip(primes, split):
            opts = per_prime[(p, cls)]
            if not opts:
                dead = True
                break
            choice_lists.append([(p, cls, z0) for z0 in opts])
        if dead:
            continue
        for combo in itertools.product(*choice_lists):
            A = Fraction(1)
            B = Fraction(1)
            C = Fraction(1)
            particular = [1] * nv
            for p, cls, z0 in combo:
                ap, bp, cp = valuation(a, p), valuation(b, p), valuation(c, p)
                for i in range(nv):
                    particular[i] *= p ** z0[i]
                if cls == 2:  # P3: b-term = c-term < a-term
                    expo = (ap - bp
                            + sum(d * z for d, z in zip(diff_ab, z0)))
                    A *= Fraction(p) ** expo
                elif cls == 1:  # P2: a-term = c-term < b-term
                    expo = (bp - cp
                            + sum(d * z for d, z in zip(diff_bg, z0)))
                    B *= Fraction(p) ** expo
                else:  # P1: a-term = b-term <= c-term
                    expo = (cp - ap
                            - sum(d * z for d, z in zip(diff_ag, z0)))
                    C *= Fraction(p) ** expo
            # four sign patterns cover all eight up to a global flip; the
            # lift tries both flip interpretations of each branch
            for s1, s2, s3 in ((1, 1, 1), (1, 1, -1), (1, -1, 1), (1, -1, -1)):
                a_opts = _block_term_options(s1 * A, g_exp, "w")
                b_opts = _block_term_options(s2 * B, f_exp, "v")
                c_opts = _block_term_options(s3 * C, e_exp, "u")
                for ta, tb, tc in itertools.product(a_opts, b_opts, c_opts):
                    out.append(ReducedEquation(
                        source=eq, terms=(ta, tb, tc),
                        signs=(s1, s2, s3),
                        particular=tuple(particular),
                        bases=(tuple(g_basis), tuple(f_basis),
                               tuple(e_basis))))
                    if len(out) > max_branches:
                        raise ResidueLimit("reduction branch explosion")
    return _dedupe_reduced(out)


def _dedupe_reduced(reds: list[ReducedEquation]) -> list[ReducedEquation]:
    seen = set()
    out = []
    for r in reds:
        key = (tuple((t.coeff, t.exps, t.kind, t.side_exps, t.side_target,
                      t.orig_exps, t.d, t.qstar, t.vdiv, t.scales)
                     for t in r.terms), r.particular, r.signs)
        if key in seen:
            continue
        seen.add(key)
        out.append(r)
    return out

# ---------------------------------------------------------------------------
# solving reduced equations and lifting back
# ---------------------------------------------------------------------------

def _power_fiber(exps: list[int], target: Fraction, bound: int
                 ) -> list[tuple[int, ...]]:
    """Nonzero tuples with prod x^exps == target, |x| <= bound (mixed signs
    swept, same signs enumerated by divisors)."""
    from .twomon import _enumerate_exact_products

    if all(e > 0 for e in exps) or all(e < 0 for e in exps):
        t = target if exps[0] > 0 else 1 / target
        if t.denominator != 1:
            return []
        return [tup for tup in
                _enumerate_exact_products([abs(e) for e in exps],
                                          t.numerator)
                if all(abs(x) <= bound for x in tup)]
    out = []
    j = max(range(len(exps)), key=lambda i: abs(exps[i]))
    others = [i for i in range(len(exps)) if i != j]
    nz = [v for v in range(-bound, bound + 1) if v != 0]
    from .intcore import exact_iroot

    for combo in itertools.product(nz, repeat=len(others)):
        lhs = target
        for i, v in zip(others, combo):
            lhs /= Fraction(v) ** exps[i]
        k = abs(exps[j])
        if exps[j] < 0:
            lhs = 1 / lhs
        if lhs.denominator != 1:
            continue
        root = exact_iroot(lhs.numerator, k)
        if root is None or root == 0:
            continue
        roots = {root, -root} if k % 2 == 0 else {root}
        for rt in roots:
            if rt**k != lhs.numerator or abs(rt) > bound:
                continue
            tup = [0] * len(exps)
            for i, v in zip(others, combo):
                tup[i] = v
            tup[j] = rt
            out.append(tuple(tup))
    return out


def _fiber_core_options(term: ReducedTerm, values: dict[str, int],
                        bound: int):
    """Positive magnitude assignments for the non-free block positions of a
    term: (positions, list of magnitude tuples).  Signs of block variables
    never matter downstream (term values come from the transformed variables
    and the back map uses absolute values), so only magnitudes are listed."""
    from .twomon import _enumerate_exact_products

    if term.kind == "const":
        support = [i for i, e in enumerate(term.side_exps) if e]
        if not support:
            return [], [()]
        tuples = _enumerate_exact_products(
            [term.side_exps[i] for i in support], abs(term.side_target))
        mags = sorted({tuple(abs(x) for x in t) for t in tuples
                       if all(abs(x) <= bound for x in t)})
        return support, mags

    if term.kind == "case3":
        support = [i for i, e in enumerate(term.exps) if e]
        core = []
        for i in support:
            val = abs(values[term.varnames[i]]) * term.scales[i]
            if val > bound:
                return support, []
            core.append(val)
        return support, [tuple(core)]

    # case2: prod U^{e_k/d} = +- qstar * U' / vdiv
    uprime = values[term.varnames[0]]
    ratio = Fraction(abs(term.qstar * uprime), term.vdiv)
    support = [i for i, e in enumerate(term.orig_exps) if e]
    red_exps = [term.orig_exps[i] // term.d for i in support]
    if ratio == 0:
        return support, []
    tuples = _power_fiber(red_exps, ratio, bound)
    mags = sorted({tuple(abs(x) for x in t) for t in tuples})
    return support, mags


def _gf2_sign_solutions(rows, rhs_bits, n):
    """All epsilon in {0,1}^n with sum(row[i]*eps_i) = rhs (mod 2) per row."""
    mat = [list(r) + [b] for r, b in zip(rows, rhs_bits)]
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(mat)) if mat[i][col] & 1), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        for i in range(len(mat)):
            if i != r and mat[i][col] & 1:
                mat[i] = [(x + y) % 2 for x, y in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
    for i in range(r, len(mat)):
        if mat[i][n] & 1 and not any(mat[i][j] & 1 for j in range(n)):
            return []
    free = [c for c in range(n) if c not in pivots]
    sols = []
    for combo in itertools.product((0, 1), repeat=len(free)):
        eps = [0] * n
        for c, v in zip(free, combo):
            eps[c] = v
        for row_idx, col in reversed(list(enumerate(pivots))):
            val = mat[row_idx][n]
            for j in range(col + 1, n):
                val ^= mat[row_idx][j] & eps[j]
            eps[col] = val
        sols.append(tuple(eps))
    return sols


def lift_reduced_solution(red: ReducedEquation, values: dict[str, int],
                          bound: int) -> list[tuple[int, ...]]:
    """Original solutions generated by one solution of the reduced equation,
    restricted to the box.

    Core block magnitudes come from the term fibers; free block variables
    (zero exponent in the reduced term) sweep positive magnitudes with early
    pruning.  A candidate magnitude vector lifts iff the three source
    monomial magnitudes are in proportion |M_j| = F * |T_j| for a common
    F > 0; variable signs then come from a GF(2) solve against sign(T_j),
    tried under both global sign interpretations of the branch.
    """
    eq = red.source
    variables = list(eq.variables)
    nv = len(variables)
    tvals = [_term_value(t, values) for t in red.terms]
    if sum(tvals) != 0 or any(t == 0 for t in tvals):
        return []
    rows = [[eq.rows[j][i] % 2 for i in range(nv)] for j in range(3)]
    eps_union = set()
    for flip in (1, -1):
        rhs_bits = [0 if (flip * tvals[j] > 0) == (eq.coeffs[j] > 0) else 1
                    for j in range(3)]
        eps_union.update(_gf2_sign_solutions(rows, rhs_bits, nv))
    if not eps_union:
        return []
    tabs = [abs(t) for t in tvals]

    term_data = []
    free_vecs = []
    for term, basis in zip(red.terms, red.bases):
        positions, opts = _fiber_core_options(term, values, bound)
        if positions and not opts:
            return []
        term_data.append((basis, positions, opts))
        for i in term.free_idx:
            free_vecs.append(basis[i])

    if any(m > bound for m in red.particular):
        return []
    out = set()
    coeff_abs = [abs(c) for c in eq.coeffs]

    def emit(mags):
        m = []
        for j in range(3):
            val = coeff_abs[j]
            for i in range(nv):
                if eq.rows[j][i]:
                    val *= mags[i] ** eq.rows[j][i]
            m.append(val)
        # common positive ratio |M_j| / |T_j|
        if m[0] * tabs[1] != m[1] * tabs[0] or m[1] * tabs[2] != m[2] * tabs[1]:
            return
        for eps in eps_union:
            out.add(tuple(v if not e else -v for v, e in zip(mags, eps)))

    def sweep_free(idx, mags):
        if idx == len(free_vecs):
            emit(mags)
            return
        vec = free_vecs[idx]
        val = 1
        while val <= bound:
            nxt = [m * val ** vec[i] for i, m in enumerate(mags)]
            if any(m > bound for m in nxt):
                break
            sweep_free(idx + 1, nxt)
            val += 1

    def walk_terms(t_idx, mags):
        if t_idx == 3:
            sweep_free(0, list(mags))
            return
        basis, positions, opts = term_data[t_idx]
        if not positions:
            walk_terms(t_idx + 1, mags)
            return
        for tup in opts:
            nxt = list(mags)
            dead = False
            for pos, val in zip(positions, tup):
                vec = basis[pos]
                for i in range(nv):
                    if vec[i]:
                        nxt[i] *= val ** vec[i]
                        if nxt[i] > bound:
                            dead = True
                            break
                if dead:
                    break
            if not dead:
                walk_terms(t_idx + 1, nxt)

    walk_terms(0, list(red.particular))
    return sorted(out)


def _term_value(term: ReducedTerm, values: dict[str, int]) -> int:
    if term.kind == "const":
        return term.coeff
    val = term.coeff
    if term.kind == "case3":
        for name, e in zip(term.varnames, term.exps):
            if e:
                val *= values[name] ** e
        return val
    # case2
    val *= values[term.varnames[0]] ** term.d
    return val


def solve_reduced(red: ReducedEquation, bound: int = 10_000,
                  backend: str | None = None):
    """Solve one reduced equation over nonzero integers; returns
    (solution set over the reduced variables, status)."""
    poly = red.polynomial()
    variables = list(poly.variables)
    monos = poly.monomials
    if not variables:
        total = sum(m.coeff for m in monos)
        out = SolutionSet([], status=COMPLETE)
        if total == 0:
            out.add_finite(())
        return out, COMPLETE
    if len(monos) == 1:
        return SolutionSet(variables, status=COMPLETE), COMPLETE
    if len(monos) == 2:
        out = solve_two_monomial(poly)
        return out, COMPLETE
    # trinomial in the reduced variables
    if len(variables) <= 2:
        from .twovar import solve_two_var

        try:
            eq2 = canonicalize(poly)
        except NotATrinomial:
            eq2 = None
        if eq2 is not None and len(eq2.variables) == 2:
            rep = solve_two_var(eq2, bound=bound, backend=backend)
            return rep.solutions, rep.solutions.status
        if eq2 is not None and len(eq2.variables) == 1:
            var = eq2.variables[0]
            full = poly
            deg = full.degree_in(var)
            coeffs = [0] * (deg + 1)
            for m in full.monomials:
                coeffs[m.exp_of(var)] += m.coeff
            out = SolutionSet(variables, status=COMPLETE, equation=poly)
            from .intcore import solve_univariate as usolve

            for r in usolve(coeffs)[0]:
                if r != 0:
                    out.add_finite((r,))
            return out, COMPLETE
    lin_idx = None
    for idx, mono in enumerate(monos):
        if any(e == 1 for _, e in mono.exps):
            lin_idx = idx
            break
    if lin_idx is not None:
        out = solve_x1k_x2(poly, lin_idx)
        return out, out.status
    blocks = _solve_blocks(poly, bound, backend)
    if blocks is not None:
        return blocks, blocks.status
    # definite check: all exponents even, coefficients of one sign
    if _definite_empty(monos):
        return SolutionSet(variables, status=COMPLETE), COMPLETE
    cap = {1: 60, 2: 60, 3: 25}.get(len(variables), 10)
    searched_set = _bounded_reduced_search(poly, min(bound, cap))
    searched_set.status = REDUCED_ONLY
    return searched_set, REDUCED_ONLY


def _solve_blocks(poly: Polynomial, bound, backend):
    """Group each monomial into a single power of a product block and solve
    the resulting equation when it has at most two block variables (or a
    linear block); recover the block variables by divisor fibers."""
    monos = poly.monomials
    blocks = []
    sub_monos: dict[tuple, int] = {}
    names = []
    for j, m in enumerate(monos):
        exps = [e for _, e in m.exps]
        if not exps:
            sub_monos[()] = sub_monos.get((), 0) + m.coeff
            blocks.append(None)
            continue
        d = 0
        for e in exps:
            d = gcd(d, e)
        wname = f"blk{j}"
        names.append(wname)
        key = ((wname, d),)
        sub_monos[key] = sub_monos.get(key, 0) + m.coeff
        blocks.append((wname, d, [(v, e // d) for v, e in m.exps]))
    merged = [Monomial(co, key) for key, co in sub_monos.items() if co]
    sub_poly = Polynomial(merged, names)
    nvars = len({v for mo in merged for v, _ in mo.exps})
    if nvars > 2:
        if find_separated_linear(sub_poly) is not None:
            inner = solve_separated_linear(sub_poly)
        else:
            return None
    else:
        inner = solve(sub_poly, bound=bound, backend=backend).solutions
    return _unsub_blocks(poly, inner, blocks, names)


def _unsub_blocks(poly: Polynomial, inner: SolutionSet, blocks, names):
    variables = list(poly.variables)
    live = [b for b in blocks if b]

    def lift_point(point, bound):
        vals = dict(zip(inner.variables, point))
        fibers = []
        for wname, d, parts in live:
            wval = vals.get(wname)
            if wval is None or wval == 0:
                return
            from .twomon import _enumerate_exact_products

            tuples = [t for t in _enumerate_exact_products(
                [e for _, e in parts], wval)
                if all(abs(x) <= bound for x in t)]
            if not tuples:
                return
            fibers.append((parts, tuples))
        for combo in itertools.product(*[f[1] for f in fibers]):
            env = {}
            for (parts, _), tup in zip(fibers, combo):
                for (v, _), val in zip(parts, tup):
                    env[v] = val
            yield tuple(env[v] for v in variables)

    max_deg = max(1, max(sum(e for _, e in parts) for _, _, parts in live))

    def inner_bound(b):
        return min(max(abs(b), 2) ** max_deg, 10**6)

    class _BlockMapped(MappedFamily):
        """The family image is exactly the nonzero solution set of the
        reduced trinomial, so box listings enumerate it directly; the block
        families are kept for the closed forms and the status."""

        def __init__(self):
            super().__init__(
                variables=variables, inner=inner, lift=lambda p: [],
                inner_bound=inner_bound,
                exact_box=all(f.exact_box for f in inner.families),
                note="block grouping")

        def enumerate_box(self, bound, sweep=None):
            from .oracle import BoxTooLarge, brute_force

            try:
                run = brute_force(poly, bound, guard=4_000_000)
                return {t for t in run.solutions
                        if all(x != 0 for x in t)}
            except BoxTooLarge:
                pass
            ib = self.inner_bound(bound)
            inner_pts, _ = self.inner.enumerate_box(ib, sweep)
            out = set()
            for pt in inner_pts:
                for tup in lift_point(pt, bound) or ():
                    if poly.evaluate(dict(zip(variables, tup))) == 0:
                        out.add(tup)
            return out

    out = SolutionSet(variables, status=inner.status, equation=poly,
                      provenance=list(inner.provenance))
    out.families.append(_BlockMapped())
    return out


def _definite_empty(monos) -> bool:
    signs = set()
    for m in monos:
        if any(e % 2 for _, e in m.exps):
            return False
        signs.add(m.coeff > 0)
    return len(signs) == 1


def _bounded_reduced_search(poly: Polynomial, bound: int) -> SolutionSet:
    from .oracle import brute_force

    out = SolutionSet(list(poly.variables), status=searched(bound),
                      equation=poly)
    if len(poly.variables) <= 4:
        for t in brute_force(poly, bound).solutions:
            if all(x != 0 for x in t):
                out.add_finite(t)
    return out


def solve_prop4(eq: TrinomialEquation, cert: Prop4Certificate,
                bound: int = 10_000) -> SolutionSet:
    """Complete solving when the z-system is solvable: reduce to independent
    monomials and solve the guaranteed linear-block shapes."""
    reduced = reduce_to_independent(eq)
    out = SolutionSet(list(eq.variables), status=COMPLETE)
    for red in reduced:
        inner, status = solve_reduced(red, bound=bound)
        if status.kind != "complete":
            out.status = out.status.combine(status)
        out.families.append(_reduced_lift_family(red, inner))
    return out


def _reduced_lift_family(red: ReducedEquation, inner: SolutionSet):
    return _ReducedMapped(list(red.source.variables), inner, red)


class _ReducedMapped(MappedFamily):
    """Mapped family whose lift depends on the enumeration bound (fiber
    enumeration of block variables is bounded by the box)."""

    def __init__(self, variables, inner, red):
        super().__init__(variables=variables, inner=inner,
                         lift=lambda p: [], inner_bound=lambda b: b,
                         exact_box=all(f.exact_box for f in inner.families),
                         note=f"lift of {red.describe()}")
        self.red = red

    def enumerate_box(self, bound, sweep=None):
        inner_pts = self._inner_points(bound, sweep)
        out: set[tuple[int, ...]] = set()
        for pt in inner_pts:
            if any(x == 0 for x in pt):
                continue
            values = dict(zip(self.inner.variables, pt))
            for lifted in lift_reduced_solution(self.red, values, bound):
                out.add(lifted)
        return out

    def _inner_points(self, bound, sweep):
        """Solutions of the reduced equation in the box: directly from the
        oracle when the variable count allows, else through the families."""
        from .oracle import BoxTooLarge, brute_force

        rpoly = self.red.polynomial()
        if rpoly.variables and self.inner.variables == rpoly.variables:
            try:
                run = brute_force(rpoly, bound, guard=300_000)
                return run.solutions
            except BoxTooLarge:
                pass
        pts, _ = self.inner.enumerate_box(self.inner_bound(bound), sweep)
        return pts

# ---------------------------------------------------------------------------
# classification of coefficient families
# ---------------------------------------------------------------------------

def classify_family(rows: tuple[tuple[int, ...], ...]):
    """For a family of equations a*M1 + b*M2 = c*M3 given by exponent rows
    (coefficients symbolic): either the sufficient condition holds for some
    orientation (returns ('prop4', orientation, z)), or the reduced
    independent-monomial shape with unit coefficients
    (returns ('reduced', shape string))."""
    nv = len(rows[0])
    for i in range(3):
        others = [j for j in range(3) if j != i]
        alpha, beta, gamma = rows[others[0]], rows[others[1]], rows[i]
        status, z = _system_solve(alpha, beta, gamma, 1, budget=200000)
        if status == "feasible":
            return ("prop4", i, tuple(z))
    r1, r2, r3 = rows
    shapes = []
    for weights, eqrow in (
            ([r1[i] - r2[i] for i in range(nv)],
             [r2[i] - r3[i] for i in range(nv)]),
            ([r2[i] - r3[i] for i in range(nv)],
             [r1[i] - r3[i] for i in range(nv)]),
            ([r3[i] - r1[i] for i in range(nv)],
             [r1[i] - r2[i] for i in range(nv)])):
        basis = hilbert_basis([eqrow]).homogeneous
        exps = [sum(w * v for w, v in zip(weights, vec)) for vec in basis]
        shapes.append(_shape_of_exponents(exps))
    shapes.sort(key=_shape_sort_key, reverse=True)
    letters = iter("uvwrst")
    parts = []
    seen_const = False
    for shape in shapes:
        if shape == ():
            if seen_const:
                continue  # two constant blocks merge into one
            seen_const = True
            parts.append("C")
        else:
            body = "".join(
                f"{next(letters)}^{e}" if e != 1 else next(letters)
                for e in shape)
            parts.append(body)
    return ("reduced", "+".join(parts) + "=0")


def _shape_of_exponents(exps: list[int]):
    """The monomial shape of a block term: mixed signs collapse to a single
    d-th power (root criterion), all-negative to a constant, and non-negative
    lists with a common factor d >= 2 group into a d-th power of a product."""
    nz = [e for e in exps if e]
    if not nz:
        return ()
    if all(e < 0 for e in nz):
        return ()
    d = 0
    for e in nz:
        d = gcd(d, abs(e))
    if any(e < 0 for e in nz):
        return (d,)
    if d >= 2 or len(nz) == 1:
        return (d,)
    return tuple(sorted(nz, reverse=True))


def _shape_sort_key(shape):
    return (len(shape), sorted(shape, reverse=True) if shape else [])


# enumeration of families by degree ----------------------------------------

def enumerate_families(degree: int):
    """Canonical exponent matrices of three-monomial families of the given
    total degree (max monomial degree = degree), up to renaming of variables
    and reordering of monomials; excludes families where all three monomials
    share a variable and families with at most two effective variables."""
    monomial_patterns = []
    for d in range(degree + 1):
        monomial_patterns.extend(_partitions(d))
    out = set()
    for pat1 in monomial_patterns:
        for pat2 in monomial_patterns:
            for pat3 in monomial_patterns:
                if max(sum(pat1), sum(pat2), sum(pat3)) != degree:
                    continue
                for mat in _overlap_matrices(pat1, pat2, pat3):
                    rows = _canonical_matrix(mat)
                    if rows is None:
                        continue
                    out.add(rows)
    return sorted(out)


def _partitions(d: int):
    """Multiplicative monomial patterns: partitions of d (empty for d=0)."""
    if d == 0:
        return [()]
    out = []

    def rec(remaining, mx, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for k in range(min(mx, remaining), 0, -1):
            rec(remaining - k, k, prefix + [k])

    rec(d, d, [])
    return out


def _overlap_matrices(pat1, pat2, pat3):
    """All ways to identify variable slots across the three patterns: assign
    each slot a variable id, where slots of the same monomial stay distinct."""
    slots = ([(0, e) for e in pat1] + [(1, e) for e in pat2]
             + [(2, e) for e in pat3])
    n = len(slots)
    results = []

    def rec(idx, assignment, nvars):
        if idx == n:
            cols = []
            for var in range(nvars):
                col = [0, 0, 0]
                for (mono, e), a in zip(slots, assignment):
                    if a == var:
                        col[mono] += e
                cols.append(tuple(col))
            results.append(tuple(cols))
            return
        mono, _ = slots[idx]
        used_here = {assignment[j] for j in range(idx)
                     if slots[j][0] == mono}
        for var in range(nvars + 1):
            if var in used_here:
                continue
            rec(idx + 1, assignment + [var], max(nvars, var + 1))

    rec(0, [], 0)
    return results


def _canonical_matrix(cols):
    """Canonical form of a 3 x n exponent matrix (columns = variables) up to
    row and column permutation, with the exclusion rules applied; None when
    excluded."""
    n = len(cols)
    if n < 3:
        return None  # at most two effective variables
    if any(all(col[j] > 0 for j in range(3)) for col in cols):
        return None  # all three monomials share a variable
    rows = [tuple(col[j] for col in cols) for j in range(3)]
    if len(set(rows)) < 3:
        return None  # coinciding monomials
    best = None
    for perm in itertools.permutations(range(3)):
        permuted = [rows[p] for p in perm]
        col_sorted = tuple(sorted(
            (tuple(permuted[j][i] for j in range(3)) for i in range(n)),
            reverse=True))
        key = tuple(tuple(col[j] for col in col_sorted) for j in range(3))
        if best is None or key < best:
            best = key
    return best


# ---------------------------------------------------------------------------
# cyclic equations x^a y^b + y^a z^b + z^a x^b = 0
# ---------------------------------------------------------------------------

@dataclass
class CyclicReport:
    a: int
    b: int
    case: str
    m: int
    solutions: SolutionSet
    citations: list[str] = field(default_factory=list)


def classify_cyclic(a: int, b: int, bound: int = 10_000) -> CyclicReport:
    if (a, b) == (0, 0):
        raise ValueError("(a, b) must not be (0, 0)")
    eq = _cyclic_equation(a, b)
    variables = ["x", "y", "z"]
    d = gcd(a, b)
    m = a * a - a * b + b * b
    if d == 2:
        out = SolutionSet(variables, status=COMPLETE)
        out.add_finite((0, 0, 0))
        return CyclicReport(a, b, "even-gcd: non-negative monomials", m, out)
    if d >= 3:
        triv = trivial_solutions(eq)
        return CyclicReport(
            a, b, f"gcd {d} >= 3: no solutions with xyz != 0", m, triv,
            ["Fermat's Last Theorem (Wiles 1995)"])
    if m >= 3:
        triv = trivial_solutions(eq)
        return CyclicReport(
            a, b, f"coprime, m = {m} >= 3: xyz = 0 forced", m, triv,
            ["Fermat's Last Theorem (Wiles 1995)"])
    report = solve(poly_to_string(eq.full_polynomial()) + "=0", bound=bound)
    return CyclicReport(a, b, f"m = {m} < 3: delegated to the general solver",
                        m, report.solutions)


def _cyclic_equation(a: int, b: int) -> TrinomialEquation:
    def mono(e1, e2):
        parts = []
        for v, e in e1, e2:
            if e:
                parts.append(f"{v}^{e}")
        return "*".join(parts) if parts else "1"

    text = "+".join([mono(("x", a), ("y", b)), mono(("y", a), ("z", b)),
                     mono(("z", a), ("x", b))])
    return canonicalize(parse_equation(text))


# ---------------------------------------------------------------------------
# Monte Carlo experiment
# ---------------------------------------------------------------------------

def _prop4_condition(alpha, beta, gamma, budget=500000) -> tuple[bool, bool]:
    """(solvable in some orientation, hit unknown)."""
    unknown = False
    for a, b, g in ((alpha, beta, gamma), (alpha, gamma, beta),
                    (beta, gamma, alpha)):
        gens = [(x - y, z - x) for x, y, z in zip(a, b, g)]
        status, _ = solve_monoid_target_2d(gens, (0, 1), budget)
        if status == "feasible":
            return True, unknown
        if status == "unknown":
            unknown = True
    return False, unknown


def _mc_chunk(args):
    n, d, seed, count, budget = args
    rng = random.Random(seed)
    feasible = 0
    unknown = 0
    for _ in range(count):
        alpha = [rng.randint(0, d) for _ in range(n)]
        beta = [rng.randint(0, d) for _ in range(n)]
        gamma = [rng.randint(0, d) for _ in range(n)]
        ok, unk = _prop4_condition(alpha, beta, gamma, budget)
        feasible += ok
        unknown += unk
    return feasible, unknown


@dataclass
class MonteCarloResult:
    n: int
    d: int
    samples: int
    feasible: int
    unknown: int

    @property
    def proportion(self) -> float:
        return self.feasible / self.samples


def monte_carlo_prop4(n: int, d: int, samples: int, seed: int,
                      threads: int = 1, budget: int = 500000,
                      chunk: int = 250) -> MonteCarloResult:
    """Proportion of random exponent draws (uniform on [0, d]) for which the
    sufficient condition holds in some orientation.  Deterministic for fixed
    (n, d, samples, seed) regardless of thread count: fixed-size chunks get
    seeds derived from the chunk index."""
    if n < 1 or samples < 1:
        raise ValueError("need n >= 1, samples >= 1")
    chunks = []
    done = 0
    idx = 0
    while done < samples:
        size = min(chunk, samples - done)
        chunks.append((n, d, (seed << 20) ^ (idx * 0x9E3779B1), size, budget))
        done += size
        idx += 1
    feasible = unknown = 0
    if threads > 1:
        import concurrent.futures as cf

        with cf.ProcessPoolExecutor(max_workers=threads) as pool:
            for f, u in pool.map(_mc_chunk, chunks):
                feasible += f
                unknown += u
    else:
        for args in chunks:
            f, u = _mc_chunk(args)
            feasible += f
            unknown += u
    return MonteCarloResult(n, d, samples, feasible, unknown)


# ---------------------------------------------------------------------------
# master dispatcher
# ---------------------------------------------------------------------------

@dataclass
class SolveReport:
    input_text: str
    canonical: str
    path: list[str]
    solutions: SolutionSet
    reduced: list[str] = field(default_factory=list)
    base_records: list[BaseSolveRecord] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def status(self) -> Status:
        return self.solutions.status


def solve(text_or_poly, bound: int = 10_000, backend: str | None = None,
          budget: int = 1_000_000) -> SolveReport:
    """End-to-end solver for any parsed polynomial equation: univariate and
    one/two-monomial shapes directly, two-variable trinomials through the
    complete pipeline, n-variable trinomials through the direct formula, the
    sufficient condition, or the reduction to independent monomials."""
    start = time.perf_counter()
    if isinstance(text_or_poly, str):
        poly = parse_equation(text_or_poly)
        text = text_or_poly
    else:
        poly = text_or_poly
        text = poly_to_string(poly) + "=0"
    path: list[str] = []
    records: list[BaseSolveRecord] = []
    reduced_strs: list[str] = []

    nmon = len(poly.monomials)
    variables = list(poly.variables)
    if nmon == 0:
        path.append("identically-zero")
        out = SolutionSet(variables, status=COMPLETE, equation=poly)
        out.families.append(_zero_family(variables, set()) if variables
                            else _zero_family(variables, set()))
        sols = out
    elif not variables:
        path.append("constant")
        sols = SolutionSet([], status=COMPLETE)
        if poly.evaluate({}) == 0:
            sols.add_finite(())
    elif nmon == 1:
        path.append("one-monomial")
        sols = _solve_one_monomial(poly)
    elif len(variables) == 1:
        path.append("univariate")
        sols = _solve_univariate_poly(poly)
    elif nmon == 2:
        path.append("two-monomial")
        sols = solve_two_monomial(poly).union(_two_monomial_trivials(poly))
    else:
        eq = canonicalize(poly)
        if len(eq.variables) == 1:
            path.append("univariate")
            sols = _solve_univariate_poly(poly)
        elif len(eq.variables) == 2:
            from .twovar import solve_two_var

            rep = solve_two_var(eq, bound=bound, backend=backend)
            path.extend(["two-variable"] + rep.path)
            records.extend(rep.base_records)
            sols = rep.solutions
        else:
            sols, extra_path, reduced_strs = _solve_multivar(
                eq, bound, backend, budget)
            path.extend(extra_path)
    report = SolveReport(text, poly_to_string(poly) + "=0", path, sols,
                         reduced_strs, records,
                         time.perf_counter() - start)
    return report


def _solve_multivar(eq: TrinomialEquation, bound, backend, budget):
    path = ["n-variable"]
    triv = trivial_solutions(eq)
    cert = check_prop4(eq, budget)
    reduced_strs: list[str] = []
    if cert is not None and cert.unknown:
        path.append("feasibility-unknown")
        out = triv
        out.status = out.status.combine(UNKNOWN)
        return out, path, reduced_strs
    if cert is not None and cert.t is not None:
        path.append("direct-formula")
        fam = direct_formula(eq, cert)
        out = triv
        out.families.append(fam)
        out.provenance.append("direct parametrization of all nontrivial "
                              "solutions")
        return out, path, reduced_strs
    if cert is not None:
        path.append("sufficient-condition")
        nonzero = solve_prop4(eq, cert, bound=bound)
        return triv.union(nonzero), path, reduced_strs
    path.append("reduction")
    out = triv
    status = COMPLETE
    for red in reduce_to_independent(eq):
        reduced_strs.append(red.describe())
        inner, st = solve_reduced(red, bound=bound, backend=backend)
        status = status.combine(st)
        out.families.append(_reduced_lift_family(red, inner))
    out.status = out.status.combine(status)
    return out, path, sorted(set(reduced_strs))


def _solve_one_monomial(poly: Polynomial) -> SolutionSet:
    mono = poly.monomials[0]
    variables = list(poly.variables)
    out = SolutionSet(variables, status=COMPLETE, equation=poly)
    for v in mono.variables():
        out.families.append(_zero_family(variables, {v}))
    return out


def _solve_univariate_poly(poly: Polynomial) -> SolutionSet:
    var = poly.variables[0]
    deg = poly.degree_in(var)
    coeffs = [0] * (deg + 1)
    for m in poly.monomials:
        coeffs[m.exp_of(var)] += m.coeff
    from .intcore import solve_univariate as usolve

    out = SolutionSet([var], status=COMPLETE, equation=poly)
    for r in usolve(coeffs)[0]:
        out.add_finite((r,))
    return out


def _two_monomial_trivials(poly: Polynomial) -> SolutionSet:
    variables = list(poly.variables)
    out = SolutionSet(variables, status=COMPLETE, equation=poly)
    n = len(variables)
    for mask in range(1, 1 << n):
        zeros = {variables[i] for i in range(n) if mask >> i & 1}
        sub = poly.substitute_zero(zeros)
        if not sub.monomials:
            out.families.append(_zero_family(variables, zeros))
        elif len(sub.monomials) == 2:
            inner = solve_two_monomial(sub)
            rest = [v for v in variables if v not in zeros]
            fam = _embed_family(variables, zeros, rest, inner,
                                require_nonzero=True)
            if fam is not None:
                out.families.append(fam)
    return out

"""Linear Diophantine machinery over the non-negative integers.

Covers the two-term solver (n*x = m*y + b), Hilbert bases / minimal solutions
of linear systems via a Contejean-Devie completion, the xy = zt
parametrization, minimal divisibility sets, and an exact decision procedure
for membership of a target vector in the monoid generated by a finite set of
2-D integer vectors (the workhorse behind the sufficient-condition check,
fast enough for exponent bounds around 1e5).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from math import gcd

from .intcore import factorize


# ---------------------------------------------------------------------------
# Two-term equation n*x = m*y + b  (x, y >= 0)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TwoTermSolution:
    solvable: bool
    x0: int = 0
    y0: int = 0
    step_x: int = 0
    step_y: int = 0

    def solutions_up_to(self, limit: int) -> list[tuple[int, int]]:
        """All (x, y) with x + y <= limit."""
        if not self.solvable:
            return []
        out = []
        x, y = self.x0, self.y0
        while x + y <= limit:
            out.append((x, y))
            if self.step_x == 0 and self.step_y == 0:
                break
            x += self.step_x
            y += self.step_y
        return out


def solve_two_term(n: int, m: int, b: int) -> TwoTermSolution:
    """Solve n*x = m*y + b in non-negative integers.

    Returns the x+y-minimal solution and the step pair
    (m/gcd(n,m), n/gcd(n,m)); every solution is (x0 + step_x*u, y0 + step_y*u)
    for u >= 0.  Unsolvable when gcd(n, m) does not divide b or no
    non-negative solution exists.
    """
    if n < 0 or m < 0 or (n, m) == (0, 0):
        raise ValueError("need non-negative n, m, not both zero")
    g = gcd(n, m)
    if b % g != 0:
        return TwoTermSolution(False)
    if m == 0:
        if b < 0 or b % n != 0:
            return TwoTermSolution(False)
        return TwoTermSolution(True, b // n, 0, 0, 1)
    if n == 0:
        if b > 0 or (-b) % m != 0:
            return TwoTermSolution(False)
        return TwoTermSolution(True, 0, -b // m, 1, 0)
    step_x, step_y = m // g, n // g
    # x must satisfy n*x == b (mod m) and n*x >= b.
    ng, mg, bg = n // g, m // g, b // g
    x_res = bg * pow(ng, -1, mg) % mg
    x_min = max(0, -((-b) // n) if b > 0 else 0)
    if b > 0:
        x_min = max(x_min, (b + n - 1) // n)
    if x_res >= x_min:
        x0 = x_res
    else:
        x0 = x_res + ((x_min - x_res + mg - 1) // mg) * mg
    y0 = (n * x0 - b) // m
    return TwoTermSolution(True, x0, y0, step_x, step_y)


# ---------------------------------------------------------------------------
# xy = zt parametrization
# ---------------------------------------------------------------------------

def solve_xy_eq_zt(x: int, y: int, z: int, t: int) -> tuple[int, int, int, int]:
    """Given x*y == z*t, return (u, v, w, r) with x=u*v, y=w*r, z=u*w, t=v*r.

    Follows the gcd construction: u = gcd(x, z) > 0 when x != 0.
    """
    if x * y != z * t:
        raise ValueError("xy != zt")
    if x != 0:
        u = gcd(x, z)
        v = x // u
        w = z // u
        assert t % v == 0
        r = t // v
    elif z != 0:
        # zt = 0 forces t = 0 here
        w = gcd(z, y)
        u = z // w
        r = y // w
        v = 0
    else:
        r = gcd(y, t)
        if r == 0:
            u = v = w = 0
        else:
            u = 0
            w = y // r
            v = t // r
    assert (x, y, z, t) == (u * v, w * r, u * w, v * r)
    return u, v, w, r


# ---------------------------------------------------------------------------
# Contejean-Devie completion
# ---------------------------------------------------------------------------

@dataclass
class MinimalBasis:
    """Minimal non-negative solutions of a linear system.

    `homogeneous` generates the solution cone of A z = 0; `particular` lists
    the minimal solutions of A z = b (empty for b = 0 or infeasible systems).
    status is 'complete' or 'budget' (search truncated: feasibility unknown).
    """

    homogeneous: list[tuple[int, ...]] = field(default_factory=list)
    particular: list[tuple[int, ...]] = field(default_factory=list)
    status: str = "complete"
    homogeneous_system: bool = False
    nvars: int = 0

    @property
    def feasible(self) -> bool:
        return self.homogeneous_system or bool(self.particular)


def _dominates(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    """Componentwise a >= b with a != b."""
    return a != b and all(x >= y for x, y in zip(a, b))


def _dominates_eq(a, b) -> bool:
    return all(x >= y for x, y in zip(a, b))


def hilbert_basis(system: list[list[int]], budget: int = 1_000_000) -> MinimalBasis:
    """All minimal nonzero non-negative solutions of the homogeneous system
    given as coefficient rows (sum_i row[i]*z_i = 0 for each row)."""
    basis = solve_system_nonneg(system, [0] * len(system), budget)
    return basis


def solve_system_nonneg(system: list[list[int]], rhs: list[int],
                        budget: int = 1_000_000) -> MinimalBasis:
    """Minimal solutions of A z = b over non-negative integers by a
    Contejean-Devie completion on the homogenized system A z - b w = 0.

    Minimal solutions with w = 1 are the minimal particular solutions; those
    with w = 0 form the homogeneous Hilbert basis.  A node budget bounds the
    frontier search; on exhaustion the result carries status='budget' and
    feasibility must be treated as unknown.
    """
    if not system:
        raise ValueError("empty system")
    n = len(system[0])
    if any(len(row) != n for row in system) or len(rhs) != len(system):
        raise ValueError("ragged system")
    homogeneous = rhs == [0] * len(rhs)
    if homogeneous:
        rows = [list(row) for row in system]
        width = n
    else:
        rows = [list(row) + [-b] for row, b in zip(system, rhs)]
        width = n + 1

    def apply(v: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(sum(r[i] * v[i] for i in range(width)) for r in rows)

    col_values = [apply(tuple(1 if j == i else 0 for j in range(width)))
                  for i in range(width)]
    minimals: list[tuple[int, ...]] = []
    frontier: deque[tuple[tuple[int, ...], tuple[int, ...]]] = deque()
    seen: set[tuple[int, ...]] = set()
    for i in range(width):
        unit = tuple(1 if j == i else 0 for j in range(width))
        frontier.append((unit, col_values[i]))
        seen.add(unit)
    status = "complete"
    expansions = 0
    while frontier:
        node, value = frontier.popleft()
        if any(_dominates_eq(node, m) and node != m for m in minimals):
            continue
        if all(v == 0 for v in value):
            minimals = [m for m in minimals if not _dominates(m, node)]
            minimals.append(node)
            continue
        expansions += 1
        if expansions > budget:
            status = "budget"
            break
        for i in range(width):
            if sum(a * b for a, b in zip(value, col_values[i])) >= 0:
                continue
            child = tuple(node[j] + (1 if j == i else 0) for j in range(width))
            if child in seen:
                continue
            if any(_dominates_eq(child, m) for m in minimals):
                continue
            seen.add(child)
            frontier.append((child, apply(child)))

    if homogeneous:
        return MinimalBasis(sorted(minimals), [], status, True, n)
    hom = sorted(v[:n] for v in minimals if v[n] == 0)
    part = sorted(v[:n] for v in minimals if v[n] == 1)
    return MinimalBasis(hom, part, status, False, n)


def generate_solutions(basis: MinimalBasis, bound: int) -> set[tuple[int, ...]]:
    """All solutions with entries <= bound generated as particular plus
    non-negative combinations of the homogeneous minimals (for testing)."""
    if basis.homogeneous_system:
        seeds = [None]
    elif basis.particular:
        seeds = list(basis.particular)
    else:
        return set()
    out: set[tuple[int, ...]] = set()
    for seed in seeds:
        n = basis.nvars or (len(seed) if seed else 0)
        if n == 0:
            continue
        start = tuple(seed) if seed else tuple([0] * n)
        stack = [start]
        seen = {start}
        while stack:
            cur = stack.pop()
            out.add(cur)
            for h in basis.homogeneous:
                nxt = tuple(c + d for c, d in zip(cur, h))
                if max(nxt) <= bound and nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
    return out


# ---------------------------------------------------------------------------
# Minimal divisibility sets (finite certificates for q | prod U_k^e_k)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DivisibilityMinimalSet:
    exponents: tuple[int, ...]
    q: int
    tuples: tuple[tuple[int, ...], ...]


def _minimal_inequality(e: list[int], target: int) -> list[tuple[int, ...]]:
    """Minimal non-negative u with sum(e_k * u_k) >= target (target >= 1)."""
    n = len(e)
    out: list[tuple[int, ...]] = []

    def rec(idx: int, prefix: list[int], remaining: int):
        if idx == n:
            if remaining <= 0:
                out.append(tuple(prefix))
            return
        if e[idx] == 0:
            rec(idx + 1, prefix + [0], remaining)
            return
        cap = (remaining + e[idx] - 1) // e[idx] if remaining > 0 else 0
        for u in range(cap + 1):
            rec(idx + 1, prefix + [u], remaining - e[idx] * u)

    rec(0, [], target)
    minimal = [u for u in out if not any(_dominates(u, v) for v in out)]
    return sorted(set(minimal))


def minimal_divisibility_set(e: list[int], q: int) -> DivisibilityMinimalSet:
    """The finite set M of positive tuples d such that q | prod(d_k**e_k) and
    q | prod(U_k**e_k) iff some d in M divides U componentwise.

    Positions with e_k = 0 are forced to 1.  Computed prime by prime: a tuple
    is minimal iff its per-prime exponent vector is a minimal solution of
    sum(e_k * u_k) >= v_p(q) for every p | q.
    """
    if q == 0:
        raise ValueError("q must be nonzero")
    if all(x == 0 for x in e):
        if abs(q) == 1:
            return DivisibilityMinimalSet(tuple(e), q, (tuple([1] * len(e)),))
        raise ValueError("all exponents zero: only |q| = 1 admits solutions")
    tuples = [tuple([1] * len(e))]
    for p, qp in factorize(q).factors:
        per_prime = _minimal_inequality(list(e), qp)
        tuples = [tuple(t * p**u for t, u in zip(tup, vec))
                  for tup in tuples for vec in per_prime]
    return DivisibilityMinimalSet(tuple(e), q, tuple(sorted(set(tuples))))


# ---------------------------------------------------------------------------
# Exact membership in a finitely generated submonoid of Z^2
# ---------------------------------------------------------------------------

def _cross(a: tuple[int, int], b: tuple[int, int]) -> int:
    return a[0] * b[1] - a[1] * b[0]


def _dot(a: tuple[int, int], b: tuple[int, int]) -> int:
    return a[0] * b[0] + a[1] * b[1]


def _primitive(v: tuple[int, int]) -> tuple[int, int]:
    g = gcd(v[0], v[1])
    return (v[0] // g, v[1] // g)


def _angle_key(v: tuple[int, int]):
    """Sort key by angle in [0, 2pi) using exact arithmetic."""
    x, y = v
    if y > 0 or (y == 0 and x > 0):
        half = 0
    else:
        half = 1
    # within a half-turn, order by slope: a before b iff cross(a,b) > 0
    return half, _SlopeKey(v)


class _SlopeKey:
    __slots__ = ("v",)

    def __init__(self, v):
        self.v = v

    def __lt__(self, other):
        return _cross(self.v, other.v) > 0

    def __eq__(self, other):
        return _cross(self.v, other.v) == 0


def _solve_lattice_2d(gens: list[tuple[int, int]], target: tuple[int, int]):
    """Integer (any sign) solution of sum(c_i * gens[i]) = target, or None.

    Column-reduces the 2 x n generator matrix, tracking the transformation.
    """
    n = len(gens)
    cols = [list(g) for g in gens]
    trans = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    # trans[i] tracks: current col i = sum_j trans[i][j] * original col j

    def combine(i, j, a, b, c, d):
        # (col_i, col_j) <- (a*col_i + b*col_j, c*col_i + d*col_j)
        ci = [a * cols[i][0] + b * cols[j][0], a * cols[i][1] + b * cols[j][1]]
        cj = [c * cols[i][0] + d * cols[j][0], c * cols[i][1] + d * cols[j][1]]
        cols[i], cols[j] = ci, cj
        ti = [a * trans[i][k] + b * trans[j][k] for k in range(n)]
        tj = [c * trans[i][k] + d * trans[j][k] for k in range(n)]
        trans[i], trans[j] = ti, tj

    pivots = []
    for row in range(2):
        piv = None
        for i in range(len(pivots), n):
            if cols[i][row] != 0:
                piv = i
                break
        if piv is None:
            continue
        pos = len(pivots)
        cols[piv], cols[pos] = cols[pos], cols[piv]
        trans[piv], trans[pos] = trans[pos], trans[piv]
        for i in range(pos + 1, n):
            while cols[i][row] != 0:
                q = cols[pos][row] // cols[i][row]
                combine(pos, i, 1, -q, 0, 1)
                if cols[i][row] != 0:
                    cols[pos], cols[i] = cols[i], cols[pos]
                    trans[pos], trans[i] = trans[i], trans[pos]
        pivots.append((pos, row))
    # back-solve target against triangular pivot columns
    coeffs_reduced = [0] * n
    residual = list(target)
    for pos, row in pivots:
        if cols[pos][row] == 0:
            continue
        if residual[row] % cols[pos][row] != 0:
            return None
        k = residual[row] // cols[pos][row]
        coeffs_reduced[pos] = k
        residual[0] -= k * cols[pos][0]
        residual[1] -= k * cols[pos][1]
    if residual != [0, 0]:
        return None
    out = [0] * n
    for i in range(n):
        if coeffs_reduced[i]:
            for j in range(n):
                out[j] += coeffs_reduced[i] * trans[i][j]
    return out


def _coin_reachable(coins: list[int], target: int, budget: int):
    """Non-negative combination of positive coins equal to target >= 0.
    Returns (status, counts)."""
    if target == 0:
        return "feasible", [0] * len(coins)
    if target < 0:
        return "infeasible", None
    g = 0
    for c in coins:
        g = gcd(g, c)
    if g == 0 or target % g != 0:
        return "infeasible", None
    if target > budget:
        return "unknown", None
    reach = [None] * (target + 1)
    reach[0] = (-1, -1)
    for v in range(1, target + 1):
        for idx, c in enumerate(coins):
            if c <= v and reach[v - c] is not None:
                reach[v] = (v - c, idx)
                break
    if reach[target] is None:
        return "infeasible", None
    counts = [0] * len(coins)
    v = target
    while v > 0:
        prev, idx = reach[v]
        counts[idx] += 1
        v = prev
    return "feasible", counts


def _signed_line_solve(mults: list[int], target: int):
    """Integer combination sum(z_i * m_i) = target with z >= 0, where the
    m_i are nonzero of both signs.  Always solvable when gcd | target."""
    g = 0
    for m in mults:
        g = gcd(g, m)
    if target % g != 0:
        return None
    # Extended-gcd chain over the multiples.
    coef = [0] * len(mults)
    cur = 0
    for i, m in enumerate(mults):
        if cur == 0:
            coef = [0] * len(mults)
            coef[i] = 1
            cur = m
            continue
        gg, s, t = _xgcd(cur, m)
        coef = [s * c for c in coef]
        coef[i] += t
        cur = gg
        if abs(cur) == abs(g):
            break
    scale = target // cur
    coef = [c * scale for c in coef]
    # Shift negative coefficients non-negative using opposite-sign pairs.
    pos = next(i for i, m in enumerate(mults) if m > 0)
    neg = next(i for i, m in enumerate(mults) if m < 0)
    for i, m in enumerate(mults):
        if coef[i] >= 0:
            continue
        partner = neg if m > 0 else pos
        mp = mults[partner]
        gg = gcd(abs(m), abs(mp))
        step_self = abs(mp) // gg
        step_partner = abs(m) // gg
        k = (-coef[i] + step_self - 1) // step_self
        coef[i] += k * step_self
        coef[partner] += k * step_partner
    assert all(c >= 0 for c in coef)
    assert sum(c * m for c, m in zip(coef, mults)) == target
    return coef


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    if b == 0:
        return a, 1, 0
    g, s, t = _xgcd(b, a % b)
    return g, t, s - (a // b) * t


def solve_monoid_target_2d(gens: list[tuple[int, int]], target: tuple[int, int],
                           budget: int = 1_000_000):
    """Decide whether target is a non-negative integer combination of the
    given 2-D integer vectors; construct one if so.

    Returns (status, coeffs) with status in {'feasible','infeasible','unknown'}
    and coeffs aligned with gens.  The decision is exact except on instances
    exceeding the node budget (possible only in the pointed-cone and
    half-plane search phases), which report 'unknown'.
    """
    n = len(gens)
    index = [i for i, g in enumerate(gens) if g != (0, 0)]
    active = [gens[i] for i in index]

    def expand(coeffs_active):
        out = [0] * n
        for pos, c in zip(index, coeffs_active):
            out[pos] = c
        return out

    if target == (0, 0):
        return "feasible", [0] * n
    if not active:
        return "infeasible", None

    dirs = sorted({_primitive(g) for g in active}, key=_angle_key)

    # All generators on one line.
    if len(dirs) <= 2 and all(
            _cross(dirs[0], d) == 0 for d in dirs):
        w = dirs[0]
        if _cross(w, target) != 0:
            return "infeasible", None
        mults = [(g[0] // w[0] if w[0] else g[1] // w[1]) for g in active]
        tm = target[0] // w[0] if w[0] else target[1] // w[1]
        if any(m > 0 for m in mults) and any(m < 0 for m in mults):
            coeffs = _signed_line_solve(mults, tm)
            return ("feasible", expand(coeffs)) if coeffs else ("infeasible", None)
        sign = 1 if all(m > 0 for m in mults) else -1
        status, counts = _coin_reachable([m * sign for m in mults],
                                         tm * sign, budget)
        return (status, expand(counts) if counts else None)

    # Classify the cone by the largest cyclic angular gap between directions:
    # a gap > pi means a pointed cone (the gap's endpoints are the extreme
    # rays), a gap of exactly pi a closed half-plane, all gaps < pi the
    # whole plane.
    m = len(dirs)
    gap_over = gap_pi = None
    for i in range(m):
        a, b = dirs[i], dirs[(i + 1) % m]
        cr = _cross(a, b)
        if cr < 0:
            gap_over = (a, b)
            break
        if cr == 0 and _dot(a, b) < 0:
            gap_pi = (a, b)

    if gap_over is not None:
        end, start = gap_over  # cone spans ccw from `start` to `end`
        return _pointed_case(active, index, n, target, start, end, budget)
    if gap_pi is not None:
        return _halfplane_case(active, index, n, target, gap_pi[0], budget)
    return _spanning_case(active, index, n, target)


def _pointed_case(active, index, n, target, r1, r2, budget):
    """Cone spanned ccw from r1 to r2 (angle < pi).  BFS over the lattice
    points s with s and target - s both in the cone."""

    def phi(v):  # >= 0 inside cone, 0 on ray r1
        return _cross(r1, v)

    def psi(v):  # >= 0 inside cone, 0 on ray r2
        return _cross(v, r2)

    P, Q = phi(target), psi(target)
    if P < 0 or Q < 0:
        return "infeasible", None
    start = (0, 0)
    parent = {start: None}
    queue = deque([start])
    nodes = 0
    while queue:
        s = queue.popleft()
        if s == target:
            coeffs = [0] * len(active)
            cur = s
            while parent[cur] is not None:
                prev, gi = parent[cur]
                coeffs[gi] += 1
                cur = prev
            out = [0] * n
            for pos, c in zip(index, coeffs):
                out[pos] = c
            return "feasible", out
        nodes += 1
        if nodes > budget:
            return "unknown", None
        for gi, g in enumerate(active):
            nxt = (s[0] + g[0], s[1] + g[1])
            if nxt in parent:
                continue
            if 0 <= phi(nxt) <= P and 0 <= psi(nxt) <= Q:
                parent[nxt] = (s, gi)
                queue.append(nxt)
    return "infeasible", None


def _halfplane_case(active, index, n, target, w, budget):
    """Generators span the closed half-plane with boundary line R*w."""
    nu = (-w[1], w[0])
    if any(_dot(nu, g) < 0 for g in active):
        nu = (w[1], -w[0])
    assert all(_dot(nu, g) >= 0 for g in active)
    mass_t = _dot(nu, target)
    if mass_t < 0:
        return "infeasible", None
    boundary = [(i, g) for i, g in enumerate(active) if _dot(nu, g) == 0]
    interior = [(i, g) for i, g in enumerate(active) if _dot(nu, g) > 0]
    bmults = [(g[0] // w[0] if w[0] else g[1] // w[1]) for _, g in boundary]
    g0 = 0
    for mlt in bmults:
        g0 = gcd(g0, mlt)

    def line_coord(v):
        # coordinate along w for vectors on the boundary line
        return v[0] // w[0] if w[0] else v[1] // w[1]

    def finish(inter_counts, used_sum):
        rest = (target[0] - used_sum[0], target[1] - used_sum[1])
        assert _dot(nu, rest) == 0
        tm = line_coord(rest)
        if tm == 0:
            bcoef = [0] * len(boundary)
        else:
            # boundary multiples have both signs (else the cone is pointed)
            if g0 == 0 or tm % g0 != 0:
                return None
            bcoef = _signed_line_solve(bmults, tm)
            if bcoef is None:
                return None
        coeffs = [0] * len(active)
        for (i, _), c in zip(interior, inter_counts):
            coeffs[i] = c
        for (i, _), c in zip(boundary, bcoef):
            coeffs[i] += c
        out = [0] * n
        for pos, c in zip(index, coeffs):
            out[pos] = c
        return out

    if mass_t == 0:
        res = finish([0] * len(interior), (0, 0))
        return ("feasible", res) if res is not None else ("infeasible", None)

    # BFS over (mass consumed, line-residue mod g0) states.
    if not interior:
        return "infeasible", None
    mod = g0 if g0 > 0 else 0
    masses = [_dot(nu, g) for _, g in interior]
    lines = []
    # solve g = a*w + m*h for the line coordinate a (h any vector with
    # <nu,h> = 1); work with exact 2-D decomposition instead.
    det = _dot(nu, nu)

    def line_part(v, mass):
        # v - mass*h where h = nu/|nu|^2 is not integral; instead use
        # coordinate along w of det*v - mass*nu, scaled by det.
        scaled = (det * v[0] - mass * nu[0], det * v[1] - mass * nu[1])
        # scaled lies on the boundary line and equals det * (line part)
        num = scaled[0] // w[0] if w[0] else scaled[1] // w[1]
        return num  # det * a

    target_line = line_part(target, mass_t)
    start = (0, 0)  # (mass, det*line-coordinate accumulated)
    parent = {start: None}
    queue = deque([start])
    nodes = 0
    while queue:
        s = queue.popleft()
        mass, lc = s
        if mass == mass_t:
            diff = target_line - lc
            if mod == 0:
                ok = diff == 0
            else:
                ok = diff % (det * mod) == 0
            if ok:
                counts = [0] * len(interior)
                cur = s
                while parent[cur] is not None:
                    prev, gi = parent[cur]
                    counts[gi] += 1
                    cur = prev
                used = (0, 0)
                for (_, g), c in zip(interior, counts):
                    used = (used[0] + c * g[0], used[1] + c * g[1])
                res = finish(counts, used)
                if res is not None:
                    return "feasible", res
            continue
        nodes += 1
        if nodes > budget:
            return "unknown", None
        for gi, (_, g) in enumerate(interior):
            nm = mass + masses[gi]
            if nm > mass_t:
                continue
            nl = lc + line_part(g, masses[gi])
            if mod:
                key = (nm, nl % (det * mod))
            else:
                key = (nm, nl)
            if key in parent:
                continue
            parent[key] = (s, gi)
            queue.append(key)
    return "infeasible", None


def _positive_kernel(active: list[tuple[int, int]]) -> list[int]:
    """A strictly positive integer vector mu with sum(mu_i * g_i) = 0.

    Exists exactly when the generators positively span the plane; built by
    expressing each -g_m as a non-negative combination of at most two other
    generators (2-D Caratheodory) and summing the relations.
    """
    k = len(active)
    total = [0] * k
    for m, gm in enumerate(active):
        v = (-gm[0], -gm[1])
        rel = None
        for a in range(k):
            if a == m:
                continue
            ga = active[a]
            if _cross(ga, v) == 0 and _dot(ga, v) > 0:
                # v is a positive rational multiple of ga
                rel = [0] * k
                rel[m] = abs(ga[0]) if ga[0] else abs(ga[1])
                rel[a] = abs(gm[0]) if gm[0] else abs(gm[1])
                g = gcd(rel[m], rel[a])
                rel[m] //= g
                rel[a] //= g
                break
        if rel is None:
            for a in range(k):
                if rel is not None:
                    break
                if a == m:
                    continue
                for b in range(a + 1, k):
                    if b == m:
                        continue
                    ga, gb = active[a], active[b]
                    det = _cross(ga, gb)
                    if det == 0:
                        continue
                    sgn = 1 if det > 0 else -1
                    ca = sgn * _cross(v, gb)
                    cb = sgn * _cross(ga, v)
                    if ca >= 0 and cb >= 0:
                        rel = [0] * k
                        rel[m] = abs(det)
                        rel[a] = ca
                        rel[b] = cb
                        break
        assert rel is not None, "not positively spanning"
        for i in range(k):
            total[i] += rel[i]
    assert all(c > 0 for c in total)
    assert sum(c * g[0] for c, g in zip(total, active)) == 0
    assert sum(c * g[1] for c, g in zip(total, active)) == 0
    return total


def _spanning_case(active, index, n, target):
    """Generators positively span the plane: the monoid equals the lattice
    they generate, because every -g_i is itself a non-negative combination."""
    sol = _solve_lattice_2d(active, target)
    if sol is None:
        return "infeasible", None
    mu = _positive_kernel(active)
    need = 0
    for c, m in zip(sol, mu):
        if c < 0:
            need = max(need, (-c + m - 1) // m)
    sol = [c + need * m for c, m in zip(sol, mu)]
    assert all(c >= 0 for c in sol)
    out = [0] * n
    for pos, c in zip(index, sol):
        out[pos] = c
    return "feasible", out

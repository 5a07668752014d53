"""Solution sets: finite lists plus parametric families with divisor-set
constrained parameters, a completeness status, and exact box enumeration
where a witness construction justifies it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from .eqparse import Polynomial
from .expr import ExactDivisionError, Expr
from .intcore import divisors_k, in_divisor_set


# ---------------------------------------------------------------------------
# Completeness status
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Status:
    kind: str  # complete | searched | reduced_only | unknown
    bound: Optional[int] = None

    _RANK = {"unknown": 0, "reduced_only": 1, "searched": 2, "complete": 3}

    def rank(self) -> int:
        return self._RANK[self.kind]

    def combine(self, other: "Status") -> "Status":
        """Weakest of the two statuses; searched bounds take the minimum."""
        if self.kind == "searched" and other.kind == "searched":
            return Status("searched", min(self.bound, other.bound))
        return self if self.rank() <= other.rank() else other

    def __str__(self):
        if self.kind == "searched":
            return f"SearchedToBound({self.bound})"
        return {"complete": "Complete", "reduced_only": "ReducedOnly",
                "unknown": "Unknown"}[self.kind]


COMPLETE = Status("complete")
REDUCED_ONLY = Status("reduced_only")
UNKNOWN = Status("unknown")


def searched(bound: int) -> Status:
    return Status("searched", bound)


# ---------------------------------------------------------------------------
# Parameter domains
# ---------------------------------------------------------------------------

class DomainError(ValueError):
    pass


class ParamDomain:
    def contains(self, value: int, env: dict[str, int]) -> bool:
        raise NotImplementedError

    def enumerate(self, env: dict[str, int], sweep: int) -> Iterable[int]:
        raise NotImplementedError

    def describe(self) -> str:
        raise NotImplementedError


class AllIntegers(ParamDomain):
    def contains(self, value, env):
        return True

    def enumerate(self, env, sweep):
        yield 0
        for v in range(1, sweep + 1):
            yield v
            yield -v

    def describe(self):
        return "Z"


class NonzeroIntegers(ParamDomain):
    def contains(self, value, env):
        return value != 0

    def enumerate(self, env, sweep):
        for v in range(1, sweep + 1):
            yield v
            yield -v

    def describe(self):
        return "Z\\{0}"


class FiniteSet(ParamDomain):
    def __init__(self, values: Iterable[int]):
        self.values = tuple(values)

    def contains(self, value, env):
        return value in self.values

    def enumerate(self, env, sweep):
        return iter(self.values)

    def describe(self):
        return "{" + ",".join(map(str, self.values)) + "}"


class DivisorSet(ParamDomain):
    """z with z**k dividing the value of `of` (an expression over earlier
    parameters).  D_k(0) is all nonzero integers."""

    def __init__(self, k: int, of: Expr):
        if k < 1:
            raise ValueError("k must be >= 1; use AllIntegers for D_0")
        self.k = k
        self.of = of

    def contains(self, value, env):
        return in_divisor_set(value, self.of.eval(env), self.k)

    def enumerate(self, env, sweep):
        m = self.of.eval(env)
        if m == 0:
            for v in range(1, sweep + 1):
                yield v
                yield -v
        else:
            yield from divisors_k(m, self.k)

    def describe(self):
        return f"D_{self.k}({self.of})"


# ---------------------------------------------------------------------------
# Families
# ---------------------------------------------------------------------------

class Family:
    """Base interface: a parametrized subset of Z^n."""

    variables: list[str]
    exact_box: bool
    note: str

    def enumerate_box(self, bound: int, sweep: Optional[int] = None
                      ) -> set[tuple[int, ...]]:
        raise NotImplementedError

    def describe(self) -> dict:
        raise NotImplementedError


@dataclass
class SolutionFamily(Family):
    """Expression-based family: one integer expression per variable, with
    ordered parameter domains (divisor domains may reference earlier params).

    `witness` maps a concrete solution tuple to a parameter assignment
    regenerating it; its presence justifies exact box enumeration
    (`exact_box`), because free parameters of box solutions are bounded by
    `param_bound(B)` while divisor parameters enumerate exactly.
    """

    variables: list[str]
    params: list[tuple[str, ParamDomain]]
    exprs: dict[str, Expr]
    witness: Optional[Callable[[tuple[int, ...]], Optional[dict[str, int]]]] = None
    param_bound: Optional[Callable[[int], int]] = None
    exact_box: bool = False
    note: str = ""
    box_enumerator: Optional[Callable[[int], set]] = None

    def evaluate(self, assignment: dict[str, int]) -> tuple[int, ...]:
        env: dict[str, int] = {}
        for name, domain in self.params:
            if name not in assignment:
                raise DomainError(f"missing parameter {name}")
            value = assignment[name]
            if not domain.contains(value, env):
                raise DomainError(
                    f"{name}={value} outside domain {domain.describe()}")
            env[name] = value
        return tuple(self.exprs[v].eval(env) for v in self.variables)

    def enumerate_box(self, bound, sweep=None):
        if self.box_enumerator is not None:
            return {t for t in self.box_enumerator(bound)
                    if all(abs(x) <= bound for x in t)}
        limit = self.param_bound(bound) if self.param_bound else bound
        if sweep is not None and not self.exact_box:
            limit = sweep
        out: set[tuple[int, ...]] = set()

        def rec(idx: int, env: dict[str, int]):
            if idx == len(self.params):
                try:
                    tup = tuple(self.exprs[v].eval(env) for v in self.variables)
                except ExactDivisionError:
                    return
                if all(abs(x) <= bound for x in tup):
                    out.add(tup)
                return
            name, domain = self.params[idx]
            for value in domain.enumerate(env, limit):
                env[name] = value
                rec(idx + 1, env)
            env.pop(name, None)

        rec(0, {})
        return out

    def describe(self):
        return {
            "params": [{"name": n, "domain": d.describe()} for n, d in self.params],
            "exprs": {v: str(self.exprs[v]) for v in self.variables},
            "kind": "parametric",
            "note": self.note,
        }


@dataclass
class RecurrenceFamily(Family):
    """Orbit of seed tuples under a unimodular integer matrix; the family
    parameter indexes recurrence steps (negative steps use the inverse)."""

    variables: list[str]
    seeds: list[tuple[int, ...]]
    matrix: tuple[tuple[int, ...], ...]
    exact_box: bool = True
    note: str = ""

    def _apply(self, mat, vec):
        return tuple(sum(row[j] * vec[j] for j in range(len(vec))) for row in mat)

    def inverse_matrix(self):
        (a, b), (c, d) = self.matrix
        det = a * d - b * c
        if det not in (1, -1):
            raise ValueError("matrix must be unimodular")
        return ((d * det, -b * det), (-c * det, a * det))

    def step(self, vec: tuple[int, ...], k: int = 1) -> tuple[int, ...]:
        mat = self.matrix if k >= 0 else self.inverse_matrix()
        for _ in range(abs(k)):
            vec = self._apply(mat, vec)
        return vec

    def enumerate_box(self, bound, sweep=None, miss_streak: int = 8):
        out: set[tuple[int, ...]] = set()
        for seed in self.seeds:
            for direction in (1, -1):
                vec = seed
                misses = 0
                while misses < miss_streak:
                    if all(abs(x) <= bound for x in vec):
                        out.add(vec)
                        misses = 0
                    else:
                        misses += 1
                    vec = self.step(vec, direction)
        return out

    def witness(self, solution: tuple[int, ...]) -> Optional[int]:
        """Number of steps from a seed to the solution, via descent."""
        for k in range(0, 64):
            for direction in (1, -1):
                if self.step(solution, -direction * k) in self.seeds:
                    return direction * k
            if k == 0:
                continue
        return None

    def describe(self):
        return {
            "kind": "recurrence",
            "seeds": [list(map(str, s)) for s in self.seeds],
            "matrix": [list(map(str, row)) for row in self.matrix],
            "note": self.note,
        }


@dataclass
class MappedFamily(Family):
    """Solutions of an inner set pushed through a lift map (used for
    back-substitution of reduced equations).  Box enumeration enumerates the
    inner set at `inner_bound(B)` and lifts, which is complete whenever the
    lift cannot shrink coordinates below the box."""

    variables: list[str]
    inner: "SolutionSet"
    lift: Callable[[tuple[int, ...]], list[tuple[int, ...]]]
    inner_bound: Callable[[int], int] = staticmethod(lambda b: b)
    exact_box: bool = True
    note: str = ""

    def enumerate_box(self, bound, sweep=None):
        inner_pts, _ = self.inner.enumerate_box(self.inner_bound(bound), sweep)
        out: set[tuple[int, ...]] = set()
        for pt in inner_pts:
            for lifted in self.lift(pt):
                if all(abs(x) <= bound for x in lifted):
                    out.add(lifted)
        return out

    def describe(self):
        return {
            "kind": "mapped",
            "inner": self.inner.describe(),
            "note": self.note,
        }


# ---------------------------------------------------------------------------
# Solution sets
# ---------------------------------------------------------------------------

class ConstructionError(ValueError):
    """A finite tuple failed the defining equation at construction time."""


@dataclass
class SolutionSet:
    variables: list[str]
    finite: set[tuple[int, ...]] = field(default_factory=set)
    families: list[Family] = field(default_factory=list)
    status: Status = COMPLETE
    provenance: list[str] = field(default_factory=list)
    equation: Optional[Polynomial] = None

    def __post_init__(self):
        if self.equation is not None:
            for tup in self.finite:
                self._check(tup)

    def _check(self, tup: tuple[int, ...]):
        point = dict(zip(self.variables, tup))
        if self.equation.evaluate(point) != 0:
            raise ConstructionError(f"{tup} does not satisfy the equation")

    def add_finite(self, tup: tuple[int, ...]):
        if self.equation is not None:
            self._check(tup)
        self.finite.add(tup)

    def union(self, other: "SolutionSet") -> "SolutionSet":
        if self.variables != other.variables:
            raise ValueError("variable order mismatch")
        return SolutionSet(
            self.variables,
            set(self.finite) | set(other.finite),
            self.families + other.families,
            self.status.combine(other.status),
            sorted(set(self.provenance) | set(other.provenance)),
            self.equation or other.equation,
        )

    def enumerate_box(self, bound: int, sweep: Optional[int] = None
                      ) -> tuple[list[tuple[int, ...]], bool]:
        """All produced tuples with every |coordinate| <= bound, sorted, plus
        a flag: True when the listing is certified complete for the box,
        False when any family had to fall back to a heuristic sweep."""
        pts = {t for t in self.finite if all(abs(x) <= bound for x in t)}
        exact = True
        for fam in self.families:
            if not fam.exact_box:
                exact = False
            pts |= fam.enumerate_box(bound, sweep)
        return sorted(pts), exact

    def is_empty_claim(self) -> bool:
        return not self.finite and not self.families

    def describe(self) -> dict:
        return {
            "finite": [list(map(str, t)) for t in sorted(self.finite)],
            "families": [f.describe() for f in self.families],
            "status": str(self.status),
            "citations": list(self.provenance),
        }


def empty_set(variables: list[str], status: Status = COMPLETE,
              equation: Optional[Polynomial] = None) -> SolutionSet:
    return SolutionSet(variables, set(), [], status, [], equation)


@dataclass
class VerificationReport:
    sound: bool
    complete_in_box: bool
    missing: list[tuple[int, ...]]
    spurious: list[tuple[int, ...]]
    heuristic: bool = False


def verify_against_oracle(solset: SolutionSet, equation: Polynomial,
                          oracle_solutions: list[tuple[int, ...]],
                          bound: int) -> VerificationReport:
    """Check a solution set against ground-truth box enumeration."""
    produced, exact = solset.enumerate_box(bound)
    truth = set(oracle_solutions)
    spurious = []
    for tup in produced:
        point = dict(zip(solset.variables, tup))
        if equation.evaluate(point) != 0:
            spurious.append(tup)
    missing = sorted(truth - set(produced))
    return VerificationReport(
        sound=not spurious,
        complete_in_box=not missing,
        missing=missing,
        spurious=sorted(spurious),
        heuristic=not exact,
    )

"""Tiny exact integer expression trees for parametric solution families.

Supports polynomials in named parameters plus exact division and gcd, which
is all the solution formats need.  Evaluation is exact; a non-exact division
signals a malformed family and raises.
"""

from __future__ import annotations

from math import gcd as _gcd


class ExactDivisionError(ArithmeticError):
    pass


class Expr:
    def eval(self, env: dict[str, int]) -> int:
        raise NotImplementedError

    def __str__(self) -> str:
        raise NotImplementedError

    def __repr__(self):
        return f"Expr({self})"


class Const(Expr):
    def __init__(self, value: int):
        self.value = int(value)

    def eval(self, env):
        return self.value

    def __str__(self):
        return str(self.value)


class Param(Expr):
    def __init__(self, name: str):
        self.name = name

    def eval(self, env):
        return env[self.name]

    def __str__(self):
        return self.name


class Add(Expr):
    def __init__(self, *items: Expr):
        self.items = items

    def eval(self, env):
        return sum(it.eval(env) for it in self.items)

    def __str__(self):
        parts = [str(it) for it in self.items]
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return f"({out})"


class Mul(Expr):
    def __init__(self, *items: Expr):
        self.items = items

    def eval(self, env):
        out = 1
        for it in self.items:
            out *= it.eval(env)
        return out

    def __str__(self):
        return "*".join(str(it) for it in self.items)


class Neg(Expr):
    def __init__(self, item: Expr):
        self.item = item

    def eval(self, env):
        return -self.item.eval(env)

    def __str__(self):
        return f"-{self.item}"


class Pow(Expr):
    def __init__(self, base: Expr, exp: int):
        if exp < 0:
            raise ValueError("negative exponent; use ExactDiv")
        self.base = base
        self.exp = exp

    def eval(self, env):
        return self.base.eval(env) ** self.exp

    def __str__(self):
        return f"{self.base}^{self.exp}"


class ExactDiv(Expr):
    def __init__(self, num: Expr, den: Expr):
        self.num = num
        self.den = den

    def eval(self, env):
        n = self.num.eval(env)
        d = self.den.eval(env)
        if d == 0 or n % d != 0:
            raise ExactDivisionError(f"{n} / {d} is not an exact integer")
        return n // d

    def __str__(self):
        return f"({self.num})/({self.den})"


class Gcd(Expr):
    def __init__(self, a: Expr, b: Expr):
        self.a = a
        self.b = b

    def eval(self, env):
        return _gcd(self.a.eval(env), self.b.eval(env))

    def __str__(self):
        return f"gcd({self.a},{self.b})"


def const(v: int) -> Const:
    return Const(v)


def param(name: str) -> Param:
    return Param(name)


def monomial_expr(coeff: int, powers: list[tuple[str, int]]) -> Expr:
    """coeff * prod(param**exp) with trivial simplifications."""
    items: list[Expr] = []
    if coeff != 1 or not powers:
        items.append(Const(coeff))
    for name, e in powers:
        if e == 1:
            items.append(Param(name))
        elif e > 0:
            items.append(Pow(Param(name), e))
    if len(items) == 1:
        return items[0]
    return Mul(*items)

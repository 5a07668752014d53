"""trisolve: exact solving of three-monomial polynomial Diophantine
equations, with parametric solution families and reproducible experiments."""

__version__ = "0.1.0"

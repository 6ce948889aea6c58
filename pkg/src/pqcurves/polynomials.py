"""Exact sparse multivariate polynomial arithmetic over the rationals.

A polynomial is a dict mapping dense exponent tuples (one slot per variable
of its :class:`VarTable`) to nonzero rational coefficients.  Coefficients
are ``int`` or ``fractions.Fraction``; nothing in this module ever rounds.

The table fixes the variable order for the lifetime of a computation.  The
canonical table for a type (p,q) lists the n coefficient variables
``A[nu,mu]`` (mu-major, nu-minor) followed by ``X`` and ``Y``; the generic
curve equation

    F = Y^p - X^q + sum_{nu*p + mu*q < p*q} A[nu,mu] * X^nu * Y^mu

is weighted-homogeneous of degree p*q once X, Y, and the coefficient
variables carry the weights p, q, and p*q - nu*p - mu*q.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import ArityMismatch
from .semigroups import TypePQ

Exponent = tuple


class VarTable:
    """An ordered, immutable list of variable names with index lookup."""

    __slots__ = ("names", "_index")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("variable names must be unique")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    def __setattr__(self, *_):
        raise AttributeError("VarTable is immutable")

    @property
    def arity(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ArityMismatch(f"variable {name!r} not in table {self.names}") from None

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def extended(self, extra: Iterable[str]) -> "VarTable":
        return VarTable(self.names + tuple(extra))

    def __eq__(self, other):
        return isinstance(other, VarTable) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"VarTable{self.names}"


def avar(nu: int, mu: int) -> str:
    return f"A[{nu},{mu}]"


def coefficient_exponents(t: TypePQ) -> list[tuple[int, int]]:
    """The n pairs (nu, mu) with nu*p + mu*q < p*q, mu-major order."""
    out = []
    for mu in range(t.p):
        nu = 0
        while nu * t.p + mu * t.q < t.p * t.q:
            out.append((nu, mu))
            nu += 1
    assert len(out) == t.n
    return out


def coefficient_table(t: TypePQ) -> VarTable:
    """Table holding only the n coefficient variables."""
    return VarTable(avar(nu, mu) for nu, mu in coefficient_exponents(t))


def generic_table(t: TypePQ) -> VarTable:
    """Coefficient variables followed by the point variables X, Y."""
    return coefficient_table(t).extended(("X", "Y"))


class SparsePoly:
    """Immutable sparse polynomial over a fixed variable table."""

    __slots__ = ("table", "terms")

    def __init__(self, table: VarTable, terms: Mapping[Exponent, object]):
        clean = {}
        for exp, coeff in terms.items():
            if len(exp) != table.arity:
                raise ArityMismatch(f"exponent {exp} has arity {len(exp)}, table has {table.arity}")
            if coeff:
                clean[tuple(exp)] = coeff
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *_):
        raise AttributeError("SparsePoly is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(table: VarTable) -> "SparsePoly":
        return SparsePoly(table, {})

    @staticmethod
    def const(table: VarTable, value) -> "SparsePoly":
        return SparsePoly(table, {(0,) * table.arity: value})

    @staticmethod
    def var(table: VarTable, name: str, power: int = 1) -> "SparsePoly":
        exp = [0] * table.arity
        exp[table.index(name)] = power
        return SparsePoly(table, {tuple(exp): 1})

    @staticmethod
    def monomial(table: VarTable, coeff, **powers) -> "SparsePoly":
        exp = [0] * table.arity
        for name, e in powers.items():
            exp[table.index(name)] = e
        return SparsePoly(table, {tuple(exp): coeff})

    # -- ring operations ----------------------------------------------

    def _check(self, other: "SparsePoly"):
        if self.table is not other.table and self.table != other.table:
            raise ArityMismatch("polynomials live in different variable tables")

    def __add__(self, other):
        if not isinstance(other, SparsePoly):
            other = SparsePoly.const(self.table, other)
        self._check(other)
        out = dict(self.terms)
        for exp, coeff in other.terms.items():
            s = out.get(exp, 0) + coeff
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return SparsePoly(self.table, out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly(self.table, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, SparsePoly):
            other = SparsePoly.const(self.table, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, SparsePoly):
            if not other:
                return SparsePoly.zero(self.table)
            return SparsePoly(self.table, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        if len(self.terms) > len(other.terms):
            big, small = self.terms, other.terms
        else:
            big, small = other.terms, self.terms
        out = {}
        for e1, c1 in small.items():
            for e2, c2 in big.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(exp, 0) + c1 * c2
                if s:
                    out[exp] = s
                else:
                    del out[exp]
        return SparsePoly(self.table, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = SparsePoly.const(self.table, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, SparsePoly):
            return NotImplemented
        # int and Fraction coefficients compare (and hash) equal, so plain
        # dict equality is the coefficient-map equality we want.
        return self.table == other.table and self.terms == other.terms

    def __hash__(self):
        return hash((self.table, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # -- calculus and evaluation ---------------------------------------

    def diff(self, name: str) -> "SparsePoly":
        i = self.table.index(name)
        out = {}
        for exp, coeff in self.terms.items():
            e = exp[i]
            if e:
                new = exp[:i] + (e - 1,) + exp[i + 1:]
                s = out.get(new, 0) + coeff * e
                if s:
                    out[new] = s
                else:
                    del out[new]
        return SparsePoly(self.table, out)

    def substitute(self, assignment: Mapping[str, object]) -> "SparsePoly":
        """Partial substitution with exact rational values."""
        idx = {self.table.index(name): Fraction(value) for name, value in assignment.items()}
        out = {}
        for exp, coeff in self.terms.items():
            factor = coeff
            new = list(exp)
            for i, value in idx.items():
                if exp[i]:
                    factor *= value ** exp[i]
                new[i] = 0
            if factor:
                key = tuple(new)
                s = out.get(key, 0) + factor
                if s:
                    out[key] = s
                else:
                    del out[key]
        return SparsePoly(self.table, out)

    def eval_full(self, assignment: Mapping[str, object]):
        """Total evaluation; the scalar type follows the input values."""
        values = [None] * self.table.arity
        for name, value in assignment.items():
            values[self.table.index(name)] = value
        total = 0
        for exp, coeff in self.terms.items():
            term = coeff
            for i, e in enumerate(exp):
                if e:
                    if values[i] is None:
                        raise ArityMismatch(f"no value for {self.table.names[i]}")
                    term = term * values[i] ** e
            total = total + term
        return total

    def variables_used(self) -> set:
        used = set()
        for exp in self.terms:
            for i, e in enumerate(exp):
                if e:
                    used.add(self.table.names[i])
        return used

    def map_to(self, table: VarTable, rename: Mapping[str, str] | None = None) -> "SparsePoly":
        """Re-express over another table, optionally renaming variables."""
        rename = rename or {}
        idx = [table.index(rename.get(name, name)) if (rename.get(name, name) in table) else None
               for name in self.table.names]
        out = {}
        for exp, coeff in self.terms.items():
            new = [0] * table.arity
            for i, e in enumerate(exp):
                if e:
                    if idx[i] is None:
                        raise ArityMismatch(f"variable {self.table.names[i]} missing from target table")
                    new[idx[i]] += e
            key = tuple(new)
            s = out.get(key, 0) + coeff
            if s:
                out[key] = s
            else:
                del out[key]
        return SparsePoly(table, out)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def __repr__(self):
        return f"SparsePoly({to_text(self)})"


def evaluate(f: SparsePoly, assignment: Mapping[str, object]):
    """Substitute values for some or all variables.

    With every used variable assigned, returns a scalar (exact when the
    inputs are rational).  Otherwise all supplied values must be rational
    and the result is again a polynomial over the same table.
    """
    for name in assignment:
        f.table.index(name)
    if f.variables_used() <= set(assignment):
        return f.eval_full({n: v for n, v in assignment.items()})
    return f.substitute(assignment)


# -- the generic curve equation and its calculus -----------------------


def generic_weierstrass(t: TypePQ, table: VarTable | None = None) -> SparsePoly:
    """Y^p - X^q + sum A[nu,mu] X^nu Y^mu over the canonical table."""
    table = table or generic_table(t)
    ix, iy = table.index("X"), table.index("Y")
    terms = {}

    def put(coeff, xpow, ypow, aname=None):
        exp = [0] * table.arity
        exp[ix] = xpow
        exp[iy] = ypow
        if aname is not None:
            exp[table.index(aname)] = 1
        terms[tuple(exp)] = coeff

    put(1, 0, t.p)
    put(-1, t.q, 0)
    for nu, mu in coefficient_exponents(t):
        put(1, nu, mu, avar(nu, mu))
    return SparsePoly(table, terms)


def partials(f: SparsePoly) -> tuple[SparsePoly, SparsePoly]:
    return f.diff("X"), f.diff("Y")


def hessian(f: SparsePoly) -> SparsePoly:
    fx, fy = partials(f)
    fxx = fx.diff("X")
    fxy = fx.diff("Y")
    fyy = fy.diff("Y")
    return fxx * fyy - fxy * fxy


# -- weighted grading ---------------------------------------------------


@dataclass(frozen=True)
class WeightedGrading:
    table: VarTable
    weights: tuple[int, ...]

    def degree_of(self, exp: Exponent) -> int:
        return sum(w * e for w, e in zip(self.weights, exp) if e)


@dataclass(frozen=True)
class WeightedDegree:
    homogeneous: bool
    degree: int  # common degree when homogeneous, max degree otherwise


_AVAR_RE = re.compile(r"^A\[(\d+),(\d+)\]$")


def weighted_grading(t: TypePQ, table: VarTable) -> WeightedGrading:
    """wt(X*)=p, wt(Y*)=q, wt(A[nu,mu]) = p*q - nu*p - mu*q, wt(Z)=0."""
    weights = []
    for name in table.names:
        m = _AVAR_RE.match(name)
        if m:
            nu, mu = int(m.group(1)), int(m.group(2))
            weights.append(t.p * t.q - nu * t.p - mu * t.q)
        elif name.startswith("X"):
            weights.append(t.p)
        elif name.startswith("Y"):
            weights.append(t.q)
        elif name == "Z":
            weights.append(0)
        else:
            raise ValueError(f"no weight rule for variable {name!r}")
    return WeightedGrading(table, tuple(weights))


def weighted_degree(f: SparsePoly, grading: WeightedGrading) -> WeightedDegree:
    """Common weighted degree if homogeneous, else marker plus max degree.

    The zero polynomial reports homogeneous of degree 0.
    """
    degrees = {grading.degree_of(e) for e in f.terms}
    if not degrees:
        return WeightedDegree(True, 0)
    if len(degrees) == 1:
        return WeightedDegree(True, degrees.pop())
    return WeightedDegree(False, max(degrees))


# -- text form ----------------------------------------------------------


def _grevlex_key(exp: Exponent):
    return (sum(exp), tuple(-e for e in reversed(exp)))


def to_text(f: SparsePoly) -> str:
    """Deterministic human-readable form, grevlex-descending terms."""
    if not f.terms:
        return "0"
    parts = []
    for exp in sorted(f.terms, key=_grevlex_key, reverse=True):
        coeff = Fraction(f.terms[exp])
        names = []
        for name, e in zip(f.table.names, exp):
            if e == 1:
                names.append(name)
            elif e > 1:
                names.append(f"{name}^{e}")
        mag = abs(coeff)
        if not names:
            body = str(mag)
        elif mag == 1:
            body = "*".join(names)
        else:
            body = str(mag) + "*" + "*".join(names)
        if not parts:
            parts.append(body if coeff > 0 else "-" + body)
        else:
            parts.append(("+ " if coeff > 0 else "- ") + body)
    return " ".join(parts)

"""Buchberger-based Groebner engine with explicit resource budgets.

Normal forms, ideal membership, radical membership (via an adjoined
inverse variable), and vector-space dimension of zero-dimensional
quotients.  Coefficients are normalized to content-free integers with a
positive leading coefficient, which keeps reduced bases unique and the
output deterministic for a fixed monomial order and input order.

Everything here can stop with :class:`ResourceBudgetExceeded`; the caps
(processed S-pairs, total degree, wall clock) come from the run
configuration and are deliberately conservative: failing loudly beats
hanging silently on an instance that is too big for desk scale.
"""

from __future__ import annotations

import heapq
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .config import GBBudget
from .errors import InternalCheckFailed, ResourceBudgetExceeded
from .polynomials import SparsePoly, VarTable


# -- monomial orders ----------------------------------------------------


class MonomialOrder:
    """A total order on exponent tuples; bigger key means bigger monomial."""

    __slots__ = ("name", "key")

    def __init__(self, name, keyfunc):
        self.name = name
        self.key = keyfunc

    def __repr__(self):
        return f"MonomialOrder({self.name})"


def _grevlex_key(exp):
    return (sum(exp), tuple(-e for e in reversed(exp)))


def grevlex() -> MonomialOrder:
    return MonomialOrder("grevlex", _grevlex_key)


def lex(perm: Sequence[int] | None = None) -> MonomialOrder:
    """Lexicographic; ``perm`` lists variable indices from most significant."""
    if perm is None:
        return MonomialOrder("lex", lambda exp: tuple(exp))
    perm = tuple(perm)
    return MonomialOrder(f"lex{perm}", lambda exp: tuple(exp[i] for i in perm))


def block(split: int) -> MonomialOrder:
    """Two grevlex blocks; variables past ``split`` are least significant."""
    def key(exp):
        return (_grevlex_key(exp[:split]), _grevlex_key(exp[split:]))
    return MonomialOrder(f"block@{split}", key)


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


# -- coefficient normalization -------------------------------------------


def integer_normalize(f: SparsePoly, order: MonomialOrder) -> SparsePoly:
    """Scale to content-free integer coefficients, positive leading one."""
    if not f.terms:
        return f
    denom = 1
    for c in f.terms.values():
        if isinstance(c, Fraction):
            denom = denom * c.denominator // math.gcd(denom, c.denominator)
    ints = {e: int(c * denom) for e, c in f.terms.items()}
    content = 0
    for v in ints.values():
        content = math.gcd(content, v)
    lead = max(ints, key=order.key)
    sign = 1 if ints[lead] > 0 else -1
    scale = sign * content
    return SparsePoly(f.table, {e: v // scale for e, v in ints.items()})


# -- reduction ------------------------------------------------------------


class _Budget:
    """Mutable counters checked inside the hot loops."""

    def __init__(self, caps: GBBudget):
        self.caps = caps
        self.pairs = 0
        self.start = time.monotonic()

    def charge_pair(self):
        self.pairs += 1
        if self.pairs > self.caps.max_pairs:
            raise ResourceBudgetExceeded("max_pairs", pairs=self.pairs)
        if self.pairs % 64 == 0:
            self.check_clock()

    def check_clock(self):
        elapsed = time.monotonic() - self.start
        if elapsed > self.caps.timeout_secs:
            raise ResourceBudgetExceeded("timeout", pairs=self.pairs,
                                         elapsed=round(elapsed, 1))

    def check_degree(self, deg):
        if deg > self.caps.max_degree:
            raise ResourceBudgetExceeded("max_degree", degree=deg, pairs=self.pairs)


def normal_form(f: SparsePoly, basis: Iterable[SparsePoly], order: MonomialOrder,
                budget: GBBudget | None = None) -> SparsePoly:
    """Fully reduce f modulo the basis (top reduction plus tail reduction)."""
    prepared = []
    for g in basis:
        if g.terms:
            lt = max(g.terms, key=order.key)
            prepared.append((lt, g.terms[lt], g.terms))
    return SparsePoly(f.table, _reduce_terms(dict(f.terms), prepared, order,
                                             _Budget(budget) if budget else None))


def _reduce_terms(work: dict, prepared: list, order: MonomialOrder,
                  budget: _Budget | None) -> dict:
    # prepared: [(lt_exp, lt_coeff, terms_dict)], tried in listed order
    remainder = {}
    key = order.key
    steps = 0
    while work:
        exp = max(work, key=key)
        coeff = work.pop(exp)
        for lt, lc, gterms in prepared:
            if _divides(lt, exp):
                if type(coeff) is int and type(lc) is int:
                    ratio = Fraction(coeff, lc)
                else:
                    ratio = Fraction(coeff) / Fraction(lc)
                shift = tuple(a - b for a, b in zip(exp, lt))
                for m, c in gterms.items():
                    if m == lt:
                        continue
                    tgt = tuple(a + b for a, b in zip(m, shift))
                    s = work.get(tgt, 0) - ratio * c
                    if s:
                        work[tgt] = s
                    else:
                        work.pop(tgt, None)
                steps += 1
                if budget is not None and steps % 256 == 0:
                    budget.check_clock()
                break
        else:
            remainder[exp] = coeff
    return remainder


def _s_poly_terms(f: SparsePoly, g: SparsePoly, order: MonomialOrder) -> dict:
    lf = max(f.terms, key=order.key)
    lg = max(g.terms, key=order.key)
    lcm = tuple(max(a, b) for a, b in zip(lf, lg))
    sf = tuple(a - b for a, b in zip(lcm, lf))
    sg = tuple(a - b for a, b in zip(lcm, lg))
    cf = Fraction(1, 1) / Fraction(f.terms[lf])
    cg = Fraction(1, 1) / Fraction(g.terms[lg])
    out = {}
    for m, c in f.terms.items():
        tgt = tuple(a + b for a, b in zip(m, sf))
        out[tgt] = out.get(tgt, 0) + cf * c
    for m, c in g.terms.items():
        tgt = tuple(a + b for a, b in zip(m, sg))
        s = out.get(tgt, 0) - cg * c
        if s:
            out[tgt] = s
        else:
            del out[tgt]
    return out


def s_polynomial(f: SparsePoly, g: SparsePoly, order: MonomialOrder) -> SparsePoly:
    return SparsePoly(f.table, _s_poly_terms(f, g, order))


# -- Buchberger ------------------------------------------------------------


def buchberger(generators: Sequence[SparsePoly], order: MonomialOrder,
               budget: GBBudget | None = None) -> list[SparsePoly]:
    """Reduced Groebner basis via Buchberger with the sugar strategy."""
    caps = budget or GBBudget()
    run = _Budget(caps)

    G: list[SparsePoly] = []
    lts: list[tuple] = []
    sugars: list[int] = []

    def add_poly(h: SparsePoly, sugar: int):
        h = integer_normalize(h, order)
        run.check_degree(h.total_degree())
        G.append(h)
        lts.append(max(h.terms, key=order.key))
        sugars.append(sugar)

    for g in generators:
        if g.terms:
            add_poly(g, g.total_degree())
    if not G:
        return []

    heap: list = []
    pending: set[tuple[int, int]] = set()

    def push_pairs(j: int):
        for i in range(j):
            lcm = tuple(max(a, b) for a, b in zip(lts[i], lts[j]))
            if lcm == tuple(a + b for a, b in zip(lts[i], lts[j])):
                continue  # coprime leading terms: S-poly reduces to zero
            deg_i = sum(lcm) - sum(lts[i])
            deg_j = sum(lcm) - sum(lts[j])
            sugar = max(sugars[i] + deg_i, sugars[j] + deg_j)
            heapq.heappush(heap, (sugar, sum(lcm), i, j, lcm))
            pending.add((i, j))

    for j in range(len(G)):
        push_pairs(j)

    prepared = None  # rebuilt lazily after the basis grows

    def rebuild_prepared():
        nonlocal prepared
        # try small leading terms first: more reductive, deterministic
        idx = sorted(range(len(G)), key=lambda i: order.key(lts[i]))
        prepared = [(lts[i], G[i].terms[lts[i]], G[i].terms) for i in idx]

    rebuild_prepared()

    while heap:
        sugar, lcm_deg, i, j, lcm = heapq.heappop(heap)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        # chain criterion: some k with lt_k | lcm and both mixed pairs done
        skip = False
        for k in range(len(G)):
            if k == i or k == j:
                continue
            if _divides(lts[k], lcm):
                a = (min(i, k), max(i, k))
                b = (min(j, k), max(j, k))
                if a not in pending and b not in pending:
                    skip = True
                    break
        if skip:
            continue
        run.charge_pair()
        s_terms = _s_poly_terms(G[i], G[j], order)
        rem = _reduce_terms(s_terms, prepared, order, run)
        if rem:
            h = SparsePoly(G[0].table, rem)
            add_poly(h, sugar)
            push_pairs(len(G) - 1)
            rebuild_prepared()
            if len(G[-1].terms) == 1 and not any(next(iter(G[-1].terms))):
                break  # basis contains a constant: the ideal is the unit ideal

    return _reduce_basis(G, order)


def _reduce_basis(G: list[SparsePoly], order: MonomialOrder) -> list[SparsePoly]:
    # minimal: drop polynomials whose leading term another one divides
    items = [(max(g.terms, key=order.key), g) for g in G if g.terms]
    items.sort(key=lambda it: order.key(it[0]))
    minimal: list[tuple] = []
    for lt, g in items:
        if not any(_divides(m, lt) for m, _ in minimal):
            minimal.append((lt, g))
    # tail-reduce each against the others
    reduced = []
    for i, (lt, g) in enumerate(minimal):
        others = [h for j, (_, h) in enumerate(minimal) if j != i]
        h = normal_form(g, others, order)
        if h.terms:
            reduced.append(integer_normalize(h, order))
    reduced.sort(key=lambda g: order.key(max(g.terms, key=order.key)))
    return reduced


# -- ideals ----------------------------------------------------------------


class Ideal:
    """Generators over a shared table, with write-once cached bases."""

    def __init__(self, table: VarTable, generators: Iterable[SparsePoly]):
        gens = tuple(g for g in generators)
        for g in gens:
            if g.table != table:
                raise InternalCheckFailed("generator table mismatch")
        self.table = table
        self.generators = tuple(g for g in gens if g.terms)
        self._bases: dict[str, list[SparsePoly]] = {}

    def groebner_basis(self, order: MonomialOrder | None = None,
                       budget: GBBudget | None = None) -> list[SparsePoly]:
        order = order or grevlex()
        if order.name not in self._bases:
            self._bases[order.name] = buchberger(self.generators, order, budget)
        return self._bases[order.name]

    def __repr__(self):
        return f"Ideal({len(self.generators)} generators over {self.table.arity} variables)"


def ideal_member(f: SparsePoly, I: Ideal, order: MonomialOrder | None = None,
                 budget: GBBudget | None = None) -> bool:
    order = order or grevlex()
    basis = I.groebner_basis(order, budget)
    if not basis:
        return f.is_zero()
    return normal_form(f, basis, order, budget).is_zero()


def contains_one(basis: Sequence[SparsePoly]) -> bool:
    return any(len(g.terms) == 1 and not any(next(iter(g.terms))) for g in basis)


def radical_member(f: SparsePoly, I: Ideal, budget: GBBudget | None = None) -> bool:
    """Membership in the radical via 1 - Z*f adjoined to the generators."""
    if f.is_zero():
        return True
    zname = "Z"
    while zname in I.table:
        zname += "_"
    table = I.table.extended((zname,))
    gens = [g.map_to(table) for g in I.generators]
    zf = SparsePoly.var(table, zname) * f.map_to(table)
    gens.append(SparsePoly.const(table, 1) - zf)
    basis = buchberger(gens, block(I.table.arity), budget)
    return contains_one(basis)


# -- zero-dimensional quotients --------------------------------------------


@dataclass(frozen=True)
class QuotientInfo:
    finite_dimensional: bool
    dimension: int | None
    standard_monomials: tuple | None = None


_BOX_CAP = 1_000_000


def quotient_dimension(I: Ideal, budget: GBBudget | None = None) -> QuotientInfo:
    """Vector-space dimension of table-ring / I, via standard monomials."""
    order = grevlex()
    basis = I.groebner_basis(order, budget)
    if not basis:
        return QuotientInfo(False, None)  # the zero ideal: full polynomial ring
    if contains_one(basis):
        return QuotientInfo(True, 0, ())
    lts = [max(g.terms, key=order.key) for g in basis]
    arity = I.table.arity
    bounds = []
    for i in range(arity):
        pure = [lt[i] for lt in lts if all(e == 0 for j, e in enumerate(lt) if j != i)]
        if not pure:
            return QuotientInfo(False, None)
        bounds.append(min(pure))
    total = 1
    for b in bounds:
        total *= max(b, 1)
    if total > _BOX_CAP:
        raise ResourceBudgetExceeded("standard_monomial_box", box=total)

    standard = []
    exp = [0] * arity

    def walk(pos):
        if pos == arity:
            e = tuple(exp)
            if not any(_divides(lt, e) for lt in lts):
                standard.append(e)
            return
        for v in range(bounds[pos]):
            exp[pos] = v
            walk(pos + 1)
        exp[pos] = 0

    walk(0)
    standard.sort(key=order.key)
    return QuotientInfo(True, len(standard), tuple(standard))


# -- exact division (used by fraction-free elimination) ---------------------


def exact_divide(f: SparsePoly, g: SparsePoly, order: MonomialOrder | None = None) -> SparsePoly:
    """Quotient f/g when the division is exact; raises otherwise."""
    if g.is_zero():
        raise ZeroDivisionError("exact_divide by zero polynomial")
    order = order or grevlex()
    key = order.key
    lg = max(g.terms, key=key)
    cg = g.terms[lg]
    work = dict(f.terms)
    quotient = {}
    while work:
        exp = max(work, key=key)
        coeff = work[exp]
        if not _divides(lg, exp):
            raise InternalCheckFailed("division is not exact")
        shift = tuple(a - b for a, b in zip(exp, lg))
        if type(coeff) is int and type(cg) is int:
            ratio = Fraction(coeff, cg)
        else:
            ratio = Fraction(coeff) / Fraction(cg)
        if ratio.denominator == 1:
            ratio = int(ratio)
        quotient[shift] = ratio
        for m, c in g.terms.items():
            tgt = tuple(a + b for a, b in zip(m, shift))
            s = work.get(tgt, 0) - ratio * c
            if s:
                work[tgt] = s
            else:
                work.pop(tgt, None)
    return SparsePoly(f.table, quotient)

"""Numerical semigroups, gap coordinates, and gap-closing operations.

A numerical semigroup is a cofinite additive subsemigroup of the naturals
containing 0.  We represent one by its (finite, sorted) tuple of gaps;
membership, genus, conductor and the minimal generating set all derive from
that.  For a coprime pair p < q the semigroup generated by p and q has
genus d = (p-1)(q-1)/2 and conductor c = (p-1)(q-1), and every gap gamma
has unique natural coordinates (a, b) with gamma = c - 1 - (a*p + b*q).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import cached_property

from .errors import InternalCheckFailed, NotASemigroup, PreconditionFailed


@dataclass(frozen=True)
class TypePQ:
    """A coprime exponent pair 2 <= p < q."""

    p: int
    q: int

    def __post_init__(self):
        if not (isinstance(self.p, int) and isinstance(self.q, int)):
            raise ValueError("p and q must be integers")
        if self.p < 2 or self.q <= self.p:
            raise ValueError(f"need 2 <= p < q, got p={self.p}, q={self.q}")
        if math.gcd(self.p, self.q) != 1:
            raise ValueError(f"p={self.p} and q={self.q} are not coprime")

    @property
    def d(self) -> int:
        """Number of gaps of the semigroup generated by p and q."""
        return (self.p - 1) * (self.q - 1) // 2

    @property
    def c(self) -> int:
        """Conductor of the semigroup generated by p and q."""
        return (self.p - 1) * (self.q - 1)

    @property
    def n(self) -> int:
        """Number of coefficients of a normed curve equation of this type."""
        return (self.p + 1) * (self.q + 1) // 2 - 1

    def __str__(self):
        return f"({self.p},{self.q})"


@dataclass(frozen=True)
class GapDescriptor:
    """A gap gamma = c - 1 - (a*p + b*q) with its coordinates and rank.

    ``index`` is the 1-based position of the gap in ascending order.
    """

    gamma: int
    a: int
    b: int
    index: int


@dataclass(frozen=True)
class NumericalSemigroup:
    """A numerical semigroup, identified by its sorted tuple of gaps."""

    gaps: tuple[int, ...]

    @staticmethod
    def from_gaps(gaps) -> "NumericalSemigroup":
        """Build from a gap set, validating additive closure of the complement.

        Raises NotASemigroup with the first violating pair (a, b) such that
        a and b are members but a + b is not.
        """
        gap_list = sorted(set(int(g) for g in gaps))
        if any(g < 1 for g in gap_list):
            raise ValueError("gaps must be positive integers")
        sg = NumericalSemigroup(tuple(gap_list))
        conductor = sg.conductor
        members = [x for x in range(1, conductor) if x not in sg._gapset]
        for i, a in enumerate(members):
            for b in members[i:]:
                if a + b >= conductor:
                    break
                if a + b in sg._gapset:
                    raise NotASemigroup(a, b)
        return sg

    @cached_property
    def _gapset(self) -> frozenset:
        return frozenset(self.gaps)

    @property
    def genus(self) -> int:
        return len(self.gaps)

    @cached_property
    def conductor(self) -> int:
        return self.gaps[-1] + 1 if self.gaps else 0

    @cached_property
    def multiplicity(self) -> int:
        """Smallest nonzero member."""
        x = 1
        while x in self._gapset:
            x += 1
        return x

    def contains(self, x: int) -> bool:
        if x < 0:
            return False
        return x >= self.conductor or x not in self._gapset

    __contains__ = contains

    @cached_property
    def generators(self) -> tuple[int, ...]:
        """The unique minimal generating set.

        A nonzero member is a minimal generator exactly when it is not the
        sum of two nonzero members.  Any member >= conductor + multiplicity
        decomposes, so the scan below is complete.
        """
        top = self.conductor + self.multiplicity
        gens = []
        for x in range(1, top + 1):
            if not self.contains(x):
                continue
            decomposable = any(
                self.contains(y) and self.contains(x - y) for y in range(1, x)
            )
            if not decomposable:
                gens.append(x)
        return tuple(gens)

    def members_below(self, bound: int):
        """Iterate members m with 0 <= m < bound in ascending order."""
        return (x for x in range(bound) if self.contains(x))

    def __str__(self):
        gaps = ",".join(map(str, self.gaps)) if self.gaps else ""
        return f"semigroup(gaps={{{gaps}}})"


def pair_semigroup(t: TypePQ) -> NumericalSemigroup:
    """The semigroup generated by p and q, via reachability sieve."""
    p, q, c = t.p, t.q, t.c
    top = c + max(p, q)
    reach = [False] * (top + 1)
    reach[0] = True
    for i in range(1, top + 1):
        reach[i] = (i >= p and reach[i - p]) or (i >= q and reach[i - q])
    gaps = tuple(i for i in range(1, c) if not reach[i])
    if len(gaps) != t.d:
        raise InternalCheckFailed(f"gap count {len(gaps)} != d = {t.d} for {t}")
    return NumericalSemigroup(gaps)


def generated_by(gens) -> NumericalSemigroup:
    """The semigroup generated by an arbitrary gcd-1 set of positive integers."""
    gens = sorted(set(int(g) for g in gens))
    if not gens or gens[0] < 1:
        raise ValueError("generators must be positive integers")
    if math.gcd(*gens) != 1:
        raise ValueError(f"gcd of {gens} is not 1; the complement would be infinite")
    # Schur: the Frobenius number is < min(gens) * max(gens).
    top = gens[0] * gens[-1] + 1
    reach = [False] * (top + 1)
    reach[0] = True
    for i in range(1, top + 1):
        reach[i] = any(i >= g and reach[i - g] for g in gens)
    return NumericalSemigroup(tuple(i for i in range(1, top + 1) if not reach[i]))


def gap_descriptors(t: TypePQ) -> list[GapDescriptor]:
    """All d gaps of the pair semigroup, ascending, with (a, b) coordinates."""
    H = pair_semigroup(t)
    c = t.c
    out = []
    for index, gamma in enumerate(H.gaps, start=1):
        target = c - 1 - gamma
        found = None
        for b in range(target // t.q + 1):
            rest = target - b * t.q
            if rest % t.p == 0:
                if found is not None:
                    raise InternalCheckFailed(f"(a,b) for gap {gamma} of {t} is not unique")
                found = (rest // t.p, b)
        if found is None:
            raise InternalCheckFailed(f"no (a,b) coordinates for gap {gamma} of {t}")
        out.append(GapDescriptor(gamma=gamma, a=found[0], b=found[1], index=index))
    return out


def close_gaps(H0: NumericalSemigroup, gammas) -> NumericalSemigroup:
    """Adjoin the given gaps of H0, verifying the result stays a semigroup."""
    gammas = set(int(g) for g in gammas)
    stray = gammas - set(H0.gaps)
    if stray:
        raise PreconditionFailed(f"{sorted(stray)} are not gaps of {H0}")
    result = NumericalSemigroup.from_gaps(set(H0.gaps) - gammas)
    if result.genus != H0.genus - len(gammas):
        raise InternalCheckFailed("genus did not drop by the number of closed gaps")
    return result


def greatest_gaps_closure(t: TypePQ, l: int) -> NumericalSemigroup:
    """The pair semigroup with its l greatest gaps closed."""
    if not 0 <= l <= t.d:
        raise PreconditionFailed(f"need 0 <= l <= d = {t.d}, got l={l}")
    H0 = pair_semigroup(t)
    to_close = H0.gaps[len(H0.gaps) - l:] if l else ()
    try:
        return close_gaps(H0, to_close)
    except NotASemigroup as exc:  # closing an upward interval of gaps cannot fail
        raise InternalCheckFailed(f"greatest-gaps closure broke closure: {exc}") from exc


def minimal_generators(H: NumericalSemigroup) -> tuple[int, ...]:
    return H.generators


_PAIR_RE = re.compile(r"^<\s*(\d+)\s*,\s*(\d+)\s*>$")
_CLOSE_RE = re.compile(r"^<\s*(\d+)\s*,\s*(\d+)\s*>\s*\+\s*\{([0-9,\s]*)\}$")
_GEN_RE = re.compile(r"^gen\s*\{([0-9,\s]*)\}$")


def parse_semigroup(text: str) -> NumericalSemigroup:
    """Parse the literal syntax used by the CLI and by files.

    ``"<p,q>"`` is the pair semigroup, ``"<p,q>+{g1,g2}"`` closes the listed
    gaps, and ``"gen{a,b,c}"`` is the semigroup generated by a list.
    """
    text = text.strip()
    m = _PAIR_RE.match(text)
    if m:
        return pair_semigroup(TypePQ(int(m.group(1)), int(m.group(2))))
    m = _CLOSE_RE.match(text)
    if m:
        H0 = pair_semigroup(TypePQ(int(m.group(1)), int(m.group(2))))
        gammas = [int(x) for x in m.group(3).split(",") if x.strip()]
        return close_gaps(H0, gammas)
    m = _GEN_RE.match(text)
    if m:
        gens = [int(x) for x in m.group(1).split(",") if x.strip()]
        return generated_by(gens)
    raise ValueError(f"cannot parse semigroup literal {text!r}")

"""Character tuples on Fermat surfaces: the Hodge condition, the three
parametric families and the exceptional Galois orbits.

A tuple ``(a0, a1, a2, a3)`` with common denominator ``m`` stands for the
rationals ``a_i / m``.  Everything here is exact integer arithmetic.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import InvalidTuple, NotHodge

__all__ = [
    "CharacterTuple",
    "ClassLabel",
    "Orbit",
    "ExceptionalReport",
    "frac",
    "units",
    "is_hodge",
    "classify",
    "galois_orbit",
    "enumerate_exceptional",
    "family_tuple",
]

TYPE1 = "Type1"
TYPE2A = "Type2a"
TYPE2B = "Type2b"
TYPE2C = "Type2c"
EXCEPTIONAL = "Exceptional"

# (label, p, entries of the family as functions of alpha)
_FAMILIES = (
    (TYPE2A, 2, lambda a: (2 * a, 1 - a, Fraction(1, 2) - a, Fraction(1, 2))),
    (TYPE2B, 3, lambda a: (3 * a, 1 - a, Fraction(1, 3) - a, Fraction(2, 3) - a)),
    (TYPE2C, 4, lambda a: (4 * a, 1 - 2 * a, Fraction(1, 4) - a, Fraction(3, 4) - a)),
)

_PAIRINGS = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))


def frac(q) -> Fraction:
    """Fractional part <q> in [0, 1)."""
    q = Fraction(q)
    return q - math.floor(q)


def units(m: int) -> list[int]:
    """Representatives 1..m-1 of (Z/mZ)^x (``[1]`` for m == 1)."""
    return [s for s in range(1, max(m, 2)) if math.gcd(s, m) == 1]


@dataclass(frozen=True)
class CharacterTuple:
    a: tuple[int, int, int, int]
    m: int

    def __post_init__(self):
        a = tuple(int(x) for x in self.a)
        object.__setattr__(self, "a", a)
        if len(a) != 4:
            raise InvalidTuple(f"need four numerators, got {len(a)}")
        if self.m < 2:
            raise InvalidTuple(f"common denominator must be >= 2, got {self.m}")
        if any(not 1 <= x <= self.m - 1 for x in a):
            raise InvalidTuple(f"numerators must lie in 1..{self.m - 1}: {a}")
        if math.gcd(*a, self.m) != 1:
            raise InvalidTuple(f"{a} is not primitive for m={self.m}")

    @classmethod
    def from_fractions(cls, alphas) -> "CharacterTuple":
        alphas = [Fraction(x) for x in alphas]
        m = math.lcm(*(x.denominator for x in alphas))
        return cls(tuple(int(x * m) for x in alphas), m)

    @property
    def alphas(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self.m) for x in self.a)

    def sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.a))

    def scaled(self, s: int) -> "CharacterTuple":
        return CharacterTuple(tuple(s * x % self.m for x in self.a), self.m)


@dataclass(frozen=True)
class ClassLabel:
    """Result of :func:`classify`.

    ``pairing`` is set for Type1 (index pairs summing to 0 mod m).  ``alpha``
    and ``order`` are set for the Type2 families: ``order[k]`` is the position
    in the tuple holding the k-th family entry.
    """

    kind: str
    m: int
    pairing: tuple | None = None
    alpha: Fraction | None = None
    order: tuple | None = None

    @property
    def b(self) -> Fraction | None:
        """Family parameter in units of 1/m (an integer when alpha is in (1/m)Z)."""
        return None if self.alpha is None else self.alpha * self.m


def _check(t: CharacterTuple) -> CharacterTuple:
    if not isinstance(t, CharacterTuple):
        raise InvalidTuple(f"expected CharacterTuple, got {type(t).__name__}")
    return t


def is_hodge(t: CharacterTuple) -> bool:
    """True iff sum_i <s a_i / m> == 2 for every unit s mod m."""
    _check(t)
    m = t.m
    return all(sum(s * x % m for x in t.a) == 2 * m for s in units(m))


def family_tuple(kind: str, alpha) -> tuple[Fraction, ...]:
    """Entries (mod 1) of a Type2 family at parameter ``alpha``."""
    for label, _, entries in _FAMILIES:
        if label == kind:
            return tuple(frac(x) for x in entries(Fraction(alpha)))
    raise ValueError(f"unknown family {kind!r}")


def _type1_pairing(a, m):
    for pairing in _PAIRINGS:
        if all((a[i] + a[j]) % m == 0 for i, j in pairing):
            return pairing
    return None


@lru_cache(maxsize=64)
def _family_index(m: int) -> dict:
    """Sorted tuple -> (label, alpha) for every member of a Type2 family with
    common denominator exactly dividing m.

    The family parameter alpha is searched over (1/(p m))Z / Z: a family entry
    like p*alpha lies in (1/m)Z without alpha itself doing so.
    """
    index = {}
    for label, p, entries in _FAMILIES:
        denom = p * m
        for b in range(denom):
            vals = [frac(x) for x in entries(Fraction(b, denom))]
            if any(v == 0 or (v * m).denominator != 1 for v in vals):
                continue
            key = tuple(sorted(int(v * m) for v in vals))
            index.setdefault(key, (label, Fraction(b, denom)))
    return index


def _match_order(a, fam_vals, m):
    want = [int(v * m) for v in fam_vals]
    for perm in itertools.permutations(range(4)):
        if all(a[perm[k]] == want[k] for k in range(4)):
            return perm
    raise AssertionError("family lookup disagrees with permutation search")


def classify(t: CharacterTuple) -> ClassLabel:
    """Place a Hodge tuple in Type1, Type2a/b/c or Exceptional.

    Type1 is tested first, then the families in the order 2a, 2b, 2c; within
    a family the smallest alpha in [0, 1) wins.
    """
    _check(t)
    if not is_hodge(t):
        raise NotHodge(f"{t.a} (m={t.m}) fails the Hodge condition")
    pairing = _type1_pairing(t.a, t.m)
    if pairing is not None:
        return ClassLabel(TYPE1, t.m, pairing=pairing)
    hit = _family_index(t.m).get(t.sorted())
    if hit is None:
        return ClassLabel(EXCEPTIONAL, t.m)
    label, alpha = hit
    order = _match_order(t.a, family_tuple(label, alpha), t.m)
    return ClassLabel(label, t.m, alpha=alpha, order=order)


def galois_orbit(t: CharacterTuple) -> frozenset:
    """Sorted tuples { sort(s*a mod m) : s unit mod m }."""
    _check(t)
    m = t.m
    return frozenset(tuple(sorted(s * x % m for x in t.a)) for s in units(m))


@dataclass
class Orbit:
    representative: tuple[int, ...]
    members: list[tuple[int, ...]]

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass
class ExceptionalReport:
    m: int
    orbits: list[Orbit]

    @property
    def e_m(self) -> int:
        return sum(o.size for o in self.orbits)

    @property
    def o_m(self) -> int:
        return len(self.orbits)

    @property
    def representatives(self) -> list[tuple[int, ...]]:
        return [o.representative for o in self.orbits]

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "e_m": self.e_m,
            "o_m": self.o_m,
            "orbits": [
                {"representative": list(o.representative), "members": [list(x) for x in o.members]}
                for o in self.orbits
            ],
        }


def _sorted_hodge_candidates(m: int) -> np.ndarray:
    """All sorted primitive tuples with sum 2m passing the Hodge condition.

    Sum == 2m is forced by the condition at t = 1, so a3 is solved from
    (a0, a1, a2) rather than searched.
    """
    r = np.arange(1, m, dtype=np.int64)
    a1, a2 = np.meshgrid(r, r, indexing="ij")
    a1, a2 = a1.ravel(), a2.ravel()
    blocks = []
    for a0 in range(1, m):
        a3 = 2 * m - a0 - a1 - a2
        keep = (a0 <= a1) & (a1 <= a2) & (a2 <= a3) & (a3 <= m - 1)
        if keep.any():
            blocks.append(np.stack([np.full(keep.sum(), a0), a1[keep], a2[keep], a3[keep]], axis=1))
    if not blocks:
        return np.empty((0, 4), dtype=np.int64)
    cand = np.concatenate(blocks)
    g = np.gcd.reduce(np.concatenate([cand, np.full((len(cand), 1), m)], axis=1), axis=1)
    cand = cand[g == 1]
    ok = np.ones(len(cand), dtype=bool)
    for s in units(m):
        ok &= ((cand * s) % m).sum(axis=1) == 2 * m
    return cand[ok]


def enumerate_exceptional(m: int) -> ExceptionalReport:
    """All exceptional characters with common denominator m, grouped into
    Galois orbits (counted as sorted tuples).

    Orbits are listed by their lexicographically least member.
    """
    if m < 2:
        raise InvalidTuple(f"m must be >= 2, got {m}")
    family = _family_index(m)
    exceptional = []
    for row in _sorted_hodge_candidates(m).tolist():
        key = tuple(row)
        if _type1_pairing(key, m) is None and key not in family:
            exceptional.append(key)
    seen = set()
    orbits = []
    for key in exceptional:
        if key in seen:
            continue
        members = sorted(galois_orbit(CharacterTuple(key, m)))
        seen.update(members)
        orbits.append(Orbit(members[0], members))
    orbits.sort(key=lambda o: o.representative)
    return ExceptionalReport(m, orbits)

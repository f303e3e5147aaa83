"""
Representation-ring arithmetic for irreducible G-modules.

VirtualModule keeps signed multiplicities of irreducibles V(mu), keyed by dominant
highest weight; FormalCharacter keeps weight multiplicities of a single module.
"""

import logging
import functools
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Tuple, Union

from .errors import BottforgeError, NotDominantError, RootSystemMismatchError
from .rootsys import Root, RootSystem, Weight, pairing, rho, root_as_weight, simple_root_weight

logger = logging.getLogger(__name__)

TermsLike = Union[Mapping[Weight, int], Iterable[Tuple[Weight, int]]]


def _collect(terms: TermsLike) -> Dict[Weight, int]:
    items = terms.items() if isinstance(terms, Mapping) else terms
    acc: Dict[Weight, int] = defaultdict(int)
    for weight, mult in items:
        acc[weight] += int(mult)
    return {w: m for w, m in acc.items() if m != 0}


def _sorted_terms(acc: Dict[Weight, int]) -> Tuple[Tuple[Weight, int], ...]:
    return tuple(sorted(acc.items(), key=lambda item: item[0].fund_coords, reverse=True))


@dataclass(frozen=True)
class VirtualModule:
    """Finite signed combination of irreducibles, sorted by descending highest weight."""

    rs: RootSystem
    terms: Tuple[Tuple[Weight, int], ...] = ()

    @classmethod
    def from_terms(cls, rs: RootSystem, terms: TermsLike = ()) -> "VirtualModule":
        acc = _collect(terms)
        for weight in acc:
            if len(weight) != rs.rank or not weight.is_dominant():
                raise NotDominantError(f"{weight} is not a dominant weight of {rs}")
        return cls(rs, _sorted_terms(acc))

    @classmethod
    def irreducible(cls, rs: RootSystem, weight: Weight, mult: int = 1) -> "VirtualModule":
        return cls.from_terms(rs, [(weight, mult)])

    def _check_same(self, other: "VirtualModule"):
        if self.rs != other.rs:
            raise RootSystemMismatchError(f"cannot combine modules of {self.rs} and {other.rs}")

    def as_dict(self) -> Dict[Weight, int]:
        return dict(self.terms)

    def multiplicity(self, weight: Weight) -> int:
        return self.as_dict().get(weight, 0)

    @property
    def is_empty(self) -> bool:
        return not self.terms

    def __add__(self, other: "VirtualModule") -> "VirtualModule":
        self._check_same(other)
        return VirtualModule(self.rs, _sorted_terms(_collect(self.terms + other.terms)))

    def __neg__(self) -> "VirtualModule":
        return VirtualModule(self.rs, tuple((w, -m) for w, m in self.terms))

    def __sub__(self, other: "VirtualModule") -> "VirtualModule":
        return self + (-other)

    def scale(self, n: int) -> "VirtualModule":
        return VirtualModule(self.rs, _sorted_terms(_collect((w, n * m) for w, m in self.terms)))

    def dimension(self) -> int:
        return sum(m * weyl_dimension(self.rs, w) for w, m in self.terms)

    def is_actual(self) -> bool:
        """True when every multiplicity is positive, i.e. an honest module."""
        return all(m > 0 for _, m in self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for weight, mult in self.terms:
            sign = "-" if mult < 0 else "+"
            count = "" if abs(mult) == 1 else f"{abs(mult)}"
            parts.append(f"{sign} {count}V{weight}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else text


def add(u: VirtualModule, v: VirtualModule) -> VirtualModule:
    return u + v


def negate(u: VirtualModule) -> VirtualModule:
    return -u


def scale(u: VirtualModule, n: int) -> VirtualModule:
    return u.scale(n)


def dimension(u: VirtualModule) -> int:
    return u.dimension()


@dataclass(frozen=True)
class FormalCharacter:
    """Weight multiplicities of a module; keys may be any weights."""

    terms: Tuple[Tuple[Weight, int], ...] = ()

    @classmethod
    def from_terms(cls, terms: TermsLike) -> "FormalCharacter":
        acc = _collect(terms)
        if any(m < 0 for m in acc.values()):
            raise BottforgeError("characters of modules have nonnegative multiplicities")
        return cls(_sorted_terms(acc))

    def as_dict(self) -> Dict[Weight, int]:
        return dict(self.terms)

    def multiplicity(self, weight: Weight) -> int:
        return self.as_dict().get(weight, 0)

    def total(self) -> int:
        return sum(m for _, m in self.terms)

    def __mul__(self, other: "FormalCharacter") -> "FormalCharacter":
        return FormalCharacter.from_terms(
            (a + b, m * n) for a, m in self.terms for b, n in other.terms
        )


@functools.lru_cache(maxsize=65536)
def weyl_dimension(rs: RootSystem, mu: Weight) -> int:
    """
    dim V(mu) = prod over positive roots of <mu + rho, beta^v> / <rho, beta^v>.

    Args:
        rs: Root system
        mu: Dominant weight

    Returns:
        Positive integer dimension (arbitrary precision)
    """
    if len(mu) != rs.rank or not mu.is_dominant():
        raise NotDominantError(f"Weyl dimension needs a dominant weight, got {mu}")
    shifted = mu + rho(rs)
    value = Fraction(1)
    for beta in rs.positive_roots:
        value *= Fraction(pairing(rs, shifted, beta), pairing(rs, rho(rs), beta))
    assert value.denominator == 1, f"non-integral Weyl dimension {value} for {mu}"
    return int(value)


def freudenthal_character(rs: RootSystem, mu: Weight) -> FormalCharacter:
    """
    Weight multiplicities of V(mu) by Freudenthal's recursion.

    Weights are generated depth by depth (depth = height of mu - nu). A candidate nu one
    simple root below a known weight gets

        (|mu+rho|^2 - |nu+rho|^2) m(nu) = 2 sum_{beta>0} sum_{k>=1} m(nu+k beta)(nu+k beta, beta)

    and the denominator is computed from the depth vector gamma = mu - nu as
    2(mu+rho, gamma) - (gamma, gamma), which needs no inverse Cartan matrix.
    """
    if len(mu) != rs.rank or not mu.is_dominant():
        raise NotDominantError(f"Freudenthal's formula needs a dominant weight, got {mu}")
    n = rs.rank
    top = mu + rho(rs)
    # Per positive root: height, coordinates in fundamental weights, and b_j d_j so that
    # (nu, beta) is a dot product with nu's coordinates.
    positive = [
        (
            beta.height,
            root_as_weight(rs, beta).fund_coords,
            tuple(b * d for b, d in zip(beta.simple_coords, rs.symmetrizers)),
        )
        for beta in rs.positive_roots
    ]
    lower = [simple_root_weight(rs, i + 1).fund_coords for i in range(n)]

    highest = mu.fund_coords
    multiplicities: Dict[Tuple[int, ...], int] = {highest: 1}
    depth_of: Dict[Tuple[int, ...], Tuple[int, ...]] = {highest: (0,) * n}
    weights_curr = [highest]
    depth = 0
    while weights_curr:
        depth += 1
        weights_last, weights_curr = weights_curr, []
        tested = set()
        for parent in weights_last:
            for i in range(n):
                nu = tuple(p - a for p, a in zip(parent, lower[i]))
                if nu in tested or nu in multiplicities:
                    continue
                tested.add(nu)
                num = 0
                for height, beta_coords, beta_form in positive:
                    for k in range(1, depth // height + 1):
                        up = tuple(x + k * b for x, b in zip(nu, beta_coords))
                        mult = multiplicities.get(up)
                        if mult:
                            num += mult * sum(x * f for x, f in zip(up, beta_form))
                if num == 0:
                    continue
                gamma = list(depth_of[parent])
                gamma[i] += 1
                gamma_root = Root(tuple(gamma))
                denom = 2 * rs.inner(top, gamma_root) - rs.norm(gamma_root)
                assert denom > 0 and (2 * num) % denom == 0, f"Freudenthal step failed at {nu}"
                multiplicities[nu] = 2 * num // denom
                depth_of[nu] = tuple(gamma)
                weights_curr.append(nu)
        logger.debug(f"Freudenthal {mu}: depth {depth}, {len(weights_curr)} new weights")
    return FormalCharacter.from_terms((Weight(w), m) for w, m in multiplicities.items())


def sl2_clebsch_gordan(a: int, b: int) -> List[int]:
    """V_a (x) V_b = V_{a+b} + V_{a+b-2} + ... + V_{|a-b|}."""
    if a < 0 or b < 0:
        raise BottforgeError(f"Clebsch-Gordan needs nonnegative highest weights, got {a}, {b}")
    return list(range(a + b, abs(a - b) - 1, -2))


def sl2_character(a: int) -> FormalCharacter:
    if a < 0:
        raise NotDominantError(f"SL2 highest weight must be nonnegative, got {a}")
    return FormalCharacter.from_terms((Weight((a - 2 * k,)), 1) for k in range(a + 1))


def decompose_sl2_character(ch: FormalCharacter) -> Dict[int, int]:
    """Peel off irreducible SL2 characters from the top weight down."""
    remaining = ch.as_dict()
    components: Dict[int, int] = {}
    while remaining:
        top = max(w[0] for w in remaining)
        mult = remaining[Weight((top,))]
        if top < 0 or mult < 0:
            raise BottforgeError("character is not the character of an SL2-module")
        components[top] = mult
        for k in range(top + 1):
            w = Weight((top - 2 * k,))
            left = remaining.get(w, 0) - mult
            if left:
                remaining[w] = left
            else:
                remaining.pop(w, None)
    return components

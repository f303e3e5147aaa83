"""
Borel-Weil-Bott solver.

H^i(lambda) means R^i Ind_B^G(lambda) with B the negative Borel subgroup, so dominant
weights have nonzero H^0. In characteristic zero the cohomology of a line bundle is
either zero or a single irreducible V(w . lambda) placed in degree l(w).
"""

import functools
import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

from .errors import BottforgeError
from .repcalc import VirtualModule, weyl_dimension
from .rootsys import RootSystem, Weight, rho
from .weylwalk import dominant_representative_plain, dot_reflect_simple, make_dominant_dot

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BottOutcome:
    degree: Optional[int] = None
    highest_weight: Optional[Weight] = None
    dimension: Optional[int] = None

    @property
    def is_zero(self) -> bool:
        return self.degree is None

    @classmethod
    def zero(cls) -> "BottOutcome":
        return cls()


@dataclass(frozen=True)
class CohomologyDescription:
    """Degree -> honest module (positive multiplicities); absent degrees are zero."""

    rs: RootSystem
    by_degree: Tuple[Tuple[int, VirtualModule], ...] = ()

    @classmethod
    def empty(cls, rs: RootSystem) -> "CohomologyDescription":
        return cls(rs)

    @classmethod
    def from_mapping(cls, rs: RootSystem, by_degree: Dict[int, VirtualModule]) -> "CohomologyDescription":
        items = []
        for degree in sorted(by_degree):
            module = by_degree[degree]
            if module.is_empty:
                continue
            if degree < 0 or not module.is_actual():
                raise BottforgeError(f"degree {degree} does not hold an honest module: {module}")
            items.append((degree, module))
        return cls(rs, tuple(items))

    @classmethod
    def from_outcome(cls, rs: RootSystem, outcome: BottOutcome, shift: int = 0) -> "CohomologyDescription":
        if outcome.is_zero:
            return cls.empty(rs)
        module = VirtualModule.irreducible(rs, outcome.highest_weight)
        return cls.from_mapping(rs, {outcome.degree + shift: module})

    def as_dict(self) -> Dict[int, VirtualModule]:
        return dict(self.by_degree)

    def at(self, degree: int) -> VirtualModule:
        return self.as_dict().get(degree, VirtualModule(self.rs))

    def degrees(self) -> List[int]:
        return [d for d, _ in self.by_degree]

    def is_zero(self) -> bool:
        return not self.by_degree

    def add(self, other: "CohomologyDescription") -> "CohomologyDescription":
        merged = self.as_dict()
        for degree, module in other.by_degree:
            merged[degree] = merged[degree] + module if degree in merged else module
        return CohomologyDescription.from_mapping(self.rs, merged)

    def shifted(self, n: int) -> "CohomologyDescription":
        return CohomologyDescription.from_mapping(self.rs, {d + n: m for d, m in self.by_degree})

    def euler_characteristic(self) -> VirtualModule:
        total = VirtualModule(self.rs)
        for degree, module in self.by_degree:
            total = total + (module if degree % 2 == 0 else -module)
        return total

    def total_dimension(self) -> int:
        return sum(module.dimension() for _, module in self.by_degree)

    def __str__(self):
        if not self.by_degree:
            return "0"
        return "; ".join(f"H^{d} = {m}" for d, m in self.by_degree)


def sum_descriptions(rs: RootSystem, parts: Iterable[CohomologyDescription]) -> CohomologyDescription:
    total = CohomologyDescription.empty(rs)
    for part in parts:
        total = total.add(part)
    return total


@functools.lru_cache(maxsize=65536)
def line_bundle_cohomology(rs: RootSystem, lam: Weight) -> BottOutcome:
    """
    H^*(lambda) by Bott's theorem.

    Args:
        rs: Root system
        lam: Any weight

    Returns:
        Zero outcome if lambda + rho is singular, otherwise V(w . lambda) in degree l(w)
    """
    rs.check_weight(lam)
    normal = make_dominant_dot(rs, lam)
    if normal.is_singular:
        return BottOutcome.zero()
    return BottOutcome(
        degree=normal.length,
        highest_weight=normal.dominant,
        dimension=weyl_dimension(rs, normal.dominant),
    )


def line_bundle_description(rs: RootSystem, lam: Weight, shift: int = 0) -> CohomologyDescription:
    return CohomologyDescription.from_outcome(rs, line_bundle_cohomology(rs, lam), shift)


def euler_characteristic(rs: RootSystem, lam: Weight) -> VirtualModule:
    """chi(lambda) = (-1)^l(w) [V(w . lambda)], or 0 when singular."""
    outcome = line_bundle_cohomology(rs, lam)
    if outcome.is_zero:
        return VirtualModule(rs)
    sign = -1 if outcome.degree % 2 else 1
    return VirtualModule.irreducible(rs, outcome.highest_weight, sign)


def euler_sum(rs: RootSystem, weights: Iterable[Weight]) -> VirtualModule:
    total = VirtualModule(rs)
    for lam in weights:
        total = total + euler_characteristic(rs, lam)
    return total


def dual_highest_weight(rs: RootSystem, mu: Weight) -> Weight:
    """Highest weight of V(mu)^*, i.e. -w0(mu)."""
    return dominant_representative_plain(rs, -mu)[0]


def serre_duality_check(rs: RootSystem, lam: Weight) -> bool:
    """
    Compare H^*(lambda) with H^*(-lambda - 2 rho).

    Serre duality on G/B pairs H^i(lambda) with H^{N-i}(-lambda-2rho)^*, N = |Phi+|.
    """
    ours = line_bundle_cohomology(rs, lam)
    theirs = line_bundle_cohomology(rs, -lam - rho(rs).scale(2))
    if ours.is_zero or theirs.is_zero:
        return ours.is_zero and theirs.is_zero
    return (
        ours.degree + theirs.degree == rs.num_positive_roots
        and theirs.highest_weight == dual_highest_weight(rs, ours.highest_weight)
    )


@dataclass(frozen=True)
class LeviOutcome:
    """R^* Ind_B^{P_alpha}(lambda): zero, or the alpha-string module nabla_alpha(nu) in one degree."""

    alpha_index: int
    degree: Optional[int] = None
    highest_weight: Optional[Weight] = None
    level: int = 0

    @property
    def is_zero(self) -> bool:
        return self.degree is None


def levi_induction(rs: RootSystem, alpha_index: int, lam: Weight) -> LeviOutcome:
    """
    Induce a weight from B to the minimal parabolic P_alpha.

    P_alpha/B is a projective line, so only degrees 0 and 1 occur. A nonnegative
    alpha-level gives nabla_alpha(lambda) in degree 0; level -1 gives nothing; lower
    levels give, by Serre duality on the line, nabla_alpha(s_alpha . lambda) in degree 1.
    """
    k = rs.check_index(alpha_index)
    rs.check_weight(lam)
    level = lam[k]
    if level >= 0:
        return LeviOutcome(alpha_index, degree=0, highest_weight=lam, level=level)
    if level == -1:
        return LeviOutcome(alpha_index)
    top = dot_reflect_simple(rs, alpha_index, lam)
    return LeviOutcome(alpha_index, degree=1, highest_weight=top, level=top[k])

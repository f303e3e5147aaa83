"""
Cohomology of generalized Demazure modules M_{alpha,r}(lambda).

M_{alpha,r}(lambda) is the indecomposable B-module with weights lambda, lambda - alpha,
..., lambda - r alpha. Its cohomology is read off from m = <lambda, alpha^v> and r:

    C1  m <= -1            sum of H^i(lambda - t alpha), t = 0..r
    C2  m >= 2r, m > r     sum of H^i(lambda - t alpha), t = 0..r
    C3  r < m < 2r         sum of H^i(lambda - t alpha), t = 0..s   (s = m - r)
    C4  0 <= m <= r - 2    sum of H^(i-1)(lambda + k alpha), k = 1..r-1-m
    C5  m = r              H^i(lambda)
    C6  m = r - 1          0

r = 0 is a line bundle and goes straight to Bott's theorem.
"""

import enum
import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from . import config
from .bott import (
    CohomologyDescription,
    euler_sum,
    levi_induction,
    line_bundle_description,
    sum_descriptions,
)
from .errors import CaseError, OracleMismatchError
from .repcalc import sl2_clebsch_gordan
from .rootsys import RootSystem, Weight, rho, simple_root_weight

logger = logging.getLogger(__name__)

# Cohomological degree by which the C4 constituents are raised
C4_DEGREE_SHIFT = 1


class CaseKind(enum.Enum):
    C1_antidominant = "C1"
    C2_large = "C2"
    C3_truncated = "C3"
    C4_interior = "C4"
    C5_equal = "C5"
    C6_vanishing = "C6"

    @property
    def code(self) -> str:
        return self.value


@dataclass(frozen=True)
class CaseLabel:
    kind: CaseKind
    m: int
    s: int

    @property
    def code(self) -> str:
        return self.kind.code

    def __str__(self):
        return f"{self.kind.name} (m={self.m}, s={self.s})"


@dataclass(frozen=True)
class GeneralizedDemazureModule:
    rs: RootSystem
    alpha_index: int
    r: int
    lam: Weight

    def __post_init__(self):
        self.rs.check_index(self.alpha_index)
        self.rs.make_weight(self.lam.fund_coords)
        if self.r < 0:
            raise CaseError(f"r must be nonnegative, got {self.r}")

    @property
    def m(self) -> int:
        return alpha_level(self.rs, self.alpha_index, self.lam)

    @property
    def dimension(self) -> int:
        return self.r + 1

    def weights(self) -> List[Weight]:
        alpha = simple_root_weight(self.rs, self.alpha_index)
        return [self.lam - alpha.scale(t) for t in range(self.r + 1)]

    def __str__(self):
        return f"M_(alpha_{self.alpha_index},{self.r}){self.lam} over {self.rs}"


def weights(module: GeneralizedDemazureModule) -> List[Weight]:
    return module.weights()


def demazure_module(rs: RootSystem, alpha_index: int, lam: Weight) -> GeneralizedDemazureModule:
    """Demazure's V_{lambda,alpha}: weights lambda down to s_alpha(lambda)."""
    m = alpha_level(rs, alpha_index, lam)
    if m < 0:
        raise CaseError(f"V_(lambda,alpha) needs <lambda, alpha^v> >= 0, got {m}")
    return GeneralizedDemazureModule(rs, alpha_index, m, lam)


def alpha_level(rs: RootSystem, alpha_index: int, lam: Weight) -> int:
    """<lambda, alpha^v> for a simple root: a coordinate read."""
    return lam[rs.check_index(alpha_index)]


def case_classify(m: int, r: int) -> CaseLabel:
    if r < 1:
        raise CaseError(f"case analysis needs r >= 1, got r={r}")
    s = m - r
    if m <= -1:
        kind = CaseKind.C1_antidominant
    elif m <= r - 2:
        kind = CaseKind.C4_interior
    elif m == r - 1:
        kind = CaseKind.C6_vanishing
    elif m == r:
        kind = CaseKind.C5_equal
    elif m < 2 * r:
        kind = CaseKind.C3_truncated
    else:
        kind = CaseKind.C2_large
    return CaseLabel(kind, m, s)


def _string_sum(rs: RootSystem, alpha_index: int, lam: Weight, top: int) -> CohomologyDescription:
    alpha = simple_root_weight(rs, alpha_index)
    return sum_descriptions(rs, (line_bundle_description(rs, lam - alpha.scale(t)) for t in range(top + 1)))


def cohomology_rank1(rs: RootSystem, alpha_index: int, lam: Weight) -> CohomologyDescription:
    """
    H^*(M_{alpha,1}(lambda)): zero when <lambda, alpha^v> = 0, otherwise
    H^*(lambda) + H^*(lambda - alpha).
    """
    if alpha_level(rs, alpha_index, lam) == 0:
        return CohomologyDescription.empty(rs)
    return _string_sum(rs, alpha_index, lam, 1)


def case_c_constituents(rs: RootSystem, alpha_index: int, r: int, lam: Weight) -> List[Tuple[Weight, int]]:
    """
    Highest weights of the C4 answer, each contributing one degree up.

    The alpha-string of level r is tensored with R^1 Ind_B^{P_alpha}(lambda - r rho), whose
    dual is induced from -lambda + r rho - alpha; the latter has alpha-level r - m - 2 and
    the tensor product has top weight lambda + (r-1-m) alpha. Each Clebsch-Gordan
    component of level L sits at lambda + ((L - m)/2) alpha.
    """
    m = alpha_level(rs, alpha_index, lam)
    if not 0 <= m <= r - 2:
        raise CaseError(f"C4 constituents need 0 <= m <= r-2, got m={m}, r={r}")
    alpha = simple_root_weight(rs, alpha_index)
    constituents = []
    for level in sorted(sl2_clebsch_gordan(r, r - m - 2)):
        k = (level - m) // 2
        constituents.append((lam + alpha.scale(k), C4_DEGREE_SHIFT))
    return constituents


def cohomology(
    rs: RootSystem,
    alpha_index: int,
    r: int,
    lam: Weight,
    *,
    checked: Optional[bool] = None,
    c4_shift: int = C4_DEGREE_SHIFT,
) -> CohomologyDescription:
    """
    H^*(M_{alpha,r}(lambda)) by the case table.

    Args:
        rs: Root system
        alpha_index: 1-based simple root index
        r: Length of the weight string minus one
        lam: Top weight
        checked: Verify against the Euler sum; defaults to BOTTFORGE_CHECKED
        c4_shift: Degree shift applied in case C4 (only changed by fault-injection tests)

    Returns:
        CohomologyDescription
    """
    module = GeneralizedDemazureModule(rs, alpha_index, r, lam)
    if r == 0:
        result = line_bundle_description(rs, lam)
    else:
        label = case_classify(module.m, r)
        kind = label.kind
        if kind in (CaseKind.C1_antidominant, CaseKind.C2_large):
            result = _string_sum(rs, alpha_index, lam, r)
        elif kind == CaseKind.C3_truncated:
            result = _string_sum(rs, alpha_index, lam, label.s)
        elif kind == CaseKind.C4_interior:
            parts = []
            for weight, _ in case_c_constituents(rs, alpha_index, r, lam):
                parts.append(line_bundle_description(rs, weight, shift=c4_shift))
            result = sum_descriptions(rs, parts)
        elif kind == CaseKind.C5_equal:
            result = line_bundle_description(rs, lam)
        else:
            result = CohomologyDescription.empty(rs)
        logger.debug(f"{module}: {label} -> {result}")

    if checked is None:
        checked = config.checked_mode()
    if checked:
        expected = euler_sum(rs, module.weights())
        found = result.euler_characteristic()
        if found != expected:
            raise OracleMismatchError(f"{module}: Euler characteristic {found} differs from weight sum {expected}")
    return result


def cohomology_demazure_original(rs: RootSystem, alpha_index: int, lam: Weight) -> CohomologyDescription:
    """All cohomology of Demazure's V_{lambda,alpha} (r = m), which is H^*(lambda)."""
    module = demazure_module(rs, alpha_index, lam)
    return cohomology(rs, alpha_index, module.r, lam)


def cohomology_via_tensor_identity(rs: RootSystem, alpha_index: int, r: int, lam: Weight) -> CohomologyDescription:
    """
    Second derivation: M_{alpha,r}(lambda) = nabla_alpha(r rho) (x) (lambda - r rho) as B-modules.

    By the tensor identity R^j Ind_B^{P_alpha} M = nabla_alpha(r rho) (x) R^j Ind_B^{P_alpha}(lambda - r rho);
    Clebsch-Gordan splits the product into alpha-strings, and inducing each string to G
    gives H^(i-j) of its highest weight.
    """
    module = GeneralizedDemazureModule(rs, alpha_index, r, lam)
    twist = lam - rho(rs).scale(r)
    induced = levi_induction(rs, alpha_index, twist)
    if induced.is_zero:
        return CohomologyDescription.empty(rs)
    alpha = simple_root_weight(rs, alpha_index)
    top = induced.highest_weight + rho(rs).scale(r)
    parts = []
    for j, _level in enumerate(sl2_clebsch_gordan(r, induced.level)):
        parts.append(line_bundle_description(rs, top - alpha.scale(j), shift=induced.degree))
    logger.debug(f"{module} via tensor identity: degree {induced.degree}, {len(parts)} strings")
    return sum_descriptions(rs, parts)

"""
Simple reflections, the dot action and chamber walks.

The Weyl group is never enumerated: every question Bott's theorem asks is answered by
walking a weight into the dominant chamber one simple reflection at a time.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .rootsys import RootSystem, Weight, pairing, rho, simple_root_weight

logger = logging.getLogger(__name__)

SINGULAR = "singular"
REGULAR = "regular"


@dataclass(frozen=True)
class DotNormalForm:
    """Result of walking lambda into the dominant chamber under the dot action."""

    status: str
    length: int = 0
    dominant: Optional[Weight] = None
    word: Tuple[int, ...] = field(default=())

    @property
    def is_singular(self) -> bool:
        return self.status == SINGULAR


def reflect_simple(rs: RootSystem, i: int, lam: Weight) -> Weight:
    """s_i(lambda) = lambda - lambda_i alpha_i."""
    k = rs.check_index(i)
    rs.check_weight(lam)
    return lam - simple_root_weight(rs, i).scale(lam[k])


def dot_reflect_simple(rs: RootSystem, i: int, lam: Weight) -> Weight:
    """s_i . lambda = lambda - (lambda_i + 1) alpha_i."""
    k = rs.check_index(i)
    rs.check_weight(lam)
    return lam - simple_root_weight(rs, i).scale(lam[k] + 1)


def apply_dot_word(rs: RootSystem, word: Sequence[int], lam: Weight) -> Weight:
    """Apply dot reflections in the order they appear in word."""
    for i in word:
        lam = dot_reflect_simple(rs, i, lam)
    return lam


def _pivot(coords: Sequence[int], pivot: str) -> Optional[int]:
    negatives = [k for k, c in enumerate(coords) if c < 0]
    if not negatives:
        return None
    return negatives[0] if pivot == "smallest" else negatives[-1]


def make_dominant_dot(rs: RootSystem, lam: Weight, pivot: str = "smallest") -> DotNormalForm:
    """
    Find w with w . lambda dominant, or detect that lambda + rho is singular.

    Walks mu = lambda + rho with plain reflections at a negative coordinate; a zero
    coordinate anywhere along the way means mu lies on a wall. Each step lowers the
    number of positive roots pairing negatively with mu by one, so the number of steps
    is l(w).

    Args:
        rs: Root system
        lam: Weight in fundamental coordinates
        pivot: "smallest" or "largest" negative coordinate first

    Returns:
        DotNormalForm; the word lists the simple indices applied, in order
    """
    if pivot not in ("smallest", "largest"):
        raise ValueError(f"unknown pivot rule {pivot!r}")
    rs.check_weight(lam)
    mu = lam + rho(rs)
    word: List[int] = []
    while True:
        if any(c == 0 for c in mu):
            logger.debug(f"{lam} is dot-singular after {len(word)} steps")
            return DotNormalForm(status=SINGULAR)
        k = _pivot(mu.fund_coords, pivot)
        if k is None:
            return DotNormalForm(
                status=REGULAR,
                length=len(word),
                dominant=mu - rho(rs),
                word=tuple(word),
            )
        mu = reflect_simple(rs, k + 1, mu)
        word.append(k + 1)


def dominant_representative_plain(rs: RootSystem, lam: Weight) -> Tuple[Weight, int]:
    """Dominant element of the W-orbit of lambda and the number of reflections used."""
    rs.check_weight(lam)
    steps = 0
    while True:
        k = _pivot(lam.fund_coords, "smallest")
        if k is None:
            return lam, steps
        lam = reflect_simple(rs, k + 1, lam)
        steps += 1


def is_singular_by_roots(rs: RootSystem, lam: Weight) -> bool:
    """True iff <lambda + rho, beta^v> = 0 for some positive root beta."""
    mu = lam + rho(rs)
    return any(pairing(rs, mu, beta) == 0 for beta in rs.positive_roots)

"""
Finite crystallographic root systems built from Cartan data.

Conventions:
- Weights are integer vectors in fundamental-weight coordinates, so that
  lambda_i = <lambda, alpha_i^v>.
- Roots are integer vectors in simple-root coordinates.
- The Cartan matrix is A[i][j] = <alpha_j, alpha_i^v>; its columns are the simple
  roots written in fundamental-weight coordinates.
- Simple-root indices in the public API are 1-based (Bourbaki numbering).
"""

import re
import logging
import functools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Iterable, List, Sequence, Tuple, Union

import numpy as np

from .errors import (
    InvalidRootError,
    SimpleIndexError,
    UnsupportedTypeError,
    WeightShapeError,
)

logger = logging.getLogger(__name__)

# Classical |Phi+| per series; used by the self-checks in build_root_system
CLASSICAL_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}

_TYPE_PATTERN = re.compile(r"^\s*([A-Ga-g])\s*(\d+)\s*$")


@dataclass(frozen=True, order=True)
class CartanType:
    series: str
    rank: int

    def __post_init__(self):
        series = self.series.upper() if isinstance(self.series, str) else self.series
        object.__setattr__(self, "series", series)
        if series not in CLASSICAL_COUNTS:
            raise UnsupportedTypeError(f"unknown Cartan series {self.series!r}")
        n = self.rank
        if not isinstance(n, int) or isinstance(n, bool):
            raise UnsupportedTypeError(f"rank must be an integer, got {n!r}")
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "C": n >= 2,
            "D": n >= 4,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
        }[series]
        if not ok:
            raise UnsupportedTypeError(f"type {series}{n} is not a finite root system")

    def __str__(self):
        return f"{self.series}{self.rank}"


def parse_cartan_type(spec: Union[str, CartanType, Tuple[str, int]]) -> CartanType:
    """Accept "A2", "g2", ("B", 3) or an existing CartanType."""
    if isinstance(spec, CartanType):
        return spec
    if isinstance(spec, tuple):
        return CartanType(spec[0], int(spec[1]))
    match = _TYPE_PATTERN.match(str(spec))
    if not match:
        raise UnsupportedTypeError(f"cannot parse Cartan type {spec!r}")
    return CartanType(match.group(1), int(match.group(2)))


@dataclass(frozen=True)
class Root:
    simple_coords: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "simple_coords", tuple(int(c) for c in self.simple_coords))

    @property
    def height(self) -> int:
        return sum(self.simple_coords)

    @property
    def is_positive(self) -> bool:
        return all(c >= 0 for c in self.simple_coords) and any(self.simple_coords)

    @property
    def is_zero(self) -> bool:
        return not any(self.simple_coords)

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.simple_coords))

    def __str__(self):
        return "[" + ",".join(str(c) for c in self.simple_coords) + "]"


@dataclass(frozen=True)
class Weight:
    fund_coords: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "fund_coords", tuple(int(c) for c in self.fund_coords))

    @property
    def rank(self) -> int:
        return len(self.fund_coords)

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.fund_coords)

    def __getitem__(self, i: int) -> int:
        return self.fund_coords[i]

    def __iter__(self):
        return iter(self.fund_coords)

    def __len__(self):
        return len(self.fund_coords)

    def _same_shape(self, other: "Weight"):
        if len(self.fund_coords) != len(other.fund_coords):
            raise WeightShapeError(f"cannot combine weights {self} and {other} of different lengths")

    def __add__(self, other: "Weight") -> "Weight":
        self._same_shape(other)
        return Weight(tuple(a + b for a, b in zip(self.fund_coords, other.fund_coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._same_shape(other)
        return Weight(tuple(a - b for a, b in zip(self.fund_coords, other.fund_coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.fund_coords))

    def scale(self, n: int) -> "Weight":
        return Weight(tuple(n * a for a in self.fund_coords))

    def to_list(self) -> List[int]:
        return list(self.fund_coords)

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.fund_coords) + ")"


def _cartan_matrix(t: CartanType) -> np.ndarray:
    n = t.rank
    a = 2 * np.eye(n, dtype=np.int64)

    def link(i, j):
        a[i, j] = a[j, i] = -1

    if t.series in "ABCDFG":
        chain = n if t.series in "ABCFG" else n - 1
        for i in range(chain - 1):
            link(i, i + 1)
    if t.series == "B":
        a[n - 1, n - 2] = -2
    elif t.series == "C":
        a[n - 2, n - 1] = -2
    elif t.series == "D":
        link(n - 3, n - 1)
    elif t.series == "E":
        for i, j in [(0, 2), (2, 3), (3, 4), (1, 3)] + [(k, k + 1) for k in range(4, n - 1)]:
            link(i, j)
    elif t.series == "F":
        # alpha_1, alpha_2 long; alpha_3, alpha_4 short
        a[2, 1] = -2
    elif t.series == "G":
        # alpha_1 short, alpha_2 long
        a[0, 1] = -3
    a.setflags(write=False)
    return a


def _symmetrizers(a: np.ndarray) -> Tuple[int, ...]:
    """Minimal positive integers d with d_i A[i][j] = d_j A[j][i]."""
    n = a.shape[0]
    d: Dict[int, Fraction] = {0: Fraction(1)}
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and a[i, j] != 0 and j not in d:
                d[j] = d[i] * int(a[i, j]) / int(a[j, i])
                stack.append(j)
    if len(d) != n:
        raise UnsupportedTypeError("Cartan matrix is not connected")
    scale = lcm(*(f.denominator for f in d.values()))
    ints = [int(d[i] * scale) for i in range(n)]
    common = gcd(*ints)
    return tuple(x // common for x in ints)


def reflection_closure(cartan_matrix: np.ndarray, seeds: Iterable[Root]) -> List[Root]:
    """
    Close a set of positive roots under simple reflections, keeping positive images.

    Starting from the simple roots this yields all of Phi+, sorted by height and then by
    descending simple coordinates, so alpha_1 comes first.
    """
    n = cartan_matrix.shape[0]
    found = {tuple(r.simple_coords) for r in seeds}
    frontier = list(found)
    while frontier:
        nxt = []
        for b in frontier:
            vec = np.array(b, dtype=np.int64)
            pairings = cartan_matrix @ vec
            for i in range(n):
                image = list(b)
                image[i] -= int(pairings[i])
                image = tuple(image)
                if all(c >= 0 for c in image) and any(image) and image not in found:
                    found.add(image)
                    nxt.append(image)
        frontier = nxt
    return [Root(b) for b in sorted(found, key=lambda b: (sum(b), tuple(-c for c in b)))]


@dataclass(frozen=True, eq=False)
class RootSystem:
    cartan_type: CartanType
    cartan_matrix: np.ndarray
    symmetrizers: Tuple[int, ...]
    positive_roots: Tuple[Root, ...]

    def __eq__(self, other):
        return isinstance(other, RootSystem) and self.cartan_type == other.cartan_type

    def __hash__(self):
        return hash(self.cartan_type)

    def __str__(self):
        return str(self.cartan_type)

    @property
    def rank(self) -> int:
        return self.cartan_type.rank

    @property
    def num_positive_roots(self) -> int:
        return len(self.positive_roots)

    def check_index(self, i: int) -> int:
        """Validate a 1-based simple index and return the 0-based coordinate."""
        if not isinstance(i, int) or not 1 <= i <= self.rank:
            raise SimpleIndexError(f"simple root index {i!r} outside 1..{self.rank} for {self}")
        return i - 1

    def check_weight(self, lam: Weight) -> Weight:
        if len(lam) != self.rank:
            raise WeightShapeError(f"{self} weights have {self.rank} coordinates, got {len(lam)}")
        return lam

    def simple_root(self, i: int) -> Root:
        k = self.check_index(i)
        return Root(tuple(1 if j == k else 0 for j in range(self.rank)))

    def highest_root(self) -> Root:
        return self.positive_roots[-1]

    def is_root(self, beta: Root) -> bool:
        return beta in self._root_set or -beta in self._root_set

    @functools.cached_property
    def _root_set(self):
        return frozenset(self.positive_roots)

    @functools.cached_property
    def bilinear_form(self) -> np.ndarray:
        """Gram matrix (alpha_i, alpha_j) = d_i A[i][j]; symmetric."""
        form = np.diag(np.array(self.symmetrizers, dtype=np.int64)) @ self.cartan_matrix
        form.setflags(write=False)
        return form

    def inner(self, lam: Weight, beta: Root) -> int:
        """Exact (lambda, beta) = sum_j b_j d_j lambda_j."""
        return sum(b * d * x for b, d, x in zip(beta.simple_coords, self.symmetrizers, lam.fund_coords))

    def norm(self, beta: Root) -> int:
        b = np.array(beta.simple_coords, dtype=np.int64)
        return int(b @ self.bilinear_form @ b)

    def make_weight(self, coords: Sequence[int]) -> Weight:
        coords = tuple(coords)
        if len(coords) != self.rank:
            raise WeightShapeError(f"{self} weights have {self.rank} coordinates, got {len(coords)}")
        return Weight(coords)

    def zero(self) -> Weight:
        return Weight((0,) * self.rank)


@functools.lru_cache(maxsize=None)
def _build(t: CartanType) -> RootSystem:
    a = _cartan_matrix(t)
    d = _symmetrizers(a)
    simple = [Root(tuple(1 if j == i else 0 for j in range(t.rank))) for i in range(t.rank)]
    roots = tuple(reflection_closure(a, simple))
    expected = CLASSICAL_COUNTS[t.series](t.rank)
    assert len(roots) == expected, f"{t}: found {len(roots)} positive roots, expected {expected}"
    logger.debug(f"Built {t}: {len(roots)} positive roots, symmetrizers {d}")
    return RootSystem(cartan_type=t, cartan_matrix=a, symmetrizers=d, positive_roots=roots)


def build_root_system(t: Union[CartanType, str, Tuple[str, int]]) -> RootSystem:
    """
    Construct the root system of a Cartan type.

    Args:
        t: CartanType, or anything parse_cartan_type accepts

    Returns:
        Immutable RootSystem; repeated calls return the same cached object
    """
    return _build(parse_cartan_type(t))


def pairing(rs: RootSystem, lam: Weight, beta: Root) -> int:
    """<lambda, beta^v> = 2(lambda, beta)/(beta, beta), exact."""
    if beta.is_zero:
        raise InvalidRootError("the zero vector is not a root")
    if not rs.is_root(beta):
        raise InvalidRootError(f"{beta} is not a root of {rs}")
    rs.check_weight(lam)
    num = 2 * rs.inner(lam, beta)
    den = rs.norm(beta)
    assert num % den == 0, f"non-integral pairing {num}/{den} for {lam} and {beta}"
    return num // den


def rho(rs: RootSystem) -> Weight:
    return Weight((1,) * rs.rank)


def root_as_weight(rs: RootSystem, beta: Root) -> Weight:
    b = np.array(beta.simple_coords, dtype=np.int64)
    return Weight(tuple(int(x) for x in rs.cartan_matrix @ b))


def simple_root_weight(rs: RootSystem, i: int) -> Weight:
    """alpha_i in fundamental coordinates: column i of the Cartan matrix."""
    k = rs.check_index(i)
    return Weight(tuple(int(x) for x in rs.cartan_matrix[:, k]))

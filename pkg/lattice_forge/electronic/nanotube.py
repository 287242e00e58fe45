"""Single-wall nanotubes rolled from a honeycomb sheet with unit bond length.

Sheet frame: a1 = (sqrt3, 0), a2 = (sqrt3/2, -3/2), an A site at the origin
and its B neighbours at (0, -1), (sqrt3/2, 1/2), (-sqrt3/2, 1/2). Lattice
points are handled in a-basis coordinates with exact fractions; the a-basis
metric is [[3, 3/2], [3/2, 3]].
"""
import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from lattice_forge.surface.discrete_surface import DiscreteSurface
from lattice_forge.utils.errors import InvalidInputError

logger = logging.getLogger(__name__)

A1 = np.array([np.sqrt(3), 0.0])
A2 = np.array([np.sqrt(3) / 2, -1.5])
METRIC = ((Fraction(3), Fraction(3, 2)), (Fraction(3, 2), Fraction(3)))

# B neighbours of an A site, in a-basis coordinates
BOND_OFFSETS = (
    (Fraction(-1, 3), Fraction(2, 3)),
    (Fraction(2, 3), Fraction(-1, 3)),
    (Fraction(-1, 3), Fraction(-1, 3)),
)
B_SITE = BOND_OFFSETS[0]

Point = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class ChiralIndex:
    c1: int
    c2: int
    scale: float = 1.0

    def __post_init__(self):
        if self.c1 <= 0 or self.c2 < 0:
            raise InvalidInputError(f"chiral index needs c1 > 0 and c2 >= 0, got ({self.c1}, {self.c2})")
        if self.scale <= 0:
            raise InvalidInputError(f"scale must be positive, got {self.scale}")

    @property
    def diameter_parameter(self) -> float:
        """L = sqrt(c1^2 + c1 c2 + c2^2)."""
        return math.sqrt(self.c1**2 + self.c1 * self.c2 + self.c2**2)


@dataclass(frozen=True)
class TubeFrame:
    chiral: tuple[int, int]
    translation: tuple[int, int]
    primitive_translation: tuple[int, int]
    chiral_vector: np.ndarray
    translation_vector: np.ndarray
    primitive_translation_vector: np.ndarray
    diameter_parameter: float
    radius: float

    @property
    def circumference(self) -> float:
        return float(np.linalg.norm(self.chiral_vector))


def to_cartesian(coords: Sequence) -> np.ndarray:
    return float(coords[0]) * A1 + float(coords[1]) * A2


def inner_a(u: Sequence, v: Sequence) -> Fraction:
    """Exact inner product of two a-basis vectors."""
    return sum((Fraction(u[i]) * METRIC[i][j] * Fraction(v[j]) for i in range(2) for j in range(2)), Fraction(0))


def tube_frame(ci: ChiralIndex) -> TubeFrame:
    c1, c2 = ci.c1, ci.c2
    g = math.gcd(c1, c2)
    d_r = math.gcd(2 * c1 + c2, c1 + 2 * c2)
    translation = ((c1 + 2 * c2) // g, -(2 * c1 + c2) // g)
    primitive = ((c1 + 2 * c2) // d_r, -(2 * c1 + c2) // d_r)
    if inner_a((c1, c2), translation) != 0:
        raise InvalidInputError(f"translation vector is not orthogonal to the chiral vector for {(c1, c2)}")
    chiral_vector = to_cartesian((c1, c2))
    return TubeFrame(
        chiral=(c1, c2),
        translation=translation,
        primitive_translation=primitive,
        chiral_vector=chiral_vector,
        translation_vector=to_cartesian(translation),
        primitive_translation_vector=to_cartesian(primitive),
        diameter_parameter=ci.diameter_parameter,
        radius=ci.scale * float(np.linalg.norm(chiral_vector)) / (2 * math.pi),
    )


def _det(u: Sequence, v: Sequence) -> Fraction:
    return Fraction(u[0]) * Fraction(v[1]) - Fraction(u[1]) * Fraction(v[0])


def rectangle_coordinates(point: Sequence, c: Sequence, t: Sequence) -> Point:
    """(alpha, beta) with point = alpha c + beta t."""
    area = _det(c, t)
    return _det(point, t) / area, _det(c, point) / area


def region_sites(c: Sequence[int], t: Sequence[int]) -> list[tuple[Point, str]]:
    """A and B sites with 0 <= alpha < 1 and 0 <= beta < 1, in enumeration order."""
    corners = [(0, 0), tuple(c), tuple(t), (c[0] + t[0], c[1] + t[1])]
    lo = [min(p[k] for p in corners) - 1 for k in range(2)]
    hi = [max(p[k] for p in corners) + 1 for k in range(2)]
    sites = []
    for i, j in itertools.product(range(lo[0], hi[0] + 1), range(lo[1], hi[1] + 1)):
        for kind, offset in (("A", (0, 0)), ("B", B_SITE)):
            point = (Fraction(i) + offset[0], Fraction(j) + offset[1])
            alpha, beta = rectangle_coordinates(point, c, t)
            if 0 <= alpha < 1 and 0 <= beta < 1:
                sites.append((point, kind))
    return sites


def fundamental_region_size(ci: ChiralIndex, primitive: bool = True) -> int:
    """Atoms in the rectangle spanned by c and t, by exact lattice point enumeration."""
    frame = tube_frame(ci)
    t = frame.primitive_translation if primitive else frame.translation
    return len(region_sites(frame.chiral, t))


def build_swnt(ci: ChiralIndex, n_periods: int = 1) -> DiscreteSurface:
    """Roll the (c, n t) rectangle into a tube around the z axis.

    Args:
        ci (ChiralIndex): chiral index and scale.
        n_periods (int): primitive translations stacked along the axis.

    Returns:
        DiscreteSurface: periodic along z with lattice row (0, 0, n |t| scale); neighbours
            are counter-clockwise seen from outside the tube.
    """
    if n_periods < 1:
        raise InvalidInputError(f"n_periods must be at least 1, got {n_periods}")
    frame = tube_frame(ci)
    c = frame.chiral
    t_one = frame.primitive_translation
    t = (t_one[0] * n_periods, t_one[1] * n_periods)
    sites = region_sites(c, t)
    index = {point: k for k, (point, _) in enumerate(sites)}

    circumference = ci.scale * frame.circumference
    length = ci.scale * float(np.linalg.norm(to_cartesian(t)))
    r = frame.radius

    positions = np.zeros((len(sites), 3))
    neighbors = []
    for k, (point, kind) in enumerate(sites):
        alpha, beta = rectangle_coordinates(point, c, t)
        angle = 2 * math.pi * float(alpha)
        positions[k] = (r * math.cos(angle), r * math.sin(angle), float(beta) * length)

        sign = 1 if kind == "A" else -1
        entries = []
        for offset in BOND_OFFSETS:
            target = (point[0] + sign * offset[0], point[1] + sign * offset[1])
            t_alpha, t_beta = rectangle_coordinates(target, c, t)
            wrap_alpha, wrap_beta = math.floor(t_alpha), math.floor(t_beta)
            home_alpha, home_beta = t_alpha - wrap_alpha, t_beta - wrap_beta
            home = (
                home_alpha * c[0] + home_beta * t[0],
                home_alpha * c[1] + home_beta * t[1],
            )
            frame_step = (
                float(t_alpha - alpha) * circumference,
                float(t_beta - beta) * length,
            )
            entries.append((index[home], (wrap_beta,), frame_step))
        entries.sort(key=lambda item: math.atan2(item[2][1], item[2][0]))
        neighbors.append(tuple((j, label) for j, label, _ in entries))

    logger.info("SWNT %s: %s atoms, radius %s", c, len(sites), r)
    return DiscreteSurface(
        positions=positions,
        neighbors=tuple(neighbors),
        lattice=np.array([[0.0, 0.0, length]]),
    )


def classify_metallic(ci: ChiralIndex) -> str:
    return "metal" if (ci.c1 - ci.c2) % 3 == 0 else "semiconductor"


def length_index(ci: ChiralIndex, a: Sequence[float], b: Sequence[float]) -> float:
    """sqrt3 |c1 (a1 - b1) - c2 (a2 - b1)| / (2 L) for edge atoms a = (a1, b1), b = (a2, b1)."""
    a1, b1 = a
    a2, b1_other = b
    if b1_other != b1:
        logger.warning("Edge atoms have different second coordinates %s and %s; using %s", b1, b1_other, b1)
    return math.sqrt(3) * abs(ci.c1 * (a1 - b1) - ci.c2 * (a2 - b1)) / (2 * ci.diameter_parameter)

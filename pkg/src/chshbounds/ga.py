"""Geometric algebra over R^3.

Multivectors carry 8 real coefficients over the basis

    1, e1, e2, e3, e12, e13, e23, e123

(scalar | vector | bivector | pseudoscalar).  The geometric product is driven
by the precomputed sign-and-index table in ``chshbounds.tables``, which
encodes e_i e_j + e_j e_i = 2 delta_ij with exact integer signs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from . import _kernels
from .geometry import magnitude as vector_magnitude  # noqa: F401  (re-exported)
from .tables import BLADE_NAMES

__all__ = [
    "Multivector",
    "E1",
    "E2",
    "E3",
    "geometric_product",
    "commutator",
    "vector_magnitude",
]

_GRADE_SLICES = {0: (0,), 1: (1, 2, 3), 2: (4, 5, 6), 3: (7,)}


@dataclass(frozen=True)
class Multivector:
    """Element of the geometric algebra of R^3.

    ``coefficients`` follows the canonical blade order
    (1, e1, e2, e3, e12, e13, e23, e123); all entries must be finite.
    """

    coefficients: tuple[float, ...]

    def __post_init__(self):
        if len(self.coefficients) != 8:
            raise ValueError(
                f"multivector needs exactly 8 coefficients, got {len(self.coefficients)}"
            )
        if not all(math.isfinite(c) for c in self.coefficients):
            raise ValueError(f"non-finite multivector coefficients: {self.coefficients!r}")

    @classmethod
    def from_coefficients(cls, values: Sequence[float]) -> "Multivector":
        return cls(tuple(float(v) for v in values))

    @classmethod
    def scalar(cls, value: float) -> "Multivector":
        return cls((float(value), 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0))

    @classmethod
    def vector(cls, x: float, y: float, z: float) -> "Multivector":
        return cls((0.0, float(x), float(y), float(z), 0.0, 0.0, 0.0, 0.0))

    @classmethod
    def from_vector(cls, v: Sequence[float]) -> "Multivector":
        return cls.vector(v[0], v[1], v[2])

    @property
    def scalar_part(self) -> float:
        return self.coefficients[0]

    def grade(self, k: int) -> "Multivector":
        """Projection onto grade k; grades 0..3 partition the coefficients."""
        if k not in _GRADE_SLICES:
            raise ValueError(f"grade must be one of 0..3, got {k}")
        keep = _GRADE_SLICES[k]
        return Multivector(
            tuple(c if i in keep else 0.0 for i, c in enumerate(self.coefficients))
        )

    def norm(self) -> float:
        """Euclidean norm over the 8 coefficients."""
        return math.sqrt(sum(c * c for c in self.coefficients))

    def max_abs_difference(self, other: "Multivector") -> float:
        return max(abs(x - y) for x, y in zip(self.coefficients, other.coefficients))

    def approx_equal(self, other: "Multivector", tol: float = 1e-12) -> bool:
        return self.max_abs_difference(other) <= tol

    def __add__(self, other: "Multivector") -> "Multivector":
        return Multivector(
            tuple(x + y for x, y in zip(self.coefficients, other.coefficients))
        )

    def __sub__(self, other: "Multivector") -> "Multivector":
        return Multivector(
            tuple(x - y for x, y in zip(self.coefficients, other.coefficients))
        )

    def __neg__(self) -> "Multivector":
        return Multivector(tuple(-x for x in self.coefficients))

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        if isinstance(other, (int, float)):
            return Multivector(tuple(other * c for c in self.coefficients))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return Multivector(tuple(other * c for c in self.coefficients))
        return NotImplemented

    def __str__(self) -> str:
        terms = [
            f"{c:+g}*{name}" if name != "1" else f"{c:+g}"
            for c, name in zip(self.coefficients, BLADE_NAMES)
            if c != 0.0
        ]
        return " ".join(terms) if terms else "0"


E1 = Multivector.vector(1.0, 0.0, 0.0)
E2 = Multivector.vector(0.0, 1.0, 0.0)
E3 = Multivector.vector(0.0, 0.0, 1.0)


def geometric_product(u: Multivector, v: Multivector) -> Multivector:
    """Geometric (Clifford) product of two multivectors.

    Bilinear and associative; for grade-1 inputs the grade-0 part of the
    result is the dot product and the grade-2 part is the wedge product.
    """
    return Multivector(tuple(_kernels.gp8(u.coefficients, v.coefficients)))


def commutator(u: Multivector, v: Multivector) -> Multivector:
    """Commutator uv - vu.

    For unit grade-1 inputs this is twice their wedge bivector: it vanishes
    exactly when the vectors are parallel or antiparallel and is nonzero for
    any other pair, which is the algebraic incompatibility witness used by
    the vector-valued track.
    """
    return geometric_product(u, v) - geometric_product(v, u)

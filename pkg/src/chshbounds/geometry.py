"""Unit vectors in R^3 and measurement-direction configurations.

A configuration is the quadruple of unit directions (a, a', b, b') measured
by the two sides of a correlation experiment, together with the six pairwise
angles derived from their dot products.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from . import rng

Vec3 = tuple[float, float, float]

UNIT_TOLERANCE = 1e-12
ANGLE_TOLERANCE = 1e-12


def as_vector(values: Sequence[float], label: str = "vector") -> Vec3:
    """Coerce a length-3 sequence to a float triple, rejecting non-finite input."""
    if len(values) != 3:
        raise ValueError(f"{label} must have exactly 3 components, got {len(values)}")
    v = (float(values[0]), float(values[1]), float(values[2]))
    if not (math.isfinite(v[0]) and math.isfinite(v[1]) and math.isfinite(v[2])):
        raise ValueError(f"{label} has non-finite components: {v!r}")
    return v


def dot(u: Sequence[float], v: Sequence[float]) -> float:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def add(u: Sequence[float], v: Sequence[float]) -> Vec3:
    return (u[0] + v[0], u[1] + v[1], u[2] + v[2])


def sub(u: Sequence[float], v: Sequence[float]) -> Vec3:
    return (u[0] - v[0], u[1] - v[1], u[2] - v[2])


def scale(v: Sequence[float], factor: float) -> Vec3:
    return (factor * v[0], factor * v[1], factor * v[2])


def negate(v: Sequence[float]) -> Vec3:
    return (-v[0], -v[1], -v[2])


def cross(u: Sequence[float], v: Sequence[float]) -> Vec3:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def magnitude(v: Sequence[float]) -> float:
    """Euclidean length of a 3-vector."""
    return math.sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2])


def normalized(v: Sequence[float]) -> Vec3:
    m = magnitude(v)
    if m == 0.0:
        raise ValueError("cannot normalize the zero vector")
    return (v[0] / m, v[1] / m, v[2] / m)


def unit_deviation(v: Sequence[float]) -> float:
    """Absolute deviation of |v| from 1."""
    return abs(magnitude(v) - 1.0)


def require_unit(v: Sequence[float], tol: float = UNIT_TOLERANCE, label: str = "vector") -> Vec3:
    u = as_vector(v, label)
    deviation = unit_deviation(u)
    if deviation > tol:
        raise ValueError(
            f"{label} must be a unit vector: |norm - 1| = {deviation:.3e} exceeds {tol:.1e}"
        )
    return u


def angle_between(u: Sequence[float], v: Sequence[float]) -> float:
    """Angle in [0, pi] between two unit vectors (dot product clamped before acos)."""
    d = dot(u, v)
    if d > 1.0:
        d = 1.0
    elif d < -1.0:
        d = -1.0
    return math.acos(d)


def planar_vector(angle_rad: float) -> Vec3:
    """Unit vector at the given angle in the e1-e2 plane."""
    return (math.cos(angle_rad), math.sin(angle_rad), 0.0)


def spherical_vector(polar: float, azimuth: float) -> Vec3:
    """Unit vector from spherical angles: polar from +e3, azimuth from +e1."""
    sp = math.sin(polar)
    return (sp * math.cos(azimuth), sp * math.sin(azimuth), math.cos(polar))


@dataclass(frozen=True)
class Configuration:
    """Measurement directions a, a', b, b' plus their derived pairwise angles.

    All four vectors must be unit to within 1e-12 and every stored angle must
    agree with the arccosine of the corresponding dot product; construct via
    :meth:`from_vectors` or :meth:`coplanar` rather than by hand.
    """

    a: Vec3
    a_prime: Vec3
    b: Vec3
    b_prime: Vec3
    theta_a_aprime: float
    theta_b_bprime: float
    theta_aprime_bprime: float
    theta_a_b: float
    theta_a_bprime: float
    theta_aprime_b: float

    def __post_init__(self):
        for label, v in (
            ("a", self.a),
            ("a_prime", self.a_prime),
            ("b", self.b),
            ("b_prime", self.b_prime),
        ):
            require_unit(v, UNIT_TOLERANCE, label)
        for label, stored, u, v in (
            ("theta_a_aprime", self.theta_a_aprime, self.a, self.a_prime),
            ("theta_b_bprime", self.theta_b_bprime, self.b, self.b_prime),
            ("theta_aprime_bprime", self.theta_aprime_bprime, self.a_prime, self.b_prime),
            ("theta_a_b", self.theta_a_b, self.a, self.b),
            ("theta_a_bprime", self.theta_a_bprime, self.a, self.b_prime),
            ("theta_aprime_b", self.theta_aprime_b, self.a_prime, self.b),
        ):
            if abs(stored - angle_between(u, v)) > ANGLE_TOLERANCE:
                raise ValueError(f"{label} is inconsistent with its vectors")

    @classmethod
    def from_vectors(
        cls,
        a: Sequence[float],
        a_prime: Sequence[float],
        b: Sequence[float],
        b_prime: Sequence[float],
    ) -> "Configuration":
        va = require_unit(a, UNIT_TOLERANCE, "a")
        vap = require_unit(a_prime, UNIT_TOLERANCE, "a_prime")
        vb = require_unit(b, UNIT_TOLERANCE, "b")
        vbp = require_unit(b_prime, UNIT_TOLERANCE, "b_prime")
        return cls(
            a=va,
            a_prime=vap,
            b=vb,
            b_prime=vbp,
            theta_a_aprime=angle_between(va, vap),
            theta_b_bprime=angle_between(vb, vbp),
            theta_aprime_bprime=angle_between(vap, vbp),
            theta_a_b=angle_between(va, vb),
            theta_a_bprime=angle_between(va, vbp),
            theta_aprime_b=angle_between(vap, vb),
        )

    @classmethod
    def coplanar(
        cls, phi_a: float, phi_aprime: float, phi_b: float, phi_bprime: float
    ) -> "Configuration":
        """Configuration with all four vectors in the e1-e2 plane, angles in radians."""
        return cls.from_vectors(
            planar_vector(phi_a),
            planar_vector(phi_aprime),
            planar_vector(phi_b),
            planar_vector(phi_bprime),
        )

    def vectors(self) -> tuple[Vec3, Vec3, Vec3, Vec3]:
        return (self.a, self.a_prime, self.b, self.b_prime)


def canonical_configuration() -> Configuration:
    """The maximizing configuration: a = e1, a' = e2, b and b' diagonal in-plane.

    b = -(e1 + e2)/sqrt(2) and b' = (-e1 + e2)/sqrt(2), so that the angles
    satisfy ang(a, a') = ang(b, b') = pi/2 and ang(a', b') = pi/4, b + b' =
    -sqrt(2) e1, and b - b' = -sqrt(2) e2.  Both the quantum and the
    vector-valued CHSH expressions attain 2*sqrt(2) here.
    """
    h = math.sqrt(0.5)
    return Configuration.from_vectors(
        (1.0, 0.0, 0.0),
        (0.0, 1.0, 0.0),
        (-h, -h, 0.0),
        (-h, h, 0.0),
    )


def random_unit_vector(seed: int, index: int) -> Vec3:
    """Uniformly distributed unit vector, pure in (seed, index)."""
    return rng.unit_vector_draw(seed, index)


def random_configuration(seed: int, index: int) -> Configuration:
    """The ``index``-th random measurement configuration of stream ``seed``.

    Each configuration draws its four directions from an independent
    sub-stream, so configurations can be generated in any order.
    """
    sub = rng.derive_seed(seed, index)
    return Configuration.from_vectors(
        rng.unit_vector_draw(sub, 0),
        rng.unit_vector_draw(sub, 1),
        rng.unit_vector_draw(sub, 2),
        rng.unit_vector_draw(sub, 3),
    )

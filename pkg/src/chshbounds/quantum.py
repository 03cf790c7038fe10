"""Two-qubit Hilbert-space machinery.

Spin operators sigma . a, tensor products, singlet-state expectations, the
CHSH operator

    B = A (x) B + A (x) B' + A' (x) B - A' (x) B',

the operator identity B^2 = 4*I - C with C = [A, A'] (x) [B, B'], and the
spectral norms that establish the 2*sqrt(2) ceiling.

Conventions: computational basis ordered |00>, |01>, |10>, |11> with the left
tensor factor as side A; Pauli matrices sigma_x = [[0, 1], [1, 0]],
sigma_y = [[0, -i], [i, 0]], sigma_z = [[1, 0], [0, -1]].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from . import _kernels
from .geometry import Configuration, Vec3, dot, require_unit

__all__ = [
    "ComplexMatrix",
    "PAULI_X",
    "PAULI_Y",
    "PAULI_Z",
    "IDENTITY_2",
    "spin_operator",
    "tensor_product",
    "commutator_matrix",
    "singlet_state",
    "singlet_correlation",
    "singlet_correlation_closed_form",
    "chsh_operator",
    "chsh_squared_identity_deviation",
    "cross_commutator_residual",
    "operator_norm",
    "chsh_quantum_value",
    "TSIRELSON_BOUND",
]

TSIRELSON_BOUND = 2.0 * math.sqrt(2.0)

SPIN_UNIT_TOLERANCE = 1e-9
IMAG_RESIDUE_TOLERANCE = 1e-9
HERMITIAN_TOLERANCE = 1e-12


@dataclass(frozen=True)
class ComplexMatrix:
    """Dense square complex matrix, entries flat row-major."""

    dim: int
    entries: tuple[complex, ...]

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("matrix dimension must be positive")
        if len(self.entries) != self.dim * self.dim:
            raise ValueError(
                f"{self.dim}x{self.dim} matrix needs {self.dim * self.dim} entries, "
                f"got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[complex]]) -> "ComplexMatrix":
        dim = len(rows)
        return cls(dim, tuple(complex(v) for row in rows for v in row))

    @classmethod
    def identity(cls, dim: int) -> "ComplexMatrix":
        return cls(dim, tuple(1 + 0j if i == j else 0j for i in range(dim) for j in range(dim)))

    def entry(self, i: int, j: int) -> complex:
        return self.entries[i * self.dim + j]

    def dagger(self) -> "ComplexMatrix":
        n = self.dim
        return ComplexMatrix(
            n, tuple(self.entries[j * n + i].conjugate() for i in range(n) for j in range(n))
        )

    def is_hermitian(self, tol: float = HERMITIAN_TOLERANCE) -> bool:
        return self.max_abs_difference(self.dagger()) <= tol

    def max_abs_entry(self) -> float:
        return max(abs(v) for v in self.entries)

    def max_abs_difference(self, other: "ComplexMatrix") -> float:
        self._require_same_dim(other)
        return max(abs(x - y) for x, y in zip(self.entries, other.entries))

    def _require_same_dim(self, other: "ComplexMatrix") -> None:
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other: "ComplexMatrix") -> "ComplexMatrix":
        self._require_same_dim(other)
        return ComplexMatrix(self.dim, tuple(x + y for x, y in zip(self.entries, other.entries)))

    def __sub__(self, other: "ComplexMatrix") -> "ComplexMatrix":
        self._require_same_dim(other)
        return ComplexMatrix(self.dim, tuple(x - y for x, y in zip(self.entries, other.entries)))

    def __mul__(self, scalar):
        if isinstance(scalar, (int, float, complex)):
            return ComplexMatrix(self.dim, tuple(scalar * v for v in self.entries))
        return NotImplemented

    __rmul__ = __mul__

    def __matmul__(self, other: "ComplexMatrix") -> "ComplexMatrix":
        self._require_same_dim(other)
        return ComplexMatrix(
            self.dim, tuple(_kernels.matmul(self.entries, other.entries, self.dim))
        )

    def expectation(self, state: Sequence[complex]) -> complex:
        if len(state) != self.dim:
            raise ValueError(f"state has length {len(state)}, expected {self.dim}")
        return _kernels.expectation(self.entries, tuple(state), self.dim)


PAULI_X = ComplexMatrix(2, (0j, 1 + 0j, 1 + 0j, 0j))
PAULI_Y = ComplexMatrix(2, (0j, -1j, 1j, 0j))
PAULI_Z = ComplexMatrix(2, (1 + 0j, 0j, 0j, -1 + 0j))
IDENTITY_2 = ComplexMatrix.identity(2)

# Singlet amplitudes (|01> - |10>)/sqrt(2) in the fixed basis order.
_SINGLET = (0j, complex(math.sqrt(0.5), 0.0), complex(-math.sqrt(0.5), 0.0), 0j)


def spin_operator(direction: Sequence[float]) -> ComplexMatrix:
    """Spin component along ``direction``: d_x sigma_x + d_y sigma_y + d_z sigma_z.

    Hermitian and traceless with eigenvalues +/-1, hence operator norm 1.
    Non-unit directions are rejected (deviation above 1e-9) rather than
    silently normalized, because norm-1 observables are what the 2*sqrt(2)
    ceiling assumes.
    """
    d = require_unit(direction, SPIN_UNIT_TOLERANCE, "spin direction")
    return ComplexMatrix(2, tuple(_kernels.spin_matrix(d[0], d[1], d[2])))


def tensor_product(left: ComplexMatrix, right: ComplexMatrix) -> ComplexMatrix:
    """Kronecker product of two 2x2 matrices (left factor acts on side A)."""
    if left.dim != 2 or right.dim != 2:
        raise ValueError(
            f"tensor_product expects two 2x2 matrices, got {left.dim}x{left.dim} "
            f"and {right.dim}x{right.dim}"
        )
    return ComplexMatrix(4, tuple(_kernels.kron2(left.entries, right.entries)))


def commutator_matrix(x: ComplexMatrix, y: ComplexMatrix) -> ComplexMatrix:
    """Matrix commutator [X, Y] = XY - YX."""
    return (x @ y) - (y @ x)


def singlet_state() -> tuple[complex, complex, complex, complex]:
    """Amplitudes of the two-qubit singlet (|01> - |10>)/sqrt(2)."""
    return _SINGLET


def _correlation_from_vectors(a: Vec3, b: Vec3) -> float:
    """Singlet expectation of (sigma.a)(x)(sigma.b); no input validation."""
    sa = _kernels.spin_matrix(a[0], a[1], a[2])
    sb = _kernels.spin_matrix(b[0], b[1], b[2])
    joint = _kernels.kron2(sa, sb)
    value = _kernels.expectation(joint, _SINGLET, 4)
    if abs(value.imag) > IMAG_RESIDUE_TOLERANCE:
        raise RuntimeError(
            "singlet expectation of a Hermitian observable has imaginary residue "
            f"{value.imag:.3e}; the operator pipeline is broken"
        )
    return value.real


def singlet_correlation(a: Sequence[float], b: Sequence[float]) -> float:
    """Correlation <psi|(sigma.a)(x)(sigma.b)|psi> in the singlet, by matrix contraction.

    Equals -a.b; the closed form is kept separate as an independent oracle.
    The imaginary residue of the contraction is checked (must not exceed
    1e-9) and discarded.
    """
    ua = require_unit(a, SPIN_UNIT_TOLERANCE, "a")
    ub = require_unit(b, SPIN_UNIT_TOLERANCE, "b")
    return _correlation_from_vectors(ua, ub)


def singlet_correlation_closed_form(a: Sequence[float], b: Sequence[float]) -> float:
    """Closed-form singlet correlation -a.b = -cos(angle between a and b)."""
    ua = require_unit(a, SPIN_UNIT_TOLERANCE, "a")
    ub = require_unit(b, SPIN_UNIT_TOLERANCE, "b")
    return -dot(ua, ub)


def _spin4(v: Vec3, side: str) -> ComplexMatrix:
    """(sigma.v) acting on one tensor factor, embedded in the joint space."""
    s = ComplexMatrix(2, tuple(_kernels.spin_matrix(v[0], v[1], v[2])))
    if side == "A":
        return tensor_product(s, IDENTITY_2)
    return tensor_product(IDENTITY_2, s)


def chsh_operator(cfg: Configuration) -> ComplexMatrix:
    """The CHSH operator A(x)B + A(x)B' + A'(x)B - A'(x)B' on the joint space."""
    sa = ComplexMatrix(2, tuple(_kernels.spin_matrix(*cfg.a)))
    sap = ComplexMatrix(2, tuple(_kernels.spin_matrix(*cfg.a_prime)))
    sb = ComplexMatrix(2, tuple(_kernels.spin_matrix(*cfg.b)))
    sbp = ComplexMatrix(2, tuple(_kernels.spin_matrix(*cfg.b_prime)))
    return (
        tensor_product(sa, sb)
        + tensor_product(sa, sbp)
        + tensor_product(sap, sb)
        - tensor_product(sap, sbp)
    )


def chsh_squared_identity_deviation(cfg: Configuration) -> float:
    """Max elementwise deviation of B^2 from 4*I - C, C = [A, A'] (x) [B, B'].

    Both sides are assembled independently as 4x4 matrices.  The commutator
    factors act on different tensor slots, which is what lets C be formed as
    a single Kronecker product; :func:`cross_commutator_residual` checks that
    premise numerically.
    """
    residual = cross_commutator_residual(cfg)
    if residual > 1e-12:
        raise RuntimeError(
            f"cross-factor commutators do not vanish (max entry {residual:.3e}); "
            "the tensor assembly is broken"
        )
    op = chsh_operator(cfg)
    squared = op @ op
    sa = ComplexMatrix(2, tuple(_kernels.spin_matrix(*cfg.a)))
    sap = ComplexMatrix(2, tuple(_kernels.spin_matrix(*cfg.a_prime)))
    sb = ComplexMatrix(2, tuple(_kernels.spin_matrix(*cfg.b)))
    sbp = ComplexMatrix(2, tuple(_kernels.spin_matrix(*cfg.b_prime)))
    c_joint = tensor_product(commutator_matrix(sa, sap), commutator_matrix(sb, sbp))
    rhs = ComplexMatrix.identity(4) * 4.0 - c_joint
    return squared.max_abs_difference(rhs)


def cross_commutator_residual(cfg: Configuration) -> float:
    """Largest entry of any cross-factor commutator [X (x) I, I (x) Y].

    Exactly zero in exact arithmetic for every pair drawn from
    {A, A'} x {B, B'}; returns the numerical maximum over the four pairs.
    """
    a_ops = [_spin4(cfg.a, "A"), _spin4(cfg.a_prime, "A")]
    b_ops = [_spin4(cfg.b, "B"), _spin4(cfg.b_prime, "B")]
    residual = 0.0
    for x in a_ops:
        for y in b_ops:
            residual = max(residual, commutator_matrix(x, y).max_abs_entry())
    return residual


def operator_norm(m: ComplexMatrix) -> float:
    """Spectral norm via the Jacobi eigensolver.

    Hermitian input (within 1e-12): the largest absolute eigenvalue.
    General input: sqrt of the largest eigenvalue of M-dagger M.
    Raises RuntimeError if the eigensolver fails to converge.
    """
    if m.is_hermitian():
        eigs = _kernels.eigvals_hermitian(m.entries, m.dim)
        return max(abs(eigs[0]), abs(eigs[-1]))
    gram = m.dagger() @ m
    eigs = _kernels.eigvals_hermitian(gram.entries, gram.dim)
    return math.sqrt(max(0.0, eigs[-1]))


def _chsh_value_from_vectors(a: Vec3, ap: Vec3, b: Vec3, bp: Vec3) -> float:
    """|corr(a,b) + corr(a,b') + corr(a',b) - corr(a',b')|; no validation."""
    return abs(
        _correlation_from_vectors(a, b)
        + _correlation_from_vectors(a, bp)
        + _correlation_from_vectors(ap, b)
        - _correlation_from_vectors(ap, bp)
    )


def chsh_quantum_value(cfg: Configuration) -> float:
    """Absolute value of the four-term singlet correlation combination.

    Computed through the full matrix pipeline (spin operators, Kronecker
    products, singlet expectations); bounded by 2*sqrt(2) for every
    configuration and attains it at :func:`canonical_configuration`.
    """
    return _chsh_value_from_vectors(cfg.a, cfg.a_prime, cfg.b, cfg.b_prime)

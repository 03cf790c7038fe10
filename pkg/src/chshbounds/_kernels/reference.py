"""Pure-Python compute kernels.

Reference implementations of every hot numerical loop in the package: the
geometric product, small complex-matrix algebra, the cyclic Jacobi
eigensolver, the counter-based random stream, and the Monte Carlo
accumulator.  The optional compiled module ``chshbounds._kernels._native``
mirrors each function operation-for-operation so that both backends produce
bit-identical results on the same machine; keep the two files in sync.

Conventions shared by both backends:

* multivectors are sequences of 8 floats in the blade order of
  ``chshbounds.tables``;
* matrices are flat row-major sequences of complex numbers;
* complex magnitudes are computed as sqrt(re*re + im*im) and complex/real
  division is done componentwise, because library ``abs``/``/`` semantics
  differ between C and CPython at the bit level.
"""

from __future__ import annotations

import math

from ..tables import PRODUCT_SIGNS, PRODUCT_TARGETS

BACKEND_NAME = "python"

_MASK64 = (1 << 64) - 1
_GOLDEN_GAMMA = 0x9E3779B97F4A7C15
_MIX_MULT_1 = 0xBF58476D1CE4E5B9
_MIX_MULT_2 = 0x94D049BB133111EB
_INV_2_53 = 2.0 ** -53


def rng_u64(seed: int, index: int) -> int:
    """Return draw ``index`` of the stream ``seed`` as a 64-bit integer.

    SplitMix64 finalizer applied to seed + (index+1) * golden gamma; a pure
    function of its arguments, so any draw can be generated independently.
    """
    z = (seed + (index + 1) * _GOLDEN_GAMMA) & _MASK64
    z = ((z ^ (z >> 30)) * _MIX_MULT_1) & _MASK64
    z = ((z ^ (z >> 27)) * _MIX_MULT_2) & _MASK64
    return (z ^ (z >> 31)) & _MASK64


def rng_u01(seed: int, index: int) -> float:
    """Return draw ``index`` of the stream ``seed``, uniform on [0, 1)."""
    return (rng_u64(seed, index) >> 11) * _INV_2_53


def gp8(u, v):
    """Geometric product of two 8-coefficient multivectors."""
    out = [0.0] * 8
    signs = PRODUCT_SIGNS
    targets = PRODUCT_TARGETS
    k = 0
    for i in range(8):
        ui = u[i]
        for j in range(8):
            out[targets[k]] += signs[k] * ui * v[j]
            k += 1
    return out


def spin_matrix(x: float, y: float, z: float):
    """Flat 2x2 matrix x*sigma_x + y*sigma_y + z*sigma_z."""
    return [complex(z, 0.0), complex(x, -y), complex(x, y), complex(-z, 0.0)]


def kron2(a, b):
    """Kronecker product of two flat 2x2 matrices as a flat 4x4 matrix."""
    out = [0j] * 16
    for i in range(2):
        for j in range(2):
            aij = a[2 * i + j]
            for k in range(2):
                for m in range(2):
                    out[(2 * i + k) * 4 + (2 * j + m)] = aij * b[2 * k + m]
    return out


def matmul(a, b, n: int):
    """Product of two flat n x n complex matrices."""
    out = [0j] * (n * n)
    for i in range(n):
        for j in range(n):
            acc = 0j
            for k in range(n):
                acc = acc + a[i * n + k] * b[k * n + j]
            out[i * n + j] = acc
    return out


def expectation(m, psi, n: int) -> complex:
    """Quadratic form <psi| M |psi> for a flat n x n matrix."""
    total = 0j
    for i in range(n):
        row = 0j
        for j in range(n):
            row = row + m[i * n + j] * psi[j]
        total = total + psi[i].conjugate() * row
    return total


def eigvals_hermitian(entries, n: int, tol: float = 1e-14, max_sweeps: int = 100):
    """Eigenvalues of a flat n x n complex Hermitian matrix, ascending.

    Cyclic Jacobi rotations: each pivot (p, q) is phase-reduced to a real
    off-diagonal entry and annihilated by a plane rotation with
    tan(2*theta) = 2|a_pq| / (a_pp - a_qq).  Convergence is declared when the
    off-diagonal Frobenius mass falls below ``tol``; exceeding ``max_sweeps``
    raises RuntimeError.
    """
    a = [complex(value) for value in entries]
    for sweep in range(max_sweeps + 1):
        off = 0.0
        for p in range(n):
            for q in range(n):
                if p != q:
                    z = a[p * n + q]
                    off += z.real * z.real + z.imag * z.imag
        if math.sqrt(off) < tol:
            return sorted(a[i * n + i].real for i in range(n))
        if sweep == max_sweeps:
            raise RuntimeError(
                "jacobi eigensolver failed to converge within %d sweeps" % max_sweeps
            )
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p * n + q]
                g = math.sqrt(apq.real * apq.real + apq.imag * apq.imag)
                if g == 0.0:
                    continue
                theta = 0.5 * math.atan2(2.0 * g, a[p * n + p].real - a[q * n + q].real)
                c = math.cos(theta)
                s = math.sin(theta)
                phase = complex(apq.real / g, apq.imag / g)
                phase_conj = phase.conjugate()
                for k in range(n):
                    akp = a[k * n + p]
                    akq = a[k * n + q]
                    a[k * n + p] = c * akp + s * (phase_conj * akq)
                    a[k * n + q] = -s * akp + c * (phase_conj * akq)
                for k in range(n):
                    apk = a[p * n + k]
                    aqk = a[q * n + k]
                    a[p * n + k] = c * apk + s * (phase * aqk)
                    a[q * n + k] = -s * apk + c * (phase * aqk)
    raise AssertionError("unreachable")


def lhv_mc_sums(cum_weights, products, seed: int, start: int, stop: int):
    """Accumulate Monte Carlo sums for a finite hidden-state mixture.

    For each draw index in [start, stop) one uniform variate selects a hidden
    state by inverse CDF over ``cum_weights``; ``products`` holds the four
    per-state response products, flattened.  Returns the four product sums
    followed by the four sums of squares, accumulated in index order so the
    result is independent of how callers partition the index range.
    """
    nstates = len(cum_weights)
    s1 = s2 = s3 = s4 = 0.0
    q1 = q2 = q3 = q4 = 0.0
    for i in range(start, stop):
        u = rng_u01(seed, i)
        k = nstates - 1
        for j in range(nstates):
            if u < cum_weights[j]:
                k = j
                break
        base = 4 * k
        p1 = products[base]
        p2 = products[base + 1]
        p3 = products[base + 2]
        p4 = products[base + 3]
        s1 += p1
        s2 += p2
        s3 += p3
        s4 += p4
        q1 += p1 * p1
        q2 += p2 * p2
        q3 += p3 * p3
        q4 += p4 * p4
    return (s1, s2, s3, s4, q1, q2, q3, q4)

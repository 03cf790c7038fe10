# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Native compute kernels.

Compiled mirror of ``chshbounds._kernels.reference``: same functions, same
operation order, same complex-arithmetic conventions, so both backends
produce bit-identical values (up to the sign of floating-point zeros) on the
same machine.  Any change here must be applied to the reference module too.
"""

from libc.math cimport atan2, cos, sin, sqrt
from libc.stdlib cimport free, malloc

from ..tables import PRODUCT_SIGNS, PRODUCT_TARGETS

BACKEND_NAME = "native"

cdef double _INV_2_53 = 1.0 / 9007199254740992.0
cdef unsigned long long _GOLDEN_GAMMA = 0x9E3779B97F4A7C15ULL
cdef unsigned long long _MIX_MULT_1 = 0xBF58476D1CE4E5B9ULL
cdef unsigned long long _MIX_MULT_2 = 0x94D049BB133111EBULL

cdef int _SIGNS[64]
cdef int _TARGETS[64]
for _k in range(64):
    _SIGNS[_k] = PRODUCT_SIGNS[_k]
    _TARGETS[_k] = PRODUCT_TARGETS[_k]


cdef inline unsigned long long _raw64(unsigned long long seed,
                                      unsigned long long index) nogil:
    cdef unsigned long long z = seed + (index + 1) * _GOLDEN_GAMMA
    z = (z ^ (z >> 30)) * _MIX_MULT_1
    z = (z ^ (z >> 27)) * _MIX_MULT_2
    return z ^ (z >> 31)


cdef inline double _u01(unsigned long long seed, unsigned long long index) nogil:
    return <double>(_raw64(seed, index) >> 11) * _INV_2_53


def rng_u64(seed, index):
    """Return draw ``index`` of the stream ``seed`` as a 64-bit integer."""
    return _raw64(seed, index)


def rng_u01(seed, index):
    """Return draw ``index`` of the stream ``seed``, uniform on [0, 1)."""
    return _u01(seed, index)


def gp8(u, v):
    """Geometric product of two 8-coefficient multivectors."""
    cdef double uu[8]
    cdef double vv[8]
    cdef double out[8]
    cdef int i, j, k
    for i in range(8):
        uu[i] = u[i]
        vv[i] = v[i]
        out[i] = 0.0
    k = 0
    for i in range(8):
        for j in range(8):
            out[_TARGETS[k]] += _SIGNS[k] * uu[i] * vv[j]
            k += 1
    return [out[0], out[1], out[2], out[3], out[4], out[5], out[6], out[7]]


def spin_matrix(double x, double y, double z):
    """Flat 2x2 matrix x*sigma_x + y*sigma_y + z*sigma_z."""
    return [complex(z, 0.0), complex(x, -y), complex(x, y), complex(-z, 0.0)]


def kron2(a, b):
    """Kronecker product of two flat 2x2 matrices as a flat 4x4 matrix."""
    cdef double complex aa[4]
    cdef double complex bb[4]
    cdef double complex out[16]
    cdef double complex aij
    cdef int i, j, k, m
    for i in range(4):
        aa[i] = a[i]
        bb[i] = b[i]
    for i in range(2):
        for j in range(2):
            aij = aa[2 * i + j]
            for k in range(2):
                for m in range(2):
                    out[(2 * i + k) * 4 + (2 * j + m)] = aij * bb[2 * k + m]
    return [out[i] for i in range(16)]


def matmul(a, b, int n):
    """Product of two flat n x n complex matrices."""
    cdef int size = n * n
    cdef double complex *aa = <double complex *>malloc(3 * size * sizeof(double complex))
    if aa == NULL:
        raise MemoryError()
    cdef double complex *bb = aa + size
    cdef double complex *out = aa + 2 * size
    cdef double complex acc
    cdef int i, j, k
    try:
        for i in range(size):
            aa[i] = a[i]
            bb[i] = b[i]
        for i in range(n):
            for j in range(n):
                acc = 0
                for k in range(n):
                    acc = acc + aa[i * n + k] * bb[k * n + j]
                out[i * n + j] = acc
        return [out[i] for i in range(size)]
    finally:
        free(aa)


def expectation(m, psi, int n):
    """Quadratic form <psi| M |psi> for a flat n x n matrix."""
    cdef double complex *mm = <double complex *>malloc((n * n + n) * sizeof(double complex))
    if mm == NULL:
        raise MemoryError()
    cdef double complex *pp = mm + n * n
    cdef double complex total, row
    cdef int i, j
    try:
        for i in range(n * n):
            mm[i] = m[i]
        for i in range(n):
            pp[i] = psi[i]
        total = 0
        for i in range(n):
            row = 0
            for j in range(n):
                row = row + mm[i * n + j] * pp[j]
            total = total + pp[i].conjugate() * row
        return complex(total.real, total.imag)
    finally:
        free(mm)


def eigvals_hermitian(entries, int n, double tol=1e-14, int max_sweeps=100):
    """Eigenvalues of a flat n x n complex Hermitian matrix, ascending.

    Same cyclic Jacobi scheme as the reference backend; see that module for
    the rotation conventions.
    """
    cdef double complex *a = <double complex *>malloc(n * n * sizeof(double complex))
    if a == NULL:
        raise MemoryError()
    cdef double complex apq, phase, phase_conj, akp, akq, apk, aqk, cz, sz, nsz
    cdef double off, g, theta, c, s
    cdef int sweep, p, q, k
    try:
        for k in range(n * n):
            a[k] = entries[k]
        for sweep in range(max_sweeps + 1):
            off = 0.0
            for p in range(n):
                for q in range(n):
                    if p != q:
                        off += a[p * n + q].real * a[p * n + q].real \
                            + a[p * n + q].imag * a[p * n + q].imag
            if sqrt(off) < tol:
                diag = [a[p * n + p].real for p in range(n)]
                diag.sort()
                return diag
            if sweep == max_sweeps:
                raise RuntimeError(
                    "jacobi eigensolver failed to converge within %d sweeps" % max_sweeps
                )
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[p * n + q]
                    g = sqrt(apq.real * apq.real + apq.imag * apq.imag)
                    if g == 0.0:
                        continue
                    theta = 0.5 * atan2(2.0 * g, a[p * n + p].real - a[q * n + q].real)
                    c = cos(theta)
                    s = sin(theta)
                    phase = complex(apq.real / g, apq.imag / g)
                    phase_conj = phase.conjugate()
                    cz = c
                    sz = s
                    nsz = -s
                    for k in range(n):
                        akp = a[k * n + p]
                        akq = a[k * n + q]
                        a[k * n + p] = cz * akp + sz * (phase_conj * akq)
                        a[k * n + q] = nsz * akp + cz * (phase_conj * akq)
                    for k in range(n):
                        apk = a[p * n + k]
                        aqk = a[q * n + k]
                        a[p * n + k] = cz * apk + sz * (phase * aqk)
                        a[q * n + k] = nsz * apk + cz * (phase * aqk)
        raise AssertionError("unreachable")
    finally:
        free(a)


def lhv_mc_sums(cum_weights, products, seed, start, stop):
    """Accumulate Monte Carlo sums for a finite hidden-state mixture.

    Mirrors the reference backend: one uniform draw per index selects a
    hidden state by inverse CDF; returns four product sums then four sums of
    squares, accumulated in index order.
    """
    cdef int nstates = len(cum_weights)
    cdef double *cw = <double *>malloc(nstates * (1 + 4) * sizeof(double))
    if cw == NULL:
        raise MemoryError()
    cdef double *pr = cw + nstates
    cdef unsigned long long sd = seed
    cdef unsigned long long lo = start
    cdef unsigned long long hi = stop
    cdef unsigned long long i
    cdef double u, p1, p2, p3, p4
    cdef double s1 = 0.0, s2 = 0.0, s3 = 0.0, s4 = 0.0
    cdef double q1 = 0.0, q2 = 0.0, q3 = 0.0, q4 = 0.0
    cdef int j, k, base
    try:
        for j in range(nstates):
            cw[j] = cum_weights[j]
        for j in range(4 * nstates):
            pr[j] = products[j]
        for i in range(lo, hi):
            u = _u01(sd, i)
            k = nstates - 1
            for j in range(nstates):
                if u < cw[j]:
                    k = j
                    break
            base = 4 * k
            p1 = pr[base]
            p2 = pr[base + 1]
            p3 = pr[base + 2]
            p4 = pr[base + 3]
            s1 += p1
            s2 += p2
            s3 += p3
            s4 += p4
            q1 += p1 * p1
            q2 += p2 * p2
            q3 += p3 * p3
            q4 += p4 * p4
        return (s1, s2, s3, s4, q1, q2, q3, q4)
    finally:
        free(cw)

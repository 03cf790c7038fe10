"""Backend parity: the compiled kernels must match the pure-Python reference
bit for bit on real outputs (complex outputs may differ only in zero signs)."""

import numpy as np
import pytest

from chshbounds import _kernels, rng
from chshbounds._kernels import reference

native = pytest.importorskip("chshbounds._kernels._native")


def _rand_mv(stream):
    return [stream.uniform(-2.0, 2.0) for _ in range(8)]


def _rand_complex_matrix(stream, n):
    return [complex(stream.uniform(-1, 1), stream.uniform(-1, 1)) for _ in range(n * n)]


def _rand_hermitian(stream, n):
    m = np.array(_rand_complex_matrix(stream, n)).reshape(n, n)
    h = (m + m.conj().T) / 2
    return [complex(x) for x in h.reshape(-1)]


def test_backend_names():
    assert reference.BACKEND_NAME == "python"
    assert native.BACKEND_NAME == "native"
    assert set(_kernels.available_backends()) == {"python", "native"}


def test_rng_bitwise_identical():
    for seed in (0, 1, 2**63, 2**64 - 1):
        for index in (0, 1, 17, 10**6):
            assert native.rng_u64(seed, index) == reference.rng_u64(seed, index)
            assert native.rng_u01(seed, index) == reference.rng_u01(seed, index)


def test_gp8_bitwise_identical():
    s = rng.CounterStream(1)
    for _ in range(200):
        u = _rand_mv(s)
        v = _rand_mv(s)
        assert native.gp8(u, v) == reference.gp8(u, v)


def test_spin_matrix_identical():
    s = rng.CounterStream(2)
    for _ in range(50):
        x, y, z = s.uniform(-1, 1), s.uniform(-1, 1), s.uniform(-1, 1)
        assert native.spin_matrix(x, y, z) == reference.spin_matrix(x, y, z)


def _assert_same_complex(a, b):
    assert len(a) == len(b)
    for x, y in zip(a, b):
        assert x == y  # -0.0 == 0.0, so zero-sign differences pass


def test_kron2_matches_reference_and_numpy():
    s = rng.CounterStream(10)
    for _ in range(50):
        a = _rand_complex_matrix(s, 2)
        b = _rand_complex_matrix(s, 2)
        _assert_same_complex(native.kron2(a, b), reference.kron2(a, b))
        expected = np.kron(np.array(a).reshape(2, 2), np.array(b).reshape(2, 2))
        got = np.array(reference.kron2(a, b)).reshape(4, 4)
        assert np.max(np.abs(got - expected)) < 1e-14


def test_matmul_matches_reference_and_numpy():
    s = rng.CounterStream(11)
    for n in (2, 4):
        for _ in range(30):
            a = _rand_complex_matrix(s, n)
            b = _rand_complex_matrix(s, n)
            _assert_same_complex(native.matmul(a, b, n), reference.matmul(a, b, n))
            expected = np.array(a).reshape(n, n) @ np.array(b).reshape(n, n)
            got = np.array(reference.matmul(a, b, n)).reshape(n, n)
            assert np.max(np.abs(got - expected)) < 1e-14


def test_expectation_matches_reference_and_numpy():
    s = rng.CounterStream(12)
    for n in (2, 4):
        for _ in range(30):
            m = _rand_complex_matrix(s, n)
            psi = [complex(s.uniform(-1, 1), s.uniform(-1, 1)) for _ in range(n)]
            assert native.expectation(m, psi, n) == reference.expectation(m, psi, n)
            p = np.array(psi)
            expected = p.conj() @ (np.array(m).reshape(n, n) @ p)
            assert abs(reference.expectation(m, psi, n) - expected) < 1e-14


def test_eigvals_match_numpy_oracle():
    s = rng.CounterStream(13)
    worst = 0.0
    for n in (2, 3, 4):
        for _ in range(100):
            h = _rand_hermitian(s, n)
            got = reference.eigvals_hermitian(h, n)
            assert list(got) == sorted(got)
            expected = np.linalg.eigvalsh(np.array(h).reshape(n, n))
            worst = max(worst, float(np.max(np.abs(np.array(got) - expected))))
    assert worst < 1e-12


def test_eigvals_backends_agree():
    s = rng.CounterStream(14)
    for _ in range(100):
        h = _rand_hermitian(s, 4)
        assert native.eigvals_hermitian(h, 4) == reference.eigvals_hermitian(h, 4)


def test_eigvals_diagonal_and_degenerate():
    diag = [0j] * 16
    for i, x in enumerate((3.0, -1.0, 3.0, 0.5)):
        diag[4 * i + i] = complex(x)
    for backend in (reference, native):
        assert list(backend.eigvals_hermitian(diag, 4)) == [-1.0, 0.5, 3.0, 3.0]


def test_lhv_mc_sums_bitwise_identical():
    cum_weights = [0.25, 0.75, 1.0]
    products = [
        1.0, 1.0, -1.0, 1.0,
        -1.0, 0.5, 0.25, -0.5,
        0.0, -1.0, 1.0, 0.0,
    ]
    for seed in (0, 9):
        for start, stop in ((0, 1000), (250, 750)):
            got_native = native.lhv_mc_sums(cum_weights, products, seed, start, stop)
            got_ref = reference.lhv_mc_sums(cum_weights, products, seed, start, stop)
            assert got_native == got_ref


def test_load_backend_rejects_unknown():
    with pytest.raises(ValueError):
        _kernels.load_backend("fortran")


def test_selected_backend_exports():
    for name in ("gp8", "spin_matrix", "kron2", "matmul", "expectation",
                 "eigvals_hermitian", "rng_u64", "rng_u01", "lhv_mc_sums"):
        assert callable(getattr(_kernels, name))

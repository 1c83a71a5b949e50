"""Cross-checks of the host references against independent formulations."""

import numpy as np

from xbarpim.oracle import (
    gen_binary_matvec,
    gen_matvec,
    oracle_binary_conv,
    oracle_binary_matvec,
    oracle_conv,
    oracle_matvec,
    oracle_popcount,
)


class TestMatvecOracle:
    def test_identity(self):
        x = np.array([3, 9, 250], dtype=np.uint64)
        assert (oracle_matvec(np.eye(3, dtype=np.uint64), x, 8) == x).all()

    def test_zero_matrix(self):
        assert not oracle_matvec(np.zeros((4, 3), dtype=np.uint64),
                                 np.arange(3, dtype=np.uint64), 8).any()

    def test_exhaustive_2x2_vs_bigint(self):
        # N=4: every entry in 0..15 would be 16^6 cases; sweep a coarse lattice
        # of entries and check against plain python big-int arithmetic.
        vals = [0, 1, 7, 15]
        for a in vals:
            for b in vals:
                for c in vals:
                    for x0 in vals:
                        for x1 in vals:
                            A = np.array([[a, b], [c, a]], dtype=np.uint64)
                            x = np.array([x0, x1], dtype=np.uint64)
                            got = oracle_matvec(A, x, 4)
                            want = [(a * x0 + b * x1) % 16, (c * x0 + a * x1) % 16]
                            assert list(got) == want

    def test_wraparound(self):
        A = np.array([[255, 255]], dtype=np.uint64)
        x = np.array([255, 3], dtype=np.uint64)
        assert oracle_matvec(A, x, 8)[0] == (255 * 255 + 255 * 3) % 256


class TestBinaryMatvecOracle:
    def test_row_equals_x(self):
        x = np.array([1, 0, 1, 1], dtype=np.uint8)
        assert oracle_binary_matvec(x[None, :], x)[0] == 1

    def test_row_complement_even_n(self):
        x = np.array([1, 0, 1, 1], dtype=np.uint8)
        assert oracle_binary_matvec((1 - x)[None, :], x)[0] == 0

    def test_matches_pm1_dot_sign(self):
        # popcount(XNOR) >= n/2  <=>  sum of +-1 products >= 0, ties to +1.
        for seed in range(40):
            inst = gen_binary_matvec(seed, 17, 24)
            A, x = inst.payload
            signed = (A.astype(np.int64) * 2 - 1) @ (x.astype(np.int64) * 2 - 1)
            want = (signed >= 0).astype(np.uint8)
            assert (oracle_binary_matvec(A, x) == want).all()


class TestConvOracle:
    def test_zero_kernel(self):
        A = np.arange(30, dtype=np.uint64).reshape(5, 6)
        assert not oracle_conv(A, np.zeros((3, 3), dtype=np.uint64), 8).any()

    def test_delta_kernel_is_shifted_crop(self):
        rng = np.random.default_rng(5)
        A = rng.integers(0, 256, size=(7, 9), dtype=np.uint64)
        for v in range(3):
            for h in range(3):
                K = np.zeros((3, 3), dtype=np.uint64)
                K[v, h] = 1
                got = oracle_conv(A, K, 8)
                want = A[v:v + 5, h:h + 7]
                assert (got == want).all()

    def test_dual_formulation(self):
        # Tap-sum of shifted inputs vs window dot products, 5x5 input 3x3 kernel.
        rng = np.random.default_rng(9)
        A = rng.integers(0, 16, size=(5, 5), dtype=np.uint64)
        K = rng.integers(0, 16, size=(3, 3), dtype=np.uint64)
        got = oracle_conv(A, K, 4)
        m, n, k = 5, 5, 3
        for r in range(m - 2):
            for c in range(n - 2):
                window = A[r:r + k, c:c + k].astype(object)
                want = int((window * K).sum()) % 16
                assert int(got[r, c]) == want

    def test_k5_reads_past_edge_as_zero(self):
        # Output is (m-3) x (n-3) for k=5; its last row/col reads one line
        # beyond A, which contributes zero.
        A = np.ones((6, 6), dtype=np.uint64)
        K = np.ones((5, 5), dtype=np.uint64)
        out = oracle_conv(A, K, 32)
        assert out.shape == (3, 3)
        assert out[0, 0] == 25      # fully interior window
        assert out[2, 2] == 16      # one row and one column fall off the edge

    def test_linearity(self):
        rng = np.random.default_rng(3)
        A = rng.integers(0, 1 << 8, size=(6, 7), dtype=np.uint64)
        K1 = rng.integers(0, 1 << 8, size=(3, 3), dtype=np.uint64)
        K2 = rng.integers(0, 1 << 8, size=(3, 3), dtype=np.uint64)
        lhs = oracle_conv(A, (K1 + K2) % 256, 8)
        rhs = (oracle_conv(A, K1, 8) + oracle_conv(A, K2, 8)) % 256
        assert (lhs == rhs).all()


class TestBinaryConvOracle:
    def test_window_equals_kernel(self):
        K = np.array([[1, 0, 1], [0, 1, 0], [1, 1, 0]], dtype=np.uint8)
        A = np.zeros((5, 5), dtype=np.uint8)
        A[1:4, 2:5] = K
        assert oracle_binary_conv(A, K)[1, 2] == 1

    def test_complement_window_odd_k2(self):
        K = np.ones((3, 3), dtype=np.uint8)
        A = np.zeros((4, 4), dtype=np.uint8)
        assert oracle_binary_conv(A, K)[0, 0] == 0

    def test_matches_pm1_sign(self):
        rng = np.random.default_rng(11)
        for _ in range(25):
            A = rng.integers(0, 2, size=(6, 8), dtype=np.uint8)
            K = rng.integers(0, 2, size=(3, 3), dtype=np.uint8)
            got = oracle_binary_conv(A, K)
            As = A.astype(np.int64) * 2 - 1
            Ks = K.astype(np.int64) * 2 - 1
            for r in range(got.shape[0]):
                for c in range(got.shape[1]):
                    window = As[r:r + 3, c:c + 3]
                    assert got[r, c] == (1 if (window * Ks).sum() >= 0 else 0)


class TestPopcountOracle:
    def test_zeros_and_ones(self):
        assert oracle_popcount(np.zeros(9)) == 0
        assert oracle_popcount(np.ones(13)) == 13

    def test_fold_by_ones(self):
        rng = np.random.default_rng(2)
        bits = rng.integers(0, 2, size=77)
        folded = 0
        for b in bits:
            folded += int(b)
        assert oracle_popcount(bits) == folded


class TestGenerators:
    def test_seed_determinism(self):
        a = gen_matvec(42, 8, 4, 8)
        b = gen_matvec(42, 8, 4, 8)
        assert (a.payload[0] == b.payload[0]).all()
        assert (a.payload[1] == b.payload[1]).all()
        c = gen_matvec(43, 8, 4, 8)
        assert (a.payload[0] != c.payload[0]).any()

"""Host-side brute-force references and deterministic instance generators.

These are the ground truth every in-crossbar result is checked against,
bit for bit. They share no code with the microcode emitters. Intermediate
arithmetic uses unbounded Python integers and is reduced mod 2^N at the
end, which pins down the wraparound semantics unambiguously.

Index convention for convolution: the output has shape
(m - ceil(k/2)) x (n - ceil(k/2)) and entry (r, c) accumulates
A[r+v][c+h] * K[v][h] over 0 <= v, h < k, where reads past the edge of A
yield 0 (zero bits in the binary case, matching shift-in-zero semantics).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def oracle_matvec(A, x, N: int) -> np.ndarray:
    """Schoolbook A @ x with mod-2^N wraparound, exact integer semantics."""
    A = np.asarray(A, dtype=object)
    x = np.asarray(x, dtype=object)
    out = A @ x
    mask = (1 << N) - 1
    return np.array([int(v) & mask for v in out], dtype=np.uint64)


def oracle_binary_matvec(A, x) -> np.ndarray:
    """Majority-quantized binary product: bit r = popcount(XNOR(A[r], x)) >= n/2.

    Ties resolve to 1. Bit 1 encodes +1 and bit 0 encodes -1.
    """
    A = np.asarray(A, dtype=np.uint8)
    x = np.asarray(x, dtype=np.uint8)
    n = A.shape[1]
    matches = (1 - (A ^ x[None, :])).sum(axis=1)
    return (2 * matches >= n).astype(np.uint8)


def _conv_dims(m, n, k):
    return m - (k + 1) // 2, n - (k + 1) // 2


def oracle_conv(A, K, N: int) -> np.ndarray:
    """Direct nested-loop 2D tap accumulation, valid region, mod 2^N."""
    A = np.asarray(A, dtype=object)
    K = np.asarray(K, dtype=object)
    m, n = A.shape
    k = K.shape[0]
    out_m, out_n = _conv_dims(m, n, k)
    mask = (1 << N) - 1
    out = np.zeros((out_m, out_n), dtype=object)
    for v in range(k):
        for h in range(k):
            for r in range(out_m):
                if r + v >= m:
                    continue
                for c in range(out_n):
                    if c + h >= n:
                        continue
                    out[r, c] += int(A[r + v, c + h]) * int(K[v, h])
    return np.array([[int(v) & mask for v in row] for row in out], dtype=np.uint64)


def oracle_binary_conv(A, K) -> np.ndarray:
    """Per-window majority of XNOR products over the same index ranges."""
    A = np.asarray(A, dtype=np.uint8)
    K = np.asarray(K, dtype=np.uint8)
    m, n = A.shape
    k = K.shape[0]
    out_m, out_n = _conv_dims(m, n, k)
    padded = np.zeros((m + k, n + k), dtype=np.uint8)
    padded[:m, :n] = A
    out = np.zeros((out_m, out_n), dtype=np.uint8)
    half = k * k  # threshold 2*matches >= k*k, ties to 1
    for r in range(out_m):
        for c in range(out_n):
            window = padded[r:r + k, c:c + k]
            matches = int((1 - (window ^ K)).sum())
            out[r, c] = 1 if 2 * matches >= half else 0
    return out


def oracle_popcount(bits) -> int:
    """Linear scan."""
    return int(np.asarray(bits).sum())


@dataclass(frozen=True)
class Instance:
    """A regeneratable problem instance: seed plus shape fully determine it."""

    seed: int
    kind: str
    shape: tuple
    payload: tuple


def gen_matvec(seed: int, m: int, n: int, N: int) -> Instance:
    rng = np.random.default_rng(seed)
    hi = 1 << N
    A = rng.integers(0, hi, size=(m, n), dtype=np.uint64)
    x = rng.integers(0, hi, size=n, dtype=np.uint64)
    return Instance(seed, "matvec", (m, n, N), (A, x))


def gen_binary_matvec(seed: int, m: int, n: int) -> Instance:
    rng = np.random.default_rng(seed)
    A = rng.integers(0, 2, size=(m, n), dtype=np.uint8)
    x = rng.integers(0, 2, size=n, dtype=np.uint8)
    return Instance(seed, "binary-matvec", (m, n), (A, x))


def gen_conv(seed: int, m: int, n: int, k: int, N: int) -> Instance:
    rng = np.random.default_rng(seed)
    hi = 1 << N
    A = rng.integers(0, hi, size=(m, n), dtype=np.uint64)
    K = rng.integers(0, hi, size=(k, k), dtype=np.uint64)
    return Instance(seed, "conv", (m, n, k, N), (A, K))


def gen_binary_conv(seed: int, m: int, n: int, k: int) -> Instance:
    rng = np.random.default_rng(seed)
    A = rng.integers(0, 2, size=(m, n), dtype=np.uint8)
    K = rng.integers(0, 2, size=(k, k), dtype=np.uint8)
    return Instance(seed, "binary-conv", (m, n, k), (A, K))

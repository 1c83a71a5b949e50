import numpy as np
import pytest

from xbarpim.engine import CycleBundle, Gate, GATE_ARITY, MicroOp, Orientation


def random_microop(rng, topo, orientation=None, local_bias=0.5):
    """Random op; with probability local_bias all operands sit in one group."""
    orient = orientation
    if orient is None:
        orient = Orientation(int(rng.integers(0, 2)))
    n_lines = topo.cols if orient == Orientation.COLUMN else topo.rows
    n_span = topo.rows if orient == Orientation.COLUMN else topo.cols
    gate = Gate(int(rng.integers(0, len(Gate))))
    arity = GATE_ARITY[gate]
    if rng.random() < local_bias:
        groups = topo.col_group if orient == Orientation.COLUMN else topo.row_group
        g = int(rng.integers(0, groups[-1] + 1))
        pool = np.flatnonzero(groups == g)
    else:
        pool = np.arange(n_lines)
    if len(pool) < arity + 1:
        pool = np.arange(n_lines)
    picks = rng.choice(pool, size=arity + 1, replace=False)
    lo = int(rng.integers(0, n_span))
    hi = int(rng.integers(lo + 1, n_span + 1))
    return MicroOp(orient, gate, tuple(int(x) for x in picks[:arity]), int(picks[arity]), (lo, hi))


def random_bundle(rng, topo, max_ops=4, local_bias=0.5):
    n = int(rng.integers(1, max_ops + 1))
    orient = Orientation(int(rng.integers(0, 2))) if rng.random() < 0.9 else None
    return CycleBundle(tuple(random_microop(rng, topo, orient, local_bias) for _ in range(n)))


@pytest.fixture
def rng():
    return np.random.default_rng(0xC0FFEE)

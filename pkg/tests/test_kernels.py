import os
import subprocess
import sys

import numpy as np
import pytest

from localroots import _kernels
from localroots.finite_field import first_irreducible, get_field

FIELDS = [(2, 1), (2, 3), (3, 1), (3, 2), (5, 1), (7, 1)]


def tables(p, s):
    return get_field(p, first_irreducible(p, s)).tables


def schoolbook(a, b, n, F):
    out = [0] * n
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            if i + j < n:
                out[i + j] = F.add(out[i + j], F.mul(x, y))
    return out


@pytest.mark.parametrize("p,s", FIELDS)
def test_convolution_paths_agree(p, s):
    F = get_field(p, first_irreducible(p, s))
    rng = np.random.default_rng(p * 10 + s)
    for _ in range(25):
        a = rng.integers(0, F.q, rng.integers(1, 30))
        b = rng.integers(0, F.q, rng.integers(1, 30))
        n = int(rng.integers(1, 60))
        ref = schoolbook(a.tolist(), b.tolist(), n, F)
        assert _kernels.convolve_numpy(a, b, n, F.tables).tolist() == ref
        if _kernels.numba is not None:
            assert _kernels.convolve_numba(a, b, n, F.tables).tolist() == ref


@pytest.mark.parametrize("p,s", FIELDS)
def test_series_inverse_paths_agree(p, s):
    F = get_field(p, first_irreducible(p, s))
    rng = np.random.default_rng(100 + p * 10 + s)
    for _ in range(25):
        a = rng.integers(0, F.q, rng.integers(1, 20))
        a[0] = rng.integers(1, F.q)
        n = int(rng.integers(1, 50))
        inv = _kernels.series_inverse_numpy(a, n, F.tables)
        check = schoolbook(a.tolist(), inv.tolist(), n, F)
        assert check == [1] + [0] * (n - 1)
        if _kernels.numba is not None:
            assert _kernels.series_inverse_numba(a, n, F.tables).tolist() == inv.tolist()


def test_empty_lengths():
    T = tables(2, 1)
    assert _kernels.convolve(np.array([1]), np.array([1]), 0, T).tolist() == []
    assert _kernels.convolve_numpy(np.array([], dtype=np.int64), np.array([1]), 3, T).tolist() == [0, 0, 0]


def test_env_flag_selects_numpy_path():
    code = "from localroots import _kernels; print(_kernels.USING_NUMBA)"
    env = dict(os.environ, LOCALROOTS_DISABLE_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "False"
    env["LOCALROOTS_DISABLE_NUMBA"] = "0"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == str(_kernels.numba is not None)

import os
import subprocess
import sys

import numpy as np
import pytest

from tripolar import _kernels_py, kernels
from tripolar.poles import GROUP_SQUARES, SQUARES

from oracles import star_product

try:
    from tripolar import _kernels as compiled
except ImportError:
    compiled = None

BACKENDS = [pytest.param(_kernels_py, id="python")]
BACKENDS.append(pytest.param(compiled, id="cython", marks=pytest.mark.skipif(
    compiled is None, reason="extension not built")))


def random_pair(rng, n=81):
    return (rng.uniform(0, 3, 3), rng.normal(size=(3, n)),
            rng.uniform(0, 3, 3), rng.normal(size=(3, n)))


def name_table(index):
    sq = SQUARES[index]
    return {(a.name, b.name): sq.compose(a, b).name for a in sq.table[0] for b in sq.table[0]}


@pytest.mark.parametrize("backend", BACKENDS)
@pytest.mark.parametrize("index", GROUP_SQUARES)
def test_star_product_matches_loop_oracle(backend, index, rng):
    table = SQUARES[index].index_table()
    for _ in range(20):
        xq, xe, yq, ye = random_pair(rng)
        q, e = backend.star_product(table, xq, xe, yq, ye)
        oq, oe = star_product(xq, xe, yq, ye, name_table(index))
        assert np.allclose(q, oq, atol=1e-12, rtol=0)
        assert np.allclose(e, oe, atol=1e-12, rtol=0)


@pytest.mark.parametrize("backend", BACKENDS)
def test_canonical_form(backend, rng):
    q = rng.uniform(0, 3, 3)
    e = rng.normal(size=(3, 81))
    cq, ce = backend.canonical_form(q, e)
    assert np.allclose(cq, q - q.min(), atol=0)
    assert np.allclose(ce, e - e.mean(axis=0), atol=1e-15)
    assert cq.min() == 0.0


@pytest.mark.skipif(compiled is None, reason="extension not built")
def test_backends_agree_bit_for_bit_on_canonical_form(rng):
    q = rng.uniform(0, 3, 3)
    e = rng.normal(size=(3, 81))
    a = compiled.canonical_form(q, e)
    b = _kernels_py.canonical_form(q, e)
    assert np.array_equal(a[0], b[0])
    assert np.allclose(a[1], b[1], atol=1e-15, rtol=0)


def test_backend_is_reported():
    assert kernels.BACKEND in ("cython", "python")
    forced = os.environ.get("TRIPOLAR_PURE_PYTHON", "") not in ("", "0")
    expected = "cython" if compiled is not None and not forced else "python"
    assert kernels.BACKEND == expected


def test_environment_forces_fallback():
    env = dict(os.environ, TRIPOLAR_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from tripolar import kernels; print(kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"

import os

import numpy as np
import pytest
from hypothesis import given, strategies as st
from hypothesis.extra.numpy import arrays

from simug import kernels

BACKENDS = kernels.available_backends()


def test_backend_selection():
    # the editable install compiles the extension; a silent fallback here
    # would make the benchmark meaningless
    expected = "python" if os.environ.get("SIMUG_PURE_PYTHON") else "cython"
    assert kernels.BACKEND == expected


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.reach_matrix(np.zeros((2, 2)), backend="fortran")


@pytest.mark.parametrize("backend", BACKENDS)
def test_reach_matrix_chain(backend):
    adj = np.array([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    closure = kernels.reach_matrix(adj, backend=backend)
    assert closure.tolist() == [[True, True, True], [False, True, True], [False, False, True]]


@pytest.mark.parametrize("backend", BACKENDS)
def test_max_vdp_shared_middle(backend):
    adj = np.zeros((5, 5), dtype=np.uint8)
    for t, h in [(0, 2), (1, 2), (2, 3), (2, 4)]:
        adj[t, h] = 1
    assert kernels.max_vdp(adj, [1, 1, 0, 0, 0], [0, 0, 0, 1, 1], backend=backend) == 1
    assert kernels.max_vdp(adj, [1, 1, 1, 0, 0], [0, 0, 1, 1, 1], backend=backend) == 1


def square_bool(n):
    return arrays(np.uint8, (n, n), elements=st.integers(0, 1))


@st.composite
def graphs_with_masks(draw):
    n = draw(st.integers(1, 9))
    adj = draw(square_bool(n))
    np.fill_diagonal(adj, 0)
    src = draw(arrays(np.uint8, n, elements=st.integers(0, 1)))
    snk = draw(arrays(np.uint8, n, elements=st.integers(0, 1)))
    return adj, src, snk


@given(graphs_with_masks())
def test_backends_agree(case):
    adj, src, snk = case
    results = {b: (kernels.reach_matrix(adj, backend=b).tolist(), kernels.max_vdp(adj, src, snk, backend=b))
               for b in BACKENDS}
    assert len({repr(v) for v in results.values()}) == 1


@given(graphs_with_masks())
def test_closure_is_transitive(case):
    adj, _, _ = case
    c = kernels.reach_matrix(adj).astype(int)
    assert np.array_equal((c @ c > 0), c.astype(bool))
    assert np.all(np.diag(c) == 1)

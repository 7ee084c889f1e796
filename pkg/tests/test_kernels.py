"""The compiled and pure-Python kernels must agree bit for bit."""

import importlib

import pytest
from hypothesis import given, strategies as st

from dikroma import _backend

from strategies import digraphs

pytestmark = pytest.mark.skipif(len(_backend.available()) < 2,
                                reason="compiled kernels not built")


@pytest.fixture(scope="module")
def kernels():
    return [importlib.import_module(_backend._MODULES[name]) for name in ("cython", "python")]


@given(digraphs(max_n=7), st.booleans())
def test_backends_agree(kernels, d, ordered):
    cy, py = kernels
    n, out = d.n, list(d.out)
    for mask in range(1 << n):
        assert cy.is_acyclic(n, out, mask) == py.is_acyclic(n, out, mask)
    assert list(cy.acyclic_table(n, out)) == list(py.acyclic_table(n, out))
    assert cy.greedy(n, out, list(range(n))[::-1]) == py.greedy(n, out, list(range(n))[::-1])
    assert cy.dichromatic(n, out, 0.0) == py.dichromatic(n, out, 0.0)
    assert cy.diachromatic(n, out, ordered, 1, 0.0) == py.diachromatic(n, out, ordered, 1, 0.0)
    assert cy.dac_upper_bound(n, out, ordered) == py.dac_upper_bound(n, out, ordered)
    assert cy.digrundy_spectrum(n, out, 0.0) == py.digrundy_spectrum(n, out, 0.0)
    assert cy.parsimonious(n, out, list(range(n)), 0.0) == py.parsimonious(n, out, list(range(n)), 0.0)
    assert cy.degree_cap(n, out) == py.degree_cap(n, out)
    if n <= 6:
        assert cy.greedy_max(n, out) == py.greedy_max(n, out)
        assert cy.diochromatic(n, out, 0.0) == py.diochromatic(n, out, 0.0)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_exhaustive_columns_agree(kernels, n):
    cy, py = kernels
    size = 4 ** (n * (n - 1) // 2)
    a = [list(col) for col in cy.exhaustive_params(n, 0, size, True)]
    b = [list(col) for col in py.exhaustive_params(n, 0, size, True)]
    assert a == b


def test_decode_index_agrees(kernels):
    cy, py = kernels
    for idx in range(0, 4 ** 10, 9973):
        assert list(cy.decode_index(5, idx)) == list(py.decode_index(5, idx))


def test_set_backend_roundtrip():
    before = _backend.BACKEND
    _backend.set_backend("python")
    assert _backend.BACKEND == "python"
    with pytest.raises(ValueError):
        _backend.set_backend("fortran")
    _backend.set_backend(before)
    assert _backend.BACKEND == before

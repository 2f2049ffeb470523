import importlib
import os
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from conftest import trees
from magmahopf import _kernels
from magmahopf._kernels import _pure

try:
    from magmahopf._kernels import _core
except ImportError:  # extension not built
    _core = None

needs_core = pytest.mark.skipif(_core is None, reason="compiled kernels not built")


@needs_core
@given(trees(variables=(1, 2, 3), max_degree=9), st.integers(-1, 9))
def test_coproduct_parity(t, max_right):
    assert _core.coproduct(t.code, max_right) == _pure.coproduct(t.code, max_right)


@needs_core
@given(trees(max_degree=10), st.data())
def test_contract_and_split_parity(t, data):
    mask = data.draw(st.integers(0, 2 ** t.degree - 1))
    assert _core.contract(t.code, mask) == _pure.contract(t.code, mask)
    if not t.is_leaf:
        assert _core.split(t.code) == _pure.split(t.code)


@pytest.mark.parametrize("mod", [_pure, _core] if _core else [_pure])
def test_kernel_contract_examples(mod):
    x2x = bytes([0, 0, 1, 1, 1])
    assert mod.contract(x2x, 0b011) == bytes([0, 1, 1])
    assert mod.contract(x2x, 0b101) == bytes([0, 1, 1])
    assert mod.contract(x2x, 0) == b""
    with pytest.raises(ValueError):
        mod.contract(x2x, 0b1000)
    assert mod.coproduct(bytes([0, 1, 1])) == {
        (bytes([0, 1, 1]), b""): 1, (bytes([1]), bytes([1])): 2, (b"", bytes([0, 1, 1])): 1}


def test_backend_selection():
    assert _kernels.BACKEND in ("cython", "python")
    env = dict(os.environ, MAGMAHOPF_PURE="1")
    out = subprocess.run([sys.executable, "-c", "import magmahopf; print(magmahopf.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True).stdout.strip()
    assert out == "python"


def test_pure_backend_end_to_end():
    env = dict(os.environ, MAGMAHOPF_PURE="1")
    code = ("from magmahopf import hausdorff_component, is_primitive;"
            "assert all(is_primitive(hausdorff_component(n)) for n in range(1, 6))")
    subprocess.run([sys.executable, "-c", code], env=env, check=True)

import os
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from friezekit import _pykernels, kernels

fracs = st.fractions(min_value=-9, max_value=9, max_denominator=7)


def _backend(env_extra):
    env = {**os.environ, **env_extra}
    out = subprocess.run([sys.executable, "-c", "from friezekit import kernels; print(kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    return out.stdout.strip()


def test_pure_fallback_forced_by_env():
    assert _backend({"FRIEZEKIT_PURE": "1"}) == "python"


def test_default_backend_is_reported():
    env = {k: v for k, v in os.environ.items() if k != "FRIEZEKIT_PURE"}
    assert _backend(env) in ("python", "cython")


@pytest.mark.skipif(kernels.BACKEND != "cython", reason="extension not built")
@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(fracs, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_backends_agree_on_det(m):
    from friezekit import _ckernels

    assert _ckernels.det_bareiss([row[:] for row in m]) == _pykernels.det_bareiss([row[:] for row in m])


def test_pure_det_small():
    assert _pykernels.det_bareiss([[Fraction(2), Fraction(1)], [Fraction(1), Fraction(1)]]) == 1

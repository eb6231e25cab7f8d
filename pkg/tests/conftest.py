import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ringlab.parse import build_module, build_ring  # noqa: E402


@lru_cache(maxsize=None)
def ring(spec: str):
    return build_ring(spec)


@lru_cache(maxsize=None)
def module(ring_spec: str, module_spec: str):
    return build_module(ring(ring_spec), module_spec)


@pytest.fixture
def R():
    return ring


@pytest.fixture
def M():
    return module

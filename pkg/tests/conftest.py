"""Shared fixtures; the modules live flat at the repository root."""
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from lefschetz import build_system  # noqa: E402


@pytest.fixture(scope='session')
def system_60():
    """The order-60, rotation-1 system every end-to-end check revolves around."""
    return build_system(60, 1)

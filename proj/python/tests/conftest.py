import pytest

pytest.importorskip("hodge._core", reason="python module not installed (pip install --no-build-isolation .)")

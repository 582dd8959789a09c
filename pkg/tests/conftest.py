import os

import pytest


def pytest_collection_modifyitems(config, items):
    if os.environ.get("SRCFG_SLOW_TESTS"):
        return
    skip = pytest.mark.skip(reason="slow; set SRCFG_SLOW_TESTS=1 to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)

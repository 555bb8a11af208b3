#!/usr/bin/env python3
"""
Import Test Script
Tests that all packages import and the CLI parser builds
"""

import importlib
import sys

import pytest

PACKAGES = ["config", "coloring", "counting", "constructions", "search", "verify", "cli"]


@pytest.mark.parametrize("name", PACKAGES)
def test_package_imports(name):
    module = importlib.import_module(name)
    if name != "config":
        assert module.__version__ == "1.0.0"
        for exported in module.__all__:
            assert hasattr(module, exported), f"{name} does not define {exported}"


def test_parser_builds():
    from main import build_parser

    parser = build_parser()
    args = parser.parse_args(["count", "--cyclic", "-n", "9", "--coloring", "mod3-cyclic"])
    assert args.kind == "cyclic"
    assert args.n == 9
    assert args.eq == "1,1,2"


def test_config_defaults_are_valid():
    from config import SETTINGS, config

    for name in SETTINGS:
        assert isinstance(getattr(config, name), int)
    assert config.ERROR_BUDGET_K > 0


if __name__ == "__main__":
    sys.exit(pytest.main([__file__]))

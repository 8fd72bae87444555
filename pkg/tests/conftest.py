"""Prints one summary line per acceptance criterion, capture or not."""

import re

import pytest

_terminal = None
_observations: list[str] = []


def record_observation(line: str) -> None:
    """Queue a line to print alongside the next criterion verdict."""
    _observations.append(line)


def pytest_configure(config):
    global _terminal
    _terminal = config.pluginmanager.get_plugin("terminalreporter")


def _write(lines: list[str]) -> None:
    if _terminal is not None:
        _terminal.write("\n" + "\n".join(lines) + "\n")
    else:
        print("\n".join(lines), flush=True)


@pytest.hookimpl(trylast=True)
def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    match = re.search(r"test_criterion_(\d+)", report.nodeid)
    if not match:
        return
    status = "PASS" if report.passed else "FAIL"
    lines = _observations + [f"[acceptance] criterion {match.group(1)}: {status}"]
    _observations.clear()
    _write(lines)

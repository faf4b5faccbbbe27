from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile("default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

small_fracs = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def rand_frac(rng: random.Random, lo: int = -9, hi: int = 9, den: int = 5) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, den))


@pytest.fixture
def rng():
    return random.Random(1234)


# acceptance criterion -> (passed, detail, seconds); filled by test_acceptance.py
ACCEPTANCE_RESULTS: dict[int, tuple[bool, str, float]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_RESULTS):
        ok, detail, secs = ACCEPTANCE_RESULTS[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {secs:7.2f}s  {detail}")

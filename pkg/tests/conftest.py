import random
from itertools import product

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    max_examples=150,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

# criterion number -> list of (label, passed); filled by tests/test_acceptance.py
ACCEPTANCE_RESULTS: dict = {}


def all_words(max_len, alphabet, min_len=0):
    for n in range(min_len, max_len + 1):
        yield from product(range(1, alphabet + 1), repeat=n)


def random_words(count, min_len, max_len, alphabet, seed):
    rng = random.Random(seed)
    return [
        tuple(rng.randint(1, alphabet) for _ in range(rng.randint(min_len, max_len)))
        for _ in range(count)
    ]


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        for label, passed in ACCEPTANCE_RESULTS[number]:
            terminalreporter.write_line(f"criterion {number:>2} [{'PASS' if passed else 'FAIL'}] {label}")

from fractions import Fraction as F
import sys

import pytest

# (name, polynomial coefficients lowest first, [(c, matrix rows, approximate root)])
FIXTURES = [
    ("disc-23", (1, 2, 1, 1), [(F(-3375, 121), ((F(-11, 45), F(-1, 3)), (0, 1)), -0.56984029)]),
    ("disc-31", (1, 1, 0, 1), [(F(-35937, 2209), ((47, -165), (47, 132)), -0.68232780)]),
    (
        "disc49",
        (1, -2, -1, 1),
        [
            (F(189), ((1, -6), (1, 3)), -1.246979),
            (F(189), ((F(1, 9), F(1, 3)), (0, 1)), 0.445041),
            (F(189), ((0, -9), (1, -6)), 1.8019377),
        ],
    ),
    (
        "disc148",
        (-1, -3, 1, 1),
        [
            (F(105468750000, 15376248001), ((-496004, 1121250), (1860015, -2801250)), -2.1700864),
            (F(6750), ((F(1, 45), F(-1, 3)), (0, 1)), -0.3111078),
            (F(1687500, 249001), ((-499, 600), (1497, -2250)), 1.4811943),
        ],
    ),
    ("cbrt2", (-2, 0, 0, 1), [(F(-54), ((-1, 6), (1, 3)), 1.2599210)]),
]

FIXTURE_REPS = [
    pytest.param(poly, c, rows, approx, id=f"{name}-{approx}")
    for name, poly, reps in FIXTURES
    for c, rows, approx in reps
]

FIELD_ROOTS = [
    pytest.param(poly, i, id=f"{name}-root{i}")
    for name, poly, reps in FIXTURES
    for i in range(len(reps))
]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)

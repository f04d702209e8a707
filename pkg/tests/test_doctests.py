import doctest

import pytest

import permfib.bijections
import permfib.compositions
import permfib.permutations
import permfib.regex
import permfib.series
import permfib.tilings


@pytest.mark.parametrize(
    "module",
    [
        permfib.bijections,
        permfib.compositions,
        permfib.permutations,
        permfib.regex,
        permfib.series,
        permfib.tilings,
    ],
    ids=lambda module: module.__name__,
)
def test_module_doctests(module):
    results = doctest.testmod(module)
    assert results.failed == 0
    assert results.attempted > 0

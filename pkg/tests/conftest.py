import pytest

from mod2red.expr import parse_a2


@pytest.fixture
def a2():
    """Parse an expression into a tower element at the default precision."""
    def make(src, precision=64):
        return parse_a2(src, precision)[1]
    return make

import pytest

from quivdt.dtbps import bps_extract
from quivdt.models import one_loop, doubled_a2


@pytest.fixture(scope='session')
def one_loop_bps():
    """BPS table of W = x^3 up to rank 2 over F_4, F_16, F_25."""
    Q, W = one_loop(2)
    return Q, W, bps_extract(Q, W, 2)


@pytest.fixture(scope='session')
def a2_bps():
    """BPS table of the doubled A2 quiver with W = (xy)^2 up to |gamma| 2."""
    Q, W = doubled_a2(1)
    return Q, W, bps_extract(Q, W, 2)


@pytest.fixture
def write_input(tmp_path):
    """Write input text to a file and return its path."""
    def write(text, name='model.qp'):
        path = tmp_path / name
        path.write_text(text, encoding='utf-8')
        return str(path)
    return write

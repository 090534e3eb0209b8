import pytest

from prographs import Edge, Operator, Prograph, StandardTableau
from prographs.prograph import COP, PROD

SELF_DUAL_ROWS = [[1, 2, 5, 6], [3, 4, 9, 10], [7, 8, 11, 12]]


def _prograph(kinds, edges):
    ops = tuple(Operator(i, k) for i, k in kinds.items())
    return Prograph(len(kinds) // 2, ops, tuple(Edge(*e) for e in edges))


_LABELLED_KINDS = {1: COP, 2: COP, 3: PROD, 4: COP, 5: PROD, 6: COP, 7: PROD, 8: PROD}


@pytest.fixture(autouse=True, scope="session")
def _isolated_cache(tmp_path_factory):
    mp = pytest.MonkeyPatch()
    mp.setenv("PROGRAPHS_CACHE_DIR", str(tmp_path_factory.mktemp("cache")))
    yield
    mp.undo()


@pytest.fixture
def self_dual_tableau():
    return StandardTableau.from_rows(SELF_DUAL_ROWS)


@pytest.fixture
def labelled_left():
    """Size-4 prograph whose operator ids are its drawn labels."""
    return _prograph(_LABELLED_KINDS, [
        (1, 0, 2, 0), (1, 1, 3, 1), (2, 0, 5, 0), (2, 1, 3, 0), (3, 0, 4, 0), (4, 0, 5, 1),
        (4, 1, 6, 0), (6, 0, 7, 1), (6, 1, 8, 1), (5, 0, 7, 0), (7, 0, 8, 0),
    ])


@pytest.fixture
def labelled_right():
    """The half-turn of ``labelled_left``, again with ids equal to drawn labels."""
    return _prograph(_LABELLED_KINDS, [
        (1, 1, 2, 0), (1, 0, 3, 0), (2, 0, 3, 1), (2, 1, 4, 0), (4, 1, 7, 1), (4, 0, 5, 1),
        (3, 0, 5, 0), (5, 0, 6, 0), (6, 1, 7, 0), (6, 0, 8, 0), (7, 0, 8, 1),
    ])

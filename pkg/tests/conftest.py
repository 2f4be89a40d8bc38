import json
import sys
from pathlib import Path

import pytest

HERE = Path(__file__).parent
sys.path.insert(0, str(HERE))

from triroman.graph import Graph  # noqa: E402

FROZEN = json.loads((HERE / "data" / "oracle_values.json").read_text())


def frozen_graph(name: str) -> Graph:
    entry = FROZEN[name]
    return Graph.from_edges(entry["p"], [tuple(e) for e in entry["edges"]])


@pytest.fixture
def c5_reordered():
    """C5 with vertices b1..b5 = 0..4 joined b1-b2-b4-b5-b3-b1."""
    return Graph.from_edges(5, [(0, 1), (1, 3), (3, 4), (4, 2), (2, 0)])


@pytest.fixture
def k34():
    from triroman.graph import complete_bipartite

    return complete_bipartite(3, 4)

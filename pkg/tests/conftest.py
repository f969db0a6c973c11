from __future__ import annotations

from pathlib import Path

import pytest
from hypothesis import settings

import convexcycles as cc

settings.register_profile("default", deadline=None)
settings.load_profile("default")

DATA_DIR = Path(__file__).parent / "data"
CORPUS_FILE = DATA_DIR / "connected_upto7.g6"

# connected graphs up to isomorphism per order (exhaustiveness guard)
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


def q3_graph() -> cc.Graph:
    edges = [
        (a, a ^ (1 << b)) for a in range(8) for b in range(3) if a < a ^ (1 << b)
    ]
    return cc.from_edge_list(8, edges)


@pytest.fixture(scope="session")
def petersen() -> cc.Graph:
    return cc.petersen_graph()


@pytest.fixture(scope="session")
def petersen_profile(petersen) -> cc.MetricProfile:
    return cc.metric_profile(petersen)


@pytest.fixture(scope="session")
def hoffman_singleton() -> cc.Graph:
    return cc.hoffman_singleton_graph()


@pytest.fixture(scope="session")
def hoffman_singleton_profile(hoffman_singleton) -> cc.MetricProfile:
    return cc.metric_profile(hoffman_singleton)


@pytest.fixture(scope="session")
def q3() -> cc.Graph:
    return q3_graph()


@pytest.fixture(scope="session")
def k23() -> cc.Graph:
    return cc.complete_bipartite_graph(2, 3)


@pytest.fixture(scope="session")
def corpus() -> list[cc.Graph]:
    lines = CORPUS_FILE.read_text().splitlines()
    return [cc.parse_graph6(line) for line in lines if line.strip()]


@pytest.fixture(scope="session")
def corpus_profiles(corpus) -> list[tuple[cc.Graph, cc.MetricProfile]]:
    return [(g, cc.metric_profile(g)) for g in corpus]

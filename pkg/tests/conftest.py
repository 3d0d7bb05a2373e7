import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from selfdual.classify import enumerate_selfdual  # noqa: E402
from selfdual.graphcurve import census  # noqa: E402
from selfdual.matroid import Matroid  # noqa: E402

from oracles import labels, symmetrize  # noqa: E402

# Table of the 13 simple self-dual matroids of rank 4: nonbases avoiding 8.
RANK4_TABLE = {
    "4.0.a": [],
    "4.2.a": ["1234"],
    "4.4.a": ["1234", "1257"],
    "4.6.a": ["1234", "1257", "2467"],
    "4.6.b": ["1256", "1357", "2367"],
    "4.8.a": ["1247", "1357", "2367", "4567"],
    "4.8.b": ["1267", "1347", "1356", "4567"],
    "4.10.a": ["1234", "1257", "2356", "2467", "3457"],
    "4.10.b": ["1257", "1346", "2346", "3456", "3467"],
    "4.12.a": ["1267", "1357", "1456", "2356", "2457", "3467"],
    "4.14.a": ["1234", "1257", "1367", "1456", "2356", "2467", "3457"],
    "4.16.a": ["1234", "1235", "1236", "1237", "1245", "1345", "2345", "4567"],
    "4.34.a": ["1234", "1235", "1236", "1237", "1245", "1246", "1247", "1345",
               "1346", "1347", "1567", "2345", "2346", "2347", "2567", "3567", "4567"],
}


def table_matroid(label):
    return Matroid.from_nonbases(8, 4, symmetrize(labels(RANK4_TABLE[label]), 8))


@pytest.fixture(scope="session")
def rank4_table():
    return {k: table_matroid(k) for k in RANK4_TABLE}


@pytest.fixture(scope="session")
def rank4_enumeration():
    return enumerate_selfdual(4)


@pytest.fixture(scope="session")
def census_4_7():
    return census(4, 7, seed=1)


@pytest.fixture(scope="session")
def census_graphs():
    """(genus, graph, matroid) for every 3-connected cubic graph of genus 4..7."""
    from selfdual.graphcurve import matroid_of_graph
    from selfdual.graphs import generate_cubic_3connected
    out = []
    for g in range(4, 8):
        for G in generate_cubic_3connected(2 * g - 2):
            out.append((g, G, matroid_of_graph(G, seed=1)))
    return out

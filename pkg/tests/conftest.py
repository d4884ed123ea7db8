from __future__ import annotations

import pytest

from tightbounds.datasets import figure1_bipartite_table, figure1_graphs, figure1_table


@pytest.fixture(scope="session")
def fig1_graphs():
    return figure1_graphs()


@pytest.fixture(scope="session")
def fig1_table():
    return figure1_table()


@pytest.fixture(scope="session")
def fig1_bipartite():
    return figure1_bipartite_table()


# Table 1 of the demonstration dataset, frozen cell for cell:
# name -> (n, mu, alpha, n-mu, n-delta, Delta^2, connected, tree, regular, bipartite)
TABLE1 = {
    "G_1": (3, 1, 2, 2, 2, 4, True, True, False, True),
    "G_2": (3, 1, 1, 2, 1, 4, True, False, True, False),
    "G_3": (4, 2, 2, 2, 2, 4, True, False, True, True),
    "G_4": (4, 2, 2, 2, 2, 9, True, False, False, False),
    "G_5": (4, 2, 1, 2, 1, 9, True, False, True, False),
    "G_6": (8, 4, 4, 4, 4, 16, True, False, True, True),
    "G_7": (4, 1, 3, 3, 3, 9, True, True, False, True),
    "G_8": (6, 2, 4, 4, 5, 9, True, True, False, True),
    "G_9": (6, 3, 2, 3, 4, 9, True, False, False, False),
}

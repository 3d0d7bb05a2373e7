"""Matroids of graph curves: the Petersen graph, then a small census."""
from selfdual.graphcurve import census, matroid_of_graph, petersen

M = matroid_of_graph(petersen(), seed=1)
print("Petersen:", M.num_bases(), "bases")
for b in M.nonbases():
    print("  nonbasis", "".join(map(str, b)))

summary = census(4, 6, seed=1)["summary"]
for g, row in summary.items():
    print(f"genus {g}: {row['graphs']} graphs, {row['matroids']} matroids")

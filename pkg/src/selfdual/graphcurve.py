"""Graph curves: from a trivalent graph to a self-dual point configuration.

The canonical embedding of the graph curve of a 3-connected cubic graph G
of genus g sends each component (vertex v) to the line spanned by the
columns of the cycle matrix at the three edges of v.  Slicing with a
hyperplane leaves one point per vertex, 2g - 2 points in P^(g-2), and their
matroid is self-dual.
"""

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
import csv
import hashlib
import io
import json
import random

from . import exactnum as ex
from .config import matroid_of, retry_bound
from .errors import DegenerateHyperplane, GenericityNotCertified, NotConnected, NotTrivalent, RankDeficient
from .graphs import SimpleGraph, generate_cubic_3connected, write_graph6

HYPERPLANE_BOUND = 10 ** 6


class CycleMatrix:
    """A g x |E| matrix whose rows span the cycle space of a graph.

    Columns follow the graph's edge order.  Validated on construction: the
    rank is g = |E| - |V| + 1 and the three columns at every vertex span a
    plane.
    """

    def __init__(self, graph, rows):
        self.graph = graph
        self.rows = ex.to_matrix(rows)
        g = len(graph.edges) - graph.n + 1
        if len(self.rows) != g or ex.rank(self.rows) != g:
            raise ValueError(f"cycle matrix must have rank g = {g}")
        for v in range(graph.n):
            cols = graph.incident(v)
            if len(cols) != 3:
                raise NotTrivalent(f"vertex {v} has degree {len(cols)}")
            if ex.rank(ex.columns(self.rows, cols)) != 2:
                raise ValueError(f"columns at vertex {v} do not span a plane")

    @property
    def genus(self):
        return len(self.rows)

    def column(self, k):
        return [row[k] for row in self.rows]


def cycle_matrix(G):
    """Fundamental-cycle matrix for the BFS tree from vertex 0.

    Every edge is oriented from its smaller to its larger endpoint.  Row r
    belongs to the r-th non-tree edge (u, v), u < v: the cycle runs u -> v
    along that edge and back to u through the tree.
    """
    if not G.is_connected():
        raise NotConnected("the graph is not connected")
    parent, tree = G.bfs_tree(0)
    depth = {0: 0}

    def dep(v):
        if v not in depth:
            depth[v] = dep(parent[v][0]) + 1
        return depth[v]

    rows = []
    for k, (a, b) in enumerate(G.edges):
        if k in tree:
            continue
        u, v = min(a, b), max(a, b)
        row = [0] * len(G.edges)
        row[k] = 1
        # walk from v back to u: climb both ends to their common ancestor
        up_v, up_u = [], []
        x, y = v, u
        while x != y:
            if dep(x) >= dep(y):
                p, e = parent[x]
                up_v.append((x, p, e))
                x = p
            else:
                p, e = parent[y]
                up_u.append((y, p, e))
                y = p
        for frm, to, e in up_v:
            row[e] += 1 if frm < to else -1
        for frm, to, e in up_u:
            # traversed downward from 'to' into 'frm'
            row[e] += 1 if to < frm else -1
        rows.append(row)
    return CycleMatrix(G, rows)


def graph_curve_slice(C, h, delete=None):
    """Slice the graph curve by the hyperplane h; returns a (g-1) x |V| matrix.

    Point v is (h.c2) c1 - (h.c1) c2 for the first two independent columns
    c1, c2 at v.  Coordinate ``delete`` (default: the first index of largest
    |h_k|) is dropped to land in P^(g-2); any k with h_k != 0 gives a
    projectively equivalent configuration.
    """
    h = [ex.to_rational(x) for x in h]
    g = C.genus
    if len(h) != g:
        raise ValueError(f"hyperplane needs {g} coefficients")
    if delete is None:
        delete = max(range(g), key=lambda k: (abs(h[k]), -k))
    if h[delete] == 0:
        raise DegenerateHyperplane(f"h_{delete} = 0, cannot drop that coordinate")
    G = C.graph
    cols = []
    for v in range(G.n):
        inc = G.incident(v)
        pair = None
        for i in range(3):
            for j in range(i + 1, 3):
                c1, c2 = C.column(inc[i]), C.column(inc[j])
                if ex.rank([c1, c2]) == 2:
                    pair = (c1, c2)
                    break
            if pair:
                break
        c1, c2 = pair
        h1 = sum(a * b for a, b in zip(h, c1))
        h2 = sum(a * b for a, b in zip(h, c2))
        p = [h2 * a - h1 * b for a, b in zip(c1, c2)]
        if all(x == 0 for x in p):
            raise DegenerateHyperplane(f"the line of vertex {v} lies in the hyperplane")
        cols.append([x for k, x in enumerate(p) if k != delete])
    return ex.transpose(cols)


def _random_hyperplane(rng, g):
    return [Fraction(rng.randint(-HYPERPLANE_BOUND, HYPERPLANE_BOUND)) for _ in range(g)]


def matroid_of_graph(G, seed):
    """Self-dual matroid of the graph curve of G on the vertex set.

    Two independent random slices must give the same matroid; otherwise
    both are discarded and new ones drawn.
    """
    C = cycle_matrix(G)
    rng = random.Random(f"matroid_of_graph:{write_graph6(G)}:{seed}")
    for _ in range(retry_bound()):
        try:
            M1 = matroid_of(graph_curve_slice(C, _random_hyperplane(rng, C.genus)))
            M2 = matroid_of(graph_curve_slice(C, _random_hyperplane(rng, C.genus)))
        except (DegenerateHyperplane, RankDeficient):
            continue
        if M1 == M2:
            return M1
    raise GenericityNotCertified(f"slices kept disagreeing for {write_graph6(G)}")


# ---------------------------------------------------------------------------
# census
# ---------------------------------------------------------------------------


def _graph_task(args):
    g6, seed = args
    from .graphs import parse_graph6
    M = matroid_of_graph(parse_graph6(g6), seed)
    C = M.canonical_form()
    return g6, C.num_bases(), C.canonical_id()


def census(g_min, g_max, seed, jobs=1):
    """Graph curve matroids for every genus in [g_min, g_max].

    Returns a dict with ``rows`` (genus, graph6, basis_count, matroid id)
    and a per-genus ``summary``.  Output does not depend on ``jobs``.
    """
    tasks = []
    for g in range(g_min, g_max + 1):
        for G in generate_cubic_3connected(2 * g - 2):
            tasks.append((g, write_graph6(G)))
    work = [(g6, seed) for _, g6 in tasks]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_graph_task, work))
    else:
        results = [_graph_task(w) for w in work]
    rows = []
    summary = {}
    for (g, g6), (_, nb, cid) in zip(tasks, results):
        short = hashlib.sha256(cid.encode()).hexdigest()[:16]
        rows.append({"genus": g, "graph6": g6, "basis_count": nb, "matroid_canonical_id": short})
    rows.sort(key=lambda r: (r["genus"], r["basis_count"], r["matroid_canonical_id"], r["graph6"]))
    for g in range(g_min, g_max + 1):
        mine = [r for r in rows if r["genus"] == g]
        fibers = Counter(r["matroid_canonical_id"] for r in mine)
        bases_of = {r["matroid_canonical_id"]: r["basis_count"] for r in mine}
        dist = Counter(bases_of.values())
        fiber_sizes = {}
        for mid, k in fibers.items():
            fiber_sizes.setdefault(bases_of[mid], []).append(k)
        summary[g] = {
            "graphs": len(mine),
            "matroids": len(fibers),
            "basis_count_distribution": {str(b): dist[b] for b in sorted(dist)},
            "graphs_per_matroid": {str(b): sorted(fiber_sizes[b], reverse=True) for b in sorted(fiber_sizes)},
        }
    return {"rows": rows, "summary": summary}


def census_csv(result):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["genus", "graph6", "basis_count", "matroid_canonical_id"])
    for r in result["rows"]:
        w.writerow([r["genus"], r["graph6"], r["basis_count"], r["matroid_canonical_id"]])
    return buf.getvalue()


def census_json(result):
    return json.dumps({str(g): s for g, s in result["summary"].items()}, sort_keys=True, indent=2)


# ---------------------------------------------------------------------------
# the Petersen graph, with the edge order and cycles used in the literature
# ---------------------------------------------------------------------------

PETERSEN_EDGE_LABELS = ("12", "23", "34", "45", "51", "68", "80", "07", "79", "96",
                        "16", "27", "38", "49", "50")

PETERSEN_CYCLES = (
    (-1, -1, -1, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, -1, -1, 1, -1, 1, 0, 0, 0, 0, 0),
    (1, 0, 0, 0, 0, -1, -1, 1, 0, 0, -1, 1, 0, 0, 0),
    (1, 1, 0, 0, 0, -1, 0, 0, 0, 0, -1, 0, 1, 0, 0),
    (1, 1, 1, 0, 0, -1, -1, 1, -1, 0, -1, 0, 0, 1, 0),
    (1, 1, 1, 1, 0, -1, -1, 0, 0, 0, -1, 0, 0, 0, 1),
)


def petersen():
    return SimpleGraph(10, [(int(s[0]), int(s[1])) for s in PETERSEN_EDGE_LABELS])


def petersen_cycle_matrix():
    return CycleMatrix(petersen(), PETERSEN_CYCLES)

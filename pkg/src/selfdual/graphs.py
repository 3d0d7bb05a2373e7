"""Simple graphs, graph6, and the 3-connected cubic graphs."""

from collections import deque
from itertools import combinations

from .canon import canonical_labeling
from .errors import MalformedGraph6


class SimpleGraph:
    """Undirected simple graph on ``range(n)`` with an ordered edge list.

    Edge order matters: it fixes the column order of cycle matrices.  Each
    edge is stored as given; orientation conventions live with the callers.
    """

    def __init__(self, n, edges):
        self.n = n
        self.edges = [tuple(e) for e in edges]
        seen = set()
        for u, v in self.edges:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"bad edge {(u, v)}")
            key = frozenset((u, v))
            if key in seen:
                raise ValueError(f"repeated edge {(u, v)}")
            seen.add(key)
        self.adj = [set() for _ in range(n)]
        for u, v in self.edges:
            self.adj[u].add(v)
            self.adj[v].add(u)

    def __repr__(self):
        return f"SimpleGraph(n={self.n}, edges={len(self.edges)})"

    def degree(self, v):
        return len(self.adj[v])

    def incident(self, v):
        """Indices of the edges at v, in edge order."""
        return [k for k, e in enumerate(self.edges) if v in e]

    def edge_set(self):
        return {frozenset(e) for e in self.edges}

    def is_connected(self, removed=()):
        removed = set(removed)
        verts = [v for v in range(self.n) if v not in removed]
        if not verts:
            return True
        seen = {verts[0]}
        todo = [verts[0]]
        while todo:
            v = todo.pop()
            for w in self.adj[v]:
                if w not in seen and w not in removed:
                    seen.add(w)
                    todo.append(w)
        return len(seen) == len(verts)

    def is_k_connected(self, k):
        if self.n <= k:
            return False
        return all(self.is_connected(cut) for size in range(k) for cut in combinations(range(self.n), size))

    def bfs_tree(self, root=0):
        """Parent map and the set of tree edge indices of a BFS from ``root``.

        Neighbours are visited in edge order, which makes the tree
        deterministic.
        """
        parent = {root: None}
        tree = set()
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for k in self.incident(v):
                u, w = self.edges[k]
                other = w if u == v else u
                if other not in parent:
                    parent[other] = (v, k)
                    tree.add(k)
                    queue.append(other)
        return parent, tree

    def canonical_labeling(self):
        label, _ = canonical_labeling(self.n, self.edges, colors=[self.degree(v) for v in range(self.n)])
        return label

    def canonical_form(self):
        label = self.canonical_labeling()
        return SimpleGraph(self.n, sorted(tuple(sorted((label[u], label[v]))) for u, v in self.edges))

    def canonical_graph6(self):
        return write_graph6(self.canonical_form())

    def is_isomorphic(self, other):
        return (self.n, len(self.edges)) == (other.n, len(other.edges)) and \
            self.canonical_graph6() == other.canonical_graph6()


def is_trivalent_3connected(G):
    return G.n >= 4 and all(G.degree(v) == 3 for v in range(G.n)) and G.is_k_connected(3)


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

def write_graph6(G):
    n = G.n
    if n > 62:
        raise ValueError("only graphs with at most 62 vertices are supported")
    bits = []
    es = G.edge_set()
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if frozenset((i, j)) in es else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_graph6(text):
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise MalformedGraph6("empty string")
    if any(not (63 <= ord(ch) <= 126) for ch in s):
        raise MalformedGraph6("character outside the printable graph6 range")
    n = ord(s[0]) - 63
    if n > 62:
        raise MalformedGraph6("multi-byte vertex counts are not supported")
    need = n * (n - 1) // 2
    body = s[1:]
    if len(body) != (need + 5) // 6:
        raise MalformedGraph6(f"expected {(need + 5) // 6} data bytes for n={n}, got {len(body)}")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend((val >> (5 - i)) & 1 for i in range(6))
    if any(bits[need:]):
        raise MalformedGraph6("nonzero padding bits")
    edges, k = [], 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return SimpleGraph(n, edges)


# ---------------------------------------------------------------------------
# generation
# ---------------------------------------------------------------------------

K4 = SimpleGraph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def insert_edge(G, e, f):
    """Subdivide edges e and f (indices) and join the two new vertices."""
    x, y = G.n, G.n + 1
    edges = [ed for k, ed in enumerate(G.edges) if k not in (e, f)]
    (a, b), (c, d) = G.edges[e], G.edges[f]
    edges += [(a, x), (x, b), (c, y), (y, d), (x, y)]
    return SimpleGraph(G.n + 2, [tuple(sorted(ed)) for ed in edges])


def generate_cubic_3connected(nverts):
    """All 3-connected cubic graphs on ``nverts`` vertices, one per isomorphism class.

    Grown from K4 by edge insertion, deduplicated by canonical form at each
    size.  Returned in canonical form, sorted by graph6 string.
    """
    if nverts < 4 or nverts % 2:
        return []
    level = {K4.canonical_graph6(): K4.canonical_form()}
    size = 4
    while size < nverts:
        nxt = {}
        for G in level.values():
            for e, f in combinations(range(len(G.edges)), 2):
                H = insert_edge(G, e, f)
                if not is_trivalent_3connected(H):
                    continue
                key = H.canonical_graph6()
                if key not in nxt:
                    nxt[key] = H.canonical_form()
        level = nxt
        size += 2
    return [level[k] for k in sorted(level)]

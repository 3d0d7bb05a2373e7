"""Canonical labelling of small hypergraphs by individualization-refinement.

Both cubic graphs (edges of size 2) and matroids (nonbases of size n) are
canonicalized here.  The search is the usual one: refine an ordered
partition to an equitable one, individualize a vertex of the first
non-singleton cell, recurse, and keep the leaf with the smallest
certificate.  Automorphisms discovered at equal leaves prune the tree.

Sizes in this package never exceed a dozen points, so clarity wins over
speed throughout.
"""


def _refine(cells, incidence):
    """Split cells until every vertex in a cell sees the same cell profile."""
    cells = [list(c) for c in cells]
    while True:
        where = {}
        for i, c in enumerate(cells):
            for v in c:
                where[v] = i
        new_cells = []
        changed = False
        for c in cells:
            if len(c) == 1:
                new_cells.append(c)
                continue
            sig = {}
            for v in c:
                prof = sorted(tuple(sorted(where[u] for u in e if u != v)) for e in incidence[v])
                sig.setdefault(tuple(prof), []).append(v)
            if len(sig) == 1:
                new_cells.append(c)
                continue
            changed = True
            for key in sorted(sig):
                new_cells.append(sorted(sig[key]))
        cells = new_cells
        if not changed:
            return cells


def _orbit_reps(candidates, generators, prefix):
    """Keep one candidate per orbit of the generators that fix ``prefix``."""
    parent = {}

    def find(x):
        while parent.get(x, x) != x:
            x = parent[x]
        return x

    for g in generators:
        if all(g[p] == p for p in prefix):
            for v, w in enumerate(g):
                a, b = find(v), find(w)
                if a != b:
                    parent[max(a, b)] = min(a, b)
    seen, reps = set(), []
    for v in candidates:
        r = find(v)
        if r not in seen:
            seen.add(r)
            reps.append(v)
    return reps


def canonical_labeling(npoints, edges, colors=None):
    """Canonical relabelling of a hypergraph on ``range(npoints)``.

    ``edges`` is an iterable of vertex tuples.  ``colors`` optionally gives
    an initial invariant per vertex.  Returns ``(label, certificate)`` where
    ``label[v]`` is the new name of ``v`` and the certificate is the sorted
    tuple of relabelled edges.  Two hypergraphs are isomorphic exactly when
    their certificates agree.
    """
    edges = [tuple(e) for e in edges]
    incidence = [[] for _ in range(npoints)]
    for e in edges:
        for v in e:
            incidence[v].append(e)
    if colors is None:
        cells = [list(range(npoints))] if npoints else []
    else:
        groups = {}
        for v in range(npoints):
            groups.setdefault(colors[v], []).append(v)
        cells = [groups[k] for k in sorted(groups)]

    state = {"first": None, "best": None, "autos": []}

    def certificate(label):
        return tuple(sorted(tuple(sorted(label[v] for v in e)) for e in edges))

    def leaf(cells, path):
        label = [0] * npoints
        for i, c in enumerate(cells):
            label[c[0]] = i
        cert = certificate(label)
        rec = (cert, label, path)
        if state["first"] is None:
            state["first"] = state["best"] = rec
            return None
        for ref in (state["first"], state["best"]):
            if cert == ref[0]:
                inv = [0] * npoints
                for v, lab in enumerate(ref[1]):
                    inv[lab] = v
                gamma = [inv[label[v]] for v in range(npoints)]
                # gamma maps the reference leaf to this one
                gamma_inv = [0] * npoints
                for v, w in enumerate(gamma):
                    gamma_inv[w] = v
                state["autos"].append(gamma_inv)
                ref_path = ref[2]
                if len(ref_path) == len(path) and all(gamma_inv[a] == b for a, b in zip(ref_path, path)):
                    d = 0
                    while ref_path[d] == path[d]:
                        d += 1
                    return d
                return None
        if cert < state["best"][0]:
            state["best"] = rec
        return None

    def search(cells, path):
        cells = _refine(cells, incidence)
        target = next((c for c in cells if len(c) > 1), None)
        if target is None:
            return leaf(cells, path)
        ti = cells.index(target)
        depth = len(path)
        done = []
        for v in target:
            if done:
                reps = _orbit_reps(done + [v], state["autos"], path)
                if v not in reps:
                    continue
            child = cells[:ti] + [[v], [u for u in target if u != v]] + cells[ti + 1:]
            back = search(child, path + [v])
            done.append(v)
            if back is not None and back < depth:
                return back
        return None

    if npoints:
        search(cells, [])
        cert, label, _ = state["best"]
    else:
        cert, label = (), []
    return label, cert

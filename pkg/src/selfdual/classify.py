"""Enumeration of simple self-dual matroids of small rank.

A self-dual matroid of rank n on 2n elements is fixed by complementation,
so it is determined by a basis/nonbasis choice for each of the
C(2n, n) / 2 complementary pairs.  Depth-first search over the pairs, in
lex order of the smaller member, trying "nonbasis" first.  The pair
{0..n-1} / {n..2n-1} is a basis without loss of generality.

Pruning.  For a basis A and a in A, let T(A, a) be the elements outside
every still-possible exchange A - a + b together with a itself removed:
T = E - a - {b : A - a + b not yet ruled out}.  If an assigned basis lies
inside T, exchange is already violated and the branch dies.  A branch also
dies once every n-set through some pair {i, j} is a nonbasis, since i, j
are then parallel.  Leaves are checked for simplicity and canonicalized.
"""

from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from math import comb
import json

from .errors import ExchangeAxiomViolation
from .matroid import Matroid, layout

UNK, BASIS, NON = 0, 1, 2


class _Search:
    def __init__(self, n):
        self.n = n
        self.m = m = 2 * n
        self.full = (1 << m) - 1
        subsets, masks, index = layout(m, n)
        self.masks, self.index = masks, index
        self.pairs = []
        for k, mk in enumerate(masks):
            c = index[self.full ^ mk]
            if k < c:
                self.pairs.append((k, c))
        self.status = [UNK] * len(masks)
        self.bases = []
        # for each unordered pair {i, j}: number of n-sets through it not yet ruled out
        self.alive = {}
        for i, j in combinations(range(m), 2):
            self.alive[(1 << i) | (1 << j)] = comb(m - 2, n - 2)
        self.pair_masks_of = [[pm for pm in self.alive if mk & pm == pm] for mk in masks]

    def T(self, A, a):
        S = 0
        rest = self.full & ~A
        st, index = self.status, self.index
        while rest:
            b = rest & -rest
            rest ^= b
            if st[index[(A ^ a) | b]] != NON:
                S |= b
        return self.full & ~(S | a)

    def _dead_after_basis(self, X, Xc):
        for A in (X, Xc):
            y = A
            while y:
                a = y & -y
                y ^= a
                T = self.T(A, a)
                if any(B & ~T == 0 for B in self.bases):
                    return True
        for A in self.bases:
            if A in (X, Xc):
                continue
            y = A
            while y:
                a = y & -y
                y ^= a
                T = self.T(A, a)
                if X & ~T == 0 or Xc & ~T == 0:
                    return True
        return False

    def _dead_after_non(self, X, Xc):
        for mk in (X, Xc):
            for pm in self.pair_masks_of[self.index[mk]]:
                if self.alive[pm] == 0:
                    return True
        st, index = self.status, self.index
        for Y in (X, Xc):
            yb = Y
            while yb:
                b = yb & -yb
                yb ^= b
                out = self.full & ~Y
                while out:
                    a = out & -out
                    out ^= a
                    A = (Y ^ b) | a
                    if st[index[A]] == BASIS:
                        T = self.T(A, a)
                        if any(B & ~T == 0 for B in self.bases):
                            return True
        return False

    def assign(self, p, value):
        """Assign pair p; returns False if the branch is dead.  Always undo afterwards."""
        k, c = self.pairs[p]
        self.status[k] = self.status[c] = value
        X, Xc = self.masks[k], self.masks[c]
        if value == BASIS:
            self.bases.extend((X, Xc))
            return not self._dead_after_basis(X, Xc)
        for idx in (k, c):
            for pm in self.pair_masks_of[idx]:
                self.alive[pm] -= 1
        return not self._dead_after_non(X, Xc)

    def undo(self, p, value):
        k, c = self.pairs[p]
        self.status[k] = self.status[c] = UNK
        if value == BASIS:
            del self.bases[-2:]
        else:
            for idx in (k, c):
                for pm in self.pair_masks_of[idx]:
                    self.alive[pm] += 1

    def leaf(self):
        bits = 0
        for k, s in enumerate(self.status):
            if s == BASIS:
                bits |= 1 << k
        return bits

    def run(self, prefix, out):
        """DFS below a fixed assignment of the first len(prefix) pairs."""
        ok = True
        done = []
        for p, v in enumerate(prefix):
            alive = self.assign(p, v)
            done.append((p, v))
            if not alive:
                ok = False
                break
        if ok:
            self._dfs(len(prefix), out)
        for p, v in reversed(done):
            self.undo(p, v)

    def _dfs(self, p, out):
        if p == len(self.pairs):
            out.append(self.leaf())
            return
        for v in (NON, BASIS):
            if self.assign(p, v):
                self._dfs(p + 1, out)
            self.undo(p, v)


def _prefixes(search, depth):
    """All partial assignments of pairs 1..depth (pair 0 is always a basis)."""
    out = [[BASIS]]
    for _ in range(depth):
        out = [pre + [v] for pre in out for v in (NON, BASIS)]
    return out


def _task(args):
    n, prefix = args
    s = _Search(n)
    leaves = []
    s.run(prefix, leaves)
    found = {}
    for bits in leaves:
        M = Matroid(2 * n, n, bits)  # validates exchange once more
        if not M.is_simple():
            continue
        C = M.canonical_form()
        found.setdefault(C.bits, C)
    return found


def enumerate_selfdual(n, jobs=1, split_depth=None):
    """Simple self-dual matroids of rank n on 2n elements, up to isomorphism.

    Returned as canonical forms sorted by (number of nonbases, bitset).
    """
    s = _Search(n)
    if split_depth is None:
        split_depth = min(6, len(s.pairs) - 1)
    tasks = [(n, pre) for pre in _prefixes(s, split_depth)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_task, tasks))
    else:
        parts = [_task(t) for t in tasks]
    merged = {}
    for part in parts:
        for bits, C in part.items():
            merged.setdefault(bits, C)
    # canonical forms from different tasks may come from different labelings
    # only if canonicalization were broken, so this merge is exact
    return sorted(merged.values(), key=lambda M: (len(M.nonbases()), M.bits))


def close_under_complements(M):
    """Extend a rank-n matroid on 2n - 1 elements to a self-dual one on 2n.

    The new element is 2n - 1.  Bases are those of M together with the
    complements (in 2n) of those bases.  Returns None when that family
    violates basis exchange.
    """
    n, m = M.n, M.m
    if m != 2 * n - 1:
        raise ValueError("need a rank-n matroid on 2n - 1 elements")
    full = set(range(2 * n))
    bases = [tuple(b) for b in M.bases()]
    bases += [tuple(sorted(full - set(b))) for b in M.bases()]
    try:
        return Matroid.from_bases(2 * n, bases, n)
    except ExchangeAxiomViolation:
        return None


def matroid_list_to_json(ms):
    return json.dumps([M.to_json_obj() for M in ms], sort_keys=True)

"""Tropical Plücker vectors, the Dressian, and their self-dual loci.

Conventions: min-plus.  A tropical Plücker vector assigns a rational or INF
to each n-subset of range(m), stored in lex order.  The lineality space L
consists of the vectors (sum_{i in I} mu_i)_I.
"""

from fractions import Fraction
from itertools import combinations
import json

from . import exactnum as ex
from .exactnum import INF
from .errors import BadIndices, ExchangeAxiomViolation, NotAMatroid, NotATreePoint
from .matroid import Matroid


class TropicalPlucker:
    """Values q_I for the n-subsets I of range(m), INF allowed."""

    def __init__(self, n, m, values):
        self.n, self.m = n, m
        keys = list(combinations(range(m), n))
        if isinstance(values, dict):
            vals = {tuple(sorted(k)): v for k, v in values.items()}
            if set(vals) != set(keys):
                raise ValueError("values must cover every n-subset exactly once")
            self.values = {k: ex.parse_tropical(vals[k]) for k in keys}
        else:
            values = list(values)
            if len(values) != len(keys):
                raise ValueError(f"expected {len(keys)} values, got {len(values)}")
            self.values = {k: ex.parse_tropical(v) for k, v in zip(keys, values)}

    def __getitem__(self, I):
        return self.values[tuple(sorted(I))]

    def keys(self):
        return list(self.values)

    def as_list(self):
        return [self.values[k] for k in self.values]

    def support(self):
        return [k for k, v in self.values.items() if v is not INF]

    def __eq__(self, other):
        return isinstance(other, TropicalPlucker) and (self.n, self.m, self.values) == (other.n, other.m, other.values)

    def __repr__(self):
        return f"TropicalPlucker(n={self.n}, m={self.m}, {[ex.tropical_str(v) for v in self.as_list()]})"

    def to_json_obj(self):
        return {"n": self.n, "m": self.m,
                "values": {ex.subset_to_label(k): ex.tropical_str(v) for k, v in self.values.items()}}

    @classmethod
    def from_json_obj(cls, obj):
        n = obj["n"]
        m = obj.get("m", 2 * n)
        return cls(n, m, {ex.label_to_subset(k): v for k, v in obj["values"].items()})

    def to_json(self):
        return json.dumps(self.to_json_obj(), sort_keys=True)

    @classmethod
    def from_json(cls, text):
        return cls.from_json_obj(json.loads(text))


def _add(a, b):
    return INF if a is INF or b is INF else a + b


def three_term_relations(n, m):
    """(S, i, j, k, l) for |S| = n - 2 and i < j < k < l outside S."""
    for S in combinations(range(m), n - 2):
        rest = [x for x in range(m) if x not in S]
        for i, j, k, l in combinations(rest, 4):
            yield S, i, j, k, l


def dressian_member(q):
    """(True, None) if the min is attained twice in every three-term relation.

    Otherwise (False, witness) where the witness names the relation and its
    three term values.
    """
    for S, i, j, k, l in three_term_relations(q.n, q.m):
        terms = []
        for a, b, c, d in ((i, j, k, l), (i, k, j, l), (i, l, j, k)):
            terms.append(_add(q[S + (a, b)], q[S + (c, d)]))
        lo = min(terms)
        if lo is INF:
            continue
        if sum(1 for t in terms if t == lo) < 2:
            labels = [(tuple(sorted(S + (a, b))), tuple(sorted(S + (c, d))))
                      for a, b, c, d in ((i, j, k, l), (i, k, j, l), (i, l, j, k))]
            return False, {"relation": labels, "values": terms}
    return True, None


def trop_hodge_star(q):
    if q.m != 2 * q.n:
        raise ValueError("the Hodge star needs m = 2n")
    return TropicalPlucker(q.n, q.m, {I: q[ex.complement(I, q.m)] for I in q.keys()})


def lineality_vector(n, m, mu):
    return TropicalPlucker(n, m, {I: sum((Fraction(mu[i]) for i in I), Fraction(0))
                                  for I in combinations(range(m), n)})


def lineality_witness(d, n, m):
    """mu with d_I = sum_{i in I} mu_i for every I, or None.  d is a dict of finite values."""
    rows, rhs = [], []
    for I, v in d.items():
        rows.append([Fraction(int(i in I)) for i in range(m)])
        rhs.append(v)
    return ex.solve(rows, rhs)


def selfdual_witness(q):
    """mu with q_I + sum_{i in I} mu_i = q_{I^c} on the finite coordinates, or None.

    The support must be closed under complements.
    """
    if q.m != 2 * q.n:
        raise ValueError("self-duality needs m = 2n")
    d = {}
    for I in q.keys():
        a, b = q[I], q[ex.complement(I, q.m)]
        if (a is INF) != (b is INF):
            return None
        if a is not INF:
            d[I] = b - a
    if not d:
        return [Fraction(0)] * q.m
    return lineality_witness(d, q.n, q.m)


def lsd_spanning_set(n):
    m = 2 * n
    keys = list(combinations(range(m), n))
    vecs = []
    for i in range(m):
        vecs.append([Fraction(int(i in I)) for I in keys])
    for I in keys:
        Ic = ex.complement(I, m)
        if I < Ic:
            vecs.append([Fraction(int(J in (I, Ic))) for J in keys])
    return vecs


def lsd_dimension(n):
    return ex.rank(lsd_spanning_set(n))


def in_Lsd(q):
    """Membership of a finite vector in span(L, e_I + e_{I^c})."""
    if any(v is INF for v in q.as_list()):
        raise ValueError("in_Lsd is defined for finite vectors only")
    A = ex.transpose(lsd_spanning_set(q.n))
    return ex.solve(A, q.as_list()) is not None


def initial_matroid(q, w):
    """Matroid of the minimizers of q_I + sum_{i in I} w_i over the finite coordinates.

    Raises NotAMatroid if the minimizers violate basis exchange, which
    cannot happen for q in the Dressian.
    """
    w = [ex.to_rational(x) for x in w]
    vals = {}
    for I in q.support():
        vals[I] = q[I] + sum((w[i] for i in I), Fraction(0))
    if not vals:
        raise NotAMatroid("q has empty support")
    lo = min(vals.values())
    bases = [I for I, v in vals.items() if v == lo]
    try:
        return Matroid.from_bases(q.m, bases, q.n)
    except ExchangeAxiomViolation as exc:
        raise NotAMatroid(str(exc)) from exc


def pachter_speyer(q2):
    """Tree-space point on pairs of range(6) -> self-dual point on triples.

    r_ijk = q_ij + q_ik + q_jk.
    """
    if (q2.n, q2.m) != (2, 6):
        raise ValueError("pachter_speyer maps Gr(2,6) data")
    if any(v is INF for v in q2.as_list()):
        raise NotATreePoint("tree-space points are finite")
    ok, why = dressian_member(q2)
    if not ok:
        raise NotATreePoint(f"four-point condition fails: {why}")
    return TropicalPlucker(3, 6, {(i, j, k): q2[(i, j)] + q2[(i, k)] + q2[(j, k)]
                                  for i, j, k in combinations(range(6), 3)})


def e_vector(n, m, subsets):
    subsets = {tuple(sorted(s)) for s in subsets}
    return TropicalPlucker(n, m, {I: Fraction(int(I in subsets)) for I in combinations(range(m), n)})


def ray_vector(kind, indices):
    """Rays of trop Gr(3,6): E (3 indices), F (4), G (6), Esd (3).  0-based."""
    expected = {"E": 3, "F": 4, "G": 6, "Esd": 3}
    if kind not in expected:
        raise BadIndices(f"unknown ray type {kind!r}")
    idx = list(indices)
    if len(idx) != expected[kind] or len(set(idx)) != len(idx) or not all(0 <= i < 6 for i in idx):
        raise BadIndices(f"type {kind} needs {expected[kind]} distinct indices in range(6), got {idx}")
    counts = {}

    def add(s, c=1):
        key = tuple(sorted(s))
        counts[key] = counts.get(key, 0) + c

    if kind == "E":
        add(idx)
    elif kind == "Esd":
        add(idx)
        add(ex.complement(sorted(idx), 6))
    else:
        for s in combinations(idx[:4], 3):
            add(s)
        if kind == "G":
            add((idx[2], idx[3], idx[4]))
            add((idx[2], idx[3], idx[5]))
    return TropicalPlucker(3, 6, {I: Fraction(counts.get(I, 0)) for I in combinations(range(6), 3)})


def tropicalize_config(M):
    """Valuations of the maximal minors of a matrix over Puiseux sums."""
    n, m = len(M), len(M[0])
    minors = ex.puiseux_minors(M)
    return TropicalPlucker(n, m, {I: ex.valuation(v) for I, v in minors.items()})


def matroid_height(M):
    """q_I = 0 on bases and 1 on nonbases."""
    return TropicalPlucker(M.n, M.m, {I: Fraction(0 if M.is_basis(I) else 1)
                                      for I in combinations(range(M.m), M.n)})


# ---------------------------------------------------------------------------
# naive tropical Cayley octad map
# ---------------------------------------------------------------------------

def tropical_octad_x(q7):
    """Tropical x_1..x_7: min of the two monomial sums of each binomial."""
    from .octad import OCTAD_BINOMIALS
    out = []
    for plus, minus in OCTAD_BINOMIALS:
        a = sum((q7[ex.label_to_subset(s)] for s in plus), Fraction(0))
        b = sum((q7[ex.label_to_subset(s)] for s in minus), Fraction(0))
        out.append(min(a, b))
    return out


def naive_trop_gamma(q7):
    """Naive tropicalization of the octad map on a 4 x 7 tropical Plücker vector.

    r_I = q_I for I inside the first seven points; for the other subsets,
    r_I = q_J - sum_{j in J} mu_j with J the complement of I.
    Returns (r, mu).
    """
    if (q7.n, q7.m) != (4, 7):
        raise ValueError("naive_trop_gamma needs Dr(4,7) data")
    mu = tropical_octad_x(q7)
    vals = {}
    for I in combinations(range(8), 4):
        if 7 not in I:
            vals[I] = q7[I]
        else:
            J = ex.complement(I, 8)
            vals[I] = q7[J] - sum((mu[j] for j in J), Fraction(0))
    return TropicalPlucker(4, 8, vals), mu

"""Cayley octads: the unique eighth point making seven points in P^3 self-dual.

Given the Plücker vector of seven points (4 x 7), seven quartic binomials
x_1..x_7 determine the Plücker vector of the self-dual octad, from which a
4 x 8 matrix is read off.
"""

from fractions import Fraction
from itertools import combinations
import json

from . import exactnum as ex
from .errors import DegenerateSevenPoints, NotOnGrassmannian, OnTwistedCubicOrConicProjection, WrongDimensions

# x_i = prod(first) - prod(second), labels 1-based as usual for point sets
OCTAD_BINOMIALS = (
    (("1234", "1256", "1357", "1467"), ("1235", "1246", "1347", "1567")),
    (("1235", "1246", "2347", "2567"), ("1234", "1256", "2357", "2467")),
    (("1234", "1356", "2357", "3467"), ("1235", "1346", "2347", "3567")),
    (("1245", "1346", "2347", "4567"), ("1234", "1456", "2457", "3467")),
    (("1235", "1456", "2457", "3567"), ("1245", "1356", "2357", "4567")),
    (("1246", "1356", "2367", "4567"), ("1236", "1456", "2467", "3567")),
    (("1237", "1457", "2467", "3567"), ("1247", "1357", "2367", "4567")),
)


def octad_x(p7):
    """The seven binomials x_1..x_7, returned as a list (index 0 is x_1)."""
    out = []
    for plus, minus in OCTAD_BINOMIALS:
        a = b = Fraction(1)
        for s in plus:
            a *= p7[ex.label_to_subset(s)]
        for s in minus:
            b *= p7[ex.label_to_subset(s)]
        out.append(a - b)
    return out


def gamma(X7):
    """Plücker vector (dict over 4-subsets of range(8)) of the octad through X7."""
    X7 = ex.to_matrix(X7)
    if ex.shape(X7) != (4, 7):
        raise WrongDimensions(f"expected a 4 x 7 matrix, got {ex.shape(X7)}")
    p7 = ex.maximal_minors(X7)
    if any(v == 0 for v in p7.values()):
        zero = [ex.subset_to_label(I) for I, v in p7.items() if v == 0]
        raise DegenerateSevenPoints(f"vanishing minors {zero}")
    x = octad_x(p7)
    if any(v == 0 for v in x):
        zero = [i + 1 for i, v in enumerate(x) if v == 0]
        raise OnTwistedCubicOrConicProjection(f"x_i = 0 for i in {zero}")
    p = {}
    for I in combinations(range(8), 4):
        if 7 not in I:
            p[I] = p7[I]
        else:
            J = ex.complement(I, 8)  # J lies inside the first seven points
            prod = Fraction(1)
            for i in J:
                prod *= x[i]
            p[I] = ex.shuffle_sign(I, J) * p7[J] / prod
    return p


def reconstruct_matrix(p, I0=None):
    """An n x m matrix whose maximal minors are p up to one global scalar.

    Columns I0 (default: the first nonzero coordinate) form the identity.
    Raises NotOnGrassmannian when p is not decomposable.
    """
    keys = list(p)
    n = len(keys[0])
    m = max(max(k) for k in keys) + 1
    if I0 is None:
        I0 = next(I for I in combinations(range(m), n) if p.get(I, 0) != 0)
    I0 = tuple(I0)
    base = p[I0]
    if base == 0:
        raise NotOnGrassmannian(f"p vanishes at the chosen chart {I0}")
    M = [[Fraction(0)] * m for _ in range(n)]
    for r, ir in enumerate(I0):
        for j in range(m):
            if j in I0:
                M[r][j] = Fraction(int(j == ir))
                continue
            seq = list(I0)
            seq[r] = j
            J = tuple(sorted(seq))
            M[r][j] = ex.perm_sign(seq) * p.get(J, Fraction(0)) / base
    minors = ex.maximal_minors(M)
    for I in combinations(range(m), n):
        if minors[I] * base != p.get(I, Fraction(0)):
            raise NotOnGrassmannian(f"Plücker relation fails at {I}")
    return M


def octad(X7):
    """4 x 8 matrix of the Cayley octad through the seven columns of X7."""
    return reconstruct_matrix(gamma(X7), (0, 1, 2, 3))


def twisted_cubic(ts):
    return [[Fraction(t) ** k for t in ts] for k in range(4)]


def points_to_json(X):
    n, m = ex.shape(X)
    return json.dumps({"n": n, "columns": [[ex.rational_str(X[i][k]) for i in range(n)] for k in range(m)]},
                      sort_keys=True)

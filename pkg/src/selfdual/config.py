"""Point configurations: 2n points in P^(n-1) as the columns of an n x 2n matrix.

A configuration X is self-dual when X * diag(L) * X^T = 0 for a nowhere-zero
vector L.  This module finds such L (the certificate), relates it to the
Hodge star on Plücker vectors, and samples self-dual configurations exactly
via the Cayley transform.
"""

from fractions import Fraction
from itertools import combinations
import json
import os
import random

from . import exactnum as ex
from .errors import (DegenerateParameters, DisconnectedSupport, NormalFormUnavailable, RankDeficient,
                     SamplerExhausted, WrongDimensions)
from .matroid import Matroid, layout, mask_of

DEFAULT_RETRY_BOUND = 1000


def retry_bound():
    return int(os.environ.get("SELFDUAL_RETRY_BOUND", DEFAULT_RETRY_BOUND))


def matroid_of(X):
    """Column matroid of a full-rank n x m matrix."""
    X = ex.to_matrix(X)
    n, m = ex.shape(X)
    if ex.rank(X) < n:
        raise RankDeficient(f"rank {ex.rank(X)} < {n}")
    A, _ = ex.integer_rows(X)
    _, _, index = layout(m, n)
    bits = 0
    for idx, nonzero in ex.int_minor_support(A, n, m):
        if nonzero:
            bits |= 1 << index[mask_of(idx)]
    return Matroid(m, n, bits, _checked=True)


def quadric_matrix(X):
    """Rows indexed by i <= j, columns by points k: entry X[i][k] * X[j][k]."""
    X = ex.to_matrix(X)
    n, m = ex.shape(X)
    return [[X[i][k] * X[j][k] for k in range(m)] for i in range(n) for j in range(i, n)]


def normalize_witness(v):
    first = next(x for x in v if x != 0)
    return [x / first for x in v]


def selfdual_certificate(X):
    """A nowhere-zero L with X diag(L) X^T = 0, or None.

    The solutions form the kernel of ``quadric_matrix(X)``.  A nowhere-zero
    kernel vector exists iff no coordinate vanishes on the whole kernel; one
    is then found among K_0 + t K_1 + t^2 K_2 + ... for t = 1, 2, ...
    The witness is scaled so its first entry is 1.
    """
    X = ex.to_matrix(X)
    n, m = ex.shape(X)
    if m != 2 * n:
        raise WrongDimensions(f"expected n x 2n, got {n} x {m}")
    K = ex.kernel_basis(quadric_matrix(X))
    if not K or any(all(v[k] == 0 for v in K) for k in range(m)):
        return None
    # each coordinate is a nonzero polynomial in t of degree < len(K); at most
    # m * len(K) values of t can kill one, so this loop terminates
    t = 1
    while True:
        w = [sum(Fraction(t) ** j * v[k] for j, v in enumerate(K)) for k in range(m)]
        if all(x != 0 for x in w):
            return normalize_witness(w)
        t += 1


def check_certificate(X, L):
    X = ex.to_matrix(X)
    D = [[X[i][k] * L[k] for k in range(len(L))] for i in range(len(X))]
    return all(x == 0 for row in ex.matmul(D, ex.transpose(X)) for x in row)


# ---------------------------------------------------------------------------
# Plücker vectors
# ---------------------------------------------------------------------------

def plucker(X):
    """Maximal minors as a dict keyed by lex 0-based tuples."""
    return ex.maximal_minors(X)


def _dims(p):
    key = next(iter(p))
    n = len(key)
    return n, 2 * n


def hodge_star(p):
    """p*_{I^c} = sign(I, I^c) p_I for every n-subset I of range(2n)."""
    n, m = _dims(p)
    out = {}
    for I in combinations(range(m), n):
        Ic = ex.complement(I, m)
        out[Ic] = ex.shuffle_sign(I, Ic) * p[I]
    return {I: out[I] for I in combinations(range(m), n)}


def solve_torus(ratios, m):
    """Find (c, lam) with ratios[I] = c * prod(lam[i] for i in I).

    ``ratios`` maps the support (a list of n-subsets) to nonzero rationals.
    lam is propagated along basis exchanges starting from lam[0] = 1, then
    every equation is checked.  Returns None when the equations are
    inconsistent; raises DisconnectedSupport when some lam[i] is not
    determined by the exchange graph.
    """
    support = set(ratios)
    lam = [None] * m
    first_elem = min(i for I in support for i in I)
    lam[first_elem] = Fraction(1)
    changed = True
    while changed:
        changed = False
        for I in support:
            rI = ratios[I]
            for i in I:
                for j in range(m):
                    if j in I or (lam[i] is None) == (lam[j] is None):
                        continue
                    J = tuple(sorted(set(I) - {i} | {j}))
                    if J not in support:
                        continue
                    # lam[j] / lam[i] = ratios[J] / ratios[I]
                    if lam[j] is None:
                        lam[j] = lam[i] * ratios[J] / rI
                    else:
                        lam[i] = lam[j] * rI / ratios[J]
                    changed = True
    if any(x is None for x in lam):
        missing = [i for i, x in enumerate(lam) if x is None]
        raise DisconnectedSupport(f"points {missing} are not linked to point {first_elem} by basis exchanges")
    I0 = next(iter(sorted(support)))
    prod0 = Fraction(1)
    for i in I0:
        prod0 *= lam[i]
    c = ratios[I0] / prod0
    for I, r in ratios.items():
        prod = c
        for i in I:
            prod *= lam[i]
        if prod != r:
            return None
    return c, lam


def lambda_from_plucker(p):
    """The torus element L with p* = c * L . p, scaled so L[0] = 1; None if absent.

    Needs the support of p to be the bases of a connected matroid.
    """
    n, m = _dims(p)
    star = hodge_star(p)
    support = [I for I, v in p.items() if v != 0]
    if any(star[I] == 0 for I in support) or any(p[I] == 0 for I, v in star.items() if v != 0):
        return None
    ratios = {I: star[I] / p[I] for I in support}
    res = solve_torus(ratios, m)
    if res is None:
        return None
    return normalize_witness(res[1])


# ---------------------------------------------------------------------------
# Normal form
# ---------------------------------------------------------------------------

def normalize(X):
    """Canonical representative of X up to row operations and column scaling.

    The result is (Id | Y) where the first column of Y and the first row of
    Y consist of ones.
    """
    X = ex.to_matrix(X)
    n, m = ex.shape(X)
    X1 = ex.columns(X, range(n))
    if ex.det(X1) == 0:
        raise NormalFormUnavailable("the first n columns are not a basis")
    Y = ex.matmul(ex.inverse(X1), X)
    v = [Y[i][n] for i in range(n)]
    if any(x == 0 for x in v):
        raise NormalFormUnavailable(f"column {n} has a zero entry after reducing to (Id | *)")
    # divide row i by v_i, then multiply column i by v_i to restore the identity
    Y = [[x / v[i] for x in row] for i, row in enumerate(Y)]
    for i in range(n):
        for r in range(n):
            Y[r][i] *= v[i]
    for j in range(n + 1, m):
        s = Y[0][j]
        if s == 0:
            raise NormalFormUnavailable(f"row 0 has a zero in column {j} after reducing to (Id | *)")
        for r in range(n):
            Y[r][j] /= s
    return Y


# ---------------------------------------------------------------------------
# Sampling
# ---------------------------------------------------------------------------

def _random_rational(rng):
    return Fraction(rng.randint(-6, 6), rng.randint(1, 4))


def cayley(S):
    n = len(S)
    I = ex.identity(n)
    minus = [[I[i][j] - S[i][j] for j in range(n)] for i in range(n)]
    plus = [[I[i][j] + S[i][j] for j in range(n)] for i in range(n)]
    return ex.matmul(minus, ex.inverse(plus))


def sample_selfdual(n, seed):
    """Exact self-dual configuration (Id | R), R orthogonal, all minors nonzero.

    Returns (X, L) with L = (1, ..., 1, -1, ..., -1).
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    rng = random.Random(f"sample_selfdual:{n}:{seed}")
    for _ in range(retry_bound()):
        S = [[Fraction(0)] * n for _ in range(n)]
        for i, j in combinations(range(n), 2):
            S[i][j] = _random_rational(rng)
            S[j][i] = -S[i][j]
        R = cayley(S)
        X = [ex.identity(n)[i] + R[i] for i in range(n)]
        if all(v != 0 for v in ex.maximal_minors(X).values()):
            return X, [Fraction(1)] * n + [Fraction(-1)] * n
    raise SamplerExhausted(f"no generic sample for n={n} within {retry_bound()} tries")


def random_configuration(n, m, seed, lo=-9, hi=9):
    rng = random.Random(f"random_configuration:{n}:{m}:{seed}")
    return [[Fraction(rng.randint(lo, hi)) for _ in range(m)] for _ in range(n)]


# ---------------------------------------------------------------------------
# Polynomials in Plücker coordinates
# ---------------------------------------------------------------------------

def _p(p, label):
    return p[ex.label_to_subset(label)]


def conic_quartic(p):
    """p123 p145 p356 p246 - p124 p135 p456 p236; vanishes iff six points lie on a conic."""
    n, m = _dims(p)
    if (n, m) != (3, 6):
        raise WrongDimensions("conic_quartic needs six points in the plane")
    g = lambda s: _p(p, s)
    return g("123") * g("145") * g("356") * g("246") - g("124") * g("135") * g("456") * g("236")


def conic_matrix(X):
    """The 6 x 6 matrix of quadratic monomials in the coordinates of six points."""
    X = ex.to_matrix(X)
    return [[X[i][k] * X[j][k] for i in range(3) for j in range(i, 3)] for k in range(6)]


NONVAMOS_NONBASES = ("1256", "1357", "1458", "2367", "2468", "3478")

NONVAMOS_QUARTICS = (
    (("1234", "1356", "2578", "4678"), ("1235", "1346", "2478", "5678")),
    (("1234", "1257", "3568", "4678"), ("1235", "1247", "3468", "5678")),
    (("1234", "1456", "2578", "3678"), ("1245", "1346", "2378", "5678")),
    (("1234", "1267", "3568", "4578"), ("1236", "1247", "3458", "5678")),
)


def nonvamos_quartics(p):
    out = []
    for plus, minus in NONVAMOS_QUARTICS:
        a = b = Fraction(1)
        for s in plus:
            a *= _p(p, s)
        for s in minus:
            b *= _p(p, s)
        out.append(a - b)
    return out


def nonvamos_matroid():
    nb = [ex.label_to_subset(s) for s in NONVAMOS_NONBASES]
    nb += [ex.complement(s, 8) for s in nb]
    return Matroid.from_nonbases(8, 4, nb)


def nonvamos_sample(a, b, c):
    """The self-dual realization of the non-Vamos matroid for given a, b, c."""
    a, b, c = (ex.to_rational(x) for x in (a, b, c))
    den = 2 * a * b * c - a * b - a * c - b * c + 1
    if den == 0:
        raise DegenerateParameters("2abc - ab - ac - bc + 1 = 0")
    d = (a * b * c - a - b - c + 2) / den
    one, zero = Fraction(1), Fraction(0)
    X = [[one, zero, zero, zero, a, one, one, one],
         [zero, one, zero, zero, one, b, one, one],
         [zero, zero, one, zero, one, one, c, one],
         [zero, zero, zero, one, one, one, one, d]]
    if matroid_of_safe(X) != nonvamos_matroid():
        raise DegenerateParameters(f"(a,b,c,d) = ({a},{b},{c},{d}) gives a different matroid")
    return X


def matroid_of_safe(X):
    try:
        return matroid_of(X)
    except RankDeficient:
        return None


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------

def config_to_json_obj(X):
    n, m = ex.shape(X)
    return {"n": n, "columns": [[ex.rational_str(X[i][k]) for i in range(n)] for k in range(m)]}


def config_from_json_obj(obj):
    cols = [[ex.to_rational(x) for x in col] for col in obj["columns"]]
    X = ex.transpose(cols)
    if len(X) != obj["n"]:
        raise WrongDimensions(f"columns have length {len(X)}, expected n = {obj['n']}")
    return X


def config_to_json(X):
    return json.dumps(config_to_json_obj(X), sort_keys=True)


def config_from_json(text):
    return config_from_json_obj(json.loads(text))

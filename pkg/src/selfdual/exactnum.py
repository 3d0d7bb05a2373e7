"""Exact arithmetic: rational matrices, Puiseux polynomials, valuations.

Matrices are plain lists of rows whose entries are ``fractions.Fraction``.
Every routine is exact; nothing here ever touches a float.
"""

from fractions import Fraction
from functools import total_ordering
from itertools import combinations, permutations
from math import lcm

from .errors import NotSquare, SingularMatrix


def to_rational(x):
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot read {x!r} as an exact rational")


def rational_str(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def to_matrix(rows):
    out = [[to_rational(x) for x in row] for row in rows]
    if out and any(len(r) != len(out[0]) for r in out):
        raise ValueError("ragged matrix")
    return out


def shape(M):
    return (len(M), len(M[0]) if M else 0)


def transpose(M):
    return [list(col) for col in zip(*M)]


def matmul(A, B):
    Bt = transpose(B)
    return [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in Bt] for row in A]


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def columns(M, idx):
    """Submatrix on the given column indices, in the given order."""
    return [[row[j] for j in idx] for row in M]


# ---------------------------------------------------------------------------
# Elimination
# ---------------------------------------------------------------------------

def rref(M):
    """Reduced row echelon form and pivot columns.

    Pivots are chosen by largest absolute value in the column; with exact
    arithmetic this only matters for the size of intermediate numbers.
    """
    A = [list(r) for r in to_matrix(M)]
    rows, cols = shape(A)
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        best = max(range(r, rows), key=lambda i: abs(A[i][c]))
        if A[best][c] == 0:
            continue
        A[r], A[best] = A[best], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(rows):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    return A, pivots


def rank(M):
    if not M or not M[0]:
        return 0
    return len(rref(M)[1])


def kernel_basis(M):
    """Basis of the right kernel {v : M v = 0}, one vector per free column."""
    A, pivots = rref(M)
    cols = shape(M)[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -A[r][f]
        basis.append(v)
    return basis


def solve(A, b):
    """One exact solution x of A x = b, or None when inconsistent.

    Free variables are set to zero.
    """
    aug = [list(row) + [to_rational(bi)] for row, bi in zip(to_matrix(A), b)]
    R, pivots = rref(aug)
    ncols = shape(A)[1]
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for r, p in enumerate(pivots):
        x[p] = R[r][-1]
    return x


def inverse(M):
    n, m = shape(M)
    if n != m:
        raise NotSquare(f"{n}x{m} matrix has no inverse")
    aug = [list(row) + e for row, e in zip(to_matrix(M), identity(n))]
    R, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix("matrix is singular")
    return [row[n:] for row in R]


def _bareiss_int(A):
    """Determinant of a square integer matrix by fraction-free elimination."""
    A = [list(r) for r in A]
    n = len(A)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i, row_k = A[i], A[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * A[n - 1][n - 1] if n else 1


def integer_rows(M):
    """Scale each row to integers; returns (rows, product of the scale factors)."""
    out, scale = [], 1
    for row in M:
        d = lcm(*(Fraction(x).denominator for x in row)) if row else 1
        out.append([int(Fraction(x) * d) for x in row])
        scale *= d
    return out, scale


def det(M):
    n, m = shape(M)
    if n != m:
        raise NotSquare(f"{n}x{m} matrix has no determinant")
    A, scale = integer_rows(to_matrix(M))
    return Fraction(_bareiss_int(A), scale)


def maximal_minors(M):
    """All n x n minors of an n x m matrix, keyed by lex-ordered column tuples.

    Keys are 0-based column index tuples; iteration order is lexicographic.
    """
    n, m = shape(M)
    if n > m:
        raise ValueError("more rows than columns")
    A, scale = integer_rows(to_matrix(M))
    out = {}
    for idx in combinations(range(m), n):
        sub = [[row[j] for j in idx] for row in A]
        out[idx] = Fraction(_bareiss_int(sub), scale)
    return out


def int_minor_support(A, n, m):
    """Zero pattern of the maximal minors of an integer matrix (fast path)."""
    return [(idx, _bareiss_int([[row[j] for j in idx] for row in A]) != 0)
            for idx in combinations(range(m), n)]


# ---------------------------------------------------------------------------
# Subsets and signs
# ---------------------------------------------------------------------------

def perm_sign(seq):
    """Sign of the permutation that sorts ``seq`` (entries distinct)."""
    seq = list(seq)
    inv = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inv += 1
    return -1 if inv % 2 else 1


def complement(subset, m):
    s = set(subset)
    return tuple(i for i in range(m) if i not in s)


def shuffle_sign(first, second):
    """sign(I, J): parity of the concatenation I followed by J."""
    return perm_sign(tuple(first) + tuple(second))


def label_to_subset(label, one_based=True):
    """``"1256"`` -> (0, 1, 4, 5).  Digits only, so ground sets up to 9 (or 10 with 0)."""
    off = 1 if one_based else 0
    return tuple(sorted(int(ch) - off for ch in str(label)))


def subset_to_label(subset, one_based=True):
    off = 1 if one_based else 0
    return "".join(str(i + off) for i in subset)


# ---------------------------------------------------------------------------
# Infinity and valuations
# ---------------------------------------------------------------------------

@total_ordering
class Infinity:
    """The tropical +infinity.  A singleton; compares above every rational."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("selfdual-infinity")

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __sub__(self, other):
        if other is self:
            raise ArithmeticError("inf - inf")
        return self

    def __neg__(self):
        raise ArithmeticError("-inf is not representable")


INF = Infinity()


def is_inf(x):
    return x is INF


def tropical_str(x):
    return "inf" if x is INF else rational_str(x)


def parse_tropical(s):
    if s is INF or (isinstance(s, str) and s.strip().lower() in ("inf", "+inf", "infinity")):
        return INF
    return to_rational(s)


class Puiseux:
    """Finite sum of c * t^e with rational exponents and coefficients.

    Stored as a dict exponent -> nonzero coefficient.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for e, c in (terms or {}).items():
            c = to_rational(c)
            if c != 0:
                clean[to_rational(e)] = c
        self.terms = clean

    @classmethod
    def const(cls, c):
        return cls({0: c})

    @classmethod
    def monomial(cls, c, e):
        return cls({e: c})

    @classmethod
    def coerce(cls, x):
        return x if isinstance(x, Puiseux) else cls.const(to_rational(x))

    def is_zero(self):
        return not self.terms

    def valuation(self):
        return min(self.terms) if self.terms else INF

    def leading_coefficient(self):
        return self.terms[min(self.terms)] if self.terms else Fraction(0)

    def __add__(self, other):
        other = Puiseux.coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Puiseux(out)

    __radd__ = __add__

    def __neg__(self):
        return Puiseux({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-Puiseux.coerce(other))

    def __rsub__(self, other):
        return Puiseux.coerce(other) - self

    def __mul__(self, other):
        other = Puiseux.coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return Puiseux(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers of Puiseux sums are not supported")
        out = Puiseux.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        try:
            other = Puiseux.coerce(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = [f"{rational_str(c)}*t^{rational_str(e)}" for e, c in sorted(self.terms.items())]
        return " + ".join(parts)


T = Puiseux.monomial(1, 1)


def valuation(x):
    """Valuation of a Puiseux sum (or of a plain rational, which is 0 or inf)."""
    if isinstance(x, Puiseux):
        return x.valuation()
    return INF if to_rational(x) == 0 else Fraction(0)


def puiseux_det(M):
    """Determinant over Puiseux sums by Laplace expansion along the first row.

    Fine for the small matrices met here (n <= 6); the cost is n!.
    """
    n = len(M)
    if n == 0:
        return Puiseux.const(1)
    if any(len(r) != n for r in M):
        raise NotSquare("puiseux_det needs a square matrix")
    total = Puiseux()
    for perm in permutations(range(n)):
        term = Puiseux.const(perm_sign(perm))
        for i, j in enumerate(perm):
            term = term * Puiseux.coerce(M[i][j])
            if term.is_zero():
                break
        total = total + term
    return total


def puiseux_minors(M):
    n, m = len(M), len(M[0])
    return {idx: puiseux_det([[row[j] for j in idx] for row in M])
            for idx in combinations(range(m), n)}

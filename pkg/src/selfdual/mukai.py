"""Quadrics of the four Mukai Grassmannians (genus 7 to 10) and their parametrizations.

Generators live in ``data/mukai.json`` as Macaulay2-style strings over the
variables a, b, c, ...; they are parsed once into sparse polynomials
(exponent tuple -> integer coefficient).  For genus 10 the file holds the
7 x 7 skew matrix; its 35 sub-Pfaffians of size 4 span a 28-dimensional
space of quadrics and the first 28 independent ones (in lex order of the
row sets) are kept.
"""

from fractions import Fraction
from functools import lru_cache
from importlib import resources
from itertools import combinations
import ast
import json

from . import exactnum as ex
from .errors import NotSkew, WrongGenus, WrongLength

GENERA = (7, 8, 9, 10)


class Poly:
    """Sparse polynomial in a fixed number of variables."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = {k: v for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def const(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars, i):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return Poly(self.nvars, out)

    def __neg__(self):
        return Poly(self.nvars, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                out[k] = out.get(k, 0) + v1 * v2
        return Poly(self.nvars, out)

    def __pow__(self, e):
        out = Poly.const(self.nvars, 1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, Poly) and self.terms == other.terms

    def degree(self):
        return max((sum(k) for k in self.terms), default=-1)

    def is_homogeneous(self):
        return len({sum(k) for k in self.terms}) <= 1

    def __call__(self, point):
        total = Fraction(0)
        for k, c in self.terms.items():
            t = Fraction(c)
            for x, e in zip(point, k):
                if e:
                    t *= x ** e
            total += t
        return total

    def to_str(self, names):
        parts = []
        for k in sorted(self.terms, reverse=True):
            c = self.terms[k]
            mono = "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(names, k) if e)
            coef = "" if abs(c) == 1 and mono else str(abs(c))
            body = "*".join(s for s in (coef, mono) if s)
            parts.append(("-" if c < 0 else "+") + body)
        s = "".join(parts) or "0"
        return s[1:] if s.startswith("+") else s


def parse_poly(text, names):
    """Parse a string such as ``"g*h+2*d*k-c*l"`` over the variable names."""
    n = len(names)
    index = {c: i for i, c in enumerate(names)}
    tree = ast.parse(text.replace("^", "**"), mode="eval").body

    def go(node):
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                if not isinstance(node.right, ast.Constant) or not isinstance(node.right.value, int):
                    raise ValueError("exponents must be integer literals")
                return go(node.left) ** node.right.value
            a, b = go(node.left), go(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return a * b
        elif isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = go(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        elif isinstance(node, ast.Constant) and isinstance(node.value, int):
            return Poly.const(n, node.value)
        elif isinstance(node, ast.Name) and node.id in index:
            return Poly.var(n, index[node.id])
        raise ValueError(f"unsupported syntax in {text!r}")

    return go(tree)


def pfaffian4(M, rows):
    i, j, k, l = rows
    return M[i][j] * M[k][l] - M[i][k] * M[j][l] + M[i][l] * M[j][k]


@lru_cache(maxsize=None)
def _data():
    text = resources.files("selfdual").joinpath("data/mukai.json").read_text()
    return json.loads(text)


def data_version():
    return _data()["version"]


def variables(g):
    return _entry(g)["variables"]


def _entry(g):
    if g not in GENERA:
        raise WrongGenus(f"genus must be one of {GENERA}, got {g}")
    return _data()["genera"][str(g)]


def _independent(polys):
    """Greedy lex-first subset of linearly independent polynomials."""
    keys = sorted({k for p in polys for k in p.terms})
    chosen, rows = [], []
    for p in polys:
        trial = rows + [[Fraction(p.terms.get(k, 0)) for k in keys]]
        if ex.rank(trial) == len(trial):
            rows = trial
            chosen.append(p)
    return chosen


@lru_cache(maxsize=None)
def generators(g):
    """The generating quadrics of the genus-g Mukai Grassmannian, as Poly objects."""
    entry = _entry(g)
    names = entry["variables"]
    if "generators" in entry:
        return tuple(parse_poly(s, names) for s in entry["generators"])
    M = [[parse_poly(s, names) for s in row] for row in entry["pfaffian_matrix"]]
    pf = [pfaffian4(M, rows) for rows in combinations(range(len(M)), 4)]
    chosen = tuple(_independent(pf))
    if len(chosen) != entry["generator_count"]:
        raise ValueError(f"expected {entry['generator_count']} independent Pfaffians, got {len(chosen)}")
    return chosen


def evaluate_generators(g, point):
    gens = generators(g)
    point = [ex.to_rational(x) for x in point]
    nv = len(variables(g))
    if len(point) != nv:
        raise WrongLength(f"genus {g} needs {nv} coordinates, got {len(point)}")
    return [p(point) for p in gens]


def _check_skew(S, size):
    S = ex.to_matrix(S)
    if ex.shape(S) != (size, size):
        raise NotSkew(f"expected a {size} x {size} matrix, got {ex.shape(S)}")
    for i in range(size):
        for j in range(size):
            if S[i][j] != -S[j][i]:
                raise NotSkew(f"entries ({i}, {j}) and ({j}, {i}) are not opposite")
    return S


def _spinor_roles():
    """(kind, 0-based indices) per variable, read from the data file.

    Variable a is the constant 1, b..k are entries s_ij of S, and l..p the
    4 x 4 Pfaffians on the complement of one index.
    """
    roles = []
    for var in variables(7):
        spec = _entry(7)["spinor_coordinates"][var]
        if spec == "1":
            roles.append(("one", ()))
        else:
            kind = "pf" if spec.startswith("pf") else "s"
            roles.append((kind, tuple(int(c) - 1 for c in spec[len(kind):])))
    return roles


def spinor_param(S):
    S = _check_skew(S, 5)
    out = []
    for kind, idx in _spinor_roles():
        if kind == "one":
            out.append(Fraction(1))
        elif kind == "s":
            out.append(S[idx[0]][idx[1]])
        else:
            out.append(pfaffian4(S, idx))
    return out


# Plücker variables a..o follow the pairs (0,1), (0,2), (1,2), (0,3), ...
# (ordered by larger index, then smaller), the order Macaulay2 uses for
# Grassmannian(1, 5).
GR26_PAIRS = tuple(sorted(combinations(range(6), 2), key=lambda p: (p[1], p[0])))


def gr26_param(S):
    """Upper-triangular entries of a skew 6 x 6 matrix in the a..o order.

    They satisfy the quadrics exactly when S has rank at most 2, e.g.
    S = u v^T - v u^T; see ``gr26_from_rows``.
    """
    S = _check_skew(S, 6)
    return [S[i][j] for i, j in GR26_PAIRS]


def wedge_matrix(U):
    """S = u v^T - v u^T for the two rows u, v of a 2 x 6 matrix."""
    U = ex.to_matrix(U)
    u, v = U
    return [[u[i] * v[j] - v[i] * u[j] for j in range(6)] for i in range(6)]


def gr26_from_rows(U):
    return gr26_param(wedge_matrix(U))

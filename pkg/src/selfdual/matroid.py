"""Matroids on small ground sets, stored as basis bitsets.

The ground set is ``range(m)``.  The C(m, n) subsets of size n are ranked in
lexicographic order and bit k of ``Matroid.bits`` says whether subset k is a
basis.  Everything else (rank function, circuits, connectivity) is derived
from a rank table over all 2^m subsets, built on first use; m <= 12 here.
"""

from functools import lru_cache
from itertools import combinations
import json

from .canon import canonical_labeling
from .errors import EmptyBasisList, ExchangeAxiomViolation, GroundSizeNotTwiceRank


@lru_cache(maxsize=None)
def layout(m, n):
    """Lex-ordered n-subsets of range(m): (tuples, masks, index by mask)."""
    subsets = list(combinations(range(m), n))
    masks = [sum(1 << i for i in s) for s in subsets]
    index = {mk: k for k, mk in enumerate(masks)}
    return subsets, masks, index


def mask_of(subset):
    return sum(1 << i for i in subset)


def elements(mask):
    out, i = [], 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _popcount(x):
    return bin(x).count("1")


def _exchange_violation(m, basis_masks):
    """First (A, a, B) breaking basis exchange, or None.

    For a basis A and a in A, let S be the set of b with A - a + b a basis.
    Exchange fails exactly when some basis avoids both a and S, i.e. when
    the complement of S + a contains a basis.
    """
    full = (1 << m) - 1
    bset = set(basis_masks)
    # up[X] is True when X contains a basis
    up = bytearray(1 << m)
    for b in basis_masks:
        up[b] = 1
    for x in range(1 << m):
        if not up[x]:
            y = x
            while y:
                low = y & -y
                if up[x ^ low]:
                    up[x] = 1
                    break
                y ^= low
    for A in basis_masks:
        y = A
        while y:
            a = y & -y
            y ^= a
            S = 0
            rest = full & ~A
            while rest:
                b = rest & -rest
                rest ^= b
                if (A ^ a) | b in bset:
                    S |= b
            T = full & ~(S | a)
            if up[T]:
                B = next(B for B in basis_masks if B & ~T == 0)
                return A, a, B
    return None


class Matroid:
    """A matroid of rank ``n`` on ``range(m)`` given by its bases."""

    __slots__ = ("m", "n", "bits", "_rank", "_bases")

    def __init__(self, m, n, bits, _checked=False):
        self.m, self.n, self.bits = m, n, bits
        self._rank = None
        self._bases = None
        if not _checked:
            masks = self.basis_masks()
            if not masks:
                raise EmptyBasisList("a matroid needs at least one basis")
            bad = _exchange_violation(m, masks)
            if bad:
                A, a, B = bad
                raise ExchangeAxiomViolation(
                    f"A={elements(A)}, a={elements(a)[0]}, B={elements(B)}: no b in B\\A keeps A-a+b a basis")

    # -- construction ----------------------------------------------------
    @classmethod
    def from_bases(cls, m, bases, n=None):
        bases = [tuple(sorted(b)) for b in bases]
        if not bases:
            raise EmptyBasisList("empty basis list")
        if n is None:
            n = len(bases[0])
        if any(len(b) != n for b in bases):
            raise ExchangeAxiomViolation("bases of different sizes")
        if any(not all(0 <= i < m for i in b) for b in bases):
            raise ValueError("basis element outside the ground set")
        _, _, index = layout(m, n)
        bits = 0
        for b in bases:
            bits |= 1 << index[mask_of(b)]
        return cls(m, n, bits)

    @classmethod
    def from_nonbases(cls, m, n, nonbases):
        subsets, _, _ = layout(m, n)
        non = {tuple(sorted(s)) for s in nonbases}
        return cls.from_bases(m, [s for s in subsets if s not in non], n)

    @classmethod
    def uniform(cls, n, m):
        return cls(m, n, (1 << len(layout(m, n)[0])) - 1, _checked=True)

    # -- basic views -----------------------------------------------------
    def basis_masks(self):
        if self._bases is None:
            _, masks, _ = layout(self.m, self.n)
            bits = self.bits
            self._bases = [mk for k, mk in enumerate(masks) if bits >> k & 1]
        return self._bases

    def bases(self):
        return [elements(b) for b in self.basis_masks()]

    def nonbases(self):
        subsets, _, _ = layout(self.m, self.n)
        return [s for k, s in enumerate(subsets) if not self.bits >> k & 1]

    def is_basis(self, subset):
        _, _, index = layout(self.m, self.n)
        return bool(self.bits >> index[mask_of(subset)] & 1)

    def num_bases(self):
        return _popcount(self.bits)

    def __eq__(self, other):
        return isinstance(other, Matroid) and (self.m, self.n, self.bits) == (other.m, other.n, other.bits)

    def __hash__(self):
        return hash((self.m, self.n, self.bits))

    def __repr__(self):
        return f"Matroid(m={self.m}, n={self.n}, bases={self.num_bases()})"

    # -- rank table ------------------------------------------------------
    def _rank_table(self):
        if self._rank is None:
            m = self.m
            indep = bytearray(1 << m)
            for b in self.basis_masks():
                indep[b] = 1
            # walk masks downward so every superset is settled first
            for x in range((1 << m) - 1, -1, -1):
                if indep[x]:
                    y = x
                    while y:
                        low = y & -y
                        indep[x ^ low] = 1
                        y ^= low
            rk = bytearray(1 << m)
            for x in range(1 << m):
                if indep[x]:
                    rk[x] = _popcount(x)
                else:
                    best, y = 0, x
                    while y:
                        low = y & -y
                        r = rk[x ^ low]
                        if r > best:
                            best = r
                        y ^= low
                    rk[x] = best
            self._rank = rk
        return self._rank

    def rank_of(self, subset):
        return self._rank_table()[mask_of(subset)]

    def rank_of_mask(self, mask):
        return self._rank_table()[mask]

    def circuits(self):
        rk = self._rank_table()
        out = []
        for x in range(1, 1 << self.m):
            k = _popcount(x)
            if rk[x] == k - 1 and all(rk[x ^ (1 << i)] == k - 1 for i in elements(x)):
                out.append(elements(x))
        return sorted(out, key=lambda c: (len(c), c))

    def is_simple(self):
        rk = self._rank_table()
        return all(rk[1 << i] == 1 for i in range(self.m)) and all(
            rk[(1 << i) | (1 << j)] == 2 for i, j in combinations(range(self.m), 2))

    def is_connected(self):
        """No proper nonempty A with r(A) + r(E - A) = r(E)."""
        rk = self._rank_table()
        full = (1 << self.m) - 1
        # element 0 may be assumed to lie in A
        for x in range(1, full, 2):
            if rk[x] + rk[full ^ x] == self.n:
                return False
        return True

    # -- duality ---------------------------------------------------------
    def dual(self):
        full = (1 << self.m) - 1
        _, _, index = layout(self.m, self.m - self.n)
        bits = 0
        for b in self.basis_masks():
            bits |= 1 << index[full ^ b]
        return Matroid(self.m, self.m - self.n, bits, _checked=True)

    def is_selfdual(self):
        """Identically self-dual: B is a basis iff its complement is."""
        if self.m != 2 * self.n:
            raise GroundSizeNotTwiceRank(f"ground size {self.m} is not twice the rank {self.n}")
        full = (1 << self.m) - 1
        bset = set(self.basis_masks())
        return all(full ^ b in bset for b in bset)

    def is_stable(self):
        """Every proper nonempty A has 2 r(A) > |A|.  Needs a self-dual matroid."""
        if not self.is_selfdual():
            raise ValueError("stability is only defined here for self-dual matroids")
        rk = self._rank_table()
        full = (1 << self.m) - 1
        return all(2 * rk[x] > _popcount(x) for x in range(1, full))

    # -- isomorphism -----------------------------------------------------
    def canonical_labeling(self):
        label, _ = canonical_labeling(self.m, self.nonbases(), colors=self._element_colors())
        return label

    def _element_colors(self):
        # an isomorphism invariant per element: how many bases contain it
        counts = [0] * self.m
        for b in self.basis_masks():
            for i in elements(b):
                counts[i] += 1
        return counts

    def relabel(self, label):
        """Matroid whose bases are the images of ours under ``label``."""
        _, _, index = layout(self.m, self.n)
        bits = 0
        for b in self.bases():
            bits |= 1 << index[mask_of(label[i] for i in b)]
        return Matroid(self.m, self.n, bits, _checked=True)

    def canonical_form(self):
        return self.relabel(self.canonical_labeling())

    def canonical_id(self):
        return f"{self.m}.{self.n}.{self.canonical_form().bits:x}"

    def is_isomorphic(self, other):
        if (self.m, self.n, self.num_bases()) != (other.m, other.n, other.num_bases()):
            return False
        return self.canonical_form().bits == other.canonical_form().bits

    # -- serialization ---------------------------------------------------
    def to_json_obj(self):
        return {"ground_size": self.m, "rank": self.n, "bases": [list(b) for b in self.bases()]}

    @classmethod
    def from_json_obj(cls, obj):
        if "bitmask" in obj:
            return cls.from_hex(obj["ground_size"], obj["rank"], obj["bitmask"])
        return cls.from_bases(obj["ground_size"], [tuple(b) for b in obj["bases"]], obj["rank"])

    def to_json(self):
        return json.dumps(self.to_json_obj(), sort_keys=True)

    @classmethod
    def from_json(cls, text):
        return cls.from_json_obj(json.loads(text))

    def to_hex(self):
        return f"{self.bits:x}"

    @classmethod
    def from_hex(cls, m, n, text):
        return cls(m, n, int(text, 16))


def from_bases(m, bases, n=None):
    return Matroid.from_bases(m, bases, n)


def dual(M):
    return M.dual()


def is_selfdual(M):
    return M.is_selfdual()


def is_isomorphic(M, N):
    return M.is_isomorphic(N)


def canonical_form(M):
    return M.canonical_form()

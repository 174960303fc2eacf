"""Sparse exact arithmetic in the Grassmann algebra on two blocks of odd
generators x_1..x_N, y_1..y_N, optionally extended by two auxiliary odd
variables xi and eta.

A monomial is a subset of the generators, stored as a Python int bitmask
over the fixed order: x-block (bits 0..N-1), y-block (bits N..2N-1),
xi (bit 2N), eta (bit 2N+1).  Coefficients are Fractions; elements never
store zero coefficients.  Bidegree: an x-generator counts (1,0), a
y-generator (0,1), xi counts (1,0) and eta (0,1).
"""

from fractions import Fraction


class SizeMismatch(ValueError):
    pass


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def merge_sign(m1, m2):
    """Sign of sorting the concatenation of two disjoint ordered monomials.

    Counts pairs (i in m1, j in m2) with i > j; the merge permutation has
    that many inversions.
    """
    sign = 1
    for b in _bits(m2):
        if (m1 >> (b + 1)).bit_count() & 1:
            sign = -sign
    return sign


class GrassmannAlgebra:
    """Context object fixing N (one odd generator block size per copy)."""

    def __init__(self, n):
        self.n = n
        self.xi_bit = 2 * n
        self.eta_bit = 2 * n + 1
        self._xmask = (1 << n) - 1
        self._ymask = self._xmask << n

    def zero(self):
        return ExtElement(self, {})

    def scalar(self, c):
        c = Fraction(c)
        return ExtElement(self, {0: c} if c else {})

    def one(self):
        return self.scalar(1)

    def x(self, i):
        return ExtElement(self, {1 << i: Fraction(1)})

    def y(self, i):
        return ExtElement(self, {1 << (self.n + i): Fraction(1)})

    def xi(self):
        return ExtElement(self, {1 << self.xi_bit: Fraction(1)})

    def eta(self):
        return ExtElement(self, {1 << self.eta_bit: Fraction(1)})

    def monomial(self, mask, coeff=1):
        coeff = Fraction(coeff)
        return ExtElement(self, {mask: coeff} if coeff else {})

    def bidegree_of_mask(self, mask):
        p = (mask & self._xmask).bit_count()
        q = (mask & self._ymask).bit_count()
        if mask >> self.xi_bit & 1:
            p += 1
        if mask >> self.eta_bit & 1:
            q += 1
        return (p, q)

    def gen_name(self, bit):
        if bit < self.n:
            return "x%d" % (bit + 1)
        if bit < 2 * self.n:
            return "y%d" % (bit - self.n + 1)
        return "xi" if bit == self.xi_bit else "eta"

    def component_masks(self, p, q):
        """All monomial masks of bidegree (p,q) without xi/eta, in canonical
        order (lexicographic on the generator index tuple)."""
        from itertools import combinations
        xs = [_mask_of(c) for c in combinations(range(self.n), p)]
        ys = [_mask_of(c) << self.n for c in combinations(range(self.n), q)]
        masks = [mx | my for mx in xs for my in ys]
        masks.sort(key=term_key)
        return masks

    def component_dim(self, p, q):
        from math import comb
        return comb(self.n, p) * comb(self.n, q)


def _mask_of(indices):
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def term_key(mask):
    """Canonical order on monomials: lexicographic on generator indices."""
    return tuple(_bits(mask))


class ExtElement:
    """A sparse exact-rational linear combination of Grassmann monomials."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms):
        self.alg = alg
        self.terms = terms

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, ExtElement):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __ne__(self, other):
        r = self.__eq__(other)
        return NotImplemented if r is NotImplemented else (not r)

    def __add__(self, other):
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return ExtElement(self.alg, terms)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return ExtElement(self.alg, {m: -c for m, c in self.terms.items()})

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return ExtElement(self.alg, {})
        return ExtElement(self.alg, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, ExtElement):
            return self.wedge(other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def wedge(self, other):
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                if m1 & m2:
                    continue
                c = c1 * c2
                if merge_sign(m1, m2) < 0:
                    c = -c
                m = m1 | m2
                s = out.get(m, 0) + c
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return ExtElement(self.alg, out)

    def power(self, k):
        r = self.alg.one()
        for _ in range(k):
            r = r.wedge(self)
        return r

    def bidegree(self):
        """The common bidegree of all terms, or None if mixed or zero."""
        deg = None
        for m in self.terms:
            d = self.alg.bidegree_of_mask(m)
            if deg is None:
                deg = d
            elif d != deg:
                return None
        return deg

    def component(self, p, q):
        alg = self.alg
        return ExtElement(alg, {m: c for m, c in self.terms.items()
                                if alg.bidegree_of_mask(m) == (p, q)})

    def extract_xi_eta(self):
        """Coefficient of xi^eta: keeps monomials containing both, strips the
        two bits.  Moving the trailing xi^eta pair to the front crosses an
        even number of odd generators, so no sign appears."""
        alg = self.alg
        both = (1 << alg.xi_bit) | (1 << alg.eta_bit)
        return ExtElement(alg, {m ^ both: c for m, c in self.terms.items()
                                if m & both == both})

    def swap_xy(self):
        """Algebra involution exchanging x_a with y_a (and xi with eta)."""
        alg = self.alg
        n = alg.n

        def image(b):
            if b < n:
                return b + n
            if b < 2 * n:
                return b - n
            return alg.eta_bit if b == alg.xi_bit else alg.xi_bit

        out = {}
        for m, c in self.terms.items():
            # list the image generators in source order, then count the
            # inversions needed to restore canonical order
            perm = [image(b) for b in _bits(m)]
            sign = 1
            for i in range(len(perm)):
                for j in range(i + 1, len(perm)):
                    if perm[i] > perm[j]:
                        sign = -sign
            m2 = 0
            for b in perm:
                m2 |= 1 << b
            out[m2] = out.get(m2, 0) + sign * c
        return ExtElement(alg, {m: c for m, c in out.items() if c})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=term_key):
            c = self.terms[m]
            gens = "^".join(self.alg.gen_name(b) for b in _bits(m))
            parts.append(("%s %s" % (c, gens)) if gens else str(c))
        return " + ".join(parts)

    __repr__ = __str__


class OddMatrix:
    """Square matrix with ExtElement entries; products keep Grassmann signs
    because entry multiplication is the wedge."""

    def __init__(self, alg, entries):
        self.alg = alg
        self.size = len(entries)
        self.entries = entries

    @classmethod
    def zero(cls, alg, m):
        return cls(alg, [[alg.zero() for _ in range(m)] for _ in range(m)])

    @classmethod
    def identity(cls, alg, m):
        z = cls.zero(alg, m)
        for i in range(m):
            z.entries[i][i] = alg.one()
        return z

    def __add__(self, other):
        if self.size != other.size:
            raise SizeMismatch("%d != %d" % (self.size, other.size))
        return OddMatrix(self.alg, [[a + b for a, b in zip(ra, rb)]
                                    for ra, rb in zip(self.entries, other.entries)])

    def matmul(self, other):
        if self.size != other.size:
            raise SizeMismatch("%d != %d" % (self.size, other.size))
        m = self.size
        out = []
        for i in range(m):
            row = []
            for j in range(m):
                acc = self.alg.zero()
                for k in range(m):
                    a = self.entries[i][k]
                    b = other.entries[k][j]
                    if a.terms and b.terms:
                        acc = acc + a.wedge(b)
                row.append(acc)
            out.append(row)
        return OddMatrix(self.alg, out)

    __matmul__ = matmul

    def scale_left(self, elem):
        """Left multiplication of every entry by a fixed element."""
        return OddMatrix(self.alg, [[elem.wedge(e) for e in row]
                                    for row in self.entries])

    def trace(self):
        acc = self.alg.zero()
        for i in range(self.size):
            acc = acc + self.entries[i][i]
        return acc

    def power(self, k):
        r = OddMatrix.identity(self.alg, self.size)
        for _ in range(k):
            r = r.matmul(self)
        return r

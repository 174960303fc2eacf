"""Faithful representation matrices in the Chevalley basis.

Seeds for the simple-root sl2 triples come from the split matrix
realizations (elementary matrices for sl, antidiagonal-form orthogonal and
symplectic algebras, octonion derivations for G2).  Root vectors for
non-simple roots are produced by the same extraspecial-pair recursion that
defines the abstract basis:

    e_c = [e_a1, e_b1] / N(a1, b1),    f_c = -[f_a1, f_b1] / N(a1, b1),

so the matrices represent the abstract structure constants with no further
sign choices.
"""

from fractions import Fraction

from .roots import UnsupportedType


class UnsupportedRepresentation(ValueError):
    pass


class Representation:
    def __init__(self, label, dim_V, matrices):
        self.label = label
        self.dim_V = dim_V
        self.matrices = matrices  # one dim_V x dim_V matrix per basis index

    def matrix(self, a):
        return self.matrices[a]


def _zeros(n):
    return [[Fraction(0)] * n for _ in range(n)]

def _unit(n, i, j, c=1):
    m = _zeros(n)
    m[i][j] = Fraction(c)
    return m

def _add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]

def _scale(a, c):
    return [[x * c for x in row] for row in a]

def _mul(a, b):
    n = len(a)
    out = _zeros(n)
    for i in range(n):
        for k in range(n):
            if a[i][k]:
                aik = a[i][k]
                rb = b[k]
                ro = out[i]
                for j in range(n):
                    if rb[j]:
                        ro[j] += aik * rb[j]
    return out

def _comm(a, b):
    return _add(_mul(a, b), _scale(_mul(b, a), -1))


def _sl_seeds(rank):
    n = rank + 1
    es = [_unit(n, i, i + 1) for i in range(rank)]
    fs = [_unit(n, i + 1, i) for i in range(rank)]
    return n, es, fs


def _so_odd_seeds(rank):
    # so(2n+1) preserving the antidiagonal form; sigma(i) = 2n - i
    n = rank
    dim = 2 * n + 1
    sig = lambda i: dim - 1 - i
    def X(i, j):
        return _add(_unit(dim, i, j), _scale(_unit(dim, sig(j), sig(i)), -1))
    es = [X(i, i + 1) for i in range(n - 1)] + [X(n - 1, n)]
    fs = [X(i + 1, i) for i in range(n - 1)] + [_scale(X(n, n - 1), 2)]
    return dim, es, fs


def _sp_seeds(rank):
    # sp(2n) for the antidiagonal symplectic form; sigma(i) = 2n - 1 - i
    n = rank
    dim = 2 * n
    sig = lambda i: dim - 1 - i
    def X(i, j):
        return _add(_unit(dim, i, j), _scale(_unit(dim, sig(j), sig(i)), -1))
    es = [X(i, i + 1) for i in range(n - 1)] + [_unit(dim, n - 1, n)]
    fs = [X(i + 1, i) for i in range(n - 1)] + [_unit(dim, n, n - 1)]
    return dim, es, fs


def _so_even_seeds(rank):
    # so(2n), antidiagonal form; last simple root is eps_{n-1} + eps_n
    n = rank
    dim = 2 * n
    sig = lambda i: dim - 1 - i
    def X(i, j):
        return _add(_unit(dim, i, j), _scale(_unit(dim, sig(j), sig(i)), -1))
    es = [X(i, i + 1) for i in range(n - 1)] + [X(n - 2, sig(n - 1))]
    fs = [X(i + 1, i) for i in range(n - 1)] + [X(sig(n - 1), n - 2)]
    return dim, es, fs


def _vector_seeds(type_label, rank):
    if type_label == "A":
        return _sl_seeds(rank)
    if type_label == "B":
        return _so_odd_seeds(rank)
    if type_label == "C":
        return _sp_seeds(rank)
    if type_label == "D":
        return _so_even_seeds(rank)
    if type_label == "G":
        from .octonion import g2_seed_triples
        triples = g2_seed_triples()
        es = [t[0] for t in triples]
        fs = [t[1] for t in triples]
        return 7, es, fs
    raise UnsupportedType(type_label)


def _extend_by_recursion(lie, dim_V, es, fs):
    rs = lie.rs
    mat_e = {}
    mat_f = {}
    for i, simple in enumerate(rs.simple_roots):
        mat_e[simple] = es[i]
        mat_f[simple] = fs[i]
    for c in rs.positive_roots:
        if rs.height(c) == 1:
            continue
        a1, b1 = lie.extraspecial[c]
        inv = Fraction(1) / lie.N(a1, b1)
        mat_e[c] = _scale(_comm(mat_e[a1], mat_e[b1]), inv)
        mat_f[c] = _scale(_comm(mat_f[a1], mat_f[b1]), -inv)
    mats = []
    for r in rs.positive_roots:
        mats.append(mat_e[r])
    for i, simple in enumerate(rs.simple_roots):
        mats.append(_comm(mat_e[simple], mat_f[simple]))
    for r in rs.positive_roots:
        mats.append(mat_f[r])
    return mats


def _adjoint(lie):
    n = lie.dim
    mats = []
    for a in range(n):
        m = _zeros(n)
        for b in range(n):
            for c, v in lie.bracket(a, b).items():
                m[c][b] = v
        mats.append(m)
    return mats


_LABELS = {
    "A": ("vector", "adjoint"),
    "B": ("vector", "adjoint"),
    "C": ("vector", "adjoint"),
    "D": ("vector", "adjoint"),
    "G": ("fundamental-7", "adjoint"),
}

_CACHE = {}


def representation(lie, label):
    """Representation matrices for one of the supported labels: `vector`
    (classical types), `fundamental-7` (G2), `adjoint` (always)."""
    key = (lie.rs.type_label, lie.rs.rank, label)
    if key in _CACHE:
        return _CACHE[key]
    if label not in _LABELS.get(lie.rs.type_label, ()):
        raise UnsupportedRepresentation("%s for %s%d" %
                                        (label, lie.rs.type_label, lie.rank))
    if label == "adjoint":
        rep = Representation(label, lie.dim, _adjoint(lie))
    else:
        dim_V, es, fs = _vector_seeds(lie.rs.type_label, lie.rank)
        rep = Representation(label, dim_V, _extend_by_recursion(lie, dim_V, es, fs))
    _CACHE[key] = rep
    return rep


def default_trace_label(type_label):
    return "fundamental-7" if type_label == "G" else "vector"


def trace_power_degrees(lie):
    """Exponents k such that Tr_V(z^k) realize the generating invariants.

    A_n: 2..n+1; B_n, C_n: 2, 4, .., 2n; G2: 2, 6.  D_n is excluded: the
    degree-n Pfaffian generator is not a trace power of the vector
    representation."""
    t, r = lie.rs.type_label, lie.rank
    if t == "A":
        return list(range(2, r + 2))
    if t in ("B", "C"):
        return [2 * i for i in range(1, r + 1)]
    if t == "G":
        return [2, 6]
    raise UnsupportedRepresentation(
        "no trace-power generator set for type %s" % t)

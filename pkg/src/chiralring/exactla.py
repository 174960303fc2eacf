"""Exact linear algebra over Q, with an optional probabilistic prime-field
mode, on sparse coordinate vectors.

Vectors are dicts {column index: coefficient}.  The workhorse is a reduced
row echelon form maintained incrementally; the RREF of a row space is
unique, so ranks and membership answers do not depend on input order.
Prime-field mode runs the same elimination modulo >= 2 random primes
> 2**30 and reports only when all primes agree.
"""

from fractions import Fraction
import random


class InhomogeneousInput(ValueError):
    pass


class WrongComponent(ValueError):
    pass


class ComponentTooLarge(RuntimeError):
    pass


class ModularDisagreement(RuntimeError):
    pass


DEFAULT_MONOMIAL_CAP = 2 * 10 ** 6


def _is_prime(n):
    # deterministic Miller-Rabin, valid far beyond 2**40
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def random_prime(rng, lo=1 << 30):
    while True:
        c = rng.randrange(lo, lo << 1) | 1
        if _is_prime(c):
            return c


class FieldMode:
    """exact-rational arithmetic, or reduction modulo a list of primes."""

    def __init__(self, primes=()):
        self.primes = tuple(primes)

    @classmethod
    def exact(cls):
        return cls()

    @classmethod
    def modular(cls, seed=0, nprimes=2):
        if nprimes < 2:
            raise ValueError("modular mode needs >= 2 primes")
        rng = random.Random(seed)
        primes = []
        while len(primes) < nprimes:
            p = random_prime(rng)
            if p not in primes:
                primes.append(p)
        return cls(primes)

    @property
    def is_exact(self):
        return not self.primes

    def label(self):
        if self.is_exact:
            return "exact"
        return "modular(%s)" % ",".join(str(p) for p in self.primes)


class Echelon:
    """Incremental reduced row echelon form.  p=None works over Q with
    Fractions; otherwise all coefficients live in GF(p)."""

    def __init__(self, p=None):
        self.p = p
        self.rows = {}  # pivot column -> row dict (pivot coefficient 1)

    @property
    def rank(self):
        return len(self.rows)

    def pivots(self):
        return sorted(self.rows)

    def _normalize(self, row, piv):
        c = row[piv]
        if self.p is None:
            inv = Fraction(1) / c
            return {j: v * inv for j, v in row.items()}
        inv = pow(c, self.p - 2, self.p)
        return {j: v * inv % self.p for j, v in row.items()}

    def reduce(self, vec):
        """Residue of vec against the echelon rows (vec unchanged)."""
        p = self.p
        if p is None:
            row = {j: v for j, v in vec.items() if v}
        else:
            row = {}
            for j, v in vec.items():
                if isinstance(v, Fraction):
                    den = v.denominator % p
                    if den == 0:
                        raise ModularDisagreement(
                            "prime %d divides a denominator" % p)
                    v = v.numerator % p * pow(den, p - 2, p) % p
                else:
                    v = v % p
                if v:
                    row[j] = v
        for piv in sorted(row):
            if piv not in row:
                continue
            base = self.rows.get(piv)
            if base is None:
                continue
            c = row.pop(piv)
            if p is None:
                for j, v in base.items():
                    if j == piv:
                        continue
                    s = row.get(j, 0) - c * v
                    if s:
                        row[j] = s
                    else:
                        row.pop(j, None)
            else:
                for j, v in base.items():
                    if j == piv:
                        continue
                    s = (row.get(j, 0) - c * v) % p
                    if s:
                        row[j] = s
                    else:
                        row.pop(j, None)
        return row

    def insert(self, vec):
        """Reduce vec and adjoin the residue if nonzero.  Returns True when
        the rank grew."""
        row = self.reduce(vec)
        if not row:
            return False
        piv = min(row)
        row = self._normalize(row, piv)
        # back-substitute into existing rows to stay fully reduced
        for bp, base in self.rows.items():
            c = base.get(piv)
            if not c:
                continue
            if self.p is None:
                for j, v in row.items():
                    s = base.get(j, 0) - c * v
                    if s:
                        base[j] = s
                    else:
                        base.pop(j, None)
            else:
                for j, v in row.items():
                    s = (base.get(j, 0) - c * v) % self.p
                    if s:
                        base[j] = s
                    else:
                        base.pop(j, None)
        self.rows[piv] = row
        return True

    def contains(self, vec):
        return not self.reduce(vec)

    def basis_rows(self):
        return [dict(self.rows[p]) for p in sorted(self.rows)]


def kernel_basis(rows, ncols):
    """Nullspace basis of the linear system given by equation rows (each a
    dict over column indices 0..ncols-1).  Exact; returns canonical basis
    vectors as dicts, one per free column."""
    ech = Echelon()
    for r in rows:
        ech.insert(r)
    pivset = set(ech.rows)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        vec = {free: Fraction(1)}
        for piv, row in ech.rows.items():
            c = row.get(free)
            if c:
                vec[piv] = -c
        basis.append(vec)
    return basis


class Subspace:
    """Echelonized span inside one bigraded component.

    columns: tuple of monomial masks fixing the coordinatization (canonical
    order).  In exact mode a single Echelon is kept; in prime-field mode one
    per prime, and answers carry a probabilistic flag.
    """

    def __init__(self, columns, mode=None, bidegree=None):
        self.columns = tuple(columns)
        self.index = {m: i for i, m in enumerate(self.columns)}
        self.mode = mode or FieldMode.exact()
        self.bidegree = bidegree
        if self.mode.is_exact:
            self.echelons = [Echelon()]
        else:
            self.echelons = [Echelon(p) for p in self.mode.primes]

    @property
    def probabilistic(self):
        return not self.mode.is_exact

    @property
    def rank(self):
        ranks = {e.rank for e in self.echelons}
        if len(ranks) != 1:
            raise ModularDisagreement("ranks differ between primes: %s" %
                                      sorted(ranks))
        return ranks.pop()

    def coordinates(self, elem):
        vec = {}
        for m, c in elem.terms.items():
            i = self.index.get(m)
            if i is None:
                if self.bidegree is not None and \
                        elem.alg.bidegree_of_mask(m) != self.bidegree:
                    raise WrongComponent("monomial of bidegree %s, ambient %s"
                                         % (elem.alg.bidegree_of_mask(m),
                                            self.bidegree))
                return None
            vec[i] = c
        return vec

    def insert(self, elem):
        vec = self.coordinates(elem)
        if vec is None:
            raise WrongComponent("element outside the ambient columns")
        grew = [e.insert(vec) for e in self.echelons]
        if len(set(grew)) != 1:
            raise ModularDisagreement("rank growth differs between primes")
        return grew[0]

    def insert_vec(self, vec):
        grew = [e.insert(vec) for e in self.echelons]
        if len(set(grew)) != 1:
            raise ModularDisagreement("rank growth differs between primes")
        return grew[0]

    def contains(self, elem):
        """Membership of elem in the span.  Exact mode: exact.  Prime-field
        mode: False is exact, True is probabilistic (all primes agreed)."""
        vec = self.coordinates(elem)
        if vec is None:
            return False
        answers = {e.contains(vec) for e in self.echelons}
        if len(answers) != 1:
            raise ModularDisagreement("membership differs between primes")
        return answers.pop()

    def copy(self):
        dup = Subspace(self.columns, self.mode, self.bidegree)
        for e_src, e_dst in zip(self.echelons, dup.echelons):
            e_dst.rows = {p: dict(r) for p, r in e_src.rows.items()}
        return dup


def span(elements, component=None, mode=None, columns=None, cap=None):
    """Echelonized span of homogeneous elements of one bidegree.

    component: (p, q); columns defaults to the full component monomial list
    of the first element's algebra.  cap guards the ambient monomial count
    (ComponentTooLarge) unless prime-field mode is on.
    """
    mode = mode or FieldMode.exact()
    if columns is None:
        if not elements:
            return Subspace((), mode, component)
        alg = elements[0].alg
        p, q = component if component is not None else elements[0].bidegree()
        guard_component(alg, p, q, mode, cap)
        columns = alg.component_masks(p, q)
        component = (p, q)
    sub = Subspace(columns, mode, component)
    for el in elements:
        if component is not None and el.terms and el.bidegree() != tuple(component):
            raise InhomogeneousInput("element of bidegree %s in component %s"
                                     % (el.bidegree(), component))
        sub.insert(el)
    return sub


def guard_component(alg, p, q, mode=None, cap=None):
    dim = alg.component_dim(p, q)
    limit = DEFAULT_MONOMIAL_CAP if cap is None else cap
    if dim > limit and (mode is None or mode.is_exact):
        raise ComponentTooLarge("component (%d,%d) has %d monomials, cap %d"
                                % (p, q, dim, limit))
    return dim


def quotient_dim(component_dim, subspace):
    return component_dim - subspace.rank


def minimal_polynomial(apply_op, basis_vectors, ncols):
    """Minimal polynomial of an exact linear operator, via Krylov iteration
    from a deterministic cycling start vector.  apply_op maps a coordinate
    dict to a coordinate dict.  Returns monic coefficient list c_0..c_d
    with sum c_i t^i = 0."""
    lcm_poly = [Fraction(1)]
    for start in basis_vectors:
        # polynomial annihilating the cyclic subspace of `start`
        ech = Echelon()
        krylov = []
        vec = dict(start)
        while True:
            res = ech.reduce(vec)
            if not res:
                break
            krylov.append(dict(vec))
            ech.insert(vec)
            vec = apply_op(vec)
        # express vec over the krylov vectors: solve linear system
        cols = len(krylov)
        eqs = {}
        for j, kv in enumerate(krylov):
            for i, c in kv.items():
                eqs.setdefault(i, {})[j] = c
        rhs = dict(vec)
        sol = _solve(eqs, rhs, cols)
        local = [-sol.get(j, Fraction(0)) for j in range(cols)] + [Fraction(1)]
        lcm_poly = _poly_lcm(lcm_poly, local)
        if len(lcm_poly) - 1 >= ncols:
            break
    return lcm_poly


def _solve(eqs_by_row, rhs, ncols):
    """Solve an exactly-solvable system: rows are eqs_by_row[i] (dicts over
    0..ncols-1), target rhs[i]."""
    ech = Echelon()
    aug_col = ncols
    for i, row in eqs_by_row.items():
        vec = dict(row)
        b = rhs.get(i)
        if b:
            vec[aug_col] = b
        ech.insert(vec)
    sol = {}
    for piv in sorted(ech.rows, reverse=True):
        if piv == aug_col:
            raise ArithmeticError("inconsistent system")
        row = ech.rows[piv]
        sol[piv] = row.get(aug_col, Fraction(0))
    return sol


def _poly_lcm(a, b):
    g = _poly_gcd(a, b)
    q, _ = _poly_divmod(a, g)
    return _poly_mul(q, b)


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return _poly_trim(out)


def _poly_trim(a):
    while len(a) > 1 and not a[-1]:
        a.pop()
    return a


def _poly_divmod(a, b):
    a = list(a)
    out = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    while len(a) >= len(b) and any(a):
        if not a[-1]:
            a.pop()
            continue
        shift = len(a) - len(b)
        c = a[-1] / b[-1]
        out[shift] = c
        for i, cb in enumerate(b):
            a[shift + i] -= c * cb
        a.pop()
    return _poly_trim(out), _poly_trim(a if a else [Fraction(0)])


def _poly_gcd(a, b):
    a, b = list(a), list(b)
    while any(b):
        _, r = _poly_divmod(a, b)
        a, b = b, r
        if len(b) == 1 and not b[0]:
            break
    # make monic
    lead = a[-1]
    return [c / lead for c in a]

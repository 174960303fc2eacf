"""The Lie algebra action on the Grassmann algebra over two copies of the
adjoint module, extended as even derivations; weight bookkeeping, invariant
subspaces of bigraded components, and the quadratic Casimir (normalized so
it acts as the identity on the generators)."""

from fractions import Fraction

from .exterior import ExtElement, _bits
from .exactla import Subspace, FieldMode, kernel_basis, guard_component


class ActionTable:
    """act(a, -) for each Lie basis index a: on a generator x_b (or y_b)
    returns sum_c f_ab^c x_c (resp. y_c); xi and eta are killed."""

    def __init__(self, alg, lie):
        self.alg = alg
        self.lie = lie
        n = alg.n
        # table[a][bit] = list of (bit', coeff)
        self.table = []
        for a in range(lie.dim):
            row = {}
            for b in range(n):
                moves = [(c, v) for c, v in lie.bracket(a, b).items() if v]
                if moves:
                    row[b] = moves
                    row[b + n] = [(c + n, v) for c, v in moves]
            self.table.append(row)
        self.zero_weight = (0,) * lie.rank

    def generator_weight(self, bit):
        n = self.alg.n
        if bit >= 2 * n:
            return self.zero_weight
        return self.lie.basis_weight(bit if bit < n else bit - n)

    def mask_weight(self, mask):
        w = list(self.zero_weight)
        for b in _bits(mask):
            gw = self.generator_weight(b)
            for i, c in enumerate(gw):
                w[i] += c
        return tuple(w)

    def act_mask(self, a, mask):
        """Image of a monomial under the even derivation, as a terms dict."""
        out = {}
        row = self.table[a]
        for b in _bits(mask):
            moves = row.get(b)
            if not moves:
                continue
            rest = mask ^ (1 << b)
            for c, v in moves:
                if rest >> c & 1:
                    continue
                # replace generator b by c in place, then resort: the sign is
                # the parity of generators strictly between them
                lo, hi = (b, c) if b < c else (c, b)
                between = rest & (((1 << hi) - 1) ^ ((1 << (lo + 1)) - 1))
                sign = -1 if between.bit_count() & 1 else 1
                m2 = rest | (1 << c)
                s = out.get(m2, 0) + sign * v
                if s:
                    out[m2] = s
                else:
                    out.pop(m2, None)
        return out

    def act(self, a, elem):
        out = {}
        for mask, coeff in elem.terms.items():
            for m2, v in self.act_mask(a, mask).items():
                s = out.get(m2, 0) + coeff * v
                if s:
                    out[m2] = s
                else:
                    out.pop(m2, None)
        return ExtElement(self.alg, out)

    def casimir(self, elem):
        """sum_a act(e_a, act(e^a, -)); commutes with every act(b, -) and is
        the identity on the generators."""
        lie = self.lie
        out = self.alg.zero()
        for a in range(lie.dim):
            inner = self.alg.zero()
            for b, c in lie.dual_vector(a).items():
                inner = inner + self.act(b, elem).scale(c)
            out = out + self.act(a, inner)
        return out

    def weight_masks(self, p, q, weight=None):
        """Monomial masks of bidegree (p,q) grouped by weight; weight=None
        returns the full dict, otherwise one list."""
        groups = {}
        for mask in self.alg.component_masks(p, q):
            groups.setdefault(self.mask_weight(mask), []).append(mask)
        if weight is None:
            return groups
        return groups.get(weight, [])


def invariants(action, p, q, mode=None, cap=None):
    """Invariant subspace of the (p,q) component, as a Subspace over the
    full component basis.

    Invariant vectors have weight zero, so the kernel is computed on the
    weight-zero slice only; the acting operators are the 2*rank simple-root
    raising and lowering generators, which generate the algebra (Cartan
    elements act as zero on weight-zero vectors).
    """
    alg, lie = action.alg, action.lie
    mode = mode or FieldMode.exact()
    guard_component(alg, p, q, mode, cap)
    w0 = action.weight_masks(p, q, action.zero_weight)
    col_of = {m: i for i, m in enumerate(w0)}
    gens = []
    for i in range(lie.rank):
        simple = lie.rs.simple_roots[i]
        gens.append(lie.e_index(simple))
        gens.append(lie.f_index(simple))
    # rows of the stacked equation system: one per (generator, image monomial)
    eqs = {}
    for a in gens:
        for j, mask in enumerate(w0):
            for m2, v in action.act_mask(a, mask).items():
                eqs.setdefault((a, m2), {})[j] = v
    basis = kernel_basis(list(eqs.values()), len(w0))
    columns = alg.component_masks(p, q)
    sub = Subspace(columns, mode, (p, q))
    full_index = {m: i for i, m in enumerate(columns)}
    for vec in basis:
        sub.insert_vec({full_index[w0[j]]: c for j, c in vec.items()})
    return sub


def invariant_basis_elements(action, p, q, cap=None):
    """The canonical invariant basis as ExtElements (exact mode)."""
    sub = invariants(action, p, q, FieldMode.exact(), cap)
    columns = sub.columns
    out = []
    for row in sub.echelons[0].basis_rows():
        out.append(ExtElement(action.alg,
                              {columns[j]: c for j, c in row.items()}))
    return out


def casimir_matrix(action, masks):
    """Matrix of the Casimir on the span of the given monomials (which must
    be Casimir-stable, e.g. a full component or a weight slice)."""
    index = {m: i for i, m in enumerate(masks)}
    cols = []
    for m in masks:
        img = action.casimir(ExtElement(action.alg, {m: Fraction(1)}))
        col = {}
        for m2, v in img.terms.items():
            col[index[m2]] = v
        cols.append(col)
    return cols

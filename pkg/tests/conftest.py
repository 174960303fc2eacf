from fractions import Fraction

import pytest

from chiralring.rootsystem import build_root_system, chevalley_data
from chiralring.cdsw import Workspace


@pytest.fixture(scope="session")
def sl2():
    return chevalley_data(build_root_system("A", 1))


@pytest.fixture(scope="session")
def sl3():
    return chevalley_data(build_root_system("A", 2))


@pytest.fixture(scope="session")
def so5():
    return chevalley_data(build_root_system("B", 2))


@pytest.fixture(scope="session")
def ws_sl2(sl2):
    return Workspace(sl2)


@pytest.fixture(scope="session")
def ws_sl3(sl3):
    return Workspace(sl3)


@pytest.fixture(scope="session")
def ws_so5(so5):
    return Workspace(so5)


def random_element(alg, rng, nterms=4, maxdeg=2):
    """Random sparse element with small integer coefficients."""
    from chiralring.exterior import ExtElement
    ngens = 2 * alg.n + 2
    terms = {}
    for _ in range(nterms):
        size = rng.randint(0, maxdeg)
        bits = rng.sample(range(ngens), size)
        mask = 0
        for b in bits:
            mask |= 1 << b
        c = rng.randint(-4, 4)
        if c:
            terms[mask] = terms.get(mask, 0) + Fraction(c)
    return ExtElement(alg, {m: c for m, c in terms.items() if c})


def dense_rref(rows, ncols):
    """Textbook dense reduced row echelon form over Fractions; independent
    of the sparse implementation.  Returns (matrix, pivot columns)."""
    m = [list(r) + [Fraction(0)] * (ncols - len(r)) for r in rows]
    m = [row[:ncols] for row in m]
    pivots = []
    lead = 0
    for col in range(ncols):
        piv = None
        for r in range(lead, len(m)):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            continue
        m[lead], m[piv] = m[piv], m[lead]
        inv = Fraction(1) / m[lead][col]
        m[lead] = [v * inv for v in m[lead]]
        for r in range(len(m)):
            if r != lead and m[r][col]:
                c = m[r][col]
                m[r] = [a - c * b for a, b in zip(m[r], m[lead])]
        pivots.append(col)
        lead += 1
        if lead == len(m):
            break
    return m[:len(pivots)], pivots

from fractions import Fraction

import pytest

from chiralring.exactla import FieldMode, ComponentTooLarge
from chiralring.cdsw.core import (ideal_component, check_S_power,
                                  check_part_i, swap_membership_invariance,
                                  family_equivariance, XX, XY, YY)


def test_relation_counts_and_degrees(ws_sl2):
    rels = ws_sl2.rels
    for rel in rels.xx_relations:
        assert rel.is_zero() or rel.bidegree() == (2, 0)
    for rel in rels.xy_relations:
        assert rel.is_zero() or rel.bidegree() == (1, 1)
    for rel in rels.yy_relations:
        assert rel.is_zero() or rel.bidegree() == (0, 2)


def test_sl2_relation_ranks(ws_sl2):
    assert ideal_component(ws_sl2, (XY,), 1, 1).rank == 3
    assert ideal_component(ws_sl2, (XX,), 2, 0).rank == 3
    assert ideal_component(ws_sl2, (YY,), 0, 2).rank == 3
    # (1,1) with all families is exactly the xy span
    assert ideal_component(ws_sl2, (XX, XY, YY), 1, 1).rank == 3


def test_family_spans_are_adjoint_copies(ws_sl2, ws_sl3):
    for ws in (ws_sl2, ws_sl3):
        n = ws.lie.dim
        for fam, (p, q) in ((XX, (2, 0)), (XY, (1, 1)), (YY, (0, 2))):
            sub = ideal_component(ws, (fam,), p, q)
            assert sub.rank == n
            assert family_equivariance(ws, fam)


def test_rho_image_cross_check(ws_sl2, ws_sl3):
    """Entries of the supercommutators of the matrices X, Y lie in the
    corresponding relation family span."""
    for ws in (ws_sl2, ws_sl3):
        X, Y = ws.xy_matrices()
        pairs = [(XX, X.matmul(X), (2, 0)),
                 (XY, X.matmul(Y) + Y.matmul(X), (1, 1)),
                 (YY, Y.matmul(Y), (0, 2))]
        for fam, mat, (p, q) in pairs:
            sub = ideal_component(ws, (fam,), p, q)
            for row in mat.entries:
                for e in row:
                    if not e.is_zero():
                        assert sub.contains(e)


def test_S_invariance_and_bidegree(ws_sl2, ws_sl3, ws_so5):
    for ws in (ws_sl2, ws_sl3, ws_so5):
        assert ws.S.bidegree() == (1, 1)
        for a in range(ws.lie.dim):
            assert ws.action.act(a, ws.S).is_zero()


def test_trace_proportionality_constants(ws_sl2, ws_sl3, ws_so5):
    # Dynkin-index factors with respect to the Killing-normalized form
    assert ws_sl2.trace_S_constant() == Fraction(1, 4)
    assert ws_sl3.trace_S_constant() == Fraction(1, 6)
    assert ws_so5.trace_S_constant() == Fraction(1, 3)


def test_S_not_in_relation_span(ws_sl2):
    sub = ideal_component(ws_sl2, (XX, XY, YY), 1, 1)
    assert not sub.contains(ws_sl2.S)


def test_sl2_S_powers(ws_sl2):
    assert check_S_power(ws_sl2, 2)["contained"] is True
    assert check_S_power(ws_sl2, 1)["contained"] is False


def test_sl3_S_powers(ws_sl3):
    assert check_S_power(ws_sl3, 3)["contained"] is True
    assert check_S_power(ws_sl3, 2)["contained"] is False


def test_so5_S_powers(ws_so5):
    assert check_S_power(ws_so5, 3)["contained"] is True
    assert check_S_power(ws_so5, 2)["contained"] is False


def test_sp4_matches_so5():
    """sp(4) and so(5) are isomorphic: the S-power verdicts and invariant
    dimensions must coincide."""
    from chiralring.rootsystem import build_root_system, chevalley_data
    from chiralring.cdsw import Workspace
    ws = Workspace(chevalley_data(build_root_system("C", 2)))
    assert ws.g == 3
    assert check_S_power(ws, 3)["contained"] is True
    assert check_S_power(ws, 2)["contained"] is False
    rep = check_part_i(ws, 3)
    assert [d["dim"] for d in rep["diagonal"]] == [1, 1, 1, 0]
    assert rep["pass"]


def test_component_of_S_power_is_homogeneous(ws_sl2):
    s2 = ws_sl2.S.power(2)
    assert s2.component(2, 2) == s2
    assert s2.component(1, 1).is_zero()
    assert s2.bidegree() == (2, 2)


def test_regression_ideal_ranks(ws_sl2, ws_sl3):
    # pinned exact ranks of the weight-zero slices used by the S-power tests
    assert check_S_power(ws_sl2, 2)["ideal_rank"] == 3
    assert check_S_power(ws_sl3, 3)["ideal_rank"] == 244
    # the full (2,2) component of sl2 is exhausted by the ideal
    full = ideal_component(ws_sl2, (XX, XY, YY), 2, 2)
    assert full.rank == 9
    assert ws_sl2.alg.component_dim(2, 2) == 9
    # sl3 (2,2): ideal rank 636 of 784, so the quotient slice has dim 148
    full3 = ideal_component(ws_sl3, (XX, XY, YY), 2, 2)
    assert (ws_sl3.alg.component_dim(2, 2), full3.rank) == (784, 636)


def test_full_component_agrees_with_weight_zero_slice(ws_sl3):
    """Membership verdicts computed in the full component match the
    weight-zero restriction."""
    from chiralring.cdsw.core import ideal_weight_zero
    full = ideal_component(ws_sl3, (XX, XY, YY), 2, 2)
    w0 = ideal_weight_zero(ws_sl3, (XX, XY, YY), 2, 2)
    s2 = ws_sl3.S.power(2)
    assert full.contains(s2) == w0.contains(s2) == False
    h = ws_sl3.S.power(2).scale(3)
    assert full.contains(h) == w0.contains(h)
    # every weight-zero echelon row of the slice lies in the full span
    from chiralring.exterior import ExtElement
    for row in w0.echelons[0].basis_rows():
        el = ExtElement(ws_sl3.alg, {w0.columns[j]: c for j, c in row.items()})
        assert full.contains(el)


def test_part_i_sl2(ws_sl2):
    rep = check_part_i(ws_sl2, 2)
    assert [d["dim"] for d in rep["diagonal"]] == [1, 1, 0]
    assert all(d["match"] for d in rep["diagonal"])
    assert all(o["dim"] == 0 for o in rep["offdiagonal"])
    assert rep["pass"]


def test_part_i_sl3(ws_sl3):
    rep = check_part_i(ws_sl3, 3)
    assert [d["dim"] for d in rep["diagonal"]] == [1, 1, 1, 0]
    assert rep["pass"]


def test_swap_membership_invariance(ws_sl2, ws_sl3):
    for ws, k in ((ws_sl2, 1), (ws_sl2, 2), (ws_sl3, 2), (ws_sl3, 3)):
        assert swap_membership_invariance(ws, k)


def test_swap_maps_families(ws_sl3):
    """The x<->y involution sends the XX family to the YY family and fixes
    each XY relation."""
    rels = ws_sl3.rels
    for rxx, ryy in zip(rels.xx_relations, rels.yy_relations):
        assert rxx.swap_xy() == ryy
        assert ryy.swap_xy() == rxx
    for rxy in rels.xy_relations:
        assert rxy.swap_xy() == rxy


def test_modular_exact_agreement(ws_sl2, ws_sl3):
    mode = FieldMode.modular(seed=123)
    for ws, k in ((ws_sl2, 1), (ws_sl2, 2), (ws_sl3, 2), (ws_sl3, 3)):
        exact = check_S_power(ws, k)
        mod = check_S_power(ws, k, mode=mode)
        assert exact["contained"] == mod["contained"]
        assert exact["ideal_rank"] == mod["ideal_rank"]
        assert mod["probabilistic"] and not exact["probabilistic"]


def test_component_too_large_guard(ws_sl3):
    with pytest.raises(ComponentTooLarge):
        check_S_power(ws_sl3, 3, cap=100)


def test_equivariance_of_ideal_spans(ws_sl2):
    """Ideal component subspaces are stable under the generator actions."""
    from chiralring.exterior import ExtElement
    sub = ideal_component(ws_sl2, (XX, XY, YY), 2, 2)
    cols = sub.columns
    for row in sub.echelons[0].basis_rows():
        el = ExtElement(ws_sl2.alg, {cols[j]: c for j, c in row.items()})
        for a in ws_sl2.lie.chevalley_generator_indices():
            img = ws_sl2.action.act(a, el)
            if not img.is_zero():
                assert sub.contains(img)

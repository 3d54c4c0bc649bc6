from fractions import Fraction

import pytest

from liebalance import blocks, groups
from liebalance.blocks import ScenarioError
from liebalance.roots import root_system
from liebalance.toledo import (ALL_TAGS, Decoration, Status, SurfaceData,
                               TAG_DOUBLE, TAG_SPLIT_ORTH, TAG_VANISHING,
                               ToledoData, milnor_wood_bound, propagate_constraints,
                               toledo_combine, toledo_conjugate, toledo_direct_sum,
                               toledo_hom_with_unitary)


def test_milnor_wood_values():
    assert milnor_wood_bound(SurfaceData(2), 2) == 4
    assert milnor_wood_bound(SurfaceData(2), 1) == 2
    assert milnor_wood_bound(SurfaceData(3), 3) == 12
    with pytest.raises(ValueError):
        milnor_wood_bound(SurfaceData(2), 0)


def test_combine_conjugate():
    t = ToledoData(Status.MAXIMAL_POSITIVE, Fraction(4), rank=2)
    c = toledo_combine("conjugate", [t])
    assert c.status == Status.MAXIMAL_NEGATIVE and c.value == -4 and c.rank == 2


def test_combine_direct_sum_cancellation():
    t = ToledoData(Status.MAXIMAL_POSITIVE, Fraction(3), rank=1)
    tbar = toledo_conjugate(t)
    s = toledo_direct_sum([t, tbar])
    assert s.value == 0 and s.status == Status.NON_MAXIMAL and s.rank == 2


def test_combine_direct_sum_same_sign():
    t1 = ToledoData(Status.MAXIMAL_POSITIVE, Fraction(2), rank=1)
    t2 = ToledoData(Status.MAXIMAL_POSITIVE, Fraction(4), rank=2)
    s = toledo_direct_sum([t1, t2])
    assert s.status == Status.MAXIMAL_POSITIVE and s.value == 6 and s.rank == 3


def test_combine_unknown_never_fabricates():
    t1 = ToledoData(Status.MAXIMAL_POSITIVE, Fraction(2))
    t2 = ToledoData(Status.UNKNOWN)
    assert toledo_direct_sum([t1, t2]).status == Status.UNKNOWN


def test_combine_hom_with_unitary():
    t = ToledoData(Status.MAXIMAL_POSITIVE, Fraction(2), rank=1)
    h = toledo_combine(("hom_with_unitary", 3), [t])
    assert h.status == Status.MAXIMAL_POSITIVE and h.value == 6 and h.rank == 3


def test_exhaustive_small_combination_properties():
    statuses = [Status.MAXIMAL_POSITIVE, Status.MAXIMAL_NEGATIVE,
                Status.NON_MAXIMAL, Status.UNKNOWN]
    for s1 in statuses:
        t1 = ToledoData(s1, Fraction(1))
        assert toledo_conjugate(toledo_conjugate(t1)).status == s1
        for s2 in statuses:
            t2 = ToledoData(s2, Fraction(-2))
            out = toledo_direct_sum([t1, t2])
            assert out.value == -1
            if Status.UNKNOWN in (s1, s2):
                assert out.status == Status.UNKNOWN
            elif s1 == s2 and s1 in (Status.MAXIMAL_POSITIVE, Status.MAXIMAL_NEGATIVE):
                assert out.status == s1
            else:
                assert out.status == Status.NON_MAXIMAL
        for d in (1, 2, 5):
            assert toledo_hom_with_unitary(d, t1).status == s1
            assert toledo_hom_with_unitary(d, t1).value == d


def _su_rigid_system():
    spec = groups.su(2, 3)
    bl = [blocks.sesq_self(1, (0, 1), (1, 0), label="D"),
          blocks.sesq_self(2, (1, 1), (2, 0), label="E")]
    return spec, root_system(spec, bl)


def test_propagation_is_idempotent():
    spec, sys = _su_rigid_system()
    decos = [Decoration("E:il", Status.MAXIMAL_POSITIVE)]
    p1 = propagate_constraints(spec, sys, decos)
    as_decos = [Decoration(lbl, st) for lbl, st in p1.block_status.items()]
    p2 = propagate_constraints(spec, sys, as_decos)
    assert [(x.root.label, x.status, x.forced_tag) for x in p1.adjoint] == \
           [(x.root.label, x.status, x.forced_tag) for x in p2.adjoint]


def test_maximal_on_nonvanishing_rejected():
    spec, sys = _su_rigid_system()
    with pytest.raises(ScenarioError) as exc:
        propagate_constraints(spec, sys, [Decoration("D:il", Status.MAXIMAL_POSITIVE)])
    assert TAG_VANISHING in str(exc.value)


def test_double_weights_forced_with_tag():
    spec = groups.sp_r(4)
    sys = root_system(spec, [blocks.imag_pair(1, 1, (1, 0)),
                             blocks.zero_block(2, (1, 1))])
    prop = propagate_constraints(spec, sys, [])
    doubles = [p for p in prop.adjoint if p.root.source[0] == "wedge"]
    assert doubles and all(p.status == Status.NON_MAXIMAL and
                           p.forced_tag == TAG_DOUBLE for p in doubles)


def test_nonvanishing_weight_spaces_forced():
    spec = groups.sl_r(4)
    sys = root_system(spec, [blocks.conj_pair(2, 1)])
    prop = propagate_constraints(spec, sys, [])
    pure = [p for p in prop.adjoint if p.root.pure_imaginary]
    assert pure and all(p.forced_tag == TAG_VANISHING for p in pure)


def test_split_orthogonal_pathway_forced():
    spec = groups.so(4, 2)
    sys = root_system(spec, [blocks.imag_pair(1, 1, (1, 0)),
                             blocks.zero_block(4, (2, 2))])
    prop = propagate_constraints(spec, sys,
                                 [Decoration("0", Status.MAXIMAL_POSITIVE)])
    zero_paths = [p for p in prop.adjoint if "0" in p.root.source]
    assert zero_paths and all(p.forced_tag == TAG_SPLIT_ORTH for p in zero_paths)


def test_parity_rule_kills_even_half_dimension():
    spec = groups.so_star(8)
    sys = root_system(spec, [blocks.imag_pair(1, 1, (1, 0)),
                             blocks.zero_block(6, (3, 3))])
    prop = propagate_constraints(spec, sys,
                                 [Decoration("0", Status.MAXIMAL_POSITIVE)])
    zero_paths = [p for p in prop.adjoint if "0" in p.root.source]
    assert zero_paths and all(p.status == Status.NON_MAXIMAL and
                              p.forced_tag == TAG_VANISHING for p in zero_paths)


def test_conjugation_symmetry_after_propagation():
    cases = [
        (groups.so_star(6), [blocks.imag_pair(1, 1, (1, 0)),
                             blocks.zero_block(4, (2, 2))],
         [Decoration("0", Status.MAXIMAL_POSITIVE)]),
        (groups.so(4, 2), [blocks.imag_pair(1, 1, (1, 0)),
                           blocks.zero_block(4, (2, 2))],
         [Decoration("0", Status.MAXIMAL_POSITIVE)]),
        (groups.su(2, 2), [blocks.sesq_self(1, (1, 0), (1, 0), label="a"),
                           blocks.sesq_self(1, (0, 1), (1, 0), label="b"),
                           blocks.sesq_self(2, (1, 1), (1, 0), label="c")],
         [Decoration("c:il", Status.MAXIMAL_POSITIVE)]),
    ]
    for spec, bl, decos in cases:
        sys = root_system(spec, bl)
        prop = propagate_constraints(spec, sys, decos)
        lookup = {(p.root.re, p.root.im): p.status for p in prop.adjoint}
        for (re, im), st in lookup.items():
            neg = (tuple(-x for x in re), tuple(-x for x in im))
            assert neg in lookup
            if st in (Status.MAXIMAL_POSITIVE, Status.MAXIMAL_NEGATIVE):
                assert lookup[neg] == st.flip()
            else:
                assert lookup[neg] == st


def test_forced_statuses_carry_known_tags():
    spec, sys = _su_rigid_system()
    prop = propagate_constraints(spec, sys, [Decoration("E:il", Status.MAXIMAL_POSITIVE)])
    for p in prop.adjoint:
        if p.forced_tag is not None:
            assert p.forced_tag in ALL_TAGS


def test_milnor_wood_rejection_in_propagation():
    spec, sys = _su_rigid_system()
    surf = SurfaceData(2)
    ok = Decoration("E:il", Status.MAXIMAL_POSITIVE, Fraction(4))
    propagate_constraints(spec, sys, [ok], surf)
    bad = Decoration("E:il", Status.MAXIMAL_POSITIVE, Fraction(5))
    with pytest.raises(ScenarioError):
        propagate_constraints(spec, sys, [bad], surf)


def test_adjoint_level_decoration_is_translated():
    spec, sys = _su_rigid_system()
    prop = propagate_constraints(
        spec, sys, [Decoration("D:il->E:il", Status.MAXIMAL_NEGATIVE)])
    assert prop.block_status["E:il"] == Status.MAXIMAL_POSITIVE

    with pytest.raises(ScenarioError):
        propagate_constraints(spec, sys, [
            Decoration("E:il", Status.MAXIMAL_POSITIVE),
            Decoration("D:il->E:il", Status.MAXIMAL_POSITIVE),
        ])


def test_contradicting_forced_status_reports_rule():
    spec = groups.sp_r(4)
    sys = root_system(spec, [blocks.imag_pair(1, 1, (1, 0)),
                             blocks.zero_block(2, (1, 1))])
    wedge_label = next(r.label for r in sys.adjoint if r.source[0] == "wedge")
    with pytest.raises(ScenarioError) as exc:
        propagate_constraints(spec, sys,
                              [Decoration(wedge_label, Status.MAXIMAL_POSITIVE)])
    assert TAG_DOUBLE in str(exc.value)

from fractions import Fraction

import pytest

from liebalance import blocks, groups
from liebalance.blocks import ScenarioError
from liebalance.roots import root_system


def _relation_sum(sys):
    k = sys.dim_c
    acc_re = [Fraction(0)] * k
    acc_im = [Fraction(0)] * k
    for r in sys.standard:
        for c in range(k):
            acc_re[c] += r.dim * r.re[c]
            acc_im[c] += r.dim * r.im[c]
    return acc_re, acc_im


def test_sl_c_three_classes():
    sys = root_system(groups.sl_c(6), [blocks.cls(1), blocks.cls(2), blocks.cls(3)])
    assert sys.dim_c == 4  # complex dimension 2, real coordinates
    assert len(sys.standard) == 3
    re, im = _relation_sum(sys)
    assert all(x == 0 for x in re) and all(x == 0 for x in im)
    assert len(sys.adjoint) == 6
    values = {(r.re, r.im) for r in sys.adjoint}
    assert len(values) == 6
    assert not any(r.pure_imaginary for r in sys.adjoint)


def test_so_c_dual_pair_no_zero():
    sys = root_system(groups.so_c(4), [blocks.dual_pair(1, 2)])
    assert sys.dim_c == 2
    labels = {r.label for r in sys.standard}
    assert labels == {"b0:+z", "b0:-z"}
    assert sys.zero is None


def test_double_weight_exclusion_orthogonal():
    # one-dimensional weight space and a symmetric form: no doubled weight
    sys = root_system(groups.so_c(4), [blocks.dual_pair(1, 1), blocks.zero_block(2)])
    assert all(r.source[0] != "wedge" for r in sys.adjoint)
    # skew form: the doubled weight exists with one-dimensional space
    sys = root_system(groups.sp_c(2), [blocks.dual_pair(1, 1)])
    wedges = [r for r in sys.adjoint if r.source[0] == "wedge"]
    assert len(wedges) == 2 and all(r.dim == 1 for r in wedges)
    # symmetric form, two-dimensional space: alternating part has dim 1
    sys = root_system(groups.so_c(8), [blocks.dual_pair(2, 1), blocks.zero_block(4)])
    wedges = {r.label: r.dim for r in sys.adjoint if r.source[0] == "wedge"}
    assert wedges == {"wedge(b0:+z)": 1, "wedge(b0:-z)": 1}


def test_su_single_self_block_weight_is_imaginary():
    sys = root_system(groups.su(1, 1),
                      [blocks.sesq_self(1, (1, 0), (1, 0), label="a"),
                       blocks.sesq_self(1, (0, 1), (1, 0), label="b")])
    assert all(r.pure_imaginary for r in sys.standard)
    assert sys.dim_c == 1


def test_su_signature_product_rule():
    # definite (2,0) against vanishing (1,1): signature value 0 on dim 4
    sys = root_system(groups.su(3, 1), [
        blocks.sesq_self(2, (2, 0), (1, 0), label="a"),
        blocks.sesq_self(2, (1, 1), (1, 0), label="b"),
    ])
    r = next(x for x in sys.adjoint if x.source == ("hom", "a:il", "b:il"))
    assert r.dim == 4 and r.sig.value == 0 and r.sig.dim == 4


def test_sl_r_conjugate_pair_signature():
    sys = root_system(groups.sl_r(6), [blocks.conj_pair(3, 1)])
    pure = [r for r in sys.adjoint if r.pure_imaginary]
    assert len(pure) == 2
    for r in pure:
        assert r.dim == 9 and abs(r.sig.value) == 3


def test_sl_h_flips_the_sign():
    sys_r = root_system(groups.sl_r(4), [blocks.conj_pair(2, 1)])
    sys_h = root_system(groups.sl_h(2), [blocks.conj_pair(2, 1)])
    sig_r = next(r.sig for r in sys_r.adjoint if r.pure_imaginary)
    sig_h = next(r.sig for r in sys_h.adjoint if r.pure_imaginary)
    assert sig_r.value == 2 and sig_h.value == -2


def test_signbil_double_weight_example():
    # vanishing signature on dim 4, alternating part: (s^2 - n)/2 = -2
    sys = root_system(groups.so(4, 4), [blocks.imag_pair(4, 1, (2, 2))])
    w = next(r for r in sys.adjoint if r.source[0] == "wedge")
    assert w.dim == 6
    assert abs(w.sig.value) == 2


def test_weight_space_symmetry_and_negation_closure():
    sys = root_system(groups.so(5, 1),
                      [blocks.imag_pair(2, 1, (2, 0)), blocks.zero_block(2, (1, 1))])
    values = {(r.re, r.im): r for r in sys.adjoint}
    for (re, im), r in values.items():
        neg = (tuple(-x for x in re), tuple(-x for x in im))
        assert neg in values
        assert values[neg].dim == r.dim
        assert values[neg].sig == r.sig  # opposite weights carry equal signatures


def test_dimension_audits_match_closed_forms():
    cases = [
        (groups.sl_r(5), [blocks.conj_pair(1, 2), blocks.real_cls(1, 1)], 24),
        (groups.su(2, 2), [blocks.sesq_self(2, (1, 1), (2, 0))], 15),
        (groups.so(3, 3), [blocks.imag_pair(1, 1, (1, 0)), blocks.split_pair(1, 1),
                           blocks.zero_block(2, (0, 2))], 15),
        (groups.sp_r(6), [blocks.imag_pair(2, 1, (1, 1)), blocks.zero_block(2, (1, 1))], 21),
        (groups.so_star(8), [blocks.imag_pair(2, 1, (1, 1)), blocks.zero_block(4, (2, 2))], 28),
        (groups.sp(1, 1), [blocks.imag_pair(1, 1, (1, 0)), blocks.imag_pair(1, 1, (0, 1))], 10),
        (groups.sl_c(4), [blocks.cls(2, 2)], 15),
    ]
    for spec, bl, dim_g in cases:
        sys = root_system(spec, bl)
        total, expect = sys.dim_audit()
        assert total == expect == dim_g


def test_quaternionic_evenness_enforced():
    with pytest.raises(ScenarioError):
        root_system(groups.sl_h(2), [blocks.real_cls(1, 1), blocks.real_cls(3, 1)])
    with pytest.raises(ScenarioError):
        root_system(groups.so_star(6), [blocks.split_pair(1, 1),
                                        blocks.zero_block(4, (2, 2))])


def test_dimension_mismatch_rejected():
    with pytest.raises(ScenarioError):
        root_system(groups.sl_c(5), [blocks.cls(2, 1)])


def test_skew_zero_blocks_must_vanish():
    with pytest.raises(ScenarioError):
        root_system(groups.sp_r(4), [blocks.imag_pair(1, 1, (1, 0)),
                                     blocks.zero_block(2, (2, 0))])


def test_su_ambient_signature_must_match():
    with pytest.raises(ScenarioError):
        root_system(groups.su(1, 2), [blocks.sesq_self(1, (1, 0), (1, 0)),
                                      blocks.sesq_self(2, (2, 0), (1, 0))])


def test_quad_conjugate_weights_are_imaginary_with_eta_signature():
    sys = root_system(groups.so(2, 2), [blocks.quad_pair(1, 1)])
    conj_roots = [r for r in sys.adjoint if r.pure_imaginary]
    assert len(conj_roots) == 2
    assert all(r.sig.value == 1 for r in conj_roots)
    sys = root_system(groups.sp(1, 1), [blocks.quad_pair(1, 1)])
    conj_roots = [r for r in sys.adjoint if r.pure_imaginary]
    assert all(r.sig.value == -1 for r in conj_roots)

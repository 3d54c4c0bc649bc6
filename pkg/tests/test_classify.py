from liebalance import blocks, groups
from liebalance.classify import classify
from liebalance.roots import root_system
from liebalance.toledo import Decoration, Status, SurfaceData


def run(spec, bl, decos=()):
    sys = root_system(spec, bl)
    surf = SurfaceData(genus=max(2, spec.genus_bound()))
    verdict, prop = classify(spec, surf, sys, list(decos))
    return verdict, prop


def test_special_linear_families_flexible():
    v, _ = run(groups.sl_r(4), [blocks.conj_pair(2, 1)])
    assert v.flexible and v.reason == "special_linear_nonvanishing"
    v, _ = run(groups.sl_h(2), [blocks.conj_pair(2, 1)])
    assert v.flexible
    v, _ = run(groups.sl_c(4), [blocks.cls(1), blocks.cls(3)])
    assert v.flexible and v.reason == "complex_group"


def test_compact_groups_flexible():
    v, _ = run(groups.su(3, 0), [blocks.sesq_self(3, (3, 0), (1, 0))])
    assert v.flexible and v.reason == "compact_group"
    v, _ = run(groups.so(4, 0), [blocks.imag_pair(1, 1, (1, 0), label="a"),
                                 blocks.imag_pair(1, 1, (1, 0), label="b")])
    assert v.flexible and v.reason == "compact_group"


def test_skew_ambient_always_flexible():
    v, _ = run(groups.sp_r(4), [blocks.imag_pair(1, 1, (1, 0)),
                                blocks.zero_block(2, (1, 1))],
               [Decoration("0", Status.MAXIMAL_POSITIVE)])
    assert v.flexible and v.reason == "skew_ambient_form"
    v, _ = run(groups.sp(1, 2), [blocks.imag_pair(1, 1, (1, 0)),
                                 blocks.zero_block(4, (2, 2))])
    assert v.flexible


def test_non_imaginary_weight_short_circuit():
    v, _ = run(groups.so(3, 3), [blocks.imag_pair(1, 1, (1, 0)),
                                 blocks.split_pair(1, 1),
                                 blocks.zero_block(2, (0, 2))])
    assert v.flexible and v.reason == "non_imaginary_weight"


def test_su_rigid_and_descriptor():
    spec = groups.su(2, 3)
    bl = [blocks.sesq_self(1, (0, 1), (1, 0), label="D"),
          blocks.sesq_self(2, (1, 1), (2, 0), label="E")]
    v, _ = run(spec, bl, [Decoration("E:il", Status.MAXIMAL_POSITIVE)])
    assert v.outcome == "rigid_maximal"
    assert v.descriptor == "S(U(2,2) x U(1))"
    v, _ = run(spec, bl, [Decoration("E:il", Status.MAXIMAL_NEGATIVE)])
    assert v.outcome == "rigid_maximal"
    v, _ = run(spec, bl, [Decoration("E:il", Status.NON_MAXIMAL)])
    assert v.flexible and v.reason == "balanced"


def test_su_undecorated_is_indeterminate():
    spec = groups.su(2, 3)
    bl = [blocks.sesq_self(1, (0, 1), (1, 0), label="D"),
          blocks.sesq_self(2, (1, 1), (2, 0), label="E")]
    v, _ = run(spec, bl)
    assert v.outcome == "indeterminate"
    assert v.unknown == ["E:il"]


def test_su_mixed_definite_signs_balanced():
    spec = groups.su(3, 3)
    bl = [blocks.sesq_self(1, (1, 0), (1, 0), label="d1"),
          blocks.sesq_self(1, (0, 1), (1, 0), label="d2"),
          blocks.sesq_self(2, (1, 1), (2, 0), label="E")]
    v, _ = run(spec, bl, [Decoration("E:il", Status.MAXIMAL_POSITIVE)])
    assert v.flexible


def test_su_split_tube_type_is_flexible():
    # p = q: every datum must come out balanced
    spec = groups.su(2, 2)
    bl = [blocks.sesq_self(2, (1, 1), (2, 0), label="E")]
    v, _ = run(spec, bl, [Decoration("E:il", Status.MAXIMAL_POSITIVE)])
    assert v.flexible


def test_so_star_rigid_shape():
    spec = groups.so_star(6)
    bl = [blocks.imag_pair(1, 1, (1, 0)), blocks.zero_block(4, (2, 2))]
    v, _ = run(spec, bl, [Decoration("0", Status.MAXIMAL_POSITIVE)])
    assert v.outcome == "rigid_maximal"
    assert v.descriptor == "SO*(4) x SO(2)"


def test_so_star_finer_presentation_rigid():
    spec = groups.so_star(6)
    bl = [blocks.imag_pair(1, 1, (1, 0), label="a"),
          blocks.imag_pair(2, 1, (1, 1), label="b")]
    v, _ = run(spec, bl, [Decoration("b:+l", Status.MAXIMAL_POSITIVE)])
    assert v.outcome == "rigid_maximal"
    assert v.descriptor == "SO*(4) x SO(2)"


def test_so_star_even_m_flexible():
    spec = groups.so_star(8)
    bl = [blocks.imag_pair(1, 1, (1, 0)), blocks.zero_block(6, (3, 3))]
    v, _ = run(spec, bl, [Decoration("0", Status.MAXIMAL_POSITIVE)])
    assert v.flexible


def test_so_never_rigid():
    spec = groups.so(4, 2)
    bl = [blocks.imag_pair(1, 1, (1, 0)), blocks.zero_block(4, (2, 2))]
    v, _ = run(spec, bl, [Decoration("0", Status.MAXIMAL_POSITIVE)])
    assert v.flexible
    spec = groups.so(4, 2)
    bl = [blocks.imag_pair(1, 1, (1, 0), label="a"),
          blocks.imag_pair(2, 1, (1, 1), label="b")]
    v, _ = run(spec, bl, [Decoration("b:+l", Status.MAXIMAL_POSITIVE)])
    assert v.flexible


def test_genus_bound_flag():
    spec = groups.su(2, 3)
    bl = [blocks.sesq_self(1, (0, 1), (1, 0), label="D"),
          blocks.sesq_self(2, (1, 1), (2, 0), label="E")]
    sys = root_system(spec, bl)
    verdict, _ = classify(spec, SurfaceData(genus=2), sys,
                          [Decoration("E:il", Status.NON_MAXIMAL)])
    assert not verdict.genus_bound_ok
    verdict, _ = classify(spec, SurfaceData(genus=spec.genus_bound()), sys,
                          [Decoration("E:il", Status.NON_MAXIMAL)])
    assert verdict.genus_bound_ok


def test_certificates_attached_and_verified():
    spec = groups.su(2, 3)
    bl = [blocks.sesq_self(1, (0, 1), (1, 0), label="D"),
          blocks.sesq_self(2, (1, 1), (2, 0), label="E")]
    v, prop = run(spec, bl, [Decoration("E:il", Status.MAXIMAL_POSITIVE)])
    from liebalance.classify import balance_instance
    sys = root_system(spec, bl)
    assert v.certificate is not None and not v.certificate.balanced
    assert v.certificate.verify(balance_instance(sys, prop))

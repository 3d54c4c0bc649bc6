"""Weights of the center of a centralizer, with exact coordinates.

A block datum describes how a reductive subgroup decomposes the standard
representation. From it we get the center of the centralizer, its weights on
the standard representation (with the sesquilinear signatures the weight
spaces inherit), the adjoint weights with dimensions, and a dimension audit
against the closed-form dimension of the ambient algebra.
"""

from liebalance import blocks, groups
from liebalance.roots import root_system


def show(spec, data, note):
    system = root_system(spec, data)
    print(f"{spec.describe()}   ({note})")
    print(f"  dim g = {spec.dim_complexified}, dim c = {system.dim_c}, "
          f"zero space dim = {system.dim_g0}")
    print("  standard weights:")
    for r in system.standard + ([system.zero] if system.zero else []):
        tag = "pure imaginary" if r.pure_imaginary else "free"
        sig = f", signature {r.sig}" if r.sig else ""
        print(f"    {r.label:<10} dim {r.dim}  [{tag}{sig}]")
    print("  adjoint weights:")
    for r in system.adjoint:
        sig = f"  sig {r.sig}" if r.sig else ""
        flag = "*" if r.pure_imaginary else " "
        print(f"   {flag}{r.label:<22} dim {r.dim}{sig}")
    total, expect = system.dim_audit()
    print(f"  audit: {system.dim_g0} + {total - system.dim_g0} = {expect}")
    print()


print("Three isotypical classes in SL(6,C): the weights satisfy the single")
print("trace relation sum(d_l * l) = 0, and adjoint weights are all the")
print("pairwise differences.")
print()
show(groups.sl_c(6), [blocks.cls(1), blocks.cls(2), blocks.cls(3)],
     "dims 1, 2, 3")

print("A conjugate pair in SL(4,R): the difference of the two conjugate")
print("weights is pure imaginary and its weight space carries signature +-d")
print("(symmetric maps against alternating ones).")
print()
show(groups.sl_r(4), [blocks.conj_pair(2, 1)], "conjugate pair, d = 2")

print("The quaternionic twist flips that sign:")
print()
show(groups.sl_h(2), [blocks.conj_pair(2, 1)], "same datum in SL(2,H)")

print("An orthogonal-family datum with a zero weight space. Note the doubled")
print("weights (alternating forms on a weight space) and the weights paired")
print("with the zero space.")
print()
show(groups.so(5, 1), [blocks.imag_pair(2, 1, (2, 0)),
                       blocks.zero_block(2, (1, 1))],
     "definite pair + split zero block")

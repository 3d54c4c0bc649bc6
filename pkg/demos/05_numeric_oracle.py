"""The floating-point oracle: explicit matrix models against symbolic reports.

The same block datum becomes an explicit matrix model -- the invariant form,
the antilinear structure, the center as honest block-scalar matrices. The
oracle then recovers the weight decomposition numerically: a basis of the
ambient algebra from a singular value decomposition, simultaneous
eigendecomposition of the adjoint action of the center, eigenvalue counts of
the Hermitian Gram matrices of Trace(sigma(X) X'). Agreement with the exact
side is a genuine cross-check of the closed-form weight and signature rules.
"""

import random

from liebalance import blocks, groups
from liebalance.oracle import (brute_force_roots, compare_reports,
                               synthesize_model)
from liebalance.randomgen import ALL_FAMILIES, random_scenario

spec = groups.so_star(6)
data = [blocks.imag_pair(1, 1, (1, 0)), blocks.zero_block(4, (2, 2))]
system, model = synthesize_model(spec, data)

print(f"model of a {spec.describe()} datum: ambient dimension {model.n}")
print(f"  tau matrix with tau^2 = {model.eta} * id; invariant bilinear form;")
print(f"  center spanned by {len(model.centers)} block-scalar matrix")
print()

report = brute_force_roots(system, model, seed=1)
print("numeric weight report (adjoint):")
for w in report.adjoint:
    val = ", ".join(f"{v:.3f}" for v in w.value)
    sig = f"  signature {w.signature}" if w.signature else ""
    print(f"  value ({val})  dim {w.dim}{sig}")
print(f"  zero weight space: dim {report.zero_dim}")
print(f"  algebra dimension: {report.dim_g} "
      f"(closed form: {spec.dim_complexified})")
print(f"  sigma equivariance of weight spaces: {report.sigma_equivariant}")
print()

problems = compare_reports(system, report)
print("symbolic vs numeric:", "agree" if not problems else problems)
print()

print("Randomized agreement across all ten families")
print("--------------------------------------------")
rng = random.Random(7)
for fam in ALL_FAMILIES:
    spec, data = random_scenario(fam, rng)
    system, model = synthesize_model(spec, data)
    report = brute_force_roots(system, model, seed=rng.randint(0, 10 ** 6))
    problems = compare_reports(system, report)
    print(f"  {spec.describe():<12} ambient {model.n:>2}, "
          f"{len(report.adjoint):>2} nonzero weights: "
          f"{'agree' if not problems else problems[:2]}")

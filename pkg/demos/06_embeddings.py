"""Structural verification of the two tight embeddings, in exact arithmetic.

The rank bookkeeping behind the rigidity statements rests on two embeddings
whose Kaehler forms match up to a factor of 2. Both reduce to polynomial
identities over the Gaussian rationals:

* complexifying a quaternionic matrix X = M + jM' gives
  rho(X) = [[M, -conj M'], [M', conj M]]; restricted to the skew-unitary
  algebra, the image is skew for the split sesquilinear form (so it sits in
  su(2n,2n)), the quaternionic complex structure goes to
  diag(i,...,i,-i,...,-i), and for the smallest case the su(1,1)-type part
  lands diagonally inside two commuting su(1,1) blocks -- the diagonal is
  where the factor 2 comes from;
* SL(2,R) preserves the split form conj(v)^T [[0,i],[-i,0]] w on C^2, which
  realizes it as the unitary group of a split form inside Sp(4,R), again
  diagonally across the real and imaginary planes.
"""

from liebalance.appendix import (quaternion_matrix_complexify, s_form_matrix,
                                 skew_unitary_project, verify_appendix_embeddings)
from liebalance.exact import I, Quaternion

qi = Quaternion(I, 0)
zero = Quaternion(0, 0)
jmat = [[qi, zero], [zero, qi]]
print("rho(diag(i, i)) =")
for row in quaternion_matrix_complexify(jmat):
    print("   ", [str(x) for x in row])
print("which is the complex structure diag(i, i, -i, -i) of SU(2,2).")
print()

print("The split form on the complexified quaternionic plane:")
for row in s_form_matrix(2):
    print("   ", [str(x) for x in row])
print()

print("A random skew-unitary element and its image:")
import random
from fractions import Fraction
from liebalance.exact import GaussianRational
rng = random.Random(4)


def rq():
    f = lambda: Fraction(rng.randint(-2, 2), rng.randint(1, 2))
    return Quaternion(GaussianRational(f(), f()), GaussianRational(f(), f()))


x = skew_unitary_project([[rq(), rq()], [rq(), rq()]])
for row in quaternion_matrix_complexify(x):
    print("   ", [str(v) for v in row])
print()

rep = verify_appendix_embeddings(seed=0)
print("full check list:")
for c in rep.checks:
    print(f"  {'PASS' if c.passed else 'FAIL'}  {c.name}")
print("all exact" if rep.ok else "FAILURES ABOVE")

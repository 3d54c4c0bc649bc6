"""The balancedness test: exact linear programming with verified certificates.

Balanced means 0 lies in the interior of conv(P) + span(N). The decision runs
as a phase-one simplex over the rationals; both outcomes return witnesses that
re-verify by direct arithmetic, and an independent support-set enumeration
backs the verdict.
"""

import random
from fractions import Fraction

from liebalance.balance import (BalancednessInstance, is_balanced,
                                is_balanced_bruteforce)


def demo(k, ps, ns, note):
    inst = BalancednessInstance.make(k, ps, ns)
    cert = is_balanced(inst)
    print(f"{note}")
    print(f"  P = {ps}, N = {ns}  ->  {'balanced' if cert.balanced else 'unbalanced'}")
    if cert.balanced:
        if cert.coefficients:
            print(f"  witness: positive coefficients {[str(c) for c in cert.coefficients]}"
                  f" and N-coefficients {[str(c) for c in cert.n_coefficients]}")
    else:
        print(f"  witness functional: {[str(x) for x in cert.functional]}"
              f"  (vanishes on N, nonnegative on P)")
    assert cert.verify(inst)
    assert cert.balanced == is_balanced_bruteforce(inst)
    print("  certificate re-verified; support-set enumeration agrees")
    print()


demo(1, [[1]], [], "One positive direction and nothing else: unbalanced")
demo(1, [], [[1]], "No P, but N spans: balanced")
demo(2, [[1, 0], [-1, 1], [0, -1]], [],
     "A triangle around the origin: balanced with strictly positive weights")
demo(2, [[1, 0], [1, 1]], [], "Two vectors on one side: unbalanced")
demo(2, [[1, 0], [-1, 0]], [], "Opposite vectors that fail to span: unbalanced")
demo(2, [[1, 1], [-1, 1]], [[0, 1]],
     "P straddles the line spanned by N: balanced")

print("Monotonicity: moving a vector from P to N never breaks balancedness.")
rng = random.Random(2)
checked = 0
for _ in range(300):
    k = rng.randint(1, 4)
    ps = [[Fraction(rng.randint(-3, 3)) for _ in range(k)]
          for _ in range(rng.randint(1, 5))]
    ns = [[Fraction(rng.randint(-3, 3)) for _ in range(k)]
          for _ in range(rng.randint(0, 3))]
    before = is_balanced(BalancednessInstance.make(k, ps, ns)).balanced
    if not before:
        continue
    idx = rng.randrange(len(ps))
    after = is_balanced(BalancednessInstance.make(
        k, ps[:idx] + ps[idx + 1:], ns + [ps[idx]])).balanced
    assert after
    checked += 1
print(f"checked on {checked} random balanced instances")

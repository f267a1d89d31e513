"""Fewer piles, less leakage: the equal-piles family measured exactly.

When some a > 1 divides both the coin count and the fake count (but not the
count to disprove), showing that a equal piles balance proves the fake count
is a multiple of a.  Every choice of a is discreet; they differ only in how
much distributional information they burn.
"""

from discreet_weighings import (
    ProblemInstance,
    build_equal_piles,
    equal_piles_factor,
    equal_piles_factor_limit,
    verify_proof,
)

instance = ProblemInstance(t=80, f=4, d=3)
print(f"scenario: {instance.t} coins, {instance.f} fake, must rule out {instance.d}\n")

for a in (4, 2):
    bundle = build_equal_piles(instance, a)
    verdict = verify_proof(instance, bundle.transcript(), bundle.placement)
    factor = equal_piles_factor(instance.t, instance.f, a)
    print(
        f"a = {a}: {a} piles of {instance.t // a}, {instance.f // a} fake(s) each; "
        f"{a - 1} weighing(s)"
    )
    print(f"  survivors {verdict.consistent_count_f:>7}   X = {float(factor):.3f}")

print(
    "\nhalving the pile count squares down the leakage: a = 2 reveals far less\n"
    "(X ~ 2.60) than a = 4 (X ~ 9.88).  The smallest admissible divisor wins.\n"
)

print("as the table grows, X settles toward a fixed ceiling per (f, a):")
print(f"{'t':>6} {'X(f=4, a=2)':>12}")
for t in (8, 16, 40, 80, 400, 4000):
    print(f"{t:>6} {float(equal_piles_factor(t, 4, 2)):>12.4f}")
limit = equal_piles_factor_limit(4, 2)
print(f"{'limit':>6} {limit:>12.4f}   (exactly 8/3)")

limit_44 = equal_piles_factor_limit(4, 4)
print(f"\nfor comparison, the a = 4 ceiling is {limit_44:.4f} (exactly 32/3).")

"""Breaking a construction on purpose and watching the verifier notice.

Each mutation corrupts one construction. The check aimed at it fails with a
concrete witness; all other checks still run on the intact kernel.
"""

from etcs import check_all, render_report
from etcs.kernel import MUTATIONS, mutated_kernel
from etcs.verifier import check_axiom, mutate_and_check

for name, (construction, _, _, target) in sorted(MUTATIONS.items()):
    report = mutate_and_check(construction, name)
    print(f"{name:22s} -> {report.axiom_id:13s} {report.verdict}: {report.witness}")

# choosing a different right inverse is still a right inverse
kernel = mutated_kernel("right_inverse", "non_least_choice")
print("\nA10 with the greatest-preimage choice:", check_axiom("A10", 3, kernel=kernel).verdict)

print("\nfull suite with break_curry injected:")
print(render_report(check_all(2, mutation="break_curry")), end="")

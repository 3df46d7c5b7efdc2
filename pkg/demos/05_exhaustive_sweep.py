"""Exhaustive verification over every small instance.

Generates all posets up to isomorphism (adjoining maximal elements over
order ideals, deduplicated by canonical form), keeps the distributive
strong upper semilattices, and runs the entire lemma suite on each.
"""

from envelope_kit import gen_dsus, gen_posets, sweep

for n in range(1, 7):
    posets = sum(1 for _ in gen_posets(n))
    instances = sum(1 for _ in gen_dsus(n))
    print("size %d: %3d posets up to iso, %2d valid instances"
          % (n, posets, instances))

print()
summary = sweep(6)
print("suite over all %d instances of size <= 6:" % summary.instance_count)
print("  failures:", summary.failure_count)
print("  instances exhibiting the bottom-preservation caveat:",
      summary.caveat_count)
print("  elapsed: %.2fs" % summary.elapsed)

report = summary.reports[0]
print()
print("checks run per instance:")
for item in report.items:
    print("  -", item.name)

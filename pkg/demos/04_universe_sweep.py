"""Watch the redundancy sentinel take over as the universe outgrows the sample.

With 15 ternary features the value universe holds 14,348,907 rows.  A few
hundred sampled rows almost never contain two rows differing at exactly one
feature, so every feature comes back with the sentinel (no pairs despite
variance).  Growing the sample brings pairs back, relevant features first.
"""

from ariselect import ProtocolConfig, SyntheticSpec, dimensionality_sweep

template = SyntheticSpec(function="g1", dimension=15, range_size=3)
sizes = [400, 1000, 5000, 10000, 20000]
cfg = ProtocolConfig(repetitions=10, seed=7, normalize=False)

print(f"universe size: {template.universe_size:,} rows\n")
print(f"{'sample':>7} {'coverage':>10} {'flagged':>9}   per-feature sentinel frequency (x1..x5)")
for size, report in zip(sizes, dimensionality_sweep(template, sizes, cfg)):
    coverage = 100.0 * size / template.universe_size
    frequencies = " ".join(
        f"{s.redundant_count / report.repetitions:.1f}" for s in report.scores[:5]
    )
    print(
        f"{size:>7} {coverage:>9.3f}% {report.redundant_fraction:>8.0%}   {frequencies}"
    )

print("\nflagged = share of features carrying the sentinel in at least one draw")

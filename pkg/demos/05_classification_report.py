"""The batch verification pipeline: every corpus entry through its checker,
agreement with the printed assertions reported entry by entry, plus
fingerprints and the bounded isomorphism oracle."""

from fractions import Fraction

from homsplit.corpus import CORPUS_ROOT, corpus_verify_all, load_algebra
from homsplit.morphisms import brute_force_iso_search, fingerprint

## Batch verification
# Expected verdicts are never assumed: the pipeline runs the symbolic
# checker and reports agreement or discrepancy with the printed assertion.

report = corpus_verify_all()
summary = report["summary"]
print(f"{summary['total']} entries: {summary['pass']} pass, {summary['fail']} fail")
print(f"{len(summary['discrepancies'])} discrepancies, e.g.:")
for eid in summary["discrepancies"][:6]:
    entry = next(r for r in report["entries"] if r["id"] == eid)
    first = entry["violations"][0]
    print(f"    {eid}: {first['template']} @ {first['witness']} -> {first['residual']}")

## Fingerprints
# Exact isomorphism invariants: unequal fingerprints certify
# non-isomorphism; equal ones decide nothing.

d1 = load_algebra(CORPUS_ROOT / "dim2" / "D1.json").specialize({"a": 0})
d2 = load_algebra(CORPUS_ROOT / "dim2" / "D2.json").specialize({"a": 0})
fp1, fp2 = fingerprint(d1), fingerprint(d2)
print("\ndim2.D1@0 fingerprint:", fp1.to_dict())
print("dim2.D2@0 fingerprint:", fp2.to_dict())
print("differing fields:", fp1.differing_fields(fp2))

## Bounded isomorphism search
# The grid search is an oracle, not a decision procedure: "no isomorphism
# within the grid" is conclusive only relative to the grid, while a
# fingerprint mismatch is conclusive absolutely.

grid = [Fraction(k) for k in range(-2, 3)]
found = brute_force_iso_search(d1, d2, grid)
print("\nsearch dim2.D1@0 vs dim2.D2@0:", "found" if found else "none",
      "(fingerprints differ => non-isomorphic)")
found_self = brute_force_iso_search(d1, d1, grid)
print("search dim2.D1@0 vs itself:", found_self.to_fraction_rows())

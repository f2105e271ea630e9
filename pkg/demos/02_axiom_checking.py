"""Axiom checking on corpus entries: every defining identity is evaluated
over all basis triples, symbolically in all declared parameters, and a
violation is a basis witness plus an exact residual polynomial."""

from homsplit.axioms import check_dendriform, check_multiplicative, check_quadri
from homsplit.corpus import CORPUS_ROOT, load_algebra

## The worked dimension-3 dendriform example
# It verifies symbolically in eta and b: all three identities vanish
# identically over the parameter ring.

deta = load_algebra(CORPUS_ROOT / "sec2" / "dendriform_Deta.json")
print("D(eta) dendriform check:", check_dendriform(deta).status)

# Multiplicativity is a separate, opt-in property; here it pins b = 0.
mult = check_multiplicative(deta)
print("D(eta) multiplicativity:", mult.status)
for violation in mult.entries[:3]:
    print("   ", violation.template, list(violation.witness), "->", violation.residual)

## A 2-dimensional classification entry that verifies
d1 = load_algebra(CORPUS_ROOT / "dim2" / "D1.json")
print("\ndim2.D1 quadri check:", check_quadri(d1).status, "(symbolic in a)")

## ... and one that does not
# dim2.D3 fails four templates with residuals proportional to b: the entry
# satisfies the axioms only on the b = 0 slice of its printed family.

d3 = load_algebra(CORPUS_ROOT / "dim2" / "D3_literal.json")
report = check_quadri(d3)
print("\ndim2.D3 quadri check:", report.status)
for violation in report.entries:
    print("   ", violation.template, list(violation.witness), "->", violation.residual)
print("at b = 0:", check_quadri(d3.specialize({"b": 0})).status)

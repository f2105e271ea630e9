"""Tour of the exact polynomial kernel: parsing, canonical forms,
specialization, and the zero test that underlies every axiom check."""

from fractions import Fraction

from homsplit.poly import ParseError, Polynomial

P = Polynomial.parse

## Parsing and canonical forms
# The grammar has integer/fraction literals, named parameters, + - * ^ and
# parentheses.  Implicit multiplication is rejected on purpose: "2a" in a
# transcribed table is more likely a typo than a product.

p = P("1/2*eta + a^2 - 1/3")
print("parsed:       ", p)
print("round trip ok:", P(str(p)) == p)

try:
    P("2a")
except ParseError as err:
    print("rejected:     ", err)

## Exact arithmetic
# Coefficients are fractions.Fraction; there is no floating point anywhere,
# so equality with zero is a decision, not a tolerance.

q = P("(a + 1)*(a - 1) - a^2")
print("(a+1)(a-1) - a^2 =", q, "   is_zero:", (q + P("1")).is_zero())

## Specialization
# Families like "gamma in R" are instantiated by binding parameters to
# rationals; unbound parameters stay symbolic.

family = P("1/2*gamma*a - b")
print("at gamma=2:   ", family.specialize({"gamma": 2}))
print("at all bound: ", family.specialize({"gamma": 2, "a": 1, "b": Fraction(1, 2)}))

## Gaussian reduction
# One operator table in the corpus contains the imaginary unit; residuals
# are reduced modulo i^2 = -1 before the zero test.

gauss = P("i^2*t21 + t21")
print("i^2*t21 + t21 reduces to:", gauss.reduce_imaginary())

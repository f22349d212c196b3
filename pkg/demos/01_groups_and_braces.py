"""Enumerating group tables and skew braces.

Everything lives on the set {0, .., n-1} with 0 the neutral element, so a
group is just a Cayley table and a skew brace is a pair of tables linked by
left distributivity.  Run this file top to bottom; each block prints what it
found.
"""

import ybtwist as yb

# How many group tables are there with neutral element 0?  The backtracking
# enumerator agrees with the classical labeled counts (n-1)!/|Aut|.
for n in range(1, 7):
    print(f"group tables of order {n}: {len(yb.enumerate_group_tables(n))}")

# Order 4 is the first interesting order: three labelings of the cyclic group
# plus the Klein table.
for g in yb.enumerate_group_tables(4):
    kind = "cyclic" if any(g.mul(a, a) != 0 for a in range(4)) else "exponent two"
    print(f"  {g.table}  ({kind})")

# A skew brace is a pair (add, mul) of group tables satisfying
#   a o (b + c) = a o b - a + a o c.
# Scanning all pairs at order 4 finds exactly ten.
braces4 = yb.enumerate_braces(4)
print(f"\nskew braces of order 4 (as labeled table pairs): {len(braces4)}")

# The classic non-trivial example: addition mod 4 with a o b = a + b + 2ab.
z4 = yb.validate_group([[(a + b) % 4 for b in range(4)] for a in range(4)])
mul = yb.validate_group([[(a + b + 2 * a * b) % 4 for b in range(4)] for a in range(4)])
radical = yb.validate_brace(z4, mul)
print("radical brace multiplication table:", radical.mul.table)
print("is a brace (abelian addition):", radical.is_brace)

# Validation failures carry the first witness.  This pair is not a brace:
tables = yb.enumerate_group_tables(4)
try:
    yb.validate_brace(tables[1], tables[2])
except yb.ValidationFailure as exc:
    print(f"\nrejected pair: {exc.kind} at {exc.witness}")

# Order 6 has braces whose multiplicative group is nonabelian:
add6 = yb.validate_group([[(a + b) % 6 for b in range(6)] for a in range(6)])
mul6 = yb.validate_group(
    [[(a + (b if a % 2 == 0 else -b)) % 6 for b in range(6)] for a in range(6)]
)
b6 = yb.validate_brace(add6, mul6)
print("\norder-6 brace: addition abelian =", b6.add.is_abelian,
      "/ multiplication abelian =", b6.mul.is_abelian)

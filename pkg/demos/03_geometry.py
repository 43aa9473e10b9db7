"""Quasi-geodesic constants and an empirical check of them.

Run: python demos/03_geometry.py
"""

import random
from fractions import Fraction

from submon.fixtures import EX1, EX2
from submon.geometry import ConstantsRecord, constants, hausdorff_check, verify_quasigeodesic
from submon.submonoid import SubmonoidSpec

a = SubmonoidSpec(1, ("a",))
c = constants(a)
print(f"<a>: L={c.L} L'={c.L_prime} lambda={c.lam} epsilon={c.epsilon} R={c.R} R'={c.R_prime}"
      f" C_wp={c.C_wp} cutoff={c.cutoff}")

c = constants(EX1, include_cutoff=False)
print(f"<a, b, ABab>: L={c.L} L'={c.L_prime} lambda={c.lam} epsilon={c.epsilon} R={c.R}")

rng = random.Random(1)
sample = [tuple(rng.randrange(3) for _ in range(rng.randint(0, 30))) for _ in range(2000)]
print("violations over 2000 random paths:", len(verify_quasigeodesic(EX1, c, sample)))
print("largest distance from a path to its geodesic:", max(hausdorff_check(EX1, c, w) for w in sample))

# A non-graded monoid has no such constants: long spellings of A travel
# far away and come back.
fake = ConstantsRecord(0, 2, 3, 3, Fraction(6), Fraction(60), Fraction(121), 3)
word = EX2.parse_sword("[ba]" * 6 + "[c][CA]" + "[BA]" * 6)
worst = max(verify_quasigeodesic(EX2, fake, [word]), key=lambda v: v.j - v.i)
print(f"\n{EX2.format_sword(word)}")
print(f"  steps {worst.i}..{worst.j} end at distance {worst.distance}: no L' can bound this family")

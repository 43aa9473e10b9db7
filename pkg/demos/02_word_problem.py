"""The word problem through the relation automaton Γ.

Γ^c walks through the elements of M^-1 M of length <= c.  Reading (x,1)
multiplies on the left by x^-1, reading (1,y) on the right by y; a loop at
the identity spells a pair of S-words equal in M.

Run: python demos/02_word_problem.py
"""

from submon.fixtures import EX1
from submon.relation import accepted_pairs, build_gamma, certified_cutoff, wp_exact, wp_member, wp_pairs_exact
from submon.submonoid import SubmonoidSpec

sw = EX1.parse_sword
for c in range(0, 7):
    g = build_gamma(EX1, c, trim=True)
    pairs = accepted_pairs(g, 4)
    exact = wp_pairs_exact(EX1, 4)
    print(f"c={c}: {g.num_vertices:3d} vertices, {len(pairs):4d} of {len(exact)} relations of length <= 4")

g = build_gamma(EX1, 6)
u, v = sw("[x][y]"), sw("[y][x][z]")
print("\nxy = yxz:", wp_member(g, u, v), " exact:", wp_exact(EX1, u, v))
print("xy = yx: ", wp_member(g, sw("[x][y]"), sw("[y][x]")))

# For <a> the certified radius is small enough to build.
a = SubmonoidSpec(1, ("a",))
c = certified_cutoff(a)
g = build_gamma(a, c, certified=True)
print(f"\n<a>: certified cutoff {c}, {g.num_vertices} vertices,",
      "complete at length 5:", accepted_pairs(g, 5) == wp_pairs_exact(a, 5))

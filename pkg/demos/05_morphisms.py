"""Homomorphisms and isomorphisms of graded submonoids.

Run: python demos/05_morphisms.py
"""

from submon.decisions import HomSpec, hom_extends, irreducibles, iso
from submon.fixtures import CODE2, EX1, EX3, FREE2, FREE3
from submon.words import format_word

print("irreducibles of <a, bA, Ba>:", [format_word(w) for w in irreducibles(EX3)], "(a = bA . a . Ba)")

for images in [("a", "b", "ABab"), ("a", "b", "b"), ("a", "a", "a")]:
    h = HomSpec(EX1, 2, images)
    v = hom_extends(h)
    line = f"x,y,z -> {', '.join(images)}: {v.outcome}"
    if v.witness:
        u, w = v.witness
        line += f"  ({EX1.format_sword(u)} = {EX1.format_sword(w)} but the images differ)"
    print(line)

v = iso(FREE2, CODE2)
print("\n<a,b> vs <a,ab>:", v.outcome, {format_word(x): format_word(y) for x, y in v.bijection})
v = iso(EX1, FREE3)
print("<a,b,ABab> vs <a,b,c>:", v.outcome, "-", v.reason)

"""Which submonoids are graded, and what goes wrong when one is not.

Run: python demos/01_gradedness.py
"""

from submon.fixtures import EX1, EX2, EX3, EX4
from submon.gradedness import factors, is_graded, zeta
from submon.preimage import enumerate_words, is_finite, preimage_grammar
from submon.rational import elements
from submon.words import format_word


def show(spec):
    v = is_graded(spec)
    gens = ", ".join(format_word(g) for g in spec.generators)
    print(f"M = <{gens}> in F{spec.rank}")
    print(f"  graded: {v.graded}   (checked every element of length <= {v.cutoff_used})")
    if not v.graded:
        w = v.witness
        gr = preimage_grammar(spec, w)
        print(f"  {format_word(w)} has infinitely many spellings; the first few:")
        for s in enumerate_words(gr, 6):
            print("    " + spec.format_sword(s))
    print()


for spec in (EX1, EX2, EX3, EX4):
    show(spec)

# In a graded monoid every element has a longest spelling, and zeta(n)
# tracks the worst case over elements of length <= n.
print("zeta for <a, b, ABab>:", [zeta(EX1, n) for n in range(7)])

gr = preimage_grammar(EX1, "ab")
print("spellings of ab:", [EX1.format_sword(w) for w in enumerate_words(gr, 10)], "finite:", is_finite(gr))

# Finitely many factors sit above each element of a graded monoid.
r, finite = factors(EX1, "ab")
print("factors of ab:", [format_word(w) or "1" for w in elements(r, 6)], "finite:", finite)
r, finite = factors(EX2, "A")
print("factors of A in the non-graded example, finite:", finite,
      "(includes", ", ".join(format_word(w) for w in elements(r, 4) if w and w[0] == 2), "...)")

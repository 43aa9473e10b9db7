"""Lexicographic normal forms from a rational transducer.

Run: python demos/04_normal_forms.py
"""

from submon.fixtures import EX1
from submon.normal_forms import description_for, normalize
from submon.submonoid import swords

sw = EX1.parse_sword
t = description_for(EX1, None, 6)
print(f"normal-form automaton: {t.B.n} states; relation automaton: {t.relation.nfa.n} states")

for text in ["[b][a][z]", "[b][a][z][b]", "[a][b][a][z]", "[z][z]"]:
    u = sw(text)
    print(f"  {text:16s} -> {EX1.format_sword(t.transduce(u))}")

# Another order gives another cross-section.
order = (2, 1, 0)  # z < b < a
print("with z < b < a:", EX1.format_sword(normalize(EX1, sw("[a][b]"), order=order, cutoff=6)))

words = swords(3, 4)
nf = sum(t.in_normal_form(w) for w in words)
print(f"{nf} of {len(words)} S-words of length <= 4 are normal forms")

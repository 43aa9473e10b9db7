"""Small named submonoids used by the demos and the test-suite.

EX1..EX4 are the four worked examples: a graded monoid with the relation
yxz = xy, a non-graded one in which a^-1 has infinitely many spellings,
one whose generator a is not irreducible, and a finitely generated
submonoid of a free monoid with infinitely many minimal relations.
"""

from .submonoid import SubmonoidSpec

EX1 = SubmonoidSpec(2, ("a", "b", "ABab"), "ex1", (("x", 0), ("y", 1), ("z", 2)))
EX2 = SubmonoidSpec(3, ("ba", "c", "CA", "BA"), "ex2")
EX3 = SubmonoidSpec(2, ("a", "bA", "Ba"), "ex3")
EX4 = SubmonoidSpec(4, ("ab", "ad", "ba", "c", "ca", "d"), "ex4")
FREE2 = SubmonoidSpec(2, ("a", "b"), "free2")
CODE2 = SubmonoidSpec(2, ("a", "ab"), "code2")
FREE3 = SubmonoidSpec(3, ("a", "b", "c"), "free3")
CYCLIC = SubmonoidSpec(1, ("a",), "cyclic")

ALL = (EX1, EX2, EX3, EX4, FREE2, CODE2, FREE3, CYCLIC)
GRADED = (EX1, EX4, FREE2, CODE2, FREE3, CYCLIC)
NOT_GRADED = (EX2, EX3)

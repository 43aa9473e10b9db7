from hypothesis import given, settings, strategies as st

from submon.preimage import is_empty, preimage_grammar
from submon.rational import member, monoid
from submon.relation import accepted_pairs, build_gamma, wp_exact
from submon.submonoid import SubmonoidSpec
from submon.words import format_word, reduce

import oracles

letters = st.sampled_from([1, -1, 2, -2])
gen_word = st.lists(letters, min_size=1, max_size=2).map(lambda w: reduce(w)).filter(bool)


@st.composite
def specs(draw):
    gens = draw(st.lists(gen_word, min_size=1, max_size=3, unique=True))
    return SubmonoidSpec(2, tuple(gens))


@given(specs(), st.lists(letters, max_size=3).map(reduce))
def test_benois_and_grammar_agree(spec, g):
    assert member(g, monoid(spec)) == (not is_empty(preimage_grammar(spec, g)))


@given(specs(), st.lists(letters, max_size=3).map(reduce))
def test_membership_witnessed_by_short_products(spec, g):
    gens = [format_word(s) for s in spec.generators]
    if oracles.member(gens, format_word(g), 6):
        assert member(g, monoid(spec))


@settings(max_examples=30)
@given(specs(), st.integers(0, 4))
def test_gamma_accepts_only_relations(spec, c):
    for u, v in accepted_pairs(build_gamma(spec, c), 3):
        assert wp_exact(spec, u, v)

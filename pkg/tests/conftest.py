import random

import pytest
from hypothesis import settings

from submon.fixtures import ALL, GRADED
from submon.submonoid import SubmonoidSpec
from submon.words import format_word, reduce

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def gens_of(spec):
    return [format_word(g) for g in spec.generators]


def random_spec(rng, max_rank=2, max_gens=3, max_len=2):
    rank = rng.randint(1, max_rank)
    letters = [x for i in range(1, rank + 1) for x in (i, -i)]
    want = rng.randint(1, max_gens)
    gens = []
    while len(gens) < want:
        w = reduce(rng.choice(letters) for _ in range(rng.randint(1, max_len)))
        if w and w not in gens:
            gens.append(w)
    return SubmonoidSpec(rank, tuple(gens))


def random_specs(n, seed, **kw):
    rng = random.Random(seed)
    return [random_spec(rng, **kw) for _ in range(n)]


@pytest.fixture(params=GRADED, ids=lambda s: s.name)
def graded_spec(request):
    return request.param


@pytest.fixture(params=ALL, ids=lambda s: s.name)
def any_spec(request):
    return request.param

"""Gradedness and factorization statistics.

M is graded when every element has finitely many spellings over S.  In a
free group the check only has to look at elements of length at most L+1
(L = longest generator): Cayley graphs of free groups are trees, so the
thinness constant is 0.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache

from .config import DEFAULT_BUDGET, Budget
from .errors import InfinitePreimage, NotGraded, NotInMonoid, ResourceLimit
from .preimage import enumerate_words, is_finite, longest_word, preimage_grammar
from .rational import RatSetAutomaton, concat, finite_set, intersect, inverse, is_finite_set, member, monoid, walk
from .submonoid import SubmonoidSpec, SWord
from .words import Word, as_word, ball, ball_size, format_word

THINNESS = 0  # geodesic polygons in a tree are 0-thin


@dataclass(frozen=True)
class GradedVerdict:
    graded: bool
    cutoff_used: int
    witness: Word | None = None

    def to_json(self) -> dict:
        out = {"graded": self.graded, "cutoff": self.cutoff_used}
        if self.witness is not None:
            out["witness"] = format_word(self.witness)
        return out


def graded_cutoff(spec: SubmonoidSpec) -> int:
    return 2 * THINNESS + spec.max_length + 1


@lru_cache(maxsize=256)
def is_graded(spec: SubmonoidSpec, budget: Budget = DEFAULT_BUDGET) -> GradedVerdict:
    """Decide gradedness; the witness is the shortlex-least element of the
    cutoff ball with infinitely many spellings."""
    c = graded_cutoff(spec)
    if ball_size(spec.rank, c) > budget.ball:
        raise ResourceLimit(f"ball of radius {c} exceeds {budget.ball} elements", budget=budget.ball, argument=c)
    m = monoid(spec)
    for g in ball(spec.rank, c):
        if not member(g, m):
            continue
        if not is_finite(preimage_grammar(spec, g, budget)):
            return GradedVerdict(False, c, g)
    return GradedVerdict(True, c)


def _require_member(spec, u) -> Word:
    u = as_word(u, spec.rank)
    if not member(u, monoid(spec)):
        raise NotInMonoid(f"{format_word(u) or '1'} is not in {spec}")
    return u


def xi_max(spec: SubmonoidSpec, u, budget: Budget = DEFAULT_BUDGET) -> int:
    """Length of the longest S-word spelling u (0 for the identity)."""
    u = _require_member(spec, u)
    gr = preimage_grammar(spec, u, budget)
    if not is_finite(gr):
        raise InfinitePreimage(f"{format_word(u) or '1'} has infinitely many spellings")
    return longest_word(gr)


class _ZetaCache:
    """Per-spec running maxima of Ξ over spheres, extended on demand.

    Fill is idempotent, so a lock around each extension is all the
    coordination concurrent callers need.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self._spheres: dict[SubmonoidSpec, list[int]] = {}

    def get(self, spec, n, budget) -> int:
        with self._lock:
            spheres = self._spheres.get(spec, [])
            if len(spheres) <= n:
                spheres = _sphere_maxima(spec, n, budget)
                self._spheres[spec] = spheres
            return max(spheres[: n + 1])

    def clear(self):
        with self._lock:
            self._spheres.clear()


def _sphere_maxima(spec, n, budget) -> list[int]:
    best = [0] * (n + 1)
    for u in walk(monoid(spec), n, budget.ball):
        best[len(u)] = max(best[len(u)], xi_max(spec, u, budget))
    return best


_zeta_cache = _ZetaCache()


def zeta(spec: SubmonoidSpec, n: int, budget: Budget = DEFAULT_BUDGET) -> int:
    """max Ξ(u) over u in M with |u| <= n."""
    if n < 0:
        raise ValueError("zeta is defined for n >= 0")
    verdict = is_graded(spec, budget)
    if not verdict.graded:
        raise NotGraded(f"{spec} is not graded", witness=verdict.witness)
    return _zeta_cache.get(spec, n, budget)


def nontrivial_factorizations(spec: SubmonoidSpec, u, max_len: int, budget: Budget = DEFAULT_BUDGET) -> list[SWord]:
    """All S-words of length <= max_len spelling u, shortlex."""
    u = as_word(u, spec.rank)
    return enumerate_words(preimage_grammar(spec, u, budget), max_len, budget.ball)


def factors(spec: SubmonoidSpec, u, budget: Budget = DEFAULT_BUDGET) -> tuple[RatSetAutomaton, bool]:
    """The factors of u, M ∩ M^-1 u M^-1, and whether there are finitely many."""
    u = _require_member(spec, u)
    m = monoid(spec)
    mi = inverse(m)
    around = concat(concat(mi, finite_set([u], spec.rank), budget), mi, budget)
    out = intersect(m, around, budget)
    return out, is_finite_set(out)

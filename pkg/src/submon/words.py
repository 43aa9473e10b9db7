"""Free-group arithmetic on reduced words.

A letter is a nonzero int: ``+i`` is the i-th generator of the ambient free
group and ``-i`` its formal inverse.  A word is a tuple of letters; the empty
tuple is the identity.  In text, ``a``..``z`` are generators 1..26 and
``A``..``Z`` their inverses.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import LetterOutOfRange, ParseError, RankMismatch, ResourceLimit

MAX_RANK = 26

Word = tuple  # tuple[int, ...], kept reduced by every public function


def letter_char(x: int) -> str:
    c = chr(ord("a") + abs(x) - 1)
    return c if x > 0 else c.upper()


def char_letter(c: str) -> int:
    if "a" <= c <= "z":
        return ord(c) - ord("a") + 1
    if "A" <= c <= "Z":
        return -(ord(c) - ord("A") + 1)
    raise ParseError(f"not a letter: {c!r}")


def letter_key(x: int) -> int:
    """Sort key giving the letter order a < A < b < B < ..."""
    return 2 * abs(x) + (x < 0)


def alphabet(rank: int) -> list[int]:
    """All 2*rank letters in canonical order."""
    return sorted([x for i in range(1, rank + 1) for x in (i, -i)], key=letter_key)


def check_rank(rank: int) -> int:
    if not isinstance(rank, int) or not 1 <= rank <= MAX_RANK:
        raise ValueError(f"rank must be an integer in 1..{MAX_RANK}, got {rank!r}")
    return rank


def reduce(letters: Iterable[int], rank: int | None = None) -> Word:
    """Freely reduce a letter sequence."""
    out: list[int] = []
    for x in letters:
        if x == 0 or (rank is not None and abs(x) > rank):
            raise LetterOutOfRange(f"letter {x} outside rank {rank}")
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def parse_word(text: str, rank: int | None = None) -> Word:
    text = text.strip()
    if text in ("", "1", "e"):
        return ()
    return reduce((char_letter(c) for c in text), rank)


def format_word(w: Sequence[int]) -> str:
    return "".join(letter_char(x) for x in w)


def as_word(w, rank: int | None = None) -> Word:
    """Accept a string or a letter sequence, return its reduced form."""
    if isinstance(w, str):
        return parse_word(w, rank)
    if isinstance(w, FreeWord):
        if rank is not None and w.rank > rank:
            raise RankMismatch(f"word of rank {w.rank} used in rank {rank}")
        return w.letters
    return reduce(w, rank)


def mul(*words: Sequence[int]) -> Word:
    out: list[int] = []
    for w in words:
        for x in w:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
    return tuple(out)


def inv(w: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(w))


def conj_step(left: Sequence[int], w: Sequence[int], right: Sequence[int]) -> Word:
    """Reduced form of ``left^-1 * w * right``."""
    return mul(inv(left), w, right)


def dist(u: Sequence[int], v: Sequence[int]) -> int:
    """Cayley-graph distance; in a tree it is |u| + |v| - 2 * |common prefix|."""
    k = 0
    for x, y in zip(u, v):
        if x != y:
            break
        k += 1
    return len(u) + len(v) - 2 * k


def ball_size(rank: int, radius: int) -> int:
    """Number of reduced words of length <= radius: 1 + sum 2r(2r-1)^(k-1)."""
    if radius < 0:
        return 0
    total = 1
    for k in range(1, radius + 1):
        total += 2 * rank * (2 * rank - 1) ** (k - 1)
    return total


def spheres(rank: int, radius: int) -> Iterator[list[Word]]:
    """Yield the spheres of radius 0..radius, each in lexicographic letter order."""
    letters = alphabet(rank)
    level: list[Word] = [()]
    yield level
    for _ in range(radius):
        nxt = []
        for w in level:
            last = w[-1] if w else 0
            for x in letters:
                if x != -last:
                    nxt.append(w + (x,))
        level = nxt
        yield level


def ball(rank: int, radius: int, budget: int | None = None) -> list[Word]:
    """All reduced words of length <= radius, in shortlex order.

    Words are only ever extended by a letter other than the inverse of their
    last letter, so every element is produced exactly once.
    """
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    size = ball_size(rank, radius)
    if budget is not None and size > budget:
        raise ResourceLimit(
            f"ball of radius {radius} in rank {rank} has {size} elements (budget {budget})",
            budget=budget,
            argument=radius,
        )
    out: list[Word] = []
    for level in spheres(rank, radius):
        out.extend(level)
    return out


def shortlex_key(w: Sequence[int]):
    return (len(w), tuple(letter_key(x) for x in w))


@dataclass(frozen=True)
class FreeWord:
    """A reduced word tagged with the rank of its ambient free group."""

    rank: int
    letters: Word

    def __post_init__(self):
        check_rank(self.rank)
        object.__setattr__(self, "letters", reduce(self.letters, self.rank))

    @classmethod
    def parse(cls, text: str, rank: int) -> "FreeWord":
        return cls(rank, parse_word(text, rank))

    def _same(self, other: "FreeWord"):
        if self.rank != other.rank:
            raise RankMismatch(f"rank {self.rank} vs rank {other.rank}")

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        self._same(other)
        return FreeWord(self.rank, mul(self.letters, other.letters))

    def inverse(self) -> "FreeWord":
        return FreeWord(self.rank, inv(self.letters))

    __invert__ = inverse

    def dist(self, other: "FreeWord") -> int:
        self._same(other)
        return dist(self.letters, other.letters)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return format_word(self.letters)

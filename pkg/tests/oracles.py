"""Brute-force reference implementations, independent of the package.

Everything here works on plain strings (``a``/``A`` letters) with its own
free reduction, so a bug in the library's word arithmetic cannot hide
itself in the oracle.
"""

from itertools import product


def free_reduce(s):
    out = []
    for c in s:
        if out and out[-1] != c and out[-1].lower() == c.lower():
            out.pop()
        else:
            out.append(c)
    return "".join(out)


def spell(gens, sword):
    return free_reduce("".join(gens[i] for i in sword))


def all_swords(k, max_len):
    for n in range(max_len + 1):
        yield from product(range(k), repeat=n)


def spellings(gens, max_len):
    """element -> list of S-words of length <= max_len, shortlex within."""
    out = {}
    for w in all_swords(len(gens), max_len):
        out.setdefault(spell(gens, w), []).append(w)
    return out


def preimage(gens, g, max_len):
    g = free_reduce(g)
    return [w for w in all_swords(len(gens), max_len) if spell(gens, w) == g]


def member(gens, g, depth):
    """Semi-decision: is g a product of at most ``depth`` generators?"""
    g = free_reduce(g)
    level = {""}
    seen = {""}
    if g == "":
        return True
    for _ in range(depth):
        nxt = set()
        for x in level:
            for s in gens:
                y = free_reduce(x + s)
                if y == g:
                    return True
                if y not in seen:
                    seen.add(y)
                    nxt.add(y)
        level = nxt
    return False


def wp_pairs(gens, n):
    classes = spellings(gens, n)
    return {(u, v) for ws in classes.values() for u in ws for v in ws}


def max_spellings(gens, max_len):
    """Largest number of spellings of one element among S-words of length
    <= max_len (counted per element by dynamic programming)."""
    counts = {"": 1}
    total = {"": 1}
    for _ in range(max_len):
        nxt = {}
        for x, c in counts.items():
            for s in gens:
                y = free_reduce(x + s)
                nxt[y] = nxt.get(y, 0) + c
        for y, c in nxt.items():
            total[y] = total.get(y, 0) + c
        counts = nxt
    return max(total.values())


def pumping_says_graded(gens, max_len=12, n=50):
    return max_spellings(gens, max_len) <= n


def spelling_counts(gens, targets, max_len):
    """Number of S-words of length <= max_len spelling each target."""
    targets = set(targets)
    counts = {"": 1}
    total = dict.fromkeys(targets, 0)
    if "" in targets:
        total[""] = 1
    for _ in range(max_len):
        nxt = {}
        for x, c in counts.items():
            for s in gens:
                y = free_reduce(x + s)
                nxt[y] = nxt.get(y, 0) + c
        for y in targets & nxt.keys():
            total[y] += nxt[y]
        counts = nxt
    return total


def growth_says_graded(gens, rank, h1, h2):
    """Graded iff no element of length <= L+1 gains spellings between the
    horizons h1 < h2 (needs h1 >= the longest spelling of those elements
    when the monoid is graded).  Returns (verdict, first growing element)."""
    radius = max(len(g) for g in gens) + 1
    targets = sorted(ball(rank, radius), key=lambda w: (len(w), w))
    c1 = spelling_counts(gens, targets, h1)
    c2 = spelling_counts(gens, targets, h2)
    for g in targets:
        if c2[g] > c1[g]:
            return False, g
    return True, None


def lexmin(gens, u, bound, order=None):
    """Dictionary-least spelling of spell(u) among S-words of length <= bound."""
    rank = {g: i for i, g in enumerate(order or range(len(gens)))}
    target = spell(gens, u)
    cands = [w for w in all_swords(len(gens), bound) if spell(gens, w) == target]
    return min(cands, key=lambda w: [rank[i] for i in w])


def ball(rank, radius):
    letters = [chr(ord("a") + i) for i in range(rank)]
    letters += [c.upper() for c in letters]
    out = {""}
    level = {""}
    for _ in range(radius):
        level = {free_reduce(w + c) for w in level for c in letters} - out
        out |= level
    return out


def dist(u, v):
    inv_u = "".join(c.swapcase() for c in reversed(u))
    return len(free_reduce(inv_u + v))

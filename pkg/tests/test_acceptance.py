"""One test per acceptance criterion; each prints a single PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -v`` or ``python tests/test_acceptance.py``.
"""

import random
import sys
import time
from contextlib import contextmanager
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from submon.decisions import HomSpec, hom_extends, irreducibles, iso
from submon.fixtures import ALL, CODE2, EX1, EX2, EX3, EX4, FREE2, FREE3, GRADED
from submon.geometry import constants, hausdorff_check, verify_quasigeodesic
from submon.gradedness import is_graded
from submon.normal_forms import normalize
from submon.preimage import enumerate_words, is_empty, is_finite, preimage_grammar
from submon.rational import member, monoid
from submon.relation import accepted_pairs, build_certified, build_gamma, certified_cutoff, wp_exact, wp_pairs_exact
from submon.submonoid import SubmonoidSpec, swords
from submon.words import ball, format_word

import oracles
from conftest import gens_of, random_spec

_capsys = None


@pytest.fixture(autouse=True)
def _grab_capsys(capsys):
    global _capsys
    _capsys = capsys
    yield
    _capsys = None


@contextmanager
def criterion(n, limit):
    """Collect failure notes, then print one line and assert."""
    notes = []
    t0 = time.perf_counter()
    try:
        yield notes
    except Exception as exc:  # an unexpected error is a failure of the criterion
        notes.append(f"{type(exc).__name__}: {exc}")
    dt = time.perf_counter() - t0
    if dt > limit:
        notes.append(f"took {dt:.1f}s > {limit}s")
    line = f"criterion {n:2d}: {'PASS' if not notes else 'FAIL'} ({dt:.1f}s)"
    if notes:
        line += " | " + "; ".join(notes)
    if _capsys is not None:
        with _capsys.disabled():
            print("\n" + line)
    else:
        print(line)
    assert not notes, line


def random_graded_suite(n=20, seed=2024):
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        s = random_spec(rng, max_rank=2, max_gens=3, max_len=2)
        if s not in out and is_graded(s).graded:
            out.append(s)
    return out


def suite():
    return list(ALL) + random_graded_suite()


def test_criterion_01_gradedness():
    with criterion(1, 60) as notes:
        for spec, want, witness in [(EX1, True, None), (EX2, False, "A"), (EX3, False, None), (EX4, True, None)]:
            t = time.perf_counter()
            v = is_graded(spec)
            if v.graded != want:
                notes.append(f"{spec.name}: graded={v.graded}")
            if witness and (v.witness is None or format_word(v.witness) != witness):
                notes.append(f"{spec.name}: witness {v.witness}")
            if time.perf_counter() - t > 60:
                notes.append(f"{spec.name} slow")


def test_criterion_02_preimage():
    with criterion(2, 30) as notes:
        gr = preimage_grammar(EX2, "A")
        if is_finite(gr):
            notes.append("α^-1(A) reported finite")
        got = enumerate_words(gr, 6)
        # (ba)^k c (CA) (BA)^k for k = 0 and 1
        want = [EX2.parse_sword("[ba]" * k + "[c][CA]" + "[BA]" * k) for k in range(2)]
        if got != want:
            notes.append("enumeration at 6 is " + ", ".join(EX2.format_sword(w) for w in got)
                         + "; expected exactly " + ", ".join(EX2.format_sword(w) for w in want))
        if enumerate_words(preimage_grammar(EX1, ()), 10) != [()]:
            notes.append("α^-1(1) is not {ε} for the first example")


def test_criterion_03_gamma_soundness():
    with criterion(3, 300) as notes:
        bad = 0
        for spec in suite():
            for c in sorted({1, spec.max_length + 2, 6}):
                for u, v in accepted_pairs(build_gamma(spec, c), 4):
                    if not wp_exact(spec, u, v):
                        bad += 1
        if bad:
            notes.append(f"{bad} accepted pairs are not relations")


def test_criterion_04_gamma_completeness():
    with criterion(4, 600) as notes:
        for spec in suite():
            n = 4
            want = wp_pairs_exact(spec, n)
            # [DERIVED] cross-check the package's brute force with the string oracle
            if len(want) != len(oracles.wp_pairs(gens_of(spec), n)):
                notes.append(f"{spec}: brute-force relation size mismatch")
            if not any(accepted_pairs(build_gamma(spec, c, trim=True), n) == want for c in range(9)):
                notes.append(f"{spec}: no cutoff <= 8 is complete at length {n}")


def test_criterion_05_certified_cyclic():
    with criterion(5, 60) as notes:
        a = SubmonoidSpec(1, ("a",))
        c = certified_cutoff(a)
        if c != 426:
            notes.append(f"certified_cutoff = {c} (C_wp = {constants(a).C_wp}), expected 426")
        g = build_certified(a)
        if accepted_pairs(g, 5) != wp_pairs_exact(a, 5):
            notes.append("accepted pairs at length 5 differ from the word problem")


def test_criterion_06_quasigeodesic():
    with criterion(6, 120) as notes:
        c = constants(EX1, include_cutoff=False)
        rng = random.Random(6)
        sample = [tuple(rng.randrange(EX1.k) for _ in range(rng.randint(0, 30))) for _ in range(10_000)]
        bad = verify_quasigeodesic(EX1, c, sample)
        if bad:
            notes.append(f"{len(bad)} violations, first {bad[0]}")
        worst = max(hausdorff_check(EX1, c, w) for w in sample)
        if worst > c.R:
            notes.append(f"hausdorff {worst} > R = {c.R}")


def test_criterion_07_normal_forms():
    with criterion(7, 120) as notes:
        cutoff = EX1.max_length + 2
        sw = EX1.parse_sword
        if normalize(EX1, sw("[b][a][z]"), cutoff=cutoff) != sw("[a][b]"):
            notes.append("β([b][a][z]) != [a][b]")
        bad = 0
        for u in swords(EX1.k, 5):
            b = normalize(EX1, u, cutoff=cutoff)
            if b != normalize(EX1, u, mode="oracle"):
                bad += 1
            elif normalize(EX1, b, cutoff=cutoff) != b or not wp_exact(EX1, u, b):
                bad += 1
        if bad:
            notes.append(f"{bad} words disagree or break idempotence / αβ = α")


def test_criterion_08_irreducibles():
    with criterion(8, 30) as notes:
        if set(irreducibles(EX2)) != set(EX2.generators):
            notes.append("second example: not all generators irreducible")
        irr3 = {format_word(w) for w in irreducibles(EX3)}
        if irr3 != {"bA", "Ba"}:
            notes.append(f"third example irreducibles {sorted(irr3)}")


def test_criterion_09_hom():
    with criterion(9, 60) as notes:
        v = hom_extends(HomSpec(EX1, 2, ("a", "b", "ABab")))
        if not v.extends:
            notes.append(f"commutator map rejected with {v.witness}")
        for images in [("a", "b", "b"), ("a", "a", "a")]:
            h = HomSpec(EX1, 2, images)
            r = hom_extends(h)
            if r.outcome != "no":
                notes.append(f"{images} not rejected")
                continue
            u, w = r.witness
            if not wp_exact(EX1, u, w) or h.image(u) == h.image(w):
                notes.append(f"{images}: witness does not verify")


def test_criterion_10_iso():
    with criterion(10, 120) as notes:
        if not iso(FREE2, CODE2).isomorphic:
            notes.append("free rank 2 vs {a, ab}")
        if iso(EX1, FREE3).outcome != "no":
            notes.append("first example vs free rank 3")
        for spec in GRADED:
            if not iso(spec, spec).isomorphic:
                notes.append(f"{spec.name} not isomorphic to itself")


def test_criterion_11_engine_cross_validation():
    with criterion(11, 300) as notes:
        bad = 0
        for spec in suite():
            m = monoid(spec)
            for g in ball(spec.rank, 3):
                if member(g, m) == is_empty(preimage_grammar(spec, g)):
                    bad += 1
        if bad:
            notes.append(f"{bad} disagreements")


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)

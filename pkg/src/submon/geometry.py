"""Quasi-geodesic constants of a graded submonoid and empirical checks.

Paths of S-words are represented by their vertex skeleton: the partial
products w_0 = 1, w_1, ..., w_n.  All constants are exact rationals.

The stability bound R is taken to be ε(λ²+1).  In a tree, a continuous
(λ, ε)-quasi-geodesic must cross the projection onto the geodesic of any
of its points, and must do so twice if the point strays, which caps the
stray distance by λ(λε) + ε; conversely a continuous path between two
points covers the geodesic between them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Iterable, Sequence

from .config import DEFAULT_BUDGET, Budget
from .errors import NotGraded
from .gradedness import THINNESS, is_graded, zeta
from .submonoid import SubmonoidSpec
from .words import Word, dist, mul


@dataclass(frozen=True)
class ConstantsRecord:
    K: int
    L: int
    L_prime: int
    lam: int
    epsilon: Fraction
    R: Fraction
    R_prime: Fraction
    C_grd: int
    C_wp: Fraction | None = None  # None when the cutoff was not requested

    @property
    def cutoff(self) -> int | None:
        """The integer radius used for the certified relation automaton."""
        return None if self.C_wp is None else math.ceil(self.C_wp)

    def to_json(self) -> dict:
        out = {}
        for f in fields(self):
            v = getattr(self, f.name)
            if isinstance(v, Fraction):
                v = {"num": v.numerator, "den": v.denominator}
            out["lambda" if f.name == "lam" else f.name] = v
        out["cutoff"] = self.cutoff
        return out

    @classmethod
    def from_json(cls, data: dict) -> "ConstantsRecord":
        def val(v):
            return Fraction(v["num"], v["den"]) if isinstance(v, dict) else v

        kw = {f.name: val(data["lambda" if f.name == "lam" else f.name]) for f in fields(cls) if f.name != "C_wp"}
        kw["C_wp"] = val(data.get("C_wp"))
        return cls(**kw)

    def check_formulas(self, zeta_fn=None) -> list[str]:
        """Names of fields that do not match their defining formula.  With
        ``zeta_fn`` the ζ-dependent fields are recomputed too."""
        bad = []
        if self.C_grd != 2 * self.K + self.L + 1:
            bad.append("C_grd")
        if self.lam != max(self.L, self.L_prime):
            bad.append("lambda")
        if self.epsilon != max(Fraction(3 * self.L), 2 * self.L + Fraction(1, self.L_prime)):
            bad.append("epsilon")
        if self.R != self.epsilon * (self.lam**2 + 1):
            bad.append("R")
        if self.R_prime != 2 * self.R + Fraction(self.L, 2):
            bad.append("R_prime")
        if zeta_fn is not None:
            if self.L_prime != zeta_fn(self.C_grd):
                bad.append("L_prime")
            if self.C_wp is not None and self.C_wp != _c_wp(self.L, self.R_prime, zeta_fn):
                bad.append("C_wp")
        return bad


def _c_wp(L, Rp, z) -> Fraction:
    inner = z(math.floor(2 * Rp + L))
    return Rp + L * z(math.floor(L * inner + 2 * Rp)) + L * inner


def constants(spec: SubmonoidSpec, budget: Budget = DEFAULT_BUDGET, include_cutoff: bool = True) -> ConstantsRecord:
    """All constants for a graded spec.

    ζ only takes integer values on integer distances, so it is evaluated at
    the floor of a rational argument.  ``include_cutoff=False`` skips C_wp,
    whose ζ arguments are far larger than the others.
    """
    verdict = is_graded(spec, budget)
    if not verdict.graded:
        raise NotGraded(f"{spec} is not graded", witness=verdict.witness)
    K = THINNESS
    L = spec.max_length
    C_grd = 2 * K + L + 1

    def z(n):
        return zeta(spec, n, budget)

    Lp = z(C_grd)
    lam = max(L, Lp)
    eps = max(Fraction(3 * L), 2 * L + Fraction(1, Lp))
    R = eps * (lam**2 + 1)
    Rp = 2 * R + Fraction(L, 2)
    C_wp = _c_wp(L, Rp, z) if include_cutoff else None
    return ConstantsRecord(K, L, Lp, lam, eps, R, Rp, C_grd, C_wp)


@dataclass(frozen=True)
class PathSample:
    word: tuple
    vertices: tuple

    @classmethod
    def of(cls, spec: SubmonoidSpec, sword: Sequence[int]) -> "PathSample":
        verts = [()]
        for i in sword:
            verts.append(mul(verts[-1], spec.generators[i]))
        return cls(tuple(sword), tuple(verts))


@dataclass(frozen=True)
class Violation:
    word: tuple
    i: int
    j: int
    distance: int
    kind: str  # "upper" (d > L|i-j|) or "lower" (|i-j| > L' d)


def verify_quasigeodesic(spec: SubmonoidSpec, c: ConstantsRecord, sample: Iterable[Sequence[int]]) -> list[Violation]:
    """Check d(w_i, w_j) <= L|i-j| and |i-j| <= L' d(w_i, w_j) for all i < j."""
    out = []
    for sword in sample:
        verts = PathSample.of(spec, sword).vertices
        n = len(verts)
        for i in range(n):
            wi = verts[i]
            for j in range(i + 1, n):
                d = dist(wi, verts[j])
                if d > c.L * (j - i):
                    out.append(Violation(tuple(sword), i, j, d, "upper"))
                if j - i > c.L_prime * d:
                    out.append(Violation(tuple(sword), i, j, d, "lower"))
    return out


def _distance_to_geodesic(x: Word, g: Word) -> int:
    # the geodesic [1, g] in the tree is the set of prefixes of g
    k = 0
    for a, b in zip(x, g):
        if a != b:
            break
        k += 1
    return len(x) - k


def hausdorff_check(spec: SubmonoidSpec, c: ConstantsRecord | None, sword: Sequence[int]) -> int:
    """Largest distance from a path vertex to the geodesic [1, w_n].

    Distance to a subtree is convex along geodesics, so the vertices realize
    the maximum over the whole continuous path.  ``c`` is accepted for
    symmetry with ``verify_quasigeodesic``; compare the result against c.R.
    """
    verts = PathSample.of(spec, sword).vertices
    end = verts[-1]
    return max(_distance_to_geodesic(w, end) for w in verts)

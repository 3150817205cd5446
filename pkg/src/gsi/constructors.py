"""Builders for valid good semigroups and good semigroup ideals.

Every constructor normalizes its data (clip to the conductor, shrink the
conductor to the least one consistent with the stored elements) and runs full
axiom validation before returning.  All constructors are deterministic given
their inputs plus seed.
"""
from __future__ import annotations

import math
import random

from .errors import GenerationError, ValidationError
from .ideal import SmallRep, members, validate
from .lattice import Point, box_points, leq, meet, ones, vadd, zero


def _shrink_conductor(m: Point, c: Point, pts: set[Point]) -> tuple[Point, frozenset[Point]]:
    """Replace c by the least stored element that already conducts the data.

    A candidate must head a full sub-box [gamma, c] of stored points, and
    re-clipping to it must leave membership unchanged on [m, c + e]; when no
    candidate qualifies the given c is kept and validation will judge.
    """
    cands = []
    for g in sorted(pts):
        if all(q in pts for q in box_points(g, c)):
            cands.append(g)
    if not cands:
        return c, frozenset(pts)
    low = cands[0]
    for g in cands[1:]:
        low = meet(low, g)
    if low not in cands:
        return c, frozenset(pts)
    small = frozenset(meet(p, low) for p in pts)
    hi = vadd(c, ones(len(c)))
    for q in box_points(m, hi):
        if (meet(q, c) in pts) != (meet(q, low) in small):
            return c, frozenset(pts)
    return low, small


def from_small_elements(r: int, m: Point, c: Point, elems) -> SmallRep:
    """Normalize raw small-element data and validate it.

    Points are clipped by meet with the conductor; the conductor is shrunk to
    the least one the data supports.  Raises ValidationError carrying the
    failing axiom otherwise.
    """
    pts = {meet(tuple(p), c) for p in elems}
    pts.add(meet(m, c))
    for p in pts:
        if not leq(m, p):
            rep = SmallRep(r, m, c, frozenset(pts | {m, c}))
            report = validate(rep)
            report.passed = False
            report.counterexamples.insert(
                0, {"axiom": "structural", "reason": "element below declared min",
                    "point": list(p)})
            raise ValidationError(report)
    pts.add(c)
    c2, small = _shrink_conductor(m, c, pts)
    rep = SmallRep(r, m, c2, small)
    report = validate(rep)
    if not report.passed:
        raise ValidationError(report)
    return rep


def numerical(generators: list[int]) -> SmallRep:
    """The numerical semigroup generated by the given positive integers.

    Small elements come from a sieve up to the conductor; requires gcd 1,
    otherwise no conductor exists.
    """
    gens = sorted(set(int(g) for g in generators))
    if not gens or gens[0] < 1:
        raise ValueError("generators must be positive integers")
    if math.gcd(*gens) != 1:
        raise ValueError(f"gcd of generators {gens} is not 1; no conductor exists")
    step = gens[0]
    bound = max(gens) * step + step + 1
    while True:
        reach = [False] * (bound + 1)
        reach[0] = True
        for n in range(1, bound + 1):
            for g in gens:
                if g <= n and reach[n - g]:
                    reach[n] = True
                    break
        run_start = None
        run = 0
        for n in range(bound + 1):
            run = run + 1 if reach[n] else 0
            if run >= step:
                run_start = n - step + 1
                break
        if run_start is not None:
            gaps = [n for n in range(run_start) if not reach[n]]
            cond = (gaps[-1] + 1) if gaps else 0
            small = frozenset((n,) for n in range(cond + 1) if reach[n])
            rep = SmallRep(1, (0,), (cond,), small)
            report = validate(rep, semigroup=True)
            if not report.passed:
                raise ValidationError(report)
            return rep
        bound *= 2


def node(r: int) -> SmallRep:
    """{0} union (e + N^r): the transversal-lines fixture.

    For r = 1 this is N itself and normalization shrinks the conductor to 0.
    """
    if r < 1:
        raise ValueError("dimension must be >= 1")
    e = ones(r)
    rep = from_small_elements(r, zero(r), e, {zero(r), e})
    report = validate(rep, semigroup=True)
    if not report.passed:
        raise ValidationError(report)
    return rep


def product(A: SmallRep, B: SmallRep) -> SmallRep:
    """Concatenation of coordinates; axioms verified post hoc, not assumed."""
    r = A.r + B.r
    small = frozenset(a + b for a in A.small for b in B.small)
    rep = SmallRep(r, A.m + B.m, A.c + B.c, small)
    report = validate(rep)
    if not report.passed:
        raise ValidationError(report)
    return rep


def _closure_fixpoint(r: int, m: Point, c: Point, pts: set[Point],
                      S: SmallRep | None) -> set[Point]:
    """Grow pts inside [m, c] until meet-closed, E2-repaired, and compatible
    with S.  Terminates: additions are monotone within a finite box."""
    def rule(p: Point) -> bool:
        return meet(p, c) in pts

    if S is not None:
        # c <= m + c(S) must hold, so the top sub-box is forced in.
        base = meet(vadd(m, S.c), c)
        pts.update(box_points(base, c))

    changed = True
    while changed:
        changed = False
        snap = sorted(pts)
        # meet closure
        for i, a in enumerate(snap):
            for b in snap[i + 1:]:
                g = meet(a, b)
                if g not in pts:
                    pts.add(g)
                    changed = True
        # compatibility: S + E <= E on stored data
        if S is not None:
            for s in sorted(S.small):
                for p in sorted(pts):
                    q = meet(vadd(s, p), c)
                    if q not in pts:
                        pts.add(q)
                        changed = True
        # E2 repair with the componentwise-minimal admissible witness
        snap = sorted(pts)
        for i, a in enumerate(snap):
            for b in snap[i + 1:]:
                for k in range(r):
                    if a[k] != b[k]:
                        continue
                    if a[k] >= c[k]:
                        continue  # rule supplies a witness above the conductor
                    lows = []
                    highs = []
                    for j in range(r):
                        if j == k:
                            lows.append(a[j] + 1)
                            highs.append(max(c[j], a[j] + 1))
                        elif a[j] != b[j]:
                            v = min(a[j], b[j])
                            lows.append(v)
                            highs.append(v)  # differing coordinates are pinned
                        else:
                            lows.append(a[j])
                            highs.append(max(c[j], a[j]))
                    found = False
                    for g in box_points(tuple(lows), tuple(highs)):
                        if rule(g):
                            found = True
                            break
                    if not found:
                        w = tuple(lows)
                        if w not in pts:
                            pts.add(w)
                            changed = True
    return pts


def random_good(S: SmallRep, seed: int, *, max_width: int = 4,
                samples: int = 6, offset: int = 2, retries: int = 20) -> SmallRep:
    """A seeded random good semigroup ideal E with S + E <= E.

    Sample points in a bounded box, close under meet, repair E2 with minimal
    witnesses, force compatibility, iterate to a fixpoint, then normalize and
    validate.  Deterministic per (S, seed, bounds).
    """
    r = S.r
    rng = random.Random(f"{seed}:{max_width}:{samples}:{offset}")
    last_report = None
    for _ in range(retries):
        m = tuple(rng.randint(-offset, offset) for _ in range(r))
        c = tuple(m[k] + rng.randint(0, max_width) for k in range(r))
        pts = {m, c}
        for _ in range(samples):
            pts.add(tuple(rng.randint(m[k], c[k]) for k in range(r)))
        pts = _closure_fixpoint(r, m, c, pts, S)
        try:
            rep = from_small_elements(r, m, c, pts)
        except ValidationError as err:
            last_report = err.report
            continue
        report = validate(rep, S)
        if report.passed:
            return rep
        last_report = report
    raise GenerationError(
        f"no valid ideal after {retries} attempts (seed {seed}); "
        f"last failure: {last_report.summary() if last_report else 'none'}")

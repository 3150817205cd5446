"""Duals of good semigroup ideals and canonical-ideal tests.

The CD-difference D = {beta : beta + EI <= EJ} is computed over the box
[m_J - c_I, c_J - m_I + e]: below it beta + c_I drops under m_J, and from
U = c_J - m_I upward beta + EI lands past the conductor of EJ.  The inner
quantifier is truncated by the conductor cap: a failing alpha beyond the cap
meets down to a failing alpha inside it.  Results are normalized to SmallRep
and re-validated; any failure there is an internal bug, never expected on
valid inputs.
"""
from __future__ import annotations

from .errors import BoundaryInstabilityError, SoundnessError
from .fiber import fiber_empty
from .ideal import (
    RegionSet,
    SmallRep,
    equals,
    frobenius,
    is_subset,
    members,
    translate,
    validate,
)
from .lattice import Box, Point, box_points, join, meet, ones, vadd, vsub, zero


def _require_same_r(EJ: SmallRep, EI: SmallRep) -> None:
    if EJ.r != EI.r:
        from .errors import DimensionMismatch

        raise DimensionMismatch("ideals of different dimension")


def _dual_box(EJ: SmallRep, EI: SmallRep) -> tuple[Point, Point, Point]:
    e = ones(EJ.r)
    lo = vsub(EJ.m, EI.c)
    U = vsub(EJ.c, EI.m)
    hi = vadd(U, e)
    return lo, hi, U


def _promote_region(r: int, points: set[Point], lo: Point, hi: Point,
                    U: Point) -> tuple[SmallRep | None, str | None]:
    """Try to read a bounded point set as the box window of a good ideal.

    Requires a minimum, a least conducting element (everything from U up is
    known to belong), and exact agreement between the membership rule and the
    computed points on the whole box.  Any miss returns a reason instead.
    """
    if not points:
        return None, "empty region"
    pts = sorted(points)
    m = pts[0]
    for p in pts[1:]:
        m = meet(m, p)
    if m not in points:
        return None, f"no minimum: meet of region is {m}, not a region point"
    if U not in points:
        return None, f"expected conducting point {U} missing"
    cands = []
    for g in pts:
        if all(q in points for q in box_points(g, hi)):
            cands.append(g)
    if not cands:
        return None, "no conducting candidate"
    cstar = cands[0]
    for g in cands[1:]:
        cstar = meet(cstar, g)
    if cstar not in cands:
        return None, "conducting candidates are not meet-closed"
    small = frozenset(p for p in points if all(x <= y for x, y in zip(p, cstar)))
    rep = SmallRep(r, m, cstar, small)
    for p in box_points(lo, hi):
        if (p in points) != rep.contains(p):
            return None, f"membership rule disagrees with region at {p}"
    report = validate(rep)
    if not report.passed:
        return None, f"axiom validation failed: {report.summary()}"
    return rep, None


def cd_difference(EJ: SmallRep, EI: SmallRep) -> SmallRep:
    """The good ideal D = {beta : beta + EI <= EJ} (value-set ideal quotient)."""
    _require_same_r(EJ, EI)
    e = ones(EJ.r)
    lo, hi, U = _dual_box(EJ, EI)
    # superset of every per-beta quantifier cap K(beta); quantifying over the
    # larger window is equivalent by the cap argument
    kmax = vadd(join(EI.c, vsub(EJ.c, lo)), e)
    alphas = members(EI, EI.m, kmax)
    points = set()
    for beta in box_points(lo, hi):
        if all(EJ.contains(vadd(beta, a)) for a in alphas):
            points.add(beta)
    rep, failure = _promote_region(EJ.r, points, lo, hi, U)
    if rep is None:
        raise SoundnessError(f"cd_difference result is not a good ideal: {failure}")
    return rep


def fiber_dual(EJ: SmallRep, EI: SmallRep) -> RegionSet:
    """{beta : F(EI, frobenius(EJ) - beta) = empty} over the dual box.

    Goodness of this set is not guaranteed for non-canonical EJ, so the raw
    region is returned with the outcome of a promotion attempt.
    """
    _require_same_r(EJ, EI)
    lo, hi, U = _dual_box(EJ, EI)
    f = frobenius(EJ)
    points = {beta for beta in box_points(lo, hi)
              if fiber_empty(EI, vsub(f, beta))}
    rep, failure = _promote_region(EJ.r, points, lo, hi, U)
    return RegionSet(EJ.r, Box(lo, hi), frozenset(points), rep, failure)


def canonical_ideal(S: SmallRep) -> SmallRep:
    """The canonical ideal {alpha : F(S, frobenius(S) - alpha) = empty}.

    Postconditions are asserted: the Frobenius vector is preserved, S is
    contained in the result, and the result validates as an S-ideal.
    """
    if not S.contains(zero(S.r)):
        raise ValueError("canonical ideal needs a good semigroup (0 missing)")
    e = ones(S.r)
    span = vsub(S.c, S.m)
    lo = vsub(vsub(S.m, span), e)
    hi = S.c
    f = frobenius(S)
    points = {a for a in box_points(lo, hi) if fiber_empty(S, vsub(f, a))}
    for p in points:
        if any(x == l for x, l in zip(p, lo)):
            raise BoundaryInstabilityError(
                f"canonical-ideal member {p} touches the search-box face at {lo}")
    rep, failure = _promote_region(S.r, points, lo, hi, S.c)
    if rep is None:
        raise SoundnessError(f"canonical ideal is not a good ideal: {failure}")
    if frobenius(rep) != f:
        raise SoundnessError(
            f"canonical ideal changed the Frobenius vector: {frobenius(rep)} != {f}")
    if not is_subset(S, rep):
        raise SoundnessError("canonical ideal does not contain the semigroup")
    report = validate(rep, S)
    if not report.passed:
        raise SoundnessError(f"canonical ideal fails validation: {report.summary()}")
    return rep


def is_canonical(EJ: SmallRep, S: SmallRep) -> bool:
    """Whether EJ is a translate of the canonical ideal of S.

    Runs both the translate test and the fiber-dual fixpoint test and demands
    agreement; disagreement is an internal soundness bug.
    """
    _require_same_r(EJ, S)
    can = canonical_ideal(S)
    shift = vsub(frobenius(EJ), frobenius(S))
    by_translate = equals(EJ, translate(can, shift))
    fd = fiber_dual(EJ, S)
    by_fixpoint = all((p in fd.points) == EJ.contains(p) for p in fd.box)
    if by_translate != by_fixpoint:
        raise SoundnessError(
            f"canonicity tests disagree: translate={by_translate}, "
            f"fiber fixpoint={by_fixpoint}")
    return by_translate


def is_gorenstein(S: SmallRep) -> bool:
    """A good semigroup is Gorenstein exactly when it is its own canonical
    ideal (symmetry)."""
    return equals(S, canonical_ideal(S))


def bidual(EJ: SmallRep, EI: SmallRep) -> SmallRep:
    """cd_difference applied twice; always contains EI, equals it when EJ is
    canonical."""
    return cd_difference(EJ, cd_difference(EJ, EI))

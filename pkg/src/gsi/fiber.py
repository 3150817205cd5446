"""Fibers of points with respect to coordinate subsets, and maximal points.

For a nonempty J inside {1..r}, the open fiber of alpha holds the members
agreeing with alpha on J and strictly larger elsewhere; the closed fiber
relaxes strict to weak.  Only emptiness and one witness are ever needed, so
searches run over capped boxes: meeting a remote witness with a member above
the conductor pulls coordinate k down to max(c_k, alpha_k + 1) without
leaving the fiber.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable

from .ideal import SmallRep, frobenius, search_member
from .lattice import Point, box_points, normalize_index_set, ones, vsub


def fiber_witness(E: SmallRep, alpha: Point, J: Iterable[int],
                  closed: bool = False) -> Point | None:
    """Some member of the fiber F_J(E, alpha) (closed variant on request),
    or None when the fiber is empty.

    Coordinates in J are pinned to alpha; each free coordinate k is searched
    over (alpha_k, max(c_k, alpha_k + 1)] when open, [alpha_k, max(c_k,
    alpha_k)] when closed.
    """
    js = set(normalize_index_set(E.r, J))
    ranges = []
    for k in range(E.r):
        if k + 1 in js:
            ranges.append((alpha[k], alpha[k]))
        elif closed:
            ranges.append((alpha[k], max(E.c[k], alpha[k])))
        else:
            low = alpha[k] + 1
            ranges.append((low, max(E.c[k], low)))
    return search_member(E, ranges)


def fiber_empty(E: SmallRep, alpha: Point) -> bool:
    """Emptiness of F(E, alpha), the union of the singleton open fibers."""
    return all(fiber_witness(E, alpha, (i,)) is None for i in range(1, E.r + 1))


def is_maximal(E: SmallRep, alpha: Point) -> bool:
    return E.contains(alpha) and fiber_empty(E, alpha)


def _emptiness_by_size(E: SmallRep, alpha: Point) -> dict[int, list[bool]]:
    out: dict[int, list[bool]] = {}
    for k in range(1, E.r + 1):
        out[k] = [fiber_witness(E, alpha, J) is None
                  for J in itertools.combinations(range(1, E.r + 1), k)]
    return out


def p_value(E: SmallRep, alpha: Point) -> int:
    """Largest n such that every fiber with at most n indices is empty.

    Returns 0 when some singleton fiber is nonempty, r when every fiber is
    empty (which forces alpha outside E).
    """
    emp = _emptiness_by_size(E, alpha)
    p = 0
    for k in range(1, E.r + 1):
        if all(emp[k]):
            p = k
        else:
            break
    return p


def q_value(E: SmallRep, alpha: Point) -> int:
    """Least n such that every fiber with at least n indices is nonempty.

    Returns r + 1 exactly when alpha is not a member (the full fiber is
    empty); always exceeds p_value.
    """
    emp = _emptiness_by_size(E, alpha)
    q = 1
    for k in range(E.r, 0, -1):
        if any(emp[k]):
            q = k + 1
            break
    return q


class MaximalKind(enum.Enum):
    ABSOLUTE = "absolute"
    RELATIVE = "relative"
    TYPE_PQ = "type_pq"
    BOTH = "both"


@dataclass(frozen=True)
class MaximalInfo:
    point: Point
    p: int
    q: int
    kind: MaximalKind


def _classify(r: int, p: int, q: int) -> MaximalKind:
    absolute = p == r - 1
    relative = p == 1 and q == 2
    if absolute and relative:
        return MaximalKind.BOTH
    if absolute:
        return MaximalKind.ABSOLUTE
    if relative:
        return MaximalKind.RELATIVE
    return MaximalKind.TYPE_PQ


def maximals(E: SmallRep) -> list[MaximalInfo]:
    """All maximal points with their (p, q) types, in lexicographic order.

    Maximal points live in [m, c - e]: beyond that region some coordinate
    reaches the conductor and the matching singleton fiber is nonempty.
    """
    out = []
    hi = vsub(E.c, ones(E.r))
    for alpha in box_points(E.m, hi):
        if E.contains(alpha) and fiber_empty(E, alpha):
            p = p_value(E, alpha)
            q = q_value(E, alpha)
            out.append(MaximalInfo(alpha, p, q, _classify(E.r, p, q)))
    return out


def frobenius_fiber_empty(E: SmallRep) -> bool:
    """The fiber of the Frobenius vector is always empty for a valid ideal."""
    return fiber_empty(E, frobenius(E))

"""Containment predicates for the joint-pattern catalog and the guillotine test.

Patterns are named by their wire ids: "td", "tu", "tr", "tl" for the four
T-joint orientations, "wm+" / "wm-" for the two windmill chiralities.
"""

from __future__ import annotations

from functools import lru_cache

from .drawing import RectDrawing, joints_of, segments_of

TD, TU, TR, TL = "td", "tu", "tr", "tl"
WINDMILL_CW, WINDMILL_CCW = "wm+", "wm-"
PATTERNS = (TD, TU, TR, TL, WINDMILL_CW, WINDMILL_CCW)

_T_KINDS = {TD, TU, TR, TL}


def _ends_on(segs):
    """Directed edges (i, kind, j): an endpoint of segs[i] lies in the open
    interior of segs[j]; kind is the joint formed there."""
    out = []
    for i, s in enumerate(segs):
        for j, t in enumerate(segs):
            if s.orientation == t.orientation:
                continue
            if s.orientation == "v":
                if t.axis == s.hi and t.lo < s.axis < t.hi:
                    out.append((i, TD, j))
                if t.axis == s.lo and t.lo < s.axis < t.hi:
                    out.append((i, TU, j))
            else:
                if t.axis == s.lo and t.lo < s.axis < t.hi:
                    out.append((i, TR, j))
                if t.axis == s.hi and t.lo < s.axis < t.hi:
                    out.append((i, TL, j))
    return out


def _windmills(d):
    """4-cycles of segments each ending on the next, split by chirality."""
    segs = segments_of(d)
    edges = _ends_on(segs)
    nxt = {}
    for i, kind, j in edges:
        nxt.setdefault(i, []).append((kind, j))
    cw, ccw = [], []
    seen = set()
    for a in range(len(segs)):
        for k1, b in nxt.get(a, ()):
            for k2, c in nxt.get(b, ()):
                for k3, e in nxt.get(c, ()):
                    for k4, f in nxt.get(e, ()):
                        if f != a or len({a, b, c, e}) != 4:
                            continue
                        key = frozenset((a, b, c, e))
                        if key in seen:
                            continue
                        seen.add(key)
                        kinds = dict(zip((a, b, c, e), (k1, k2, k3, k4)))
                        # chirality: which endpoint the horizontal after the
                        # TD edge uses (tl = one sense, tr = the other)
                        cyc = (a, b, c, e)
                        for idx in range(4):
                            if kinds[cyc[idx]] == TD:
                                follow = kinds[cyc[(idx + 1) % 4]]
                                occ = tuple(segs[x] for x in cyc)
                                (cw if follow == TL else ccw).append(occ)
                                break
    return cw, ccw


def occurrences(d: RectDrawing, pattern: str):
    """Witnesses of the pattern in d (joint points / windmill quadruples)."""
    if pattern in _T_KINDS:
        return [(pt, kind) for pt, kind in joints_of(d) if kind == pattern]
    cw, ccw = _windmills(d)
    if pattern == WINDMILL_CW:
        return cw
    if pattern == WINDMILL_CCW:
        return ccw
    raise ValueError(f"unknown pattern {pattern!r}")


def contains(d: RectDrawing, pattern: str) -> bool:
    return bool(occurrences(d, pattern))


def avoids_all(d: RectDrawing, patterns) -> bool:
    return not any(contains(d, p) for p in patterns)


@lru_cache(maxsize=1 << 16)
def is_guillotine(d: RectDrawing) -> bool:
    """True iff d decomposes recursively by full cuts."""
    return _guillotine(d.rects, 0, 0, d.width, d.height)


def _guillotine(boxes, x0, y0, x1, y1):
    if len(boxes) == 1:
        return True
    for x in range(x0 + 1, x1):
        if all(b[2] <= x or b[0] >= x for b in boxes):
            left = [b for b in boxes if b[2] <= x]
            right = [b for b in boxes if b[0] >= x]
            return (_guillotine(left, x0, y0, x, y1)
                    and _guillotine(right, x, y0, x1, y1))
    for y in range(y0 + 1, y1):
        if all(b[3] <= y or b[1] >= y for b in boxes):
            low = [b for b in boxes if b[3] <= y]
            high = [b for b in boxes if b[1] >= y]
            return (_guillotine(low, x0, y0, x1, y)
                    and _guillotine(high, x0, y, x1, y1))
    return False

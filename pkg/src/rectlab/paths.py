"""Dyck paths (rushed and progressive variants), the strip-drawing bijection,
and exact generating-function machinery: the Catalan fixed point, the
bounded-height family via a three-term polynomial recurrence, and per-height
growth rates.

Paths are words over "U"/"D".  All series coefficients are exact ints;
floating point appears only in the growth-rate root finding.
"""

from __future__ import annotations

import math

from .drawing import RectDrawing, heap_order, make_drawing
from .gentree import ClassError
from .patterns import contains


def is_dyck(word: str) -> bool:
    h = 0
    for ch in word:
        h += 1 if ch == "U" else -1 if ch == "D" else 2 * len(word)
        if h < 0:
            return False
    return h == 0


def check_dyck(word: str) -> str:
    if not is_dyck(word):
        raise ValueError(f"{word!r} is not a Dyck word")
    return word


def dyck_paths(semilength: int, cap: int = 13):
    """All Dyck words of the given semilength, lexicographic (D < U)."""
    if semilength > cap:
        raise ValueError(f"semilength {semilength} exceeds the cap {cap}")

    def rec(word, h, rest):
        if rest == 0:
            yield word
            return
        if h > 0:
            yield from rec(word + "D", h - 1, rest - 1)
        if h + 1 <= rest - 1:
            yield from rec(word + "U", h + 1, rest - 1)

    yield from rec("", 0, 2 * semilength)


def initial_rise(word: str) -> int:
    n = 0
    for ch in word:
        if ch != "U":
            break
        n += 1
    return n


def height(word: str) -> int:
    h = best = 0
    for ch in word:
        h += 1 if ch == "U" else -1
        best = max(best, h)
    return best


def is_rushed(word: str) -> bool:
    """Starts with h up-steps and never returns to altitude h."""
    check_dyck(word)
    h = initial_rise(word)
    alt = h
    for ch in word[h:]:
        alt += 1 if ch == "U" else -1
        if alt == h:
            return False
    return True


def is_progressive(word: str) -> bool:
    """Every peak at altitude above 1 is preceded by a peak one lower."""
    check_dyck(word)
    seen = set()
    alt = 0
    for i, ch in enumerate(word):
        alt += 1 if ch == "U" else -1
        if ch == "U" and i + 1 < len(word) and word[i + 1] == "D":
            if alt > 1 and alt - 1 not in seen:
                return False
            seen.add(alt)
    return True


def rushed_paths(semilength: int, cap: int = 13):
    return [p for p in dyck_paths(semilength, cap) if is_rushed(p)]


def progressive_paths(semilength: int, cap: int = 13):
    return [p for p in dyck_paths(semilength, cap) if is_progressive(p)]


# ---------------------------------------------------------------------------
# the strip bijection


def phi(word: str) -> RectDrawing:
    """Drawing of a rushed path: a stack of rows cut by the full horizontal
    lines, with one unit vertical per non-initial up-step, placed left to
    right at the up-step's altitude."""
    if not is_rushed(word):
        raise ClassError(f"{word!r} is not rushed")
    h = initial_rise(word)
    if h < 2:
        raise ClassError("rushed paths of semilength >= 2 have rise >= 2")
    rows = h - 1
    alt = h
    bottoms = []
    for ch in word[h:]:
        if ch == "U":
            bottoms.append(alt)
            alt += 1
        else:
            alt -= 1
    width = len(bottoms) + 1
    # cells: row r of each column, merged across columns where no vertical
    boxes = []
    for r in range(rows):
        cuts = [0] + [x + 1 for x, b in enumerate(bottoms) if b == r] + [width]
        boxes += [(cuts[t], r, cuts[t + 1], r + 1) for t in range(len(cuts) - 1)]
    return make_drawing(width, rows, boxes)


def phi_inv(d: RectDrawing) -> str:
    """Rushed path of a drawing avoiding left- and right-pointing joints:
    pieces are the unit verticals; repeatedly take the highest piece whose
    forced-left predecessors are all placed."""
    if contains(d, "tr") or contains(d, "tl"):
        raise ClassError("drawing has a horizontal segment not spanning W to E")
    pieces, prec = heap_order(d, "v")
    remaining = set(range(len(pieces)))
    order = []
    while remaining:
        ready = [i for i in remaining
                 if not any((j, i) in prec for j in remaining)]
        nxt = max(ready, key=lambda i: pieces[i].lo)
        order.append(nxt)
        remaining.remove(nxt)
    h = d.height + 1
    out = ["U" * h]
    alt = h
    for i in order:
        out.append("D" * (alt - pieces[i].lo) + "U")
        alt = pieces[i].lo + 1
    out.append("D" * alt)
    return "".join(out)


def strip_path_count(steps: int, k: int) -> int:
    """Paths of +-1 steps from height 0 to height k staying inside [0, k]."""
    cur = [0] * (k + 1)
    cur[0] = 1
    for _ in range(steps):
        nxt = [0] * (k + 1)
        for y, c in enumerate(cur):
            if c:
                if y + 1 <= k:
                    nxt[y + 1] += c
                if y - 1 >= 0:
                    nxt[y - 1] += c
        cur = nxt
    return cur[k]


# ---------------------------------------------------------------------------
# exact series


def poly_mul(a, b, order):
    out = [0] * (order + 1)
    for i, ai in enumerate(a):
        if ai and i <= order:
            for j, bj in enumerate(b):
                if i + j > order:
                    break
                out[i + j] += ai * bj
    return out


def series_inverse(q, order):
    """1/q(x) to the given order; q must have constant term 1."""
    if q[0] != 1:
        raise ValueError("constant term must be 1")
    inv = [0] * (order + 1)
    inv[0] = 1
    for m in range(1, order + 1):
        acc = 0
        for i in range(1, min(m, len(q) - 1) + 1):
            acc += q[i] * inv[m - i]
        inv[m] = -acc
    return inv


def q_poly(m: int):
    """Three-term family q_0 = q_1 = 1, q_{m+1} = q_m - x q_{m-1}."""
    if m == 0:
        return [1]
    a, b = [1], [1]
    for _ in range(m - 1):
        shifted = [0] + a
        width = max(len(b), len(shifted))
        nxt = [(b[i] if i < len(b) else 0) -
               (shifted[i] if i < len(shifted) else 0) for i in range(width)]
        a, b = b, nxt
    while len(b) > 1 and b[-1] == 0:
        b.pop()
    return b


def gk_series(k: int, order: int):
    """Coefficients 0..order of the height-k class generating function
    x^k / q_{k+1}(x)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    inv = series_inverse(q_poly(k + 1) + [0], order)
    out = [0] * (order + 1)
    for m in range(k, order + 1):
        out[m] = inv[m - k]
    return out


def growth_rate(k: int) -> float:
    """Reciprocal of the smallest positive root of q_{k+1}, found by
    bisection; equals 4 cos^2(pi / (k + 2))."""
    q = q_poly(k + 1)

    def f(x):
        acc = 0.0
        for c in reversed(q):
            acc = acc * x + c
        return acc

    lo, hi, step = 0.0, None, 1e-3
    x = step
    while hi is None:
        if f(x) <= 0:
            hi, lo = x, x - step
        x += step
        if x > 2:
            raise ArithmeticError("no root found below 2")
    for _ in range(200):
        mid = (lo + hi) / 2
        if f(mid) <= 0:
            hi = mid
        else:
            lo = mid
    return 2.0 / (lo + hi)


def reference_growth_rate(k: int) -> float:
    return 4 * math.cos(math.pi / (k + 2)) ** 2


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def catalan_series(order: int):
    """Coefficients 0..order of the class generating function, computed by
    iterating R <- x + xR + (x + xR) R to a fixed point."""
    r = [0] * (order + 1)
    for _ in range(order + 1):
        xr = [0] + r[:order]
        head = list(xr)  # x + xR
        if order >= 1:
            head[1] += 1
        nxt = [a + b for a, b in zip(poly_mul(head, r, order), xr)]
        if order >= 1:
            nxt[1] += 1
        if nxt == r:
            break
        r = nxt
    return r

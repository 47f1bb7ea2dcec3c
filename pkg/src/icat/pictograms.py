"""Pasting-diagram pictograms: generation by complexity ops, the counting
recursion, and axiom budgets for weak-k structures in strict-n ambients.

A pictogram is a horizontal tuple of columns.  A column is a wire
('w', 0 plain | 1 identity) or a vertical stack ('s', cells); a stack cell is
'p' (plain 2-cell), 'i' (identity 2-cell), or, in the 3-dimensional language,
a spatial stack ('z', cs) of 3-cells with cs over {'p', 'i'}.  The empty
tuple is the single 0-cell.  Identity wires never occur inside a stack: stack
edges are the boundaries of 2-cells and stay plain.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .fincat import ICatError


PLAIN_WIRE = ("w", 0)
ID_WIRE = ("w", 1)
SEED_2CELL = (("s", ("p",)),)

MAX_ENUM_COMPLEXITY = 12


def cell_complexity(cell):
    if cell == "p":
        return 0
    if cell == "i":
        return 1
    kind, zs = cell
    assert kind == "z"
    return len(zs) + sum(1 for c in zs if c == "i")


def column_complexity(col):
    kind, payload = col
    if kind == "w":
        return -1 if payload == 0 else 0
    return (len(payload) - 1) + sum(cell_complexity(c) for c in payload)


def complexity(pict):
    if not pict:
        return -2
    return sum(column_complexity(c) + 2 for c in pict) - 2


def width(pict):
    return len(pict)


def dimension(pict):
    """Highest cell dimension drawn: 0, 1, 2 or 3."""
    d = 0
    for kind, payload in pict:
        if kind == "w":
            d = max(d, 1)
        else:
            d = max(d, 2)
            for c in payload:
                if isinstance(c, tuple):
                    d = max(d, 3)
    return d


def sorts(k):
    """The single-plain-cell pictograms of each dimension 0..k."""
    out = [()]
    if k >= 1:
        out.append((PLAIN_WIRE,))
    if k >= 2:
        out.append(SEED_2CELL)
    if k >= 3:
        out.append((("s", (("z", ("p",)),)),))
    return out


def weight_band(pict, k=2):
    """Appendix-style weight: 0 for the sorts, else complexity + 2 - level,
    where a pictogram of complexity c is valued one level above its drawing
    (capped at the top cell object)."""
    if pict in sorts(k):
        return 0
    return max(1, complexity(pict) + 2 - k)


def _replace(t, i, value):
    return t[:i] + (value,) + t[i + 1:]


def _insert(t, i, value):
    return t[:i] + (value,) + t[i:]


def _remove(t, i):
    return t[:i] + t[i + 1:]


def forward_moves(pict, k):
    """All single op applications increasing complexity by one unit."""
    out = []
    # op1: replace a 0-cell (a column boundary) by a plain 1-cell
    for i in range(len(pict) + 1):
        out.append(_insert(pict, i, PLAIN_WIRE))
    for ci, col in enumerate(pict):
        kind, payload = col
        if kind == "w":
            if payload == 0:
                # op2: a 1-cell not part of a 2-cell becomes an identity
                out.append(_replace(pict, ci, ID_WIRE))
                if k >= 2:
                    # op3 on a free wire: replace the 1-cell by a 2-cell
                    out.append(_replace(pict, ci, ("s", ("p",))))
            continue
        if k >= 2:
            # op3 on a stack edge: every edge of the stack is a plain 1-cell
            for j in range(len(payload) + 1):
                out.append(_replace(pict, ci, ("s", _insert(payload, j, "p"))))
        for j, cell in enumerate(payload):
            if cell == "p":
                # op4: plain 2-cell (not a 3-cell face) becomes an identity
                out.append(_replace(pict, ci, ("s", _replace(payload, j, "i"))))
                if k >= 3:
                    # op5: non-identity 2-cell becomes a 3-cell
                    out.append(_replace(
                        pict, ci, ("s", _replace(payload, j, ("z", ("p",))))))
            elif isinstance(cell, tuple):
                zs = cell[1]
                if k >= 3:
                    # op5 on a spatial face: grow the 3-cell stack
                    for zj in range(len(zs) + 1):
                        out.append(_replace(
                            pict, ci,
                            ("s", _replace(payload, j,
                                           ("z", _insert(zs, zj, "p"))))))
                    # op6: plain 3-cell becomes an identity 3-cell
                    for zj, zc in enumerate(zs):
                        if zc == "p":
                            out.append(_replace(
                                pict, ci,
                                ("s", _replace(payload, j,
                                               ("z", _replace(zs, zj, "i"))))))
    return out


def generate_pictograms(max_complexity, k=2):
    """All k-dimensional pictograms of complexity <= max_complexity.

    Layered forward closure from the 0-cell; asserts that every op raises
    the recorded complexity by exactly one (well-definedness of complexity).
    """
    if max_complexity > MAX_ENUM_COMPLEXITY:
        raise ICatError("pictogram enumeration budget exceeded")
    seen = {(): -2}
    frontier = deque([()])
    while frontier:
        p = frontier.popleft()
        c = seen[p]
        if c >= max_complexity:
            continue
        for q in forward_moves(p, k):
            cq = complexity(q)
            assert cq == c + 1, "complexity not well defined along op path"
            if q not in seen:
                seen[q] = cq
                frontier.append(q)
    return seen


def enumerate_pictograms(max_complexity, k=2):
    """Exact counts by (complexity, width), via BFS over the ops."""
    seen = generate_pictograms(max_complexity, k)
    counts = {}
    for p, c in seen.items():
        key = (c, width(p))
        counts[key] = counts.get(key, 0) + 1
    return counts


def count_at(max_complexity, k=2):
    """Counts by complexity alone."""
    seen = generate_pictograms(max_complexity, k)
    out = {}
    for c in seen.values():
        out[c] = out.get(c, 0) + 1
    return out


def width1_counts(max_complexity):
    """Number of width-1 2-dimensional pictograms per complexity.

    Direct stack enumeration (words over {p, i}), independent of the
    Fibonacci recursion.
    """
    from itertools import product
    counts = {-1: 1, 0: 2}  # plain wire; identity wire and the single 2-cell
    h = 1
    while h - 1 <= max_complexity:
        for cells in product("pi", repeat=h):
            c = (h - 1) + sum(1 for x in cells if x == "i")
            if 1 <= c <= max_complexity:
                counts[c] = counts.get(c, 0) + 1
        h += 1
    return counts


@lru_cache(maxsize=None)
def fibonacci(i):
    if i <= 0:
        raise ICatError("fibonacci index must be positive")
    if i <= 2:
        return 1
    return fibonacci(i - 1) + fibonacci(i - 2)


def n_width1(i):
    """N(i): width-1 pictograms of complexity i-2; Fibonacci for i > 2."""
    if i == 1:
        return 1
    if i == 2:
        return 2
    return fibonacci(i)


@lru_cache(maxsize=None)
def counts_by_recursion(k):
    """C(k) via the recursion, base C(-2) = 1 (the single 0-cell)."""
    if k < -2:
        raise ICatError("complexity below the 0-cell")
    if k == -2:
        return 1
    return sum(n_width1(i) * counts_by_recursion(k - i)
               for i in range(1, k + 3))


@dataclass(frozen=True)
class StructureDescriptor:
    """A weak k-category internal to the (n-k+1)-category of strict
    (n-k)-categories is graded here by (weak dimension, ambient level)."""
    weak: int
    ambient: int


CALIBRATED_ANCHORS = {
    (2, 2): 46, (2, 3): 118, (3, 1): 74, (3, 2): 231, (3, 3): 725,
}


def is_calibrated(d: StructureDescriptor):
    if d.weak == 1:
        return d.ambient >= 1
    return d.weak in (2, 3) and 1 <= d.ambient <= 3


def axiom_budget(d: StructureDescriptor, allow_extrapolated=False):
    """Data counts by weight level plus the axiom count.

    Axioms for (weak k, ambient n) are the k-dimensional pictograms of
    complexity n + k - 1; weight-1 data collect everything of complexity
    < k that is not a sort, deeper data bands sit at complexity w + k - 2.
    """
    k, n = d.weak, d.ambient
    if k not in (1, 2, 3) or n < 1:
        raise ICatError("descriptor out of range: %r" % (d,))
    extrapolated = not is_calibrated(d)
    if extrapolated and not allow_extrapolated:
        raise ICatError(
            "uncalibrated descriptor %r; pass allow_extrapolated" % (d,))
    top = n + k - 1
    by_cx = count_at(top, k)
    data_counts = [k + 1]
    if n >= 1:
        band1 = sum(by_cx.get(c, 0) for c in range(0, k)) - (k - 1)
        data_counts.append(band1)
    for w in range(2, n + 1):
        data_counts.append(by_cx.get(w + k - 2, 0))
    axioms = by_cx.get(top, 0)
    return {
        "weak": k,
        "ambient": n,
        "data_counts": data_counts,
        "axioms": axioms,
        "extrapolated": extrapolated,
    }


def weight_bands(max_band=3):
    """Sizes of the weight bands of the internal-bicategory table."""
    seen = generate_pictograms(max_band, 2)
    bands = {}
    for p in seen:
        b = weight_band(p, 2)
        if b <= max_band:
            bands[b] = bands.get(b, 0) + 1
    return bands

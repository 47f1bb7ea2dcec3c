"""Exact algebraic topology: chain complexes, Smith normal form, homology,
fundamental-group presentations and bounded Tietze trivialization.

All arithmetic is on Python ints (arbitrary precision); no floats anywhere.
"""

from __future__ import annotations

import math
from collections import defaultdict, deque
from dataclasses import dataclass, field

from .fincat import ICatError


# ---------------------------------------------------------------------------
# CW data


@dataclass
class CWComplexData:
    """Cells in dimensions 0..3 with explicit attachments.

    attach1[e] = (src_vertex, dst_vertex).
    attach2[c] = boundary word: ordered list of (edge_id, sign) read around the
    loop, so the walk src->dst (sign +1) or dst->src (sign -1) is closed.
    attach3[c] = list of (two_cell_id, degree) with degree in {+1, -1}.
    labels[cell] = generator tag for reports.
    """
    cells: dict = field(default_factory=lambda: {0: [], 1: [], 2: [], 3: []})
    attach1: dict = field(default_factory=dict)
    attach2: dict = field(default_factory=dict)
    attach3: dict = field(default_factory=dict)
    labels: dict = field(default_factory=dict)
    notes: dict = field(default_factory=dict)

    def n_cells(self, k):
        return len(self.cells.get(k, []))

    def euler_characteristic(self):
        return sum((-1) ** k * self.n_cells(k) for k in range(4))

    def validate(self):
        """Boundary words must be closed loops and 3-cell boundaries cycles."""
        vset = set(self.cells[0])
        for e in self.cells[1]:
            s, t = self.attach1[e]
            if s not in vset or t not in vset:
                raise ICatError("edge %s has dangling endpoint" % e)
        for c in self.cells[2]:
            word = self.attach2[c]
            if not word:
                continue
            pos = None
            start = None
            for e, sign in word:
                s, t = self.attach1[e]
                a, b = (s, t) if sign > 0 else (t, s)
                if pos is None:
                    start, pos = a, b
                else:
                    if a != pos:
                        raise ICatError("open boundary word on 2-cell %s" % c)
                    pos = b
            if pos != start:
                raise ICatError("open boundary word on 2-cell %s" % c)
        d2 = self.boundary_matrix(2)
        d3 = self.boundary_matrix(3)
        prod = mat_mul(d2, d3)
        if any(any(x != 0 for x in row) for row in prod):
            raise ICatError("dd != 0 on 3-cells")

    def boundary_matrix(self, k):
        """The matrix of d_k: C_k -> C_{k-1}, rows indexed by (k-1)-cells."""
        if k == 1:
            rows = {v: i for i, v in enumerate(self.cells[0])}
            m = [[0] * len(self.cells[1]) for _ in self.cells[0]]
            for j, e in enumerate(self.cells[1]):
                s, t = self.attach1[e]
                m[rows[t]][j] += 1
                m[rows[s]][j] -= 1
            return m
        if k == 2:
            rows = {e: i for i, e in enumerate(self.cells[1])}
            m = [[0] * len(self.cells[2]) for _ in self.cells[1]]
            for j, c in enumerate(self.cells[2]):
                for e, sign in self.attach2[c]:
                    m[rows[e]][j] += sign
            return m
        if k == 3:
            rows = {c: i for i, c in enumerate(self.cells[2])}
            m = [[0] * len(self.cells[3]) for _ in self.cells[2]]
            for j, c in enumerate(self.cells[3]):
                for f, deg in self.attach3[c]:
                    m[rows[f]][j] += deg
            return m
        raise ICatError("boundary dimension out of range: %r" % k)


def chain_complex(cw: CWComplexData):
    """(d1, d2, d3) with dd = 0 asserted."""
    cw.validate()
    return (cw.boundary_matrix(1), cw.boundary_matrix(2),
            cw.boundary_matrix(3))


# ---------------------------------------------------------------------------
# integer matrices


def mat_mul(a, b):
    if not a or not b:
        return [[0] * (len(b[0]) if b else 0) for _ in a]
    n, k, m = len(a), len(b), len(b[0])
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            x = ai[t]
            if x:
                bt = b[t]
                for j in range(m):
                    if bt[j]:
                        oi[j] += x * bt[j]
    return out


def smith_normal_form(m):
    """Diagonal divisors d1 | d2 | ... of an integer matrix.

    Pivoting by minimal absolute value; arbitrary-precision throughout.
    Only the divisor list is returned (transforms are not tracked).
    """
    a = [row[:] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    divisors = []
    top = 0
    while True:
        pivot = None
        best = None
        for i in range(top, rows):
            for j in range(top, cols):
                v = a[i][j]
                if v != 0 and (best is None or abs(v) < best):
                    best = abs(v)
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        a[top], a[pi] = a[pi], a[top]
        for row in a:
            row[top], row[pj] = row[pj], row[top]
        while True:
            # clear the pivot column, restarting whenever the pivot shrinks
            restarted = False
            for i in range(top + 1, rows):
                if a[i][top]:
                    q = a[i][top] // a[top][top]
                    if q:
                        for j in range(top, cols):
                            a[i][j] -= q * a[top][j]
                    if a[i][top]:
                        a[top], a[i] = a[i], a[top]
                        restarted = True
                        break
            if restarted:
                continue
            for j in range(top + 1, cols):
                if a[top][j]:
                    q = a[top][j] // a[top][top]
                    if q:
                        for i in range(top, rows):
                            a[i][j] -= q * a[i][top]
                    if a[top][j]:
                        for i in range(rows):
                            a[i][top], a[i][j] = a[i][j], a[i][top]
                        restarted = True
                        break
            if not restarted:
                break
        divisors.append(abs(a[top][top]))
        top += 1
        if top >= rows or top >= cols:
            break
    # enforce divisibility d1 | d2 | ...
    changed = True
    while changed:
        changed = False
        for i in range(len(divisors) - 1):
            x, y = divisors[i], divisors[i + 1]
            if y % x != 0:
                g = math.gcd(x, y)
                divisors[i], divisors[i + 1] = g, x * y // g
                changed = True
    return divisors


def matrix_rank(m):
    return sum(1 for d in smith_normal_form(m) if d != 0)


def minor_gcd_divisor_oracle(m):
    """Independent SNF oracle: prod of first k divisors = gcd of k x k minors."""
    import itertools
    rows = len(m)
    cols = len(m[0]) if rows else 0
    out = []
    k = 1
    while k <= min(rows, cols):
        g = 0
        for ri in itertools.combinations(range(rows), k):
            for ci in itertools.combinations(range(cols), k):
                g = math.gcd(g, _det([[m[i][j] for j in ci] for i in ri]))
        out.append(g)
        if g == 0:
            break
        k += 1
    # convert minor gcds to divisors
    divisors = []
    prev = 1
    for g in out:
        if g == 0:
            break
        divisors.append(g // prev)
        prev = g
    return divisors


def _det(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        if m[0][j]:
            sub = [row[:j] + row[j + 1:] for row in m[1:]]
            total += (-1) ** j * m[0][j] * _det(sub)
    return total


# ---------------------------------------------------------------------------
# homology


def homology(cw: CWComplexData, k):
    """(betti rank, torsion list) of H_k over the integers, k in {0, 1, 2}."""
    if k not in (0, 1, 2):
        raise ICatError("homology dimension out of range: %r" % k)
    n_k = cw.n_cells(k)
    if k == 0:
        rank_dk = 0
    else:
        rank_dk = matrix_rank(cw.boundary_matrix(k))
    d_next = cw.boundary_matrix(k + 1)
    div_next = smith_normal_form(d_next)
    rank_next = sum(1 for d in div_next if d != 0)
    betti = n_k - rank_dk - rank_next
    torsion = [d for d in div_next if d not in (0, 1)]
    return betti, torsion


# ---------------------------------------------------------------------------
# fundamental group


@dataclass
class GroupPresentation:
    """Generators are 1..n (inverses negative); relators are int lists."""
    n_generators: int
    relators: list
    generator_labels: list = field(default_factory=list)

    def abelianization_matrix(self):
        m = [[0] * len(self.relators) for _ in range(self.n_generators)]
        for j, rel in enumerate(self.relators):
            for x in rel:
                m[abs(x) - 1][j] += 1 if x > 0 else -1
        return m


def free_reduce(word):
    out = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return out


def cyclic_reduce(word):
    w = free_reduce(word)
    while len(w) >= 2 and w[0] == -w[-1]:
        w = w[1:-1]
    return w


def pi1_presentation(cw: CWComplexData, base=None) -> GroupPresentation:
    """Spanning-tree presentation of pi1 of the 2-skeleton.

    Generators are the non-tree edges; relators come from 2-cell boundary
    words with tree edges dropped.  The complex must be connected.
    """
    verts = cw.cells[0]
    if not verts:
        raise ICatError("empty complex")
    adjacency = defaultdict(list)
    for e in cw.cells[1]:
        s, t = cw.attach1[e]
        adjacency[s].append((e, t))
        adjacency[t].append((e, s))
    base = base if base is not None else verts[0]
    seen = {base}
    tree_edges = set()
    queue = deque([base])
    while queue:
        v = queue.popleft()
        for e, w in adjacency[v]:
            if w not in seen:
                seen.add(w)
                tree_edges.add(e)
                queue.append(w)
    if len(seen) != len(verts):
        raise ICatError("disconnected complex")
    gen_index = {}
    labels = []
    for e in cw.cells[1]:
        if e not in tree_edges:
            gen_index[e] = len(labels) + 1
            labels.append(e)
    relators = []
    for c in cw.cells[2]:
        word = []
        for e, sign in cw.attach2[c]:
            g = gen_index.get(e)
            if g is not None:
                word.append(g if sign > 0 else -g)
        word = cyclic_reduce(word)
        if word:
            relators.append(word)
    return GroupPresentation(len(labels), relators, labels)


def try_trivialize(p: GroupPresentation, budget=10 ** 4):
    """Bounded Tietze simplification; semi-decision for triviality.

    Returns a dict with status 'trivial' or 'inconclusive' plus move counts.
    Never claims nontriviality.
    """
    alive = set(range(1, p.n_generators + 1))
    relators = {}
    occurs = defaultdict(set)  # generator -> relator ids
    next_id = 0
    queue = deque()

    def add_relator(word):
        nonlocal next_id
        word = cyclic_reduce(word)
        if not word:
            return
        rid = next_id
        next_id += 1
        relators[rid] = word
        for x in set(map(abs, word)):
            occurs[x].add(rid)
        queue.append(rid)

    for rel in p.relators:
        add_relator(rel)

    moves = 0

    def remove_relator(rid):
        word = relators.pop(rid)
        for x in set(map(abs, word)):
            occurs[x].discard(rid)

    def substitute(g, replacement):
        """Replace occurrences of generator g by the word `replacement`
        (and -g by its inverse), then delete g."""
        nonlocal moves
        inv = [-x for x in reversed(replacement)]
        for rid in list(occurs[g]):
            word = relators[rid]
            out = []
            for x in word:
                if x == g:
                    out.extend(replacement)
                elif x == -g:
                    out.extend(inv)
                else:
                    out.append(x)
            remove_relator(rid)
            add_relator(out)
        alive.discard(g)
        moves += 1

    while queue and moves < budget:
        rid = queue.popleft()
        if rid not in relators:
            continue
        word = cyclic_reduce(relators[rid])
        if not word:
            remove_relator(rid)
            continue
        if word != relators[rid]:
            remove_relator(rid)
            add_relator(word)
            continue
        counts = defaultdict(int)
        for x in word:
            counts[abs(x)] += 1
        # pick a generator occurring exactly once in this relator
        solo = None
        for x in word:
            if counts[abs(x)] == 1:
                solo = x
                break
        if solo is None:
            continue
        # solve word = 1 for solo: rotate so word = solo . rest
        i = word.index(solo)
        rest = word[i + 1:] + word[:i]
        remove_relator(rid)
        if solo > 0:
            substitute(solo, [-x for x in reversed(rest)])
        else:
            substitute(-solo, rest)

    # any generator never occurring in a relator cannot be trivialized
    if not alive and not relators:
        return {"status": "trivial", "moves": moves,
                "generators_left": 0, "relators_left": 0}
    return {"status": "inconclusive", "moves": moves,
            "generators_left": len(alive), "relators_left": len(relators)}


def connected_components(cw: CWComplexData):
    parent = {v: v for v in cw.cells[0]}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in cw.cells[1]:
        s, t = cw.attach1[e]
        rs, rt = find(s), find(t)
        if rs != rt:
            parent[rs] = rt
    return len({find(v) for v in cw.cells[0]})

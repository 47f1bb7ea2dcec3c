"""Finite strict 2-categories with strict functors, weak natural
transformations, and modifications.

Composition is written diagrammatically throughout this module:
hcomp[(u, v)] is "u then v" and vcomp[(a, b)] is "a then b".  Whiskers are
basic; horizontal composition of 2-cells is derived from them.

Conventions (fixed once, used by every consumer):
  - a 2-cell a has parallel 1-cells src2[a] => dst2[a];
  - wl(u, a) whiskers the 1-cell u on the source side: m(u, f) => m(u, g);
  - wr(a, u) whiskers on the target side: m(f, u) => m(g, u);
  - a weak natural transformation theta: F => G has naturality 2-cells
    theta_f : m(theta_x, G f) => m(F f, theta_y) for f: x -> y.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .fincat import ICatError, ValidationReport, cell_budget


class Fin2Cat:
    def __init__(self, objects, one_cells, id1, hcomp,
                 two_cells, id2, vcomp, wl, wr, name=""):
        self.objects = tuple(objects)
        self.one_cells = dict(one_cells)   # id -> (src obj, dst obj)
        self.id1 = dict(id1)               # obj -> 1-cell id
        self.hcomp = dict(hcomp)           # (u, v) -> u;v
        self.two_cells = dict(two_cells)   # id -> (src 1-cell, dst 1-cell)
        self.id2 = dict(id2)               # 1-cell -> 2-cell id
        self.vcomp = dict(vcomp)           # (a, b) -> a;b
        self.wl = dict(wl)                 # (1-cell, 2-cell) -> 2-cell
        self.wr = dict(wr)                 # (2-cell, 1-cell) -> 2-cell
        self.name = name
        n = len(self.one_cells) + len(self.two_cells)
        if n > cell_budget():
            raise ICatError("cell budget exceeded: %d cells" % n)

    def __repr__(self):
        return "Fin2Cat(%r, %d/%d/%d cells)" % (
            self.name, len(self.objects), len(self.one_cells),
            len(self.two_cells))

    def __eq__(self, other):
        if not isinstance(other, Fin2Cat):
            return NotImplemented
        return (self.objects == other.objects
                and self.one_cells == other.one_cells
                and self.id1 == other.id1 and self.hcomp == other.hcomp
                and self.two_cells == other.two_cells and self.id2 == other.id2
                and self.vcomp == other.vcomp and self.wl == other.wl
                and self.wr == other.wr)

    def __hash__(self):
        return hash((self.objects, tuple(sorted(self.one_cells))))

    # -- raw accessors with composability guards

    def src1(self, u):
        return self.one_cells[u][0]

    def dst1(self, u):
        return self.one_cells[u][1]

    def src2(self, a):
        return self.two_cells[a][0]

    def dst2(self, a):
        return self.two_cells[a][1]

    def m1(self, u, v):
        if self.dst1(u) != self.src1(v):
            raise ICatError("1-cells not composable: %s, %s" % (u, v))
        return self.hcomp[(u, v)]

    def m2(self, a, b):
        if self.dst2(a) != self.src2(b):
            raise ICatError("2-cells not composable: %s, %s" % (a, b))
        return self.vcomp[(a, b)]

    def whisker_l(self, u, a):
        if self.dst1(u) != self.src1(self.src2(a)):
            raise ICatError("left whisker not composable: %s, %s" % (u, a))
        return self.wl[(u, a)]

    def whisker_r(self, a, u):
        if self.dst1(self.src2(a)) != self.src1(u):
            raise ICatError("right whisker not composable: %s, %s" % (a, u))
        return self.wr[(a, u)]

    def inverse2(self, a):
        """Vertical inverse of a 2-cell by table search, or None."""
        f, g = self.two_cells[a]
        for b, (h, k) in self.two_cells.items():
            if h == g and k == f \
                    and self.vcomp.get((a, b)) == self.id2[f] \
                    and self.vcomp.get((b, a)) == self.id2[g]:
                return b
        return None

    def hom1(self, x, y):
        return [u for u, (s, t) in self.one_cells.items() if s == x and t == y]


def validate_2category(t: Fin2Cat) -> ValidationReport:
    report = ValidationReport()
    obj = set(t.objects)
    for u, (s, d) in t.one_cells.items():
        if s not in obj or d not in obj:
            report.add("dangling 1-cell endpoint", u)
    for x in t.objects:
        u = t.id1.get(x)
        if u is None or t.one_cells.get(u) != (x, x):
            report.add("bad identity 1-cell", x)
    for a, (f, g) in t.two_cells.items():
        if f not in t.one_cells or g not in t.one_cells:
            report.add("dangling 2-cell boundary", a)
        elif t.one_cells[f] != t.one_cells[g]:
            report.add("2-cell boundary not parallel", a)
    for f in t.one_cells:
        a = t.id2.get(f)
        if a is None or t.two_cells.get(a) != (f, f):
            report.add("bad identity 2-cell", f)
    if not report.ok:
        return report

    ones = list(t.one_cells)
    twos = list(t.two_cells)

    # horizontal 1-cell structure: totality, typing, units, associativity
    for u in ones:
        for v in ones:
            if t.dst1(u) == t.src1(v):
                w = t.hcomp.get((u, v))
                if w is None or w not in t.one_cells:
                    report.add("missing 1-cell composite", u, v)
                elif t.one_cells[w] != (t.src1(u), t.dst1(v)):
                    report.add("1-cell composite endpoints", u, v)
            elif (u, v) in t.hcomp:
                report.add("1-composition on non-composable pair", u, v)
    if not report.ok:
        return report
    for u in ones:
        if t.hcomp[(t.id1[t.src1(u)], u)] != u:
            report.add("1-cell left unit", u)
        if t.hcomp[(u, t.id1[t.dst1(u)])] != u:
            report.add("1-cell right unit", u)
    for u in ones:
        for v in ones:
            if t.dst1(u) != t.src1(v):
                continue
            uv = t.hcomp[(u, v)]
            for w in ones:
                if t.dst1(v) != t.src1(w):
                    continue
                if t.hcomp[(uv, w)] != t.hcomp[(u, t.hcomp[(v, w)])]:
                    report.add("1-cell associativity", u, v, w)

    # vertical category structure on each hom
    for a in twos:
        for b in twos:
            if t.dst2(a) == t.src2(b):
                c = t.vcomp.get((a, b))
                if c is None or c not in t.two_cells:
                    report.add("missing vertical composite", a, b)
                elif t.two_cells[c] != (t.src2(a), t.dst2(b)):
                    report.add("vertical composite endpoints", a, b)
            elif (a, b) in t.vcomp:
                report.add("vertical composition on non-composable pair", a, b)
    if not report.ok:
        return report
    for a in twos:
        if t.vcomp[(t.id2[t.src2(a)], a)] != a:
            report.add("vertical left unit", a)
        if t.vcomp[(a, t.id2[t.dst2(a)])] != a:
            report.add("vertical right unit", a)
    for a in twos:
        for b in twos:
            if t.dst2(a) != t.src2(b):
                continue
            ab = t.vcomp[(a, b)]
            for c in twos:
                if t.dst2(b) != t.src2(c):
                    continue
                if t.vcomp[(ab, c)] != t.vcomp[(a, t.vcomp[(b, c)])]:
                    report.add("vertical associativity", a, b, c)

    # whisker totality, typing, functoriality, units, composition laws
    for u in ones:
        for a in twos:
            if t.dst1(u) == t.src1(t.src2(a)):
                c = t.wl.get((u, a))
                if c is None:
                    report.add("missing left whisker", u, a)
                elif t.two_cells[c] != (t.hcomp[(u, t.src2(a))],
                                        t.hcomp[(u, t.dst2(a))]):
                    report.add("left whisker endpoints", u, a)
            elif (u, a) in t.wl:
                report.add("left whisker on non-composable pair", u, a)
            if t.dst1(t.src2(a)) == t.src1(u):
                c = t.wr.get((a, u))
                if c is None:
                    report.add("missing right whisker", a, u)
                elif t.two_cells[c] != (t.hcomp[(t.src2(a), u)],
                                        t.hcomp[(t.dst2(a), u)]):
                    report.add("right whisker endpoints", a, u)
            elif (a, u) in t.wr:
                report.add("right whisker on non-composable pair", a, u)
    if not report.ok:
        return report
    for u in ones:
        for f in t.one_cells:
            if t.dst1(u) == t.src1(f):
                if t.wl[(u, t.id2[f])] != t.id2[t.hcomp[(u, f)]]:
                    report.add("left whisker of identity", u, f)
            if t.dst1(f) == t.src1(u):
                if t.wr[(t.id2[f], u)] != t.id2[t.hcomp[(f, u)]]:
                    report.add("right whisker of identity", f, u)
    for a in twos:
        f = t.src2(a)
        x, y = t.one_cells[f]
        if t.wl[(t.id1[x], a)] != a:
            report.add("left whisker unit", a)
        if t.wr[(a, t.id1[y])] != a:
            report.add("right whisker unit", a)
    for u in ones:
        for a in twos:
            for b in twos:
                if t.dst2(a) != t.src2(b):
                    continue
                if t.dst1(u) == t.src1(t.src2(a)):
                    lhs = t.wl[(u, t.vcomp[(a, b)])]
                    rhs = t.vcomp[(t.wl[(u, a)], t.wl[(u, b)])]
                    if lhs != rhs:
                        report.add("left whisker functoriality", u, a, b)
                if t.dst1(t.src2(a)) == t.src1(u):
                    lhs = t.wr[(t.vcomp[(a, b)], u)]
                    rhs = t.vcomp[(t.wr[(a, u)], t.wr[(b, u)])]
                    if lhs != rhs:
                        report.add("right whisker functoriality", u, a, b)
    for u in ones:
        for v in ones:
            if t.dst1(u) != t.src1(v):
                continue
            uv = t.hcomp[(u, v)]
            for a in twos:
                if t.dst1(v) == t.src1(t.src2(a)):
                    if t.wl[(uv, a)] != t.wl[(u, t.wl[(v, a)])]:
                        report.add("left whisker composition", u, v, a)
                if t.dst1(t.src2(a)) == t.src1(u):
                    if t.wr[(a, uv)] != t.wr[(t.wr[(a, u)], v)]:
                        report.add("right whisker composition", a, u, v)
    for u in ones:
        for a in twos:
            for v in ones:
                if t.dst1(u) == t.src1(t.src2(a)) \
                        and t.dst1(t.src2(a)) == t.src1(v):
                    if t.wr[(t.wl[(u, a)], v)] != t.wl[(u, t.wr[(a, v)])]:
                        report.add("whisker order", u, a, v)

    # interchange: the two whisker orders of horizontally adjacent 2-cells
    for a in twos:
        f, g = t.two_cells[a]
        for b in twos:
            h, k = t.two_cells[b]
            if t.dst1(f) != t.src1(h):
                continue
            lhs = t.vcomp[(t.wr[(a, h)], t.wl[(g, b)])]
            rhs = t.vcomp[(t.wl[(f, b)], t.wr[(a, k)])]
            if lhs != rhs:
                report.add("interchange", a, b)
    return report


# ---------------------------------------------------------------------------
# pasting terms


def paste(t: Fin2Cat, term):
    """Evaluate a pasting term to a 2-cell.

    Grammar: ('datum', a) | ('id', f) | ('vcomp', t1, t2)
           | ('wl', u, t) | ('wr', t, u) | ('inv', t)
    """
    kind = term[0]
    if kind == "datum":
        a = term[1]
        if a not in t.two_cells:
            raise ICatError("unknown 2-cell %s" % a)
        return a
    if kind == "id":
        return t.id2[term[1]]
    if kind == "vcomp":
        return t.m2(paste(t, term[1]), paste(t, term[2]))
    if kind == "wl":
        return t.whisker_l(term[1], paste(t, term[2]))
    if kind == "wr":
        return t.whisker_r(paste(t, term[1]), term[2])
    if kind == "inv":
        a = paste(t, term[1])
        inv = t.inverse2(a)
        if inv is None:
            raise ICatError("2-cell %s is not invertible" % a)
        return inv
    raise ICatError("bad pasting term %r" % (term,))


# ---------------------------------------------------------------------------
# strict 2-functors


class Strict2Functor:
    def __init__(self, source: Fin2Cat, target: Fin2Cat,
                 obj_map, map1, map2, name=""):
        self.source = source
        self.target = target
        self.obj_map = dict(obj_map)
        self.map1 = dict(map1)
        self.map2 = dict(map2)
        self.name = name

    def __repr__(self):
        return "Strict2Functor(%r)" % self.name

    def __eq__(self, other):
        if not isinstance(other, Strict2Functor):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.obj_map == other.obj_map and self.map1 == other.map1
                and self.map2 == other.map2)

    def on_obj(self, x):
        return self.obj_map[x]

    def on1(self, u):
        return self.map1[u]

    def on2(self, a):
        return self.map2[a]


def check_2functor(F: Strict2Functor) -> ValidationReport:
    report = ValidationReport()
    a, b = F.source, F.target
    for x in a.objects:
        if F.obj_map.get(x) not in set(b.objects):
            report.add("dangling object image", x)
    for u in a.one_cells:
        v = F.map1.get(u)
        if v not in b.one_cells:
            report.add("dangling 1-cell image", u)
        elif b.one_cells[v] != (F.obj_map[a.src1(u)], F.obj_map[a.dst1(u)]):
            report.add("1-cell image endpoints", u)
    for c in a.two_cells:
        d = F.map2.get(c)
        if d not in b.two_cells:
            report.add("dangling 2-cell image", c)
        elif b.two_cells[d] != (F.map1[a.src2(c)], F.map1[a.dst2(c)]):
            report.add("2-cell image boundary", c)
    if not report.ok:
        return report
    for x in a.objects:
        if F.map1[a.id1[x]] != b.id1[F.obj_map[x]]:
            report.add("identity 1-cell not preserved", x)
    for f in a.one_cells:
        if F.map2[a.id2[f]] != b.id2[F.map1[f]]:
            report.add("identity 2-cell not preserved", f)
    for (u, v), w in a.hcomp.items():
        if b.hcomp[(F.map1[u], F.map1[v])] != F.map1[w]:
            report.add("horizontal composition not preserved", u, v)
    for (c, d), e in a.vcomp.items():
        if b.vcomp[(F.map2[c], F.map2[d])] != F.map2[e]:
            report.add("vertical composition not preserved", c, d)
    for (u, c), e in a.wl.items():
        if b.wl[(F.map1[u], F.map2[c])] != F.map2[e]:
            report.add("left whisker not preserved", u, c)
    for (c, u), e in a.wr.items():
        if b.wr[(F.map2[c], F.map1[u])] != F.map2[e]:
            report.add("right whisker not preserved", c, u)
    return report


def identity_2functor(t: Fin2Cat) -> Strict2Functor:
    return Strict2Functor(t, t, {x: x for x in t.objects},
                          {u: u for u in t.one_cells},
                          {a: a for a in t.two_cells}, name="id")


def compose_2functors(F: Strict2Functor, G: Strict2Functor) -> Strict2Functor:
    """F then G (diagrammatic)."""
    if F.target != G.source:
        raise ICatError("2-functor composition mismatch")
    return Strict2Functor(
        F.source, G.target,
        {x: G.obj_map[F.obj_map[x]] for x in F.source.objects},
        {u: G.map1[F.map1[u]] for u in F.source.one_cells},
        {a: G.map2[F.map2[a]] for a in F.source.two_cells})


# ---------------------------------------------------------------------------
# weak natural transformations and modifications


class WeakNatTrans:
    def __init__(self, source: Strict2Functor, target: Strict2Functor,
                 comp1, comp2, name=""):
        self.source = source
        self.target = target
        self.comp1 = dict(comp1)  # object -> 1-cell of the target 2-cat
        self.comp2 = dict(comp2)  # 1-cell f -> naturality 2-cell theta_f
        self.name = name

    def __repr__(self):
        return "WeakNatTrans(%r)" % self.name

    def __eq__(self, other):
        if not isinstance(other, WeakNatTrans):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.comp1 == other.comp1 and self.comp2 == other.comp2)

    def at(self, x):
        return self.comp1[x]

    def at1(self, f):
        return self.comp2[f]

    @property
    def is_strict(self):
        """All naturality 2-cells are identities."""
        b = self.source.target
        return all(b.two_cells[c][0] == b.two_cells[c][1]
                   and c == b.id2[b.two_cells[c][0]]
                   for c in self.comp2.values())


def check_weak_nat(theta: WeakNatTrans) -> ValidationReport:
    report = ValidationReport()
    F, G = theta.source, theta.target
    if F.source != G.source or F.target != G.target:
        report.add("2-functors not parallel")
        return report
    a, b = F.source, F.target
    for x in a.objects:
        u = theta.comp1.get(x)
        if u not in b.one_cells:
            report.add("dangling component 1-cell", x)
        elif b.one_cells[u] != (F.obj_map[x], G.obj_map[x]):
            report.add("component 1-cell endpoints", x)
    if not report.ok:
        return report
    for f, (x, y) in a.one_cells.items():
        c = theta.comp2.get(f)
        want = (b.hcomp[(theta.comp1[x], G.map1[f])],
                b.hcomp[(F.map1[f], theta.comp1[y])])
        if c not in b.two_cells:
            report.add("dangling naturality 2-cell", f)
        elif b.two_cells[c] != want:
            report.add("naturality 2-cell boundary", f)
        elif b.inverse2(c) is None:
            report.add("naturality 2-cell not invertible", f)
    if not report.ok:
        return report
    for x in a.objects:
        if theta.comp2[a.id1[x]] != b.id2[theta.comp1[x]]:
            report.add("identity coherence", x)
    for f, (x, y) in a.one_cells.items():
        for g, (y2, z) in a.one_cells.items():
            if y != y2:
                continue
            fg = a.hcomp[(f, g)]
            pasted = b.vcomp[(b.wr[(theta.comp2[f], G.map1[g])],
                              b.wl[(F.map1[f], theta.comp2[g])])]
            if theta.comp2[fg] != pasted:
                report.add("composite coherence", f, g)
    # compatibility with the 2-cells of the source
    for c, (f, f2) in F.source.two_cells.items():
        x, y = a.one_cells[f]
        lhs = b.vcomp[(b.wl[(theta.comp1[x], G.map2[c])], theta.comp2[f2])]
        rhs = b.vcomp[(theta.comp2[f], b.wr[(F.map2[c], theta.comp1[y])])]
        if lhs != rhs:
            report.add("2-cell naturality", c)
    return report


def identity_weak_nat(F: Strict2Functor) -> WeakNatTrans:
    b = F.target
    comp1 = {x: b.id1[F.obj_map[x]] for x in F.source.objects}
    comp2 = {f: b.id2[F.map1[f]] for f in F.source.one_cells}
    return WeakNatTrans(F, F, comp1, comp2, name="id")


class Modification:
    def __init__(self, source: WeakNatTrans, target: WeakNatTrans,
                 components, name=""):
        self.source = source
        self.target = target
        self.components = dict(components)  # object -> 2-cell
        self.name = name

    def __repr__(self):
        return "Modification(%r)" % self.name

    def __eq__(self, other):
        if not isinstance(other, Modification):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.components == other.components)

    def at(self, x):
        return self.components[x]


def check_modification(m: Modification) -> ValidationReport:
    report = ValidationReport()
    theta, psi = m.source, m.target
    if theta.source != psi.source or theta.target != psi.target:
        report.add("transformations not parallel")
        return report
    F, G = theta.source, theta.target
    a, b = F.source, F.target
    for x in a.objects:
        c = m.components.get(x)
        if c not in b.two_cells:
            report.add("dangling component 2-cell", x)
        elif b.two_cells[c] != (theta.comp1[x], psi.comp1[x]):
            report.add("component 2-cell boundary", x)
    if not report.ok:
        return report
    for f, (x, y) in a.one_cells.items():
        lhs = b.vcomp[(b.wr[(m.components[x], G.map1[f])], psi.comp2[f])]
        rhs = b.vcomp[(theta.comp2[f], b.wl[(F.map1[f], m.components[y])])]
        if lhs != rhs:
            report.add("modification square", f)
    return report


def identity_modification(theta: WeakNatTrans) -> Modification:
    b = theta.source.target
    return Modification(theta, theta,
                        {x: b.id2[u] for x, u in theta.comp1.items()},
                        name="id")


def compose_weaknat_source_first(sigma: WeakNatTrans, tau: WeakNatTrans):
    """The composite H F => K G taking sigma first: x -> m(H sigma_x, tau_Gx)."""
    F, G = sigma.source, sigma.target
    H, K = tau.source, tau.target
    if F.target != H.source:
        raise ICatError("transformations do not compose")
    a = F.source
    c = H.target
    FH = compose_2functors(F, H)
    GK = compose_2functors(G, K)
    comp1 = {x: c.hcomp[(H.map1[sigma.comp1[x]], tau.comp1[G.obj_map[x]])]
             for x in a.objects}
    comp2 = {}
    for f, (x, y) in a.one_cells.items():
        first = c.wl[(H.map1[sigma.comp1[x]], tau.comp2[G.map1[f]])]
        second = c.wr[(H.map2[sigma.comp2[f]], tau.comp1[G.obj_map[y]])]
        comp2[f] = c.vcomp[(first, second)]
    return WeakNatTrans(FH, GK, comp1, comp2,
                        name="(%s|%s)" % (sigma.name, tau.name))


def compose_weaknat_target_first(sigma: WeakNatTrans, tau: WeakNatTrans):
    """The composite H F => K G taking tau first: x -> m(tau_Fx, K sigma_x)."""
    F, G = sigma.source, sigma.target
    H, K = tau.source, tau.target
    if F.target != H.source:
        raise ICatError("transformations do not compose")
    a = F.source
    c = H.target
    FH = compose_2functors(F, H)
    GK = compose_2functors(G, K)
    comp1 = {x: c.hcomp[(tau.comp1[F.obj_map[x]], K.map1[sigma.comp1[x]])]
             for x in a.objects}
    comp2 = {}
    for f, (x, y) in a.one_cells.items():
        first = c.wl[(tau.comp1[F.obj_map[x]], K.map2[sigma.comp2[f]])]
        second = c.wr[(tau.comp2[F.map1[f]], K.map1[sigma.comp1[y]])]
        comp2[f] = c.vcomp[(first, second)]
    return WeakNatTrans(FH, GK, comp1, comp2,
                        name="(%s/%s)" % (sigma.name, tau.name))


def switch_modification(sigma: WeakNatTrans, tau: WeakNatTrans) -> Modification:
    """The canonical modification between the two whisker-composites of
    sigma: F => G: A -> B and tau: H => K: B -> C, with components the
    naturality 2-cells of tau at the components of sigma."""
    if sigma.source.target != tau.source.source:
        raise ICatError("switch: shapes do not compose")
    chi_b = compose_weaknat_target_first(sigma, tau)
    chi_a = compose_weaknat_source_first(sigma, tau)
    comps = {x: tau.comp2[sigma.comp1[x]] for x in sigma.source.source.objects}
    return Modification(chi_b, chi_a, comps, name="sw")


# ---------------------------------------------------------------------------
# pullbacks of 2-categories


def pair2(a, b):
    return "(%s|%s)" % (a, b)


def pullback_2cat(F: Strict2Functor, G: Strict2Functor):
    """Strict pullback of 2-categories along F: A -> C and G: B -> C."""
    if F.target != G.target:
        raise ICatError("pullback: codomain mismatch")
    a, b = F.source, G.source
    objs = [(x, y) for x in a.objects for y in b.objects
            if F.obj_map[x] == G.obj_map[y]]
    ones = [(u, v) for u in a.one_cells for v in b.one_cells
            if F.map1[u] == G.map1[v]]
    twos = [(c, d) for c in a.two_cells for d in b.two_cells
            if F.map2[c] == G.map2[d]]
    if len(ones) + len(twos) > cell_budget():
        raise ICatError("cell budget exceeded in 2-pullback")
    one_cells = {pair2(u, v): (pair2(a.src1(u), b.src1(v)),
                               pair2(a.dst1(u), b.dst1(v))) for u, v in ones}
    id1 = {pair2(x, y): pair2(a.id1[x], b.id1[y]) for x, y in objs}
    hcomp = {}
    for u1, v1 in ones:
        for u2, v2 in ones:
            if a.dst1(u1) == a.src1(u2) and b.dst1(v1) == b.src1(v2):
                hcomp[(pair2(u1, v1), pair2(u2, v2))] = \
                    pair2(a.hcomp[(u1, u2)], b.hcomp[(v1, v2)])
    two_cells = {pair2(c, d): (pair2(a.src2(c), b.src2(d)),
                               pair2(a.dst2(c), b.dst2(d))) for c, d in twos}
    id2 = {pair2(u, v): pair2(a.id2[u], b.id2[v]) for u, v in ones}
    vcomp = {}
    for c1, d1 in twos:
        for c2, d2 in twos:
            if a.dst2(c1) == a.src2(c2) and b.dst2(d1) == b.src2(d2):
                vcomp[(pair2(c1, d1), pair2(c2, d2))] = \
                    pair2(a.vcomp[(c1, c2)], b.vcomp[(d1, d2)])
    wl = {}
    wr = {}
    for u, v in ones:
        for c, d in twos:
            if a.dst1(u) == a.src1(a.src2(c)) and b.dst1(v) == b.src1(b.src2(d)):
                wl[(pair2(u, v), pair2(c, d))] = \
                    pair2(a.wl[(u, c)], b.wl[(v, d)])
            if a.dst1(a.src2(c)) == a.src1(u) and b.dst1(b.src2(d)) == b.src1(v):
                wr[(pair2(c, d), pair2(u, v))] = \
                    pair2(a.wr[(c, u)], b.wr[(d, v)])
    P = Fin2Cat([pair2(x, y) for x, y in objs], one_cells, id1, hcomp,
                two_cells, id2, vcomp, wl, wr,
                name="pb(%s,%s)" % (a.name, b.name))
    p1 = Strict2Functor(P, a, {pair2(x, y): x for x, y in objs},
                        {pair2(u, v): u for u, v in ones},
                        {pair2(c, d): c for c, d in twos}, name="pr1")
    p2 = Strict2Functor(P, b, {pair2(x, y): y for x, y in objs},
                        {pair2(u, v): v for u, v in ones},
                        {pair2(c, d): d for c, d in twos}, name="pr2")
    return P, p1, p2


# ---------------------------------------------------------------------------
# builders


def terminal_2cat() -> Fin2Cat:
    return Fin2Cat(["*"], {"u": ("*", "*")}, {"*": "u"}, {("u", "u"): "u"},
                   {"a": ("u", "u")}, {"u": "a"}, {("a", "a"): "a"},
                   {("u", "a"): "a"}, {("a", "u"): "a"}, name="1")


def delooping_2cat(names, table, name="B2G") -> Fin2Cat:
    """One object, 1-cells a group/monoid table, identity 2-cells only."""
    unit = None
    for e in names:
        if all(table[(e, g)] == g and table[(g, e)] == g for g in names):
            unit = e
            break
    if unit is None:
        raise ICatError("delooping: no unit")
    one_cells = {g: ("*", "*") for g in names}
    hcomp = {(u, v): table[(u, v)] for u in names for v in names}
    two_cells = {"i_%s" % g: (g, g) for g in names}
    id2 = {g: "i_%s" % g for g in names}
    vcomp = {(id2[g], id2[g]): id2[g] for g in names}
    wl = {(u, id2[v]): id2[table[(u, v)]] for u in names for v in names}
    wr = {(id2[u], v): id2[table[(u, v)]] for u in names for v in names}
    return Fin2Cat(["*"], one_cells, {"*": unit}, hcomp,
                   two_cells, id2, vcomp, wl, wr, name=name)


def group_pair_2cat(names, table, hnames, htable, name="B2GH") -> Fin2Cat:
    """One object; 1-cells a group G; hom(f, f) an abelian group H for every
    1-cell f, with whiskering acting trivially on the H part."""
    hunit = None
    for e in hnames:
        if all(htable[(e, a)] == a and htable[(a, e)] == a for a in hnames):
            hunit = e
            break
    unit = None
    for e in names:
        if all(table[(e, g)] == g and table[(g, e)] == g for g in names):
            unit = e
            break
    if hunit is None or unit is None:
        raise ICatError("group_pair_2cat: missing unit")
    def two(g, h):
        return "%s^%s" % (g, h)
    one_cells = {g: ("*", "*") for g in names}
    hcomp = {(u, v): table[(u, v)] for u in names for v in names}
    two_cells = {two(g, h): (g, g) for g in names for h in hnames}
    id2 = {g: two(g, hunit) for g in names}
    vcomp = {(two(g, h1), two(g, h2)): two(g, htable[(h1, h2)])
             for g in names for h1 in hnames for h2 in hnames}
    wl = {(u, two(g, h)): two(table[(u, g)], h)
          for u in names for g in names for h in hnames}
    wr = {(two(g, h), u): two(table[(g, u)], h)
          for g in names for u in names for h in hnames}
    return Fin2Cat(["*"], one_cells, {"*": unit}, hcomp,
                   two_cells, id2, vcomp, wl, wr, name=name)


def walking_2iso() -> Fin2Cat:
    """Two objects, parallel 1-cells f, g, an invertible 2-cell between them."""
    objects = ["x", "y"]
    one_cells = {"1x": ("x", "x"), "1y": ("y", "y"),
                 "f": ("x", "y"), "g": ("x", "y")}
    id1 = {"x": "1x", "y": "1y"}
    hcomp = {}
    for u, (su, du) in one_cells.items():
        for v, (sv, dv) in one_cells.items():
            if du != sv:
                continue
            if u in ("1x", "1y"):
                hcomp[(u, v)] = v
            elif v in ("1x", "1y"):
                hcomp[(u, v)] = u
    two_cells = {"i1x": ("1x", "1x"), "i1y": ("1y", "1y"),
                 "if": ("f", "f"), "ig": ("g", "g"),
                 "al": ("f", "g"), "al_inv": ("g", "f")}
    id2 = {"1x": "i1x", "1y": "i1y", "f": "if", "g": "ig"}
    vcomp = {}
    homxy = {("f", "f"): "if", ("f", "g"): "al", ("g", "f"): "al_inv",
             ("g", "g"): "ig"}
    cell_of = {v: k for k, v in homxy.items()}
    for a, (fa, ga) in two_cells.items():
        for b, (fb, gb) in two_cells.items():
            if ga != fb:
                continue
            if a in ("i1x", "i1y"):
                vcomp[(a, b)] = b
            elif b in ("i1x", "i1y"):
                vcomp[(a, b)] = a
            else:
                vcomp[(a, b)] = homxy[(fa, gb)]
    wl = {}
    wr = {}
    id_cells = {"i1x", "i1y", "if", "ig"}
    cell_of_id = {"i1x": "1x", "i1y": "1y", "if": "f", "ig": "g"}
    for u, (su, du) in one_cells.items():
        for a, (f, g) in two_cells.items():
            if du == one_cells[f][0]:
                if u in ("1x", "1y"):
                    wl[(u, a)] = a
                else:
                    # u nontrivial forces a to be an identity 2-cell here
                    assert a in id_cells
                    wl[(u, a)] = id2[hcomp[(u, cell_of_id[a])]]
            if one_cells[f][1] == su:
                if u in ("1x", "1y"):
                    wr[(a, u)] = a
                else:
                    assert a in id_cells
                    wr[(a, u)] = id2[hcomp[(cell_of_id[a], u)]]
    return Fin2Cat(objects, one_cells, id1, hcomp, two_cells, id2,
                   vcomp, wl, wr, name="walking2iso")

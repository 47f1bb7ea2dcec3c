"""Finite categories as explicit composition tables.

Everything here is a plain finite table: objects and morphisms are interned
strings, composition is a dict keyed by composable pairs, and every law is
checked exhaustively.  Categories compare on the nose; there is no
equivalence-invariant comparison anywhere.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field


DEFAULT_CELL_BUDGET = 10 ** 5


def cell_budget() -> int:
    return int(os.environ.get("ICAT_CELL_BUDGET", DEFAULT_CELL_BUDGET))


class ICatError(Exception):
    """Hard usage error: malformed input, non-composable lookup, size guard."""


@dataclass(frozen=True)
class Violation:
    law: str
    witness: tuple

    def __str__(self):
        return "%s at %s" % (self.law, ",".join(map(str, self.witness)))


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)

    def add(self, law, *witness):
        self.violations.append(Violation(law, witness))

    @property
    def ok(self):
        return not self.violations

    def lines(self):
        return ["VIOLATION %s" % v for v in self.violations]

    def __bool__(self):
        return self.ok


class FinCat:
    """A finite category: objects, morphisms, src/dst, identities, comp table.

    comp is keyed by (g, f) with dst(f) == src(g) and means the classical
    g after f, so src(comp[g,f]) == src(f).
    """

    def __init__(self, objects, morphisms, src, dst, id_of, comp, name=""):
        self.objects = tuple(objects)
        self.morphisms = tuple(morphisms)
        self.src = dict(src)
        self.dst = dict(dst)
        self.id_of = dict(id_of)
        self.comp = dict(comp)
        self.name = name
        if len(self.morphisms) > cell_budget():
            raise ICatError(
                "cell budget exceeded: %d morphisms" % len(self.morphisms))
        self._obj_set = frozenset(self.objects)
        self._mor_set = frozenset(self.morphisms)

    def __repr__(self):
        return "FinCat(%r, %d objects, %d morphisms)" % (
            self.name, len(self.objects), len(self.morphisms))

    def __eq__(self, other):
        if not isinstance(other, FinCat):
            return NotImplemented
        return (self.objects == other.objects
                and self.morphisms == other.morphisms
                and self.src == other.src and self.dst == other.dst
                and self.id_of == other.id_of and self.comp == other.comp)

    def __hash__(self):
        return hash((self.objects, self.morphisms))

    def has_object(self, x):
        return x in self._obj_set

    def has_morphism(self, f):
        return f in self._mor_set

    def compose(self, g, f):
        """g after f.  Non-composable lookups are hard errors, never silent."""
        if self.dst[f] != self.src[g]:
            raise ICatError("composition on non-composable pair (%s, %s)" % (g, f))
        return self.comp[(g, f)]

    def hom(self, x, y):
        return [f for f in self.morphisms
                if self.src[f] == x and self.dst[f] == y]

    def is_identity(self, f):
        return self.id_of.get(self.src[f]) == f and self.src[f] == self.dst[f]

    def inverse_of(self, f):
        """Two-sided inverse found by table search, or None."""
        x, y = self.src[f], self.dst[f]
        for g in self.hom(y, x):
            if (self.comp.get((g, f)) == self.id_of[x]
                    and self.comp.get((f, g)) == self.id_of[y]):
                return g
        return None


def validate_category(c: FinCat) -> ValidationReport:
    report = ValidationReport()
    if len(set(c.objects)) != len(c.objects):
        report.add("duplicate object id", "objects")
    if len(set(c.morphisms)) != len(c.morphisms):
        report.add("duplicate morphism id", "morphisms")
    for f in c.morphisms:
        if f not in c.src or f not in c.dst:
            report.add("missing src/dst", f)
            continue
        if c.src[f] not in c._obj_set or c.dst[f] not in c._obj_set:
            report.add("dangling endpoint", f)
    for x in c.objects:
        i = c.id_of.get(x)
        if i is None or i not in c._mor_set:
            report.add("missing identity", x)
        elif not (c.src[i] == x and c.dst[i] == x):
            report.add("identity has wrong endpoints", x, i)
    if not report.ok:
        return report
    # composition table totality and typing
    for g in c.morphisms:
        for f in c.morphisms:
            composable = c.dst[f] == c.src[g]
            entry = c.comp.get((g, f))
            if composable:
                if entry is None:
                    report.add("missing composite", g, f)
                elif entry not in c._mor_set:
                    report.add("dangling composite", g, f)
                elif not (c.src[entry] == c.src[f] and c.dst[entry] == c.dst[g]):
                    report.add("composite has wrong endpoints", g, f)
            elif entry is not None:
                report.add("composition on non-composable pair", g, f)
    if not report.ok:
        return report
    for f in c.morphisms:
        if c.comp[(f, c.id_of[c.src[f]])] != f:
            report.add("right identity law", f)
        if c.comp[(c.id_of[c.dst[f]], f)] != f:
            report.add("left identity law", f)
    for h in c.morphisms:
        for g in c.morphisms:
            if c.src[h] != c.dst[g]:
                continue
            hg = c.comp[(h, g)]
            for f in c.morphisms:
                if c.src[g] != c.dst[f]:
                    continue
                if c.comp[(hg, f)] != c.comp[(h, c.comp[(g, f)])]:
                    report.add("associativity", h, g, f)
    return report


def is_groupoid(c: FinCat) -> bool:
    return all(c.inverse_of(f) is not None for f in c.morphisms)


class FinFunctor:
    """A functor given by explicit object and morphism maps."""

    def __init__(self, source: FinCat, target: FinCat, obj_map, mor_map, name=""):
        self.source = source
        self.target = target
        self.obj_map = dict(obj_map)
        self.mor_map = dict(mor_map)
        self.name = name

    def __repr__(self):
        return "FinFunctor(%r: %r -> %r)" % (self.name, self.source.name,
                                             self.target.name)

    def __eq__(self, other):
        if not isinstance(other, FinFunctor):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.obj_map == other.obj_map
                and self.mor_map == other.mor_map)

    def __hash__(self):
        return hash((len(self.obj_map), len(self.mor_map)))

    def on_obj(self, x):
        return self.obj_map[x]

    def on_mor(self, f):
        return self.mor_map[f]


def check_functor(F: FinFunctor) -> ValidationReport:
    report = ValidationReport()
    c, d = F.source, F.target
    for x in c.objects:
        if F.obj_map.get(x) not in d._obj_set:
            report.add("dangling object image", x)
    for f in c.morphisms:
        if F.mor_map.get(f) not in d._mor_set:
            report.add("dangling morphism image", f)
    if not report.ok:
        return report
    for f in c.morphisms:
        g = F.mor_map[f]
        if d.src[g] != F.obj_map[c.src[f]]:
            report.add("src not preserved", f)
        if d.dst[g] != F.obj_map[c.dst[f]]:
            report.add("dst not preserved", f)
    for x in c.objects:
        if F.mor_map[c.id_of[x]] != d.id_of[F.obj_map[x]]:
            report.add("identity not preserved", x)
    for g in c.morphisms:
        for f in c.morphisms:
            if c.dst[f] != c.src[g]:
                continue
            if F.mor_map[c.comp[(g, f)]] != d.comp[(F.mor_map[g], F.mor_map[f])]:
                report.add("composition not preserved", g, f)
    return report


def identity_functor(c: FinCat) -> FinFunctor:
    return FinFunctor(c, c, {x: x for x in c.objects},
                      {f: f for f in c.morphisms}, name="id")


def compose_functors(G: FinFunctor, F: FinFunctor) -> FinFunctor:
    """G after F."""
    if F.target != G.source:
        raise ICatError("functor composition: codomain mismatch")
    return FinFunctor(F.source, G.target,
                      {x: G.obj_map[F.obj_map[x]] for x in F.source.objects},
                      {f: G.mor_map[F.mor_map[f]] for f in F.source.morphisms})


class NatTrans:
    """A natural transformation F => G with one component per object."""

    def __init__(self, source: FinFunctor, target: FinFunctor, components):
        self.source = source
        self.target = target
        self.components = dict(components)

    def __repr__(self):
        return "NatTrans(%d components)" % len(self.components)

    def __eq__(self, other):
        if not isinstance(other, NatTrans):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.components == other.components)

    def at(self, x):
        return self.components[x]

    @property
    def iso_flag(self):
        d = self.source.target
        return all(d.inverse_of(m) is not None for m in self.components.values())


def check_natural(t: NatTrans) -> ValidationReport:
    report = ValidationReport()
    F, G = t.source, t.target
    if F.source != G.source or F.target != G.target:
        report.add("functors not parallel")
        return report
    c, d = F.source, F.target
    for x in c.objects:
        m = t.components.get(x)
        if m is None or not d.has_morphism(m):
            report.add("dangling component", x)
        elif not (d.src[m] == F.obj_map[x] and d.dst[m] == G.obj_map[x]):
            report.add("component has wrong endpoints", x)
    if not report.ok:
        return report
    for f in c.morphisms:
        x, y = c.src[f], c.dst[f]
        lhs = d.comp[(t.components[y], F.mor_map[f])]
        rhs = d.comp[(G.mor_map[f], t.components[x])]
        if lhs != rhs:
            report.add("naturality square", f)
    return report


def identity_nat(F: FinFunctor) -> NatTrans:
    d = F.target
    return NatTrans(F, F, {x: d.id_of[F.obj_map[x]] for x in F.source.objects})


def vcomp_nat(t1: NatTrans, t2: NatTrans) -> NatTrans:
    """t1 then t2 (so t2 after t1); t1: F=>G, t2: G=>H gives F=>H."""
    if t1.target != t2.source:
        raise ICatError("vertical composition: endpoints mismatch")
    d = t1.source.target
    return NatTrans(t1.source, t2.target,
                    {x: d.comp[(t2.components[x], t1.components[x])]
                     for x in t1.source.source.objects})


def inverse_nat(t: NatTrans) -> NatTrans:
    d = t.source.target
    comps = {}
    for x, m in t.components.items():
        inv = d.inverse_of(m)
        if inv is None:
            raise ICatError("transformation is not invertible at %s" % x)
        comps[x] = inv
    return NatTrans(t.target, t.source, comps)


def whisker_functor_nat(H: FinFunctor, t: NatTrans) -> NatTrans:
    """H applied after t: H.F => H.G with components H(t_x)."""
    if t.source.target != H.source:
        raise ICatError("whisker: endpoints mismatch")
    return NatTrans(compose_functors(H, t.source), compose_functors(H, t.target),
                    {x: H.mor_map[m] for x, m in t.components.items()})


def whisker_nat_functor(t: NatTrans, K: FinFunctor) -> NatTrans:
    """t precomposed with K: F.K => G.K with components t_{K(x)}."""
    if K.target != t.source.source:
        raise ICatError("whisker: endpoints mismatch")
    return NatTrans(compose_functors(t.source, K), compose_functors(t.target, K),
                    {x: t.components[K.obj_map[x]] for x in K.source.objects})


def is_fibration(F: FinFunctor) -> bool:
    """Every base arrow into an image object has an invertible lift.

    The target must be a groupoid; anything else is a usage error.
    """
    if not is_groupoid(F.target):
        raise ICatError("target not a groupoid")
    c, d = F.source, F.target
    for f in d.morphisms:
        b, b2 = d.src[f], d.dst[f]
        for a2 in c.objects:
            if F.obj_map[a2] != b2:
                continue
            found = False
            for g in c.morphisms:
                if c.dst[g] != a2 or F.mor_map[g] != f:
                    continue
                if c.inverse_of(g) is not None:
                    found = True
                    break
            if not found:
                return False
    return True


def pair_id(a, b):
    return "(%s|%s)" % (a, b)


def pullback(F: FinFunctor, G: FinFunctor):
    """Strict pullback of F: A -> C and G: B -> C in CAT.

    Returns (P, p1, p2) where P has pair objects/morphisms agreeing on the
    nose in C.  No up-to-iso relaxation.
    """
    if F.target != G.target:
        raise ICatError("pullback: codomain mismatch")
    a, b = F.source, G.source
    objs = [(x, y) for x in a.objects for y in b.objects
            if F.obj_map[x] == G.obj_map[y]]
    mors = [(f, g) for f in a.morphisms for g in b.morphisms
            if F.mor_map[f] == G.mor_map[g]]
    if len(mors) > cell_budget():
        raise ICatError("cell budget exceeded in pullback")
    src = {pair_id(f, g): pair_id(a.src[f], b.src[g]) for f, g in mors}
    dst = {pair_id(f, g): pair_id(a.dst[f], b.dst[g]) for f, g in mors}
    id_of = {pair_id(x, y): pair_id(a.id_of[x], b.id_of[y]) for x, y in objs}
    comp = {}
    for f2, g2 in mors:
        for f1, g1 in mors:
            if a.dst[f1] == a.src[f2] and b.dst[g1] == b.src[g2]:
                comp[(pair_id(f2, g2), pair_id(f1, g1))] = \
                    pair_id(a.comp[(f2, f1)], b.comp[(g2, g1)])
    P = FinCat([pair_id(x, y) for x, y in objs],
               [pair_id(f, g) for f, g in mors],
               src, dst, id_of, comp,
               name="pb(%s,%s)" % (a.name, b.name))
    p1 = FinFunctor(P, a, {pair_id(x, y): x for x, y in objs},
                    {pair_id(f, g): f for f, g in mors}, name="pr1")
    p2 = FinFunctor(P, b, {pair_id(x, y): y for x, y in objs},
                    {pair_id(f, g): g for f, g in mors}, name="pr2")
    return P, p1, p2


# ---------------------------------------------------------------------------
# small builders used throughout the test corpus


def terminal_category() -> FinCat:
    return FinCat(["*"], ["id*"], {"id*": "*"}, {"id*": "*"}, {"*": "id*"},
                  {("id*", "id*"): "id*"}, name="1")


def discrete_category(names, prefix="") -> FinCat:
    names = list(names)
    ids = {x: "%sid_%s" % (prefix, x) for x in names}
    return FinCat(names, list(ids.values()),
                  {ids[x]: x for x in names}, {ids[x]: x for x in names},
                  ids, {(ids[x], ids[x]): ids[x] for x in names},
                  name="disc")


def walking_arrow() -> FinCat:
    return FinCat(["a", "b"], ["ida", "idb", "f"],
                  {"ida": "a", "idb": "b", "f": "a"},
                  {"ida": "a", "idb": "b", "f": "b"},
                  {"a": "ida", "b": "idb"},
                  {("ida", "ida"): "ida", ("idb", "idb"): "idb",
                   ("f", "ida"): "f", ("idb", "f"): "f"},
                  name="arrow")


def walking_iso() -> FinCat:
    comp = {("ida", "ida"): "ida", ("idb", "idb"): "idb",
            ("f", "ida"): "f", ("idb", "f"): "f",
            ("g", "idb"): "g", ("ida", "g"): "g",
            ("g", "f"): "ida", ("f", "g"): "idb"}
    return FinCat(["a", "b"], ["ida", "idb", "f", "g"],
                  {"ida": "a", "idb": "b", "f": "a", "g": "b"},
                  {"ida": "a", "idb": "b", "f": "b", "g": "a"},
                  {"a": "ida", "b": "idb"}, comp, name="iso")


def cyclic_group_table(n):
    """Multiplication table of Z/n with elements g0..g{n-1}."""
    names = ["g%d" % k for k in range(n)]
    table = {(names[i], names[j]): names[(i + j) % n]
             for i in range(n) for j in range(n)}
    return names, table


def delooping(names, table, name="BG") -> FinCat:
    """One-object category with morphisms a monoid/group table.

    table[(a, b)] is a*b; composition comp(g, f) = g after f = table[g, f].
    """
    unit = None
    for e in names:
        if all(table[(e, a)] == a and table[(a, e)] == a for a in names):
            unit = e
            break
    if unit is None:
        raise ICatError("delooping: table has no unit")
    return FinCat(["*"], list(names),
                  {m: "*" for m in names}, {m: "*" for m in names},
                  {"*": unit},
                  {(g, f): table[(g, f)] for g in names for f in names},
                  name=name)


def disjoint_union(c: FinCat, d: FinCat, tags=("L", "R")) -> FinCat:
    t1, t2 = tags
    def o1(x): return "%s_%s" % (t1, x)
    def o2(x): return "%s_%s" % (t2, x)
    objects = [o1(x) for x in c.objects] + [o2(x) for x in d.objects]
    morphisms = [o1(f) for f in c.morphisms] + [o2(f) for f in d.morphisms]
    src = {o1(f): o1(c.src[f]) for f in c.morphisms}
    src.update({o2(f): o2(d.src[f]) for f in d.morphisms})
    dst = {o1(f): o1(c.dst[f]) for f in c.morphisms}
    dst.update({o2(f): o2(d.dst[f]) for f in d.morphisms})
    id_of = {o1(x): o1(c.id_of[x]) for x in c.objects}
    id_of.update({o2(x): o2(d.id_of[x]) for x in d.objects})
    comp = {(o1(g), o1(f)): o1(h) for (g, f), h in c.comp.items()}
    comp.update({(o2(g), o2(f)): o2(h) for (g, f), h in d.comp.items()})
    return FinCat(objects, morphisms, src, dst, id_of, comp,
                  name="%s+%s" % (c.name, d.name))


def product_category(c: FinCat, d: FinCat) -> FinCat:
    """Binary product, realized as the pullback over the terminal category."""
    t = terminal_category()
    to_t_c = FinFunctor(c, t, {x: "*" for x in c.objects},
                        {f: "id*" for f in c.morphisms})
    to_t_d = FinFunctor(d, t, {x: "*" for x in d.objects},
                        {f: "id*" for f in d.morphisms})
    P, _, _ = pullback(to_t_c, to_t_d)
    return P


def functor_from_group_hom(dom: FinCat, cod: FinCat, elt_map) -> FinFunctor:
    """Functor of deloopings induced by a map of morphism names."""
    return FinFunctor(dom, cod, {x: cod.objects[0] for x in dom.objects},
                      dict(elt_map))


def all_functors(c: FinCat, d: FinCat):
    """Brute-force enumeration of all functors c -> d (small inputs only)."""
    results = []
    obj_choices = itertools.product(d.objects, repeat=len(c.objects))
    for objs in obj_choices:
        obj_map = dict(zip(c.objects, objs))
        mor_options = []
        for f in c.morphisms:
            opts = [m for m in d.morphisms
                    if d.src[m] == obj_map[c.src[f]]
                    and d.dst[m] == obj_map[c.dst[f]]]
            mor_options.append(opts)
        for mors in itertools.product(*mor_options):
            F = FinFunctor(c, d, obj_map, dict(zip(c.morphisms, mors)))
            if check_functor(F).ok:
                results.append(F)
    return results

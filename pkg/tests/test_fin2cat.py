import pytest

from icat.fincat import ICatError, cyclic_group_table
from icat.fin2cat import (
    Fin2Cat, Strict2Functor, WeakNatTrans, Modification,
    validate_2category, check_2functor, check_weak_nat, check_modification,
    identity_2functor, identity_weak_nat, identity_modification,
    switch_modification, paste, pullback_2cat,
    terminal_2cat, delooping_2cat, group_pair_2cat, walking_2iso,
)


def b2z2():
    names, table = cyclic_group_table(2)
    return delooping_2cat(names, table, name="B2Z2")


def b2z4():
    names, table = cyclic_group_table(4)
    return delooping_2cat(names, table, name="B2Z4")


def z4_with_z2_cells():
    names, table = cyclic_group_table(4)
    hnames, htable = cyclic_group_table(2)
    return group_pair_2cat(names, table, hnames, htable)


def test_terminal_2cat_valid():
    assert validate_2category(terminal_2cat()).ok


def test_delooping_2cat_valid():
    assert validate_2category(b2z2()).ok
    assert validate_2category(b2z4()).ok


def test_group_pair_2cat_valid():
    assert validate_2category(z4_with_z2_cells()).ok


def test_walking_2iso_valid():
    t = walking_2iso()
    assert validate_2category(t).ok
    assert t.inverse2("al") == "al_inv"


def test_corrupted_whisker_reports_interchange():
    t = z4_with_z2_cells()
    wl = dict(t.wl)
    wl[("g1", "g1^g1")] = "g2^g0"  # wrong H part
    broken = Fin2Cat(t.objects, t.one_cells, t.id1, t.hcomp, t.two_cells,
                     t.id2, t.vcomp, wl, t.wr)
    report = validate_2category(broken)
    assert not report.ok
    laws = {v.law for v in report.violations}
    assert laws & {"interchange", "left whisker functoriality",
                   "left whisker composition", "left whisker unit",
                   "whisker order", "left whisker of identity"}


def test_paste_identity_and_inverse():
    t = walking_2iso()
    assert paste(t, ("id", "f")) == "if"
    assert paste(t, ("vcomp", ("datum", "al"), ("inv", ("datum", "al")))) == "if"


def test_paste_grid_order_independence():
    t = z4_with_z2_cells()
    a, b = "g0^g1", "g0^g1"
    c = "g1^g0"
    # two evaluation orders of a 2x2 grid: (a;b) whiskered against c mirrors
    lhs = paste(t, ("vcomp",
                    ("wr", ("datum", a), "g1"),
                    ("wl", "g0", ("datum", c))))
    rhs = paste(t, ("vcomp",
                    ("wl", "g0", ("datum", c)),
                    ("wr", ("datum", a), "g1")))
    assert lhs == rhs  # interchange makes the orders agree


def test_identity_weak_nat_valid():
    F = identity_2functor(b2z4())
    assert check_weak_nat(identity_weak_nat(F)).ok


def test_conjugation_weak_nat():
    t = b2z4()
    F = identity_2functor(t)
    # component = fixed invertible 1-cell g1; naturality by whisker
    comp1 = {"*": "g1"}
    comp2 = {f: t.id2[t.hcomp[("g1", f)]] for f in t.one_cells}
    theta = WeakNatTrans(F, F, comp1, comp2, name="conj")
    assert check_weak_nat(theta).ok
    assert not theta.is_strict or all(
        t.hcomp[("g1", f)] == t.hcomp[(f, "g1")] for f in t.one_cells)


def test_weak_nat_mutation_fails_composite_coherence():
    t = b2z4()
    F = identity_2functor(t)
    comp1 = {"*": "g1"}
    comp2 = {f: t.id2[t.hcomp[("g1", f)]] for f in t.one_cells}
    theta = WeakNatTrans(F, F, comp1, comp2)
    assert check_weak_nat(theta).ok
    bad = WeakNatTrans(F, F, {"*": "g2"}, comp2)
    report = check_weak_nat(bad)
    assert not report.ok


def test_identity_modification_valid():
    F = identity_2functor(b2z2())
    theta = identity_weak_nat(F)
    assert check_modification(identity_modification(theta)).ok


def test_switch_of_strict_transformations_is_identity():
    t = b2z4()
    F = identity_2functor(t)
    sigma = identity_weak_nat(F)
    tau = identity_weak_nat(F)
    m = switch_modification(sigma, tau)
    assert check_modification(m).ok
    # strict inputs: identity modification, componentwise
    assert all(c == t.id2[t.src2(c) if False else t.two_cells[c][0]]
               for c in m.components.values())


def test_switch_tau_strict_gives_identity_components():
    t = b2z4()
    F = identity_2functor(t)
    comp1 = {"*": "g1"}
    comp2 = {f: t.id2[t.hcomp[("g1", f)]] for f in t.one_cells}
    sigma = WeakNatTrans(F, F, comp1, comp2)
    tau = identity_weak_nat(F)
    m = switch_modification(sigma, tau)
    assert check_modification(m).ok
    for c in m.components.values():
        f, g = t.two_cells[c]
        assert f == g and c == t.id2[f]


def test_switch_of_conjugations():
    t = z4_with_z2_cells()
    F = identity_2functor(t)
    def conj(g):
        comp1 = {"*": g}
        comp2 = {f: t.id2[t.hcomp[(g, f)]] for f in t.one_cells}
        return WeakNatTrans(F, F, comp1, comp2, name="conj_%s" % g)
    sigma, tau = conj("g1"), conj("g1")
    assert check_weak_nat(sigma).ok
    m = switch_modification(sigma, tau)
    assert check_modification(m).ok
    # component at the unique object is tau's naturality 2-cell at sigma_*
    assert m.components["*"] == tau.comp2[sigma.comp1["*"]]


def test_switch_output_always_checks():
    t = b2z2()
    F = identity_2functor(t)
    sigma = identity_weak_nat(F)
    # a non-strict transformation on the group-pair 2-category
    s = z4_with_z2_cells()
    G = identity_2functor(s)
    comp1 = {"*": "g0"}
    comp2 = {f: "%s^g1" % f for f in s.one_cells}  # nontrivial H-part squares
    theta = WeakNatTrans(G, G, comp1, comp2, name="twist")
    if check_weak_nat(theta).ok:
        m = switch_modification(theta, theta)
        assert check_modification(m).ok


def test_pullback_2cat_of_deloopings():
    t = b2z2()
    term = terminal_2cat()
    to_term = Strict2Functor(
        t, term, {"*": "*"}, {u: "u" for u in t.one_cells},
        {a: "a" for a in t.two_cells})
    assert check_2functor(to_term).ok
    P, p1, p2 = pullback_2cat(to_term, to_term)
    assert validate_2category(P).ok
    assert len(P.one_cells) == 4
    assert check_2functor(p1).ok and check_2functor(p2).ok

import random

import pytest
from hypothesis import given, settings, strategies as st

from icat.fincat import ICatError
from icat.topology import (
    CWComplexData, chain_complex, smith_normal_form, minor_gcd_divisor_oracle,
    homology, pi1_presentation, try_trivialize, mat_mul, connected_components,
)


def circle():
    cw = CWComplexData()
    cw.cells[0] = ["v"]
    cw.cells[1] = ["e"]
    cw.attach1["e"] = ("v", "v")
    return cw


def pentagon_disk():
    """5-cycle graph with one pentagonal 2-cell."""
    cw = CWComplexData()
    cw.cells[0] = ["v%d" % i for i in range(5)]
    cw.cells[1] = ["e%d" % i for i in range(5)]
    for i in range(5):
        cw.attach1["e%d" % i] = ("v%d" % i, "v%d" % ((i + 1) % 5))
    cw.cells[2] = ["p"]
    cw.attach2["p"] = [("e%d" % i, 1) for i in range(5)]
    return cw


def minimal_sphere():
    cw = CWComplexData()
    cw.cells[0] = ["v"]
    cw.cells[2] = ["c"]
    cw.attach2["c"] = []
    return cw


def test_circle_chain_complex():
    d1, d2, d3 = chain_complex(circle())
    assert d1 == [[0]]


def test_disk_boundary_column_is_cycle():
    cw = pentagon_disk()
    d1, d2, _ = chain_complex(cw)
    # d1 . d2 = 0: the pentagon's column sums to the 5-cycle, a cycle
    assert all(all(x == 0 for x in row) for row in mat_mul(d1, d2))
    assert [row[0] for row in d2] == [1, 1, 1, 1, 1]


def test_snf_simple_cases():
    assert smith_normal_form([[2, 0], [0, 0]]) in ([2], [2, 0])
    assert [d for d in smith_normal_form([[2, 0], [0, 0]]) if d != 0] == [2]
    assert smith_normal_form([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == [1, 1, 1]


def test_snf_2x2_with_oracle():
    m = [[2, 4], [6, 8]]
    divisors = [d for d in smith_normal_form(m) if d != 0]
    assert divisors == [2, 4]
    assert minor_gcd_divisor_oracle(m) == [2, 4]


def test_snf_against_minor_gcd_oracle_seeded():
    rng = random.Random(10914)
    for _ in range(60):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 4)
        m = [[rng.randint(-5, 5) for _ in range(cols)] for _ in range(rows)]
        lhs = [d for d in smith_normal_form(m) if d != 0]
        assert lhs == minor_gcd_divisor_oracle(m)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(-5, 5), min_size=1, max_size=4),
                min_size=1, max_size=4).filter(
                    lambda m: len({len(r) for r in m}) == 1))
def test_snf_oracle_property(m):
    lhs = [d for d in smith_normal_form(m) if d != 0]
    assert lhs == minor_gcd_divisor_oracle(m)


def test_homology_circle():
    cw = circle()
    assert homology(cw, 0) == (1, [])
    assert homology(cw, 1) == (1, [])


def test_homology_sphere():
    cw = minimal_sphere()
    assert homology(cw, 0) == (1, [])
    assert homology(cw, 1) == (0, [])
    assert homology(cw, 2) == (1, [])


def test_homology_pentagon_disk():
    cw = pentagon_disk()
    assert homology(cw, 0) == (1, [])
    assert homology(cw, 1) == (0, [])


def test_rp2_torsion():
    # one vertex, one loop, one 2-cell glued along the loop squared
    cw = CWComplexData()
    cw.cells[0] = ["v"]
    cw.cells[1] = ["e"]
    cw.attach1["e"] = ("v", "v")
    cw.cells[2] = ["c"]
    cw.attach2["c"] = [("e", 1), ("e", 1)]
    assert homology(cw, 1) == (0, [2])


def test_pi1_disk_trivial():
    pres = pi1_presentation(pentagon_disk())
    result = try_trivialize(pres, budget=10)
    assert result["status"] == "trivial"


def test_pi1_circle_inconclusive():
    pres = pi1_presentation(circle())
    result = try_trivialize(pres, budget=10)
    assert result["status"] == "inconclusive"
    assert homology(circle(), 1)[0] == 1


def test_pi1_disconnected_raises():
    cw = CWComplexData()
    cw.cells[0] = ["v", "w"]
    with pytest.raises(ICatError):
        pi1_presentation(cw)


def test_open_boundary_word_rejected():
    cw = CWComplexData()
    cw.cells[0] = ["v", "w"]
    cw.cells[1] = ["e"]
    cw.attach1["e"] = ("v", "w")
    cw.cells[2] = ["c"]
    cw.attach2["c"] = [("e", 1)]
    with pytest.raises(ICatError):
        cw.validate()


def test_euler_characteristic_matches_betti():
    for cw in [circle(), pentagon_disk(), minimal_sphere()]:
        chi = cw.euler_characteristic()
        betti = sum((-1) ** k * homology(cw, k)[0] for k in range(3))
        assert chi == betti


def test_abelianization_matches_h1():
    for cw in [circle(), pentagon_disk()]:
        pres = pi1_presentation(cw)
        div = smith_normal_form(pres.abelianization_matrix())
        rank = pres.n_generators - sum(1 for d in div if d != 0)
        torsion = sorted(d for d in div if d not in (0, 1))
        b1, t1 = homology(cw, 1)
        assert (rank, torsion) == (b1, sorted(t1))


def test_connected_components():
    assert connected_components(circle()) == 1

import pytest

from chain_decomposition import Chain, chains_from_phi, s4_starting_set, validate_decomposition
from errors import InvalidBox, KneadFailure
from order_matching_l3 import boundary_sets
from poset_core import BoxShape, dual, enumerate_level
from recursive_udec import (
    UDecomposition,
    chain_u_decomposition,
    half_lattice,
    knead,
    rec_smn,
    rec_ud,
    rec_ud_tower,
    s2_formula,
    smn_tower,
    u_decomposition_from,
    validate_u_decomposition,
)


def test_half_lattice_sizes():
    assert len(half_lattice(BoxShape(3, 3))) == 13
    assert half_lattice(BoxShape(3, 3)).d == 5
    assert half_lattice(BoxShape(1, 1)).elements == ((0,), (1,))
    assert (2, 1, 0) in half_lattice(BoxShape(3, 3))
    assert (3, 3, 0) not in half_lattice(BoxShape(3, 3))
    hl = half_lattice(BoxShape(2, 5))
    assert hl.element_set is hl.element_set
    assert len(hl.element_set) == len(hl)


def test_chain_u_decomposition():
    u = chain_u_decomposition(BoxShape(1, 6))
    assert len(u) == 1
    assert u.chains[0].elements == ((0,), (1,), (2,), (3,))
    assert validate_u_decomposition(u).ok
    with pytest.raises(InvalidBox):
        chain_u_decomposition(BoxShape(2, 2))


def test_knead_single_cell():
    dec = knead(chain_u_decomposition(BoxShape(1, 1)))
    assert [c.elements for c in dec] == [((0,), (1,))]


def test_knead_odd_chain_box():
    dec = knead(chain_u_decomposition(BoxShape(1, 7)))
    assert [c.elements for c in dec] == [tuple((i,) for i in range(8))]


def test_rec_ud_2_2():
    u = rec_ud(chain_u_decomposition(BoxShape(2, 1)), chain_u_decomposition(BoxShape(1, 2)))
    assert u.box == BoxShape(2, 2)
    assert [c.elements for c in u.as_decomposition().chains] == [
        ((0, 0), (1, 0), (1, 1)),
        ((2, 0),),
    ]
    assert validate_u_decomposition(u).ok
    dec = knead(u)
    assert [c.elements for c in dec] == [
        ((0, 0), (1, 0), (1, 1), (2, 1), (2, 2)),
        ((2, 0),),
    ]


def assert_knead_meets_u_starts(u, dec):
    assert set(dec.starts()) == u.starts()
    assert set(dec.ends()) == {dual(s, u.box) for s in u.starts()}


def test_rec_ud_checks_box_shapes():
    with pytest.raises(InvalidBox):
        rec_ud(chain_u_decomposition(BoxShape(2, 1)), chain_u_decomposition(BoxShape(1, 3)))


def test_knead_rejects_singleton_for_odd_box():
    box = BoxShape(1, 3)
    u = UDecomposition(box=box, chains=(Chain(((0,), (1,))), Chain(((2,),))))
    with pytest.raises(KneadFailure):
        knead(u)


def test_knead_l_u_3_3():
    u = rec_ud_tower(3, 3)
    assert validate_u_decomposition(u).ok
    dec = knead(u)
    assert len(dec) == 3
    assert validate_decomposition(dec).ok
    assert_knead_meets_u_starts(u, dec)


@pytest.mark.parametrize("n", range(1, 9))
def test_rec_ud_three_rows(n):
    u = rec_ud_tower(3, n)
    assert validate_u_decomposition(u).ok
    dec = knead(u)
    assert validate_decomposition(dec).ok
    assert len(dec) == len(enumerate_level(dec.box, dec.box.middle_rank))
    assert_knead_meets_u_starts(u, dec)


# odd mn drops the rank d-1 minimum of each dual chain, even mn shares the top
@pytest.mark.parametrize("m, n", [(1, 5), (2, 5), (3, 3), (3, 4), (3, 5), (3, 7), (3, 8), (1, 6)])
def test_knead_runs_from_u_starts_to_their_duals(m, n):
    u = rec_ud_tower(m, n)
    dec = knead(u)
    assert validate_decomposition(dec).ok
    assert_knead_meets_u_starts(u, dec)


@pytest.mark.parametrize("n", range(1, 7))
def test_rec_ud_four_rows(n):
    u = rec_ud_tower(4, n)
    assert validate_u_decomposition(u).ok
    dec = knead(u)
    assert validate_decomposition(dec).ok
    assert_knead_meets_u_starts(u, dec)


@pytest.mark.parametrize("n", range(2, 7))
def test_rec_ud_seeded_with_phi(n):
    u = rec_ud_tower(4, n, seed_phi=True)
    assert validate_u_decomposition(u).ok
    dec = knead(u)
    assert validate_decomposition(dec).ok
    assert_knead_meets_u_starts(u, dec)


@pytest.mark.parametrize("n", range(1, 11))
def test_phi_cut_to_half_lattice(n):
    u = u_decomposition_from(chains_from_phi(n))
    assert validate_u_decomposition(u).ok


@pytest.mark.parametrize("m, n", [(2, 5), (3, 4), (3, 8), (4, 5)])
def test_smn_follows_rec_ud_starts(m, n):
    res = smn_tower(m, n)
    assert res.ok
    assert res.starts == rec_ud_tower(m, n).starts()


@pytest.mark.parametrize("n", range(1, 13))
def test_smn_two_rows(n):
    assert smn_tower(2, n).starts == s2_formula(n)


@pytest.mark.parametrize("n", range(1, 13))
def test_smn_three_rows(n):
    assert smn_tower(3, n).starts == boundary_sets(n).starts


@pytest.mark.parametrize("n", range(1, 13))
def test_smn_four_rows(n):
    assert smn_tower(4, n).starts == s4_starting_set(n)


def test_s2_formula_examples():
    assert s2_formula(1) == {(0, 0)}
    assert s2_formula(4) == {(0, 0), (2, 0), (4, 0)}
    assert s2_formula(5) == {(0, 0), (2, 0), (4, 0)}


def test_rec_smn_2_2():
    res = rec_smn({(0, 0)}, {(0,)}, BoxShape(2, 2))
    assert res.ok
    assert res.ends_below == frozenset()
    assert res.candidates == {(2, 0)}
    assert res.starts == {(0, 0), (2, 0)}
    assert res.to_json() == {"box": [2, 2], "ok": True, "starts": [[0, 0], [2, 0]], "missing": []}


def test_rec_smn_reports_missing_candidates():
    # a shifted end with nothing in the top starting set to meet it
    res = rec_smn({(2, 0)}, set(), BoxShape(2, 3))
    assert not res.ok
    assert res.ends_below == {(2, 0)}
    assert res.missing == [(3, 0)]
    assert res.to_json()["missing"] == [[3, 0]]
    assert not hasattr(res, "shifted")


def test_rec_smn_needs_two_rows():
    with pytest.raises(InvalidBox):
        rec_smn({(0,)}, {(0,)}, BoxShape(1, 3))

import pytest
from hypothesis import given
from hypothesis import strategies as st

from errors import NotInDomain, NotInRange
from order_matching_l3 import (
    FClass,
    boundary_sets,
    box3,
    f_classify,
    in_E3,
    is_end,
    is_start,
    lemma_fact_violations,
    lemma_family_members,
    phi,
    phi_inverse,
    phi_table,
    phi_trace,
    remark_violations,
    star_phi,
)
from poset_core import dual, enumerate_box, enumerate_level, is_cover, rank


@st.composite
def width_and_partition(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    rows = sorted(draw(st.lists(st.integers(0, n), min_size=3, max_size=3)), reverse=True)
    return n, tuple(rows)


@pytest.mark.parametrize(
    "triple, width, want",
    [
        ((0, 0, 0), 0, True),
        ((8, 4, 0), 8, True),
        ((0, 1, 0), 0, False),
        ((5, 2, 0), 5, False),
        ((1, 1, 1), 1, True),
        ((2, 2, 1), 2, False),
        ((-1, 0, 0), -1, False),
        ((8, 4, 0), 7, False),
    ],
)
def test_in_E3(triple, width, want):
    assert in_E3(triple, width) is want


def test_boundary_sets_small():
    sets = boundary_sets(2)
    assert sets.starts == {(0, 0, 0), (2, 0, 0)}
    assert sets.ends == {(2, 2, 2), (2, 2, 0)}


def test_boundary_sets_3_8():
    sets = boundary_sets(8)
    assert len(sets.starts) == len(sets.ends) == 13
    assert (8, 4, 0) in sets.starts and (8, 4, 0) in sets.ends
    assert (0, 0, 0) in sets.starts
    assert sets.sorted_starts()[:3] == [(0, 0, 0), (2, 0, 0), (3, 0, 0)]
    assert sets.to_json()["starts"][0] == [0, 0, 0]


@pytest.mark.parametrize("n", range(1, 17))
def test_boundary_sets_count_middle_level(n):
    box = box3(n)
    sets = boundary_sets(n)
    assert len(sets.starts) == len(enumerate_level(box, box.middle_rank))
    assert sets.ends == {dual(s, box) for s in sets.starts}


@pytest.mark.parametrize("n", range(1, 13))
def test_ends_agree_with_in_E3(n):
    sets = boundary_sets(n)
    for lam in enumerate_box(box3(n)):
        assert (lam in sets.ends) == in_E3(lam, n)
        assert (lam in sets.starts) == is_start(lam, n)
        assert (lam in sets.ends) == is_end(lam, n)


@pytest.mark.parametrize(
    "lam, n, want",
    [
        ((0, 0, 0), 8, (1, 0, 0)),
        ((1, 1, 0), 8, (1, 1, 1)),
        ((2, 2, 1), 2, (2, 2, 2)),
        ((2, 1, 0), 8, (2, 2, 0)),
    ],
)
def test_phi_examples(lam, n, want):
    assert phi(lam, n) == want


def test_phi_rejects_end():
    with pytest.raises(NotInDomain):
        phi((8, 4, 0), 8)


@pytest.mark.parametrize(
    "mu, n, want",
    [((1, 0, 0), 8, (0, 0, 0)), ((2, 2, 2), 2, (2, 2, 1))],
)
def test_phi_inverse_examples(mu, n, want):
    assert phi_inverse(mu, n) == want


def test_phi_inverse_rejects_start():
    with pytest.raises(NotInRange):
        phi_inverse((2, 0, 0), 8)


def test_star_phi_examples():
    assert star_phi((0, 0, 0), 2) == (2, 2, 1)
    assert star_phi(star_phi((0, 0, 0), 2), 2) == (0, 0, 0)
    assert star_phi((2, 1, 0), 8) == (8, 6, 6)


@pytest.mark.parametrize(
    "lam, want",
    [
        ((1, 0, 0), FClass.F2E),
        ((1, 1, 0), FClass.F3O),
        ((2, 1, 0), FClass.F2O),
        ((0, 0, 0), FClass.F1),
    ],
)
def test_f_classify_examples(lam, want):
    assert f_classify(lam) is want


def test_fclass_rows():
    assert [c.row for c in FClass] == [1, 2, 2, 3]


def test_phi_trace_from_bottom():
    assert phi_trace((0, 0, 0), 8)[:5] == [(0, 0, 0), (1, 0, 0), (1, 1, 0), (1, 1, 1), (2, 1, 1)]
    assert phi_trace((8, 4, 0), 8) == [(8, 4, 0)]


@pytest.mark.parametrize("n", range(1, 13))
def test_phi_is_a_bijection_onto_complement_of_starts(n):
    box = box3(n)
    sets = boundary_sets(n)
    table = phi_table(n)
    domain = {lam for lam in enumerate_box(box) if lam not in sets.ends}
    image = {lam for lam in enumerate_box(box) if lam not in sets.starts}
    assert set(table) == domain
    assert len(set(table.values())) == len(table)
    assert set(table.values()) == image


@pytest.mark.slow
@pytest.mark.parametrize("n", range(13, 17))
def test_phi_is_a_bijection_larger_widths(n):
    sets = boundary_sets(n)
    table = phi_table(n)
    assert len(set(table.values())) == len(table)
    assert not set(table.values()) & sets.starts


@given(width_and_partition())
def test_phi_steps_up_one_cell(data):
    n, lam = data
    if in_E3(lam, n):
        return
    mu = phi(lam, n)
    assert is_cover(lam, mu)
    assert rank(mu) == rank(lam) + 1
    assert phi_inverse(mu, n) == lam
    assert star_phi(star_phi(lam, n), n) == lam


@given(width_and_partition())
def test_phi_inverse_round_trip(data):
    n, mu = data
    if is_start(mu, n):
        return
    assert phi(phi_inverse(mu, n), n) == mu


@pytest.mark.parametrize("n", range(1, 13))
def test_star_phi_is_an_involution_off_e(n):
    for lam in enumerate_box(box3(n)):
        if in_E3(lam, n):
            continue
        assert star_phi(star_phi(lam, n), n) == lam
        assert phi_inverse(phi(lam, n), n) == lam


@pytest.mark.parametrize("n", range(1, 13))
def test_phi_inverts_off_s(n):
    for mu in enumerate_box(box3(n)):
        if is_start(mu, n):
            continue
        assert phi(phi_inverse(mu, n), n) == mu


@pytest.mark.parametrize("n", range(1, 13))
def test_lemma_family_facts(n):
    assert lemma_fact_violations(n) == []


def test_lemma_families_are_populated():
    tags = {tag for tag, lam in lemma_family_members(8) if box3(8).contains(lam)}
    assert tags == {"A1", "A2", "A3", "B2", "B3", "C1", "C2"}


@pytest.mark.parametrize("n", range(1, 17))
def test_remark_case_never_occurs(n):
    assert remark_violations(n) == []

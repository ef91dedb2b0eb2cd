import pytest
from hypothesis import given, strategies as st

from milnorchi.groups import (
    DegreeProfile,
    Exceptional,
    GroupSpecError,
    Infinite,
    ReducibleGroupError,
    classify,
    degree_profile,
    discriminant_degree,
    exceptional_table,
    exceptionals,
    infinite_family,
    load_table_override,
    order_and_center,
    parse_group,
    parse_table,
)


def test_parse():
    assert parse_group("G(4,2,3)") == Infinite(4, 2, 3)
    assert parse_group(" G( 4, 2 ,3 ) ") == Infinite(4, 2, 3)
    assert parse_group("G29") == Exceptional(29)
    assert parse_group("G_29") == Exceptional(29)


@pytest.mark.parametrize("bad", ["G(4,3,2)", "G(0,1,1)", "G38", "G3", "H4", "G(1,2)", ""])
def test_parse_rejects(bad):
    with pytest.raises(GroupSpecError):
        parse_group(bad)


@given(st.integers(1, 40), st.integers(1, 40), st.integers(1, 10))
def test_parse_roundtrip(r, k, l):
    p = next(d for d in range(k, 0, -1) if r % d == 0)
    g = Infinite(r, p, l)
    assert parse_group(str(g)) == g


def test_classify():
    assert classify(Infinite(2, 2, 2)) == {"irreducible": False, "rank": 2}
    assert classify(Infinite(1, 1, 4)) == {"irreducible": True, "rank": 3}
    assert classify(Exceptional(37)) == {"irreducible": True, "rank": 8}
    assert not classify(Infinite(1, 1, 1))["irreducible"]
    assert not classify(Infinite(3, 3, 1))["irreducible"]
    assert classify(Infinite(5, 1, 1))["irreducible"]


def test_degree_profiles():
    p = degree_profile(Infinite(4, 2, 3))
    assert p.degrees == (4, 6, 8) and p.codegrees == (0, 4, 8)
    p = degree_profile(Infinite(4, 4, 3))
    assert p.degrees == (3, 4, 8) and p.codegrees == (0, 4, 5)
    assert degree_profile(Exceptional(37)).degrees == (2, 8, 12, 14, 18, 20, 24, 30)
    with pytest.raises(ReducibleGroupError):
        degree_profile(Infinite(2, 2, 2))


def test_order_center_discriminant():
    assert order_and_center(Infinite(4, 2, 3)) == {"order": 192, "center": 2}
    assert order_and_center(Exceptional(37)) == {"order": 696729600, "center": 2}
    assert order_and_center(Infinite(4, 4, 3))["center"] == 1
    assert discriminant_degree(Exceptional(37)) == 240
    assert discriminant_degree(Infinite(3, 1, 2)) == 12
    for r in (2, 5, 11):
        assert discriminant_degree(Infinite(r, 1, 1)) == r


def test_hyperplane_count_matches_codegrees():
    # number of hyperplanes = sum(codegrees) + rank
    assert sum(degree_profile(Exceptional(37)).codegrees) + 8 == 120
    assert sum(degree_profile(Exceptional(27)).codegrees) + 3 == 45


def test_exceptional_table_complete():
    table = exceptional_table()
    assert sorted(table) == list(range(4, 38))
    for n, prof in table.items():
        assert prof.codegrees[0] == 0
        assert len(prof.degrees) == classify(Exceptional(n))["rank"]
    assert len(list(exceptionals())) == 34


def test_parse_table_and_override(tmp_path):
    text = "# comment\n4;2;4,6;0,2\n"
    assert parse_table(text) == {4: DegreeProfile((4, 6), (0, 2))}
    with pytest.raises(ValueError):
        parse_table("4;3;4,6;0,2\n")
    f = tmp_path / "t.txt"
    f.write_text(text)
    assert load_table_override(f)[4] == exceptional_table()[4]
    assert load_table_override(None) == dict(exceptional_table())


def test_infinite_family_sweep():
    fam = list(infinite_family(12, 8))
    assert all(classify(g)["irreducible"] for g in fam)
    assert Infinite(2, 2, 2) not in fam and Infinite(3, 3, 1) not in fam
    assert len(fam) == len(set(fam)) == 267


def test_order_is_product_of_degrees():
    import math

    for g in infinite_family(6, 5):
        assert order_and_center(g)["order"] == math.prod(degree_profile(g).degrees)

import pytest

from uhfk.errors import ParseError
from uhfk.grammar import cycles_to_perm, format_cycles, parse_group_spec, parse_gset_spec
from uhfk.group import build_group


def test_named_families():
    assert parse_group_spec("cyclic 4") == ("cyclic", 4)
    assert parse_group_spec("product (cyclic 2) (symmetric 3)") == ("product", ("cyclic", 2), ("symmetric", 3))
    assert parse_group_spec("product cyclic 2 cyclic 2") == ("product", ("cyclic", 2), ("cyclic", 2))


def test_perm_spec_cycles():
    node = parse_group_spec("perm 4 {(012),(01)(23)}")
    assert node[0] == "perm" and node[1] == 4
    assert node[2] == (((0, 1, 2),), ((0, 1), (2, 3)))
    spaced = parse_group_spec("perm 12 {(0 10 11)}")
    assert spaced[2] == (((0, 10, 11),),)


def test_gset_specs():
    assert parse_gset_spec("regular") == ("regular",)
    assert parse_gset_spec("trivial 2") == ("trivial", 2)
    assert parse_gset_spec("union regular (trivial 1)") == ("union", ("regular",), ("trivial", 1))


def test_cycles_compose_right_to_left():
    # (01) then (12): 0 -> 1 -> 2
    p = cycles_to_perm([[1, 2], [0, 1]], 3)
    assert p[0] == 2
    assert format_cycles(cycles_to_perm([], 3)) == "()"
    assert format_cycles((1, 0, 2)) == "(0 1)"


@pytest.mark.parametrize(
    "text, token",
    [("cyclc 2", "cyclc"), ("cyclic", None), ("dihedral 2", "2"), ("cyclic 2 extra", "extra"), ("perm 3 {(0 1}", None)],
)
def test_parse_errors_name_token(text, token):
    with pytest.raises(ParseError) as exc:
        parse_group_spec(text)
    if token is not None:
        assert exc.value.token == token


def test_points_checked_against_degree():
    with pytest.raises(ParseError) as exc:
        build_group("perm 3 {(0 5)}")
    assert exc.value.token == "5"
    with pytest.raises(ParseError):
        build_group("perm 3 {(0 1 0)}")

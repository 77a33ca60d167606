from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from uhfk import cyclo
from uhfk.chartab import (
    VirtualCharacter,
    absorption_certificate,
    admissible_primes,
    character_table,
    decompose,
    decompose_values,
    inner_product_exact,
    verify_table,
)
from uhfk.errors import BudgetExceeded, EmptyGSet, NonIntegralMultiplicity
from uhfk.group import build_group
from uhfk.gset import build_gset
from uhfk.repring import ClassFunction, perm_character

NAMES = ["trivial", "Z2", "Z3", "Z4", "V4", "S3", "D4", "A4", "Q8", "S4"]


@pytest.fixture(scope="module")
def tables(groups):
    return {name: character_table(groups[name]) for name in NAMES}


@pytest.mark.parametrize("name", NAMES)
def test_table_invariants(tables, name):
    T = tables[name]
    assert all(ok for _, ok in verify_table(T))
    assert len(T.degrees) == len(T.group.classes)
    assert sum(d * d for d in T.degrees) == T.group.order
    assert T.degrees[0] == 1
    assert all(cyclo.equals_int(v, 1) for v in T.irreducibles[0])  # trivial row first


def test_degrees(tables):
    assert tables["S3"].degrees == (1, 1, 2)
    assert tables["S4"].degrees == (1, 1, 2, 3, 3)
    assert tables["A4"].degrees == (1, 1, 1, 3)
    assert tables["Q8"].degrees == (1, 1, 1, 1, 2)
    assert tables["D4"].degrees == (1, 1, 1, 1, 2)


def test_z2_values(tables):
    T = tables["Z2"]
    assert [[cyclo.reduce(v)[0] for v in row] for row in T.irreducibles] == [[1, 1], [1, -1]]


def test_z3_values_are_roots_of_unity(tables):
    T = tables["Z3"]
    nontrivial = sorted(tuple(row[1]) for row in T.irreducibles[1:])
    assert nontrivial == [(0, 0, 1), (0, 1, 0)]


def test_q8_and_d4_share_degrees_not_tables(tables):
    # same degrees, but Q8 has one involution and D4 has five
    Q8, D4 = tables["Q8"].group, tables["D4"].group
    inv = lambda G: sum(1 for g in G.elements[1:] if G.element_order(g) == 2)
    assert (inv(Q8), inv(D4)) == (1, 5)


@pytest.mark.parametrize("n", range(1, 13))
def test_cyclic_tables(n):
    T = character_table(build_group(f"cyclic {n}"))
    assert T.degrees == (1,) * n
    assert all(ok for _, ok in verify_table(T))


def test_admissible_primes():
    ps = list(zip(range(5), admissible_primes(24, 12)))
    for _, p in ps:
        assert p % 12 == 1 and p * p > 4 * 24


def test_table_budget(groups):
    with pytest.raises(BudgetExceeded):
        character_table(groups["S4"], budget=10)


def test_decompose_examples(groups, tables):
    G = groups["Z2"]
    T = tables["Z2"]
    assert decompose(ClassFunction(G, (4, 2)), T).multiplicities == (3, 1)
    assert decompose(ClassFunction(G, (16, 4)), T).multiplicities == (10, 6)
    assert decompose(ClassFunction(G, (1, 1)), T).multiplicities == (1, 0)


def test_decompose_rejects_non_characters(groups, tables):
    with pytest.raises(NonIntegralMultiplicity):
        decompose(ClassFunction(groups["Z2"], (1, 0)), tables["Z2"])
    with pytest.raises(NonIntegralMultiplicity):
        decompose(ClassFunction(groups["S3"], (2, 1, 0)), tables["S3"])


def test_regular_character(groups, tables):
    for name in ("S3", "A4", "Q8", "S4"):
        G, T = groups[name], tables[name]
        reg = ClassFunction(G, tuple(G.order if i == 0 else 0 for i in range(len(G.classes))))
        assert decompose(reg, T).multiplicities == T.degrees


def test_exact_inner_product_agrees(groups, tables):
    G, T = groups["S3"], tables["S3"]
    chi = perm_character(G, build_gset(G, "regular"), 2)
    crt = decompose(chi, T).multiplicities
    exact = tuple(inner_product_exact(chi.values, T, i) for i in range(len(T)))
    assert exact == tuple(Fraction(m) for m in crt)


def test_huge_values_by_crt(groups, tables):
    G, T = groups["A4"], tables["A4"]
    chi = perm_character(G, build_gset(G, "coset {(012)}"), 5) ** 7
    m = decompose(chi, T).multiplicities
    assert tuple(inner_product_exact(chi.values, T, i) for i in range(len(T))) == m


@settings(max_examples=40, deadline=None)
@given(name=st.sampled_from(["Z3", "Z4", "S3", "A4", "Q8"]), data=st.data())
def test_roundtrip(tables, name, data):
    T = tables[name]
    mults = tuple(data.draw(st.lists(st.integers(-50, 50), min_size=len(T), max_size=len(T))))
    v = VirtualCharacter(T, mults)
    assert decompose_values(v.values(), T).multiplicities == mults


@settings(max_examples=40, deadline=None)
@given(name=st.sampled_from(["Z4", "S3", "A4", "Q8"]), data=st.data())
def test_ring_homomorphism(tables, name, data):
    T = tables[name]
    draw = lambda: tuple(data.draw(st.lists(st.integers(-4, 4), min_size=len(T), max_size=len(T))))
    a, b = VirtualCharacter(T, draw()), VirtualCharacter(T, draw())
    prod = a * b
    pointwise = [cyclo.mul(u, w) for u, w in zip(a.values(), b.values())]
    assert all(cyclo.equal(x, y) for x, y in zip(prod.values(), pointwise))
    # products of genuine characters are genuine
    if a.is_genuine() and b.is_genuine():
        assert prod.is_genuine()


def test_absorption_examples(groups, tables):
    G = groups["Z2"]
    Z = build_gset(G, "regular")
    c2 = absorption_certificate(G, Z, 2, tables["Z2"])
    assert (c2.r, c2.w_alpha.multiplicities, c2.dimension) == (2, (5, 3), 8)
    c3 = absorption_certificate(G, Z, 3, tables["Z2"])
    assert (c3.r, c3.w_alpha.multiplicities) == (2, (15, 12))
    T1 = groups["trivial"]
    c = absorption_certificate(T1, build_gset(T1, "trivial 1"), 2)
    assert (c.r, c.dimension) == (1, 1)


def test_absorption_errors(groups):
    G = groups["S3"]
    with pytest.raises(EmptyGSet):
        absorption_certificate(G, build_gset(G, "trivial 0"), 2)
    with pytest.raises(ValueError):
        absorption_certificate(G, build_gset(G, "regular"), 4)


@pytest.mark.parametrize("name, zspec", [("S3", "coset {(01)}"), ("A4", "coset {(012)}"), ("D4", "coset {(13)}"), ("Q8", "trivial 1")])
@pytest.mark.parametrize("p", [2, 3, 5])
def test_absorption_dimension(groups, tables, name, zspec, p):
    G = groups[name]
    Z = build_gset(G, zspec)
    c = absorption_certificate(G, Z, p, tables[name])
    assert c.w_alpha.is_genuine()
    assert p * c.dimension == p ** (c.r * Z.size)

import pytest
from hypothesis import given, settings
from strategies import abgroups

from uhfk.abgrp import parse_abgroup, tensor, tor
from uhfk.truncation import check_tensor, check_tor, truncated, truncated_tensor, truncated_tor

g = parse_abgroup


def test_models_of_atoms():
    # stable images: Z/8 stays Z/8, Q_n looks like Z, Q_n/Z like Z/p^N per prime
    assert truncated(g("Z/8")) == (0, (8,))
    assert truncated(g("Q[6^inf]")) == (1, ())
    assert truncated(g("Q[6^inf]/Z"), N=2) == (0, (4, 9))


def test_divisible_tensor_torsion_dies():
    assert truncated_tensor(g("Q[2^inf]/Z"), g("Q[2^inf]/Z"), N=3) == (0, ())
    assert truncated_tensor(g("Z/8"), g("Q[2^inf]"), N=3) == (0, ())


def test_tor_of_prufer():
    assert truncated_tor(g("Q[2^inf]/Z"), g("Q[2^inf]/Z"), N=3) == (0, (8,))


@pytest.mark.parametrize(
    "a, b, wrong",
    [
        ("Q[2^inf]", "Q[6^inf]/Z", "Q[6^inf]/Z"),
        ("Z/8", "Z/4", "Z/8"),
        ("Q[2^inf]/Z", "Q[2^inf]/Z", "Q[2^inf]/Z"),
        ("Z/9", "Q[2^inf]", "0"),
    ],
)
def test_tensor_oracle_rejects_wrong_answers(a, b, wrong):
    A, B = g(a), g(b)
    assert check_tensor(A, B, tensor(A, B))
    assert not check_tensor(A, B, g(wrong))


@pytest.mark.parametrize(
    "a, b, wrong",
    [
        ("Q[6^inf]/Z", "Q[2^inf]/Z", "Q[6^inf]/Z"),
        ("Z/8", "Q[2^inf]/Z", "0"),
        ("Z/8", "Z/4", "Z/8"),
        ("Q[2^inf]/Z", "Q[3^inf]/Z", "Q[2^inf]/Z"),
    ],
)
def test_tor_oracle_rejects_wrong_answers(a, b, wrong):
    A, B = g(a), g(b)
    assert check_tor(A, B, tor(A, B))
    assert not check_tor(A, B, g(wrong))


@settings(max_examples=80, deadline=None)
@given(abgroups, abgroups)
def test_rules_agree_with_oracle(A, B):
    assert check_tensor(A, B, tensor(A, B))
    assert check_tor(A, B, tor(A, B))

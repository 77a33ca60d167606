"""Permutation characters, exact character tables and K-theory of Bernoulli shifts."""
from .abgrp import AbGroup, direct_sum, localize, parse_abgroup, q_quotient, tensor, tor
from .chartab import (
    AbsorptionCertificate,
    CharTable,
    VirtualCharacter,
    absorption_certificate,
    character_table,
    decompose,
)
from .errors import *  # noqa: F401,F403
from .group import PermGroup, build_group, conjugacy_classes, cyclic_subgroup
from .gset import GSet, build_gset
from .ktheory import KPair, bernoulli_k, flip_E, flip_F, kunneth, localize_k, rokhlin_excluded
from .repring import (
    ClassFunction,
    IntPolynomial,
    alpha_certificate,
    annihilating_polynomial,
    beta_certificate,
    perm_character,
    perm_character_bruteforce,
)
from .supernat import Supernatural, parse_supernatural

__version__ = "0.1.0"

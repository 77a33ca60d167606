"""Closed-form K-groups for Bernoulli shifts and flip-absorbing algebras.

A ``KPair`` is the graded pair ``(K0, K1)`` of abelian groups. The formulas
here take supernatural numbers of infinite type (or 1) and assemble their
answers from the ``abgrp`` operations, so every output is in normal form.
"""
import warnings
from dataclasses import dataclass

from . import supernat as sn
from .abgrp import AbGroup, direct_sum, localize, tensor, tor
from .errors import EmptyGSet, FiniteTypeFiniteZ, NotInfiniteType
from .gset import GSet
from .supernat import parse_supernatural


@dataclass(frozen=True)
class KPair:
    k0: AbGroup
    k1: AbGroup
    label: str = ""

    def __eq__(self, other):
        return isinstance(other, KPair) and (self.k0, self.k1) == (other.k0, other.k1)

    def __hash__(self):
        return hash((self.k0, self.k1))

    def __str__(self):
        return f"K0 = {self.k0}, K1 = {self.k1}"

    def shifted(self):
        return KPair(self.k1, self.k0, self.label)


def _infinite(n, what="n"):
    n = parse_supernatural(n)
    if not sn.is_infinite_type(n):
        raise NotInfiniteType(f"{what} = {n} is not of infinite type")
    return n


def bernoulli_k(G, n, z_mode="infinite"):
    """K-theory of the Bernoulli crossed product ``M_n^{(x) Z} x G``.

    ``z_mode`` is the string ``"infinite"`` or a nonempty finite ``GSet``.
    The answer is ``K_*(C*(G))[1/n]``, i.e. ``(Q_n^c, 0)`` with ``c`` the
    number of conjugacy classes. For infinite ``Z`` a finite-type ``n`` is
    replaced by its saturation; for finite ``Z`` that case is rejected.
    """
    n = parse_supernatural(n)
    c = len(G.classes)
    if isinstance(z_mode, GSet):
        if z_mode.size == 0:
            raise EmptyGSet("the Bernoulli shift needs a nonempty G-set")
        if not n.is_one() and not sn.is_infinite_type(n):
            raise FiniteTypeFiniteZ(f"{n} has finite type and Z is finite; no formula applies")
        label = f"bernoulli |Z|={z_mode.size}"
    elif z_mode == "infinite":
        n = sn.saturate(n)
        label = "bernoulli Z infinite"
    else:
        raise ValueError(f"unknown z_mode {z_mode!r}")
    if n.is_one():
        return KPair(AbGroup.z(c), AbGroup.zero(), label)
    return KPair(AbGroup.q(n, count=c), AbGroup.zero(), label)


def kunneth(A, B):
    """Graded Kunneth formula with the (split) Tor terms."""
    k0 = direct_sum(tensor(A.k0, B.k0), tensor(A.k1, B.k1), tor(A.k0, B.k1), tor(A.k1, B.k0))
    k1 = direct_sum(tensor(A.k0, B.k1), tensor(A.k1, B.k0), tor(A.k0, B.k0), tor(A.k1, B.k1))
    return KPair(k0, k1, "kunneth")


def flip_F(m, n):
    """``(Q_m/Z + Q_r/Z, Q_n/Z + Q_n/Z)`` with ``r = gcd(m, n)``."""
    m = _infinite(m, "m")
    n = _infinite(n, "n")
    r = sn.gcd(m, n)
    k0 = direct_sum(AbGroup.q_mod_z(m), AbGroup.q_mod_z(r))
    k1 = AbGroup.q_mod_z(n, count=2)
    return KPair(k0, k1, f"F[{m},{n}]")


def flip_E(n, m):
    """``(Q_n + Q_n, Q_{mn}/Q_n + Q_m/Z + Q_m/Z)``.

    ``Q_{mn}/Q_n`` is written in normal form as ``Q_{m minus n}/Z``. The
    formula is meant for ``m | n``; other pairs are accepted with a warning.
    """
    n = _infinite(n, "n")
    m = _infinite(m, "m")
    if not sn.divides(m, n):
        warnings.warn(f"m = {m} does not divide n = {n}", stacklevel=2)
    k0 = AbGroup.q(n, count=2)
    k1 = direct_sum(AbGroup.q_mod_z(m.without(n)), AbGroup.q_mod_z(m, count=2))
    return KPair(k0, k1, f"E[{n},{m}]")


def flip_E_from_components(n, m):
    """The same groups, with the first K1 summand computed as ``Q_n (x) Q_m/Z``
    through the Kunneth formula instead of the quotient rule."""
    n = _infinite(n, "n")
    m = _infinite(m, "m")
    cross = kunneth(KPair(AbGroup.q(n), AbGroup.zero()), KPair(AbGroup.zero(), AbGroup.q_mod_z(m)))
    k1 = direct_sum(cross.k1, AbGroup.q_mod_z(m, count=2))
    return KPair(direct_sum(cross.k0, AbGroup.q(n, count=2)), k1, f"E[{n},{m}] via kunneth")


@dataclass(frozen=True)
class RokhlinReport:
    excluded: bool
    lhs: AbGroup
    rhs: AbGroup
    classes: int


def rokhlin_excluded(G, n):
    """Compare ``K0`` forced by a Rokhlin action (``Z[1/n] = Q_n``) with the
    Bernoulli answer ``Q_n^c``; a mismatch rules the Rokhlin property out."""
    n = _infinite(n)
    if n.is_one():
        raise NotInfiniteType("n must be a nontrivial supernatural number")
    lhs = AbGroup.q(n)
    rhs = bernoulli_k(G, n).k0
    return RokhlinReport(excluded=lhs != rhs, lhs=lhs, rhs=rhs, classes=len(G.classes))


def localize_k(P, n):
    n = parse_supernatural(n)
    if n.is_one():
        return P
    return KPair(localize(P.k0, n), localize(P.k1, n), f"{P.label}[1/{n}]" if P.label else "")

"""Exact character tables by Dixon's modular method, and decomposition.

The class-algebra structure constants are computed from the group, and
their common eigenvectors are found over a prime field ``F_l`` with
``l = 1 (mod exponent)`` and ``l > 2*sqrt(|G|)``. Every character value is
lifted to the multiplicities of the e-th roots of unity among the
eigenvalues of the representing matrix, which are integers in ``[0, deg]``
and therefore recovered exactly from their residues.
"""
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from sympy import isprime, nextprime, primitive_root

from . import _kernels, cyclo
from .config import chartab_budget
from .errors import (
    BudgetExceeded,
    CharacterTableError,
    EmptyGSet,
    NegativeMultiplicity,
    NonIntegralMultiplicity,
)
from .repring import ClassFunction, alpha_certificate, perm_character

MAX_PRIME_ATTEMPTS = 25
SPLIT_SEED = 20240601


class _SplitFailure(Exception):
    pass


def admissible_primes(order, exponent):
    """Primes ``l = 1 (mod exponent)`` with ``l > 2*sqrt(order)``, smallest first."""
    lo = math.isqrt(4 * order)  # floor(2*sqrt(order))
    cand = lo + 1
    # first candidate congruent to 1 mod exponent
    cand += (1 - cand) % exponent
    while True:
        if cand > 2 and isprime(cand) and cand * cand > 4 * order:
            yield cand
        cand += exponent


def _root_of_unity(e, p):
    return pow(int(primitive_root(p)), (p - 1) // e, p)


@dataclass(frozen=True, eq=False)
class CharTable:
    """Irreducible characters of ``group``.

    ``irreducibles[i][c]`` is the value of character ``i`` on class ``c`` as a
    multiplicity vector over the ``exponent``-th roots of unity.
    """

    group: object
    exponent: int
    irreducibles: tuple
    degrees: tuple
    prime: int

    def __len__(self):
        return len(self.degrees)

    @cached_property
    def class_sizes(self):
        return tuple(c.size for c in self.group.classes)

    def value(self, i, c):
        return self.irreducibles[i][c]

    def residues(self, p):
        """Character values modulo ``p`` (requires ``p = 1 mod exponent``)."""
        z = _root_of_unity(self.exponent, p)
        return [[cyclo.eval_mod(v, z, p) for v in row] for row in self.irreducibles]

    def is_integral(self):
        return all(not any(cyclo.reduce(v)[1:]) for row in self.irreducibles for v in row)

    def as_complex(self):
        """Floating-point values, for display only."""
        zeta = np.exp(2j * np.pi * np.arange(self.exponent) / self.exponent)
        return np.array([[np.dot(v, zeta) for v in row] for row in self.irreducibles])


# -- Dixon -----------------------------------------------------------------------


def _class_matrices(G):
    e = G.elements
    einv = e[G.inverse_index]
    prods = np.stack([G.indices(einv[:, np.asarray(c.representative)]) for c in G.classes])
    return np.asarray(_kernels.class_structure(G.class_of.astype(np.int64), prods.astype(np.int64), len(G.classes)))


def _rref(a, p):
    r, piv = _kernels.rref_mod(np.ascontiguousarray(a, dtype=np.int64), p)
    return np.asarray(r), np.asarray(piv)


def _nullspace(a, p):
    """Basis rows of ``{x : a @ x == 0}`` over ``F_p``."""
    n = a.shape[1]
    r, piv = _rref(a, p)
    free = [j for j in range(n) if j not in set(piv.tolist())]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for t, f in enumerate(free):
        basis[t, f] = 1
        for i, pc in enumerate(piv):
            basis[t, pc] = (-r[i, f]) % p
    return basis


def _row_basis(rows, p):
    r, piv = _rref(rows, p)
    return r[: len(piv)], piv


def _split(space, A, p, rng):
    """Split the span of ``space`` (RREF rows) into eigenspaces of ``A``."""
    B, piv = space
    s = B.shape[0]
    X = _kernels.matmul_mod(A, np.ascontiguousarray(B.T), p)[piv]
    X = np.asarray(X)
    for _ in range(6):
        v = rng.integers(0, p, size=s, dtype=np.int64)
        krylov = [v]
        for _ in range(s):
            krylov.append(np.asarray(_kernels.matmul_mod(X, krylov[-1][:, None], p))[:, 0])
        K = np.stack(krylov, axis=1)  # columns v, Xv, X^2 v, ...
        R, kp = _rref(K, p)
        j = len(kp)  # columns 0..j-1 independent, column j is the first dependent one
        if j != s + 1 and list(kp) != list(range(j)):
            continue
        coeffs = np.zeros(j + 1, dtype=np.int64)
        coeffs[:j] = (-R[:j, j]) % p
        coeffs[j] = 1
        roots = np.asarray(_kernels.poly_roots_mod(coeffs, p))
        pieces = []
        for lam in roots:
            Y = _nullspace((X - int(lam) * np.eye(s, dtype=np.int64)) % p, p)
            if len(Y):
                rows = np.asarray(_kernels.matmul_mod(Y, B, p))
                pieces.append(_row_basis(rows, p))
        if sum(P[0].shape[0] for P in pieces) == s:
            return pieces
    raise _SplitFailure("eigenspaces do not span")


def _common_eigenvectors(mats, p, rng):
    r = mats.shape[0]
    spaces = [(np.eye(r, dtype=np.int64), np.arange(r))]
    schedule = [None] * 3 + list(range(r))
    for step in schedule:
        if all(S[0].shape[0] == 1 for S in spaces):
            break
        if step is None:
            coeffs = rng.integers(0, p, size=r, dtype=np.int64)
            A = np.tensordot(coeffs, mats, axes=1) % p
        else:
            A = mats[step] % p
        out = []
        for S in spaces:
            out.extend([S] if S[0].shape[0] == 1 else _split(S, A, p, rng))
        spaces = out
    if len(spaces) != r or any(S[0].shape[0] != 1 for S in spaces):
        raise _SplitFailure("class matrices not simultaneously diagonalized")
    return [S[0][0] for S in spaces]


def _dixon(G, mats, p):
    order = G.order
    e = G.exponent
    r = len(G.classes)
    sizes = [c.size for c in G.classes]
    inv = G.inverse_class
    rng = np.random.default_rng(SPLIT_SEED)
    vectors = _common_eigenvectors(mats, p, rng)
    z = _root_of_unity(e, p)
    zinv = pow(z, p - 2, p)
    e_inv = pow(e, p - 2, p)
    # fourier[t, j] = z^(-j t) / e
    fourier = np.array([[pow(zinv, (j * t) % e, p) * e_inv % p for j in range(e)] for t in range(e)], dtype=np.int64)
    pm = np.array(G.power_map(e), dtype=np.int64)
    rows = []
    for w in vectors:
        w = [int(x) for x in w]
        if w[0] == 0:
            raise _SplitFailure("eigenvector vanishes at the identity class")
        w0 = pow(w[0], p - 2, p)
        w = [x * w0 % p for x in w]
        norm = sum(w[i] * w[inv[i]] * pow(sizes[i], p - 2, p) for i in range(r)) % p
        if norm == 0:
            raise _SplitFailure("degenerate norm")
        d2 = order * pow(norm, p - 2, p) % p
        d = next((x for x in range(1, math.isqrt(order) + 1) if x * x % p == d2), None)
        if d is None:
            raise _SplitFailure("no admissible degree")
        chi = np.array([d * w[i] * pow(sizes[i], p - 2, p) % p for i in range(r)], dtype=np.int64)
        mult = np.asarray(_kernels.matmul_mod(chi[pm], fourier, p))  # (classes, e)
        if mult.max() > d or np.any(mult.sum(axis=1) != d):
            raise _SplitFailure("root-of-unity multiplicities out of range")
        rows.append((d, tuple(tuple(int(x) for x in vec) for vec in mult)))
    rows.sort(key=lambda dr: (dr[0], tuple(tuple(-x for x in vec) for vec in dr[1])))
    return CharTable(G, e, tuple(r_ for _, r_ in rows), tuple(d for d, _ in rows), p)


def _fold(prod, e):
    """Reduce the trailing pair of root-of-unity axes ``(t, u)`` to ``(t+u) mod e``."""
    idx = (np.arange(e)[:, None] + np.arange(e)[None, :]) % e
    out = np.zeros(prod.shape[:-2] + (e,), dtype=prod.dtype)
    for s in range(e):
        out[..., s] = prod[..., idx == s].sum(axis=-1)
    return out


def _reduce_many(vecs, e):
    red = np.array(cyclo.reduction_rows(e), dtype=object)
    return np.asarray(vecs, dtype=object) @ red


def verify_table(T):
    """Exact checks of the table invariants; returns a list of (name, passed)."""
    G = T.group
    e = T.exponent
    r = len(G.classes)
    sizes = np.array(T.class_sizes, dtype=object)
    V = np.array(T.irreducibles, dtype=object)  # (chars, classes, e)
    Vc = V[:, :, (-np.arange(e)) % e]
    checks = [("square", len(T.degrees) == r)]
    checks.append(("sum of squared degrees", sum(d * d for d in T.degrees) == G.order))
    checks.append(("degree at identity", all(cyclo.equals_int(row[0], d) for row, d in zip(T.irreducibles, T.degrees))))
    phi = len(cyclo.cyclotomic_poly(e)) - 1
    row_ok = True
    for a in range(len(T.degrees)):
        weighted = V[a] * sizes[:, None]
        prod = np.einsum("ct,bcu->btu", weighted, Vc)
        red = _reduce_many(_fold(prod, e), e)
        target = np.zeros((len(T.degrees), phi), dtype=object)
        target[a, 0] = G.order
        row_ok &= bool(np.all(red == target))
    checks.append(("row orthogonality", row_ok))
    col_ok = True
    for c in range(r):
        prod = np.einsum("it,icu->ctu", V[:, c, :], Vc)
        red = _reduce_many(_fold(prod, e), e)
        target = np.zeros((r, phi), dtype=object)
        target[c, 0] = G.order // T.class_sizes[c]
        col_ok &= bool(np.all(red == target))
    checks.append(("column orthogonality", col_ok))
    return checks


def character_table(G, budget=None):
    budget = chartab_budget() if budget is None else budget
    if G.order > budget:
        raise BudgetExceeded(f"|G| = {G.order} exceeds the character table budget {budget} (UHFK_CHARTAB_BUDGET)")
    mats = _class_matrices(G)
    reasons = []
    for attempt, p in enumerate(admissible_primes(G.order, G.exponent)):
        if attempt >= MAX_PRIME_ATTEMPTS:
            break
        try:
            T = _dixon(G, mats, p)
        except _SplitFailure as exc:
            reasons.append(f"{p}: {exc}")
            continue
        failed = [name for name, ok in verify_table(T) if not ok]
        if failed:
            reasons.append(f"{p}: failed {failed}")
            continue
        return T
    raise CharacterTableError("Dixon's method failed for all tried primes: " + "; ".join(reasons))


# -- decomposition -------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class VirtualCharacter:
    table: CharTable
    multiplicities: tuple

    def __eq__(self, other):
        return isinstance(other, VirtualCharacter) and other.table is self.table and other.multiplicities == self.multiplicities

    def __hash__(self):
        return hash(self.multiplicities)

    @property
    def degree(self):
        return sum(m * d for m, d in zip(self.multiplicities, self.table.degrees))

    def values(self):
        """Class-wise values as root-of-unity multiplicity vectors."""
        T = self.table
        e = T.exponent
        out = []
        for c in range(len(T.class_sizes)):
            acc = (0,) * e
            for m, row in zip(self.multiplicities, T.irreducibles):
                if m:
                    acc = cyclo.add(acc, cyclo.scale(row[c], m))
            out.append(acc)
        return out

    def __add__(self, other):
        return VirtualCharacter(self.table, tuple(a + b for a, b in zip(self.multiplicities, other.multiplicities)))

    def __mul__(self, other):
        """Ring product: pointwise product of characters, decomposed again."""
        prod = [cyclo.mul(u, v) for u, v in zip(self.values(), other.values())]
        return decompose_values(prod, self.table)

    def is_genuine(self):
        return all(m >= 0 for m in self.multiplicities)


def _as_vectors(values, e):
    return [cyclo.from_int(v, e) if isinstance(v, int) else tuple(v) for v in values]


def decompose_values(values, T):
    """Decompose class-wise values (ints or multiplicity vectors) by multi-prime CRT."""
    G = T.group
    e = T.exponent
    vecs = _as_vectors(values, e)
    order = G.order
    sizes = T.class_sizes
    inv = G.inverse_class
    bound = max(cyclo.l1(v) for v in vecs) * max(T.degrees)
    modulus = 1
    residues = [0] * len(T.degrees)
    for p in admissible_primes(order, e):
        if modulus > 2 * bound:
            break
        tab = T.residues(p)
        z = _root_of_unity(e, p)
        vals = [cyclo.eval_mod(v, z, p) for v in vecs]
        ginv = pow(order, p - 2, p)
        for i, row in enumerate(tab):
            m = sum(sizes[c] * vals[c] * row[inv[c]] for c in range(len(sizes))) * ginv % p
            # CRT combine residues[i] (mod modulus) with m (mod p)
            t = (m - residues[i]) * pow(modulus, p - 2, p) % p
            residues[i] += modulus * t
        modulus *= p
    mults = tuple(x - modulus if x > modulus // 2 else x for x in residues)
    vc = VirtualCharacter(T, mults)
    for got, want in zip(vc.values(), vecs):
        if not cyclo.equal(got, want):
            raise NonIntegralMultiplicity("class function is not a virtual character")
    return vc


def decompose(chi, T):
    """Multiplicities of the irreducibles in an integer-valued class function."""
    if chi.group is not T.group:
        raise ValueError("class function and table belong to different groups")
    return decompose_values(list(chi.values), T)


def inner_product_exact(values, T, i):
    """``<chi, chi_i>`` as a Fraction, by exact cyclotomic arithmetic (no primes)."""
    from fractions import Fraction

    e = T.exponent
    vecs = _as_vectors(values, e)
    acc = (0,) * e
    for c, v in enumerate(vecs):
        acc = cyclo.add(acc, cyclo.scale(cyclo.mul(v, cyclo.conj(T.irreducibles[i][c])), T.class_sizes[c]))
    red = cyclo.reduce(acc)
    if any(red[1:]):
        raise ValueError("inner product is not rational")
    return Fraction(red[0], T.group.order)


# -- absorption --------------------------------------------------------------------


@dataclass(frozen=True)
class AbsorptionCertificate:
    """``chi_{pi_p}**r == p * chi_W`` with ``W`` a genuine representation."""

    r: int
    w_alpha: VirtualCharacter
    prime: int
    gset_size: int

    @property
    def dimension(self):
        return self.w_alpha.degree


def absorption_checks(cert, chi):
    """Re-verify an absorption certificate against the permutation character."""
    p = cert.prime
    lhs = [cyclo.from_int(v**cert.r, cert.w_alpha.table.exponent) for v in chi.values]
    rhs = [cyclo.scale(v, p) for v in cert.w_alpha.values()]
    return [
        ("multiplicities nonnegative", cert.w_alpha.is_genuine()),
        ("p * chi_W == chi^r", all(cyclo.equal(a, b) for a, b in zip(lhs, rhs))),
        ("p * dim W == p^(r|Z|)", p * cert.dimension == p ** (cert.r * cert.gset_size)),
    ]


def absorption_certificate(G, Z, p, table=None):
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    if Z.size == 0:
        raise EmptyGSet("absorption needs a nonempty G-set")
    alpha = alpha_certificate(G, Z, p)
    chi = perm_character(G, Z, p)
    T = character_table(G) if table is None else table
    w = decompose(alpha.p(chi), T)
    if not w.is_genuine():
        raise NegativeMultiplicity(f"alpha has a negative multiplicity: {w.multiplicities}")
    cert = AbsorptionCertificate(alpha.r, w, p, Z.size)
    failed = [name for name, ok in absorption_checks(cert, chi) if not ok]
    if failed:
        raise AssertionError(f"absorption certificate failed: {failed}")
    return cert


__all__ = [
    "CharTable",
    "VirtualCharacter",
    "AbsorptionCertificate",
    "character_table",
    "decompose",
    "decompose_values",
    "inner_product_exact",
    "absorption_certificate",
    "absorption_checks",
    "verify_table",
    "admissible_primes",
    "ClassFunction",
]

"""Finite truncation oracle for the tensor/Tor atom rules in ``abgrp``.

Each atom is realized as a direct system of finitely generated groups:
``Z`` and ``Z/p^k`` are constant, ``Q_n`` is ``Z`` with transition
multiplication by ``d_M/d_N`` (``d_L = prod_{p|n} p^L``), and ``Q_n/Z`` is
``sum_{p|n} Z/p^L`` with transition multiplication by ``p^(M-N)``. Tensor
products and Tor are computed on presentations of the level-N and level-M
models; the image of level N inside level M is identified with Smith
normal form. A rule is accepted when this stable image agrees with the
one of the rule's own result.

Nothing here uses the rules being checked.
"""
import math
from dataclasses import dataclass

from sympy import Matrix, factorint
from sympy.matrices.normalforms import invariant_factors

from .abgrp import AbGroup


@dataclass
class Presented:
    """``Z^ngens / rowspan(rels)``."""

    ngens: int
    rels: list


@dataclass
class System:
    """A level-N group, a level-M group, and the transition map between them."""

    low: Presented
    high: Presented
    transition: list  # low.ngens x high.ngens integer matrix, row-vector convention


def _diag(orders):
    n = len(orders)
    rels = [[a if j == i else 0 for j in range(n)] for i, a in enumerate(orders) if a != 0]
    return Presented(n, rels)


def _diag_system(orders_low, orders_high, mults):
    n = len(mults)
    trans = [[mults[i] if j == i else 0 for j in range(n)] for i in range(n)]
    return System(_diag(orders_low), _diag(orders_high), trans)


def atom_cyclics(atom, N, M):
    """``[(order at N, order at M, transition multiplier)]`` for one atom."""
    if atom.kind == "Z":
        return [(0, 0, 1)]
    if atom.kind == "C":
        q = atom.p**atom.k
        return [(q, q, 1)]
    if atom.kind == "Q":
        rad = math.prod(atom.n.primes)
        return [(0, 0, rad ** (M - N))]
    return [(p**N, p**M, p ** (M - N)) for p in atom.n.primes]


def model(group, N, M):
    parts = [c for a in group.summands for c in atom_cyclics(a, N, M)]
    if not parts:
        return System(Presented(0, []), Presented(0, []), [])
    lo, hi, mu = zip(*parts)
    return _diag_system(list(lo), list(hi), list(mu))


def probe(q, N):
    """The constant system ``Z/q^N`` (``q = 0`` gives the constant ``Z``)."""
    order = q**N if q else 0
    return _diag_system([order], [order], [1])


# -- integer linear algebra ---------------------------------------------------------


def _kron(a, b):
    if not a or not b:
        rows_a = len(a)
        rows_b = len(b)
        return [[] for _ in range(rows_a * rows_b)]
    return [[x * y for x in ra for y in rb] for ra in a for rb in b]


def _eye(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def left_kernel(rows, ncols):
    """Basis of ``{x : x @ rows == 0}`` over the integers, by unimodular row reduction."""
    m = len(rows)
    aug = [list(r) + [1 if j == i else 0 for j in range(m)] for i, r in enumerate(rows)]
    top = 0
    for col in range(ncols):
        while True:
            live = [i for i in range(top, m) if aug[i][col] != 0]
            if not live:
                break
            piv = min(live, key=lambda i: abs(aug[i][col]))
            aug[top], aug[piv] = aug[piv], aug[top]
            done = True
            for i in range(top + 1, m):
                if aug[i][col]:
                    f = aug[i][col] // aug[top][col]
                    aug[i] = [x - f * y for x, y in zip(aug[i], aug[top])]
                    if aug[i][col]:
                        done = False
            if done:
                top += 1
                break
        if top == m:
            break
    return [r[ncols:] for r in aug[top:]]


def _prime_power_invariants(k, relations):
    """Isomorphism type of ``Z^k / rowspan(relations)``: (free rank, sorted prime powers)."""
    rels = [r for r in relations if any(r)]
    if not rels:
        return (k, ())
    factors = invariant_factors(Matrix(rels))
    nonzero = [abs(int(f)) for f in factors if f != 0]
    torsion = []
    for f in nonzero:
        torsion.extend(p**e for p, e in factorint(f).items())
    return (k - len(nonzero), tuple(sorted(torsion)))


def image_invariants(gen_rows, target):
    """Isomorphism type of the subgroup of ``target`` generated by ``gen_rows``."""
    k = len(gen_rows)
    if k == 0:
        return (0, ())
    stacked = [list(r) for r in gen_rows] + [list(r) for r in target.rels]
    kernel = left_kernel(stacked, target.ngens)
    return _prime_power_invariants(k, [row[:k] for row in kernel])


# -- functors on systems ------------------------------------------------------------------


def _tensor_presented(a, b):
    rels = _kron(a.rels, _eye(b.ngens)) + _kron(_eye(a.ngens), b.rels)
    return Presented(a.ngens * b.ngens, rels)


def tensor_system(A, B):
    return System(
        _tensor_presented(A.low, B.low),
        _tensor_presented(A.high, B.high),
        _kron(A.transition, B.transition),
    )


def _relation_support(p):
    """Generators carrying a relation in a diagonal presentation, with their orders."""
    out = []
    for row in p.rels:
        (i,) = [j for j, x in enumerate(row) if x]
        out.append((i, row[i]))
    return out


def _tor_level(A, B):
    """Tor of diagonal ``A`` with presented ``B`` as (generator rows, ambient group)."""
    sup = _relation_support(A)
    r = len(sup)
    ambient = Presented(r * B.ngens, _kron(_eye(r), B.rels))
    if r == 0 or B.ngens == 0:
        return [], ambient, sup
    phi = _kron([row for row in A.rels], _eye(B.ngens))
    upstairs = _kron(_eye(A.ngens), B.rels)
    kernel = left_kernel(phi + upstairs, A.ngens * B.ngens)
    gens = [row[: r * B.ngens] for row in kernel]
    return gens, ambient, sup


def tor_image_invariants(A, B):
    """Stable image of ``Tor(A_N, B_N)`` in ``Tor(A_M, B_M)``; ``A`` must be diagonal."""
    gens, _, sup_lo = _tor_level(A.low, B.low)
    _, ambient_hi, sup_hi = _tor_level(A.high, B.high)
    if not gens:
        return (0, ())
    hi_pos = {i: t for t, (i, _) in enumerate(sup_hi)}
    # lift of the transition to the relation modules: a_i e_i -> u_i a_i e_i
    lift = [[0] * len(sup_hi) for _ in sup_lo]
    for t, (i, a_lo) in enumerate(sup_lo):
        u = A.transition[i][i]
        a_hi = dict(sup_hi)[i]
        assert (u * a_lo) % a_hi == 0
        lift[t][hi_pos[i]] = u * a_lo // a_hi
    trans = _kron(lift, B.transition)
    images = [[sum(x * trans[j][c] for j, x in enumerate(g) if x) for c in range(ambient_hi.ngens)] for g in gens]
    return image_invariants(images, ambient_hi)


def system_image_invariants(S):
    return image_invariants(S.transition, S.high) if S.low.ngens else (0, ())


# -- rule checks -------------------------------------------------------------------------


PROBE_PRIMES = (2, 3, 5, 7)


def levels_for(*groups, low=None):
    kmax = max([a.k for g in groups for a in g.summands if a.kind == "C"] + [1])
    N = max(kmax, low or 1)
    return N, 3 * N + 8


def check_tensor(A, B, rule_result, N=None):
    """True when ``rule_result`` matches the truncated tensor product of ``A`` and ``B``."""
    N, M = levels_for(A, B, rule_result, low=N)
    lhs = tensor_system(model(A, N, M), model(B, N, M))
    rhs = model(rule_result, N, M)
    for q in (0,) + PROBE_PRIMES:
        P = probe(q, N)
        if system_image_invariants(tensor_system(lhs, P)) != system_image_invariants(tensor_system(rhs, P)):
            return False
    return True


def check_tor(A, B, rule_result, N=None):
    """True when ``rule_result`` matches the truncated Tor of ``A`` and ``B``."""
    N, M = levels_for(A, B, rule_result, low=N)
    lhs = tor_image_invariants(model(A, N, M), model(B, N, M))
    rhs = system_image_invariants(model(rule_result, N, M))
    return lhs == rhs


def truncated_tensor(A, B, N=None):
    """Stable-image invariants of the truncated tensor product (no probe)."""
    N, M = levels_for(A, B, low=N)
    return system_image_invariants(tensor_system(model(A, N, M), model(B, N, M)))


def truncated_tor(A, B, N=None):
    N, M = levels_for(A, B, low=N)
    return tor_image_invariants(model(A, N, M), model(B, N, M))


def truncated(G, N=None):
    N, M = levels_for(G, low=N)
    return system_image_invariants(model(G, N, M))

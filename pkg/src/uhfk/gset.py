"""Finite G-sets and orbit counts of cyclic subgroups."""
from functools import cached_property

import numpy as np

from . import _kernels
from .errors import HomomorphismError, NotInGroup
from .grammar import cycles_to_perm, parse_gset_spec
from .group import PermGroup


class GSet:
    """A finite set ``{0, ..., size-1}`` with a G-action given per generator.

    ``action[s]`` is the permutation by which ``group.generators[s]`` acts.
    The assignment is checked to extend to a homomorphism at construction.
    """

    def __init__(self, group, size, action, label=None):
        self.group = group
        self.size = int(size)
        self.action = np.asarray(action, dtype=np.int64).reshape(len(group.generators), self.size)
        self.label = label
        for s, a in enumerate(self.action):
            if sorted(a.tolist()) != list(range(self.size)):
                raise HomomorphismError(f"generator {s} does not act by a permutation")
        self.images  # eager homomorphism check

    def __repr__(self):
        return f"GSet({self.label or '?'}, size={self.size})"

    @cached_property
    def images(self):
        """``images[i]`` is the permutation by which element ``i`` acts."""
        G = self.group
        imgs = np.zeros((G.order, self.size), dtype=np.int64)
        imgs[0] = np.arange(self.size)
        for nodes, parents, via in G.bfs_levels:
            imgs[nodes] = self.action[via[:, None], imgs[parents]]
        # every Cayley edge x -> g_s * x must be respected
        for s in range(len(G.generators)):
            if not np.array_equal(imgs[G.left_mult[:, s]], self.action[s][imgs]):
                raise HomomorphismError("generator action does not extend to a homomorphism")
        return imgs

    def image(self, g):
        return self.images[self.group.index(g)]

    def orbits(self):
        """Orbit label (minimal point) of each point under the whole group."""
        if self.size == 0:
            return np.zeros(0, dtype=np.int64)
        return np.asarray(_kernels.orbit_labels(self.action, self.size))

    def fixed_points(self, g):
        img = self.image(g)
        return int(np.count_nonzero(img == np.arange(self.size)))


def cyclic_orbit_count(Z, g):
    """Number of orbits of the cyclic group generated by ``g`` on ``Z``."""
    if not Z.group.contains(g):
        raise NotInGroup(f"{tuple(g)} is not an element of the group")
    return _cycle_count(Z.image(g))


def _cycle_count(perm):
    if len(perm) == 0:
        return 0
    labels = _kernels.orbit_labels(np.asarray(perm, dtype=np.int64)[None, :], len(perm))
    return int(np.unique(labels).size)


def class_orbit_counts(Z):
    """``cyclic_orbit_count`` on each conjugacy class representative, in class order."""
    G = Z.group
    return [_cycle_count(Z.images[c.members[0]]) for c in G.classes]


# -- constructions ----------------------------------------------------------------


def _trivial(G, n):
    return n, np.tile(np.arange(n), (len(G.generators), 1))


def _regular(G):
    return G.order, G.left_mult.T.copy()


def _coset(G, cycle_lists):
    sub_gens = [cycles_to_perm(c, G.degree) for c in cycle_lists]
    for h in sub_gens:
        if not G.contains(h):
            raise NotInGroup(f"subgroup generator {h} is not in the group")
    H = PermGroup(G.degree, sub_gens, budget=G.budget)
    e = G.elements
    coset_min = None
    for h in H.elements:
        # index of x*h for every x
        idx = G.indices(e[:, h])
        coset_min = idx if coset_min is None else np.minimum(coset_min, idx)
    reps = np.unique(coset_min)
    point_of = np.searchsorted(reps, coset_min)
    action = point_of[G.left_mult[reps]].T  # (ngens, npoints)
    return len(reps), action


def _compile(G, node):
    kind = node[0]
    if kind == "trivial":
        return _trivial(G, node[1])
    if kind == "regular":
        return _regular(G)
    if kind == "coset":
        return _coset(G, node[1])
    if kind == "union":
        n1, a1 = _compile(G, node[1])
        n2, a2 = _compile(G, node[2])
        return n1 + n2, np.concatenate([a1, a2 + n1], axis=1)
    raise ValueError(f"unknown gset node {kind!r}")


def build_gset(G, spec):
    """Build a GSet over ``G`` from a gset-spec string or parsed node."""
    node = parse_gset_spec(spec) if isinstance(spec, str) else spec
    size, action = _compile(G, node)
    return GSet(G, size, action, label=spec if isinstance(spec, str) else None)

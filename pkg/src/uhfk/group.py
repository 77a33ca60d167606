"""Finite permutation groups.

Elements are image arrays ``g[i]`` of permutations of ``{0, ..., degree-1}``
and the product is composition, ``(a*b)[i] = a[b[i]]``. The element list is
sorted lexicographically, so the identity always has index 0 and the
minimal member of any subset is the one with the smallest index.
"""
import math
from functools import cached_property, reduce
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .config import element_budget
from .errors import BudgetExceeded, NotInGroup, ParseError
from .grammar import cycles_to_perm, parse_group_spec

_MAX_DEGREE = 65535


@dataclass(frozen=True)
class ConjClass:
    representative: tuple
    size: int
    members: tuple  # element indices, ascending


def _keys(rows):
    rows = np.ascontiguousarray(rows, dtype=">u2")
    return rows.view(np.dtype((np.void, 2 * rows.shape[1]))).ravel()


class PermGroup:
    """A finite group given by permutation generators.

    The element list, conjugacy classes and derived tables are computed on
    first use and never mutated afterwards.
    """

    def __init__(self, degree, generators, budget=None, name=None):
        if not 1 <= degree <= _MAX_DEGREE:
            raise ParseError(f"degree must be in 1..{_MAX_DEGREE}, got {degree}", str(degree))
        gens = []
        for g in generators:
            g = tuple(int(x) for x in g)
            if len(g) != degree or sorted(g) != list(range(degree)):
                raise ParseError(f"{g} is not a permutation of {degree} points", str(g))
            gens.append(g)
        if not gens:
            gens = [tuple(range(degree))]
        self.degree = degree
        self.generators = tuple(gens)
        self.budget = element_budget() if budget is None else budget
        self.name = name

    def __repr__(self):
        label = self.name or f"perm {self.degree}"
        return f"PermGroup({label!r}, order={self.order})"

    # -- elements -------------------------------------------------------

    @cached_property
    def _closure(self):
        ident = tuple(range(self.degree))
        gens = np.array(self.generators, dtype=np.int64)
        seen = {ident: 0}
        found = [ident]
        parent = [-1]
        via = [-1]
        frontier = np.array([ident], dtype=np.int64)
        front_ids = [0]
        while len(frontier):
            nxt, nxt_ids = [], []
            for s in range(len(gens)):
                # generator applied after the frontier element
                prods = gens[s][frontier]
                for row, src in zip(map(tuple, prods.tolist()), front_ids):
                    if row in seen:
                        continue
                    seen[row] = len(found)
                    nxt_ids.append(len(found))
                    found.append(row)
                    parent.append(src)
                    via.append(s)
                    nxt.append(row)
                    if len(found) > self.budget:
                        raise BudgetExceeded(
                            f"group has more than {self.budget} elements (UHFK_ELEMENT_BUDGET)"
                        )
            frontier = np.array(nxt, dtype=np.int64).reshape(-1, self.degree)
            front_ids = nxt_ids
        elems = np.array(found, dtype=np.int64)
        order = np.lexsort(elems.T[::-1])
        rank = np.empty_like(order)
        rank[order] = np.arange(len(order))
        parent = np.array(parent)
        bfs_parent = np.where(parent >= 0, rank[np.maximum(parent, 0)], -1)
        # BFS discovery order, expressed in sorted indices
        return elems[order], rank, bfs_parent[order], np.array(via)[order]

    @property
    def elements(self):
        return self._closure[0]

    @cached_property
    def _sorted_keys(self):
        return _keys(self.elements)

    @property
    def order(self):
        return len(self.elements)

    def element(self, i):
        return tuple(int(x) for x in self.elements[i])

    def indices(self, perms):
        """Indices of the rows of ``perms``; -1 where a row is not in the group."""
        perms = np.asarray(perms, dtype=np.int64).reshape(-1, self.degree)
        keys = _keys(perms)
        pos = np.searchsorted(self._sorted_keys, keys)
        pos = np.minimum(pos, self.order - 1)
        hit = self._sorted_keys[pos] == keys
        return np.where(hit, pos, -1)

    def index(self, perm):
        perm = tuple(perm)
        if len(perm) != self.degree:
            raise NotInGroup(f"{perm} has wrong degree for this group")
        i = int(self.indices([perm])[0])
        if i < 0:
            raise NotInGroup(f"{perm} is not an element of the group")
        return i

    def contains(self, perm):
        perm = tuple(perm)
        return len(perm) == self.degree and int(self.indices([perm])[0]) >= 0

    def compose(self, a, b):
        a = np.asarray(a)
        return tuple(int(x) for x in a[np.asarray(b)])

    @cached_property
    def inverse_index(self):
        e = self.elements
        inv = np.empty_like(e)
        rows = np.arange(self.order)[:, None]
        inv[rows, e] = np.arange(self.degree)[None, :]
        return self.indices(inv)

    @cached_property
    def left_mult(self):
        """``left_mult[i, s]`` is the index of ``generators[s] * elements[i]``."""
        gens = np.array(self.generators, dtype=np.int64)
        cols = [self.indices(g[self.elements]) for g in gens]
        return np.stack(cols, axis=1)

    @cached_property
    def bfs_levels(self):
        """Spanning tree of the Cayley graph: list of (nodes, parents, generator) per level."""
        _, _, parent, via = self._closure
        depth = np.zeros(self.order, dtype=np.int64)
        # parents are discovered before children, so one pass in discovery order suffices
        _, rank, _, _ = self._closure
        for i in rank[1:]:
            depth[i] = depth[parent[i]] + 1
        levels = []
        for d in range(1, int(depth.max()) + 1 if self.order > 1 else 1):
            nodes = np.nonzero(depth == d)[0]
            levels.append((nodes, parent[nodes], via[nodes]))
        return levels

    # -- conjugacy ----------------------------------------------------------

    @cached_property
    def _class_data(self):
        e = self.elements
        conj = []
        for g in self.generators:
            g = np.array(g)
            ginv = np.argsort(g)
            # g * x * g^-1 as image array
            conj.append(self.indices(g[e[:, ginv]]))
        labels = _kernels.orbit_labels(np.array(conj, dtype=np.int64), self.order)
        labels = np.asarray(labels)
        reps = np.unique(labels)  # minimal member of each class, ascending
        class_of = np.searchsorted(reps, labels)
        classes = []
        for c, rep in enumerate(reps):
            members = np.nonzero(class_of == c)[0]
            classes.append(ConjClass(self.element(int(rep)), len(members), tuple(int(m) for m in members)))
        return classes, class_of

    @property
    def classes(self):
        return self._class_data[0]

    @property
    def class_of(self):
        return self._class_data[1]

    def class_index(self, perm):
        return int(self.class_of[self.index(perm)])

    # -- cyclic subgroups ------------------------------------------------------

    def cyclic_subgroup(self, g):
        """``[g^0, g^1, ..., g^(ord g - 1)]`` as image tuples."""
        g = tuple(g)
        self.index(g)
        ident = tuple(range(self.degree))
        out = [ident]
        cur = g
        while cur != ident:
            out.append(cur)
            cur = self.compose(g, cur)
        return out

    def element_order(self, g):
        return len(self.cyclic_subgroup(g))

    @cached_property
    def exponent(self):
        return reduce(math.lcm, (self.element_order(c.representative) for c in self.classes), 1)

    def power_map(self, exponent=None):
        """``pm[c][t]`` is the class of ``rep_c ** t`` for ``t`` in ``range(exponent)``."""
        e = self.exponent if exponent is None else exponent
        pm = []
        for c in self.classes:
            powers = self.cyclic_subgroup(c.representative)
            idx = self.indices(powers)
            cls = self.class_of[idx]
            pm.append([int(cls[t % len(powers)]) for t in range(e)])
        return pm

    @cached_property
    def inverse_class(self):
        inv = self.inverse_index
        return [int(self.class_of[inv[c.members[0]]]) for c in self.classes]


# -- construction from specs -------------------------------------------------


def _family(node):
    """Compile a parsed spec to (degree, generators)."""
    kind = node[0]
    if kind == "cyclic":
        n = node[1]
        return n, [tuple((i + 1) % n for i in range(n))]
    if kind == "symmetric":
        n = node[1]
        cycle = tuple((i + 1) % n for i in range(n))
        if n == 1:
            return 1, [cycle]
        swap = (1, 0) + tuple(range(2, n))
        return n, [swap, cycle]
    if kind == "dihedral":
        n = node[1]
        rot = tuple((i + 1) % n for i in range(n))
        refl = tuple((-i) % n for i in range(n))
        return n, [rot, refl]
    if kind == "product":
        d1, g1 = _family(node[1])
        d2, g2 = _family(node[2])
        left = [tuple(g) + tuple(range(d1, d1 + d2)) for g in g1]
        right = [tuple(range(d1)) + tuple(d1 + x for x in g) for g in g2]
        return d1 + d2, left + right
    if kind == "perm":
        degree = node[1]
        return degree, [cycles_to_perm(c, degree) for c in node[2]]
    raise ParseError(f"unknown group node {kind!r}", kind)


def build_group(spec, budget=None):
    """Build a PermGroup from a group-spec string or parsed node."""
    node = parse_group_spec(spec) if isinstance(spec, str) else spec
    degree, gens = _family(node)
    group = PermGroup(degree, gens, budget=budget, name=spec if isinstance(spec, str) else None)
    group.elements  # enforce the budget at construction
    return group


def conjugacy_classes(group):
    return group.classes


def cyclic_subgroup(group, g):
    return group.cyclic_subgroup(g)

"""Integer class functions, permutation characters and the two certificates.

For a finite G-set ``Z`` and ``k >= 1`` the permutation character of G on
``{1..k}^Z`` is ``chi(g) = k ** (number of <g>-orbits on Z)``. Its distinct
values ``v_1..v_r`` give an annihilating polynomial ``m(t) = prod (t - v_i)``,
from which both certificates are read off:

* alpha: ``chi**r == k * p(chi)``, since each ``v_i`` is a positive power of k
  and so divides every non-leading coefficient of ``m``;
* beta: ``chi * q(chi) == k**l`` with ``k**l = prod v_i``.
"""
from dataclasses import dataclass

from . import _kernels
from .config import enumeration_budget
from .errors import BudgetExceeded, EmptyGSet
from .gset import class_orbit_counts


@dataclass(frozen=True)
class ClassFunction:
    group: object
    values: tuple  # one int per conjugacy class, in group.classes order

    def __post_init__(self):
        if len(self.values) != len(self.group.classes):
            raise ValueError("one value per conjugacy class expected")

    @classmethod
    def constant(cls, group, c):
        return cls(group, (c,) * len(group.classes))

    def _other(self, other):
        if isinstance(other, ClassFunction):
            if other.group is not self.group:
                raise ValueError("class functions live on different groups")
            return other.values
        return (other,) * len(self.values)

    def __add__(self, other):
        return ClassFunction(self.group, tuple(a + b for a, b in zip(self.values, self._other(other))))

    __radd__ = __add__

    def __sub__(self, other):
        return ClassFunction(self.group, tuple(a - b for a, b in zip(self.values, self._other(other))))

    def __mul__(self, other):
        return ClassFunction(self.group, tuple(a * b for a, b in zip(self.values, self._other(other))))

    __rmul__ = __mul__

    def __pow__(self, e):
        return ClassFunction(self.group, tuple(a**e for a in self.values))

    def __eq__(self, other):
        if isinstance(other, ClassFunction):
            return other.group is self.group and other.values == self.values
        return NotImplemented

    def __hash__(self):
        return hash(self.values)

    def is_zero(self):
        return not any(self.values)

    def at_identity(self):
        return self.values[0]


@dataclass(frozen=True)
class IntPolynomial:
    coefficients: tuple  # constant term first

    def __post_init__(self):
        c = list(self.coefficients)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coefficients", tuple(int(x) for x in c))

    @classmethod
    def from_roots(cls, roots):
        c = [1]
        for v in roots:
            # multiply by (t - v)
            c = [-v * c[0]] + [c[i - 1] - v * c[i] for i in range(1, len(c))] + [c[-1]]
        return cls(tuple(c))

    @property
    def degree(self):
        return len(self.coefficients) - 1

    def __call__(self, x):
        """Evaluate at an integer or pointwise on a ClassFunction."""
        if isinstance(x, ClassFunction):
            return ClassFunction(x.group, tuple(self(v) for v in x.values))
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __str__(self):
        terms = [(i, c) for i, c in enumerate(self.coefficients) if c]
        if not terms:
            return "0"
        if terms[-1][1] > 0:
            terms.reverse()
        out = ""
        for n, (i, c) in enumerate(terms):
            mag = abs(c)
            body = {0: f"{mag}", 1: "t" if mag == 1 else f"{mag}t"}.get(i, f"t^{i}" if mag == 1 else f"{mag}t^{i}")
            if n == 0:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out


@dataclass(frozen=True)
class AlphaCertificate:
    """``chi**r == k * p(chi)`` pointwise; ``degenerate`` marks the k = 1 case."""

    r: int
    p: IntPolynomial
    k: int
    degenerate: bool = False

    def holds(self, chi):
        return chi**self.r == self.k * self.p(chi)


@dataclass(frozen=True)
class BetaCertificate:
    """``chi * q(chi) == k**l`` pointwise; ``degenerate`` marks the k = 1 case."""

    q: IntPolynomial
    l: int
    k: int
    degenerate: bool = False

    def holds(self, chi):
        return chi * self.q(chi) == ClassFunction.constant(chi.group, self.k**self.l)


def perm_character(G, Z, k):
    """``chi(g) = k ** |Z/<g>|`` on each conjugacy class."""
    if k < 1:
        raise ValueError("k must be positive")
    if Z.group is not G:
        raise ValueError("G-set belongs to a different group")
    return ClassFunction(G, tuple(k**c for c in class_orbit_counts(Z)))


def perm_character_bruteforce(G, Z, k, budget=None):
    """Count the maps ``f: Z -> {1..k}`` with ``f o g == f`` by explicit enumeration."""
    if k < 1:
        raise ValueError("k must be positive")
    budget = enumeration_budget() if budget is None else budget
    if k**Z.size > budget:
        raise BudgetExceeded(f"{k}^{Z.size} maps exceed the enumeration budget {budget} (UHFK_ENUM_BUDGET)")
    vals = []
    for c in G.classes:
        perm = Z.images[c.members[0]]
        vals.append(int(_kernels.count_fixed_maps(perm, k)))
    return ClassFunction(G, tuple(vals))


def annihilating_polynomial(chi):
    """``prod (t - v)`` over the distinct values ``v`` of ``chi``."""
    if chi.is_zero():
        raise ValueError("the zero class function has no annihilating polynomial of this form")
    m = IntPolynomial.from_roots(sorted(set(chi.values)))
    if not m(chi).is_zero():
        raise AssertionError("annihilating polynomial does not vanish on chi")
    return m


def _prepare(G, Z, k):
    if Z.size == 0:
        raise EmptyGSet("the permutation character of an empty G-set is constant 1; no certificate exists")
    if k < 1:
        raise ValueError("k must be positive")
    return perm_character(G, Z, k)


def alpha_certificate(G, Z, k):
    chi = _prepare(G, Z, k)
    if k == 1:
        cert = AlphaCertificate(1, IntPolynomial((1,)), 1, degenerate=True)
    else:
        m = annihilating_polynomial(chi)
        r = m.degree
        lower = [-c for c in m.coefficients[:-1]]
        if any(c % k for c in lower):
            raise AssertionError("non-leading coefficient not divisible by k")
        cert = AlphaCertificate(r, IntPolynomial(tuple(c // k for c in lower)), k)
    if not cert.holds(chi):
        raise AssertionError("alpha certificate failed exact verification")
    return cert


def beta_certificate(G, Z, k):
    chi = _prepare(G, Z, k)
    if k == 1:
        cert = BetaCertificate(IntPolynomial((1,)), 0, 1, degenerate=True)
    else:
        values = sorted(set(chi.values))
        m = annihilating_polynomial(chi)
        r = len(values)
        s = m.coefficients[1:]
        sign = 1 if (r + 1) % 2 == 0 else -1
        q = IntPolynomial(tuple(sign * c for c in s))
        prod = 1
        for v in values:
            prod *= v
        l = 0
        while prod % k == 0 and prod > 1:
            prod //= k
            l += 1
        if prod != 1:
            raise AssertionError("product of character values is not a power of k")
        cert = BetaCertificate(q, l, k)
    if not cert.holds(chi):
        raise AssertionError("beta certificate failed exact verification")
    return cert

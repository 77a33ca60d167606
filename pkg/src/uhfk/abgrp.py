"""Normal forms for direct sums of Z, Z/p^k, Q_n and Q_n/Z.

``Q_n`` is the group of rationals whose denominators divide the
supernatural number ``n``; only infinite-type ``n`` are allowed, where
``Q_n`` coincides with the localization ``Z[1/n]``. Summands are kept in the
order-canonical form they were built in (``Q[6^inf]/Z`` stays one summand),
while equality compares prime-primary decompositions, i.e. isomorphism.
"""
import re
from collections import Counter
from dataclasses import dataclass
from functools import cached_property

from sympy import factorint

from . import supernat as sn
from .errors import NotInfiniteType, ParseError
from .supernat import ONE, Supernatural, parse_supernatural

_RANK = {"Z": 0, "C": 1, "Q": 2, "QZ": 3}


@dataclass(frozen=True)
class Atom:
    kind: str  # "Z" | "C" | "Q" | "QZ"
    p: int = 0
    k: int = 0
    n: Supernatural = ONE

    def sort_key(self):
        return (_RANK[self.kind], self.p, self.k, self.n.factors)

    def __str__(self):
        if self.kind == "Z":
            return "Z"
        if self.kind == "C":
            return f"Z/{self.p}" if self.k == 1 else f"Z/{self.p}^{self.k}"
        if self.kind == "Q":
            return f"Q[{self.n}]"
        return f"Q[{self.n}]/Z"

    @property
    def torsion_free(self):
        return self.kind in ("Z", "Q")


def _check_inf(n, saturate):
    n = parse_supernatural(n)
    if sn.is_infinite_type(n):
        return n
    if saturate:
        return sn.saturate(n)
    raise NotInfiniteType(f"{n} is not of infinite type")


def _normal(atom):
    """Atom -> tuple of atoms (empty for the zero group)."""
    if atom.kind == "Q" and atom.n.is_one():
        return (Atom("Z"),)
    if atom.kind == "QZ" and atom.n.is_one():
        return ()
    return (atom,)


class AbGroup:
    __slots__ = ("summands", "__dict__")

    def __init__(self, atoms=()):
        out = []
        for a in atoms:
            if a.kind in ("Q", "QZ") and not sn.is_infinite_type(a.n):
                raise NotInfiniteType(f"{a.n} is not of infinite type")
            if a.kind == "C" and (a.k < 1 or len(factorint(a.p)) != 1 or factorint(a.p).get(a.p) != 1):
                raise ValueError(f"Z/{a.p}^{a.k} is not a primary cyclic group")
            out.extend(_normal(a))
        self.summands = tuple(sorted(out, key=Atom.sort_key))

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def z(cls, count=1):
        return cls([Atom("Z")] * count)

    @classmethod
    def cyclic(cls, order):
        """Z/order split into primary parts; ``order == 0`` gives Z."""
        if order == 0:
            return cls.z()
        return cls([Atom("C", p, k) for p, k in factorint(abs(order)).items()])

    @classmethod
    def q(cls, n, count=1, saturate=False):
        return cls([Atom("Q", n=_check_inf(n, saturate))] * count)

    @classmethod
    def q_mod_z(cls, n, count=1, saturate=False):
        return cls([Atom("QZ", n=_check_inf(n, saturate))] * count)

    # -- comparison ------------------------------------------------------------

    @cached_property
    def primary_key(self):
        zs, cyc, qs, prufer = 0, [], [], []
        for a in self.summands:
            if a.kind == "Z":
                zs += 1
            elif a.kind == "C":
                cyc.append((a.p, a.k))
            elif a.kind == "Q":
                qs.append(a.n.factors)
            else:
                prufer.extend(a.n.primes)
        return (zs, tuple(sorted(cyc)), tuple(sorted(qs)), tuple(sorted(prufer)))

    def __eq__(self, other):
        return isinstance(other, AbGroup) and self.primary_key == other.primary_key

    def __hash__(self):
        return hash(self.primary_key)

    def __str__(self):
        return " + ".join(map(str, self.summands)) if self.summands else "0"

    def __repr__(self):
        return f"AbGroup({str(self)!r})"

    def __add__(self, other):
        return direct_sum(self, other)

    def is_zero(self):
        return not self.summands

    def is_torsion(self):
        return all(not a.torsion_free for a in self.summands)

    def rank(self):
        return sum(1 for a in self.summands if a.torsion_free)


# -- atom rules --------------------------------------------------------------


def _tensor_atoms(a, b):
    if a.kind == "Z":
        return (b,)
    if b.kind == "Z":
        return (a,)
    if _RANK[a.kind] > _RANK[b.kind]:
        a, b = b, a
    if a.kind == "C":
        if b.kind == "C":
            return (Atom("C", a.p, min(a.k, b.k)),) if a.p == b.p else ()
        if b.kind == "Q":
            return () if a.p in b.n.primes else (a,)
        return ()  # torsion (x) divisible torsion
    if a.kind == "Q":
        if b.kind == "Q":
            return _normal(Atom("Q", n=sn.lcm(a.n, b.n)))
        return _normal(Atom("QZ", n=b.n.without(a.n)))
    return ()  # Q_m/Z (x) Q_n/Z


def _tor_atoms(a, b):
    if a.torsion_free or b.torsion_free:
        return ()
    if _RANK[a.kind] > _RANK[b.kind]:
        a, b = b, a
    if a.kind == "C":
        if b.kind == "C":
            return (Atom("C", a.p, min(a.k, b.k)),) if a.p == b.p else ()
        return (a,) if a.p in b.n.primes else ()
    return _normal(Atom("QZ", n=sn.gcd(a.n, b.n)))


def direct_sum(*groups):
    return AbGroup([a for g in groups for a in g.summands])


def tensor(A, B):
    return AbGroup([c for a in A.summands for b in B.summands for c in _tensor_atoms(a, b)])


def tor(A, B):
    return AbGroup([c for a in A.summands for b in B.summands for c in _tor_atoms(a, b)])


def localize(A, n, strict=True):
    """``A[1/n]``, computed as ``A (x) Q_n``.

    A finite-type ``n`` other than 1 raises NotInfiniteType when ``strict``;
    otherwise it is saturated first.
    """
    n = parse_supernatural(n)
    if n.is_one():
        return A
    return tensor(A, AbGroup.q(n, saturate=not strict))


def q_quotient(a, b):
    """``Q_a / Q_b`` for infinite-type ``b | a``, as the torsion group ``Q_{a minus b}/Z``."""
    a = _check_inf(a, False)
    b = _check_inf(b, False)
    if not sn.divides(b, a):
        raise ValueError(f"Q[{b}] is not a subgroup of Q[{a}]")
    return AbGroup.q_mod_z(a.without(b))


# -- parsing -------------------------------------------------------------------


class _ExprParser:
    """Sums of atoms, optionally combined with tensor/tor/localize/quotient calls."""

    _ws = re.compile(r"\s*")
    _num = re.compile(r"\d+")
    _word = re.compile(r"[A-Za-z]+")
    _supernat = re.compile(r"[0-9^*a-z ]+")

    def __init__(self, text, saturate):
        self.text = text
        self.pos = 0
        self.saturate = saturate

    def error(self, what):
        rest = self.text[self.pos:].strip()
        token = rest.split()[0] if rest else "<end>"
        raise ParseError(f"{what} at position {self.pos} near {token!r} in {self.text!r}", token)

    def skip(self):
        self.pos = self._ws.match(self.text, self.pos).end()

    def peek(self, s):
        self.skip()
        return self.text.startswith(s, self.pos)

    def eat(self, s):
        if not self.peek(s):
            self.error(f"expected {s!r}")
        self.pos += len(s)

    def supernat(self, closing):
        self.skip()
        end = self.text.find(closing, self.pos)
        if end < 0:
            self.error(f"expected {closing!r}")
        raw = self.text[self.pos:end]
        self.pos = end
        return parse_supernatural(raw)

    def parse(self):
        g = self.expr()
        self.skip()
        if self.pos != len(self.text):
            self.error("unexpected trailing input")
        return g

    def expr(self):
        g = self.term()
        while self.peek("+"):
            self.eat("+")
            g = direct_sum(g, self.term())
        return g

    def term(self):
        self.skip()
        if self.peek("("):
            self.eat("(")
            g = self.expr()
            self.eat(")")
            return g
        if self.peek("0"):
            self.eat("0")
            return AbGroup.zero()
        m = self._word.match(self.text, self.pos)
        if m is None:
            self.error("expected a group")
        word = m.group(0)
        if word in ("tensor", "tor"):
            self.pos = m.end()
            self.eat("(")
            a = self.expr()
            self.eat(",")
            b = self.expr()
            self.eat(")")
            return tensor(a, b) if word == "tensor" else tor(a, b)
        if word == "localize":
            self.pos = m.end()
            self.eat("(")
            a = self.expr()
            self.eat(",")
            n = self.supernat(")")
            self.eat(")")
            return localize(a, n, strict=not self.saturate)
        if word == "quotient":
            self.pos = m.end()
            self.eat("(")
            a = self.supernat(",")
            self.eat(",")
            b = self.supernat(")")
            self.eat(")")
            return q_quotient(a, b)
        if word == "Z":
            self.pos = m.end()
            if self.peek("/"):
                self.eat("/")
                self.skip()
                num = self._num.match(self.text, self.pos)
                if num is None:
                    self.error("expected an order after 'Z/'")
                self.pos = num.end()
                order = int(num.group(0))
                if self.peek("^"):
                    self.eat("^")
                    self.skip()
                    e = self._num.match(self.text, self.pos)
                    if e is None:
                        self.error("expected an exponent")
                    self.pos = e.end()
                    order = order ** int(e.group(0))
                if order < 1:
                    self.error("cyclic order must be positive")
                return AbGroup.cyclic(order)
            return AbGroup.z()
        if word == "Q":
            self.pos = m.end()
            self.eat("[")
            n = self.supernat("]")
            self.eat("]")
            if self.peek("/"):
                self.eat("/")
                self.eat("Z")
                return AbGroup.q_mod_z(n, saturate=self.saturate)
            return AbGroup.q(n, saturate=self.saturate)
        self.error(f"unknown group or operation {word!r}")


def parse_abgroup(text, saturate=False):
    """Parse the display grammar (``"Z + Z/2^3 + Q[2^inf] + Q[6^inf]/Z"``, ``"0"``).

    The same parser also evaluates ``tensor(A, B)``, ``tor(A, B)``,
    ``localize(A, n)`` and ``quotient(a, b)``.
    """
    return _ExprParser(text, saturate).parse()

"""Supernatural numbers with finite support."""
import math
import re
from dataclasses import dataclass

from sympy import factorint, isprime

from .errors import ParseError

INF = math.inf


@dataclass(frozen=True)
class Supernatural:
    """A formal product ``prod p**e`` over finitely many primes, ``e`` in 1..inf.

    ``factors`` is a tuple of ``(prime, exponent)`` pairs sorted by prime;
    ``INF`` stands for an infinite exponent.
    """

    factors: tuple = ()

    def __post_init__(self):
        last = 0
        for p, e in self.factors:
            if not isprime(p) or p <= last:
                raise ValueError(f"bad factor list {self.factors}")
            if not (e == INF or (isinstance(e, int) and e >= 1)):
                raise ValueError(f"bad exponent {e!r} for prime {p}")
            last = p

    @classmethod
    def from_map(cls, mapping):
        return cls(tuple(sorted((int(p), e) for p, e in mapping.items() if e != 0)))

    @classmethod
    def of(cls, n, exponent=1):
        """``n ** exponent`` for a positive integer ``n``; exponent may be INF."""
        if n < 1:
            raise ValueError("supernatural base must be positive")
        return cls.from_map({p: (INF if exponent == INF else e * exponent) for p, e in factorint(n).items()})

    def as_map(self):
        return dict(self.factors)

    def exponent(self, p):
        return self.as_map().get(p, 0)

    @property
    def primes(self):
        return tuple(p for p, _ in self.factors)

    def is_one(self):
        return not self.factors

    def is_finite(self):
        return all(e != INF for _, e in self.factors)

    def value(self):
        if not self.is_finite():
            raise ValueError(f"{self} is not a natural number")
        return math.prod(p**e for p, e in self.factors)

    def __str__(self):
        if not self.factors:
            return "1"
        radical = math.prod(p for p, e in self.factors if e == INF)
        parts = [f"{radical}^inf"] if radical > 1 else []
        parts += [f"{p}" if e == 1 else f"{p}^{e}" for p, e in self.factors if e != INF]
        return "*".join(parts)

    def __mul__(self, other):
        return product(self, other)

    def divides(self, other):
        return divides(self, other)

    def is_infinite_type(self):
        return is_infinite_type(self)

    def saturate(self):
        return saturate(self)

    def without(self, other):
        """The primes of ``self`` that do not divide ``other``, with their exponents."""
        drop = set(other.primes)
        return Supernatural(tuple((p, e) for p, e in self.factors if p not in drop))


ONE = Supernatural()

_TERM = re.compile(r"^(\d+)(?:\^(\d+|inf))?$")


def parse_supernatural(text):
    """Parse ``"2^inf*3^2"``, ``"6^inf"``, ``"12"`` or ``"1"``."""
    if isinstance(text, Supernatural):
        return text
    cleaned = re.sub(r"\s+", "", str(text))
    if not cleaned:
        raise ParseError("empty supernatural number", "")
    acc = {}
    for term in cleaned.split("*"):
        m = _TERM.match(term)
        if m is None:
            raise ParseError(f"malformed supernatural factor {term!r}", term)
        base = int(m.group(1))
        if base == 0:
            raise ParseError("supernatural base 0 is not allowed", term)
        exp = INF if m.group(2) == "inf" else (1 if m.group(2) is None else int(m.group(2)))
        if exp == 0:
            continue
        for p, e in factorint(base).items():
            acc[p] = acc.get(p, 0) + (INF if exp == INF else e * exp)
    return Supernatural.from_map(acc)


def divides(m, n):
    nm = n.as_map()
    return all(e <= nm.get(p, 0) for p, e in m.factors)


def gcd(m, n):
    nm = n.as_map()
    return Supernatural.from_map({p: min(e, nm[p]) for p, e in m.factors if p in nm})


def lcm(m, n):
    acc = m.as_map()
    for p, e in n.factors:
        acc[p] = max(acc.get(p, 0), e)
    return Supernatural.from_map(acc)


def product(m, n):
    acc = m.as_map()
    for p, e in n.factors:
        acc[p] = acc.get(p, 0) + e
    return Supernatural.from_map(acc)


def is_infinite_type(n):
    return all(e == INF for _, e in n.factors)


def saturate(n):
    return Supernatural(tuple((p, INF) for p, _ in n.factors))

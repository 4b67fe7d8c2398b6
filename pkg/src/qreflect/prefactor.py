"""Formal calculus for the scalar factors ``r(x)`` and ``f(x)``.

Neither factor is ever expanded.  The only facts used are

    r(x) r(1/x) = 1,    r(x) = beta(x) r(x q^-2),
    f(x) f(1/x) = 1,    f(x) f(x q) = c(x),

with ``c(x) = (xq - 1/(xq)) / (x - 1/x)`` and
``beta(x) = (x - 1/x)(x q^-2 - q^2/x) / (x/q - q/x)^2``.

Every argument is moved to a canonical representative of its orbit:

* write the argument as ``y * q^k`` with ``y`` free of ``q``;
* if the first nonzero exponent of ``y`` (in variable order) is negative, use
  the inversion relation to flip it;
* for ``f`` shift ``k`` down to 0, for ``r`` shift ``k`` into ``{0, 1}``.

Arguments containing ``s`` (with ``q = s**2``) first have even powers of
``s`` folded into ``q``.  Odd shifts of ``r`` stay as symbols.  Pure powers of ``q`` are only folded by
inversion; they never reduce further.

A reduced product of symbols is identified by its *key*: a sorted tuple of
``(kind, argument, exponent)`` triples.  Keys multiply by adding exponents.
"""

from __future__ import annotations

from functools import lru_cache

from .field import Monomial, Scalar, SymbolicDomain

__all__ = [
    "Prefactor",
    "reduce_symbol",
    "key_mul",
    "key_inv",
    "key_div",
    "key_str",
    "atom_value",
    "c_function",
    "beta_function",
    "alpha_function",
]

_Q = Monomial.var("q")


def c_function(x, domain):
    """c(x) = (xq - x^-1 q^-1)/(x - x^-1), the multiplier in f(x) f(xq) = c(x)."""
    X = _lift(x, domain)
    Q = domain.var("q")
    return (X * Q - 1 / (X * Q)) / (X - 1 / X)


def beta_function(x, domain):
    """The multiplier in r(x) = beta(x) r(x q^-2)."""
    X = _lift(x, domain)
    Q = domain.var("q")
    return (X - 1 / X) * (X / (Q * Q) - Q * Q / X) / (X / Q - Q / X) ** 2


def alpha_function(x, domain):
    X = _lift(x, domain)
    Q = domain.var("q")
    return (Q * X - 1 / (Q * X)) * (X / Q - Q / X) / (X - 1 / X) ** 2


def _lift(x, domain):
    if isinstance(x, Monomial):
        return domain.mono(x)
    return x


_ATOMS = {"c": c_function, "beta": beta_function}


def atom_value(atom, domain, cache=None):
    """Value of a cofactor atom ``(name, monomial, exponent)`` in ``domain``."""
    name, m, e = atom
    if cache is not None:
        v = cache.get((name, m))
        if v is None:
            v = cache[(name, m)] = _ATOMS[name](m, domain)
    else:
        v = _ATOMS[name](m, domain)
    return v**e


@lru_cache(maxsize=None)
def _reduce_f(m: Monomial):
    """f(m) = prod(atoms) * f(canon)^sign, returned as (canon, sign, atoms)."""
    y, k = m.split("q")
    if y.is_one():
        if k < 0:
            return m.inverse(), -1, ()
        return m, 1, ()
    sign = 1
    if y.leading_sign() < 0:
        y, k, sign = y.inverse(), -k, -1
    atoms = []
    if k > 0:
        for i in range(k):
            atoms.append(("c", y * _Q**i, sign * (-1) ** (k - 1 - i)))
    elif k < 0:
        for i in range(k, 0):
            atoms.append(("c", y * _Q**i, sign * (-1) ** (i - k)))
    return y, sign * (-1) ** (k % 2), tuple(atoms)


@lru_cache(maxsize=None)
def _reduce_r(m: Monomial):
    y, k = m.split("q")
    if y.is_one():
        if k < 0:
            return m.inverse(), -1, ()
        return m, 1, ()
    sign = 1
    if y.leading_sign() < 0:
        y, k, sign = y.inverse(), -k, -1
    e = k % 2
    j = (k - e) // 2
    atoms = []
    if j > 0:
        for l in range(1, j + 1):
            atoms.append(("beta", y * _Q ** (e + 2 * l), sign))
    elif j < 0:
        for l in range(j + 1, 1):
            atoms.append(("beta", y * _Q ** (e + 2 * l), -sign))
    return y * _Q**e, sign, tuple(atoms)


def _fold_s(m: Monomial) -> Monomial:
    # q = s^2: even powers of s are powers of q
    rest, e = m.split("s")
    if e == 0:
        return m
    return rest * _Q ** (e // 2) * Monomial.var("s", e % 2) if e % 2 else rest * _Q ** (e // 2)


def reduce_symbol(kind: str, m: Monomial, exp: int = 1):
    """Reduce ``kind(m)^exp``; returns ``(key, atoms)`` with atoms already raised to ``exp``."""
    m = _fold_s(m)
    if kind == "f":
        canon, sign, atoms = _reduce_f(m)
    elif kind == "r":
        canon, sign, atoms = _reduce_r(m)
    else:
        raise ValueError(f"unknown prefactor kind {kind!r}")
    e = sign * exp
    if canon.is_one():
        e %= 2
    key = ((kind, canon, e),) if e else ()
    return key, tuple((n, a, x * exp) for n, a, x in atoms)


def _sort_key(t):
    return (t[0], t[1].order_key())


@lru_cache(maxsize=1 << 16)
def key_mul(k1: tuple, k2: tuple) -> tuple:
    if not k1:
        return k2
    if not k2:
        return k1
    acc = {}
    for kind, m, e in k1 + k2:
        acc[(kind, m)] = acc.get((kind, m), 0) + e
    out = []
    for (kind, m), e in acc.items():
        if m.is_one():
            e %= 2
        if e:
            out.append((kind, m, e))
    return tuple(sorted(out, key=_sort_key))


@lru_cache(maxsize=1 << 14)
def key_inv(k: tuple) -> tuple:
    return tuple((kind, m, (-e) % 2 if m.is_one() else -e) for kind, m, e in k)


def key_div(k1: tuple, k2: tuple) -> tuple:
    return key_mul(k1, key_inv(k2))


def key_str(k: tuple) -> str:
    if not k:
        return "1"
    return " * ".join(f"{kind}({m})^{e}" for kind, m, e in k)


class Prefactor:
    """A reduced formal product of ``r``/``f`` symbols times a rational cofactor."""

    __slots__ = ("key", "cofactor")

    def __init__(self, r=None, f=None, cofactor=None):
        key = ()
        cof = Scalar.one() if cofactor is None else Scalar.from_const(cofactor)
        if cof.is_zero():
            raise ValueError("prefactor cofactor must be nonzero")
        dom = _SYM
        for kind, symbols in (("r", r), ("f", f)):
            for m, e in (symbols or {}).items():
                if not e:
                    continue
                k, atoms = reduce_symbol(kind, m, e)
                key = key_mul(key, k)
                for atom in atoms:
                    cof = cof * atom_value(atom, dom)
        self.key = key
        self.cofactor = cof

    @classmethod
    def _raw(cls, key, cofactor):
        p = cls.__new__(cls)
        p.key = key
        p.cofactor = cofactor
        return p

    @classmethod
    def identity(cls):
        return cls._raw((), Scalar.one())

    @classmethod
    def r_of(cls, m: Monomial, exp: int = 1):
        return cls(r={m: exp})

    @classmethod
    def f_of(cls, m: Monomial, exp: int = 1):
        return cls(f={m: exp})

    @property
    def rfactors(self) -> dict:
        return {m: e for kind, m, e in self.key if kind == "r"}

    @property
    def ffactors(self) -> dict:
        return {m: e for kind, m, e in self.key if kind == "f"}

    def reduce(self) -> "Prefactor":
        # values are kept reduced at construction, so this is the identity
        return Prefactor(r=self.rfactors, f=self.ffactors, cofactor=self.cofactor)

    def is_trivial(self) -> bool:
        return not self.key

    def __mul__(self, other):
        if isinstance(other, Prefactor):
            return Prefactor._raw(key_mul(self.key, other.key), self.cofactor * other.cofactor)
        return Prefactor._raw(self.key, self.cofactor * other)

    __rmul__ = __mul__

    def inverse(self):
        return Prefactor._raw(key_inv(self.key), self.cofactor.inverse())

    def __truediv__(self, other):
        if isinstance(other, Prefactor):
            return self * other.inverse()
        return Prefactor._raw(self.key, self.cofactor / other)

    def __pow__(self, n: int):
        out = Prefactor.identity()
        base = self if n >= 0 else self.inverse()
        for _ in range(abs(n)):
            out = out * base
        return out

    def __eq__(self, other):
        return isinstance(other, Prefactor) and self.key == other.key and self.cofactor == other.cofactor

    def __hash__(self):
        return hash((self.key, self.cofactor))

    def __str__(self):
        parts = [f"{kind}({m})^{e}" for kind, m, e in self.key]
        parts.append(f"({self.cofactor})")
        return " * ".join(parts)

    def __repr__(self):
        return f"Prefactor({self})"


_SYM = SymbolicDomain()

"""Exact arithmetic in the fraction field of Laurent polynomials over Q(i).

Three value types live here:

* :class:`GaussianRational` -- an element of Q(i), used for sample points and
  for every coefficient once a check runs at an exact rational point.
* :class:`Monomial` -- an invertible Laurent monomial; spectral arguments such
  as ``u*q^-1`` and the central symbols ``gamma`` and ``g`` are monomials.
* :class:`Scalar` -- a rational function ``(re + i*im) / den`` with ``re``,
  ``im`` and ``den`` integer polynomials (flint ``fmpz_mpoly``), always stored
  reduced so that equal functions share one representation.

Variables are interned in a process-wide, append-only table.  The first
entries fix the ordering used for normal ordering of spectral arguments:
``u, v, w, a, gamma, g, q``.
"""

from __future__ import annotations

import contextlib
import contextvars
import threading
from fractions import Fraction
from numbers import Rational

import flint

from .errors import DegreeLimitExceeded, DivisionByZero, PoleAtPoint, UnboundVariable

__all__ = [
    "GaussianRational",
    "Monomial",
    "LaurentPoly",
    "Scalar",
    "SymbolicDomain",
    "PointDomain",
    "SubstitutionDomain",
    "degree_limit",
    "var_index",
    "var_name",
]

N_SLOTS = 48
CORE_VARIABLES = ("u", "v", "w", "a", "gamma", "g", "q", "s", "kp", "km", "rho")

_names: list[str] = list(CORE_VARIABLES)
_index: dict[str, int] = {n: i for i, n in enumerate(_names)}
_lock = threading.Lock()

_CTX = flint.fmpz_mpoly_ctx.get(tuple(f"x{i}" for i in range(N_SLOTS)), "lex")
_GENS = _CTX.gens()
_ZERO_P = _CTX.from_dict({})
_ONE_P = _CTX.from_dict({(0,) * N_SLOTS: 1})

_MAX_DEGREE: contextvars.ContextVar[int] = contextvars.ContextVar("qreflect_max_degree", default=512)


@contextlib.contextmanager
def degree_limit(limit: int):
    """Temporarily change the total-degree guard applied to every Scalar."""
    token = _MAX_DEGREE.set(int(limit))
    try:
        yield
    finally:
        _MAX_DEGREE.reset(token)


def var_index(name: str) -> int:
    idx = _index.get(name)
    if idx is not None:
        return idx
    if not name.isidentifier() or name == "i":
        raise ValueError(f"invalid variable name {name!r}")
    with _lock:
        idx = _index.get(name)
        if idx is None:
            if len(_names) >= N_SLOTS:
                raise ValueError("variable table is full")
            idx = len(_names)
            _names.append(name)
            _index[name] = idx
    return idx


def var_name(idx: int) -> str:
    return _names[idx]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, flint.fmpz):
        return Fraction(int(x))
    if isinstance(x, flint.fmpq):
        return Fraction(int(x.p), int(x.q))
    raise TypeError(f"not a rational: {x!r}")


class GaussianRational:
    """An exact element ``re + i*im`` of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _frac(re)
        self.im = _frac(im)

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, complex):
            raise TypeError("floating point values are not accepted")
        return cls(x)

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __add__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re - other.re, self.im - other.im)
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            a, b, c, d = self.re, self.im, other.re, other.im
            if b == 0 and d == 0:
                return GaussianRational(a * c, 0)
            return GaussianRational(a * c - b * d, a * d + b * c)
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise DivisionByZero("division by zero in Q(i)")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division by zero in Q(i)")
            return GaussianRational(self.re / other, self.im / other)
        if isinstance(other, GaussianRational):
            if other.im == 0:
                if other.re == 0:
                    raise DivisionByZero("division by zero in Q(i)")
                return GaussianRational(self.re / other.re, self.im / other.re)
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other) / self
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        if self.im == 0:
            return GaussianRational(self.re**n, 0)
        result = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __repr__(self):
        return f"GaussianRational({self})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return "i" if self.im == 1 else f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        return f"{self.re}{sign}{'' if mag == 1 else str(mag) + '*'}i"

    def to_json(self):
        return [str(self.re), str(self.im)]


class Monomial:
    """An invertible Laurent monomial ``prod x_k^{e_k}`` with integer exponents."""

    __slots__ = ("_e", "_hash", "_key")

    def __init__(self, exponents=None):
        items = {}
        if exponents:
            for name, e in dict(exponents).items():
                if e:
                    items[var_index(name)] = items.get(var_index(name), 0) + int(e)
        self._e = tuple(sorted((k, e) for k, e in items.items() if e))
        self._hash = None
        self._key = None

    @classmethod
    def _raw(cls, pairs):
        m = cls.__new__(cls)
        m._e = pairs
        m._hash = None
        m._key = None
        return m

    @classmethod
    def var(cls, name: str, exp: int = 1) -> "Monomial":
        return cls({name: exp})

    @classmethod
    def one(cls) -> "Monomial":
        return _MONO_ONE

    @property
    def exponents(self) -> dict[str, int]:
        return {var_name(k): e for k, e in self._e}

    def degree(self, name: str) -> int:
        idx = var_index(name)
        for k, e in self._e:
            if k == idx:
                return e
        return 0

    def variables(self) -> set[str]:
        return {var_name(k) for k, _ in self._e}

    def is_one(self) -> bool:
        return not self._e

    def total_degree(self) -> int:
        return sum(e for _, e in self._e)

    def __mul__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        if not other._e:
            return self
        if not self._e:
            return other
        acc = dict(self._e)
        for k, e in other._e:
            acc[k] = acc.get(k, 0) + e
        return Monomial._raw(tuple(sorted((k, e) for k, e in acc.items() if e)))

    def inverse(self) -> "Monomial":
        return Monomial._raw(tuple((k, -e) for k, e in self._e))

    def __truediv__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, n: int):
        if n == 0:
            return _MONO_ONE
        return Monomial._raw(tuple((k, e * n) for k, e in self._e))

    def __eq__(self, other):
        return isinstance(other, Monomial) and self._e == other._e

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._e)
        return self._hash

    def order_key(self) -> tuple:
        """Exponent vector in the fixed variable order (lexicographic comparison)."""
        if self._key is None:
            vec = [0] * N_SLOTS
            for k, e in self._e:
                vec[k] = e
            self._key = tuple(vec)
        return self._key

    def __lt__(self, other):
        return self.order_key() < other.order_key()

    def split(self, name: str = "q") -> tuple["Monomial", int]:
        """Split into (part without ``name``, exponent of ``name``)."""
        idx = var_index(name)
        rest = tuple((k, e) for k, e in self._e if k != idx)
        exp = next((e for k, e in self._e if k == idx), 0)
        return Monomial._raw(rest), exp

    def leading_sign(self) -> int:
        """Sign of the first nonzero exponent in variable order (0 for the unit)."""
        if not self._e:
            return 0
        return 1 if self._e[0][1] > 0 else -1

    def subs(self, mapping) -> "Monomial":
        """Substitute variables by monomials (names absent from ``mapping`` stay)."""
        out = _MONO_ONE
        keep = []
        for k, e in self._e:
            name = var_name(k)
            if name in mapping:
                out = out * (mapping[name] ** e)
            else:
                keep.append((k, e))
        return out * Monomial._raw(tuple(keep))

    def evaluate(self, point) -> GaussianRational:
        val = GaussianRational(1)
        for k, e in self._e:
            name = var_name(k)
            try:
                x = point[name]
            except KeyError:
                raise UnboundVariable(name) from None
            x = GaussianRational.coerce(x)
            if not x:
                raise PoleAtPoint(f"variable {name} is zero at the sample point")
            val = val * x**e
        return val

    def _polys(self):
        pos = [0] * N_SLOTS
        neg = [0] * N_SLOTS
        for k, e in self._e:
            if e > 0:
                pos[k] = e
            else:
                neg[k] = -e
        return _CTX.from_dict({tuple(pos): 1}), _CTX.from_dict({tuple(neg): 1})

    def __repr__(self):
        return f"Monomial({str(self)!r})"

    def __str__(self):
        if not self._e:
            return "1"
        parts = []
        for k, e in self._e:
            n = var_name(k)
            parts.append(n if e == 1 else f"{n}^{e}")
        return "*".join(parts)


_MONO_ONE = Monomial._raw(())


class LaurentPoly:
    """A finite sum of Laurent monomials with Gaussian-rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for m, c in (terms or {}).items():
            c = GaussianRational.coerce(c)
            if c:
                clean[m] = clean.get(m, GaussianRational(0)) + c
        self.terms = {m: c for m, c in clean.items() if c}

    @classmethod
    def monomial(cls, m: Monomial, c=1) -> "LaurentPoly":
        return cls({m: c})

    def __add__(self, other):
        other = _as_laurent(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            acc[m] = acc.get(m, GaussianRational(0)) + c
        return LaurentPoly(acc)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_as_laurent(other))

    def __rsub__(self, other):
        return _as_laurent(other) - self

    def __mul__(self, other):
        other = _as_laurent(other)
        acc = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                acc[m] = acc.get(m, GaussianRational(0)) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational, Monomial)):
            other = _as_laurent(other)
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def evaluate(self, point) -> GaussianRational:
        total = GaussianRational(0)
        for m, c in self.terms.items():
            total = total + c * m.evaluate(point)
        return total

    def to_scalar(self) -> "Scalar":
        total = Scalar.zero()
        for m, c in self.terms.items():
            total = total + Scalar.from_monomial(m) * c
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{m}" for m, c in sorted(self.terms.items(), key=lambda t: t[0].order_key()))

    __repr__ = __str__


def _as_laurent(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, Monomial):
        return LaurentPoly({x: 1})
    return LaurentPoly({_MONO_ONE: GaussianRational.coerce(x)})


def _poly_str(p) -> str:
    if p.is_zero():
        return "0"
    out = []
    for exps, c in p.terms():
        c = int(c)
        mono = "*".join(
            var_name(k) if e == 1 else f"{var_name(k)}^{e}" for k, e in enumerate(exps) if e
        )
        if not mono:
            term = str(abs(c))
        elif abs(c) == 1:
            term = mono
        else:
            term = f"{abs(c)}*{mono}"
        out.append(("-" if c < 0 else "+", term))
    s = "".join(f" {sg} {t}" for sg, t in out).strip()
    if s.startswith("+ "):
        s = s[2:]
    elif s.startswith("- "):
        s = "-" + s[2:]
    return s


def _poly_eval(p, values, cache):
    if p.is_zero():
        return GaussianRational(0)
    total = GaussianRational(0)
    for exps, c in p.terms():
        term = GaussianRational(int(c))
        for k, e in enumerate(exps):
            if e:
                key = (k, e)
                pw = cache.get(key)
                if pw is None:
                    base = values.get(k)
                    if base is None:
                        raise UnboundVariable(var_name(k))
                    pw = base ** int(e)
                    cache[key] = pw
                term = term * pw
        total = total + term
    return total


class Scalar:
    """A rational function over Q(i), stored as ``(re + i*im) / den`` in lowest terms.

    ``den`` has positive leading coefficient and ``gcd(re, im, den) == 1`` in
    Z[x], so two Scalars are equal iff their stored triples coincide.
    """

    __slots__ = ("_re", "_im", "_den")

    def __init__(self, re, im, den, _reduced=False):
        if _reduced:
            self._re, self._im, self._den = re, im, den
        else:
            self._re, self._im, self._den = _normalize(re, im, den)

    # constructors -------------------------------------------------------
    @classmethod
    def zero(cls) -> "Scalar":
        return _S_ZERO

    @classmethod
    def one(cls) -> "Scalar":
        return _S_ONE

    @classmethod
    def i(cls) -> "Scalar":
        return _S_I

    @classmethod
    def from_const(cls, c) -> "Scalar":
        if isinstance(c, Scalar):
            return c
        c = GaussianRational.coerce(c)
        den = c.re.denominator * c.im.denominator // _gcd(c.re.denominator, c.im.denominator)
        re = int(c.re * den)
        im = int(c.im * den)
        return cls(_ONE_P * re, _ONE_P * im, _ONE_P * den)

    @classmethod
    def from_monomial(cls, m: Monomial) -> "Scalar":
        pos, neg = m._polys()
        return cls(pos, _ZERO_P, neg, _reduced=True)

    @classmethod
    def var(cls, name: str) -> "Scalar":
        return cls.from_monomial(Monomial.var(name))

    # structure ----------------------------------------------------------
    @property
    def num(self) -> LaurentPoly:
        return _poly_to_laurent(self._re) + _poly_to_laurent(self._im) * GaussianRational(0, 1)

    @property
    def den(self) -> LaurentPoly:
        return _poly_to_laurent(self._den)

    def is_zero(self) -> bool:
        return self._re.is_zero() and self._im.is_zero()

    def is_real(self) -> bool:
        return self._im.is_zero()

    def is_constant(self) -> bool:
        return self._re.is_constant() and self._im.is_constant() and self._den.is_constant()

    def constant_value(self) -> GaussianRational:
        if not self.is_constant():
            raise ValueError("not a constant")
        d = int(self._den.leading_coefficient())
        re = int(self._re.leading_coefficient()) if not self._re.is_zero() else 0
        im = int(self._im.leading_coefficient()) if not self._im.is_zero() else 0
        return GaussianRational(Fraction(re, d), Fraction(im, d))

    def variables(self) -> set[str]:
        out = set()
        for p in (self._re, self._im, self._den):
            if not p.is_zero():
                out.update(var_name(k) for k, d in enumerate(p.degrees()) if d)
        return out

    def total_degree(self) -> int:
        return max(
            (int(p.total_degree()) for p in (self._re, self._im, self._den) if not p.is_zero()),
            default=0,
        )

    def __bool__(self):
        return not self.is_zero()

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self._den == other._den:
            return Scalar(self._re + other._re, self._im + other._im, self._den)
        d1, d2 = self._den, other._den
        g = d1.gcd(d2)
        if g.is_one():
            return Scalar(self._re * d2 + other._re * d1, self._im * d2 + other._im * d1, d1 * d2)
        a, b = d2 / g, d1 / g
        return Scalar(self._re * a + other._re * b, self._im * a + other._im * b, d1 * a)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self._re, -self._im, self._den, _reduced=True)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return _S_ZERO
        if self._im.is_zero() and other._im.is_zero():
            return Scalar(self._re * other._re, _ZERO_P, self._den * other._den)
        a, b, c, d = self._re, self._im, other._re, other._im
        return Scalar(a * c - b * d, a * d + b * c, self._den * other._den)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise DivisionByZero("inverse of the zero rational function")
        if self._im.is_zero():
            return Scalar(self._den, _ZERO_P, self._re)
        norm = self._re * self._re + self._im * self._im
        return Scalar(self._den * self._re, -(self._den * self._im), norm)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise DivisionByZero("division by the zero rational function")
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = _S_ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "Scalar":
        """Complex conjugation of the coefficients (variables treated as real)."""
        return Scalar(self._re, -self._im, self._den, _reduced=True)

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self._den == other._den and self._re == other._re and self._im == other._im

    def __hash__(self):
        return hash((str(self._re), str(self._im), str(self._den)))

    # evaluation ---------------------------------------------------------
    def evaluate(self, point) -> GaussianRational:
        """Exact value at ``point`` (a mapping from variable name to a Q(i) value)."""
        values = {}
        for name, x in point.items():
            if name in _index:
                values[_index[name]] = GaussianRational.coerce(x)
        missing = self.variables() - {var_name(k) for k in values}
        if missing:
            raise UnboundVariable(sorted(missing)[0])
        cache = {}
        den = _poly_eval(self._den, values, cache)
        if not den:
            raise PoleAtPoint(f"denominator {_poly_str(self._den)} vanishes at the sample point")
        num = _poly_eval(self._re, values, cache)
        if not self._im.is_zero():
            num = num + _poly_eval(self._im, values, cache) * GaussianRational(0, 1)
        return num / den

    # rendering ----------------------------------------------------------
    def numerator_str(self) -> str:
        if self._im.is_zero():
            return _poly_str(self._re)
        if self._re.is_zero():
            return f"i*({_poly_str(self._im)})"
        return f"{_poly_str(self._re)} + i*({_poly_str(self._im)})"

    def __str__(self):
        num = self.numerator_str()
        if self._den.is_one():
            return num
        return f"({num})/({_poly_str(self._den)})"

    def __repr__(self):
        return f"Scalar({self})"


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _normalize(re, im, den):
    if den.is_zero():
        raise DivisionByZero("zero denominator")
    if re.is_zero() and im.is_zero():
        return _ZERO_P, _ZERO_P, _ONE_P
    if not den.is_one():
        g = den.gcd(re) if im.is_zero() else den.gcd(re.gcd(im))
        if not g.is_one():
            re = re / g
            im = im / g if not im.is_zero() else im
            den = den / g
    if den.leading_coefficient() < 0:
        re, im, den = -re, -im, -den
    limit = _MAX_DEGREE.get()
    for p in (re, im, den):
        if not p.is_zero() and p.total_degree() > limit:
            raise DegreeLimitExceeded(f"total degree {p.total_degree()} exceeds the guard {limit}")
    return re, im, den


def _poly_to_laurent(p) -> LaurentPoly:
    terms = {}
    for exps, c in p.terms():
        m = Monomial._raw(tuple((k, e) for k, e in enumerate(exps) if e))
        terms[m] = GaussianRational(int(c))
    return LaurentPoly(terms)


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction, GaussianRational)):
        return Scalar.from_const(x)
    if isinstance(x, Monomial):
        return Scalar.from_monomial(x)
    if isinstance(x, LaurentPoly):
        return x.to_scalar()
    return None


_S_ZERO = Scalar(_ZERO_P, _ZERO_P, _ONE_P, _reduced=True)
_S_ONE = Scalar(_ONE_P, _ZERO_P, _ONE_P, _reduced=True)
_S_I = Scalar(_ZERO_P, _ONE_P, _ONE_P, _reduced=True)


class SymbolicDomain:
    """Coefficients are exact rational functions (:class:`Scalar`)."""

    name = "symbolic"

    def __init__(self):
        self._cache = {}

    def mono(self, m: Monomial) -> Scalar:
        s = self._cache.get(m)
        if s is None:
            s = self._cache[m] = Scalar.from_monomial(m)
        return s

    def var(self, name: str) -> Scalar:
        return self.mono(Monomial.var(name))

    def const(self, c) -> Scalar:
        return Scalar.from_const(c)

    def lift(self, s: Scalar) -> Scalar:
        return s

    @property
    def one(self):
        return _S_ONE

    @property
    def zero(self):
        return _S_ZERO

    @property
    def i(self):
        return _S_I

    def describe(self) -> dict:
        return {"strategy": "symbolic"}


class PointDomain:
    """Coefficients are Gaussian rationals obtained by exact evaluation at a point."""

    name = "sampled"

    def __init__(self, point):
        self.point = {k: GaussianRational.coerce(v) for k, v in point.items()}
        self._cache = {}

    def mono(self, m: Monomial) -> GaussianRational:
        s = self._cache.get(m)
        if s is None:
            s = self._cache[m] = m.evaluate(self.point)
        return s

    def var(self, name: str) -> GaussianRational:
        return self.mono(Monomial.var(name))

    def const(self, c) -> GaussianRational:
        if isinstance(c, Scalar):
            return c.evaluate(self.point)
        return GaussianRational.coerce(c)

    def lift(self, s) -> GaussianRational:
        if isinstance(s, Scalar):
            return s.evaluate(self.point)
        return GaussianRational.coerce(s)

    @property
    def one(self):
        return GaussianRational(1)

    @property
    def zero(self):
        return GaussianRational(0)

    @property
    def i(self):
        return GaussianRational(0, 1)

    def describe(self) -> dict:
        return {"strategy": "sampled", "point": {k: str(v) for k, v in sorted(self.point.items())}}


class SubstitutionDomain:
    """Wraps a domain, substituting monomials for variables before lifting.

    Used where ``q`` must be read as ``s**2``.
    """

    def __init__(self, base, mapping):
        self.base = base
        self.mapping = {k: (v if isinstance(v, Monomial) else Monomial.var(v)) for k, v in mapping.items()}
        self.name = base.name

    def mono(self, m: Monomial):
        return self.base.mono(m.subs(self.mapping))

    def var(self, name: str):
        return self.mono(Monomial.var(name))

    def const(self, c):
        return self.base.const(c)

    def lift(self, s):
        return self.base.lift(s)

    @property
    def one(self):
        return self.base.one

    @property
    def zero(self):
        return self.base.zero

    @property
    def i(self):
        return self.base.i

    def describe(self) -> dict:
        d = dict(self.base.describe())
        d["substitution"] = {k: str(v) for k, v in sorted(self.mapping.items())}
        return d

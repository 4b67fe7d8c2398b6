"""Noncommutative words, quadratic exchange relations and normal ordering.

Symbols
    A generator symbol is the tuple ``(leg, family, i, j, arg)``.  ``leg`` tags
    the tensor factor of a multi-algebra word (symbols on different legs
    commute), ``family`` is one of :data:`FAMILIES`, ``(i, j)`` are component
    indices in {1, 2} (``j == 0`` for the vector family ``Phi``; index 1 is
    ``+``) and ``arg`` is a :class:`~qreflect.field.Monomial`.

Polynomials
    :class:`NCPoly` maps ``(word, prefactor key)`` to a coefficient of the
    active domain.  Words are tuples of symbols kept stably sorted by leg.

Relations
    A :class:`Relation` is a quadratic matrix identity
    ``prod(lhs factors) == prod(rhs factors)`` on auxiliary spaces 1 and 2,
    where each factor is an R-matrix (:class:`RFactor`) or one of two
    generator slots (:class:`Gen`).  Slot 1 sits on space 1 at argument ``u``,
    slot 2 on space 2 at argument ``v``.

Normal order
    Symbols on one leg are sorted by argument, ties broken by family.  The
    argument key is the negated exponent vector in variable order ``u, v, w,
    a, gamma, g, q, ...`` compared lexicographically, so ``u`` comes before
    ``v`` and ``v`` before ``w``.  Two symbols of the same family at the same argument are never
    exchanged, and neither are ``L`` and ``L^-1`` at one argument: those
    contract via ``sum_k L_ik(x) Linv_kj(x) = delta_ij``, which is applied in
    the form ``L_i1 Linv_1j -> delta_ij - L_i2 Linv_2j`` (and likewise for
    ``Linv L``).

    A rule book may instead use family-first order (family, then argument).
    That is needed when a product such as ``L+(u gamma^-2) L-(u)^-1`` sits at
    an argument ratio where the exchange relation degenerates.
"""

from __future__ import annotations

import itertools
import os
import threading
import time
from dataclasses import dataclass, field

from .errors import (
    InconsistentRelation,
    MissingRealization,
    MissingRule,
    NonConfluent,
    SingularCoefficientMatrix,
    StepLimitExceeded,
)
from .field import Monomial, SymbolicDomain
from .prefactor import key_div, key_mul, key_str
from .report import FAIL, PASS, Check, Report
from .rmatrix import build_R, decorated_R
from .tensor import Mat

__all__ = [
    "FAMILIES",
    "FAMILY_INDEX",
    "sym",
    "sym_str",
    "word_str",
    "NCPoly",
    "NCMat",
    "RFactor",
    "Gen",
    "Relation",
    "RuleBook",
    "Rewriter",
    "generator_matrix",
    "relation_sides",
    "DEFAULT_MAX_STEPS",
    "relation_FZ",
    "check_confluence",
]

FAMILIES = ("Phi", "Lp", "Lm", "LpInv", "LmInv", "K0", "Kpp", "Kpm", "Kmp", "Kmm")
FAMILY_INDEX = {name: k for k, name in enumerate(FAMILIES)}
INVERSE_PAIRS = {(1, 3), (3, 1), (2, 4), (4, 2)}
PHI = 0
DEFAULT_MAX_STEPS = 10**6


def max_steps_default() -> int:
    env = os.environ.get("QREFLECT_MAX_STEPS")
    return int(env) if env else DEFAULT_MAX_STEPS


def sym(family, i, j=0, arg=None, leg=0):
    f = FAMILY_INDEX[family] if isinstance(family, str) else family
    return (leg, f, i, j, arg)


def sym_str(s) -> str:
    leg, f, i, j, arg = s
    idx = ("+" if i == 1 else "-") if f == PHI else f"{i}{j}"
    tag = f"@{leg}" if leg else ""
    return f"{FAMILIES[f]}{idx}({arg}){tag}"


def word_str(w) -> str:
    return " ".join(sym_str(s) for s in w) if w else "1"


_ORDER_CACHE: dict = {}


def _okey(s):
    k = _ORDER_CACHE.get(s[4])
    if k is None:
        k = _ORDER_CACHE[s[4]] = tuple(-e for e in s[4].order_key())
    return k


def _concat(w1, w2):
    if not w1:
        return w2
    if not w2:
        return w1
    if w1[-1][0] <= w2[0][0]:
        return w1 + w2
    return tuple(sorted(w1 + w2, key=lambda s: s[0]))


class NCPoly:
    """A finite combination of words; the key of each term is ``(word, prefactor key)``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = terms if terms is not None else {}

    @classmethod
    def word(cls, w, coeff=1, pkey=()):
        return cls({(tuple(w), pkey): coeff})

    @classmethod
    def const(cls, c, pkey=()):
        if not c:
            return cls()
        return cls({((), pkey): c})

    @classmethod
    def symbol(cls, s, one=1):
        return cls({((s,), ()): one})

    def copy(self):
        return NCPoly(dict(self.terms))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def iadd(self, other, scale=None, pkey=()):
        t = self.terms
        for (w, k), c in other.terms.items():
            if scale is not None:
                c = c * scale
            if pkey:
                k = key_mul(k, pkey)
            key = (w, k)
            old = t.get(key)
            if old is None:
                if c:
                    t[key] = c
            else:
                new = old + c
                if new:
                    t[key] = new
                else:
                    del t[key]
        return self

    def __add__(self, other):
        return self.copy().iadd(_as_poly(other))

    def __sub__(self, other):
        return self.copy().iadd(_as_poly(other), scale=-1)

    def __neg__(self):
        return NCPoly({k: -c for k, c in self.terms.items()})

    def scale(self, c, pkey=()):
        if not c:
            return NCPoly()
        out = {}
        for (w, k), x in self.terms.items():
            y = x * c
            if y:
                out[(w, key_mul(k, pkey) if pkey else k)] = y
        return NCPoly(out)

    def __mul__(self, other):
        if not isinstance(other, NCPoly):
            return self.scale(other)
        out = NCPoly()
        t = out.terms
        for (w1, k1), c1 in self.terms.items():
            for (w2, k2), c2 in other.terms.items():
                key = (_concat(w1, w2), key_mul(k1, k2))
                c = c1 * c2
                old = t.get(key)
                if old is None:
                    t[key] = c
                else:
                    new = old + c
                    if new:
                        t[key] = new
                    else:
                        del t[key]
        return out

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, NCPoly):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def map_coeffs(self, fn):
        out = {}
        for k, c in self.terms.items():
            y = fn(c)
            if y:
                out[k] = y
        return NCPoly(out)

    def classes(self):
        return sorted({k for (_, k) in self.terms}, key=key_str)

    def dump(self) -> str:
        """Deterministic one-term-per-line rendering used by golden tests."""
        lines = []
        for (w, k), c in sorted(self.terms.items(), key=lambda t: (word_str(t[0][0]), key_str(t[0][1]))):
            lines.append(f"{word_str(w)} | {key_str(k)} | {c}")
        return "\n".join(lines) if lines else "0"

    def __str__(self):
        return self.dump()

    __repr__ = __str__


def _as_poly(x):
    if isinstance(x, NCPoly):
        return x
    return NCPoly.const(x)


class NCMat:
    """Square matrix of NCPoly on auxiliary spaces (same index conventions as :class:`Mat`)."""

    __slots__ = ("legs", "n", "rows")

    def __init__(self, legs, rows):
        self.legs = tuple(legs)
        self.n = 2 ** len(self.legs)
        self.rows = [list(r) for r in rows]

    @classmethod
    def from_mat(cls, m: Mat):
        return cls(m.legs, [[NCPoly.const(x, m.pf) for x in row] for row in m.rows])

    @classmethod
    def identity(cls, legs, one=1):
        n = 2 ** len(tuple(legs))
        return cls(legs, [[NCPoly.const(one) if i == j else NCPoly() for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        return self.rows[ij[0]][ij[1]]

    def embed(self, all_legs) -> "NCMat":
        all_legs = tuple(all_legs)
        pos = [all_legs.index(l) for l in self.legs]
        rest = [i for i in range(len(all_legs)) if i not in pos]
        k = len(all_legs)
        N = 2**k
        rows = [[NCPoly() for _ in range(N)] for _ in range(N)]
        for I in range(N):
            bi = _bits(I, k)
            for J in range(N):
                bj = _bits(J, k)
                if any(bi[r] != bj[r] for r in rest):
                    continue
                rows[I][J] = self.rows[_flat([bi[p] for p in pos])][_flat([bj[p] for p in pos])]
        return NCMat(all_legs, rows)

    def transpose(self) -> "NCMat":
        return NCMat(self.legs, [list(c) for c in zip(*self.rows)])

    def __matmul__(self, other):
        if isinstance(other, Mat):
            other = other.reorder(self.legs)
            n = self.n
            out = []
            for row in self.rows:
                new = []
                for j in range(n):
                    acc = NCPoly()
                    for k in range(n):
                        b = other.rows[k][j]
                        if b and row[k]:
                            acc.iadd(row[k], scale=b, pkey=other.pf)
                    new.append(acc)
                out.append(new)
            return NCMat(self.legs, out)
        if other.legs != self.legs:
            raise ValueError("space mismatch")
        n = self.n
        out = []
        for row in self.rows:
            new = []
            for j in range(n):
                acc = NCPoly()
                for k in range(n):
                    a, b = row[k], other.rows[k][j]
                    if a and b:
                        acc.iadd(a * b)
                new.append(acc)
            out.append(new)
        return NCMat(self.legs, out)

    def __rmatmul__(self, other):
        # scalar Mat on the left
        other = other.reorder(self.legs)
        n = self.n
        out = []
        for i in range(n):
            new = []
            for j in range(n):
                acc = NCPoly()
                for k in range(n):
                    a = other.rows[i][k]
                    if a and self.rows[k][j]:
                        acc.iadd(self.rows[k][j], scale=a, pkey=other.pf)
                new.append(acc)
            out.append(new)
        return NCMat(self.legs, out)

    def __sub__(self, other):
        return NCMat(self.legs, [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __add__(self, other):
        return NCMat(self.legs, [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def scale(self, c, pkey=()):
        return NCMat(self.legs, [[x.scale(c, pkey) for x in row] for row in self.rows])

    def entries(self):
        for i, row in enumerate(self.rows):
            for j, x in enumerate(row):
                yield i, j, x


def _bits(I, k):
    return [(I >> (k - 1 - p)) & 1 for p in range(k)]


def _flat(bits):
    I = 0
    for b in bits:
        I = (I << 1) | b
    return I


# ---------------------------------------------------------------------------
# relation schema


@dataclass(frozen=True)
class RFactor:
    """An R-matrix factor ``R_{spaces}(arg)``; ``t`` names a transposed space, ``inv`` inverts."""

    kind: str
    arg: Monomial
    spaces: tuple = (1, 2)
    t: int | None = None
    inv: bool = False

    def render(self) -> str:
        name = {"kernel": "R", "tilde": "R~", "bar": "R-"}[self.kind]
        sp = "".join(map(str, self.spaces))
        tt = f"^t{self.t}" if self.t else ""
        ii = "^-1" if self.inv else ""
        return f"{name}{sp}{tt}({self.arg}){ii}"


@dataclass(frozen=True)
class Gen:
    """Generator slot 1 (space 1, argument u) or 2 (space 2, argument v)."""

    slot: int

    def render(self, families=None) -> str:
        fam = families[self.slot - 1] if families else f"X{self.slot}"
        arg = "u" if self.slot == 1 else "v"
        return f"{fam}_{self.slot}({arg})"


@dataclass(frozen=True)
class Relation:
    label: str
    families: tuple
    lhs: tuple
    rhs: tuple
    note: str = ""
    spaces: tuple = (1, 2)

    def render(self) -> str:
        side = lambda fs: " ".join(f.render(self.families) if isinstance(f, Gen) else f.render() for f in fs)
        return f"{self.label}: {side(self.lhs)} = {side(self.rhs)}"

    def substitute(self, mapping) -> "Relation":
        """Substitute monomials for parameters inside every R argument."""
        def sub(f):
            if isinstance(f, RFactor):
                return RFactor(f.kind, f.arg.subs(mapping), f.spaces, f.t, f.inv)
            return f
        return Relation(
            self.label, self.families, tuple(map(sub, self.lhs)), tuple(map(sub, self.rhs)), self.note, self.spaces
        )

    def replace(self, **kw) -> "Relation":
        d = dict(
            label=self.label, families=self.families, lhs=self.lhs, rhs=self.rhs, note=self.note, spaces=self.spaces
        )
        d.update(kw)
        return Relation(**d)


U = Monomial.var("u")
V = Monomial.var("v")


def generator_matrix(family, arg, space, leg=0, one=1) -> NCMat:
    """The 2x2 matrix of bare generator symbols of ``family`` at ``arg`` on ``space``."""
    f = FAMILY_INDEX[family] if isinstance(family, str) else family
    if f == PHI:
        rows = [[NCPoly.symbol((leg, f, 1, 0, arg), one), NCPoly()], [NCPoly.symbol((leg, f, 2, 0, arg), one), NCPoly()]]
    else:
        rows = [[NCPoly.symbol((leg, f, i, j, arg), one) for j in (1, 2)] for i in (1, 2)]
    return NCMat((space,), rows)


def relation_sides(rel: Relation, mapping, realize, domain, kernel=build_R, rcache=None):
    """Evaluate both sides of ``rel`` after substituting ``mapping`` (names -> Monomials).

    ``realize(slot, family, arg, space)`` returns an :class:`NCMat` on ``(space,)``.
    """
    x = mapping.get("u", U)
    y = mapping.get("v", V)
    spaces = rel.spaces

    def rmat(f: RFactor):
        arg = f.arg.subs(mapping)
        key = (f.kind, arg, f.spaces, f.t, f.inv)
        if rcache is not None and key in rcache:
            return rcache[key]
        m = decorated_R(f.kind, arg, domain, legs=f.spaces, kernel=kernel)
        if f.t:
            m = m.partial_transpose(f.t)
        if f.inv:
            m = m.inverse()
        m = m.embed(spaces)
        if rcache is not None:
            rcache[key] = m
        return m

    def side(factors):
        if not factors:
            return NCMat.identity(spaces, domain.one)
        acc = None
        for fac in factors:
            if isinstance(fac, RFactor):
                m = rmat(fac)
                acc = NCMat.from_mat(m) if acc is None else acc @ m
            else:
                fam = rel.families[fac.slot - 1]
                arg = x if fac.slot == 1 else y
                g = realize(fac.slot, fam, arg, fac.slot).embed(spaces)
                acc = g if acc is None else acc @ g
        return acc

    return side(rel.lhs), side(rel.rhs)


# ---------------------------------------------------------------------------
# exchange rules


def _needs_swap(s, t, family_first=False):
    """Return 'swap', 'contract', or None for the adjacent pair (s, t)."""
    if s[0] != t[0]:
        return None
    ks, kt = _okey(s), _okey(t)
    fs, ft = s[1], t[1]
    if ks == kt:
        if fs == ft:
            return None
        if (fs, ft) in INVERSE_PAIRS:
            return "contract" if s[3] == 1 else None
        return "swap" if fs > ft else None
    if family_first and fs != ft:
        return "swap" if fs > ft else None
    return "swap" if ks > kt else None


class RuleBook:
    """Exchange rules derived on demand from a list of quadratic relations.

    Rules are cached per ``(left family, right family, left arg, right arg)``;
    the cache is filled under a lock and read freely afterwards.
    """

    def __init__(self, relations, domain, kernel=build_R, name="rules", order="argument"):
        if order not in ("argument", "family"):
            raise ValueError(f"unknown normal order {order!r}")
        self.order = order
        self.family_first = order == "family"
        self.domain = domain
        self.kernel = kernel
        self.name = name
        self._templates = {}
        for rel in relations:
            f1, f2 = (FAMILY_INDEX[f] for f in rel.families)
            self._templates.setdefault((f1, f2), rel)
        self._cache = {}
        self._lock = threading.Lock()
        self._rcache = {}
        self.derivations = 0

    def families(self):
        return sorted(self._templates)

    def _find(self, fl, fr):
        """Template relating words (fl, fr); returns (relation, slot of left symbol)."""
        if (fr, fl) in self._templates:
            return self._templates[(fr, fl)], 2
        if (fl, fr) in self._templates:
            return self._templates[(fl, fr)], 1
        return None, None

    def table(self, fl, fr, al, ar):
        key = (fl, fr, al, ar)
        t = self._cache.get(key)
        if t is not None:
            return t
        with self._lock:
            t = self._cache.get(key)
            if t is None:
                t = self._derive(fl, fr, al, ar)
                self._cache[key] = t
        return t

    def _derive(self, fl, fr, al, ar):
        rel, left_slot = self._find(fl, fr)
        if rel is None:
            raise MissingRule(FAMILIES[fl], FAMILIES[fr])
        self.derivations += 1
        if left_slot == 2:
            mapping = {"u": ar, "v": al}
        else:
            mapping = {"u": al, "v": ar}
        one = self.domain.one
        realize = lambda slot, fam, arg, space: generator_matrix(fam, arg, space, 0, one)
        lhs, rhs = relation_sides(rel, mapping, realize, self.domain, self.kernel, self._rcache)
        diff = lhs - rhs
        where = f"{rel.label} at u={mapping['u']}, v={mapping['v']}"
        return solve_exchange(diff, self.domain, where, self.family_first)

    def action(self, s, t):
        kind = _needs_swap(s, t, self.family_first)
        if kind is None:
            return None
        if kind == "contract":
            return _contraction(s, t, self.domain)
        leg = s[0]
        table = self.table(s[1], t[1], s[4], t[4])
        entry = table.get(((s[1], s[2], s[3]), (t[1], t[2], t[3])))
        if entry is None:
            raise MissingRule(sym_str(s), sym_str(t))
        if leg == 0:
            return entry
        return [(tuple((leg,) + x[1:] for x in w), c, k) for w, c, k in entry]


def _contraction(s, t, domain):
    # s = X_i1(x), t = Y_1j(x) with X, Y mutually inverse
    leg, fs, i, _, arg = s
    _, ft, _, j, _ = t
    out = []
    if i == j:
        out.append(((), domain.one, ()))
    out.append((((leg, fs, i, 2, arg), (leg, ft, 2, j, arg)), -domain.one, ()))
    return out


def solve_exchange(diff: NCMat, domain, where="", family_first=False):
    """Solve the entries of ``diff`` (all zero in the algebra) for the out-of-order words.

    Returns ``{((fam,i,j) left, (fam,i,j) right): [(word, coeff, pkey), ...]}``.
    """
    rows = []
    wrong_words, right_words = {}, {}
    wrong_class = right_class = None
    for _, _, p in diff.entries():
        if not p:
            continue
        row_w, row_r = {}, {}
        for (w, k), c in p.terms.items():
            if len(w) != 2:
                raise InconsistentRelation(f"non-quadratic term {word_str(w)} in {where}")
            if _needs_swap(w[0], w[1], family_first) == "swap":
                if wrong_class is None:
                    wrong_class = k
                elif k != wrong_class:
                    raise InconsistentRelation(f"out-of-order words carry two prefactor classes in {where}")
                row_w[w] = c
                wrong_words.setdefault(w, len(wrong_words))
            else:
                if right_class is None:
                    right_class = k
                elif k != right_class:
                    raise InconsistentRelation(f"ordered words carry two prefactor classes in {where}")
                row_r[w] = c
                right_words.setdefault(w, len(right_words))
        rows.append((row_w, row_r))
    W = sorted(wrong_words, key=word_str)
    Rw = sorted(right_words, key=word_str)
    wi = {w: k for k, w in enumerate(W)}
    ri = {w: k for k, w in enumerate(Rw)}
    zero = domain.zero
    nW, nR = len(W), len(Rw)
    mat = []
    for row_w, row_r in rows:
        r = [zero] * (nW + nR)
        for w, c in row_w.items():
            r[wi[w]] = c
        for w, c in row_r.items():
            r[nW + ri[w]] = c
        mat.append(r)
    # Gauss-Jordan on the wrong-word columns
    pivots = []
    row = 0
    for col in range(nW):
        piv = next((k for k in range(row, len(mat)) if mat[k][col]), None)
        if piv is None:
            raise SingularCoefficientMatrix(
                f"coefficient matrix of out-of-order words is singular in {where} (word {word_str(W[col])})"
            )
        mat[row], mat[piv] = mat[piv], mat[row]
        inv = 1 / mat[row][col]
        mat[row] = [x * inv for x in mat[row]]
        for k in range(len(mat)):
            if k != row and mat[k][col]:
                f = mat[k][col]
                mat[k] = [a - f * b for a, b in zip(mat[k], mat[row])]
        pivots.append(col)
        row += 1
    for k in range(row, len(mat)):
        if any(mat[k][nW:]):
            raise InconsistentRelation(f"relation {where} imposes a constraint among ordered words")
    cls = key_div(right_class or (), wrong_class or ())
    table = {}
    for k, col in enumerate(pivots):
        w = W[col]
        terms = []
        for r_idx, rw in enumerate(Rw):
            c = mat[k][nW + r_idx]
            if c:
                terms.append((rw, -c, cls))
        table[((w[0][1], w[0][2], w[0][3]), (w[1][1], w[1][2], w[1][3]))] = terms
    return table


# ---------------------------------------------------------------------------
# rewriting


class Rewriter:
    """Normal ordering with memoized normal forms of words.

    ``strategy`` chooses the leftmost or rightmost out-of-order pair first.
    """

    def __init__(self, rules: RuleBook, strategy="leftmost", max_steps=None):
        if strategy not in ("leftmost", "rightmost"):
            raise ValueError(f"unknown rewriting strategy {strategy!r}")
        self.rules = rules
        self.strategy = strategy
        self.max_steps = max_steps if max_steps is not None else max_steps_default()
        self.steps = 0
        self._memo = {}
        self.domain = rules.domain

    def _find(self, w):
        n = len(w)
        rng = range(n - 1) if self.strategy == "leftmost" else range(n - 2, -1, -1)
        for p in rng:
            act = self.rules.action(w[p], w[p + 1])
            if act is not None:
                return p, act
        return None, None

    def normal_form(self, w):
        """Normal form of a single word as ``{(word, key): coeff}`` (do not mutate)."""
        memo = self._memo
        hit = memo.get(w)
        if hit is not None:
            return hit
        p, act = self._find(w)
        if p is None:
            res = {(w, ()): self.domain.one}
            memo[w] = res
            return res
        self.steps += 1
        if self.steps > self.max_steps:
            raise StepLimitExceeded(f"normal ordering exceeded {self.max_steps} steps")
        res = {}
        pre, post = w[:p], w[p + 2 :]
        for repl, c, k in act:
            sub = self.normal_form(pre + repl + post)
            for (w2, k2), c2 in sub.items():
                kk = key_mul(k, k2) if k else k2
                key = (w2, kk)
                val = c * c2
                old = res.get(key)
                if old is None:
                    res[key] = val
                else:
                    new = old + val
                    if new:
                        res[key] = new
                    else:
                        del res[key]
        res = {k: v for k, v in res.items() if v}
        memo[w] = res
        return res

    def reduce(self, poly: NCPoly) -> NCPoly:
        out = NCPoly()
        t = out.terms
        for (w, k), c in poly.terms.items():
            for (w2, k2), c2 in self.normal_form(w).items():
                key = (w2, key_mul(k, k2))
                val = c * c2
                old = t.get(key)
                if old is None:
                    if val:
                        t[key] = val
                else:
                    new = old + val
                    if new:
                        t[key] = new
                    else:
                        del t[key]
        return out


def require_families(rel_families, realization):
    for fam in rel_families:
        if fam not in realization:
            raise MissingRealization(fam)


# ---------------------------------------------------------------------------
# confluence of the Zamolodchikov-Faddeev rules


def relation_FZ() -> Relation:
    """Phi_2(v) Phi_1(u) = Rbar_12(u/v) Phi_1(u) Phi_2(v), with Phi as the matrix [[Phi+, 0], [Phi-, 0]]."""
    return Relation("FZ", ("Phi", "Phi"), (Gen(2), Gen(1)), (RFactor("bar", U / V), Gen(1), Gen(2)))


def check_confluence(arg_count=3, kernel=build_R, strict=False):
    """Leftmost-first and rightmost-first reduction of every Phi word of length 3.

    Arguments are the first ``arg_count`` of ``u, v, w, ...`` taken in reverse
    order, so every adjacent pair starts out of order.  ``strict=True`` raises
    :class:`NonConfluent` with the first witness instead of reporting it.
    """
    if arg_count < 3:
        raise ValueError("confluence needs at least three arguments")
    names = ["u", "v", "w", "x", "y", "z"][:arg_count]
    args = [Monomial.var(n) for n in names]
    d = SymbolicDomain()
    book = RuleBook([relation_FZ()], d, kernel, name="FZ")
    left, right = Rewriter(book, "leftmost"), Rewriter(book, "rightmost")
    rep = Report("confluence", config={"strategy": "symbolic", "arguments": names})
    t0 = time.perf_counter()
    witnesses, count = [], 0
    for a3, a2, a1 in itertools.combinations(args, 3):
        for comps in itertools.product((1, 2), repeat=3):
            w = tuple(sym("Phi", c, 0, a) for c, a in zip(comps, (a1, a2, a3)))
            count += 1
            if left.normal_form(w) != right.normal_form(w):
                if strict:
                    raise NonConfluent(word_str(w))
                witnesses.append(word_str(w))
    rep.add(
        Check(
            "phi_length3",
            FAIL if witnesses else PASS,
            residual={"witnesses": witnesses} if witnesses else {},
            info={"words": count, "rewrite_steps": left.steps + right.steps},
            seconds=time.perf_counter() - t0,
        )
    )
    return rep

"""Exact coefficient arithmetic.

``HalfLaurent`` is the ground ring Z[q^{+-1/2}]. Exponents are stored doubled,
so ``{1: 1}`` is q^{1/2} and ``{2: 1}`` is q.

Three coefficient rings are exposed for the diagram algebras:

* ``LaurentRing``   -- Z[q^{+-1/2}] itself (division only by units),
* ``GenericField``  -- the fraction field Q(q^{1/2}),
* ``CyclotomicField`` -- Q[t]/Phi_m(t) with q^{1/2} -> t, a primitive m-th root of 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Mapping

import sympy
from sympy import QQ
from sympy.polys.fields import field as sympy_field


class HalfLaurent:
    """Laurent polynomial in q^{1/2} with integer coefficients (immutable)."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                c = int(c)
                if c:
                    clean[int(e)] = c
        self._terms = clean
        self._hash = None

    # constructors

    @classmethod
    def const(cls, c: int) -> "HalfLaurent":
        return cls({0: c})

    @classmethod
    def qh(cls, e2: int, c: int = 1) -> "HalfLaurent":
        """c * q^{e2/2}."""
        return cls({e2: c})

    @classmethod
    def q(cls, k: int = 1, c: int = 1) -> "HalfLaurent":
        """c * q^k."""
        return cls({2 * k: c})

    # access

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def coeff(self, e2: int) -> int:
        return self._terms.get(e2, 0)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_unit(self) -> bool:
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    def min_exp(self) -> int:
        return min(self._terms)

    def max_exp(self) -> int:
        return max(self._terms)

    # arithmetic

    def __add__(self, other):
        other = _as_hl(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return HalfLaurent(out)

    __radd__ = __add__

    def __neg__(self):
        return HalfLaurent({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = _as_hl(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_hl(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return HalfLaurent(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "HalfLaurent":
        if not self.is_unit():
            raise ZeroDivisionError(f"{self} is not a unit of Z[q^(+-1/2)]")
        (e, c), = self._terms.items()
        return HalfLaurent({-e: c})

    def shift(self, e2: int) -> "HalfLaurent":
        """Multiply by q^{e2/2}."""
        return HalfLaurent({e + e2: c for e, c in self._terms.items()})

    def at_one(self) -> int:
        """Image under q^{1/2} -> 1."""
        return sum(self._terms.values())

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        other = _as_hl(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"HalfLaurent({self.items()})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            if e == 0:
                mono = ""
            elif e == 2:
                mono = "q"
            elif e % 2 == 0:
                mono = f"q^{e // 2}"
            else:
                mono = f"q^({e}/2)"
            if not mono:
                coef = str(c)
            elif c == 1:
                coef = ""
            elif c == -1:
                coef = "-"
            else:
                coef = f"{c}*"
            parts.append(coef + mono)
        return " + ".join(parts).replace("+ -", "- ")

    # serialization

    def to_json(self) -> list[list]:
        return [[e, str(c)] for e, c in self.items()]

    @classmethod
    def from_json(cls, data: Iterable) -> "HalfLaurent":
        return cls({int(e): int(c) for e, c in data})


def _as_hl(x):
    if isinstance(x, HalfLaurent):
        return x
    if isinstance(x, int):
        return HalfLaurent({0: x})
    return NotImplemented


ZERO = HalfLaurent()
ONE = HalfLaurent({0: 1})
Q = HalfLaurent.q(1)
QH = HalfLaurent.qh(1)
#: loop value -q^2 - q^-2
DELTA = HalfLaurent({4: -1, -4: -1})
#: boundary cup values C(+), C(-)
C_PLUS = HalfLaurent({-5: -1})
C_MINUS = HalfLaurent({-1: 1})


def cup_constant(state: str) -> HalfLaurent:
    return C_PLUS if state == "+" else C_MINUS


@lru_cache(maxsize=None)
def quantum_int(n: int) -> HalfLaurent:
    """[n]_q = q^{2(1-n)} + q^{2(3-n)} + ... + q^{2(n-1)}."""
    if n < 1:
        raise ValueError("quantum integers are defined for n >= 1")
    return HalfLaurent({4 * i: 1 for i in range(-n + 1, n, 2)})


@lru_cache(maxsize=None)
def quantum_factorial(n: int) -> HalfLaurent:
    if n < 0:
        raise ValueError("n must be non-negative")
    out = ONE
    for k in range(1, n + 1):
        out = out * quantum_int(k)
    return out


# ---------------------------------------------------------------------------
# polynomials


class UniPoly:
    """Sparse polynomial in one variable. Coefficients may be any ring elements."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Mapping[int, object] | None = None, var: str = "x"):
        self.coeffs = {int(k): v for k, v in (coeffs or {}).items() if v}
        self.var = var

    @classmethod
    def monomial(cls, k: int, c=1, var: str = "x") -> "UniPoly":
        return cls({k: c}, var)

    def degree(self) -> int:
        return max(self.coeffs) if self.coeffs else -1

    def __add__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly({0: other}, self.var)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out[k] + v if k in out else v
        return UniPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly({k: -v for k, v in self.coeffs.items()}, self.var)

    def __sub__(self, other):
        return self + (-other if isinstance(other, UniPoly) else -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return UniPoly({k: v * other for k, v in self.coeffs.items()}, self.var)
        out: dict = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                out[i + j] = out[i + j] + a * b if i + j in out else a * b
        return UniPoly(out, self.var)

    def __rmul__(self, other):
        return UniPoly({k: other * v for k, v in self.coeffs.items()}, self.var)

    def __pow__(self, n: int):
        out = UniPoly({0: 1}, self.var)
        for _ in range(n):
            out = out * self
        return out

    def map(self, f) -> "UniPoly":
        return UniPoly({k: f(v) for k, v in self.coeffs.items()}, self.var)

    def evaluate(self, x, one=1):
        """Horner evaluation at ``x`` (any object supporting + and *)."""
        if not self.coeffs:
            return 0 * one
        acc = 0 * one
        for k in range(self.degree(), -1, -1):
            acc = acc * x + self.coeffs.get(k, 0) * one
        return acc

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        """Division by a polynomial with unit (+-1) leading coefficient."""
        lead = other.coeffs[other.degree()]
        if lead not in (1, -1):
            raise ValueError("divisor must have leading coefficient +-1")
        rem = UniPoly(self.coeffs, self.var)
        quo: dict = {}
        while rem.degree() >= other.degree():
            d = rem.degree() - other.degree()
            c = rem.coeffs[rem.degree()] * lead
            quo[d] = c
            rem = rem - UniPoly.monomial(d, c, self.var) * other
        return UniPoly(quo, self.var), rem

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly({0: other} if other else {}, self.var)
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"({v})*{self.var}^{k}" for k, v in sorted(self.coeffs.items(), reverse=True))


class BiPoly:
    """Sparse polynomial in two commuting variables with integer coefficients."""

    def __init__(self, coeffs: Mapping[tuple[int, int], int] | None = None, names=("u1", "u2")):
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if v}
        self.names = names

    @classmethod
    def from_unipoly(cls, p: UniPoly, slot: int, names=("u1", "u2")) -> "BiPoly":
        key = (lambda k: (k, 0)) if slot == 0 else (lambda k: (0, k))
        return cls({key(k): v for k, v in p.coeffs.items()}, names)

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        out: dict = {}
        for (a, b), c in self.coeffs.items():
            for (x, y), d in other.coeffs.items():
                out[(a + x, b + y)] = out.get((a + x, b + y), 0) + c * d
        return BiPoly(out, self.names)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self.coeffs == other.coeffs

    def __repr__(self):
        u, v = self.names
        return " + ".join(f"{c}*{u}^{i}*{v}^{j}" for (i, j), c in sorted(self.coeffs.items(), reverse=True)) or "0"


@lru_cache(maxsize=None)
def cheb_S(n: int) -> UniPoly:
    """Chebyshev polynomial of the second kind: S_0=1, S_1=x, S_n=x S_{n-1}-S_{n-2}."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return UniPoly({0: 1})
    if n == 1:
        return UniPoly({1: 1})
    return UniPoly({1: 1}) * cheb_S(n - 1) - cheb_S(n - 2)


@lru_cache(maxsize=None)
def cheb_T(n: int) -> UniPoly:
    """Chebyshev polynomial of the first kind, T_n(u + 1/u) = u^n + u^-n."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return UniPoly({0: 2})
    if n == 1:
        return UniPoly({1: 1})
    return UniPoly({1: 1}) * cheb_T(n - 1) - cheb_T(n - 2)


# ---------------------------------------------------------------------------
# roots of unity


@dataclass(frozen=True)
class CyclotomicSpec:
    """q^{1/2} is sent to a primitive m-th root of unity zeta."""

    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be a positive integer")

    @property
    def N(self) -> int:
        return ord_q4(self)

    @cached_property
    def modulus(self) -> tuple[int, ...]:
        """Coefficients of Phi_m, lowest degree first."""
        t = sympy.Symbol("t")
        coeffs = sympy.Poly(sympy.cyclotomic_poly(self.m, t), t).all_coeffs()
        return tuple(int(c) for c in reversed(coeffs))

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    # Frobenius parameter under the two conventions found in the literature;
    # exposed as doubled q-exponents, neither is used downstream.
    @property
    def eps_exponent_full(self) -> int:
        """epsilon = q^{N^2}, as a twice-exponent."""
        return 2 * self.N ** 2

    @property
    def eps_exponent_half(self) -> int:
        """epsilon = q^{N^2/2}, as a twice-exponent."""
        return self.N ** 2


def ord_q4(spec: CyclotomicSpec) -> int:
    """Order of q^4 = zeta^8 where zeta has order m."""
    return spec.m // math.gcd(spec.m, 8)


class CycElement:
    """Element of Q[t]/Phi_m(t), stored as reduced coefficient tuple."""

    __slots__ = ("spec", "c")

    def __init__(self, spec: CyclotomicSpec, coeffs: Iterable):
        self.spec = spec
        self.c = _reduce_mod(list(coeffs), spec.modulus)

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.c), len(other.c))
        a = list(self.c) + [0] * (n - len(self.c))
        for i, v in enumerate(other.c):
            a[i] += v
        return CycElement(self.spec, a)

    __radd__ = __add__

    def __neg__(self):
        return CycElement(self.spec, [-v for v in self.c])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if not self.c or not other.c:
            return CycElement(self.spec, [])
        out = [Fraction(0)] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(other.c):
                    out[i + j] += a * b
        return CycElement(self.spec, out)

    __rmul__ = __mul__

    def inverse(self) -> "CycElement":
        if not self.c:
            raise ZeroDivisionError("zero has no inverse in the cyclotomic field")
        t = sympy.Symbol("t")
        mod = sympy.Poly(list(reversed(self.spec.modulus)), t, domain=QQ)
        p = sympy.Poly(list(reversed([sympy.Rational(v.numerator, v.denominator) for v in self.c])), t, domain=QQ)
        inv = sympy.invert(p, mod)
        coeffs = [Fraction(int(r.p), int(r.q)) for r in reversed(inv.all_coeffs())]
        return CycElement(self.spec, coeffs)

    def _coerce(self, other):
        if isinstance(other, CycElement):
            if other.spec != self.spec:
                raise ValueError("mixing different cyclotomic specializations")
            return other
        if isinstance(other, (int, Fraction)):
            return CycElement(self.spec, [other])
        raise TypeError(f"cannot coerce {other!r}")

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycElement(self.spec, [other])
        if not isinstance(other, CycElement):
            return NotImplemented
        return self.spec == other.spec and self.c == other.c

    def __hash__(self):
        return hash((self.spec.m, self.c))

    def __repr__(self):
        if not self.c:
            return "0"
        return " + ".join(f"({v})*z^{i}" for i, v in enumerate(self.c) if v) + f"  [z^{self.spec.m}=1]"


def _reduce_mod(a: list, modulus: tuple[int, ...]) -> tuple:
    a = [Fraction(v) for v in a]
    d = len(modulus) - 1
    for i in range(len(a) - 1, d - 1, -1):
        c = a[i]
        if c:
            # modulus is monic
            for j in range(d + 1):
                a[i - d + j] -= c * modulus[j]
    a = a[:d] if len(a) > d else a
    while a and not a[-1]:
        a.pop()
    return tuple(a)


def specialize(x: HalfLaurent, spec: CyclotomicSpec) -> CycElement:
    """Image of x under q^{1/2} -> zeta_m."""
    m = spec.m
    acc = [0] * m
    for e, c in x.items():
        acc[e % m] += c
    return CycElement(spec, acc)


# ---------------------------------------------------------------------------
# coefficient rings used by the diagram algebras


class LaurentRing:
    """Z[q^{+-1/2}]; only units are invertible."""

    name = "laurent"
    key = ("laurent",)

    zero = ZERO
    one = ONE

    def from_laurent(self, h: HalfLaurent) -> HalfLaurent:
        return h

    def inv(self, x: HalfLaurent) -> HalfLaurent:
        return x.inverse()

    def __repr__(self):
        return "LaurentRing()"


class GenericField:
    """Q(q^{1/2}) with q^{1/2} a formal variable ``t``."""

    name = "generic"
    key = ("generic",)

    def __init__(self):
        self.K, self.t = sympy_field("t", QQ)
        self.zero = self.K(0)
        self.one = self.K(1)

    def from_laurent(self, h: HalfLaurent):
        return _generic_from_laurent(h)

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("division by zero in Q(q^(1/2))")
        return 1 / x

    def __eq__(self, other):
        return isinstance(other, GenericField)

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return "GenericField()"


_GENERIC = None


def generic_field() -> GenericField:
    global _GENERIC
    if _GENERIC is None:
        _GENERIC = GenericField()
    return _GENERIC


@lru_cache(maxsize=4096)
def _generic_from_laurent(h: HalfLaurent):
    F = generic_field()
    acc = F.zero
    for e, c in h.items():
        acc = acc + c * F.t ** e
    return acc


class CyclotomicField:
    """Q(zeta_m) with q^{1/2} -> zeta_m."""

    name = "cyclotomic"

    def __init__(self, spec: CyclotomicSpec | int):
        self.spec = spec if isinstance(spec, CyclotomicSpec) else CyclotomicSpec(spec)
        self.zero = CycElement(self.spec, [])
        self.one = CycElement(self.spec, [1])

    @property
    def key(self):
        return ("cyclo", self.spec.m)

    def from_laurent(self, h: HalfLaurent) -> CycElement:
        return specialize(h, self.spec)

    def inv(self, x: CycElement) -> CycElement:
        return x.inverse()

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.spec == self.spec

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"CyclotomicField(m={self.spec.m})"


# ---------------------------------------------------------------------------
# localization at quantum integers


def divexact(a: HalfLaurent, b: HalfLaurent) -> HalfLaurent | None:
    """a / b if b divides a in Z[q^{+-1/2}] (b must have leading coefficient +-1)."""
    if not b:
        raise ZeroDivisionError("division by zero")
    if not a:
        return ZERO
    b1 = b.at_one()
    if b1 and a.at_one() % b1:
        return None
    bmax, bmin = b.max_exp(), b.min_exp()
    lead = b.coeff(bmax)
    if lead not in (1, -1):
        raise ValueError("divisor must have unit leading coefficient")
    rem = dict(a.terms)
    floor = a.min_exp() - bmin
    quo: dict[int, int] = {}
    bterms = b.items()
    while rem:
        top = max(rem)
        d = top - bmax
        if d < floor:
            return None
        c = rem[top] * lead
        quo[d] = c
        for e, v in bterms:
            k = e + d
            nv = rem.get(k, 0) - c * v
            if nv:
                rem[k] = nv
            else:
                rem.pop(k, None)
    return HalfLaurent(quo)


@lru_cache(maxsize=None)
def _qint_power(k: int, p: int) -> HalfLaurent:
    return quantum_int(k) ** p


class QFrac:
    """num / prod_k [k]_q^{p_k}, kept with the denominator as small as possible."""

    __slots__ = ("num", "den")

    def __init__(self, num: HalfLaurent, den: Mapping[int, int] | None = None, reduce: bool = True):
        den = {k: p for k, p in (den or {}).items() if p and k > 1}
        if not num:
            den = {}
        elif reduce and den:
            for k in sorted(den):
                while den[k]:
                    qq = divexact(num, quantum_int(k))
                    if qq is None:
                        break
                    num = qq
                    den[k] -= 1
            den = {k: p for k, p in den.items() if p}
        self.num = num
        self.den = den

    def _den_poly(self, extra: Mapping[int, int]) -> HalfLaurent:
        out = ONE
        for k, p in extra.items():
            if p:
                out = out * _qint_power(k, p)
        return out

    def _lift(self, common: Mapping[int, int]) -> HalfLaurent:
        missing = {k: p - self.den.get(k, 0) for k, p in common.items()}
        return self.num * self._den_poly(missing)

    def __add__(self, other):
        other = _as_qfrac(other)
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            return QFrac(self.num + other.num, self.den, reduce=False)
        common = dict(self.den)
        for k, p in other.den.items():
            common[k] = max(common.get(k, 0), p)
        return QFrac(self._lift(common) + other._lift(common), common, reduce=False)

    __radd__ = __add__

    def __neg__(self):
        return QFrac(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        return self + (-_as_qfrac(other))

    def __rsub__(self, other):
        return _as_qfrac(other) - self

    def __mul__(self, other):
        other = _as_qfrac(other)
        den = dict(self.den)
        for k, p in other.den.items():
            den[k] = den.get(k, 0) + p
        return QFrac(self.num * other.num, den, reduce=False)

    __rmul__ = __mul__

    def reduced(self) -> "QFrac":
        return QFrac(self.num, self.den) if self.den else self

    def inverse(self) -> "QFrac":
        """Only monomials times products of quantum integers are invertible here."""
        if not self.num:
            raise ZeroDivisionError("zero is not invertible")
        num = self.num
        newden: dict[int, int] = {}
        while not num.is_unit():
            # try the widest quantum integer first: [4] = [2](q^4 + q^-4) etc.
            span = (num.max_exp() - num.min_exp()) // 8 + 1
            for k in range(span, 1, -1):
                qq = divexact(num, quantum_int(k))
                if qq is not None:
                    num = qq
                    newden[k] = newden.get(k, 0) + 1
                    break
            else:
                raise ValueError(f"{self.num} is not a unit times quantum integers")
        return QFrac(self._den_poly(self.den) * num.inverse(), newden)

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        try:
            other = _as_qfrac(other)
        except TypeError:
            return NotImplemented
        return not (self - other).num

    def __hash__(self):
        r = self.reduced()
        return hash((r.num, tuple(sorted(r.den.items()))))

    def to_laurent(self) -> HalfLaurent:
        self = self.reduced()
        if self.den:
            raise ValueError("element has a nontrivial denominator")
        return self.num

    def __repr__(self):
        self = self.reduced()
        if not self.den:
            return str(self.num)
        den = "*".join(f"[{k}]^{p}" if p > 1 else f"[{k}]" for k, p in sorted(self.den.items()))
        return f"({self.num})/({den})"


def _as_qfrac(x) -> QFrac:
    if isinstance(x, QFrac):
        return x
    if isinstance(x, HalfLaurent):
        return QFrac(x)
    if isinstance(x, int):
        return QFrac(HalfLaurent.const(x))
    raise TypeError(f"cannot coerce {x!r} to QFrac")


class QuantumLocalRing:
    """Z[q^{+-1/2}] with all quantum integers inverted: a subring of Q(q^{1/2})
    that suffices for Jones-Wenzl coefficients and avoids gcd computations."""

    name = "qlocal"
    key = ("qlocal",)

    zero = QFrac(ZERO)
    one = QFrac(ONE)

    def from_laurent(self, h: HalfLaurent) -> QFrac:
        return QFrac(h)

    def inv(self, x: QFrac) -> QFrac:
        return x.reduced().inverse()

    def normalize(self, x: QFrac) -> QFrac:
        return x.reduced()

    def to_generic(self, x: QFrac):
        F = generic_field()
        return F.from_laurent(x.num) / F.from_laurent(x._den_poly(x.den))

    def __eq__(self, other):
        return isinstance(other, QuantumLocalRing)

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return "QuantumLocalRing()"


def parse_ring(text: str):
    """``generic`` | ``qlocal`` | ``laurent`` | ``cyclo:<m>``."""
    if text == "generic":
        return generic_field()
    if text == "laurent":
        return LaurentRing()
    if text == "qlocal":
        return QuantumLocalRing()
    if text.startswith("cyclo:"):
        return CyclotomicField(int(text.split(":", 1)[1]))
    raise ValueError(f"unknown ring {text!r}; expected generic, laurent or cyclo:<m>")

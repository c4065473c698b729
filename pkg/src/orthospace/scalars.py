"""Exact star-field arithmetic with orders, valuation rings and places.

Four commutative field kinds are provided, each with an involution:

* ``Rationals``             plain fractions, identity star, ordered;
* ``QuadExt(d)``            a + b*sqrt(d) with rational a, b; star either the
                            identity or conjugation; ordered iff d > 0 (with
                            sqrt(d) positive);
* ``GaloisField(p, k)``     polynomial representation modulo the smallest
                            monic irreducible; star either the identity or,
                            for even k, x -> x**(p**(k//2));
* ``RatFunc()``             rational functions over Q in one positive
                            infinitesimal ``e``, the computable stand-in for
                            a non-Archimedean ordered field.

Values are immutable ``Scalar`` objects in a canonical form unique per value,
so equality and hashing are structural.  Literals parse through a small
expression grammar shared by all the kinds (see ``Field.parse``).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from typing import Iterable, Sequence

from .errors import AllZero, BadParameter, DivisionByZero, NotInValuationRing, ParseError, Unordered

IDENTITY = "identity"
CONJUGATION = "conjugation"
FROBENIUS_HALF = "frobenius_half"

FINITE_MEDIAL = "finite_medial"
FINITE_INFINITESIMAL = "finite_infinitesimal"
INFINITE = "infinite"


@dataclass(frozen=True)
class Scalar:
    """An element of an exact field; payload layout depends on the field."""

    field: "Field"
    payload: object

    def __add__(self, other):
        return self.field.add(self, self.field.coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return self.field.add(self, self.field.neg(self.field.coerce(other)))

    def __rsub__(self, other):
        return self.field.add(self.field.coerce(other), self.field.neg(self))

    def __mul__(self, other):
        return self.field.mul(self, self.field.coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self.field.mul(self, self.field.inv(self.field.coerce(other)))

    def __rtruediv__(self, other):
        return self.field.mul(self.field.coerce(other), self.field.inv(self))

    def __neg__(self):
        return self.field.neg(self)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.field.inv(self) ** (-k)
        out = self.field.one
        base = self
        while k:
            if k & 1:
                out = self.field.mul(out, base)
            base = self.field.mul(base, base)
            k >>= 1
        return out

    def __bool__(self):
        return not self.field.is_zero(self)

    def star(self) -> "Scalar":
        return self.field.star(self)

    def __str__(self):
        return self.field.format(self)

    def __repr__(self):
        return f"<{self.field.format(self)}>"


class Field:
    """Common operations; concrete kinds fill in the payload arithmetic."""

    star_kind: str = IDENTITY

    # -- basics ----------------------------------------------------------

    @property
    def ordered(self) -> bool:
        return False

    @property
    def zero(self) -> Scalar:
        return self.from_fraction(Fraction(0))

    @property
    def one(self) -> Scalar:
        return self.from_fraction(Fraction(1))

    def coerce(self, value) -> Scalar:
        if isinstance(value, Scalar):
            if value.field != self:
                raise ValueError(f"scalar from {value.field} used in {self}")
            return value
        if isinstance(value, (int, Fraction)):
            return self.from_fraction(Fraction(value))
        raise TypeError(f"cannot coerce {value!r} into {self}")

    def is_zero(self, a: Scalar) -> bool:
        return a.payload == self.zero.payload

    # -- hooks ------------------------------------------------------------

    def from_fraction(self, q: Fraction) -> Scalar:
        raise NotImplementedError

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        raise NotImplementedError

    def neg(self, a: Scalar) -> Scalar:
        raise NotImplementedError

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        raise NotImplementedError

    def inv(self, a: Scalar) -> Scalar:
        raise NotImplementedError

    def star(self, a: Scalar) -> Scalar:
        return a  # identity unless overridden

    def sign(self, a: Scalar) -> int:
        raise Unordered(f"{self} carries no order")

    def format(self, a: Scalar) -> str:
        raise NotImplementedError

    def sample(self, rng) -> Scalar:
        """A random element; used by property checks."""
        raise NotImplementedError

    def generators(self) -> list[Scalar]:
        """A small set of elements exercising the structure."""
        return [self.zero, self.one, -self.one]

    # -- parsing -----------------------------------------------------------

    def symbols(self) -> dict[str, Scalar]:
        return {}

    def parse(self, text: str) -> Scalar:
        return _parse_expression(self, text)


_TOKEN = re.compile(r"\s*(\d+|[a-zA-Z]+|\*\*|[()+\-*/^])")


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"bad scalar literal near {text[pos:]!r}", column=pos + 1)
        tok = m.group(1)
        out.append("^" if tok == "**" else tok)
        pos = m.end()
    return out


def _parse_expression(field: Field, text: str) -> Scalar:
    """expr := term (('+'|'-') term)*; term := unary (('*'|'/') unary)*;
    unary := '-' unary | atom ['^' int]; atom := int | symbol | '(' expr ')'."""
    tokens = _tokenize(text)
    names = field.symbols()
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take(expected=None):
        nonlocal pos
        tok = peek()
        if tok is None or (expected is not None and tok != expected):
            raise ParseError(f"expected {expected!r} in scalar literal {text!r}")
        pos += 1
        return tok

    def atom() -> Scalar:
        tok = peek()
        if tok is None:
            raise ParseError(f"unexpected end of scalar literal {text!r}")
        if tok == "(":
            take()
            value = expr()
            take(")")
            return value
        take()
        if tok.isdigit():
            return field.coerce(int(tok))
        if tok in names:
            return names[tok]
        raise ParseError(f"unknown symbol {tok!r} in scalar literal for {field}")

    def unary() -> Scalar:
        if peek() == "-":
            take()
            return -unary()
        value = atom()
        if peek() == "^":
            take()
            negative = False
            if peek() == "-":
                take()
                negative = True
            k = int(take())
            value = value ** (-k if negative else k)
        return value

    def term() -> Scalar:
        value = unary()
        while peek() in ("*", "/"):
            if take() == "*":
                value = value * unary()
            else:
                value = value / unary()
        return value

    def expr() -> Scalar:
        value = term()
        while peek() in ("+", "-"):
            if take() == "+":
                value = value + term()
            else:
                value = value - term()
        return value

    out = expr()
    if pos != len(tokens):
        raise ParseError(f"trailing input in scalar literal {text!r}")
    return out


# -- rationals -----------------------------------------------------------------


@dataclass(frozen=True)
class Rationals(Field):
    """Plain exact fractions with the identity star."""

    @property
    def ordered(self):
        return True

    def from_fraction(self, q):
        return Scalar(self, q)

    def add(self, a, b):
        return Scalar(self, a.payload + b.payload)

    def neg(self, a):
        return Scalar(self, -a.payload)

    def mul(self, a, b):
        return Scalar(self, a.payload * b.payload)

    def inv(self, a):
        if a.payload == 0:
            raise DivisionByZero("1/0 in the rationals")
        return Scalar(self, 1 / a.payload)

    def sign(self, a):
        q = a.payload
        return (q > 0) - (q < 0)

    def format(self, a):
        return str(a.payload)

    def sample(self, rng):
        num = rng.randint(-9, 9)
        den = rng.randint(1, 9)
        return Scalar(self, Fraction(num, den))

    def generators(self):
        return [self.zero, self.one, -self.one, self.coerce(Fraction(3, 4)), self.coerce(5), self.coerce(Fraction(1, 5))]

    def __str__(self):
        return "Q"


def _squarefree(d: int) -> bool:
    d = abs(d)
    for p in range(2, isqrt(d) + 1):
        if d % (p * p) == 0:
            return False
    return True


@dataclass(frozen=True)
class QuadExt(Field):
    """The quadratic extension Q(sqrt d) for a squarefree d not 0 or 1.

    Payload: a pair (a, b) of fractions meaning a + b*sqrt(d).  The star is
    the identity or conjugation (b -> -b).  For d > 0 the field is ordered by
    embedding sqrt(d) as the positive root.
    """

    d: int
    star_kind: str = IDENTITY

    def __post_init__(self):
        if self.d in (0, 1) or not _squarefree(self.d):
            raise BadParameter("QuadExt needs a squarefree d different from 0 and 1")
        if self.star_kind not in (IDENTITY, CONJUGATION):
            raise BadParameter(f"unsupported star {self.star_kind!r} for QuadExt")

    @property
    def ordered(self):
        return self.d > 0

    @property
    def sqrt_gen(self) -> Scalar:
        return Scalar(self, (Fraction(0), Fraction(1)))

    def from_fraction(self, q):
        return Scalar(self, (q, Fraction(0)))

    def add(self, a, b):
        (x1, y1), (x2, y2) = a.payload, b.payload
        return Scalar(self, (x1 + x2, y1 + y2))

    def neg(self, a):
        x, y = a.payload
        return Scalar(self, (-x, -y))

    def mul(self, a, b):
        (x1, y1), (x2, y2) = a.payload, b.payload
        return Scalar(self, (x1 * x2 + y1 * y2 * self.d, x1 * y2 + y1 * x2))

    def inv(self, a):
        x, y = a.payload
        norm = x * x - y * y * self.d
        if norm == 0:
            if x == 0 and y == 0:
                raise DivisionByZero(f"1/0 in {self}")
            raise DivisionByZero(f"norm vanishes for {self.format(a)}; d is not squarefree?")
        return Scalar(self, (x / norm, -y / norm))

    def star(self, a):
        if self.star_kind == IDENTITY:
            return a
        x, y = a.payload
        return Scalar(self, (x, -y))

    def sign(self, a):
        if not self.ordered:
            raise Unordered(f"{self} carries no order (d < 0)")
        x, y = a.payload
        if y == 0:
            return (x > 0) - (x < 0)
        if x == 0:
            return 1 if y > 0 else -1
        # compare a to -b*sqrt(d) by comparing squares, mind the signs
        if x > 0 and y > 0:
            return 1
        if x < 0 and y < 0:
            return -1
        left = x * x
        right = y * y * self.d
        if x > 0:  # y < 0
            return 1 if left > right else -1 if left < right else 0
        return 1 if right > left else -1 if right < left else 0

    def format(self, a):
        x, y = a.payload
        if y == 0:
            return str(x)
        ystr = "r" if y == 1 else "-r" if y == -1 else f"{y}*r"
        if x == 0:
            return ystr
        return f"{x}+{ystr}" if not ystr.startswith("-") else f"{x}{ystr}"

    def symbols(self):
        return {"r": self.sqrt_gen}

    def sample(self, rng):
        return Scalar(self, (Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
                             Fraction(rng.randint(-9, 9), rng.randint(1, 9))))

    def generators(self):
        r = self.sqrt_gen
        return [self.zero, self.one, -self.one, r, self.one + r, self.coerce(Fraction(1, 3)) - r]

    def __str__(self):
        return f"Q(sqrt {self.d})"


# -- finite fields ----------------------------------------------------------


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    for q in range(2, isqrt(p) + 1):
        if p % q == 0:
            return False
    return True


def _poly_mul_mod(a, b, modulus, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_rem(out, modulus, p)


def _poly_rem(a, modulus, p):
    a = list(a)
    k = len(modulus) - 1
    while len(a) > k:
        lead = a[-1]
        if lead:
            shift = len(a) - 1 - k
            for i, m in enumerate(modulus):
                a[shift + i] = (a[shift + i] - lead * m) % p
        a.pop()
    while len(a) < k:
        a.append(0)
    return tuple(a)


def _poly_pow_mod(base, e, modulus, p):
    result = _poly_rem([1], modulus, p)
    base = _poly_rem(base, modulus, p)
    while e:
        if e & 1:
            result = _poly_mul_mod(result, base, modulus, p)
        base = _poly_mul_mod(base, base, modulus, p)
        e >>= 1
    return result


def _poly_gcd(a, b, p):
    a, b = list(a), list(b)

    def norm(x):
        while x and x[-1] == 0:
            x.pop()
        return x

    a, b = norm(a), norm(b)
    while b:
        inv_lead = pow(b[-1], p - 2, p)
        monic = [(c * inv_lead) % p for c in b]
        r = list(a)
        while len(r) >= len(monic) and norm(r):
            if r[-1]:
                shift = len(r) - len(monic)
                lead = r[-1]
                for i, m in enumerate(monic):
                    r[shift + i] = (r[shift + i] - lead * m) % p
            r = norm(r)
            if len(r) < len(monic):
                break
        a, b = b, norm(r)
    return a


@lru_cache(maxsize=None)
def _find_modulus(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree k over GF(p),
    as coefficients (c0, ..., c_{k-1}, 1)."""
    if k == 1:
        return (0, 1)
    x = [0, 1]
    for tail in itertools.product(range(p), repeat=k):
        modulus = tuple(tail) + (1,)
        # irreducible iff x^(p^k) = x mod f and gcd(x^(p^i) - x, f) = 1 for i <= k/2
        xq = _poly_pow_mod(x, p ** k, modulus, p)
        if xq != _poly_rem(x, modulus, p):
            continue
        ok = True
        for i in range(1, k // 2 + 1):
            xi = list(_poly_pow_mod(x, p ** i, modulus, p))
            xi[1] = (xi[1] - 1) % p
            g = _poly_gcd(xi, list(modulus), p)
            if len(g) > 1:
                ok = False
                break
        if ok:
            return modulus
    raise AssertionError("no irreducible polynomial found")


@lru_cache(maxsize=None)
def _primitive_root(p: int) -> int:
    factors = []
    m = p - 1
    q = 2
    while q * q <= m:
        if m % q == 0:
            factors.append(q)
            while m % q == 0:
                m //= q
        q += 1
    if m > 1:
        factors.append(m)
    for g in range(2, p):
        if all(pow(g, (p - 1) // f, p) != 1 for f in factors):
            return g
    return 1


@dataclass(frozen=True)
class GaloisField(Field):
    """GF(p^k) in the polynomial basis modulo the smallest monic irreducible.

    Payload: a tuple of k residues (little endian).  The star is the identity
    or, when k is even, the half Frobenius x -> x**(p**(k//2)), which is an
    involution.  Finite fields carry no order.
    """

    p: int
    k: int = 1
    star_kind: str = IDENTITY

    def __post_init__(self):
        if not _is_prime(self.p):
            raise BadParameter(f"{self.p} is not prime")
        if self.k < 1:
            raise BadParameter("k must be at least 1")
        if self.star_kind == FROBENIUS_HALF:
            if self.k % 2:
                raise BadParameter("the half Frobenius needs an even extension degree")
        elif self.star_kind != IDENTITY:
            raise BadParameter(f"unsupported star {self.star_kind!r} for GaloisField")

    @property
    def modulus(self) -> tuple[int, ...]:
        return _find_modulus(self.p, self.k)

    @property
    def order(self) -> int:
        return self.p ** self.k

    @property
    def gen(self) -> Scalar:
        if self.k == 1:
            return Scalar(self, (_primitive_root(self.p),))
        return Scalar(self, tuple(1 if i == 1 else 0 for i in range(self.k)))

    def from_fraction(self, q):
        den = q.denominator % self.p
        if den == 0:
            raise DivisionByZero(f"denominator of {q} vanishes mod {self.p}")
        val = (q.numerator * pow(den, self.p - 2, self.p)) % self.p
        return Scalar(self, (val,) + (0,) * (self.k - 1))

    def add(self, a, b):
        return Scalar(self, tuple((x + y) % self.p for x, y in zip(a.payload, b.payload)))

    def neg(self, a):
        return Scalar(self, tuple((-x) % self.p for x in a.payload))

    def mul(self, a, b):
        return Scalar(self, _poly_mul_mod(a.payload, b.payload, self.modulus, self.p))

    def inv(self, a):
        if self.is_zero(a):
            raise DivisionByZero(f"1/0 in {self}")
        return Scalar(self, _poly_pow_mod(a.payload, self.order - 2, self.modulus, self.p))

    def star(self, a):
        if self.star_kind == IDENTITY:
            return a
        return Scalar(self, _poly_pow_mod(a.payload, self.p ** (self.k // 2), self.modulus, self.p))

    def format(self, a):
        if self.k == 1:
            return str(a.payload[0])
        parts = []
        for i in reversed(range(self.k)):
            c = a.payload[i]
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                gpow = "g" if i == 1 else f"g^{i}"
                parts.append(gpow if c == 1 else f"{c}*{gpow}")
        return "+".join(parts) if parts else "0"

    def symbols(self):
        return {"g": self.gen}

    def sample(self, rng):
        return Scalar(self, tuple(rng.randrange(self.p) for _ in range(self.k)))

    def generators(self):
        return [self.zero, self.one, self.gen, self.gen + self.one]

    def elements(self) -> Iterable[Scalar]:
        for combo in itertools.product(range(self.p), repeat=self.k):
            yield Scalar(self, combo)

    def __str__(self):
        return f"GF({self.p})" if self.k == 1 else f"GF({self.p}^{self.k})"


# -- rational functions over Q in one infinitesimal ----------------------------


def _ipoly_trim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _ipoly_add(a, b):
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return _ipoly_trim(out)


def _ipoly_mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _ipoly_trim(out)


def _ipoly_content(a) -> int:
    g = 0
    for x in a:
        g = gcd(g, abs(x))
    return g or 1


def _qpoly_divmod(a: list[Fraction], b: list[Fraction]):
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    r = list(a)
    while r and len(r) >= len(b):
        if r[-1] == 0:
            r.pop()
            continue
        shift = len(r) - len(b)
        coeff = r[-1] / b[-1]
        q[shift] = coeff
        for i, bx in enumerate(b):
            r[shift + i] -= coeff * bx
        r.pop()
    while r and r[-1] == 0:
        r.pop()
    return q, r


def _ipoly_gcd(a, b) -> tuple[int, ...]:
    """Primitive gcd of two integer polynomials via monic Euclid over Q."""
    fa = [Fraction(x) for x in a]
    fb = [Fraction(x) for x in b]
    while fb:
        _, r = _qpoly_divmod(fa, fb)
        fa, fb = fb, r
    if not fa:
        return ()
    from math import lcm

    denom = 1
    for c in fa:
        denom = lcm(denom, c.denominator)
    ints = [int(c * denom) for c in fa]
    cont = _ipoly_content(ints)
    ints = [x // cont for x in ints]
    if ints[-1] < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def _ratfunc_canon(num, den) -> tuple[tuple[int, ...], tuple[int, ...]]:
    num = _ipoly_trim(list(num))
    den = _ipoly_trim(list(den))
    if not den:
        raise DivisionByZero("zero denominator in a rational function")
    if not num:
        return (), (1,)
    # strip the shared power of e, then constants need no polynomial gcd
    shift = min(_low_index(num), _low_index(den))
    if shift:
        num = num[shift:]
        den = den[shift:]
    if len(num) == 1 or len(den) == 1:
        g: tuple[int, ...] = (1,)
    else:
        g = _ipoly_gcd(num, den)
    if len(g) > 1:
        fg = [Fraction(x) for x in g]
        qn, _ = _qpoly_divmod([Fraction(x) for x in num], fg)
        qd, _ = _qpoly_divmod([Fraction(x) for x in den], fg)
        from math import lcm

        scale = 1
        for c in qn + qd:
            scale = lcm(scale, c.denominator)
        num = _ipoly_trim([int(c * scale) for c in qn])
        den = _ipoly_trim([int(c * scale) for c in qd])
    cont = gcd(_ipoly_content(num), _ipoly_content(den))
    num = tuple(x // cont for x in num)
    den = tuple(x // cont for x in den)
    if den[-1] < 0:
        num = tuple(-x for x in num)
        den = tuple(-x for x in den)
    return num, den


def _low_index(poly) -> int:
    for i, c in enumerate(poly):
        if c:
            return i
    return 0


@dataclass(frozen=True)
class RatFunc(Field):
    """Rational functions in the infinitesimal ``e``, ordered at 0+.

    Payload: a pair of coprime integer-coefficient polynomials (num, den),
    little endian, with a positive leading denominator coefficient; the zero
    element is ((), (1,)).  The sign of a value is its sign for sufficiently
    small positive e, i.e. the sign carried by the lowest-order coefficients.
    """

    @property
    def ordered(self):
        return True

    @property
    def eps(self) -> Scalar:
        return Scalar(self, ((0, 1), (1,)))

    def from_fraction(self, q):
        if q == 0:
            return Scalar(self, ((), (1,)))
        return Scalar(self, _ratfunc_canon((q.numerator,), (q.denominator,)))

    def add(self, a, b):
        (n1, d1), (n2, d2) = a.payload, b.payload
        return Scalar(self, _ratfunc_canon(_ipoly_add(_ipoly_mul(n1, d2), _ipoly_mul(n2, d1)),
                                           _ipoly_mul(d1, d2)))

    def neg(self, a):
        n, d = a.payload
        return Scalar(self, (tuple(-x for x in n), d))

    def mul(self, a, b):
        (n1, d1), (n2, d2) = a.payload, b.payload
        return Scalar(self, _ratfunc_canon(_ipoly_mul(n1, n2), _ipoly_mul(d1, d2)))

    def inv(self, a):
        n, d = a.payload
        if not n:
            raise DivisionByZero("1/0 in the rational function field")
        return Scalar(self, _ratfunc_canon(d, n))

    def sign(self, a):
        n, d = a.payload
        if not n:
            return 0
        return (1 if n[_low_index(n)] > 0 else -1) * (1 if d[_low_index(d)] > 0 else -1)

    def order_at_zero(self, a: Scalar) -> int | None:
        """The e-adic order: None for 0, else low degree of num minus den."""
        n, d = a.payload
        if not n:
            return None
        return _low_index(n) - _low_index(d)

    def format(self, a):
        n, d = a.payload

        def poly_str(poly):
            if not poly:
                return "0"
            parts = []
            for i in reversed(range(len(poly))):
                c = poly[i]
                if not c:
                    continue
                if i == 0:
                    parts.append(f"{c:+d}")
                else:
                    e = "e" if i == 1 else f"e^{i}"
                    parts.append(f"+{e}" if c == 1 else f"-{e}" if c == -1 else f"{c:+d}*{e}")
            s = "".join(parts)
            return s[1:] if s.startswith("+") else s

        ns = poly_str(n)
        if d == (1,):
            return ns
        ds = poly_str(d)
        if sum(1 for c in n if c) > 1 or (n and n[_low_index(n)] < 0):
            ns = f"({ns})"
        if sum(1 for c in d if c) > 1:
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def symbols(self):
        return {"e": self.eps}

    def sample(self, rng, max_degree: int = 2):
        num = [rng.randint(-5, 5) for _ in range(rng.randint(1, max_degree + 1))]
        den = [rng.randint(-5, 5) for _ in range(rng.randint(1, max_degree + 1))]
        if not any(den):
            den[0] = 1
        return Scalar(self, _ratfunc_canon(num, den))

    def generators(self):
        e = self.eps
        one = self.one
        return [self.zero, one, -one, e, one + e, one / (one - e), one / e, self.coerce(Fraction(2, 3)) * e]

    def __str__(self):
        return "Q(e)"


# -- ordered-field element classification ---------------------------------------


def classify_element(a: Scalar) -> str:
    """Finite/medial/infinitesimal/infinite per the order; 0 counts as
    infinitesimal.  Archimedean kinds have no nonzero infinitesimals."""
    field = a.field
    if not field.ordered:
        raise Unordered(f"{field} carries no order")
    if isinstance(field, RatFunc):
        order = field.order_at_zero(a)
        if order is None or order > 0:
            return FINITE_INFINITESIMAL
        return FINITE_MEDIAL if order == 0 else INFINITE
    return FINITE_INFINITESIMAL if not a else FINITE_MEDIAL


# -- places ----------------------------------------------------------------------


class Place:
    """A ring homomorphism from the valuation ring F_K of the source field
    onto (an embedding in) the target field, with kernel the maximal ideal."""

    source: Field
    target: Field

    def contains(self, a: Scalar) -> bool:
        """Membership in the valuation ring F_K."""
        raise NotImplementedError

    def in_ideal(self, a: Scalar) -> bool:
        """Membership in the maximal ideal I_K."""
        raise NotImplementedError

    def is_unit(self, a: Scalar) -> bool:
        return self.contains(a) and not self.in_ideal(a)

    def apply(self, a: Scalar) -> Scalar:
        raise NotImplementedError

    def valuation(self, a: Scalar) -> int | None:
        """Integer valuation when the place has a uniformiser, else None."""
        return None

    def uniformizer(self) -> Scalar | None:
        return None

    def ring_samples(self, rng, count: int) -> list[Scalar]:
        """Random elements of F_K for sampled checks."""
        raise NotImplementedError


@dataclass(frozen=True)
class RatFuncLimitPlace(Place):
    """Q(e) -> Q by evaluating at e = 0; F_K is the ring of finite elements."""

    source: RatFunc = RatFunc()
    target: Rationals = Rationals()

    def contains(self, a):
        order = self.source.order_at_zero(a)
        return order is None or order >= 0

    def in_ideal(self, a):
        order = self.source.order_at_zero(a)
        return order is None or order > 0

    def valuation(self, a):
        return self.source.order_at_zero(a)

    def uniformizer(self):
        return self.source.eps

    def apply(self, a):
        if not self.contains(a):
            raise NotInValuationRing(f"{a!r} is infinite; cannot evaluate at 0")
        n, d = a.payload
        if not n:
            return self.target.zero
        if _low_index(n) > _low_index(d):
            return self.target.zero
        low = _low_index(d)
        return self.target.coerce(Fraction(n[low], d[low]))

    def ring_samples(self, rng, count):
        out = []
        field = self.source
        while len(out) < count:
            a = field.sample(rng)
            if self.contains(a):
                out.append(a)
        return out


@dataclass(frozen=True)
class PAdicPlace(Place):
    """Q -> GF(p): reduction of fractions whose denominator is prime to p."""

    p: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise BadParameter(f"{self.p} is not prime")

    @property
    def source(self):
        return Rationals()

    @property
    def target(self):
        return GaloisField(self.p)

    def _val(self, q: Fraction) -> int | None:
        if q == 0:
            return None
        v = 0
        num, den = q.numerator, q.denominator
        while num % self.p == 0:
            num //= self.p
            v += 1
        while den % self.p == 0:
            den //= self.p
            v -= 1
        return v

    def contains(self, a):
        v = self._val(a.payload)
        return v is None or v >= 0

    def in_ideal(self, a):
        v = self._val(a.payload)
        return v is None or v > 0

    def valuation(self, a):
        return self._val(a.payload)

    def uniformizer(self):
        return self.source.coerce(self.p)

    def apply(self, a):
        if not self.contains(a):
            raise NotInValuationRing(f"{a!r} has a denominator divisible by {self.p}")
        return self.target.from_fraction(a.payload)

    def ring_samples(self, rng, count):
        out = []
        field = self.source
        while len(out) < count:
            a = field.sample(rng)
            if self.contains(a):
                out.append(a)
        return out


@dataclass(frozen=True)
class IdentityPlace(Place):
    """The trivial place of any field: F_K = K, I_K = {0}."""

    field: Field

    @property
    def source(self):
        return self.field

    @property
    def target(self):
        return self.field

    def contains(self, a):
        return True

    def in_ideal(self, a):
        return not a

    def valuation(self, a):
        return None if not a else 0

    def apply(self, a):
        return a

    def ring_samples(self, rng, count):
        return [self.field.sample(rng) for _ in range(count)]


def common_scale(place: Place, coeffs: Sequence[Scalar]) -> Scalar:
    """An alpha with every alpha**-1 * c in F_K and at least one a unit.

    With a uniformiser u the result is exactly u**(minimal valuation); for
    other places it is a coefficient of minimal valuation, determined by the
    valuation-ring law.
    """
    nonzero = [c for c in coeffs if c]
    if not nonzero:
        raise AllZero("common_scale needs at least one nonzero coefficient")
    u = place.uniformizer()
    if u is not None:
        low = min(place.valuation(c) for c in nonzero)
        return u ** low
    if isinstance(place, IdentityPlace):
        return place.field.one
    best = nonzero[0]
    for c in nonzero[1:]:
        if not place.contains(c / best):
            best = c
    alpha = best
    inv = place.source.inv(alpha)
    assert all(place.contains(inv * c) for c in nonzero)
    assert any(place.is_unit(inv * c) for c in nonzero)
    return alpha


def star_compatibility_check(place: Place, samples: int = 50, rng=None,
                             star_src=None, star_dst=None) -> bool:
    """Whether F_K and I_K are closed under the star and the place commutes
    with it.  Custom star maps can be injected to probe broken doubles."""
    import random

    rng = rng or random.Random(0)
    star_src = star_src or place.source.star
    star_dst = star_dst or place.target.star
    pool = list(place.source.generators())
    pool += [place.source.sample(rng) for _ in range(samples)]
    pool += place.ring_samples(rng, samples)
    for a in pool:
        sa = star_src(a)
        if place.contains(a) != place.contains(sa):
            return False
        if place.contains(a):
            if place.in_ideal(a) != place.in_ideal(sa):
                return False
            if place.apply(sa) != star_dst(place.apply(a)):
                return False
    return True


def parse_field(text: str) -> Field:
    """Field descriptors: ``rationals``, ``quadext:d[:conj]``,
    ``gf:p[:k[:frob]]``, ``ratfunc``."""
    parts = text.strip().lower().split(":")
    kind = parts[0]
    if kind in ("rationals", "q"):
        return Rationals()
    if kind == "ratfunc":
        return RatFunc()
    if kind == "quadext":
        if len(parts) < 2:
            raise BadParameter("quadext needs a discriminant, e.g. quadext:2")
        star = CONJUGATION if len(parts) > 2 and parts[2] in ("conj", "conjugation") else IDENTITY
        return QuadExt(int(parts[1]), star)
    if kind == "gf":
        if len(parts) < 2:
            raise BadParameter("gf needs a prime, e.g. gf:5")
        p = int(parts[1])
        k = int(parts[2]) if len(parts) > 2 else 1
        star = FROBENIUS_HALF if len(parts) > 3 and parts[3] in ("frob", "frobenius") else IDENTITY
        return GaloisField(p, k, star)
    raise BadParameter(f"unknown field descriptor {text!r}")

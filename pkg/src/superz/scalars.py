"""Exact scalars: rationals and rational functions in one indeterminate.

Rationals are plain :class:`fractions.Fraction` values.  Rational functions
in the parameter ``a`` (the alpha of D(2,1;alpha)) are :class:`RatFunc`
instances kept in canonical form: monic denominator, coprime numerator and
denominator.  Any arithmetic result that turns out constant is demoted back
to a ``Fraction`` so pure-rational code paths never pay for polynomials.
"""

from __future__ import annotations

import re
from fractions import Fraction as Q
from typing import Union

Poly = tuple  # coefficients low -> high, trailing zeros stripped; () is zero

VAR = "a"


class PoleError(ZeroDivisionError):
    """Evaluation of a rational function at a root of its denominator."""


def _trim(c) -> Poly:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return _trim((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n))


def poly_neg(p: Poly) -> Poly:
    return tuple(-c for c in p)


def poly_sub(p: Poly, q: Poly) -> Poly:
    return poly_add(p, poly_neg(q))


def poly_mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [Q(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _trim(out)


def poly_scale(p: Poly, c) -> Poly:
    return _trim(c * x for x in p)


def poly_divmod(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    quo = [Q(0)] * max(len(p) - len(q) + 1, 0)
    lead = q[-1]
    while len(r) >= len(q) and r:
        shift = len(r) - len(q)
        c = Q(r[-1]) / lead
        quo[shift] = c
        for i, b in enumerate(q):
            r[shift + i] -= c * b
        r = list(_trim(r))
    return _trim(quo), _trim(r)


def poly_monic(p: Poly) -> Poly:
    if not p:
        return p
    lead = Q(p[-1])
    return tuple(Q(c) / lead for c in p)


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm over Q."""
    while q:
        p, q = q, poly_divmod(p, q)[1]
    return poly_monic(p)


def poly_eval(p: Poly, x):
    y = Q(0)
    for c in reversed(p):
        y = y * x + c
    return y


def poly_str(p: Poly, var: str = VAR) -> str:
    if not p:
        return "0"
    parts = []
    for k in range(len(p) - 1, -1, -1):
        c = Q(p[k])
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


class RatFunc:
    """An element of Q(a) in lowest terms with monic denominator.

    Use :func:`ratfunc` (or arithmetic on :data:`ALPHA`) rather than the
    constructor when the result may be constant; the constructor always
    returns a ``RatFunc``.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly = (Q(1),)):
        num, den = _trim(Q(c) for c in num), _trim(Q(c) for c in den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        g = poly_gcd(num, den) if num else (Q(1),)
        num = poly_divmod(num, g)[0]
        den = poly_divmod(den, g)[0]
        lead = den[-1]
        if not num:
            den = (Q(1),)
        self.num = poly_scale(num, 1 / lead) if lead != 1 else num
        self.den = poly_scale(den, 1 / lead) if lead != 1 else den

    # canonical-form helpers -------------------------------------------------
    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def constant(self) -> Q:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num[0] if self.num else Q(0)

    def normalized(self) -> "RatFunc":
        return RatFunc(self.num, self.den)

    # arithmetic -------------------------------------------------------------
    @staticmethod
    def _lift(x) -> "RatFunc | None":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, (int, Q)):
            return RatFunc((Q(x),))
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return _demote(RatFunc(
            poly_add(poly_mul(self.num, o.den), poly_mul(o.num, self.den)),
            poly_mul(self.den, o.den)))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(poly_neg(self.num), self.den)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return _demote(RatFunc(poly_mul(self.num, o.num), poly_mul(self.den, o.den)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise ZeroDivisionError("division by zero rational function")
        return _demote(RatFunc(poly_mul(self.num, o.den), poly_mul(self.den, o.num)))

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if n < 0:
            return 1 / (self ** -n)
        out: Scalar = Q(1)
        for _ in range(n):
            out = self * out
        return out

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant())
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def __repr__(self):
        return f"RatFunc({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


Scalar = Union[Q, RatFunc]

ALPHA = RatFunc((Q(0), Q(1)))


def _demote(r: RatFunc) -> Scalar:
    return r.constant() if r.is_constant() else r


def ratfunc(num, den=(1,)) -> Scalar:
    """Build a canonical scalar from coefficient sequences (low -> high)."""
    return _demote(RatFunc(num, den))


def is_zero(x) -> bool:
    return not x


def is_symbolic(x) -> bool:
    return isinstance(x, RatFunc)


def div(a, b) -> Scalar:
    """Exact division; division by zero raises ``ZeroDivisionError``."""
    if not b:
        raise ZeroDivisionError(f"division of {format_scalar(a)} by zero")
    if isinstance(a, int) and isinstance(b, int):
        return Q(a, b)
    if isinstance(a, (int, Q)) and isinstance(b, (int, Q)):
        return Q(a) / Q(b)
    if isinstance(a, RatFunc) or isinstance(b, RatFunc):
        return RatFunc._lift(a) / b if isinstance(b, RatFunc) else a / b
    return (Q(a) if isinstance(a, int) else a) / b


def eval_at(f, a) -> Q:
    """Evaluate ``f`` at the rational ``a``; poles raise :class:`PoleError`."""
    if not isinstance(f, RatFunc):
        return Q(f)
    d = poly_eval(f.den, Q(a))
    if d == 0:
        raise PoleError(f"pole at {VAR}={a}: denominator {poly_str(f.den)} vanishes")
    return poly_eval(f.num, Q(a)) / d


def format_scalar(x) -> str:
    if isinstance(x, RatFunc):
        n, d = poly_str(x.num), poly_str(x.den)
        if d == "1":
            return n
        if len([c for c in x.num if c]) > 1:
            n = f"({n})"
        if len([c for c in x.den if c]) > 1 or len(x.den) > 1 and x.den[-1] != 1:
            d = f"({d})"
        return f"{n}/{d}"
    return str(Q(x))


_TOKEN = re.compile(r"\s*(?:(\d+)|(alpha|α|a)|(.))")


def parse_scalar(text: str) -> Scalar:
    """Parse ``p/q`` rationals and rational expressions in ``a``.

    Grammar: ``+ - * / ^``, parentheses, non-negative integer literals and
    the variable ``a`` (``alpha`` and ``α`` are accepted as synonyms).
    Every string produced by :func:`format_scalar` parses back to itself.
    """
    tokens = []
    for num, var, op in _TOKEN.findall(text.strip()):
        if num:
            tokens.append(("num", Q(int(num))))
        elif var:
            tokens.append(("num", ALPHA))
        elif op.strip():
            tokens.append(("op", op))
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None)

    def take(expected=None):
        nonlocal pos
        tok = peek()
        if expected is not None and tok != ("op", expected):
            raise ValueError(f"cannot parse scalar {text!r}: expected {expected!r}")
        pos += 1
        return tok

    def expr():
        val = term()
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            rhs = term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term():
        val = unary()
        while peek() in (("op", "*"), ("op", "/")):
            op = take()[1]
            rhs = unary()
            val = val * rhs if op == "*" else div(val, rhs)
        return val

    def unary():
        if peek() == ("op", "-"):
            take()
            return -unary()
        if peek() == ("op", "+"):
            take()
            return unary()
        return power()

    def power():
        base = atom()
        if peek() == ("op", "^"):
            take()
            kind, exp = take()
            if kind != "num" or isinstance(exp, RatFunc):
                raise ValueError(f"cannot parse scalar {text!r}: bad exponent")
            n = int(exp)
            out = Q(1)
            for _ in range(n):
                out = out * base
            return out
        return base

    def atom():
        kind, val = take()
        if kind == "num":
            return val
        if (kind, val) == ("op", "("):
            inner = expr()
            take(")")
            return inner
        raise ValueError(f"cannot parse scalar {text!r}")

    if not tokens:
        raise ValueError("empty scalar")
    out = expr()
    if pos != len(tokens):
        raise ValueError(f"cannot parse scalar {text!r}: trailing input")
    return out if isinstance(out, RatFunc) else Q(out)


def sign_at(x, sample=Q(1)) -> int:
    """Sign of ``x``, deciding symbolic values by evaluation at ``sample``."""
    v = eval_at(x, sample) if isinstance(x, RatFunc) else Q(x)
    return (v > 0) - (v < 0)


def abs_at(x, sample=Q(1)) -> Scalar:
    """Absolute value; for rational functions the sign is read at ``sample``."""
    return -x if sign_at(x, sample) < 0 else x


def _poly_xgcd(p: Poly, q: Poly) -> tuple:
    """(g, s, t) with s*p + t*q = g."""
    r0, r1 = p, q
    s0, s1, t0, t1 = (Q(1),), (), (), (Q(1),)
    while r1:
        quo, rem = poly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, poly_sub(s0, poly_mul(quo, s1))
        t0, t1 = t1, poly_sub(t0, poly_mul(quo, t1))
    return r0, s0, t0


class NumberField:
    """``Q[x]/(m)`` for an irreducible monic ``m`` (irreducibility is the
    caller's responsibility; a zero divisor raises on inversion)."""

    def __init__(self, minpoly: Poly, name: str = "t"):
        self.minpoly = poly_monic(_trim(Q(c) for c in minpoly))
        self.name = name

    @property
    def degree(self) -> int:
        return len(self.minpoly) - 1

    def gen(self) -> "AlgNum":
        return AlgNum(self, (Q(0), Q(1)))

    def __repr__(self):
        return f"NumberField({poly_str(self.minpoly, 'x')})"


class AlgNum:
    """An element of a :class:`NumberField`; constants demote to Fraction."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: NumberField, coeffs: Poly):
        self.field = field
        self.coeffs = poly_divmod(_trim(Q(c) for c in coeffs), field.minpoly)[1]

    def _lift(self, x):
        if isinstance(x, AlgNum):
            if x.field is not self.field:
                raise ValueError("mixing elements of different number fields")
            return x.coeffs
        if isinstance(x, (int, Q)):
            return _trim((Q(x),))
        return None

    def _make(self, c):
        out = AlgNum(self.field, c)
        if len(out.coeffs) <= 1:
            return out.coeffs[0] if out.coeffs else Q(0)
        return out

    def __add__(self, o):
        c = self._lift(o)
        return NotImplemented if c is None else self._make(poly_add(self.coeffs, c))

    __radd__ = __add__

    def __neg__(self):
        return self._make(poly_neg(self.coeffs))

    def __sub__(self, o):
        c = self._lift(o)
        return NotImplemented if c is None else self._make(poly_sub(self.coeffs, c))

    def __rsub__(self, o):
        c = self._lift(o)
        return NotImplemented if c is None else self._make(poly_sub(c, self.coeffs))

    def __mul__(self, o):
        c = self._lift(o)
        return NotImplemented if c is None else self._make(poly_mul(self.coeffs, c))

    __rmul__ = __mul__

    def inverse(self):
        g, s, _ = _poly_xgcd(self.coeffs, self.field.minpoly)
        if len(g) != 1:
            raise ZeroDivisionError("not invertible in this number field")
        return self._make(poly_scale(s, 1 / g[0]))

    def __truediv__(self, o):
        c = self._lift(o)
        if c is None:
            return NotImplemented
        if not c:
            raise ZeroDivisionError("division by zero")
        return self * (AlgNum(self.field, c).inverse() if len(c) > 1 else 1 / c[0])

    def __rtruediv__(self, o):
        c = self._lift(o)
        if c is None:
            return NotImplemented
        return self.inverse() * AlgNum(self.field, c) if c else Q(0)

    def __pow__(self, n: int):
        if n < 0:
            return (1 / self) ** -n
        out = Q(1)
        for _ in range(n):
            out = self * out
        return out

    def __eq__(self, o):
        c = self._lift(o)
        return NotImplemented if c is None else self.coeffs == c

    def __hash__(self):
        return hash((self.coeffs, self.field.minpoly))

    def __bool__(self):
        return bool(self.coeffs)

    def __str__(self):
        return f"[{poly_str(self.coeffs, self.field.name)}]"

    __repr__ = __str__

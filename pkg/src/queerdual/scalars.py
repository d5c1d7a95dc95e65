"""Exact arithmetic in the field Q(q) of rational functions of the deformation parameter.

Every structure constant in the engine lives here.  A value is a reduced pair of
integer-coefficient polynomials in q; arithmetic is exact, equality is structural
on the canonical form, and specialization at a rational point (q = 1 for the
classical limit) returns an exact ``Fraction``.

Polynomials are dense int tuples, index = power of q, trailing zeros stripped;
``()`` is the zero polynomial.
"""

from __future__ import annotations

import math
import random
import re
from fractions import Fraction


class PoleAtPoint(Exception):
    """Raised when a rational function is evaluated where its denominator vanishes."""


# ---------------------------------------------------------------------------
# integer-coefficient polynomial helpers
# ---------------------------------------------------------------------------

def _ptrim(c: list) -> tuple:
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    c = list(a)
    for i, x in enumerate(b):
        c[i] += x
    return _ptrim(c)


def _pneg(a):
    return tuple(-x for x in a)


def _psub(a, b):
    return _padd(a, _pneg(b))


def _pmul(a, b):
    if not a or not b:
        return ()
    c = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    c[i + j] += x * y
    return _ptrim(c)


def _pscale(a, s: int):
    if s == 0:
        return ()
    return tuple(x * s for x in a)


def _pcontent(a) -> int:
    g = 0
    for x in a:
        g = math.gcd(g, x)
        if g == 1:
            return 1
    return g


def _pprim(a):
    g = _pcontent(a)
    if g <= 1:
        return a
    return tuple(x // g for x in a)


def _ptrailing(a) -> int:
    for i, x in enumerate(a):
        if x:
            return i
    return 0


def _pshift(a, k: int):
    # multiply by q^k, k >= 0
    if not a or k == 0:
        return a
    return (0,) * k + tuple(a)


def _pdivexact(a, b):
    # exact polynomial division over Q, result must be integral after priming
    if not a:
        return ()
    q = [0] * (len(a) - len(b) + 1)
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    for i in range(len(a) - 1, db - 1, -1):
        if r[i]:
            if r[i] % lb:
                raise ArithmeticError("non-exact polynomial division")
            c = r[i] // lb
            q[i - db] = c
            for j in range(db + 1):
                r[i - db + j] -= c * b[j]
    if any(r):
        raise ArithmeticError("non-exact polynomial division")
    return _ptrim(q)


def _ppseudo_rem(a, b):
    # lc(b)^(deg a - deg b + 1) * a  mod  b, over Z
    da, db = len(a) - 1, len(b) - 1
    lb = b[-1]
    r = list(a)
    for i in range(da, db - 1, -1):
        lead = r[i]
        if lead:
            for j in range(len(r)):
                r[j] *= lb
            for j in range(db + 1):
                r[i - db + j] -= lead * b[j]
            r[i] = 0
    return _ptrim(r)


def _pgcd(a, b):
    """Primitive-PRS gcd of integer polynomials, primitive with positive lead."""
    if not a:
        g = _pprim(b)
    elif not b:
        g = _pprim(a)
    else:
        # strip common power of q first; cheap and very common here
        ta, tb = _ptrailing(a), _ptrailing(b)
        t = min(ta, tb)
        a, b = _pprim(a[ta:]), _pprim(b[tb:])
        while b:
            r = _ppseudo_rem(a, b)
            a, b = b, _pprim(r)
        g = _pshift(a, t)
    if g and g[-1] < 0:
        g = _pneg(g)
    return g


def _peval(a, c: Fraction) -> Fraction:
    v = Fraction(0)
    for x in reversed(a):
        v = v * c + x
    return v


def _psqrt(a):
    """Exact square root of an integer polynomial, or None."""
    if not a:
        return ()
    if (len(a) - 1) % 2 or a[-1] < 0:
        return None
    t = _ptrailing(a)
    if t % 2:
        return None
    a = a[t:]
    ls = math.isqrt(a[-1])
    if ls * ls != a[-1]:
        return None
    n = (len(a) - 1) // 2
    r = [0] * (n + 1)
    r[n] = ls
    rem = list(a)
    for i in range(n - 1, -1, -1):
        # coefficient of q^(i+n) in r^2 is 2*r[i]*r[n] plus cross terms
        acc = 0
        for j in range(i + 1, n):
            k = i + n - j
            if 0 <= k <= n:
                acc += r[j] * r[k]
        diff = rem[i + n] - acc
        if diff % (2 * ls):
            return None
        r[i] = diff // (2 * ls)
    if _pmul(tuple(r), tuple(r)) != tuple(a):
        return None
    return _pshift(_ptrim(r), t // 2)


# ---------------------------------------------------------------------------
# the field element
# ---------------------------------------------------------------------------

class RatFunc:
    """A rational function of q with integer-coefficient numerator and denominator.

    Canonical reduced form: gcd(num, den) = 1, gcd of the two contents = 1, and
    the denominator's leading coefficient is positive.  Equality and hashing are
    structural on that form.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=(1,), _reduced=False):
        if isinstance(num, int):
            num = (num,) if num else ()
        if isinstance(den, int):
            den = (den,) if den else ()
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not _reduced:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_fraction(x: Fraction) -> "RatFunc":
        return RatFunc((x.numerator,) if x.numerator else (), (x.denominator,), _reduced=True)

    @staticmethod
    def q_power(k: int) -> "RatFunc":
        if k >= 0:
            return RatFunc(_pshift((1,), k), (1,), _reduced=True)
        return RatFunc((1,), _pshift((1,), -k), _reduced=True)

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == (1,) and self.den == (1,)

    def __bool__(self) -> bool:
        return bool(self.num)

    def degree_size(self) -> int:
        """Pivot-choice measure: total degree of the reduced pair."""
        return max(len(self.num) - 1, 0) + max(len(self.den) - 1, 0)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.num:
            return other
        if not other.num:
            return self
        if self.den == other.den:
            return RatFunc(_padd(self.num, other.num), self.den)
        return RatFunc(
            _padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
            _pmul(self.den, other.den),
        )

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(_pneg(self.num), self.den, _reduced=True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.num or not other.num:
            return ZERO
        # cross-cancel before multiplying to keep intermediates small
        g1 = _pgcd(self.num, other.den)
        g2 = _pgcd(other.num, self.den)
        n1 = self.num if g1 == (1,) else _pdivexact(self.num, g1)
        d2 = other.den if g1 == (1,) else _pdivexact(other.den, g1)
        n2 = other.num if g2 == (1,) else _pdivexact(other.num, g2)
        d1 = self.den if g2 == (1,) else _pdivexact(self.den, g2)
        num, den = _pmul(n1, n2), _pmul(d1, d2)
        if den[-1] < 0:
            num, den = _pneg(num), _pneg(den)
        cn, cd = _pcontent(num), _pcontent(den)
        g = math.gcd(cn, cd)
        if g > 1:
            num = tuple(x // g for x in num)
            den = tuple(x // g for x in den)
        return RatFunc(num, den, _reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        num, den = self.den, self.num
        if den[-1] < 0:
            num, den = _pneg(num), _pneg(den)
        return RatFunc(num, den, _reduced=True)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    # -- structure ------------------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def subs_qinv(self) -> "RatFunc":
        """Substitute q -> q^{-1} (a field automorphism of Q(q))."""
        dn, dd = max(len(self.num) - 1, 0), max(len(self.den) - 1, 0)
        num = tuple(reversed(self.num))
        den = tuple(reversed(self.den))
        if dd >= dn:
            num = _pshift(num, dd - dn)
        else:
            den = _pshift(den, dn - dd)
        return RatFunc(num, den)

    def specialize(self, c) -> Fraction:
        """Exact value at q = c; raises PoleAtPoint when the denominator vanishes."""
        c = Fraction(c)
        d = _peval(self.den, c)
        if d == 0:
            raise PoleAtPoint(f"denominator vanishes at q = {c}")
        return _peval(self.num, c) / d

    def sqrt(self):
        """An exact square root in Q(q) if one exists, else None."""
        if not self.num:
            return ZERO
        num, den = self.num, self.den
        if num[-1] < 0:
            return None
        rn, rd = _psqrt(num), _psqrt(den)
        if rn is None or rd is None:
            return None
        return RatFunc(rn, rd)

    # -- text form -------------------------------------------------------------

    def __repr__(self):
        return f"RatFunc({self.to_string()!r})"

    def __str__(self):
        return self.to_string()

    def to_string(self) -> str:
        """Serialize as "(<numerator>)/(<denominator>)", descending powers of q."""
        return f"({_pformat(self.num)})/({_pformat(self.den)})"

    @staticmethod
    def from_string(s: str) -> "RatFunc":
        m = re.fullmatch(r"\((.*)\)/\((.*)\)", s.strip())
        if not m:
            raise ValueError(f"not a serialized rational function: {s!r}")
        return RatFunc(_pparse(m.group(1)), _pparse(m.group(2)))


def _coerce(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, int):
        return RatFunc((x,) if x else (), (1,), _reduced=True)
    if isinstance(x, Fraction):
        return RatFunc.from_fraction(x)
    return NotImplemented


def _reduce(num, den):
    num, den = _ptrim(list(num)), _ptrim(list(den))
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return (), (1,)
    g = _pgcd(num, den)
    if g != (1,):
        num, den = _pdivexact(num, g), _pdivexact(den, g)
    if den[-1] < 0:
        num, den = _pneg(num), _pneg(den)
    cn, cd = _pcontent(num), _pcontent(den)
    g = math.gcd(cn, cd)
    if g > 1:
        num = tuple(x // g for x in num)
        den = tuple(x // g for x in den)
    return num, den


def _pformat(p) -> str:
    if not p:
        return "0"
    parts = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if not c:
            continue
        if k == 0:
            body = str(abs(c))
        else:
            v = "q" if k == 1 else f"q^{k}"
            body = v if abs(c) == 1 else f"{abs(c)}*{v}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(parts)


_TERM = re.compile(r"^\s*(?P<coef>\d+)?\s*(?:\*\s*)?(?P<var>q(?:\^(?P<pow>\d+))?)?\s*$")


def _pparse(s: str):
    s = s.strip()
    if s == "0":
        return ()
    chunks = re.split(r"(?=[+-])", s.replace(" ", ""))
    coeffs: dict[int, int] = {}
    for chunk in chunks:
        if not chunk:
            continue
        sign = 1
        if chunk[0] == "+":
            chunk = chunk[1:]
        elif chunk[0] == "-":
            sign = -1
            chunk = chunk[1:]
        m = _TERM.match(chunk)
        if not m or (m.group("coef") is None and m.group("var") is None):
            raise ValueError(f"bad polynomial term: {chunk!r}")
        c = int(m.group("coef") or 1)
        if m.group("var") is None:
            k = 0
        else:
            k = int(m.group("pow") or 1)
        coeffs[k] = coeffs.get(k, 0) + sign * c
    out = [0] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        out[k] = c
    return _ptrim(out)


# ---------------------------------------------------------------------------
# distinguished elements and q-combinatorics
# ---------------------------------------------------------------------------

ZERO = RatFunc((), (1,), _reduced=True)
ONE = RatFunc((1,), (1,), _reduced=True)
Q = RatFunc((0, 1), (1,), _reduced=True)
QINV = RatFunc((1,), (0, 1), _reduced=True)
XI = Q - QINV  # q - q^{-1}


def q_number(j: int, factorial: bool = False) -> RatFunc:
    """The q-integer [j] = (q^j - q^{-j})/(q - q^{-1}); with the flag, [j]! = [1][2]...[j]."""
    if j < 0:
        raise ValueError("q_number needs j >= 0")
    if not factorial:
        # [j] = (q^{2j-2} + q^{2j-4} + ... + 1) / q^{j-1}
        if j == 0:
            return ZERO
        num = tuple(1 if k % 2 == 0 else 0 for k in range(2 * j - 1))
        return RatFunc(num, _pshift((1,), j - 1), _reduced=True)
    out = ONE
    for t in range(1, j + 1):
        out = out * q_number(t)
    return out


def specialize(f: RatFunc, c) -> Fraction:
    return f.specialize(c)


def probable_match_bound(f: RatFunc, g: RatFunc, trials: int, pool: int = 10**6) -> Fraction:
    """Upper bound on P[all trials agree] for f != g, from degree bounds.

    A nonzero difference has at most deg(num) + deg(den) roots among the
    sampled pool of distinct rationals.
    """
    diff = f - g
    roots = max(len(diff.num) - 1, 0) + max(len(diff.den) - 1, 0)
    per = Fraction(min(roots, pool), pool)
    return per**trials


def probably_equal(f: RatFunc, g: RatFunc, trials: int = 5, seed: int = 0) -> bool:
    """Seed-deterministic identity test at random rational points (poles resampled)."""
    if trials < 1:
        raise ValueError("trials >= 1 required")
    rng = random.Random(seed)
    done = 0
    while done < trials:
        c = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 1000))
        try:
            if f.specialize(c) != g.specialize(c):
                return False
        except PoleAtPoint:
            continue
        done += 1
    return True

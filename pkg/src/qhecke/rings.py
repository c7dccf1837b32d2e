"""Exact coefficient rings for q-series.

Four rings are supported, each as a module-level singleton tag:

* ``ZZ``    -- arbitrary-precision integers (plain ``int``)
* ``QQ``    -- rationals (``fractions.Fraction``, ints allowed as a fast path)
* ``QQI``   -- Gaussian rationals a + b*i
* ``ZPOLY`` -- Laurent polynomials in z with rational coefficients

Everything is exact; no floats appear anywhere.  Elements are ordinary
Python objects supporting ``+ - *`` so series code and the compiled
kernels stay ring-agnostic.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NonUnitError


class GaussianRational:
    """Exact Gaussian rational a + b*i with Fraction (or int) parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re
        self.im = im

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((Fraction(self.re), Fraction(self.im)))

    def __add__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        if isinstance(other, (GaussianRational, int, Fraction)):
            return self + (-other if isinstance(other, GaussianRational)
                           else GaussianRational(-other, 0))
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self):
        norm = self.re * self.re + self.im * self.im
        if norm == 0:
            raise NonUnitError("0 has no inverse in Q(i)")
        ninv = Fraction(1) / norm
        return GaussianRational(self.re * ninv, -self.im * ninv)

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = GaussianRational(1, 0)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        sign = "+" if self.im >= 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}*i"


I = GaussianRational(0, 1)


class ZPoly:
    """Laurent polynomial in z: finitely supported map z-exponent -> rational.

    Zero coefficients are never stored.  Values may be ints or Fractions
    (exact either way).
    """

    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        # Caller must not pass zero values; use from_dict to normalize.
        self.c = coeffs or {}

    @classmethod
    def from_dict(cls, d):
        return cls({k: v for k, v in d.items() if v != 0})

    @classmethod
    def const(cls, v):
        return cls({0: v} if v != 0 else {})

    @classmethod
    def monomial(cls, v, k):
        return cls({k: v} if v != 0 else {})

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if isinstance(other, ZPoly):
            return self.c == other.c
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.c
            return self.c == {0: other}
        return NotImplemented

    def __hash__(self):
        return hash(frozenset((k, Fraction(v)) for k, v in self.c.items()))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ZPoly.const(other)
        if not isinstance(other, ZPoly):
            return NotImplemented
        out = dict(self.c)
        for k, v in other.c.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return ZPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return ZPoly({k: -v for k, v in self.c.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ZPoly.const(other)
        if not isinstance(other, ZPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return ZPoly({})
            return ZPoly({k: v * other for k, v in self.c.items()})
        if not isinstance(other, ZPoly):
            return NotImplemented
        out = {}
        for k1, v1 in self.c.items():
            for k2, v2 in other.c.items():
                k = k1 + k2
                s = out.get(k, 0) + v1 * v2
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return ZPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = ZPoly.const(1)
        base = self
        if k < 0:
            base = ZPOLY.invert(self)
            k = -k
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def eval(self, z0):
        """Evaluate at an exact nonzero point (rational or Gaussian rational)."""
        if z0 == 0:
            raise ZeroDivisionError("cannot evaluate Laurent polynomial at z=0")
        if isinstance(z0, GaussianRational):
            out = GaussianRational(0, 0)
            for k, v in self.c.items():
                out = out + (z0 ** k) * v
            return out
        z0 = Fraction(z0)
        out = Fraction(0)
        for k, v in self.c.items():
            out += (z0 ** k) * v
        return out

    def at_one(self):
        """Substitution z -> 1 (sum of coefficients)."""
        return sum(self.c.values())

    def unit_part(self):
        """Return (coef, zdeg) if this is a single nonzero monomial, else None."""
        if len(self.c) == 1:
            (k, v), = self.c.items()
            return v, k
        return None

    def __repr__(self):
        return f"ZPoly({self.c!r})"

    def __str__(self):
        if not self.c:
            return "0"
        parts = []
        for k in sorted(self.c):
            v = self.c[k]
            vs = str(v)
            if k == 0:
                parts.append(vs)
            else:
                zs = "z" if k == 1 else f"z^{k}"
                parts.append(zs if v == 1 else f"-{zs}" if v == -1 else f"{vs}*{zs}")
        return " + ".join(parts).replace("+ -", "- ")


class CoeffRing:
    """A coefficient-ring capability tag; exactly four instances exist."""

    __slots__ = ("name", "zero", "one")

    def __init__(self, name, zero, one):
        self.name = name
        self.zero = zero
        self.one = one

    def __repr__(self):
        return self.name

    def from_int(self, n):
        raise NotImplementedError

    def invert(self, x):
        raise NotImplementedError

    def is_zero(self, x):
        return x == self.zero

    def coerce(self, x, src):
        """Convert element x of ring src into this ring, if a lift exists."""
        raise NotImplementedError

    def to_json(self, x):
        raise NotImplementedError


class _IntRing(CoeffRing):
    def from_int(self, n):
        return n

    def invert(self, x):
        if x == 1 or x == -1:
            return x
        raise NonUnitError(f"{x} is not a unit in ZZ")

    def coerce(self, x, src):
        if src is ZZ:
            return x
        raise RingCoercionError(src, self)

    def to_json(self, x):
        return str(x)


class _RatRing(CoeffRing):
    def from_int(self, n):
        return n

    def invert(self, x):
        if x == 0:
            raise NonUnitError("0 is not a unit in QQ")
        return Fraction(1) / x

    def coerce(self, x, src):
        if src is ZZ or src is QQ:
            return x
        raise RingCoercionError(src, self)

    def to_json(self, x):
        return str(x)


class _GaussRing(CoeffRing):
    def from_int(self, n):
        return GaussianRational(n, 0)

    def invert(self, x):
        if isinstance(x, (int, Fraction)):
            x = GaussianRational(x, 0)
        return x.inverse()

    def is_zero(self, x):
        return x == 0

    def coerce(self, x, src):
        if src is ZZ or src is QQ:
            return GaussianRational(x, 0)
        if src is QQI:
            return x
        raise RingCoercionError(src, self)

    def to_json(self, x):
        return str(x)


class _ZPolyRing(CoeffRing):
    def from_int(self, n):
        return ZPoly.const(n)

    def invert(self, x):
        if isinstance(x, (int, Fraction)):
            x = ZPoly.const(x)
        unit = x.unit_part()
        if unit is None:
            raise NonUnitError(f"{x} is not a unit monomial in Q[z, 1/z]")
        v, k = unit
        return ZPoly.monomial(Fraction(1) / v, -k)

    def is_zero(self, x):
        return not x if isinstance(x, ZPoly) else x == 0

    def coerce(self, x, src):
        if src is ZZ or src is QQ:
            return ZPoly.const(x)
        if src is ZPOLY:
            return x
        raise RingCoercionError(src, self)

    def to_json(self, x):
        return {str(k): str(v) for k, v in sorted(x.c.items())}


class RingCoercionError(NonUnitError):
    def __init__(self, src, dst):
        super().__init__(f"no coercion from {src} to {dst}")


ZZ = _IntRing("ZZ", 0, 1)
QQ = _RatRing("QQ", 0, 1)
QQI = _GaussRing("QQi", GaussianRational(0, 0), GaussianRational(1, 0))
ZPOLY = _ZPolyRing("Zpoly", ZPoly({}), ZPoly({0: 1}))

RINGS = {r.name: r for r in (ZZ, QQ, QQI, ZPOLY)}

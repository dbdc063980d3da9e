"""Exact real algebraic scalars.

A :class:`NumberField` is Q[x]/(m(x)) together with a rational interval
isolating one real root theta of m.  An :class:`AlgebraicScalar` is the
reduced residue of a polynomial in theta; arithmetic is exact, and signs
are decided by refining the isolating interval.  Degree-one fields
degenerate to plain rational arithmetic.

Only one field is expected per computation: configuration supplies the
defining polynomial and the helpers below express the needed cosine
constants inside it.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from .errors import (
    AmbiguousRoot,
    DivisionByZero,
    FieldMismatch,
    FieldTooSmall,
    NoSignChange,
    NotInvertible,
    NotSquarefree,
    UnsupportedOrder,
)

Coeffs = tuple  # rational coefficients, lowest degree first, no trailing zeros


def _sgn(q) -> int:
    return (q > 0) - (q < 0)


def _trim(cs) -> Coeffs:
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _deg(p: Coeffs) -> int:
    return len(p) - 1  # -1 for the zero polynomial


def _padd(p: Coeffs, q: Coeffs) -> Coeffs:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return _trim(out)


def _pneg(p: Coeffs) -> Coeffs:
    return tuple(-c for c in p)


def _psub(p: Coeffs, q: Coeffs) -> Coeffs:
    return _padd(p, _pneg(q))


def _pmul(p: Coeffs, q: Coeffs) -> Coeffs:
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _trim(out)


def _pscale(p: Coeffs, s) -> Coeffs:
    if not s:
        return ()
    return tuple(c * s for c in p)


def _pdivmod(p: Coeffs, q: Coeffs):
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    quo = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    lead = q[-1]
    while len(r) >= len(q) and _trim(r):
        r = list(_trim(r))
        if len(r) < len(q):
            break
        k = len(r) - len(q)
        f = r[-1] / lead
        quo[k] = f
        for i, c in enumerate(q):
            r[k + i] -= f * c
        r.pop()
    return _trim(quo), _trim(r)


def _pmonic(p: Coeffs) -> Coeffs:
    return _pscale(p, 1 / p[-1]) if p else ()


def _pgcd(p: Coeffs, q: Coeffs) -> Coeffs:
    while q:
        p, q = q, _pdivmod(p, q)[1]
    return _pmonic(p)


def _pxgcd(p: Coeffs, q: Coeffs):
    """Monic g plus s, t with s*p + t*q = g."""
    r0, r1 = p, q
    s0, s1 = (Fraction(1),), ()
    t0, t1 = (), (Fraction(1),)
    while r1:
        quo, rem = _pdivmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _psub(s0, _pmul(quo, s1))
        t0, t1 = t1, _psub(t0, _pmul(quo, t1))
    if r0:
        lead = r0[-1]
        r0 = _pscale(r0, 1 / lead)
        s0 = _pscale(s0, 1 / lead)
        t0 = _pscale(t0, 1 / lead)
    return r0, s0, t0


def _pderiv(p: Coeffs) -> Coeffs:
    return _trim(tuple(i * c for i, c in enumerate(p) if i))


def _peval(p: Coeffs, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _ieval(p: Coeffs, lo, hi):
    """Evaluate p on the interval [lo, hi] by interval Horner."""
    alo = ahi = Fraction(0)
    for c in reversed(p):
        cands = (alo * lo, alo * hi, ahi * lo, ahi * hi)
        alo, ahi = min(cands) + c, max(cands) + c
    return alo, ahi


def _sturm_chain(p: Coeffs):
    chain = [p, _pderiv(p)]
    while chain[-1]:
        rem = _pdivmod(chain[-2], chain[-1])[1]
        chain.append(_pneg(rem))
    chain.pop()
    return chain


def _variations(chain, x) -> int:
    signs = [s for s in (_sgn(_peval(p, x)) for p in chain) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _sturm_count(chain, lo, hi) -> int:
    """Number of distinct real roots in (lo, hi]; endpoints must not be roots
    of the first chain entry for the open/half-open distinction to matter."""
    return _variations(chain, lo) - _variations(chain, hi)


def parse_fraction(text) -> Fraction:
    """Accept 'p/q' strings, plain integer strings, ints, and Fractions."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    return Fraction(str(text))


def fraction_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}" if q.denominator != 1 else str(q.numerator)


class NumberField:
    """Q[x]/(m(x)) with a designated real root isolated by a rational interval.

    The isolating interval is refined in place as sign decisions demand;
    refinement is guarded by a lock so scalars can be shared across threads.
    Everything else is immutable.
    """

    def __init__(self, min_poly: Coeffs, interval):
        self.min_poly = min_poly  # monic, validated by field_create
        self.degree = _deg(min_poly)
        self._lo, self._hi = interval
        self._lock = threading.Lock()
        self._sturm = _sturm_chain(min_poly)
        # x^(degree+j) reduced mod m, for products of residues
        self._red = []
        if self.degree >= 1:
            row = tuple(-c for c in min_poly[:-1])  # x^d = -(lower terms)
            for _ in range(self.degree - 1):
                self._red.append(row + (Fraction(0),) * (self.degree - len(row)))
                row = self._reduce_once(
                    (Fraction(0),) + self._red[-1]
                )
            self._red.append(row + (Fraction(0),) * (self.degree - len(row)))

    def _reduce_once(self, cs):
        cs = list(cs)
        while len(cs) > self.degree:
            top = cs.pop()
            if top:
                k = len(cs) - self.degree
                for i, c in enumerate(self.min_poly[:-1]):
                    cs[k + i] -= top * c
        return _trim(cs)

    def reduce(self, cs) -> Coeffs:
        """Reduce arbitrary rational coefficients mod min_poly, padded to degree."""
        cs = self._reduce_once(tuple(Fraction(c) for c in cs))
        return cs + (Fraction(0),) * (self.degree - len(cs))

    def interval(self):
        with self._lock:
            return self._lo, self._hi

    def refine(self) -> None:
        """Halve the isolating interval, keeping the sign change."""
        with self._lock:
            lo, hi = self._lo, self._hi
            mid = (lo + hi) / 2
            v = _peval(self.min_poly, mid)
            if v == 0:
                # the root is exactly mid; shrink symmetrically around it
                w = (hi - lo) / 8
                self._lo, self._hi = mid - w, mid + w
            elif _sgn(v) == _sgn(_peval(self.min_poly, lo)):
                self._lo = mid
            else:
                self._hi = mid

    def width(self) -> Fraction:
        lo, hi = self.interval()
        return hi - lo

    def scalar(self, value) -> "AlgebraicScalar":
        """Coerce a rational, coefficient sequence, or scalar into this field."""
        if isinstance(value, AlgebraicScalar):
            if not compatible_fields(value.field, self):
                raise FieldMismatch("scalar belongs to a different field")
            return AlgebraicScalar(self, value.coeffs)
        if isinstance(value, (int, Fraction)):
            return AlgebraicScalar(self, self.reduce((Fraction(value),)))
        return AlgebraicScalar(self, self.reduce(value))

    def zero(self) -> "AlgebraicScalar":
        return self.scalar(0)

    def one(self) -> "AlgebraicScalar":
        return self.scalar(1)

    def gen(self) -> "AlgebraicScalar":
        """The designated root theta."""
        return self.scalar((Fraction(0), Fraction(1)))

    def contains_root(self, poly: Coeffs, lo, hi) -> bool:
        """Whether the designated root lies among the roots of poly in (lo, hi)."""
        g = _pgcd(poly, self.min_poly)
        if _deg(g) < 1:
            return False
        ilo, ihi = self.interval()
        return _sturm_count(_sturm_chain(g), max(lo, ilo), min(hi, ihi)) >= 1 \
            if max(lo, ilo) < min(hi, ihi) else False

    def to_dict(self):
        lo, hi = self.interval()
        return {
            "min_poly": [fraction_str(c) for c in self.min_poly],
            "interval": [fraction_str(lo), fraction_str(hi)],
        }

    @staticmethod
    def from_dict(d) -> "NumberField":
        poly = [parse_fraction(c) for c in d["min_poly"]]
        lo, hi = (parse_fraction(v) for v in d["interval"])
        return field_create(poly, (lo, hi))

    def __repr__(self):
        lo, hi = self.interval()
        return f"NumberField(degree={self.degree}, interval=({lo}, {hi}))"


def field_create(min_poly, interval) -> NumberField:
    """Validate and build a number field with a designated real root.

    min_poly: rational coefficients, lowest degree first.  Must be
    squarefree and nonconstant; the interval endpoints must straddle
    exactly one real root with a sign change.
    """
    poly = _trim(tuple(Fraction(c) for c in min_poly))
    if _deg(poly) < 1:
        raise NoSignChange("defining polynomial must be nonconstant")
    poly = _pmonic(poly)
    lo, hi = (Fraction(v) for v in interval)
    if not lo < hi:
        raise NoSignChange(f"empty interval ({lo}, {hi})")
    if _deg(_pgcd(poly, _pderiv(poly))) >= 1:
        raise NotSquarefree("defining polynomial has a repeated factor")
    vlo, vhi = _peval(poly, lo), _peval(poly, hi)
    if vlo == 0 or vhi == 0 or _sgn(vlo) == _sgn(vhi):
        raise NoSignChange(
            f"no sign change on ({lo}, {hi}): p(lo)={vlo}, p(hi)={vhi}"
        )
    count = _sturm_count(_sturm_chain(poly), lo, hi)
    if count > 1:
        raise AmbiguousRoot(f"interval ({lo}, {hi}) contains {count} real roots")
    return NumberField(poly, (lo, hi))


class AlgebraicScalar:
    """Reduced residue in a NumberField.  Immutable; arithmetic is exact.

    Equality is residue equality.  For a squarefree but reducible modulus a
    nonzero residue may still take the value zero at the designated root;
    sign() decides that case exactly via a gcd escape.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: NumberField, coeffs: Coeffs):
        self.field = field
        self.coeffs = coeffs

    # -- coercion ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, AlgebraicScalar):
            if other.field is self.field or compatible_fields(other.field, self.field):
                return other
            raise FieldMismatch("operands belong to different fields")
        if isinstance(other, (int, Fraction)):
            return self.field.scalar(other)
        return NotImplemented

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return AlgebraicScalar(
            self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    __radd__ = __add__

    def __neg__(self):
        return AlgebraicScalar(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return AlgebraicScalar(
            self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return AlgebraicScalar(self.field, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self.field.degree
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (2 * d - 1) if d > 1 else [Fraction(0)]
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] += x * y
        if d > 1:
            red = self.field._red
            low = out[:d]
            for j in range(d - 1):
                top = out[d + j]
                if top:
                    row = red[j]
                    for i in range(d):
                        if row[i]:
                            low[i] += top * row[i]
            out = low
        return AlgebraicScalar(self.field, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "AlgebraicScalar":
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        residue = _trim(self.coeffs)
        g, s, _ = _pxgcd(residue, self.field.min_poly)
        if _deg(g) >= 1:
            lo, hi = self.field.interval()
            if self.field.contains_root(g, lo, hi):
                raise DivisionByZero("scalar evaluates to zero at the designated root")
            raise NotInvertible(
                "residue is a zero divisor of the reducible modulus"
            )
        return AlgebraicScalar(self.field, self.field.reduce(_pscale(s, 1 / g[0])))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- predicates and conversions ---------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, AlgebraicScalar)):
            coerced = self._coerce(other)
            return self.coeffs == coerced.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, self.field.min_poly))

    def __bool__(self):
        return not self.is_zero()

    def sign(self) -> int:
        """Exact sign of the real value at the designated root."""
        residue = _trim(self.coeffs)
        if not residue:
            return 0
        if _deg(residue) == 0:
            return _sgn(residue[0])
        lo, hi = self.field.interval()
        if self.field.contains_root(residue, lo, hi):
            return 0
        while True:
            lo, hi = self.field.interval()
            vlo, vhi = _ieval(residue, lo, hi)
            if vlo > 0:
                return 1
            if vhi < 0:
                return -1
            self.field.refine()

    def to_float(self, precision: int = 17) -> float:
        """Approximate within 10**(-precision) of the true value."""
        if precision < 1:
            raise ValueError("precision must be >= 1")
        residue = _trim(self.coeffs)
        if not residue:
            return 0.0
        if _deg(residue) == 0:
            return float(residue[0])
        eps = Fraction(1, 10 ** precision)
        while True:
            lo, hi = self.field.interval()
            vlo, vhi = _ieval(residue, lo, hi)
            if vhi - vlo < eps:
                return float((vlo + vhi) / 2)
            self.field.refine()

    def __float__(self):
        return self.to_float()

    def to_list(self):
        return [fraction_str(c) for c in self.coeffs]

    def __repr__(self):
        return f"AlgebraicScalar({list(self.coeffs)})"


def compatible_fields(f1: NumberField, f2: NumberField) -> bool:
    """Same modulus and both intervals isolate the same root."""
    if f1 is f2:
        return True
    if f1.min_poly != f2.min_poly:
        return False
    (a1, b1), (a2, b2) = f1.interval(), f2.interval()
    lo, hi = max(a1, a2), min(b1, b2)
    if not lo < hi:
        return False
    return _sturm_count(f1._sturm, lo, hi) >= 1


def scalar_sign(a) -> int:
    """Sign of an AlgebraicScalar, Fraction, or int."""
    if isinstance(a, AlgebraicScalar):
        return a.sign()
    return _sgn(a)


def to_float(a, precision: int = 17) -> float:
    """Float approximation within 10**(-precision)."""
    if isinstance(a, AlgebraicScalar):
        return a.to_float(precision)
    return float(a)


# cosine table: minimal polynomial of cos(pi/m) and an isolating interval.
# cos(pi/m) is the largest real root and lies in (1/2, 1) for m >= 4.
_COS_RATIONAL = {2: Fraction(0), 3: Fraction(1, 2)}
_COS_ALGEBRAIC = {
    4: (Fraction(-1), Fraction(0), Fraction(2)),            # 2x^2 - 1
    5: (Fraction(-1), Fraction(-2), Fraction(4)),            # 4x^2 - 2x - 1
    6: (Fraction(-3), Fraction(0), Fraction(4)),             # 4x^2 - 3
    7: (Fraction(1), Fraction(-4), Fraction(-4), Fraction(8)),  # 8x^3-4x^2-4x+1
}
_COS_INTERVAL = (Fraction(1, 2), Fraction(1))


def cos_pi_over(m: int, field: NumberField) -> AlgebraicScalar:
    """Exact cos(pi/m) as an element of the field.

    Supported orders: 2..7.  Raises FieldTooSmall when the value does not
    live in the field.
    """
    if m in _COS_RATIONAL:
        return field.scalar(_COS_RATIONAL[m])
    if m not in _COS_ALGEBRAIC:
        raise UnsupportedOrder(f"cos(pi/{m}) is outside the supported table")
    return express_root_in_field(_COS_ALGEBRAIC[m], _COS_INTERVAL, field)


def express_root_in_field(poly, interval, field: NumberField) -> AlgebraicScalar:
    """Express the real root of poly isolated by interval as a field element.

    The search runs through sympy's subfield machinery; the returned
    expression is then verified exactly with this module's own arithmetic
    (poly vanishes on it and it lies in the isolating interval), so the
    result does not depend on the searcher for correctness.
    """
    poly = _trim(tuple(Fraction(c) for c in poly))
    lo, hi = (Fraction(v) for v in interval)
    if _deg(poly) == 1:
        value = -poly[0] / poly[1]
        if not lo < value < hi:
            raise FieldTooSmall("isolating interval excludes the rational root")
        return field.scalar(value)
    if field.degree == 1:
        raise FieldTooSmall("target is irrational but the field is rational")

    candidate = _sympy_subfield_expression(poly, (lo, hi), field)
    if candidate is None:
        raise FieldTooSmall("value is not expressible in the field")
    scalar = field.scalar(candidate)
    # exact verification, independent of the search
    acc = field.zero()
    for c in reversed(poly):
        acc = acc * scalar + c
    if acc.sign() != 0:
        raise FieldTooSmall("candidate expression failed exact verification")
    if (scalar - lo).sign() <= 0 or (scalar - hi).sign() >= 0:
        raise FieldTooSmall("candidate expression lands on a different root")
    return scalar


def _sympy_subfield_expression(poly, interval, field):
    from sympy import AlgebraicNumber, Poly, Rational, Symbol, real_roots
    from sympy.polys.numberfields.subfield import field_isomorphism

    x = Symbol("x")

    def sym_poly(cs):
        return Poly(
            sum(Rational(c.numerator, c.denominator) * x ** i for i, c in enumerate(cs)),
            x,
        )

    def root_in(cs, lo, hi):
        slo = Rational(lo.numerator, lo.denominator)
        shi = Rational(hi.numerator, hi.denominator)
        for r in real_roots(sym_poly(cs)):
            if r > slo and r < shi:
                return r
        return None

    theta = root_in(field.min_poly, *field.interval())
    target = root_in(poly, *interval)
    if theta is None or target is None:
        return None
    coeffs = field_isomorphism(AlgebraicNumber(target), AlgebraicNumber(theta))
    if coeffs is None:
        return None
    # sympy returns highest-degree-first coefficients in powers of theta
    out = [Fraction(0)] * field.degree
    for i, c in enumerate(reversed(list(coeffs))):
        out[i] = Fraction(c.p, c.q)
    return tuple(out)

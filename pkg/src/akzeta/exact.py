"""Exact arithmetic: Gaussian rationals, polynomials in (y, w), truncated power series."""

from __future__ import annotations

import re
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Mapping, Union

Rational = Union[int, Fraction]


class NonUnitError(ZeroDivisionError):
    """Raised when a series division meets a constant term that is not invertible."""


def _norm(x) -> Rational:
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, str):
        return _norm(Fraction(x))
    raise TypeError(f"not an exact rational: {x!r}")


def _fmt_rational(q: Rational) -> str:
    return str(q)


class GaussianRational:
    """An element re + im*i of Q(i), stored with int components whenever possible."""

    __slots__ = ("re", "im")

    def __init__(self, re: Rational = 0, im: Rational = 0):
        self.re = _norm(re)
        self.im = _norm(im)

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x, 0)
        if isinstance(x, str):
            return cls.parse(x)
        if isinstance(x, complex) or isinstance(x, float):
            raise TypeError(f"floating value {x!r} cannot be used as an exact Gaussian rational")
        raise TypeError(f"cannot convert {x!r} to GaussianRational")

    _TERM = re.compile(r"([+-]?)([^+-]+)")

    @classmethod
    def parse(cls, text: str) -> "GaussianRational":
        """Parse strings such as ``3``, ``-1/2``, ``i``, ``-4/125-22/125*i``, ``1+2i``."""
        s = text.strip().replace(" ", "").replace("I", "i").replace("j", "i")
        if not s:
            raise ValueError("empty number")
        re_part: Fraction = Fraction(0)
        im_part: Fraction = Fraction(0)
        # split on + or - that do not start the string and do not follow '/' or 'e'
        tokens = re.findall(r"[+-]?[^+-]+", s)
        if "".join(tokens) != s:
            raise ValueError(f"cannot parse {text!r}")
        for tok in tokens:
            sign = -1 if tok.startswith("-") else 1
            body = tok.lstrip("+-")
            if body.endswith("i"):
                body = body[:-1].rstrip("*")
                val = Fraction(body) if body else Fraction(1)
                im_part += sign * val
            else:
                re_part += sign * Fraction(body)
        return cls(re_part, im_part)

    # arithmetic -------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

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
            if not b and not d:
                return GaussianRational(a * c, 0)
            return GaussianRational(a * c - b * d, a * d + b * c)
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        if not self.im:
            if not self.re:
                raise ZeroDivisionError("GaussianRational division by zero")
            return GaussianRational(Fraction(1) / self.re, 0)
        n = self.re * self.re + self.im * self.im
        return GaussianRational(Fraction(self.re) / n, Fraction(-self.im) / n)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("GaussianRational division by zero")
            return GaussianRational(Fraction(self.re) / other, Fraction(self.im) / other)
        if isinstance(other, GaussianRational):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Rational:
        return _norm(self.re * self.re + self.im * self.im)

    # comparison / hashing ----------------------------------------------
    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return not self.im

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def to_complex(self) -> complex:
        return complex(self)

    def __repr__(self):
        return f"GaussianRational({self})"

    def __str__(self):
        re_s, im_s = self.re, self.im
        if not im_s:
            return _fmt_rational(re_s)
        if im_s == 1:
            im_txt = "i"
        elif im_s == -1:
            im_txt = "-i"
        else:
            im_txt = f"{_fmt_rational(im_s)}*i"
        if not re_s:
            return im_txt
        sep = "" if im_txt.startswith("-") else "+"
        return f"{_fmt_rational(re_s)}{sep}{im_txt}"

    def to_json(self) -> dict:
        re_q, im_q = Fraction(self.re), Fraction(self.im)
        return {
            "re": {"num": re_q.numerator, "den": re_q.denominator},
            "im": {"num": im_q.numerator, "den": im_q.denominator},
        }


GR = GaussianRational
I = GaussianRational(0, 1)


def gr(x) -> GaussianRational:
    return GaussianRational.coerce(x)


class PolyYW:
    """Sparse polynomial in two commuting variables y and w over Q(i).

    Keys of ``terms`` are exponent pairs ``(deg_y, deg_w)``; zero coefficients are never stored.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], object] | None = None):
        clean: dict[tuple[int, int], GaussianRational] = {}
        if terms:
            for key, c in terms.items():
                c = gr(c)
                if c:
                    clean[(int(key[0]), int(key[1]))] = c
        self.terms = clean

    @classmethod
    def _raw(cls, terms: dict) -> "PolyYW":
        p = cls.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def const(cls, c) -> "PolyYW":
        return cls({(0, 0): c})

    @classmethod
    def y(cls) -> "PolyYW":
        return cls({(1, 0): 1})

    @classmethod
    def w(cls) -> "PolyYW":
        return cls({(0, 1): 1})

    @classmethod
    def coerce(cls, x) -> "PolyYW":
        if isinstance(x, PolyYW):
            return x
        return cls.const(x)

    # structure ----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {(0, 0)}

    def constant_term(self) -> GaussianRational:
        return self.terms.get((0, 0), GaussianRational(0))

    def deg_y(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    def deg_w(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def coeff(self, i: int, j: int) -> GaussianRational:
        return self.terms.get((i, j), GaussianRational(0))

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, PolyYW):
            if isinstance(other, (int, Fraction, GaussianRational)):
                other = PolyYW.const(other)
            else:
                return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k)
            if v is None:
                out[k] = c
            else:
                v = v + c
                if v:
                    out[k] = v
                else:
                    del out[k]
        return PolyYW._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return PolyYW._raw({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, PolyYW):
            if isinstance(other, (int, Fraction, GaussianRational)):
                other = PolyYW.const(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "PolyYW":
        c = gr(c)
        if not c:
            return PolyYW._raw({})
        if c == 1:
            return self
        return PolyYW._raw({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        if not isinstance(other, PolyYW):
            return NotImplemented
        if len(other.terms) == 1 and (0, 0) in other.terms:
            return self.scale(other.terms[(0, 0)])
        if len(self.terms) == 1 and (0, 0) in self.terms:
            return other.scale(self.terms[(0, 0)])
        out: dict[tuple[int, int], GaussianRational] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                v = out.get(k)
                out[k] = c1 * c2 if v is None else v + c1 * c2
        return PolyYW._raw({k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(gr(other).inverse())
        if isinstance(other, PolyYW) and other.is_constant() and not other.is_zero():
            return self.scale(other.constant_term().inverse())
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = PolyYW.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, PolyYW):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.terms == PolyYW.const(other).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # substitutions ----------------------------------------------------------
    def shift(self, dy=0, dw=0) -> "PolyYW":
        """Return P(y + dy, w + dw)."""
        return poly_shift(self, dy, dw)

    def swap(self) -> "PolyYW":
        """Exchange the roles of y and w."""
        return PolyYW._raw({(j, i): c for (i, j), c in self.terms.items()})

    def substitute(self, y_to: "PolyYW", w_to: "PolyYW") -> "PolyYW":
        """Compose: replace y by ``y_to`` and w by ``w_to`` (both PolyYW)."""
        y_to, w_to = PolyYW.coerce(y_to), PolyYW.coerce(w_to)
        ypow = [PolyYW.const(1)]
        wpow = [PolyYW.const(1)]
        for _ in range(max(self.deg_y(), 0)):
            ypow.append(ypow[-1] * y_to)
        for _ in range(max(self.deg_w(), 0)):
            wpow.append(wpow[-1] * w_to)
        out = PolyYW()
        for (i, j), c in self.terms.items():
            out = out + (ypow[i] * wpow[j]).scale(c)
        return out

    def evaluate(self, y=0, w=0):
        """Evaluate at exact (Gaussian rational) or floating (complex) values."""
        exact = not isinstance(y, (float, complex)) and not isinstance(w, (float, complex))
        if exact:
            y, w = gr(y), gr(w)
            total = GaussianRational(0)
        else:
            y, w = complex(y), complex(w)
            total = 0j
        for (i, j), c in self.terms.items():
            if exact:
                total = total + c * (y ** i) * (w ** j)
            else:
                total += complex(c) * y ** i * w ** j
        return total

    # output ----------------------------------------------------------------
    def sorted_terms(self) -> list[tuple[tuple[int, int], GaussianRational]]:
        return sorted(self.terms.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][1], -kv[0][0]))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for (i, j), c in self.sorted_terms():
            mono = []
            if i:
                mono.append("y" if i == 1 else f"y^{i}")
            if j:
                mono.append("w" if j == 1 else f"w^{j}")
            mono_s = "*".join(mono)
            if not mono_s:
                pieces.append(str(c))
                continue
            if c == 1:
                pieces.append(mono_s)
            elif c == -1:
                pieces.append("-" + mono_s)
            elif c.im and c.re:
                pieces.append(f"({c})*{mono_s}")
            else:
                pieces.append(f"{c}*{mono_s}")
        out = pieces[0]
        for p in pieces[1:]:
            out += p if p.startswith("-") else "+" + p
        return out

    def __repr__(self):
        return f"PolyYW({self})"

    def to_json(self) -> list[dict]:
        return [{"y": i, "w": j, "coeff": c.to_json()} for (i, j), c in self.sorted_terms()]


_Y = PolyYW.y()
_W = PolyYW.w()


def poly_shift(p: PolyYW, dy=0, dw=0) -> PolyYW:
    """P(y + dy, w + dw) by binomial expansion of each monomial."""
    dy, dw = gr(dy), gr(dw)
    if not dy and not dw:
        return p
    dyp = [GaussianRational(1)]
    dwp = [GaussianRational(1)]
    for _ in range(max(p.deg_y(), 0)):
        dyp.append(dyp[-1] * dy)
    for _ in range(max(p.deg_w(), 0)):
        dwp.append(dwp[-1] * dw)
    out: dict[tuple[int, int], GaussianRational] = {}
    for (i, j), c in p.terms.items():
        for r in range(i + 1):
            cy = dyp[i - r]
            if not cy:
                continue
            cyc = c * (comb(i, r) * cy)
            for q in range(j + 1):
                cw = dwp[j - q]
                if not cw:
                    continue
                v = cyc * (comb(j, q) * cw)
                k = (r, q)
                prev = out.get(k)
                out[k] = v if prev is None else prev + v
    return PolyYW._raw({k: v for k, v in out.items() if v})


# --------------------------------------------------------------------------
# truncated power series over a generic exact ring (int, Fraction, GaussianRational, PolyYW)


def _is_zero(c) -> bool:
    return not c


def unit_inverse(c):
    """Inverse of a constant ring element; raises NonUnitError if not a unit."""
    if isinstance(c, PolyYW):
        if not c.is_constant() or c.is_zero():
            raise NonUnitError(f"constant term {c} is not a unit")
        return c.constant_term().inverse()
    if isinstance(c, GaussianRational):
        if not c:
            raise NonUnitError("constant term is zero")
        return c.inverse()
    if not c:
        raise NonUnitError("constant term is zero")
    return _norm(Fraction(1) / c) if isinstance(c, (int, Fraction)) else 1 / c


class TruncSeries1:
    """Power series in one variable truncated after degree ``order``."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable, order: int | None = None, var: str = "t"):
        cs = list(coeffs)
        if order is not None:
            cs = (cs + [0] * (order + 1))[: order + 1]
        self.coeffs = cs
        self.var = var

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __add__(self, other):
        if isinstance(other, TruncSeries1):
            n = min(self.order, other.order)
            return TruncSeries1([self.coeffs[k] + other.coeffs[k] for k in range(n + 1)], var=self.var)
        cs = list(self.coeffs)
        cs[0] = cs[0] + other
        return TruncSeries1(cs, var=self.var)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries1([-c for c in self.coeffs], var=self.var)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncSeries1):
            return series_mul(self, other)
        return TruncSeries1([c * other for c in self.coeffs], var=self.var)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncSeries1):
            return series_div(self, other)
        inv = unit_inverse(other)
        return TruncSeries1([c * inv for c in self.coeffs], var=self.var)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries1):
            return NotImplemented
        n = min(self.order, other.order)
        return all(_is_zero(self.coeffs[k] - other.coeffs[k]) for k in range(n + 1))

    def __repr__(self):
        return f"TruncSeries1({self.var}, {self.coeffs})"

    def compose(self, inner: "TruncSeries1") -> "TruncSeries1":
        """f(inner(x)) for ``inner`` with zero constant term (Horner scheme)."""
        if not _is_zero(inner.coeffs[0]):
            raise ValueError("inner series must have zero constant term")
        n = min(self.order, inner.order)
        inner = TruncSeries1(inner.coeffs, order=n, var=inner.var)
        acc = TruncSeries1([self.coeffs[n]], order=n, var=inner.var)
        for k in range(n - 1, -1, -1):
            acc = series_mul(acc, inner) + self.coeffs[k]
        return acc


def series_mul(a: TruncSeries1, b: TruncSeries1) -> TruncSeries1:
    n = min(a.order, b.order)
    out = []
    ac, bc = a.coeffs, b.coeffs
    for k in range(n + 1):
        acc = 0
        for i in range(k + 1):
            x, y = ac[i], bc[k - i]
            if _is_zero(x) or _is_zero(y):
                continue
            acc = acc + x * y
        out.append(acc)
    return TruncSeries1(out, var=a.var)


def series_div(a: TruncSeries1, b: TruncSeries1) -> TruncSeries1:
    """a / b, requiring an invertible constant term in b."""
    n = min(a.order, b.order)
    inv0 = unit_inverse(b.coeffs[0])
    q: list = []
    for k in range(n + 1):
        acc = a.coeffs[k]
        for i in range(1, k + 1):
            bi = b.coeffs[i]
            if _is_zero(bi) or _is_zero(q[k - i]):
                continue
            acc = acc - bi * q[k - i]
        q.append(acc * inv0)
    return TruncSeries1(q, var=a.var)


def series_exp_linear(coef, order: int, var: str = "t") -> TruncSeries1:
    """exp(coef * var) truncated at ``order``."""
    out = [1]
    power = 1
    for n in range(1, order + 1):
        power = power * coef
        out.append(power * Fraction(1, factorial(n)))
    return TruncSeries1([_norm_any(c) for c in out], var=var)


def _norm_any(c):
    if isinstance(c, Fraction):
        return _norm(c)
    return c


def euler_theta(s: TruncSeries1) -> TruncSeries1:
    """The Euler operator z d/dz on a series in z."""
    return TruncSeries1([c * n for n, c in enumerate(s.coeffs)], var=s.var)


def exp_series(order: int, scale: Rational = 1) -> TruncSeries1:
    """Rational coefficients of exp(scale * t)."""
    return TruncSeries1([_norm(Fraction(scale) ** n / factorial(n)) for n in range(order + 1)])


class TruncSeries2:
    """Power series in two variables (t, x); ``coeffs[i][j]`` multiplies t^i x^j."""

    __slots__ = ("coeffs", "order_t", "order_x")

    def __init__(self, coeffs, order_t: int, order_x: int):
        grid = [[0] * (order_x + 1) for _ in range(order_t + 1)]
        for i, row in enumerate(coeffs):
            if i > order_t:
                break
            for j, c in enumerate(row):
                if j > order_x:
                    break
                grid[i][j] = c
        self.coeffs = grid
        self.order_t = order_t
        self.order_x = order_x

    @classmethod
    def outer(cls, a: TruncSeries1, b: TruncSeries1) -> "TruncSeries2":
        """The product a(t) * b(x)."""
        return cls([[ai * bj for bj in b.coeffs] for ai in a.coeffs], a.order, b.order)

    def __getitem__(self, ij):
        i, j = ij
        return self.coeffs[i][j]

    def __add__(self, other: "TruncSeries2"):
        nt, nx = min(self.order_t, other.order_t), min(self.order_x, other.order_x)
        return TruncSeries2(
            [[self.coeffs[i][j] + other.coeffs[i][j] for j in range(nx + 1)] for i in range(nt + 1)], nt, nx
        )

    def __neg__(self):
        return TruncSeries2([[-c for c in row] for row in self.coeffs], self.order_t, self.order_x)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TruncSeries2):
            return series2_mul(self, other)
        return TruncSeries2([[c * other for c in row] for row in self.coeffs], self.order_t, self.order_x)

    __rmul__ = __mul__

    def __truediv__(self, other: "TruncSeries2"):
        return series2_div(self, other)


def series2_mul(a: TruncSeries2, b: TruncSeries2) -> TruncSeries2:
    nt, nx = min(a.order_t, b.order_t), min(a.order_x, b.order_x)
    out = [[0] * (nx + 1) for _ in range(nt + 1)]
    nz_b = [(p, r, b.coeffs[p][r]) for p in range(nt + 1) for r in range(nx + 1) if not _is_zero(b.coeffs[p][r])]
    for i in range(nt + 1):
        for j in range(nx + 1):
            x = a.coeffs[i][j]
            if _is_zero(x):
                continue
            for p, r, y in nz_b:
                if i + p <= nt and j + r <= nx:
                    out[i + p][j + r] = out[i + p][j + r] + x * y
    return TruncSeries2(out, nt, nx)


def series2_div(a: TruncSeries2, b: TruncSeries2) -> TruncSeries2:
    nt, nx = min(a.order_t, b.order_t), min(a.order_x, b.order_x)
    inv0 = unit_inverse(b.coeffs[0][0])
    nz_b = [(p, r, b.coeffs[p][r]) for p in range(nt + 1) for r in range(nx + 1)
            if (p or r) and not _is_zero(b.coeffs[p][r])]
    q = [[0] * (nx + 1) for _ in range(nt + 1)]
    for i in range(nt + 1):
        for j in range(nx + 1):
            acc = a.coeffs[i][j]
            for p, r, y in nz_b:
                if p <= i and r <= j:
                    prev = q[i - p][j - r]
                    if not _is_zero(prev):
                        acc = acc - y * prev
            q[i][j] = acc * inv0
    return TruncSeries2(q, nt, nx)

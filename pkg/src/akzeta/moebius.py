"""2x2 complex matrices acting by Moebius transformations on the Riemann sphere.

Exact matrices (Gaussian rational entries) get certified answers; matrices with
floating entries get tolerance-based answers flagged as non-certified.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .exact import GaussianRational, gr

NUM_TOL = 1e-12


def _is_floating(x) -> bool:
    return isinstance(x, (float, complex))


class Matrix2:
    """Invertible matrix (a b; c d) with entries in Q(i) (exact) or C (floating)."""

    __slots__ = ("a", "b", "c", "d", "exact")

    def __init__(self, a, b, c, d):
        entries = (a, b, c, d)
        if any(_is_floating(x) for x in entries):
            self.exact = False
            self.a, self.b, self.c, self.d = (complex(x) for x in entries)
            if abs(self.det()) < NUM_TOL:
                raise ValueError("matrix is singular")
        else:
            self.exact = True
            self.a, self.b, self.c, self.d = (gr(x) for x in entries)
            if not self.det():
                raise ValueError("matrix is singular")

    @classmethod
    def parse(cls, text: str) -> "Matrix2":
        """Parse ``"a,b;c,d"`` with Gaussian-rational entries such as ``-1/2+3*i``."""
        rows = [r for r in text.replace(" ", "").split(";")]
        if len(rows) != 2:
            raise ValueError(f"expected two rows separated by ';' in {text!r}")
        cells = [row.split(",") for row in rows]
        if any(len(row) != 2 for row in cells):
            raise ValueError(f"expected two entries per row in {text!r}")
        vals = []
        for cell in (cells[0][0], cells[0][1], cells[1][0], cells[1][1]):
            try:
                vals.append(GaussianRational.parse(cell))
            except (ValueError, ZeroDivisionError):
                vals.append(complex(cell.replace("i", "j")))
        return cls(*vals)

    def entries(self):
        return self.a, self.b, self.c, self.d

    def det(self):
        return self.a * self.d - self.b * self.c

    def inverse(self) -> "Matrix2":
        det = self.det()
        if self.exact:
            inv = det.inverse()
            return Matrix2(self.d * inv, -self.b * inv, -self.c * inv, self.a * inv)
        return Matrix2(self.d / det, -self.b / det, -self.c / det, self.a / det)

    def __matmul__(self, other: "Matrix2") -> "Matrix2":
        a, b, c, d = self.entries()
        e, f, g, h = other.entries()
        return Matrix2(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def scaled(self, alpha) -> "Matrix2":
        if self.exact and not _is_floating(alpha):
            alpha = gr(alpha)
        return Matrix2(*(x * alpha for x in self.entries()))

    def to_numeric(self) -> "Matrix2":
        return Matrix2(*(complex(x) for x in self.entries()))

    def __eq__(self, other):
        if not isinstance(other, Matrix2):
            return NotImplemented
        return self.entries() == other.entries()

    def __hash__(self):
        return hash(self.entries())

    def __repr__(self):
        return f"Matrix2({self.a}, {self.b}; {self.c}, {self.d})"

    def __str__(self):
        return f"{self.a},{self.b};{self.c},{self.d}"

    # Moebius action on a few special points
    def image_of_one(self) -> "RiemannPoint":
        return act(self, ONE)

    def image_of_infinity(self) -> "RiemannPoint":
        return act(self, INF)


class RiemannPoint:
    """Projective point (p : q); the point at infinity is (1 : 0)."""

    __slots__ = ("p", "q")

    def __init__(self, p, q=1):
        self.p = p
        self.q = q
        if not p and not q:
            raise ValueError("(0:0) is not a point")

    @classmethod
    def of(cls, z) -> "RiemannPoint":
        if isinstance(z, RiemannPoint):
            return z
        if isinstance(z, str) and z.strip().lower() in ("inf", "infinity", "oo"):
            return INF
        if _is_floating(z):
            if cmath.isinf(z):
                return INF
            return cls(complex(z), 1.0)
        return cls(gr(z), gr(1))

    @property
    def exact(self) -> bool:
        return not (_is_floating(self.p) or _is_floating(self.q))

    def is_infinity(self) -> bool:
        if self.exact:
            return not self.q
        return abs(self.q) <= NUM_TOL * max(abs(self.p), 1.0)

    def value(self):
        """Affine coordinate; ``math.inf`` for the point at infinity."""
        if self.is_infinity():
            return math.inf
        if self.exact:
            return gr(self.p) / gr(self.q)
        return complex(self.p) / complex(self.q)

    def __eq__(self, other):
        if not isinstance(other, RiemannPoint):
            other = RiemannPoint.of(other)
        if self.exact and other.exact:
            return self.p * other.q == self.q * other.p
        p, q, op, oq = (complex(x) for x in (self.p, self.q, other.p, other.q))
        scale = max(abs(p), abs(q)) * max(abs(op), abs(oq))
        return abs(p * oq - q * op) <= NUM_TOL * scale

    def __hash__(self):
        if self.is_infinity():
            return hash("inf")
        return hash(self.value())

    def label(self) -> str:
        if self.is_infinity():
            return "inf"
        return str(self.value())

    def __repr__(self):
        return f"RiemannPoint({self.label()})"


ONE = RiemannPoint(gr(1), gr(1))
ZERO = RiemannPoint(gr(0), gr(1))
INF = RiemannPoint(gr(1), gr(0))


def act(g: Matrix2, z) -> RiemannPoint:
    """The Moebius image g z = (a z + b) / (c z + d)."""
    z = RiemannPoint.of(z)
    p, q = z.p, z.q
    if not g.exact and z.exact:
        p, q = complex(p), complex(q)
    elif g.exact and not z.exact:
        g = g.to_numeric()
    return RiemannPoint(g.a * p + g.b * q, g.c * p + g.d * q)


def automorphy(g: Matrix2, z):
    """Return ``(j_D, j_N) = (c z + d, a z + b)`` at a finite point z."""
    if isinstance(z, RiemannPoint):
        z = z.value()
    if g.exact and not _is_floating(z):
        z = gr(z)
    return g.c * z + g.d, g.a * z + g.b


# ---------------------------------------------------------------------------
# vertices and cusps


def _special_label(pt: RiemannPoint) -> Optional[str]:
    if pt == INF:
        return "inf"
    if pt == ONE:
        return "1"
    return None


_POINTS = {"1": ONE, "inf": INF}


def vertex_set(g: Matrix2) -> list[tuple[str, str]]:
    """Pairs (T0, X0) with T0, X0 in {1, inf} and g T0 = X0."""
    pairs = []
    for t_label in ("1", "inf"):
        x_label = _special_label(act(g, _POINTS[t_label]))
        if x_label is not None:
            pairs.append((t_label, x_label))
    return pairs


def _k_matrix(label: str) -> Matrix2:
    # sends a neighbourhood of the point inside [1, inf] to a neighbourhood of 0 in [0, inf)
    if label == "1":
        return Matrix2(1, -1, 1, 0)
    return Matrix2(0, -1, -1, 0)


def _k_inverse(label: str) -> Matrix2:
    tilde = 1 if label == "1" else 0
    sign = -1 if tilde == 0 else 1  # -(-1)^tilde
    return Matrix2(0, sign, -1, sign * tilde)


def localize(g: Matrix2, t0: str, x0: str) -> Matrix2:
    """h = k_{X0} g k_{T0}^{-1}; h fixes 0 whenever (T0, X0) is a vertex pair."""
    k_x = _k_matrix(x0)
    k_t_inv = _k_inverse(t0)
    if not g.exact:
        k_x, k_t_inv = k_x.to_numeric(), k_t_inv.to_numeric()
    return k_x @ g @ k_t_inv


def is_cusp(g: Matrix2, t0: str, x0: str) -> bool:
    """True iff the two arcs meet tangentially (angle zero) at the vertex X0 = g T0."""
    if (t0, x0) not in vertex_set(g):
        raise ValueError(f"({t0}, {x0}) is not a vertex pair of {g!r}")
    h = localize(g, t0, x0)
    alpha, beta, _, delta = h.entries()
    if g.exact:
        if beta:
            raise ArithmeticError("localized matrix does not fix the origin")
        prod = alpha * delta.conjugate()
        return prod.im == 0 and prod.re > 0
    scale = max(abs(alpha), abs(delta)) ** 2
    prod = alpha * delta.conjugate()
    return abs(prod.imag) <= NUM_TOL * scale and prod.real > NUM_TOL * scale


# ---------------------------------------------------------------------------
# admissibility: g([1, inf]) meets [1, inf] only at shared vertices


class _Surd:
    """p + q * sqrt(D) with rational p, q and a fixed positive rational D."""

    __slots__ = ("p", "q", "D")

    def __init__(self, p, q, D):
        self.p, self.q, self.D = Fraction(p), Fraction(q), Fraction(D)

    def __add__(self, o):
        if isinstance(o, _Surd):
            return _Surd(self.p + o.p, self.q + o.q, self.D)
        return _Surd(self.p + o, self.q, self.D)

    __radd__ = __add__

    def __mul__(self, o):
        if isinstance(o, _Surd):
            return _Surd(self.p * o.p + self.q * o.q * self.D, self.p * o.q + self.q * o.p, self.D)
        return _Surd(self.p * o, self.q * o, self.D)

    __rmul__ = __mul__

    def __sub__(self, o):
        return self + (-1) * o

    def sign(self) -> int:
        p, q = self.p, self.q
        sp = (p > 0) - (p < 0)
        sq = (q > 0) - (q < 0)
        if sq == 0:
            return sp
        if sp == 0 or sp == sq:
            return sq
        # opposite signs: compare p^2 with q^2 D
        diff = p * p - q * q * self.D
        sd = (diff > 0) - (diff < 0)
        return sp * sd

    def __float__(self):
        return float(self.p) + float(self.q) * math.sqrt(float(self.D))

    def __str__(self):
        if not self.q:
            return str(self.p)
        return f"{self.p}+{self.q}*sqrt({self.D})"


def _rational_sqrt(x: Fraction) -> Optional[Fraction]:
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _poly_at(coeffs, x):
    """Evaluate sum coeffs[k] x^k (rational coefficients) at a rational or surd x."""
    acc = Fraction(0) if not isinstance(x, _Surd) else _Surd(0, 0, x.D)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _sign(x) -> int:
    if isinstance(x, _Surd):
        return x.sign()
    return (x > 0) - (x < 0)


@dataclass
class Admissibility:
    """Outcome of the admissibility test; truthy when g is admissible."""

    admissible: bool
    witness: object = None
    witness_image: object = None
    certified: bool = True
    reason: str = ""

    def __bool__(self):
        return self.admissible

    def to_dict(self) -> dict:
        def fmt(v):
            if v is None:
                return None
            if isinstance(v, float) and math.isinf(v):
                return "inf"
            return str(v)

        return {
            "admissible": self.admissible,
            "witness_T": fmt(self.witness),
            "witness_gT": fmt(self.witness_image),
            "certified": self.certified,
            "reason": self.reason,
        }


def _real_image_ge_one(g_real, T):
    """For a real matrix and T in Q or inf, classify g T: returns (value or inf, in [1, inf])."""
    a, b, c, d = g_real
    if T is math.inf:
        num, den = a, c
    else:
        num, den = a * T + b, c * T + d
    if den == 0:
        return math.inf, True
    val = Fraction(num) / den
    return val, val >= 1


def _offending(T, in_image, image) -> bool:
    t_special = T is math.inf or T == 1
    x_special = image is math.inf or image == 1
    return in_image and not (t_special and x_special)


def _check_real(g: Matrix2) -> Admissibility:
    # normalize to a real rational matrix
    pivot = next(x for x in g.entries() if x)
    scaled = [x / pivot for x in g.entries()]
    a, b, c, d = (x.re for x in scaled)
    # preimages of 1 and inf
    cands = {Fraction(1)}
    for num, den in ((d - b, a - c), (-d, c)):  # g^{-1}(1), g^{-1}(inf)
        if den != 0:
            cands.add(Fraction(num) / den)
    finite = sorted(cands)
    tests_interior = [(finite[i] + finite[i + 1]) / 2 for i in range(len(finite) - 1)]
    tests_interior += [finite[-1] + 1, finite[0] - 1]
    tests = [T for T in tests_interior if T > 1] + finite + [math.inf]
    for T in tests:
        if T is not math.inf and T < 1:
            continue
        image, inside = _real_image_ge_one((a, b, c, d), T)
        if _offending(T, inside, image):
            return Admissibility(False, T, image, True, "image of [1,inf] overlaps [1,inf] away from shared vertices")
    return Admissibility(True, reason="real matrix; overlap only at shared vertices")


def check_def_cond(g: Matrix2) -> Admissibility:
    """Decide whether g([1, inf]) ∩ [1, inf] is contained in the vertex set of g."""
    if not g.exact:
        return _check_numeric(g)
    a, b, c, d = g.entries()
    # Im((a T + b) conj(c T + d)) for real T, as a quadratic in T
    A2 = (a * c.conjugate()).im
    A1 = (a * d.conjugate() + b * c.conjugate()).im
    A0 = (b * d.conjugate()).im
    if A2 == 0 and A1 == 0 and A0 == 0:
        return _check_real(g)
    am, bm = a - c, b - d
    # Re(((a-c) T + (b-d)) conj(c T + d)) has the sign of gT - 1 when gT is real
    P = [
        Fraction((bm * d.conjugate()).re),
        Fraction((am * d.conjugate() + bm * c.conjugate()).re),
        Fraction((am * c.conjugate()).re),
    ]
    # |c T + d|^2
    N = [Fraction(d.norm()), Fraction(2 * (c * d.conjugate()).re), Fraction(c.norm())]
    roots: list = []
    A2, A1, A0 = Fraction(A2), Fraction(A1), Fraction(A0)
    if A2 != 0:
        disc = A1 * A1 - 4 * A2 * A0
        if disc >= 0:
            r = _rational_sqrt(disc)
            if r is not None:
                roots = sorted({(-A1 + r) / (2 * A2), (-A1 - r) / (2 * A2)})
            else:
                roots = [_Surd(-A1 / (2 * A2), s / (2 * A2), disc) for s in (1, -1)]
    elif A1 != 0:
        roots = [-A0 / A1]
    for T in roots:
        if _sign(T + (-1)) < 0:
            continue
        at_pole = _sign(_poly_at(N, T)) == 0
        if at_pole:
            image, inside = math.inf, True
        else:
            sp = _sign(_poly_at(P, T))
            inside = sp >= 0
            image = 1 if sp == 0 else ("real>1" if sp > 0 else "real<1")
        t_special = (not isinstance(T, _Surd)) and T == 1
        x_special = image == 1 or image is math.inf
        if inside and not (t_special and x_special):
            img_val = act(g, T).value() if not isinstance(T, _Surd) else complex(act(g.to_numeric(), float(T)).value()).real
            return Admissibility(False, T if not isinstance(T, _Surd) else float(T), img_val, True,
                                 "image arc crosses [1,inf] at a non-vertex point")
    # T = inf
    image_inf = act(g, INF)
    if image_inf.is_infinity():
        inside_inf = True
    else:
        v = image_inf.value()
        inside_inf = v.im == 0 and v.re >= 1
    if inside_inf and _special_label(image_inf) is None:
        return Admissibility(False, math.inf, image_inf.value(), True, "g(inf) lies inside (1, inf)")
    return Admissibility(True, reason="non-real image arc meets [1,inf] only at shared vertices")


def _check_numeric(g: Matrix2) -> Admissibility:
    # heuristic: sample the arc densely and look for image points near [1, inf]
    import numpy as np

    r = np.linspace(1e-6, 1.0, 20001)
    T = 1.0 / r
    a, b, c, d = g.entries()
    den = c * T + d
    img = (a * T + b) / np.where(den == 0, 1e-300, den)
    near = (np.abs(img.imag) <= 1e-9 * np.maximum(1, np.abs(img))) & (img.real > 1 + 1e-9)
    vs = {t for t, _ in vertex_set(g)}
    for idx in np.flatnonzero(near)[::-1]:  # increasing T
        Ti = float(T[idx])
        if abs(Ti - 1) < 1e-6 and "1" in vs:
            continue
        return Admissibility(False, Ti, complex(img[idx]), False, "sampled overlap (non-certified)")
    return Admissibility(True, certified=False, reason="sampled check (non-certified)")


# ---------------------------------------------------------------------------
# convergence domain bookkeeping

_PARAM_OF = {"mu_1": "s", "mu_inf": "w", "nu_1": "u", "nu_inf": "y"}


@dataclass
class DomainReport:
    """Vertex data and the half-plane domain of absolute convergence of the zeta integral."""

    matrix: str
    vertex_pairs: list
    cusp_flags: dict
    admissible: bool
    constraints: list = field(default_factory=list)  # (mu symbol, nu symbol, total)
    default_split: dict = field(default_factory=dict)

    def half_planes(self, split: Optional[dict] = None) -> dict:
        sp = self.default_split if split is None else split
        return {
            "Re u >": sp["nu_1"],
            "Re s >": sp["mu_1"],
            "Re y >": sp["nu_inf"],
            "Re w >": sp["mu_inf"] - 1,
        }

    @staticmethod
    def _allowance(symbol: str, u, s, y, w) -> float:
        return {"mu_1": complex(s).real, "mu_inf": complex(w).real + 1.0,
                "nu_1": complex(u).real, "nu_inf": complex(y).real}[symbol]

    def contains(self, u, s, y, w, margin: float = 0.0) -> bool:
        """True if some admissible split of the vertex weights puts (u, s, y, w) in the domain."""
        used = set()
        for mu, nu, total in self.constraints:
            used.update((mu, nu))
            am = self._allowance(mu, u, s, y, w) - margin
            an = self._allowance(nu, u, s, y, w) - margin
            if not (am > 0 and an > 0 and am + an > total):
                return False
        for sym in _PARAM_OF:
            if sym not in used and self._allowance(sym, u, s, y, w) - margin <= 0:
                return False
        return True

    def to_dict(self) -> dict:
        return {
            "matrix": self.matrix,
            "vertex_pairs": [list(p) for p in self.vertex_pairs],
            "cusp": {f"{t}->{x}": v for (t, x), v in self.cusp_flags.items()},
            "admissible": self.admissible,
            "constraints": [{"mu": m, "nu": n, "sum": s} for m, n, s in self.constraints],
            "default_split": self.default_split,
            "half_planes": self.half_planes(),
        }


def domain_report(g: Matrix2) -> DomainReport:
    pairs = vertex_set(g)
    cusps = {(t, x): is_cusp(g, t, x) for t, x in pairs}
    split = {"mu_1": 0, "mu_inf": 0, "nu_1": 0, "nu_inf": 0}
    constraints = []
    for t, x in pairs:
        total = 2 if cusps[(t, x)] else 1
        mu, nu = f"mu_{t}", f"nu_{x}"
        constraints.append((mu, nu, total))
        # default: weight goes to the infinity-side symbol, mu before nu
        if t == "inf":
            split[mu] = total
        elif x == "inf":
            split[nu] = total
        else:
            split[mu] = total
    return DomainReport(str(g), pairs, cusps, bool(check_def_cond(g)), constraints, split)


def classify(g: Matrix2) -> dict:
    """Everything the geometry layer knows about g, as plain JSON-ready data."""
    adm = check_def_cond(g)
    rep = domain_report(g)
    return {
        "matrix": str(g),
        "det": str(g.det()),
        "g(1)": act(g, ONE).label(),
        "g(inf)": act(g, INF).label(),
        "vertex_pairs": [list(p) for p in rep.vertex_pairs],
        "cusp": {f"{t}->{x}": v for (t, x), v in rep.cusp_flags.items()},
        "admissibility": adm.to_dict(),
        "constraints": [{"mu": m, "nu": n, "sum": s} for m, n, s in rep.constraints],
        "default_split": rep.default_split,
        "half_planes": rep.half_planes(),
    }


# named matrices used throughout the package
G_ETA = Matrix2(-1, 1, 0, 1)
G_XI = Matrix2(1, -1, 1, 0)
FLIP = Matrix2(0, 1, 1, 0)


def g_alpha(alpha) -> Matrix2:
    """The reflection T -> alpha - T."""
    return Matrix2(-1, alpha, 0, 1)


def h_d(d) -> Matrix2:
    return Matrix2(-1, 1, 0, d)


def h_c_prime(c) -> Matrix2:
    return Matrix2(1, -1, c, 0)

"""Formal lambda-calculus for quadratic left-symmetric conformal algebras.

The conformal algebra is the free C[d]-module over the algebra's basis,
plus a one-dimensional torsion centre with d acting as multiplication by
beta.  Elements carry explicit d-degrees per basis slot; products are
polynomials in formal variables lam (and mu after substitution) and are
never evaluated numerically.

For basis elements the product is

    a_lam b  =  d(b ld a) + (a circ b) + lam * (a star b) + alpha_lam(a, b) c

extended to the whole module by the sesquilinearity rules
(d x)_lam y = -lam x_lam y and x_lam (d y) = (d + lam) x_lam y.  The
central coefficient alpha comes from an optional cocycle (any object with
degree_cap and forms, see cohomology.CocycleFamily).

The windowed coefficient algebra lives at the bottom of the module: basis
a (x) t^m with |m| bounded, product

    (a (x) t^m)(b (x) t^n) = m (a rd b) (x) t^{m+n-1}
                             - n (b ld a) (x) t^{m+n-1}
                             + (a circ b) (x) t^{m+n}

with products leaving the window tracked separately, never dropped.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb

from .algebras import (AlgebraSpec, IdentityReport, IdentityError, prod_basis,
                       require_identity, tensor)
from .linalg import ZERO, ONE

PARTIAL = "∂"
LAM = "λ"
CDOT = "·"
CENTRAL_SYMBOL = "c"


class CentralInputError(Exception):
    pass


class WindowMismatch(Exception):
    pass


# ---------------------------------------------------------------------------
# module elements and lambda-polynomials

class ModuleElement:
    """Element of C[d]V + C*centre: terms keyed (d-degree, basis index)."""

    __slots__ = ("terms", "central")

    def __init__(self, terms=None, central=ZERO):
        self.terms = {k: Fraction(v) for k, v in (terms or {}).items() if v}
        self.central = Fraction(central)

    @classmethod
    def basis(cls, i, ddeg=0):
        return cls({(ddeg, i): ONE})

    @classmethod
    def from_vector(cls, vec, ddeg=0):
        return cls({(ddeg, i): c for i, c in enumerate(vec) if c})

    def is_zero(self):
        return not self.terms and not self.central

    def v_part(self):
        return ModuleElement(self.terms)

    def scaled(self, c):
        if not c:
            return ModuleElement()
        return ModuleElement({k: c * v for k, v in self.terms.items()}, c * self.central)

    def plus(self, other):
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, ZERO) + v
        return ModuleElement(t, self.central + other.central)

    def minus(self, other):
        return self.plus(other.scaled(-ONE))

    def apply_partial(self, beta, times=1):
        """Formal d applied `times` times; on the centre d acts as beta."""
        if times == 0:
            return self
        t = {(d + times, i): v for (d, i), v in self.terms.items()}
        return ModuleElement(t, self.central * beta ** times)

    def __eq__(self, other):
        return (isinstance(other, ModuleElement)
                and self.terms == other.terms and self.central == other.central)

    def __hash__(self):
        return hash((frozenset(self.terms.items()), self.central))

    def __repr__(self):
        return f"ModuleElement({self.terms!r}, central={self.central!r})"


class LambdaPoly:
    """Polynomial in lam with ModuleElement coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if not v.is_zero()}

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, LambdaPoly) and self.coeffs == other.coeffs

    def __repr__(self):
        return f"LambdaPoly({self.coeffs!r})"


class LambdaMuPoly:
    """Polynomial in (lam, mu) with ModuleElement coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if not v.is_zero()}

    def is_zero(self):
        return not self.coeffs

    def minus(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, ModuleElement()).minus(v)
        return LambdaMuPoly(out)

    def __eq__(self, other):
        return isinstance(other, LambdaMuPoly) and self.coeffs == other.coeffs

    def __repr__(self):
        return f"LambdaMuPoly({self.coeffs!r})"


def _acc(store, key, elt):
    if key in store:
        store[key] = store[key].plus(elt)
    else:
        store[key] = elt


def _alpha(cocycle, i, a, b):
    if cocycle is None or i > cocycle.degree_cap:
        return ZERO
    return cocycle.forms[i][a][b]


def _base_product(alg, i, j, cocycle, beta):
    """lam-coefficients of e_i _lam e_j as {lam-degree: ModuleElement}."""
    out = {}
    deg0 = {}
    for k, v in enumerate(prod_basis(alg, "ld", j, i)):
        if v:
            deg0[(1, k)] = v
    for k, v in enumerate(prod_basis(alg, "circ", i, j)):
        if v:
            deg0[(0, k)] = deg0.get((0, k), ZERO) + v
    e0 = ModuleElement(deg0, _alpha(cocycle, 0, i, j))
    if not e0.is_zero():
        out[0] = e0
    e1 = ModuleElement({(0, k): v for k, v in enumerate(prod_basis(alg, "star", i, j)) if v},
                       _alpha(cocycle, 1, i, j))
    if not e1.is_zero():
        out[1] = e1
    if cocycle is not None:
        for n in range(2, cocycle.degree_cap + 1):
            a = _alpha(cocycle, n, i, j)
            if a:
                out[n] = ModuleElement(central=a)
    return out


def _lambda_product(alg, x, y, cocycle, beta):
    """Product with central input coordinates ignored (centre annihilates)."""
    acc = {}
    for (d, i), cx in x.terms.items():
        for (e, j), cy in y.terms.items():
            scale = cx * cy * (-ONE) ** d
            base = _base_product(alg, i, j, cocycle, beta)
            for n, elt in base.items():
                # (d^d x)_lam (d^e y) = (-lam)^d (d+lam)^e (x_lam y)
                for k in range(e + 1):
                    c = scale * comb(e, k)
                    shifted = elt.apply_partial(beta, k).scaled(c)
                    _acc(acc, n + d + (e - k), shifted)
    return LambdaPoly(acc)


def lambda_product(alg, x, y, cocycle=None, beta=ZERO):
    if x.central or y.central:
        raise CentralInputError("lambda products of central elements vanish; "
                                "pass the V-part explicitly")
    return _lambda_product(alg, x, y, cocycle, Fraction(beta))


# ---------------------------------------------------------------------------
# conformal left-symmetry

def _outer_double(alg, x, y, z, cocycle, beta, inner_var):
    """((x_v y) _{lam+mu} z), v = lam if inner_var == 0 else mu."""
    inner = _lambda_product(alg, x, y, cocycle, beta)
    out = {}
    for n, m_n in inner.coeffs.items():
        mv = m_n.v_part()
        if mv.is_zero():
            continue
        p = _lambda_product(alg, mv, z, cocycle, beta)
        for q, elt in p.coeffs.items():
            # substitute the outer variable nu -> lam + mu binomially
            for s in range(q + 1):
                lm = [s, q - s]
                lm[inner_var] += n
                _acc(out, tuple(lm), elt.scaled(comb(q, s)))
    return LambdaMuPoly(out)


def _nested_double(alg, x, y, z, cocycle, beta, outer_var):
    """x_v (y_w z) with (v, w) = (lam, mu) if outer_var == 0 else (mu, lam)."""
    inner = _lambda_product(alg, y, z, cocycle, beta)
    out = {}
    for m, u in inner.coeffs.items():
        uv = u.v_part()
        if uv.is_zero():
            continue
        p = _lambda_product(alg, x, uv, cocycle, beta)
        for q, elt in p.coeffs.items():
            key = (q, m) if outer_var == 0 else (m, q)
            _acc(out, key, elt)
    return LambdaMuPoly(out)


def conformal_associator_defect(alg, a, b, c, cocycle=None, beta=ZERO):
    """(a_lam b)_{lam+mu} c - a_lam (b_mu c), minus the same with a,b and
    lam,mu swapped; zero iff the left-symmetry axiom holds on (a, b, c)."""
    beta = Fraction(beta)
    t1 = _outer_double(alg, a, b, c, cocycle, beta, 0)
    t2 = _nested_double(alg, a, b, c, cocycle, beta, 0)
    t3 = _outer_double(alg, b, a, c, cocycle, beta, 1)
    t4 = _nested_double(alg, b, a, c, cocycle, beta, 1)
    return t1.minus(t2).minus(t3.minus(t4))


def check_conformal_left_symmetry(alg, cocycle=None, beta=ZERO):
    dim = alg.dim
    violations = []
    for i, j, k in itertools.product(range(dim), repeat=3):
        defect = conformal_associator_defect(
            alg, ModuleElement.basis(i), ModuleElement.basis(j),
            ModuleElement.basis(k), cocycle, beta)
        for key in sorted(defect.coeffs):
            elt = defect.coeffs[key]
            residual = tuple(sorted(elt.terms.items())) + ((("central",), elt.central),) \
                if elt.central else tuple(sorted(elt.terms.items()))
            violations.append(("left_symmetry", (i, j, k) + key, residual))
    return IdentityReport("CONFORMAL_LEFT_SYMMETRIC", not violations, tuple(violations))


# ---------------------------------------------------------------------------
# builders

def build_rank_one(c):
    c = Fraction(c)
    return AlgebraSpec(f"rank_one({c})", 1, ("L",),
                       {"ld": tensor(1, {(0, 0, 0): 1}),
                        "circ": tensor(1, {(0, 0, 0): c})})


def build_current(alg):
    """Current-type conformal algebra of a left-symmetric product."""
    for op in ("ld", "rd", "dot"):
        if alg.has(op):
            raise IdentityError("current construction expects a single product (circ)")
    require_identity(alg, "LEFT_SYMMETRIC")
    ops = {}
    if alg.has("circ"):
        ops["circ"] = [[list(row) for row in plane] for plane in alg.ops["circ"]]
    return AlgebraSpec(f"{alg.name}~current", alg.dim, alg.basis, ops)


# ---------------------------------------------------------------------------
# windowed coefficient algebra

class WindowedElement:
    """Element of the coefficient algebra restricted to |exponent| <= window.

    terms hold in-window coordinates; escapes hold products that left the
    window (kept so checks can refuse rather than silently truncate);
    central is the coordinate on the adjoined centre (at t^{-1}).
    """

    __slots__ = ("window", "terms", "central", "escapes")

    def __init__(self, window, terms=None, central=ZERO, escapes=None):
        self.window = window
        self.terms = {k: Fraction(v) for k, v in (terms or {}).items() if v}
        self.central = Fraction(central)
        self.escapes = {k: Fraction(v) for k, v in (escapes or {}).items() if v}
        for (_, m) in self.terms:
            if abs(m) > window:
                raise WindowMismatch(f"exponent {m} outside window {window}")

    @classmethod
    def basis(cls, window, i, m):
        return cls(window, {(i, m): ONE})

    def is_zero(self):
        return not self.terms and not self.central and not self.escapes

    def v_part(self):
        return WindowedElement(self.window, self.terms, ZERO, self.escapes)

    def __eq__(self, other):
        return (isinstance(other, WindowedElement) and self.window == other.window
                and self.terms == other.terms and self.central == other.central
                and self.escapes == other.escapes)

    def __repr__(self):
        return (f"WindowedElement(window={self.window}, terms={self.terms!r}, "
                f"central={self.central!r}, escapes={self.escapes!r})")


def _eta(cocycle, i, j, m, n):
    """Central coefficient of (e_i (x) t^m)(e_j (x) t^n) from a cocycle."""
    if cocycle is None:
        return ZERO
    out = ZERO
    if m + n + 1 == 0:
        out += _alpha(cocycle, 0, i, j)
    if m + n == 0:
        out += m * _alpha(cocycle, 1, i, j)
    if m + n - 1 == 0:
        out += m * (m - 1) * _alpha(cocycle, 2, i, j)
    if m + n - 2 == 0:
        out += m * (m - 1) * (m - 2) * _alpha(cocycle, 3, i, j)
    return out


def coeff_product(alg, x, y, cocycle=None):
    if x.window != y.window:
        raise WindowMismatch(f"windows differ: {x.window} vs {y.window}")
    if x.escapes or y.escapes:
        raise WindowMismatch("operand carries escaped terms; result undefined")
    window = x.window
    terms = {}
    escapes = {}
    central = ZERO

    def place(vec, exp, scale):
        target = terms if abs(exp) <= window else escapes
        for k, v in enumerate(vec):
            if v:
                key = (k, exp)
                target[key] = target.get(key, ZERO) + scale * v

    for (i, m), cx in x.terms.items():
        for (j, n), cy in y.terms.items():
            s = cx * cy
            drop = [m * r - n * l for r, l in
                    zip(prod_basis(alg, "rd", i, j), prod_basis(alg, "ld", j, i))]
            if any(drop):
                place(drop, m + n - 1, s)
            keep = prod_basis(alg, "circ", i, j)
            if any(keep):
                place(keep, m + n, s)
            central += s * _eta(cocycle, i, j, m, n)
    return WindowedElement(window, terms, central, escapes)


def check_coeff_left_symmetry(alg, window, cocycle=None):
    """Left-symmetry of the windowed coefficient algebra.

    Exponent triples whose intermediate or final products leave the window
    are skipped (and counted), never truncated.
    """
    dim = alg.dim
    violations = []
    skipped = 0
    exps = range(-window, window + 1)
    for i, j, k in itertools.product(range(dim), repeat=3):
        for m, n, p in itertools.product(exps, repeat=3):
            x = WindowedElement.basis(window, i, m)
            y = WindowedElement.basis(window, j, n)
            z = WindowedElement.basis(window, k, p)
            xy = coeff_product(alg, x, y, cocycle)
            yx = coeff_product(alg, y, x, cocycle)
            yz = coeff_product(alg, y, z, cocycle)
            xz = coeff_product(alg, x, z, cocycle)
            if xy.escapes or yx.escapes or yz.escapes or xz.escapes:
                skipped += 1
                continue
            t1 = coeff_product(alg, xy.v_part(), z, cocycle)
            t2 = coeff_product(alg, x, yz.v_part(), cocycle)
            t3 = coeff_product(alg, yx.v_part(), z, cocycle)
            t4 = coeff_product(alg, y, xz.v_part(), cocycle)
            if t1.escapes or t2.escapes or t3.escapes or t4.escapes:
                skipped += 1
                continue
            res = {}
            for sign, t in ((1, t1), (-1, t2), (-1, t3), (1, t4)):
                for key, v in t.terms.items():
                    res[key] = res.get(key, ZERO) + sign * v
            res = {k2: v for k2, v in res.items() if v}
            rc = t1.central - t2.central - t3.central + t4.central
            if res or rc:
                residual = tuple(sorted(res.items()))
                if rc:
                    residual += ((("central",), rc),)
                violations.append(((i, j, k), (m, n, p), residual))
    return IdentityReport("COEFF_LEFT_SYMMETRIC", not violations,
                          tuple(violations), skipped)


# ---------------------------------------------------------------------------
# pretty-printing

def _fmt_monomial(coeff, ddeg, ldeg):
    parts = []
    if ddeg == 1:
        parts.append(PARTIAL)
    elif ddeg > 1:
        parts.append(f"{PARTIAL}^{ddeg}")
    if ldeg == 1:
        parts.append(LAM)
    elif ldeg > 1:
        parts.append(f"{LAM}^{ldeg}")
    body = "".join(parts)
    if not body:
        return str(coeff)
    if coeff == 1:
        return body
    if coeff == -1:
        return "-" + body
    return f"{coeff}{body}"


def _join_terms(terms):
    out = terms[0]
    for t in terms[1:]:
        if t.startswith("-"):
            out += " - " + t[1:]
        else:
            out += " + " + t
    return out


def _poly_chunk(poly, label):
    keys = sorted(poly, key=lambda dl: (-dl[0], -dl[1]))
    monos = [_fmt_monomial(poly[key], *key) for key in keys]
    s = _join_terms(monos)
    if len(monos) > 1:
        return f"({s}){CDOT}{label}"
    if s == "1":
        return label
    return f"{s}{CDOT}{label}"


def format_lambda_poly(lp, basis):
    """Stable rendering: per basis element, d-degree then lam-degree
    descending; the central symbol comes last."""
    per_basis = [dict() for _ in basis]
    central = {}
    for ldeg, elt in lp.coeffs.items():
        for (d, i), coeff in elt.terms.items():
            key = (d, ldeg)
            per_basis[i][key] = per_basis[i].get(key, ZERO) + coeff
        if elt.central:
            central[(0, ldeg)] = central.get((0, ldeg), ZERO) + elt.central
    chunks = []
    for i, label in enumerate(basis):
        poly = {k: v for k, v in per_basis[i].items() if v}
        if poly:
            chunks.append(_poly_chunk(poly, label))
    central = {k: v for k, v in central.items() if v}
    if central:
        chunks.append(_poly_chunk(central, CENTRAL_SYMBOL))
    if not chunks:
        return "0"
    return _join_terms(chunks)

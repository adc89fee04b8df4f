"""Structure-constant algebras with several named bilinear products.

An algebra lives on Q^dim.  Each stored product is a dim x dim x dim tensor
``c`` with e_i op e_j = sum_k c[i][j][k] e_k; an absent tensor means the
product is identically zero.  Stored op names:

    ld      left-type product  a <| b
    rd      right-type product a |> b
    circ    the left-symmetric product a o b
    dot     a commutative (Zinbiel / associative) product a . b
    bracket a Lie bracket, only present on associated GD output

Derived (never stored, except bracket on GD output):

    ast      a * b = a <| b + a |> b
    star     a (*) b = a |> b + b <| a
    bracket  [a, b] = a o b - b o a   (when no bracket tensor is stored)

The identity catalog evaluates residuals on basis triples; by
multilinearity that is exhaustive.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from fractions import Fraction

from .linalg import ZERO, DimensionMismatch, mat_mul, mat_vec, unit, vadd, vsub, vzero


class AlgebraError(Exception):
    pass


class UnknownOp(AlgebraError):
    pass


class UnknownIdentity(AlgebraError):
    pass


class MissingAuxMap(AlgebraError):
    pass


class MissingOps(AlgebraError):
    pass


class MissingMaps(AlgebraError):
    pass


class IdentityError(AlgebraError):
    """A required identity system failed; carries the offending report."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


STORED_OPS = ("ld", "rd", "circ", "dot", "bracket")
DERIVED_OPS = ("ast", "star", "bracket")


def tensor(dim, entries=None):
    """Dense mutable dim^3 tensor from a {(i, j, k): scalar} dict."""
    t = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
    for (i, j, k), v in (entries or {}).items():
        t[i][j][k] = Fraction(v)
    return t


def _freeze_tensor(t, dim):
    out = []
    for i in range(dim):
        plane = []
        for j in range(dim):
            row = t[i][j]
            if len(row) != dim:
                raise DimensionMismatch("tensor slice has wrong length")
            plane.append(tuple(Fraction(x) for x in row))
        if len(t[i]) != dim:
            raise DimensionMismatch("tensor slice has wrong length")
        out.append(tuple(plane))
    if len(t) != dim:
        raise DimensionMismatch("tensor has wrong first dimension")
    return tuple(out)


def _tensor_is_zero(t):
    return all(not x for plane in t for row in plane for x in row)


@dataclass(frozen=True)
class AlgebraSpec:
    """Immutable algebra: basis labels plus structure tensors per op."""

    name: str
    dim: int
    basis: tuple
    ops: dict = field(default_factory=dict)

    def __post_init__(self):
        basis = tuple(self.basis)
        if len(basis) != self.dim:
            raise DimensionMismatch(f"{len(basis)} labels for dim {self.dim}")
        if len(set(basis)) != self.dim:
            raise ValueError("basis labels must be pairwise distinct")
        clean = {}
        for op, t in self.ops.items():
            if op not in STORED_OPS:
                raise UnknownOp(f"cannot store op {op!r}")
            ft = _freeze_tensor(t, self.dim)
            if not _tensor_is_zero(ft):
                clean[op] = ft
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "ops", clean)

    def index(self, label):
        try:
            return self.basis.index(label)
        except ValueError:
            raise KeyError(f"unknown basis label {label!r}") from None

    def has(self, op):
        return op in self.ops


@dataclass(frozen=True)
class LinearMapSpec:
    """A linear map on coordinates, as a dense dim x dim matrix."""

    matrix: tuple

    def __post_init__(self):
        m = tuple(tuple(Fraction(x) for x in row) for row in self.matrix)
        n = len(m)
        for row in m:
            if len(row) != n:
                raise DimensionMismatch("derivation matrix must be square")
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self):
        return len(self.matrix)

    def apply(self, v):
        return mat_vec([list(r) for r in self.matrix], v)


@dataclass(frozen=True)
class RepresentationSpec:
    """Module of dimension module_dim with named map families l, r, rho."""

    module_dim: int
    maps: dict

    def __post_init__(self):
        clean = {}
        for key, mats in self.maps.items():
            fam = tuple(tuple(tuple(Fraction(x) for x in row) for row in m)
                        for m in mats)
            for m in fam:
                if len(m) != self.module_dim or any(len(r) != self.module_dim for r in m):
                    raise DimensionMismatch("representation matrix shape mismatch")
            clean[key] = fam
        object.__setattr__(self, "maps", clean)


@dataclass(frozen=True)
class IdentityReport:
    identity_id: str
    passed: bool
    violations: tuple = ()
    skipped: int = 0

    def first(self):
        return self.violations[0] if self.violations else None


# ---------------------------------------------------------------------------
# products

def prod_basis(alg, op, i, j):
    """e_i op e_j as a coordinate vector (derived ops included)."""
    ops = alg.ops
    if op in ("ld", "rd", "circ", "dot"):
        t = ops.get(op)
        return vzero(alg.dim) if t is None else list(t[i][j])
    if op == "ast":
        return vadd(prod_basis(alg, "ld", i, j), prod_basis(alg, "rd", i, j))
    if op == "star":
        return vadd(prod_basis(alg, "rd", i, j), prod_basis(alg, "ld", j, i))
    if op == "bracket":
        t = ops.get("bracket")
        if t is not None:
            return list(t[i][j])
        return vsub(prod_basis(alg, "circ", i, j), prod_basis(alg, "circ", j, i))
    raise UnknownOp(f"unknown op {op!r}")


def eval_product(alg, op, x, y):
    """Bilinear extension of op to coordinate vectors."""
    if len(x) != alg.dim or len(y) != alg.dim:
        raise DimensionMismatch("operand length does not match algebra dim")
    out = vzero(alg.dim)
    for i, xi in enumerate(x):
        if not xi:
            continue
        for j, yj in enumerate(y):
            if not yj:
                continue
            p = prod_basis(alg, op, i, j)
            c = xi * yj
            for k in range(alg.dim):
                if p[k]:
                    out[k] += c * p[k]
    return out


def novikov_star(alg):
    """Which stored/derived op carries the Novikov product of this spec."""
    if alg.has("ld") or alg.has("rd"):
        return "ast"
    return "circ"


def op_tensor(alg, op):
    """Dense tensor of any op (derived ones materialized)."""
    return [[prod_basis(alg, op, i, j) for j in range(alg.dim)] for i in range(alg.dim)]


# ---------------------------------------------------------------------------
# identity catalog

def _ev(alg, op):
    return lambda x, y: eval_product(alg, op, x, y)


def _r_left_symmetric(op):
    def res(alg, aux, a, b, c):
        p = _ev(alg, op)
        return vsub(vsub(p(p(a, b), c), p(a, p(b, c))),
                    vsub(p(p(b, a), c), p(b, p(a, c))))
    return res


def _r_right_commutative(op):
    def res(alg, aux, a, b, c):
        p = _ev(alg, op)
        return vsub(p(p(a, b), c), p(p(a, c), b))
    return res


def _r_commutative(op):
    def res(alg, aux, a, b):
        p = _ev(alg, op)
        return vsub(p(a, b), p(b, a))
    return res


def _r_associative(op):
    def res(alg, aux, a, b, c):
        p = _ev(alg, op)
        return vsub(p(p(a, b), c), p(a, p(b, c)))
    return res


def _r_zinbiel(alg, aux, a, b, c):
    d = _ev(alg, "dot")
    return vsub(d(a, d(b, c)), d(vadd(d(a, b), d(b, a)), c))


def _r_pn1(alg, aux, a, b, c):
    ld, rd = _ev(alg, "ld"), _ev(alg, "rd")
    lhs = rd(a, rd(b, c))
    rhs = vadd(vsub(rd(vadd(rd(a, b), ld(a, b)), c), rd(vadd(rd(b, a), ld(b, a)), c)),
               rd(b, rd(a, c)))
    return vsub(lhs, rhs)


def _r_pn2(alg, aux, a, b, c):
    ld, rd = _ev(alg, "ld"), _ev(alg, "rd")
    lhs = rd(a, ld(b, c))
    rhs = vsub(vadd(ld(rd(a, b), c), ld(b, vadd(ld(a, c), rd(a, c)))), ld(ld(b, a), c))
    return vsub(lhs, rhs)


def _r_pn3(alg, aux, a, b, c):
    ld, rd = _ev(alg, "ld"), _ev(alg, "rd")
    return vsub(rd(vadd(ld(a, b), rd(a, b)), c), ld(rd(a, c), b))


def _r_pn4(alg, aux, a, b, c):
    ld = _ev(alg, "ld")
    return vsub(ld(ld(a, b), c), ld(ld(a, c), b))


def _r_pg1(alg, aux, a, b, c):
    ld, co = _ev(alg, "ld"), _ev(alg, "circ")
    lhs = vsub(vsub(ld(c, vsub(co(a, b), co(b, a))), co(a, ld(c, b))), ld(co(b, c), a))
    rhs = vsub([-t for t in co(b, ld(c, a))], ld(co(a, c), b))
    return vsub(lhs, rhs)


def _r_pg2(alg, aux, a, b, c):
    ld, rd, co = _ev(alg, "ld"), _ev(alg, "rd"), _ev(alg, "circ")
    lhs = vadd(rd(vsub(co(a, b), co(b, a)), c), co(vadd(ld(a, b), rd(a, b)), c))
    rhs = vadd(vsub(rd(a, co(b, c)), co(b, rd(a, c))), ld(co(a, c), b))
    return vsub(lhs, rhs)


def _r_leibniz(alg, aux, a, b):
    if aux is None:
        raise MissingAuxMap("DERIVATION needs an aux linear map")
    d = _ev(alg, "dot")
    da, db = aux.apply(a), aux.apply(b)
    return vsub(aux.apply(d(a, b)), vadd(d(da, b), d(a, db)))


def _gd_ops(alg):
    # bracket falls back to the circ commutator (zero when circ is absent),
    # so GD_COMPAT is checkable on any spec
    st = novikov_star(alg)
    return _ev(alg, st), _ev(alg, "bracket")


def _r_gd_skew(alg, aux, a, b):
    _, br = _gd_ops(alg)
    return vadd(br(a, b), br(b, a))


def _r_gd_jacobi(alg, aux, a, b, c):
    _, br = _gd_ops(alg)
    return vadd(vadd(br(br(a, b), c), br(br(b, c), a)), br(br(c, a), b))


def _r_gd_ls(alg, aux, a, b, c):
    star, _ = _gd_ops(alg)
    return vsub(vsub(star(star(a, b), c), star(a, star(b, c))),
                vsub(star(star(b, a), c), star(b, star(a, c))))


def _r_gd_rc(alg, aux, a, b, c):
    star, _ = _gd_ops(alg)
    return vsub(star(star(a, b), c), star(star(a, c), b))


def _r_gd_mixed(alg, aux, a, b, c):
    star, br = _gd_ops(alg)
    out = br(star(a, b), c)
    out = vsub(out, br(star(a, c), b))
    out = vadd(out, star(br(a, b), c))
    out = vsub(out, star(br(a, c), b))
    out = vsub(out, star(a, br(b, c)))
    return out


def _r_lsp1(alg, aux, a, b, c):
    d, co = _ev(alg, "dot"), _ev(alg, "circ")
    return vsub(co(d(a, b), c), d(a, co(b, c)))


def _r_lsp2(alg, aux, a, b, c):
    d, co = _ev(alg, "dot"), _ev(alg, "circ")
    return vsub(vsub(d(co(a, b), c), co(a, d(b, c))),
                vsub(d(co(b, a), c), co(b, d(a, c))))


def _s1(alg):
    ld = _ev(alg, "ld")
    return lambda x, y: ld(y, x)


# The nine quadratic identities are small sums of nested double products;
# written out one by one so each stays auditable against its source.

def _qq(alg):
    s1 = _s1(alg)
    s2 = _ev(alg, "star")
    co = _ev(alg, "circ")
    return s1, s2, co


def _r_q1(alg, aux, a, b, c):
    s1, s2, co = _qq(alg)
    return vsub(s1(a, s1(b, c)), s1(b, s1(a, c)))


def _r_q2(alg, aux, a, b, c):
    s1, s2, co = _qq(alg)
    lhs = vadd(vsub(s1(s1(a, b), c), s1(s2(a, b), c)),
               vadd(s1(a, s1(b, c)), s2(a, s1(b, c))))
    rhs = vadd(s1(s1(b, a), c), s1(b, s2(a, c)))
    return vsub(lhs, rhs)


def _r_q3(alg, aux, a, b, c):
    s1, s2, co = _qq(alg)
    lhs = vadd(s1(s1(a, b), c), s1(a, s2(b, c)))
    rhs = vadd(vadd(vsub(s1(s1(b, a), c), s1(s2(b, a), c)), s1(b, s1(a, c))),
               s2(b, s1(a, c)))
    return vsub(lhs, rhs)


def _r_q4(alg, aux, a, b, c):
    s1, s2, co = _qq(alg)
    lhs = vadd(vsub(s2(s1(a, b), c), s2(s2(a, b), c)), s2(a, s1(b, c)))
    rhs = s2(s1(b, a), c)
    return vsub(lhs, rhs)


def _r_q5(alg, aux, a, b, c):
    s1, s2, co = _qq(alg)
    lhs = vadd(vsub([2 * t for t in s2(s1(a, b), c)], s2(s2(a, b), c)), s2(a, s2(b, c)))
    rhs = vadd(vsub([2 * t for t in s2(s1(b, a), c)], s2(s2(b, a), c)), s2(b, s2(a, c)))
    return vsub(lhs, rhs)


def _r_q6(alg, aux, a, b, c):
    s1, s2, co = _qq(alg)
    lhs = s2(s1(a, b), c)
    rhs = vadd(vsub(s2(s1(b, a), c), s2(s2(b, a), c)), s2(b, s1(a, c)))
    return vsub(lhs, rhs)


def _r_q7(alg, aux, a, b, c):
    s1, s2, co = _qq(alg)
    lhs = vsub(vsub(s1(co(a, b), c), co(a, s1(b, c))), s1(a, co(b, c)))
    rhs = vsub(vsub(s1(co(b, a), c), co(b, s1(a, c))), s1(b, co(a, c)))
    return vsub(lhs, rhs)


def _r_q8(alg, aux, a, b, c):
    s1, s2, co = _qq(alg)
    lhs = vadd(vadd(vsub(vsub(co(s1(a, b), c), s2(co(a, b), c)), co(s2(a, b), c)),
                    co(a, s1(b, c))), s2(a, co(b, c)))
    rhs = vadd(vsub(co(s1(b, a), c), s2(co(b, a), c)), co(b, s2(a, c)))
    return vsub(lhs, rhs)


def _r_q9(alg, aux, a, b, c):
    s1, s2, co = _qq(alg)
    lhs = vadd(vsub(co(s1(a, b), c), s2(co(a, b), c)), co(a, s2(b, c)))
    rhs = vadd(vadd(vsub(vsub(co(s1(b, a), c), s2(co(b, a), c)),
                         co(s2(b, a), c)), co(b, s1(a, c))),
               s2(b, co(a, c)))
    return vsub(lhs, rhs)


# (label, arity, residual)
_LS = ("left_symmetry", 3, _r_left_symmetric("circ"))
_RC = ("right_commutativity", 3, _r_right_commutative("circ"))

CATALOG = {
    "LEFT_SYMMETRIC": (_LS,),
    "NOVIKOV": (_LS, _RC),
    "ZINBIEL": (("zinbiel", 3, _r_zinbiel),),
    "COMM_ASSOC": (("commutativity", 2, _r_commutative("dot")),
                   ("associativity", 3, _r_associative("dot"))),
    "PRE_NOVIKOV": (("pn1", 3, _r_pn1), ("pn2", 3, _r_pn2),
                    ("pn3", 3, _r_pn3), ("pn4", 3, _r_pn4)),
    "PRE_GD_COMPAT": (("pg1", 3, _r_pg1), ("pg2", 3, _r_pg2)),
    "PRE_GD": (("pn1", 3, _r_pn1), ("pn2", 3, _r_pn2),
               ("pn3", 3, _r_pn3), ("pn4", 3, _r_pn4),
               _LS,
               ("pg1", 3, _r_pg1), ("pg2", 3, _r_pg2)),
    "GD_COMPAT": (("skew", 2, _r_gd_skew), ("jacobi", 3, _r_gd_jacobi),
                  ("novikov_left_symmetry", 3, _r_gd_ls),
                  ("novikov_right_commutativity", 3, _r_gd_rc),
                  ("mixed_compat", 3, _r_gd_mixed)),
    "LS_POISSON": (_LS,
                   ("dot_commutativity", 2, _r_commutative("dot")),
                   ("dot_associativity", 3, _r_associative("dot")),
                   ("lsp1", 3, _r_lsp1), ("lsp2", 3, _r_lsp2)),
    "NOVIKOV_POISSON": (_LS, _RC,
                        ("dot_commutativity", 2, _r_commutative("dot")),
                        ("dot_associativity", 3, _r_associative("dot")),
                        ("lsp1", 3, _r_lsp1), ("lsp2", 3, _r_lsp2)),
    "DERIVATION": (("leibniz", 2, _r_leibniz),),
    "QUADRATIC_9": (("q1", 3, _r_q1), ("q2", 3, _r_q2), ("q3", 3, _r_q3),
                    ("q4", 3, _r_q4), ("q5", 3, _r_q5), ("q6", 3, _r_q6),
                    ("q7", 3, _r_q7), ("q8", 3, _r_q8), ("q9", 3, _r_q9)),
}


def normalize_identity_id(identity_id):
    return identity_id.strip().replace("-", "_").upper()


def check_identity(alg, identity_id, aux=None, triples=None, pairs=None):
    """Evaluate an identity system on basis tuples.

    triples / pairs restrict the checked index tuples (used for truncated
    instances whose products are only faithful on a sub-domain); by default
    everything over basis^arity is checked, which is complete by
    multilinearity.
    """
    key = normalize_identity_id(identity_id)
    if key not in CATALOG:
        raise UnknownIdentity(f"unknown identity {identity_id!r}")
    if key == "DERIVATION" and aux is None:
        raise MissingAuxMap("DERIVATION needs --derivation / aux=LinearMapSpec")
    if aux is not None and aux.dim != alg.dim:
        raise DimensionMismatch("aux map dimension does not match the algebra")
    dim = alg.dim
    units = [unit(dim, i) for i in range(dim)]
    violations = []
    for label, arity, res in CATALOG[key]:
        if arity == 2:
            domain = pairs if pairs is not None else itertools.product(range(dim), repeat=2)
        else:
            domain = triples if triples is not None else itertools.product(range(dim), repeat=3)
        for idx in domain:
            vecs = [units[t] for t in idx]
            r = res(alg, aux, *vecs)
            if any(r):
                violations.append((label, tuple(idx), tuple(r)))
    return IdentityReport(key, not violations, tuple(violations))


def pre_gd_suite(alg, triples=None):
    """The full suite a pre-GD algebra must satisfy."""
    return check_identity(alg, "PRE_GD", triples=triples)


def require_identity(alg, identity_id, aux=None, triples=None, pairs=None):
    rep = check_identity(alg, identity_id, aux=aux, triples=triples, pairs=pairs)
    if not rep.passed:
        label, idx, res = rep.first()
        raise IdentityError(
            f"{alg.name or 'algebra'} fails {rep.identity_id}/{label} at {idx}: residual {res}",
            rep)
    return rep


# ---------------------------------------------------------------------------
# representations

def _mat(alg, fill):
    return [[fill(k, j) for j in range(alg.dim)] for k in range(alg.dim)]


def left_mult_matrix(alg, op, a):
    """Matrix of v -> e_a op v."""
    t = op_tensor(alg, op)
    return _mat(alg, lambda k, j: t[a][j][k])


def right_mult_matrix(alg, op, a):
    """Matrix of v -> v op e_a."""
    t = op_tensor(alg, op)
    return _mat(alg, lambda k, j: t[j][a][k])


def regular_novikov_representation(alg):
    l = tuple(left_mult_matrix(alg, "rd", a) for a in range(alg.dim))
    r = tuple(right_mult_matrix(alg, "ld", a) for a in range(alg.dim))
    return RepresentationSpec(alg.dim, {"l": l, "r": r})


def regular_gd_representation(alg):
    base = regular_novikov_representation(alg)
    rho = tuple(left_mult_matrix(alg, "circ", a) for a in range(alg.dim))
    return RepresentationSpec(alg.dim, {**base.maps, "rho": rho})


def _map_of(rep, key, vec):
    n = rep.module_dim
    out = [[ZERO] * n for _ in range(n)]
    for a, c in enumerate(vec):
        if not c:
            continue
        m = rep.maps[key][a]
        for i in range(n):
            row = m[i]
            for j in range(n):
                if row[j]:
                    out[i][j] += c * row[j]
    return out


def check_representation(alg, rep, kind):
    """Representation axioms over basis pairs; matrices compared exactly."""
    need = {"novikov": ("l", "r"), "gd": ("l", "r", "rho")}.get(kind)
    if need is None:
        raise ValueError(f"kind must be novikov or gd, got {kind!r}")
    for key in need:
        if key not in rep.maps or len(rep.maps[key]) != alg.dim:
            raise MissingMaps(f"representation lacks map family {key!r}")
    st = novikov_star(alg)
    dim = alg.dim

    def M(key, vec):
        return _map_of(rep, key, vec)

    def msub(a, b):
        return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]

    def madd(a, b):
        return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]

    violations = []

    def record(label, i, j, mat):
        flat = tuple(x for row in mat for x in row)
        if any(flat):
            violations.append((label, (i, j), flat))

    for a in range(dim):
        for b in range(dim):
            ea, eb = unit(dim, a), unit(dim, b)
            ab = eval_product(alg, st, ea, eb)
            ba = eval_product(alg, st, eb, ea)
            la, lb = M("l", ea), M("l", eb)
            ra, rb = M("r", ea), M("r", eb)
            # l([a,b]_ast) = [l(a), l(b)]
            record("rep_n1", a, b,
                   msub(M("l", vsub(ab, ba)), msub(mat_mul(la, lb), mat_mul(lb, la))))
            # l(a)r(b) - r(b)l(a) = r(a*b) - r(b)r(a)
            record("rep_n2", a, b,
                   msub(msub(mat_mul(la, rb), mat_mul(rb, la)),
                        msub(M("r", ab), mat_mul(rb, ra))))
            # l(a*b) = r(b)l(a)
            record("rep_n3", a, b, msub(M("l", ab), mat_mul(rb, la)))
            # r(a)r(b) = r(b)r(a)
            record("rep_n4", a, b, msub(mat_mul(ra, rb), mat_mul(rb, ra)))
            if kind == "gd":
                br = eval_product(alg, "bracket", ea, eb)
                pa, pb = M("rho", ea), M("rho", eb)
                record("rep_lie", a, b,
                       msub(M("rho", br), msub(mat_mul(pa, pb), mat_mul(pb, pa))))
                # rho(a)l(b) + rho(b*a) + l([b,a]) = r(a)rho(b) + l(b)rho(a)
                lhs = madd(madd(mat_mul(pa, lb), M("rho", ba)), M("l", vsub(ba, ab)))
                rhs = madd(mat_mul(ra, pb), mat_mul(lb, pa))
                record("rep_g1", a, b, msub(lhs, rhs))
                # rho(a)r(b) - rho(b)r(a) - r(b)rho(a) + r(a)rho(b) = r([a,b])
                lhs = madd(msub(msub(mat_mul(pa, rb), mat_mul(pb, ra)),
                                mat_mul(rb, pa)), mat_mul(ra, pb))
                record("rep_g2", a, b, msub(lhs, M("r", br)))
    kindkey = "REPRESENTATION_" + kind.upper()
    return IdentityReport(kindkey, not violations, tuple(violations))


# ---------------------------------------------------------------------------
# associated ordinary algebras

def associated(alg, which):
    """The Novikov algebra (ast) or GD algebra (ast, bracket) of a pre-spec."""
    if which == "novikov":
        t = op_tensor(alg, "ast")
        return AlgebraSpec(f"{alg.name}~novikov", alg.dim, alg.basis, {"circ": t})
    if which == "gd":
        t = op_tensor(alg, "ast")
        br = op_tensor(alg, "bracket")
        return AlgebraSpec(f"{alg.name}~gd", alg.dim, alg.basis,
                           {"circ": t, "bracket": br})
    raise MissingOps(f"associated() takes 'novikov' or 'gd', got {which!r}")

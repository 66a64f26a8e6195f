"""The inequality table.

Each ``_xxx`` function receives a memoising :class:`~numrad.registry.Ctx`, the
operators keyed by slot name, validated parameters and (for vector-level
checks) an array of unit row vectors, and returns the list of parts.

Power functions are fixed to ``h(x) = x**p`` and ``f(t) = t**alpha``,
``g(t) = t**(1 - alpha)``, so ``h(|T|**q)`` is ``|T|**(q*p)``.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.optimize import minimize_scalar

from .blockops import block2, direct_sum, off_diag
from .decompositions import cartesian
from .radius import w_nonneg_entries
from .registry import CheckDef, ParamSpec, Part, Witness, register

INF = math.inf

R_PARAM = ParamSpec("r", (1.0, 1.5, 2.0, 3.0), 1.0, INF)
S_EXP = ParamSpec("s", (1.0, 1.5, 2.0, 3.0), 1.0, INF)
P_PARAM = ParamSpec("p", (1.0, 1.5, 2.0, 3.0), 1.0, INF)
ALPHA = ParamSpec("alpha", (0.25, 0.5, 0.75), 0.0, 1.0, lo_open=True, hi_open=True)
NU = ParamSpec("nu", (0.25, 0.5, 0.75), 0.0, 1.0, lo_open=True, hi_open=True)
# s of the (s,t)-Aluthge transform, t = 1 - s
S_AL = ParamSpec("s", (0.5, 0.25, 0.75, 0.0, 1.0), 0.0, 1.0)
THETA = ParamSpec("theta", (0.0, math.pi / 3, math.pi), 0.0, 2 * math.pi, hi_open=True)
N_POW = ParamSpec("n_pow", (2, 3), 1, 16, integer=True)
N_POW_ALL = ParamSpec("n_pow", (1, 2, 3), 1, 16, integer=True)

SELF_ADJOINT_CLASSES = ("normal", "selfadjoint", "positive", "unitary")


def adj(m):
    return np.conj(m).T


def qform(m, xs):
    """``<M x, x>`` for every row ``x`` of ``xs``."""
    return np.einsum("ki,ij,kj->k", np.conj(xs), m, xs)


def inner(a, b):
    """Row-wise ``<a, b>`` (linear in the first argument)."""
    return np.sum(a * np.conj(b), axis=1)


def worst_part(name, lhs, rhs):
    """Collapse per-vector sides to the vector with the least slack."""
    lhs = np.asarray(lhs, dtype=float)
    rhs = np.broadcast_to(np.asarray(rhs, dtype=float), lhs.shape)
    scaled = (rhs - lhs) / np.maximum(1.0, np.abs(rhs))
    i = int(np.argmin(scaled))
    return Part(name, float(lhs[i]), float(rhs[i]))


def with_witnesses(ctx, xs, *mats):
    """Append the numerical-radius witnesses of ``mats`` to the vector sample."""
    from .radius import numerical_radius

    extra = [numerical_radius(m).witness for m in mats]
    return np.vstack([xs] + [e[None, :] for e in extra])


# -- baseline ---------------------------------------------------------------


def _n1(ctx, o, p, _):
    a = o["A"]
    return [
        Part("lower", 0.5 * ctx.norm(a), ctx.w(a)),
        Part("upper", ctx.w(a), ctx.norm(a)),
    ]


def _ref1(ctx, o, p, _):
    t = o["T"]
    n = p["n_pow"]
    return [Part("power", ctx.w(np.linalg.matrix_power(t, n)), ctx.w(t) ** n)]


def _n2(ctx, o, p, _):
    a = o["A"]
    mid = 0.5 * ctx.norm(ctx.absp(a) + ctx.absp_star(a))
    outer = 0.5 * (ctx.norm(a) + math.sqrt(ctx.norm(a @ a)))
    return [Part("w<=mid", ctx.w(a), mid), Part("mid<=outer", mid, outer)]


def _n3(ctx, o, p, _):
    a = o["A"]
    m = ctx.norm(adj(a) @ a + a @ adj(a))
    w2 = ctx.w(a) ** 2
    return [Part("lower", 0.25 * m, w2), Part("upper", w2, 0.5 * m)]


# -- sums and products --------------------------------------------------------


def _t25(ctx, o, p, xs):
    x, y = o["X"], o["Y"]
    r, s, al = p["r"], p["s"], p["alpha"]
    rhs = 0.5 * ctx.norm(
        ctx.absp(x, 2 * al * r)
        + ctx.absp_star(x, 2 * (1 - al) * r)
        + ctx.absp(y, 2 * al * s)
        + ctx.absp_star(y, 2 * (1 - al) * s)
    )
    xs = with_witnesses(ctx, xs, x, y)
    lhs = np.abs(qform(x, xs)) ** r + np.abs(qform(y, xs)) ** s
    return [worst_part("vector", lhs, rhs)]


def _c26(ctx, o, p, _):
    a2 = o["A"] @ o["A"]
    return [Part("square", ctx.w(a2), 0.5 * ctx.norm(ctx.absp(a2) + ctx.absp_star(a2)))]


def _c27(ctx, o, p, _):
    a, b = o["A"], o["B"]
    r = p["r"]
    x = adj(b) @ a
    return [Part("product", ctx.w(x) ** r, 0.5 * ctx.norm(ctx.absp(x, r) + ctx.absp_star(x, r)))]


def _t28(ctx, o, p, xs):
    a, b = o["A"], o["B"]
    r, s, al, nu = p["r"], p["s"], p["alpha"], p["nu"]
    inner_a = ctx.absp(a, 2 * r * nu / al) + ctx.absp_star(a, 2 * r * (1 - nu) / al)
    inner_b = ctx.absp(b, 2 * s * nu / (1 - al)) + ctx.absp_star(b, 2 * s * (1 - nu) / (1 - al))
    rhs = 0.5 * ctx.norm(al * inner_a + (1 - al) * inner_b)
    xs = with_witnesses(ctx, xs, a, b)
    lhs = np.abs(qform(a, xs)) ** r * np.abs(qform(b, xs)) ** s
    return [worst_part("vector", lhs, rhs)]


def _f1(ctx, o, p, _):
    a = o["A"]
    r = p["r"]
    return [Part("power", ctx.w(a) ** (2 * r), 0.5 * ctx.norm(ctx.absp(a, 2 * r) + ctx.absp_star(a, 2 * r)))]


def schwarz_refinement(a, b, e):
    """Sides of ``|<a,b>| <= sqrt(|a|^2-<a,e>^2) sqrt(|b|^2-<b,e>^2) + |<a,e><e,b>|``.

    ``a`` and ``b`` are first rotated by unit scalars so that ``<a,e>`` and
    ``<b,e>`` are real and non-negative.
    """
    ae = inner(a, e)
    be = inner(b, e)
    pa = np.where(np.abs(ae) > 0, np.conj(ae) / np.where(np.abs(ae) > 0, np.abs(ae), 1.0), 1.0)
    pb = np.where(np.abs(be) > 0, np.conj(be) / np.where(np.abs(be) > 0, np.abs(be), 1.0), 1.0)
    a = a * pa[:, None]
    b = b * pb[:, None]
    ae = inner(a, e).real
    be = inner(b, e).real
    na2 = np.sum(np.abs(a) ** 2, axis=1)
    nb2 = np.sum(np.abs(b) ** 2, axis=1)
    lhs = np.abs(inner(a, b))
    rhs = np.sqrt(np.maximum(na2 - ae**2, 0.0)) * np.sqrt(np.maximum(nb2 - be**2, 0.0)) + np.abs(ae * be)
    return lhs, rhs


def _l211(ctx, o, p, xs):
    a_op, b_op = o["A"], o["B"]
    u = np.roll(xs, 1, axis=0)
    v = np.roll(xs, 2, axis=0)
    lhs1, rhs1 = schwarz_refinement(xs @ a_op.T, xs @ b_op.T, xs)
    lhs2, rhs2 = schwarz_refinement(u @ a_op.T, v @ b_op.T, xs)
    return [worst_part("a=Ax,b=Bx,e=x", lhs1, rhs1), worst_part("independent", lhs2, rhs2)]


def _t212(ctx, o, p, _):
    a, b = o["A"], o["B"]
    na, nb = ctx.norm(a), ctx.norm(b)
    ca, cb = ctx.c(a), ctx.c(b)
    wa, wb = ctx.w(a), ctx.w(b)
    lhs = ctx.w(adj(b) @ a)
    ra = math.sqrt(na * na + ca * ca)
    rb = math.sqrt(nb * nb + cb * cb)
    if p.get("literal"):
        mn = min(na * ra, nb * rb)
    else:
        mn = min(nb * ra, na * rb)
    return [
        Part("main", lhs, ra * rb + wa * wb),
        Part("min-form", lhs, mn + wa * wb),
        Part("A=B", ctx.w(a @ a), na * na + ca * ca + wa * wa),
    ]


def _cartesian_bound(ctx, a, x, y):
    wx2 = ctx.w(x @ x)
    wy2 = ctx.w(y @ y)
    cross = ctx.w(x @ y + y @ x)
    return 2 * ctx.norm(a) ** 2 * (wx2 + wy2 + math.sqrt((wx2 - wy2) ** 2 + cross**2))


def _t213(ctx, o, p, _):
    a, b = o["A"], o["B"]
    x, y = cartesian(b)
    bound = _cartesian_bound(ctx, a, x, y)
    return [
        Part("plus", ctx.w(a @ b + b @ adj(a)) ** 2, bound),
        Part("minus", ctx.w(a @ b - b @ adj(a)) ** 2, bound),
    ]


def anticommuting_from(b):
    """A matrix ``X + iY`` with self-adjoint ``X, Y`` and ``XY + YX = 0``.

    Built from the Hermitian part ``H`` of the leading ``k x k`` block of ``b``
    (``k = n // 2``) as ``X = diag(H, -H)``, ``Y = [[0, H], [H, 0]]``, padded
    with a zero row and column when ``n`` is odd.  Returns ``b``'s Hermitian
    part when ``n == 1`` (then ``Y = 0``).
    """
    n = b.shape[0]
    k = n // 2
    if k == 0:
        return (b + adj(b)) / 2
    h = (b[:k, :k] + adj(b[:k, :k])) / 2
    z = np.zeros((k, k), dtype=np.complex128)
    x = np.zeros((n, n), dtype=np.complex128)
    y = np.zeros((n, n), dtype=np.complex128)
    x[: 2 * k, : 2 * k] = np.block([[h, z], [z, -h]])
    y[: 2 * k, : 2 * k] = np.block([[z, h], [h, z]])
    return x + 1j * y


def _c214(ctx, o, p, _):
    a, b = o["A"], o["B"]
    na = ctx.norm(a)
    ba = anticommuting_from(b)
    x, y = cartesian(ba)
    bound_i = 2 * na * max(math.sqrt(ctx.w(x @ x)), math.sqrt(ctx.w(y @ y)))
    bh = (b + adj(b)) / 2
    bound_ii = 2 * na * math.sqrt(ctx.w(bh @ bh))
    return [
        Part("(i)+", ctx.w(a @ ba + ba @ adj(a)), bound_i),
        Part("(i)-", ctx.w(a @ ba - ba @ adj(a)), bound_i),
        Part("(ii)+", ctx.w(a @ bh + bh @ adj(a)), bound_ii),
        Part("(ii)-", ctx.w(a @ bh - bh @ adj(a)), bound_ii),
        Part("(iii)", ctx.w(a @ bh), na * math.sqrt(ctx.w(bh @ bh))),
    ]


def _t215(ctx, o, p, _):
    a, b = o["A"], o["B"]
    aa = adj(a) @ a + a @ adj(a)
    bb = adj(b) @ b + b @ adj(b)
    b1 = math.sqrt(ctx.w(aa) * ctx.w(bb))
    b2 = math.sqrt(ctx.w(adj(a) @ a + adj(b) @ b) * ctx.w(a @ adj(a) + b @ adj(b)))
    plus = ctx.w(a @ b + b @ a)
    minus = ctx.w(a @ b - b @ a)
    return [
        Part("(i)+", plus, b1),
        Part("(i)-", minus, b1),
        Part("(ii)+", plus, b2),
        Part("(ii)-", minus, b2),
    ]


def _c216(ctx, o, p, _):
    b = o["B"]
    i = np.eye(b.shape[0])
    w2 = ctx.w(b) ** 2
    return [
        Part("(i)", w2, 0.5 * ctx.w(adj(b) @ b + b @ adj(b))),
        Part("(ii)", w2, 0.25 * ctx.w(i + adj(b) @ b) * ctx.w(i + b @ adj(b))),
    ]


# -- generalized Aluthge transform -------------------------------------------


def _t31(ctx, o, p, _):
    t = o["T"]
    pw, s = p["p"], p["s"]
    return [Part("h=x^p", ctx.w(t) ** pw, 0.5 * (ctx.w(ctx.delta(t, s)) ** pw + ctx.norm(t) ** pw))]


def _l32(ctx, o, p, _):
    a, b, c, d = o["A"], o["B"], o["C"], o["D"]
    wba, wdc = ctx.w(b @ a), ctx.w(d @ c)
    rhs = 0.5 * (wba + wdc) + 0.5 * math.sqrt((wba - wdc) ** 2 + 4 * ctx.norm(b @ c) * ctx.norm(d @ a))
    return [Part("spectral", ctx.r(a @ b + c @ d), rhs)]


def max_real_part_norm(t, grid: int = 360) -> float:
    """``max_theta ||Re(e^{i theta} T)||`` by a norm grid and Brent polishing."""
    t = np.asarray(t, dtype=np.complex128)
    ts = adj(t)

    def f(theta):
        z = np.exp(1j * theta)
        return np.linalg.norm((z * t + np.conj(z) * ts) / 2, 2)

    thetas = np.linspace(0.0, 2 * math.pi, grid, endpoint=False)
    z = np.exp(1j * thetas)[:, None, None]
    vals = np.linalg.norm((z * t + np.conj(z) * ts) / 2, ord=2, axis=(1, 2))
    h = thetas[1] - thetas[0]
    best = float(np.max(vals))
    for i in np.argsort(-vals)[:4]:
        res = minimize_scalar(
            lambda th: -f(th),
            bounds=(thetas[i] - h, thetas[i] + h),
            method="bounded",
            options={"xatol": 1e-12},
        )
        best = max(best, -float(res.fun))
    return best


def _l33(ctx, o, p, _):
    t = o["T"]
    z = np.zeros_like(t)
    return [
        Part("w=max|Re|", ctx.w(t), max_real_part_norm(t), identity=True),
        Part("corner", ctx.w(block2(z, t, z, z).assembled), 0.5 * ctx.norm(t), identity=True),
    ]


def _hsum(ctx, m, q1, q2, pw, star=False):
    """``|| |M|^{q1 p} + |M|^{q2 p} ||`` (``|M*|`` when ``star``)."""
    f = ctx.absp_star if star else ctx.absp
    return ctx.norm(f(m, q1 * pw) + f(m, q2 * pw))


def _c34(ctx, o, p, _):
    t = o["T"]
    pw, s = p["p"], p["s"]
    tt = 1 - s
    rhs = 0.25 * _hsum(ctx, t, 2 * tt, 2 * s, pw) + 0.5 * ctx.w(ctx.delta(t, s)) ** pw
    return [Part("h=x^p", ctx.w(t) ** pw, rhs)]


def _cross(ctx, x, qx, y, qy, sx=False, sy=False):
    """``|| |X|^{qx} |Y|^{qy} ||`` with optional adjoints inside the moduli."""
    fx = ctx.absp_star(x, qx) if sx else ctx.absp(x, qx)
    fy = ctx.absp_star(y, qy) if sy else ctx.absp(y, qy)
    return ctx.norm(fx @ fy)


def _t35(ctx, o, p, _):
    t, s_op = o["T"], o["S"]
    pw, s = p["p"], p["s"]
    tt = 1 - s
    lhs = ctx.w(off_diag(t, s_op).assembled) ** pw
    first = 0.25 * max(_hsum(ctx, t, 2 * s, 2 * tt, pw), _hsum(ctx, s_op, 2 * tt, 2 * s, pw))
    second = 0.25 * (
        _cross(ctx, s_op, s, t, tt, sy=True) ** pw + _cross(ctx, t, s, s_op, tt, sy=True) ** pw
    )
    return [Part("h=x^p", lhs, first + second)]


def _c36(ctx, o, p, _):
    t, s_op = o["T"], o["S"]
    pw, s = p["p"], p["s"]
    tt = 1 - s
    lhs = ctx.w(off_diag(t, s_op).assembled) ** pw
    last = s if p.get("literal") else tt
    rhs = 0.5 * max(ctx.norm(t), ctx.norm(s_op)) ** pw + 0.25 * (
        _cross(ctx, s_op, s, t, tt, sy=True) ** pw + _cross(ctx, t, s, s_op, last, sy=True) ** pw
    )
    return [Part("w^p", lhs, rhs)]


def _c37(ctx, o, p, _):
    t, s_op = o["T"], o["S"]
    pw, s = p["p"], p["s"]
    tt = 1 - s
    lhs = ctx.w(t @ s_op) ** (pw / 2)
    first = 0.25 * max(_hsum(ctx, t, 2 * s, 2 * tt, pw), _hsum(ctx, s_op, 2 * s, 2 * tt, pw))
    second = 0.25 * (
        _cross(ctx, t, s, s_op, tt, sy=True) ** pw + _cross(ctx, s_op, s, t, tt, sy=True) ** pw
    )
    return [Part("w^(p/2)", lhs, first + second)]


def _c38(ctx, o, p, _):
    t, s_op = o["T"], o["S"]
    pw, s = p["p"], p["s"]
    tt = 1 - s
    # for positive operators |T| = T, so T^q is |T|^q
    lhs = ctx.norm(ctx.absp(t, 0.5) @ ctx.absp(s_op, 0.5)) ** pw
    k = 1.0 if p.get("literal") else 2.0
    first = 0.25 * max(_hsum(ctx, t, k * s, k * tt, pw), _hsum(ctx, s_op, k * s, k * tt, pw))
    second = 0.25 * (_cross(ctx, t, s, s_op, tt) ** pw + _cross(ctx, s_op, s, t, tt) ** pw)
    return [Part("positive", lhs, first + second)]


def _c39(ctx, o, p, _):
    t, s_op = o["T"], o["S"]
    pw, s = p["p"], p["s"]
    tt = 1 - s
    c = 2.0**pw
    lhs = ctx.norm(t + s_op) ** pw
    if p.get("literal"):
        first = 0.25 * c * max(_hsum(ctx, t, 2 * s, 2 * tt, pw), _hsum(ctx, s_op, 2 * s, 2 * s, pw, star=True))
        second = 0.25 * c * (
            _cross(ctx, t, s, s_op, tt, sx=True) ** pw
            + _cross(ctx, s_op, s, t, tt, sx=True, sy=True) ** pw
        )
    else:
        first = 0.25 * c * max(_hsum(ctx, t, 2 * s, 2 * tt, pw), _hsum(ctx, s_op, 2 * s, 2 * tt, pw, star=True))
        second = 0.25 * c * (
            _cross(ctx, s_op, s, t, tt, sx=True, sy=True) ** pw + _cross(ctx, t, s, s_op, tt) ** pw
        )
    return [Part("h=x^p", lhs, first + second)]


def _kt_c39p(ctx, o, p, _):
    t, s_op = o["T"], o["S"]
    pw = p["p"]
    lhs = ctx.norm(t + s_op) ** pw
    rhs = 0.25 * max((2 * ctx.norm(t)) ** pw, (2 * ctx.norm(s_op)) ** pw) + 0.25 * (
        2 * math.sqrt(ctx.norm(t @ s_op))
    ) ** pw
    return [Part("normal", lhs, rhs)]


def _c310(ctx, o, p, _):
    t, s_op = o["T"], o["S"]
    pw, s = p["p"], p["s"]
    tt = 1 - s
    k = 0.5 if p.get("literal") else 2.0 ** (pw - 2)
    lhs = ctx.norm(t + s_op) ** pw
    first = k * max(_hsum(ctx, t, 2 * tt, 2 * s, pw), _hsum(ctx, s_op, 2 * tt, 2 * s, pw, star=True))
    second = k * (_cross(ctx, t, tt, s_op, s) ** pw + _cross(ctx, s_op, tt, t, s, sx=True, sy=True) ** pw)
    return [Part("x^p", lhs, first + second)]


def _young_mix(ctx, x, y, r, nu, sx=False, sy=False):
    """``|| nu |X|^{2r/nu} + (1-nu) |Y|^{2r/(1-nu)} ||`` (adjoints optional)."""
    fx = ctx.absp_star(x, 2 * r / nu) if sx else ctx.absp(x, 2 * r / nu)
    fy = ctx.absp_star(y, 2 * r / (1 - nu)) if sy else ctx.absp(y, 2 * r / (1 - nu))
    return ctx.norm(nu * fx + (1 - nu) * fy)


def _t311(ctx, o, p, _):
    a, b = o["A"], o["B"]
    r, nu = p["r"], p["nu"]
    return [Part("young", ctx.w(adj(b) @ a) ** (2 * r), _young_mix(ctx, a, b, r, nu))]


# -- 2x2 operator matrices ----------------------------------------------------


def _t42(ctx, o, p, _):
    a, b, c, d = o["A"], o["B"], o["C"], o["D"]
    r = p["r"]
    lhs = ctx.w(block2(a, b, c, d).assembled) ** r
    nb, nc = ctx.norm(b) ** r, ctx.norm(c) ** r
    thm = 4 ** (r - 1) * w_nonneg_entries([[ctx.w(a) ** r, nb], [nc, ctx.w(d) ** r]])
    cor = 4 ** (r - 1) * w_nonneg_entries([[ctx.norm(a) ** r, nb], [nc, ctx.norm(d) ** r]])
    return [Part("radius-entries", lhs, thm), Part("norm-variant", lhs, cor)]


def _c45(ctx, o, p, _):
    a, b, c, d = o["A"], o["B"], o["C"], o["D"]
    wm = ctx.w(block2(a, b, c, d).assembled)
    m = ctx.norm(b) + ctx.norm(c)
    parts = []
    for tag, x, y in (("w", ctx.w(a), ctx.w(d)), ("norm", ctx.norm(a), ctx.norm(d))):
        cmat = np.array([[x, m / 2], [m / 2, y]])
        rc = ctx.r(cmat)
        closed = 0.5 * (x + y + math.sqrt((x - y) ** 2 + m * m))
        parts += [Part(f"{tag}:w<=r(c)", wm, rc), Part(f"{tag}:r(c)<=closed", rc, closed)]
    return parts


def _t47(ctx, o, p, _):
    a, b = o["A"], o["B"]
    n = p["n_pow"]
    ab = np.linalg.matrix_power(a @ b, n)
    ba = np.linalg.matrix_power(b @ a, n)
    f = ctx.norm if p.get("literal") else ctx.w
    lhs = max(f(ab), f(ba)) ** (1.0 / (2 * n))
    return [Part("lower", lhs, ctx.w(off_diag(a, b).assembled))]


def _t48(ctx, o, p, _):
    a, b = o["A"], o["B"]
    th = p["theta"]
    wr = ctx.w(off_diag(a, b).assembled)
    wm, wp = ctx.w(a - b), ctx.w(a + b)
    x, y = cartesian(a)
    wt = ctx.w(a)
    wc = ctx.w(off_diag(x, np.exp(1j * th) * y).assembled)
    return [
        Part("lower", 0.5 * max(wm, wp), wr),
        Part("upper", wr, 0.5 * (wm + wp)),
        Part("cartesian-lower", 0.5 * wt, wc),
        Part("cartesian-upper", wc, wt),
    ]


def _l410(ctx, o, p, _):
    a, b, c, d = o["A"], o["B"], o["C"], o["D"]
    wm = ctx.w(block2(a, b, c, d).assembled)
    wa, wb, wd = ctx.w(a), ctx.w(b), ctx.w(d)
    anti = ctx.w(block2(a, b, -b, -a).assembled)
    anti_same = ctx.w(block2(a, a, -a, -a).assembled)
    wbc_p, wbc_m = ctx.w(b + c), ctx.w(b - c)
    return [
        Part("diag-part", ctx.w(direct_sum(a, d).assembled), wm),
        Part("offdiag-part", ctx.w(off_diag(b, c).assembled), wm),
        Part("skew-lower", max(wa, wb), anti),
        Part("skew-upper", anti, wa + wb),
        Part("skew-same-lower", wa, anti_same),
        Part("skew-same-upper", anti_same, 2 * wa),
        Part("sandwich-lower", max(wa, wd, 0.5 * wbc_p, 0.5 * wbc_m), wm),
        Part("sandwich-upper", wm, max(wa, wd) + 0.5 * (wbc_p + wbc_m)),
        Part(
            "offdiag+gap",
            ctx.w(off_diag(a, b).assembled) + abs(ctx.w(a + b) - ctx.w(a - b)) / 2,
            wa + wb,
        ),
    ]


def _t415(ctx, o, p, _):
    a, b, x, y = o["A"], o["B"], o["X"], o["Y"]
    k = 2 * ctx.norm(x) * ctx.norm(y)
    return [
        Part("main", ctx.w(adj(x) @ a @ y + adj(y) @ b @ x), k * ctx.w(off_diag(a, b).assembled)),
        Part("B=A", ctx.w(adj(x) @ a @ y + adj(y) @ a @ x), k * ctx.w(a)),
    ]


def buzano_sides(a, b, e, r=1.0):
    """Sides of ``|<a,e><e,b>|^r <= (|a|^r |b|^r + |<a,b>|^r) / 2`` per row."""
    lhs = np.abs(inner(a, e) * inner(e, b)) ** r
    na = np.linalg.norm(a, axis=1)
    nb = np.linalg.norm(b, axis=1)
    rhs = 0.5 * ((na * nb) ** r + np.abs(inner(a, b)) ** r)
    return lhs, rhs


def _l416(ctx, o, p, xs):
    b, c = o["B"], o["C"]
    r, nu = p["r"], p["nu"]
    lit = bool(p.get("literal"))
    n = b.shape[0]
    tm = off_diag(b, c).assembled
    # vectors in H (+) H built from pairs of samples, plus the radius witness
    zs = np.hstack([xs, np.roll(xs, 1, axis=0)]) / math.sqrt(2.0)
    zs = with_witnesses(ctx, zs, tm)
    at = zs @ ctx.absp(tm).T
    bt = zs @ ctx.absp_star(tm).T
    l1, r1 = buzano_sides(at, bt, zs)
    l2, r2 = buzano_sides(xs @ b.T, np.roll(xs, 3, axis=0) @ c.T, xs)
    l3, r3 = buzano_sides(at, bt, zs, r)

    wt = ctx.w(tm)
    bs_c = ctx.absp_star(b) @ ctx.absp(c)
    cs_b = ctx.absp_star(c) @ ctx.absp(b)
    first = 0.25 * max(
        ctx.norm(ctx.absp(c, 2 * r) + ctx.absp_star(b, 2 * r)),
        ctx.norm(ctx.absp(b, 2 * r) + ctx.absp_star(c, 2 * r)),
    )
    thm_rhs = first + 0.5 * max(ctx.w(bs_c), ctx.w(cs_b)) ** r
    mix = max(
        _young_mix(ctx, c, b, r, nu, sy=True),
        _young_mix(ctx, b, c, r, nu, sy=True),
    )
    nu_rhs = 0.5 * mix + 0.5 * max(ctx.w(bs_c), ctx.w(cs_b)) ** (2 * r)
    single = _young_mix(ctx, b, b, r, nu, sy=True)
    middle = 0.5 * single + 0.5 * ctx.w(ctx.absp_star(b) @ ctx.absp(b)) ** (2 * r)
    wb = ctx.w(b)
    k = 1 if lit else 2
    assert n == c.shape[0]
    return [
        worst_part("buzano", l1, r1),
        worst_part("buzano-independent", l2, r2),
        worst_part("buzano-r", l3, r3),
        Part("offdiag", wt ** (k * r), thm_rhs),
        Part("offdiag-nu", wt ** (2 * k * r), nu_rhs),
        Part("single", wb ** (2 * k * r), middle),
        Part("single<=young", middle, single),
    ]


# -- registration --------------------------------------------------------------

_TABLE = [
    CheckDef(
        "N1", "½‖A‖ ≤ w(A) ≤ ‖A‖", ("A",), (), "operator", "pass",
        r"\frac{1}{2}\norm{A}\leq w(A)\leq \norm{A}", _n1,
    ),
    CheckDef(
        "REF1", "w(T^n) ≤ w(T)^n", ("T",), (N_POW,), "operator", "pass",
        r"w(T^n)\leq (w(T))^n", _ref1,
    ),
    CheckDef(
        "N2", "w(A) ≤ ½‖|A|+|A*|‖ ≤ ½(‖A‖+‖A²‖^½)", ("A",), (), "operator", "pass",
        r"w(A)\leq \frac{1}{2}\norm{|A|+|A^*|}\leq \frac{1}{2}\bra{\norm{A}+\norm{A^2}^{\frac{1}{2}}}",
        _n2,
    ),
    CheckDef(
        "N3", "¼‖A*A+AA*‖ ≤ w²(A) ≤ ½‖A*A+AA*‖", ("A",), (), "operator", "pass",
        r"\frac{1}{4}\norm{A^*A+AA^*}\leq w^2(A)\leq \frac{1}{2}\norm{A^*A+AA^*}", _n3,
    ),
    CheckDef(
        "T2.5",
        "|<Xx,x>|^r + |<Yx,x>|^s ≤ ½‖|X|^{2αr}+|X*|^{2(1-α)r}+|Y|^{2αs}+|Y*|^{2(1-α)s}‖ for unit x "
        "(f(t)=t^α, g(t)=t^{1-α})",
        ("X", "Y"), (R_PARAM, S_EXP, ALPHA), "vector", "pass",
        r"\abs{\seq{Xx,x}}^r+\abs{\seq{Yx,x}}^s\leq \frac{1}{2}\norm{f^{2r}(|X|)+g^{2r}(|X^*|)+f^{2s}(|Y|)+g^{2s}(|Y^*|)}",
        _t25, note="printed with a doubled '≤ ≤'; read as one inequality",
    ),
    CheckDef(
        "C2.6", "w(A²) ≤ ½‖|A²|+|A²*|‖", ("A",), (), "operator", "pass",
        r"w(A^2)\leq \frac{1}{2}\norm{|A^2|+|A^{2*}|}", _c26,
    ),
    CheckDef(
        "C2.7", "w^r(B*A) ≤ ½‖|B*A|^r+|A*B|^r‖", ("A", "B"), (R_PARAM,), "operator", "pass",
        r"w^r(B^*A)\leq \frac{1}{2}\norm{|B^*A|^{r}+|A^*B|^{r}}", _c27,
    ),
    CheckDef(
        "T2.8",
        "|<Ax,x>|^r |<Bx,x>|^s ≤ ½‖α(|A|^{2rν/α}+|A*|^{2r(1-ν)/α}) + (1-α)(|B|^{2sν/(1-α)}+|B*|^{2s(1-ν)/(1-α)})‖ "
        "for unit x (f(t)=t^ν, g(t)=t^{1-ν})",
        ("A", "B"), (R_PARAM, S_EXP, ALPHA, NU), "vector", "pass",
        r"\abs{\seq{Ax,x}}^{r}\abs{\seq{Bx,x}}^{s}\leq \frac{1}{2}\norm{\alpha f^{\frac{2r}{\alpha}}(|A|)+\alpha g^{\frac{2r}{\alpha}}(|A^*|)+(1-\alpha)f^{\frac{2s}{1-\alpha}}(|B|)+(1-\alpha)g^{\frac{2s}{1-\alpha}}(|B^*|)}",
        _t28,
    ),
    CheckDef(
        "F1", "w^{2r}(A) ≤ ½‖|A|^{2r}+|A*|^{2r}‖", ("A",), (R_PARAM,), "operator", "pass",
        r"w^{2r}(A)\leq \frac{1}{2}\norm{|A|^{2r}+|A^*|^{2r}}", _f1,
    ),
    CheckDef(
        "L2.11",
        "|<a,b>| ≤ √(‖a‖²-<a,e>²)·√(‖b‖²-<b,e>²) + |<a,e><e,b>| for unit e, <a,e>,<b,e> made real",
        ("A", "B"), (), "vector", "pass",
        r"\abs{\seq{a,b}}\leq \sqrt{\bra{\norm{a}^2-\seq{a,e}^2}}\sqrt{\norm{b}^2-\seq{b,e}^2}+\abs{\seq{a,e}\seq{e,b}}",
        _l211,
    ),
    CheckDef(
        "T2.12",
        "w(B*A) ≤ √(‖A‖²+c²(A))·√(‖B‖²+c²(B)) + w(A)w(B); "
        "w(B*A) ≤ min{‖B‖√(‖A‖²+c²(A)), ‖A‖√(‖B‖²+c²(B))} + w(A)w(B); w(A²) ≤ ‖A‖²+c²(A)+w²(A)",
        ("A", "B"), (), "operator", "pass",
        r"w(B^*A)\leq\sqrt{\norm{A}^2+c^2(A)}\sqrt{\norm{B}^2+c^2(B)}+ w(A)w(B)",
        _t212,
        literal="min{‖A‖√(‖A‖²+c²(A)), ‖B‖√(‖B‖²+c²(B))} in the min-form",
        note="min-form encoded with the norms crossed; the printed pairing fails for operators of unequal size",
    ),
    CheckDef(
        "T2.13",
        "w²(AB±BA*) ≤ 2‖A‖²(w(X²)+w(Y²)+√((w(X²)-w(Y²))²+w²(XY+YX))), B = X+iY",
        ("A", "B"), (), "operator", "pass",
        r"w^2(AB\pm BA^*)\leq 2\norm{A}^2\bra{w(X^2)+w(Y^2)+\sqrt{\bra{w(X^2)-w(Y^2)}^2+w^2(XY+YX)}}",
        _t213,
    ),
    CheckDef(
        "C2.14",
        "(i) XY+YX=0 ⇒ w(AB±BA*) ≤ 2‖A‖max{w^½(X²),w^½(Y²)}; (ii) B=B* ⇒ w(AB±BA*) ≤ 2‖A‖w^½(B²); "
        "(iii) B=B* ⇒ w(AB) ≤ ‖A‖w^½(B²)",
        ("A", "B"), (), "operator", "pass",
        r"w(AB\pm BA^*)\leq 2\norm{A}\max\set{w^{\frac{1}{2}}(X^2),w^{\frac{1}{2}}(Y^2)}",
        _c214, note="B is replaced by an anticommuting-part matrix for (i) and by its Hermitian part for (ii), (iii)",
    ),
    CheckDef(
        "T2.15",
        "w(AB±BA) ≤ w^½(A*A+AA*)w^½(B*B+BB*); w(AB±BA) ≤ w^½(A*A+B*B)w^½(AA*+BB*)",
        ("A", "B"), (), "operator", "pass",
        r"w(AB\pm BA)\leq w^{\frac{1}{2}}(A^*A+AA^*)w^{\frac{1}{2}}(B^*B+BB^*)", _t215,
    ),
    CheckDef(
        "C2.16", "w²(B) ≤ ½w(B*B+BB*); w²(B) ≤ ¼w(I+B*B)w(I+BB*)", ("B",), (), "operator", "pass",
        r"w^2(B)\leq \frac{1}{4}w(I+B^*B)w(I+BB^*)", _c216,
    ),
    CheckDef(
        "T3.1", "h(w(T)) ≤ ½(h(w(Δ_{s,t}(T))) + ‖h(|T|)‖), h(x)=x^p", ("T",), (P_PARAM, S_AL),
        "operator", "pass",
        r"h(w(T))\leq \dfrac{1}{2}\left(h(w(\Delta_{s, t}(T))+\norm{h(|T|)}\right)", _t31,
    ),
    CheckDef(
        "L3.2", "r(AB+CD) ≤ ½(w(BA)+w(DC)) + ½√((w(BA)-w(DC))²+4‖BC‖‖DA‖)",
        ("A", "B", "C", "D"), (), "operator", "pass",
        r"r(AB+CD)\leq \frac{1}{2}(w(BA)+w(DC))+\frac{1}{2}\sqrt{(w(BA)-w(DC))^2+4\norm{BC}\norm{DA}}", _l32,
    ),
    CheckDef(
        "L3.3", "w(T) = max_θ ‖Re(e^{iθ}T)‖; w([[0,T],[0,0]]) = ‖T‖/2", ("T",), (), "identity", "pass",
        r"w\left(\begin{bmatrix} 0 & T \\0& 0 \\ \end{bmatrix}\right)=\frac{1}{2}\norm{T}", _l33,
    ),
    CheckDef(
        "C3.4", "h(w(T)) ≤ ¼‖h(|T|^{2t})+h(|T|^{2s})‖ + ½h(w(Δ_{s,t}(T))), h(x)=x^p", ("T",),
        (P_PARAM, S_AL), "operator", "pass",
        r"h(w(T))\leq \dfrac{1}{4}\norm{h(|T|^{2t})+h(|T|^{2s})}+\dfrac{1}{2}h(w(\Delta_{s, t}(T)))", _c34,
    ),
    CheckDef(
        "T3.5",
        "h(w([[0,T],[S,0]])) ≤ ¼max{‖h(|T|^{2s})+h(|T|^{2t})‖,‖h(|S|^{2t})+h(|S|^{2s})‖} "
        "+ ¼(h(‖|S|^s|T*|^t‖)+h(‖|T|^s|S*|^t‖)), h(x)=x^p",
        ("T", "S"), (P_PARAM, S_AL), "operator", "pass",
        r"\dfrac{1}{4}\left(h(\norm{|S|^s|T^*|^t})+h(\norm{|T|^s|S^*|^t})\right)", _t35,
    ),
    CheckDef(
        "C3.6",
        "w^p([[0,T],[S,0]]) ≤ ½max{‖T‖^p,‖S‖^p} + ¼(‖|S|^s|T*|^t‖^p + ‖|T|^s|S*|^t‖^p)",
        ("T", "S"), (P_PARAM, S_AL), "operator", "pass",
        r"\dfrac{1}{2}\max\{\norm{T}^p,\norm{S}^p\}+\dfrac{1}{4}\left(\norm{|S|^s|T^*|^t}^{p}+\norm{|T|^s|S^*|^s}^{p}\right)",
        _c36, literal="‖|T|^s|S*|^s‖ in the last term",
        note="printed exponent |S*|^s encoded as |S*|^t",
    ),
    CheckDef(
        "C3.7",
        "w^{p/2}(TS) ≤ ¼max{‖|T|^{2sp}+|T|^{2tp}‖,‖|S|^{2sp}+|S|^{2tp}‖} + ¼(‖|T|^s|S*|^t‖^p+‖|S|^s|T*|^t‖^p)",
        ("T", "S"), (P_PARAM, S_AL), "operator", "pass",
        r"w^{\frac{p}{2}}(TS)\leq \dfrac{1}{4}\max\left\{\norm{|T|^{2sp}+|T|^{2tp}},\norm{|S|^{2sp}+|S|^{2tp}}\right\}",
        _c37,
    ),
    CheckDef(
        "C3.8",
        "T,S ≥ 0: ‖T^½S^½‖^p ≤ ¼max{‖T^{2sp}+T^{2tp}‖,‖S^{2sp}+S^{2tp}‖} + ¼(‖T^sS^t‖^p+‖S^sT^t‖^p)",
        ("T", "S"), (P_PARAM, S_AL), "operator", "pass",
        r"\norm{T^{\frac{1}{2}}S^{\frac{1}{2}}}^p\leq \dfrac{1}{4}\max\{\norm{T^{sp}+T^{tp}},\norm{S^{sp}+S^{tp}}\}",
        _c38, classes=("positive",), requires="positive",
        literal="exponents sp, tp in the max term",
        note="max-term exponents encoded as 2sp, 2tp; the printed sp, tp fails for ‖T‖ = ‖S‖ > 1",
    ),
    CheckDef(
        "C3.9",
        "h(‖T+S‖) ≤ ¼max{‖h(2|T|^{2s})+h(2|T|^{2t})‖,‖h(2|S*|^{2s})+h(2|S*|^{2t})‖} "
        "+ ¼(h(2‖|S*|^s|T*|^t‖)+h(2‖|T|^s|S|^t‖)), h(x)=x^p",
        ("T", "S"), (P_PARAM, S_AL), "operator", "pass",
        r"h(\norm{T+S})\leq \dfrac{1}{4}\max\{\norm{h(2|T|^{2s})+h(2|T|^{2t})}, \norm{h(2|S^*|^{2s})+h(2|S^*|^{2s})}\}",
        _c39,
        literal="h(2|S*|^{2s}) twice, and h(2‖|T*|^s|S|^t‖)+h(2‖|S*|^s|T*|^t‖) in the last term",
        note="repeated exponent 2s encoded as 2s, 2t; last term re-derived by substituting S* for S",
    ),
    CheckDef(
        "KT-C3.9p",
        "printed normal case: h(‖T+S‖) ≤ ¼max{h(2‖T‖),h(2‖S‖)} + ¼h(2‖TS‖^½), h(x)=x^p",
        ("T", "S"), (P_PARAM,), "operator", "known-typo",
        r"h(\norm{T+S})\leq \dfrac{1}{4}\max\{h(2\norm{|T|}),h(2\norm{|S|})\}+\dfrac{1}{4}h(2\norm{TS}^{\frac{1}{2}})",
        _kt_c39p, classes=SELF_ADJOINT_CLASSES, requires="normal",
        witnesses=(Witness("T=S=I", (np.eye(2), np.eye(2)), {"p": 1.0}),),
        note="T = S = I gives 2 ≤ 1",
    ),
    CheckDef(
        "C3.10",
        "‖T+S‖^p ≤ 2^{p-2}max{‖|T|^{2tp}+|T|^{2sp}‖,‖|S*|^{2tp}+|S*|^{2sp}‖} "
        "+ 2^{p-2}(‖|T|^t|S|^s‖^p+‖|S*|^t|T*|^s‖^p)",
        ("T", "S"), (P_PARAM, S_AL), "operator", "pass",
        r"\norm{T+S}^{p} \leq \dfrac{1}{2^{2-r}}\max\{\norm{|T|^{2tp}+|T|^{2sp}},\norm{|S^*|^{2tp}+|S^*|^{2sp}}\}",
        _c310, literal="constant 1/2^{2-r} with r = 1, i.e. ½",
        note="the printed constant has no r in scope; encoded as 2^{p-2}",
    ),
    CheckDef(
        "T3.11", "w^{2r}(B*A) ≤ ‖ν|A|^{2r/ν} + (1-ν)|B|^{2r/(1-ν)}‖", ("A", "B"), (R_PARAM, NU),
        "operator", "pass",
        r"w^{2r}(B^*A)\leq \norm{\nu|A|^{\frac{2r}{\nu}}+(1-\nu)|B|^{\frac{2r}{1-\nu}}}", _t311,
    ),
    CheckDef(
        "T4.2/C4.3",
        "w^r([[A,B],[C,D]]) ≤ 4^{r-1} w([[w^r(A),‖B‖^r],[‖C‖^r,w^r(D)]]) ≤ with norms on the diagonal",
        ("A", "B", "C", "D"), (R_PARAM,), "operator", "pass",
        r"w^{r}\bra{\begin{bmatrix}A &B \\C& D \\\end{bmatrix}}\leq 4^{r-1}w\bra{\begin{bmatrix}w^{r}(A) &\norm{B}^{r} \\\norm{C}^{r} & w(D)^{r} \\\end{bmatrix}}",
        _t42,
    ),
    CheckDef(
        "C4.5/C4.6",
        "w([[A,B],[C,D]]) ≤ r([c_ij]) ≤ ½(w(A)+w(D)+√((w(A)-w(D))²+(‖B‖+‖C‖)²)), and with norms",
        ("A", "B", "C", "D"), (), "operator", "pass",
        r"\frac{1}{2}\bra{w(A)+w(D)+\sqrt{\bra{w(A)-w(D)}^2+\bra{\norm{B}+\norm{C}}^2}}", _c45,
    ),
    CheckDef(
        "T4.7", "w([[0,A],[B,0]]) ≥ (max{w((AB)^n), w((BA)^n)})^{1/(2n)}", ("A", "B"), (N_POW_ALL,),
        "operator", "pass",
        r"w\bra{\begin{bmatrix} 0 &A \\ B& 0 \\\end{bmatrix}}\geq \sqrt[2n]{\max\set{(AB)^n,(BA)^n}}", _t47,
        literal="operator norms under the root",
        note="the printed root is applied to operators; encoded with w(.) as in the derivation",
    ),
    CheckDef(
        "T4.8/C4.9",
        "½max{w(A-B),w(A+B)} ≤ w([[0,A],[B,0]]) ≤ ½(w(A-B)+w(A+B)); "
        "½w(T) ≤ w([[0,X],[e^{iθ}Y,0]]) ≤ w(T) for T = X+iY",
        ("A", "B"), (THETA,), "operator", "pass",
        r"\frac{1}{2}\max\set{w(A-B),w(A+B)}\leq w\bra{\begin{bmatrix} 0 &A \\ B& 0 \\\end{bmatrix}}\leq \frac{1}{2}\bra{w(A-B)+w(A+B)}",
        _t48, note="the Cartesian part uses the first operator as T",
    ),
    CheckDef(
        "L4.10/T4.11/C4.12/T4.13/T4.14",
        "w(M) ≥ w(diag part), w(off-diagonal part); max{w(A),w(B)} ≤ w([[A,B],[-B,-A]]) ≤ w(A)+w(B); "
        "max{w(A),w(D),½w(B±C)} ≤ w(M) ≤ max{w(A),w(D)} + ½(w(B+C)+w(B-C)); "
        "w([[0,A],[B,0]]) + |w(A+B)-w(A-B)|/2 ≤ w(A)+w(B)",
        ("A", "B", "C", "D"), (), "operator", "pass",
        r"\max\set{w(A),w(D),\frac{1}{2}w(B+C),\frac{1}{2}w(B-C)}\leq w\bra{\begin{bmatrix} A &B \\ C& D \\\end{bmatrix}}",
        _l410,
    ),
    CheckDef(
        "T4.15", "w(X*AY+Y*BX) ≤ 2‖X‖‖Y‖w([[0,A],[B,0]]); w(X*AY+Y*AX) ≤ 2‖X‖‖Y‖w(A)",
        ("A", "B", "X", "Y"), (), "operator", "pass",
        r"w(X^*AY+Y^*BX)\leq 2\norm{X}\norm{Y}w\bra{\begin{bmatrix} 0 &A \\ B& 0 \\\end{bmatrix}}", _t415,
    ),
    CheckDef(
        "L4.16/L4.17/T4.18/T4.19/R4.20",
        "|<a,e><e,b>|^r ≤ ½(‖a‖^r‖b‖^r+|<a,b>|^r); "
        "w^{2r}([[0,B],[C,0]]) ≤ ¼max{‖|C|^{2r}+|B*|^{2r}‖,‖|B|^{2r}+|C*|^{2r}‖} + ½max{w^r(|B*||C|),w^r(|C*||B|)}; "
        "w^{4r}([[0,B],[C,0]]) ≤ ½max{‖ν|C|^{2r/ν}+(1-ν)|B*|^{2r/(1-ν)}‖,‖ν|B|^{2r/ν}+(1-ν)|C*|^{2r/(1-ν)}‖} "
        "+ ½max{w^{2r}(|B*||C|),w^{2r}(|C*||B|)}; "
        "w^{4r}(B) ≤ ½‖ν|B|^{2r/ν}+(1-ν)|B*|^{2r/(1-ν)}‖ + ½w^{2r}(|B*||B|) ≤ ‖ν|B|^{2r/ν}+(1-ν)|B*|^{2r/(1-ν)}‖",
        ("B", "C"), (R_PARAM, NU), "vector", "pass",
        r"\abs{\seq{a,e}\seq{e,b}}\leq \frac{1}{2}\bra{\norm{a}\norm{b}+\abs{\seq{a,b}}}",
        _l416,
        literal="left-hand exponents r, 2r and 2r instead of 2r, 4r and 4r",
        note="left-hand exponents doubled: the printed forms are not homogeneous and fail for small operators",
    ),
]

for _c in _TABLE:
    register(_c)


# -- block identities (separate suite) ----------------------------------------


def _l41a(ctx, o, p, _):
    t, s = o["T"], o["S"]
    return [Part("direct-sum", ctx.w(direct_sum(t, s).assembled), max(ctx.w(t), ctx.w(s)), identity=True)]


def _l41b(ctx, o, p, _):
    t, s = o["T"], o["S"]
    return [Part("swap", ctx.w(off_diag(t, s).assembled), ctx.w(off_diag(s, t).assembled), identity=True)]


def _l41c(ctx, o, p, _):
    t, s = o["T"], o["S"]
    th = p["theta"]
    return [
        Part(
            "phase",
            ctx.w(off_diag(t, np.exp(1j * th) * s).assembled),
            ctx.w(off_diag(t, s).assembled),
            identity=True,
        )
    ]


def _l41d(ctx, o, p, _):
    t, s = o["T"], o["S"]
    return [
        Part("symmetric", ctx.w(block2(t, s, s, t).assembled), max(ctx.w(t - s), ctx.w(t + s)), identity=True),
        Part("off-equal", ctx.w(off_diag(s, s).assembled), ctx.w(s), identity=True),
    ]


_IDENTITIES = [
    CheckDef("L4.1a", "w([[T,0],[0,S]]) = max{w(T),w(S)}", ("T", "S"), (), "identity", "pass",
             r"\max\set{w(T),w(S)}", _l41a),
    CheckDef("L4.1b", "w([[0,T],[S,0]]) = w([[0,S],[T,0]])", ("T", "S"), (), "identity", "pass",
             r"w\bra{\begin{bmatrix} 0 &S \\ T & 0 \end{bmatrix}}", _l41b),
    CheckDef("L4.1c", "w([[0,T],[e^{iθ}S,0]]) = w([[0,T],[S,0]])", ("T", "S"), (THETA,), "identity", "pass",
             r"e^{i\theta} S & 0", _l41c),
    CheckDef("L4.1d", "w([[T,S],[S,T]]) = max{w(T-S),w(T+S)}; w([[0,S],[S,0]]) = w(S)", ("T", "S"), (),
             "identity", "pass", r"\max\set{w(T-S),w(T+S)}", _l41d),
]

for _c in _IDENTITIES:
    register(_c, identity_suite=True)

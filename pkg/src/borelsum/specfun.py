"""Dawson-type special functions and the shared quadrature/extrapolation kit.

dawson uses a Maclaurin series below the crossover radius |z|^2 ~ dps*ln(10)
(with working precision raised to absorb the cancellation, which costs about
0.4343*|z|^2 digits) and the divergent large-z series truncated at its
smallest term above it.  Off the real axis the truncated series is completed
by the exponentially small term +i*sgn(Im z)*(sqrt(pi)/2)*e^{-z^2}; on the
real axis the function is real and no such term is added.

e_mod_deficit has its own large-z series because computing it through dawson
would lose roughly 4*log10|z| digits to cancellation.

Quadrature is composite Gauss-Legendre with cached nodes and bisection on
disagreement between two orders; it raises QuadratureError instead of
returning a low-quality value.
"""

from __future__ import annotations

from dataclasses import dataclass

from mpmath import mp

from .errors import QuadratureError

__all__ = [
    "dawson",
    "erfi",
    "e_mod",
    "e_mod_deficit",
    "dawson_deficit",
    "RayContour",
    "integrate_segment",
    "ray_integrate",
    "gaussian_tail",
    "richardson_limit",
    "fit_poly_coeffs",
]

_LN10 = 2.302585092994046


def _sgn_imag(z) -> int:
    y = mp.im(z)
    if y > 0:
        return 1
    if y < 0:
        return -1
    return 0


def _dawson_maclaurin(z):
    # term ratio -2 z^2 / (2k+3); terms peak near k ~ |z|^2
    z2 = z * z
    term = z
    acc = z
    k = 0
    peak = abs(z2)
    while True:
        term = term * (-2 * z2) / (2 * k + 3)
        acc += term
        k += 1
        if k > peak and abs(term) < mp.eps * abs(acc):
            return acc


def _dawson_series_tail(z):
    # sum (2k-1)!!/(2^{k+1} z^{2k+1}), truncated at the smallest term
    z2 = z * z
    term = 1 / (2 * z)
    acc = term
    k = 0
    while True:
        nxt = term * (2 * k + 1) / (2 * z2)
        if abs(nxt) >= abs(term) or abs(nxt) < mp.eps * abs(acc):
            return acc
        acc += nxt
        term = nxt
        k += 1


def dawson(z):
    """D(z) = e^{-z^2} int_0^z e^{t^2} dt, entire and odd."""
    zz = mp.mpc(z)
    if zz == 0:
        return mp.mpf(0)
    real_input = mp.im(zz) == 0
    if mp.re(zz) < 0:
        out = -dawson(-zz)
        return mp.re(out) if real_input else out
    r2 = abs(zz) ** 2
    if r2 <= (mp.dps + 6) * _LN10:
        boost = int(0.4343 * r2) + 10
        with mp.extradps(boost):
            out = _dawson_maclaurin(mp.mpc(zz))
        out = +out
    else:
        out = _dawson_series_tail(zz)
        s = _sgn_imag(zz)
        if s:
            out += s * mp.j * (mp.sqrt(mp.pi) / 2) * mp.exp(-zz * zz)
    return mp.re(out) if real_input else out


def erfi(z):
    """(2/sqrt(pi)) int_0^z e^{t^2} dt.  Exponents this large never overflow
    in mp arithmetic, so the growth along the real axis is harmless."""
    zz = mp.mpc(z)
    out = 2 / mp.sqrt(mp.pi) * mp.exp(zz * zz) * dawson(zz)
    return mp.re(out) if mp.im(mp.mpc(z)) == 0 else out


def e_mod_deficit(z):
    """(z^2 (2 z D(z) - 1) - 1/2) / sqrt(pi); even, O(z^{-2}) for large |z|
    away from the diagonals arg z = +-pi/4, where the oscillatory term
    i*sgn(Im z) z^3 e^{-z^2} stops decaying."""
    zz = mp.mpc(z)
    r2 = abs(zz) ** 2
    if r2 <= (mp.dps + 12) * _LN10:
        boost = int(0.4343 * r2 + 4 * mp.log10(1 + abs(zz))) + 12
        with mp.extradps(boost):
            zb = mp.mpc(zz)
            val = zb * zb * (2 * zb * dawson(zb) - 1) - mp.mpf(1) / 2
        return +val / mp.sqrt(mp.pi)
    # own large-z series: sum_{k>=2} (2k-1)!!/(2^k z^{2k-2}), then the
    # exponentially small completion
    z2 = zz * zz
    term = 3 / (4 * z2)
    acc = term
    k = 2
    while True:
        nxt = term * (2 * k + 1) / (2 * z2)
        if abs(nxt) >= abs(term) or abs(nxt) < mp.eps * (abs(acc) + mp.eps):
            break
        acc += nxt
        term = nxt
        k += 1
    s = _sgn_imag(zz)
    if s:
        acc += s * mp.j * mp.sqrt(mp.pi) * zz**3 * mp.exp(-z2)
    return acc / mp.sqrt(mp.pi)


def e_mod(z):
    """2/sqrt(pi) z^3 D(z) - z^2/sqrt(pi); tends to 1/(2 sqrt(pi)), and
    e_mod(z) - 1/(2 sqrt(pi)) = e_mod_deficit(z)."""
    return e_mod_deficit(z) + 1 / (2 * mp.sqrt(mp.pi))


def dawson_deficit(z):
    """2 z D(z) - 1; O(z^{-2}) at infinity away from the diagonals.

    Forming the difference through dawson cancels about 2 log10|z| digits,
    so it is taken at raised precision below the crossover and from its own
    series sum_{k>=1} (2k-1)!!/(2^k z^{2k}) beyond it."""
    zz = mp.mpc(z)
    r2 = abs(zz) ** 2
    if r2 <= (mp.dps + 12) * _LN10:
        boost = int(0.4343 * r2 + 2 * mp.log10(1 + abs(zz))) + 10
        with mp.extradps(boost):
            zb = mp.mpc(zz)
            val = 2 * zb * dawson(zb) - 1
        return +val
    z2 = zz * zz
    term = 1 / (2 * z2)
    acc = term
    k = 1
    while True:
        nxt = term * (2 * k + 1) / (2 * z2)
        if abs(nxt) >= abs(term) or abs(nxt) < mp.eps * (abs(acc) + mp.eps):
            break
        acc += nxt
        term = nxt
        k += 1
    s = _sgn_imag(zz)
    if s:
        acc += s * mp.j * mp.sqrt(mp.pi) * zz * mp.exp(-z2)
    return acc


def _emodd_tail2(z):
    # sqrt(pi) e_mod_deficit(z) - 3/(4 z^2) - 15/(8 z^4): the subtraction
    # costs up to 8 log10|z| digits, so raise precision or use the series
    # starting at 105/(16 z^6)
    zz = mp.mpc(z)
    r2 = abs(zz) ** 2
    if r2 <= (mp.dps + 12) * _LN10:
        boost = int(0.4343 * r2 + 8 * mp.log10(1 + abs(zz))) + 12
        with mp.extradps(boost):
            zb = mp.mpc(zz)
            z2 = zb * zb
            val = mp.sqrt(mp.pi) * e_mod_deficit(zb) - 3 / (4 * z2) - 15 / (8 * z2 * z2)
        return +val
    z2 = zz * zz
    term = 105 / (16 * z2**3)
    acc = term
    k = 4
    while True:
        nxt = term * (2 * k + 1) / (2 * z2)
        if abs(nxt) >= abs(term) or abs(nxt) < mp.eps * (abs(acc) + mp.eps):
            break
        acc += nxt
        term = nxt
        k += 1
    s = _sgn_imag(zz)
    if s:
        acc += s * mp.j * mp.sqrt(mp.pi) * zz**3 * mp.exp(-z2)
    return acc


# ---------------------------------------------------------------------------
# Gauss-Legendre panels

_GL_CACHE: dict[tuple[int, int], tuple[list, list]] = {}


def _gl_nodes(n: int):
    key = (n, mp.prec)
    cached = _GL_CACHE.get(key)
    if cached is not None:
        return cached
    nodes = []
    weights = []
    with mp.extradps(12):
        for i in range(1, n // 2 + 2):
            if 2 * i - 1 > n:
                break
            x = mp.cos(mp.pi * (i - mp.mpf(1) / 4) / (n + mp.mpf(1) / 2))
            for _ in range(60):
                p0, p1 = mp.mpf(1), x
                for k in range(2, n + 1):
                    p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
                dp = n * (x * p1 - p0) / (x * x - 1)
                dx = p1 / dp
                x -= dx
                if abs(dx) < mp.eps * 10:
                    break
            p0, p1 = mp.mpf(1), x
            for k in range(2, n + 1):
                p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
            dp = n * (x * p1 - p0) / (x * x - 1)
            w = 2 / ((1 - x * x) * dp * dp)
            nodes.append(+x)
            weights.append(+w)
    full_nodes = [-t for t in nodes if t != 0][::-1] + [t for t in nodes]
    full_weights = [w for t, w in zip(nodes, weights) if t != 0][::-1] + weights
    _GL_CACHE[key] = (full_nodes, full_weights)
    return full_nodes, full_weights


def integrate_segment(f, a, b, order: int = 24):
    """Gauss-Legendre of f along the straight segment from a to b."""
    nodes, weights = _gl_nodes(order)
    mid = (mp.mpc(a) + mp.mpc(b)) / 2
    half = (mp.mpc(b) - mp.mpc(a)) / 2
    acc = mp.mpc(0)
    for t, w in zip(nodes, weights):
        acc += w * f(mid + half * t)
    return half * acc


def _adaptive_segment(f, a, b, tol, depth: int):
    lo = integrate_segment(f, a, b, 24)
    hi = integrate_segment(f, a, b, 34)
    err = abs(hi - lo)
    if err <= tol:
        return hi
    if depth <= 0:
        raise QuadratureError(
            f"segment [{a}, {b}] did not converge (residual {mp.nstr(err)}, tol {mp.nstr(tol)})"
        )
    m = (mp.mpc(a) + mp.mpc(b)) / 2
    half_tol = tol / 2
    return _adaptive_segment(f, a, m, half_tol, depth - 1) + _adaptive_segment(
        f, m, b, half_tol, depth - 1
    )


@dataclass(frozen=True)
class RayContour:
    """Truncated ray r e^{i theta}, r_min <= r <= r_max, oriented outward."""

    theta: object
    r_min: object
    r_max: object

    def __post_init__(self) -> None:
        object.__setattr__(self, "theta", mp.mpf(self.theta))
        object.__setattr__(self, "r_min", mp.mpf(self.r_min))
        object.__setattr__(self, "r_max", mp.mpf(self.r_max))
        if not 0 <= self.r_min < self.r_max:
            raise ValueError("need 0 <= r_min < r_max")

    def point(self, r):
        return mp.mpf(r) * mp.expj(self.theta)

    def distance_to(self, x) -> object:
        """Distance from x to the full ray {r e^{i theta}: r >= 0}."""
        xz = mp.mpc(x)
        u = xz * mp.expj(-self.theta)
        if mp.re(u) <= 0:
            return abs(xz)
        return abs(mp.im(u))


def ray_integrate(f, contour: RayContour, tol, max_depth: int = 24):
    """Integrate f along the contour with geometrically growing panels.

    Returns (value, error_estimate); the estimate is the sum of the panel
    tolerances actually enforced, so it is conservative whenever the
    bisection criterion is."""
    tol = mp.mpf(tol)
    edges = [contour.r_min]
    if edges[-1] == 0:
        # doubling cannot leave zero; seed with a panel the bisection refines
        edges.append(contour.r_max / 1024)
    while edges[-1] < contour.r_max:
        edges.append(min(2 * edges[-1], contour.r_max))
    direction = mp.expj(contour.theta)
    per_panel = tol / len(edges)
    acc = mp.mpc(0)
    for lo, hi in zip(edges, edges[1:]):
        acc += _adaptive_segment(f, lo * direction, hi * direction, per_panel, max_depth)
    return acc, per_panel * (len(edges) - 1)


# ---------------------------------------------------------------------------
# tail bounds and extrapolation

def gaussian_tail(n_cut: int, beta, s: int = 0):
    """Upper bound for sum_{n > n_cut} n^s e^{-beta n^2}, for s in {0, 1, 2}.

    Uses (n_cut+m)^2 >= n_cut^2 + 2 n_cut m, giving a geometric majorant with
    ratio q = e^{-2 beta n_cut}.
    """
    beta = mp.mpf(beta)
    if beta <= 0 or n_cut < 1:
        raise ValueError("need beta > 0 and n_cut >= 1")
    q = mp.exp(-2 * beta * n_cut)
    head = mp.exp(-beta * n_cut**2)
    g1 = q / (1 - q)
    g2 = q / (1 - q) ** 2
    if s == 0:
        return head * g1
    if s == 1:
        return head * (n_cut * g1 + g2)
    if s == 2:
        g3 = q * (1 + q) / (1 - q) ** 3
        return head * (n_cut**2 * g1 + 2 * n_cut * g2 + g3)
    raise ValueError("s must be 0, 1, or 2")


def richardson_limit(hs, vals):
    """Neville extrapolation of samples (hs[j], vals[j]) to h = 0.

    Returns (limit, error_estimate) where the estimate is the size of the
    last diagonal correction.  hs must be positive and strictly decreasing.
    """
    if len(hs) != len(vals) or len(hs) < 2:
        raise ValueError("need matching sequences of length >= 2")
    hs = [mp.mpf(h) for h in hs]
    if any(h2 >= h1 for h1, h2 in zip(hs, hs[1:])) or hs[-1] <= 0:
        raise ValueError("hs must be positive and strictly decreasing")
    tab = [mp.mpmathify(v) for v in vals]
    diag_prev = tab[0]
    n = len(tab)
    for m in range(1, n):
        for j in range(n - m):
            tab[j] = (hs[j] * tab[j + 1] - hs[j + m] * tab[j]) / (hs[j] - hs[j + m])
        if m < n - 1:
            diag_prev = tab[0]
    return tab[0], abs(tab[0] - diag_prev)


def fit_poly_coeffs(xs, ys):
    """Coefficients c_0..c_{n-1} of the degree n-1 polynomial through (xs, ys)."""
    n = len(xs)
    if n != len(ys) or n == 0:
        raise ValueError("need matching nonempty sequences")
    rows = []
    for x in xs:
        xz = mp.mpc(x)
        row = [mp.mpc(1)]
        for _ in range(n - 1):
            row.append(row[-1] * xz)
        rows.append(row)
    sol = mp.lu_solve(mp.matrix(rows), mp.matrix([[mp.mpc(y)] for y in ys]))
    return [sol[i] for i in range(n)]

"""Singularity analysis at high precision.

All expansions are written in ``Z = sqrt(1 - z/rho)``, so a function with a
square-root singularity reads ``f0 + f1 Z + f2 Z^2 + ...`` and the transfer
theorem turns the coefficient of ``Z^(2 alpha)`` (alpha = 1/2 or 3/2) into
``[z^n] ~ f_{2 alpha} / Gamma(-alpha) n^(-alpha-1) rho^(-n)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

import mpmath as mp

from .links import build_E, build_F, build_G, build_K
from .maps import POLYNOMIALS, Polynomial, solve
from .series import TruncSeries

DEFAULT_DIGITS = 60


class SingularityError(ArithmeticError):
    """Newton failure, wrong branch or a violated tail bound."""


def _mpf(c):
    if isinstance(c, Fraction):
        return mp.mpf(c.numerator) / c.denominator
    return mp.mpf(c)


def gamma_minus_half():
    g = mp.gamma(mp.mpf(-1) / 2)
    if abs(g + 2 * mp.sqrt(mp.pi)) > mp.eps * 100:
        raise SingularityError("Gamma(-1/2) disagrees with -2 sqrt(pi)")
    return g


def gamma_minus_three_halves():
    g = mp.gamma(mp.mpf(-3) / 2)
    if abs(g - 4 * mp.sqrt(mp.pi) / 3) > mp.eps * 100:
        raise SingularityError("Gamma(-3/2) disagrees with 4 sqrt(pi)/3")
    return g


# -- numeric series in Z --------------------------------------------------

class ZSeries:
    """Truncated power series in ``Z`` with mpf coefficients."""

    __slots__ = ("c",)

    def __init__(self, coeffs, order: int):
        c = [mp.mpf(x) for x in list(coeffs)[: order + 1]]
        self.c = c + [mp.mpf(0)] * (order + 1 - len(c))

    @property
    def order(self) -> int:
        return len(self.c) - 1

    def __getitem__(self, k):
        return self.c[k] if k < len(self.c) else mp.mpf(0)

    def _coerce(self, other):
        if isinstance(other, ZSeries):
            return other
        return ZSeries([other], self.order)

    def __add__(self, other):
        o = self._coerce(other)
        n = min(self.order, o.order)
        return ZSeries([self.c[i] + o.c[i] for i in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self):
        return ZSeries([-x for x in self.c], self.order)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, ZSeries):
            return ZSeries([x * other for x in self.c], self.order)
        n = min(self.order, other.order)
        out = [mp.mpf(0)] * (n + 1)
        for i, a in enumerate(self.c[: n + 1]):
            if a:
                for j in range(n + 1 - i):
                    out[i + j] += a * other.c[j]
        return ZSeries(out, n)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, ZSeries):
            return self * (1 / mp.mpf(other))
        return self * other.reciprocal()

    def reciprocal(self):
        if not self.c[0]:
            raise SingularityError("reciprocal of a series without constant term")
        out = [1 / self.c[0]]
        for n in range(1, self.order + 1):
            s = sum(self.c[k] * out[n - k] for k in range(1, n + 1))
            out.append(-s / self.c[0])
        return ZSeries(out, self.order)

    def compose_into(self, outer: Sequence) -> "ZSeries":
        """``sum_k outer[k] * self^k``; the constant term of ``self`` must vanish."""
        if self.c[0]:
            raise SingularityError("inner series must vanish at Z = 0")
        acc = ZSeries([outer[0]], self.order)
        power = ZSeries([1], self.order)
        for k in range(1, min(len(outer), self.order + 1)):
            power = power * self
            acc = acc + power * outer[k]
        return acc

    def exp(self):
        base = mp.exp(self.c[0])
        rest = ZSeries([0] + self.c[1:], self.order)
        return rest.compose_into([1 / mp.factorial(k) for k in range(self.order + 1)]) * base

    def sqrt(self):
        a0 = self.c[0]
        if a0 <= 0:
            raise SingularityError("square root needs a positive constant term")
        rest = ZSeries([0] + [x / a0 for x in self.c[1:]], self.order)
        coeffs = [mp.binomial(mp.mpf(1) / 2, k) for k in range(self.order + 1)]
        return rest.compose_into(coeffs) * mp.sqrt(a0)

    def __repr__(self):
        return "ZSeries(" + ", ".join(mp.nstr(x, 12) for x in self.c) + ")"


def regular_expansion(func: Callable, rho, order: int) -> ZSeries:
    """Taylor expansion of an analytic ``func`` at ``rho`` rewritten in ``Z``."""
    taylor = mp.taylor(func, rho, order // 2)
    c = [mp.mpf(0)] * (order + 1)
    for j, t in enumerate(taylor):
        if 2 * j <= order:
            c[2 * j] = t * (-rho) ** j
    return ZSeries(c, order)


# -- result types ---------------------------------------------------------

@dataclass(frozen=True)
class GrowthDescription:
    """``[z^n] ~ prefactor * constant / Gamma(-alpha) * n^exponent * base^n``."""

    exponent: Fraction
    base: object
    period: int = 1
    extra_factor: str = ""
    prefactor: str = ""
    parity_constants: dict = field(default_factory=dict)


@dataclass(frozen=True)
class SingularData:
    rho: object
    y_at_rho: object
    alpha: Fraction
    expansion: list
    transfer_constant: object
    growth_description: GrowthDescription
    residual: object = 0

    @property
    def scaled_constant(self):
        """The transfer constant divided by ``Gamma(-alpha)``."""
        return self.transfer_constant / mp.gamma(-mp.mpf(self.alpha.numerator) / self.alpha.denominator)

    def predict(self, n: int):
        g = self.growth_description
        val = self.scaled_constant * mp.mpf(n) ** _mpf(g.exponent) * mp.mpf(g.base) ** n
        if g.parity_constants:
            val *= g.parity_constants["odd" if n % 2 else "even"] / self.transfer_constant
        return val


# -- bivariate functions --------------------------------------------------

class _Bivariate:
    """Value and partial derivatives of ``G(z, y)``."""

    def __init__(self, poly: Polynomial | None = None, func: Callable | None = None):
        self.poly = poly
        self.func = func
        self._cache = {}

    def d(self, i: int, j: int, z, y):
        if self.poly is not None:
            key = (i, j)
            if key not in self._cache:
                p = self.poly
                for _ in range(i):
                    p = p.diff(0)
                for _ in range(j):
                    p = p.diff(1)
                self._cache[key] = {e: _mpf(c) for e, c in p.terms.items()}
            total = mp.mpf(0)
            for (ez, ey), c in self._cache[key].items():
                total += c * z ** ez * y ** ey
            return total
        if i == 0 and j == 0:
            return self.func(z, y)
        return mp.diff(self.func, (z, y), (i, j))


def _damped_newton(G: _Bivariate, z, y, tol, max_iter=200):
    for _ in range(max_iter):
        f1, f2 = G.d(0, 0, z, y), G.d(0, 1, z, y)
        a, b = G.d(1, 0, z, y), G.d(0, 1, z, y)
        c, d = G.d(1, 1, z, y), G.d(0, 2, z, y)
        det = a * d - b * c
        if not det:
            raise SingularityError("singular Jacobian")
        dz = (d * f1 - b * f2) / det
        dy = (a * f2 - c * f1) / det
        norm0 = abs(f1) + abs(f2)
        step = mp.mpf(1)
        while step > mp.mpf(2) ** -30:
            zn, yn = z - step * dz, y - step * dy
            if zn > 0 and yn > 0:
                norm1 = abs(G.d(0, 0, zn, yn)) + abs(G.d(0, 1, zn, yn))
                if norm1 < norm0 or norm0 < tol:
                    break
            step /= 2
        else:
            raise SingularityError("damped Newton made no progress")
        z, y = zn, yn
        if abs(dz) * step < tol and abs(dy) * step < tol:
            return z, y
    raise SingularityError("Newton did not converge")


def _ratio_seed(series: TruncSeries):
    """Estimate the radius from the last two nonzero coefficients."""
    nz = [n for n in range(series.order + 1) if series[n]]
    if len(nz) < 2:
        raise SingularityError("too few coefficients to seed Newton")
    n1, n0 = nz[-1], nz[-2]
    gap = n1 - n0
    r = _mpf(series[n0]) / _mpf(series[n1]) * (mp.mpf(n1) / n0) ** mp.mpf(1.5)
    return r ** (mp.mpf(1) / gap)


def _partial_sum(series: TruncSeries, x):
    total = mp.mpf(0)
    for c in reversed(series.coeffs):
        total = total * x + _mpf(c)
    return total


def _solve_expansion(G: _Bivariate, rho, y0, terms: int) -> list:
    """Coefficients ``y_k`` of ``y = sum y_k Z^k`` on the branch through ``(rho, y0)``."""
    order = terms + 1
    # bivariate Taylor coefficients g[i][j] of G at (rho, y0)
    g = {}
    for i in range(order // 2 + 1):
        for j in range(order + 1):
            if 2 * i + j <= order + 1 and (i, j) != (0, 0):
                g[i, j] = G.d(i, j, rho, y0) / (mp.factorial(i) * mp.factorial(j))
    dz = ZSeries([0, 0, -rho], order)                  # z - rho

    def residual(ys):
        dy = ZSeries([0] + ys, order)
        total = ZSeries([0], order)
        dz_pow = [ZSeries([1], order)]
        for i in range(1, order // 2 + 1):
            dz_pow.append(dz_pow[-1] * dz)
        dy_pow = [ZSeries([1], order)]
        for j in range(1, order + 1):
            dy_pow.append(dy_pow[-1] * dy)
        for (i, j), c in g.items():
            total = total + dz_pow[i] * dy_pow[j] * c
        return total

    gz, gyy = g[1, 0], g[0, 2]
    if not gyy or gz / gyy <= 0:
        raise SingularityError("no square-root branch at this point")
    # y1^2 g02 + (-rho) g10 = 0 with y decreasing towards the singularity
    y1 = -mp.sqrt(rho * gz / gyy)
    ys = [y1]
    for k in range(2, terms + 1):
        trial = ys + [mp.mpf(0)]
        r = residual(trial)[k + 1]
        trial[-1] = -r / (2 * gyy * y1)
        ys = trial
    return [y0] + ys


def algebraic_singularity(p, branch_hint: TruncSeries, *, digits: int = DEFAULT_DIGITS,
                          terms: int = 4, seeds: int = 5) -> tuple:
    """Dominant singularity of the branch of ``p(z, y) = 0`` through ``branch_hint``.

    ``p`` is a two-variable :class:`Polynomial` or any callable ``(z, y) -> mpf``.
    Returns ``(rho, expansion, residual)`` with ``expansion`` the ``Z``-coefficients
    of ``y``.
    """
    G = _Bivariate(poly=p) if isinstance(p, Polynomial) else _Bivariate(func=p)
    tol = mp.mpf(10) ** -(digits - 10)
    rho0 = _ratio_seed(branch_hint)
    candidates = []
    for s in range(seeds):
        r_seed = rho0 * (1 + mp.mpf(s) / 50 * (-1) ** s)
        y_seed = _partial_sum(branch_hint, r_seed) * (1 + mp.mpf(s) / 20)
        try:
            z, y = _damped_newton(G, r_seed, y_seed, tol)
        except SingularityError:
            continue
        if 0 < z < 1 and y > 0:
            candidates.append((z, y))
    if not candidates:
        raise SingularityError("no admissible root of p = p_y = 0")

    def disagreement(zy):
        z, y = zy
        s = _partial_sum(branch_hint, z)
        return abs(y - s) / y if s <= y * (1 + tol) else mp.inf

    rho, y0 = min(candidates, key=disagreement)
    if disagreement((rho, y0)) > mp.mpf(1) / 2:
        raise SingularityError("root does not lie on the hinted branch")
    residual = max(abs(G.d(0, 0, rho, y0)), abs(G.d(0, 1, rho, y0)))
    if residual > tol:
        raise SingularityError(f"residual {mp.nstr(residual, 5)} above tolerance")
    return rho, _solve_expansion(G, rho, y0, terms), residual


# -- map families ---------------------------------------------------------

def binomial_closed_form(r: int, x):
    """``T_r(x) = x^r B_2(x^2)^r / sqrt(1 - 4 x^2)`` with the Catalan series ``B_2``."""
    u = x * x
    if 4 * u >= 1:
        return mp.nan
    b = 2 / (1 + mp.sqrt(1 - 4 * u))        # (1 - sqrt(1-4u)) / (2u) without cancellation
    return x ** r * b ** r / mp.sqrt(1 - 4 * u)


def _unknot_function(z, y):
    x = (z + z * z * y) ** 2
    return POLYNOMIALS["unknot"](z, y, binomial_closed_form(1, x), binomial_closed_form(3, x))


def map_singularity(family: str, digits: int = DEFAULT_DIGITS, hint_order: int = 64) -> SingularData:
    """Rooted diagrams of one family, counted by the ``plus`` series."""
    with mp.workdps(digits + 10):
        sol = solve(family, hint_order)
        p = _unknot_function if family == "unknot" else POLYNOMIALS[family]
        rho, ys, residual = algebraic_singularity(p, sol.M, digits=digits)
        # z*M = rho (1 - Z^2) y(Z); the two conjugate singularities +-rho add up
        zy = ZSeries([rho, 0, -rho], len(ys) - 1) * ZSeries(ys, len(ys) - 1)
        c = 2 * zy[1]
        if family == "all":
            growth = GrowthDescription(Fraction(-3, 2), 1 / rho, period=2, extra_factor="2^(n/2)")
        else:
            growth = GrowthDescription(Fraction(-3, 2), 1 / rho, period=2)
        return SingularData(rho, ys[0], Fraction(1, 2), zy.c, c, growth, residual)


def unrooted_constants(family: str, digits: int = DEFAULT_DIGITS) -> SingularData:
    """Unrooted diagrams: the rooted form divided by ``2n``."""
    rooted = map_singularity(family, digits)
    g = rooted.growth_description
    growth = GrowthDescription(g.exponent - 1, g.base, g.period, g.extra_factor, prefactor="1/(2n)")
    return SingularData(rooted.rho, rooted.y_at_rho, rooted.alpha, rooted.expansion,
                        rooted.transfer_constant, growth, rooted.residual)


# -- links ----------------------------------------------------------------

class _LinkFunctions:
    """Numerical evaluation of the analytic pieces around the singularity of ``F``."""

    def __init__(self, digits: int, order: int | None = None):
        self.digits = digits
        self.eps = mp.mpf(10) ** -(digits + 5)
        if order is None:
            # [z^n]F ~ rho^-n, so F(z^2) at rho has terms ~ rho^n; rho > 0.4 is a safe bound
            order = int((digits + 10) / math.log10(1 / 0.45)) + 20
        self.order = order
        F = build_F(order)
        self.F = [_mpf(c) for c in F.coeffs]
        self.F_exact = F

    def _poly(self, x):
        total = mp.mpf(0)
        for c in reversed(self.F):
            total = total * x + c
        last = self.F[-1] * abs(x) ** (len(self.F) - 1)
        if abs(x) < 1 and last > self.eps:
            raise SingularityError("truncated series of F too short for this argument")
        return total

    def F_at(self, x):
        """``F(x)`` for ``|x|`` well inside the disc of convergence."""
        return self._poly(x)

    @staticmethod
    def E(x):
        return x * x + 2 * x ** 4 / (1 - x * x)

    def K(self, x):
        # multisets of odd torus knots: prod over odd m >= 3 of (1 - x^m)^-2
        log_k, m = mp.mpf(0), 3
        while True:
            term = -2 * mp.log(1 - x ** m)
            log_k += term
            if abs(term) < self.eps:
                return mp.exp(log_k)
            m += 2

    def pleth_tail(self, x, fn):
        """``sum_{k>=2} fn(x^k)/k`` truncated once ``|x|^k`` falls below tolerance."""
        total, k = mp.mpf(0), 2
        xa = abs(x)
        while True:
            total += fn(x ** k) / k
            if xa ** k < self.eps * (1 - xa):
                return total
            k += 1

    def log_a(self, z):
        """``log(e xi(z))`` where ``xi = f exp(sum_{k>=2} F(z^k)/k)``."""
        return 1 + mp.log(self.E(z)) + mp.log(self.K(z)) + self.pleth_tail(z, self.F_at)

    def T_pointed(self, x):
        return self.F_at(x) / self.E(x)

    def Lbar(self, x):
        t = self.T_pointed(x)
        return t - self.E(x) * t * t / 2 + self.E(x) * self.T_pointed(x * x) / 2


def _one_plus_y_inverse(W: ZSeries) -> ZSeries:
    """Solve ``(1 + Y) e^-Y = 1 - W^2`` for ``Y`` with ``Y ~ sqrt(2) W``."""
    order = W.order
    # 1 - (1+Y)e^-Y = Y^2 g(Y), g(Y) = sum_{n>=2} (-1)^n (n-1)/n! Y^(n-2)
    g = [(-1) ** n * mp.mpf(n - 1) / mp.factorial(n) for n in range(2, order + 3)]
    Y = W * mp.sqrt(2)
    for _ in range(order + 1):
        gy = Y.compose_into(g)
        Y = W / gy.sqrt()
    return Y


@dataclass(frozen=True)
class LinkSingularities:
    Lbar: SingularData
    Lhat: SingularData
    L: SingularData
    F_expansion: list
    tail_terms: int


def links_singularity(digits: int = DEFAULT_DIGITS, terms: int = 5) -> LinkSingularities:
    with mp.workdps(digits + 15):
        fn = _LinkFunctions(digits)
        tol = mp.mpf(10) ** -(digits - 10)
        # log_a increases on (0, rho]; bracket the root around the ratio estimate
        rho0 = _ratio_seed(fn.F_exact)
        lo, hi = rho0 * mp.mpf(0.9), rho0 * mp.mpf(1.02)
        if not fn.log_a(lo) < 0 < fn.log_a(hi):
            raise SingularityError("could not bracket the singularity of F")
        rho = mp.findroot(fn.log_a, (lo, hi), solver="anderson", tol=tol ** 2)
        if not 0 < rho < 1:
            raise SingularityError("singularity of F outside (0, 1)")
        residual = abs(fn.log_a(rho))

        # (1 + Y) e^-Y = a(z) = exp(log_a) near rho, with F = 1 + Y
        A = regular_expansion(lambda z: mp.exp(fn.log_a(z)), rho, terms + 1)
        one_minus_a = ZSeries([1], A.order) - A
        B = ZSeries(one_minus_a.c[2:], terms - 1)         # (1 - A)/Z^2
        W = -(ZSeries([0, 1], terms) * ZSeries(B.sqrt().c, terms))
        Fz = _one_plus_y_inverse(W) + 1

        E = regular_expansion(fn.E, rho, terms)
        Tp = Fz * E.reciprocal()
        Tp2 = regular_expansion(lambda z: fn.T_pointed(z * z), rho, terms)
        Lbar = Tp - E * Tp * Tp / 2 + E * Tp2 / 2
        if abs(Lbar[1]) > tol:
            raise SingularityError("square-root term of Lbar does not cancel")

        H = regular_expansion(lambda z: fn.pleth_tail(z, lambda x: fn.Lbar(x) - 1), rho, terms)
        Lhat = (Lbar - 1 + H).exp()

        growth = GrowthDescription(Fraction(-5, 2), 1 / rho)
        lbar = SingularData(rho, Lbar[0], Fraction(3, 2), Lbar.c, Lbar[3], growth, residual)
        lhat = SingularData(rho, Lhat[0], Fraction(3, 2), Lhat.c, Lhat[3], growth, residual)

        # even part of Lhat(z^2)/(1 - z) is Lhat(z^2)/(1 - z^2); 1 - z^2/rho ~ 2 (1 - z/sqrt(rho))
        even = 2 ** mp.mpf(2.5) * Lhat[3] / (1 - rho)
        odd = even * mp.sqrt(rho)
        lgrowth = GrowthDescription(Fraction(-5, 2), 1 / mp.sqrt(rho), period=2,
                                    parity_constants={"even": even, "odd": odd})
        link = SingularData(mp.sqrt(rho), None, Fraction(3, 2), [], even, lgrowth, residual)
        return LinkSingularities(lbar, lhat, link, Fz.c, fn.order)


# -- knots ----------------------------------------------------------------

@dataclass(frozen=True)
class KnotAsymptotics:
    c: object
    alpha: Fraction
    beta: object
    ratios: dict

    def predict(self, n: int):
        return self.c * mp.mpf(n) ** _mpf(self.alpha) * mp.exp(self.beta * mp.sqrt(n))


def knot_coefficients(n_max: int) -> list:
    """``[z^n]K`` from ``(1 - z)^2 prod (1 + z^n)^2`` (exact integers)."""
    p = build_G(n_max).coeffs
    return [p[n] - 2 * (p[n - 1] if n >= 1 else 0) + (p[n - 2] if n >= 2 else 0)
            for n in range(n_max + 1)]


def knot_asymptotics(n_max: int = 2000, checkpoints: Sequence[int] | None = None,
                     digits: int = 30) -> KnotAsymptotics:
    if n_max < 100:
        raise ValueError("n_max must be at least 100")
    with mp.workdps(digits):
        c = mp.pi ** 2 / 4 * mp.mpf(6) ** (mp.mpf(-5) / 4)
        beta = mp.pi * mp.sqrt(mp.mpf(2) / 3)
        res = KnotAsymptotics(c, Fraction(-7, 4), beta, {})
        coeffs = knot_coefficients(n_max)
        if checkpoints is None:
            checkpoints = sorted({n for n in (100, 250, 500, 1000, 2000, n_max) if n <= n_max})
        for n in checkpoints:
            res.ratios[n] = mp.mpf(coeffs[n]) / res.predict(n)
        return res


def empirical_ratios(series: TruncSeries, data: SingularData, indices: Sequence[int],
                     extra: Callable[[int], object] | None = None) -> dict:
    """``[z^n]series / prediction`` at the given indices."""
    out = {}
    for n in indices:
        pred = data.predict(n)
        if extra is not None:
            pred *= extra(n)
        out[n] = _mpf(series[n]) / pred
    return out

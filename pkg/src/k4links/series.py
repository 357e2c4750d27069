"""Truncated power series with exact rational coefficients.

Coefficients are Python ints whenever they are integral and
:class:`fractions.Fraction` otherwise, so integer-valued counting series stay
on the fast big-integer path while ``exp`` and friends remain exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from numbers import Rational
from typing import Callable, Iterable, Mapping, Sequence


class SeriesError(ValueError):
    """Raised when an operation is undefined for the given series."""


class FixpointDivergence(RuntimeError):
    """Raised when a grammar system does not stabilise within its pass budget."""


def _norm(x):
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, Rational):
        return _norm(Fraction(x.numerator, x.denominator))
    raise TypeError(f"coefficient {x!r} is not an exact rational")


def _div(a, b):
    if isinstance(a, int) and isinstance(b, int) and a % b == 0:
        return a // b
    return _norm(Fraction(a) / b)


def _conv(a: Sequence, b: Sequence, order: int) -> list:
    # Cauchy product truncated at `order`, skipping zero coefficients of a.
    out = [0] * (order + 1)
    nb = len(b)
    for i, ai in enumerate(a[: order + 1]):
        if not ai:
            continue
        for j in range(min(nb, order + 1 - i)):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


class TruncSeries:
    """Power series ``sum c_n z^n`` known exactly for ``0 <= n <= order``.

    Instances are immutable. Binary operations truncate to the smaller of the
    two orders. Plain ints and Fractions are accepted as constant series.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        c = [_norm(x) for x in coeffs]
        if order is not None:
            if order < 0:
                raise SeriesError("order must be nonnegative")
            c = (c + [0] * (order + 1 - len(c)))[: order + 1]
        if not c:
            raise SeriesError("a series needs at least one coefficient")
        self._c = tuple(c)

    # -- constructors -----------------------------------------------------

    @classmethod
    def _raw(cls, coeffs) -> "TruncSeries":
        s = object.__new__(cls)
        s._c = tuple(coeffs)
        return s

    @classmethod
    def zero(cls, order: int) -> "TruncSeries":
        return cls._raw([0] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls.constant(1, order)

    @classmethod
    def constant(cls, value, order: int) -> "TruncSeries":
        return cls._raw([_norm(value)] + [0] * order)

    @classmethod
    def monomial(cls, k: int, order: int, coeff=1) -> "TruncSeries":
        c = [0] * (order + 1)
        if k <= order:
            c[k] = _norm(coeff)
        return cls._raw(c)

    @classmethod
    def z(cls, order: int) -> "TruncSeries":
        return cls.monomial(1, order)

    @classmethod
    def from_function(cls, f: Callable[[int], object], order: int) -> "TruncSeries":
        return cls(f(n) for n in range(order + 1))

    # -- basic protocol ---------------------------------------------------

    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def coeffs(self) -> tuple:
        return self._c

    def __getitem__(self, n):
        if isinstance(n, slice):
            return self._c[n]
        if n < 0:
            raise IndexError("negative exponent")
        if n > self.order:
            raise IndexError(f"[z^{n}] is beyond the truncation order {self.order}")
        return self._c[n]

    def __len__(self) -> int:
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, TruncSeries):
            n = min(self.order, other.order)
            return self._c[: n + 1] == other._c[: n + 1]
        if isinstance(other, (int, Fraction)):
            return self == TruncSeries.constant(other, self.order)
        return NotImplemented

    def __hash__(self):
        return hash(self._c)

    def __repr__(self) -> str:
        return f"TruncSeries({self.to_string()}, order={self.order})"

    def to_string(self, var: str = "z") -> str:
        terms = []
        for n, c in enumerate(self._c):
            if not c:
                continue
            if n == 0:
                terms.append(str(c))
            else:
                mono = var if n == 1 else f"{var}^{n}"
                terms.append(mono if c == 1 else f"{c} {mono}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None for the zero series."""
        for n, c in enumerate(self._c):
            if c:
                return n
        return None

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise SeriesError(f"cannot extend a series of order {self.order} to {order}")
        return TruncSeries._raw(self._c[: order + 1])

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._c)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self._c)

    def __call__(self, x):
        """Evaluate the truncated polynomial at ``x`` (Horner)."""
        acc = 0
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    # -- ring operations --------------------------------------------------

    def _coerce(self, other) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return TruncSeries.constant(other, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        return TruncSeries._raw(_norm(a + b) for a, b in zip(self._c[: n + 1], other._c))

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries._raw(-a for a in self._c)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncSeries._raw(_norm(a * other) for a in self._c)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return TruncSeries._raw(_norm(x) for x in _conv(self._c, other._c, n))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("series division by zero")
            return TruncSeries._raw(_div(a, other) for a in self._c)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return div(self, other)

    def __rtruediv__(self, other):
        return div(self._coerce(other), self)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise SeriesError("only nonnegative integer powers are supported")
        result = TruncSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, k: int) -> "TruncSeries":
        """Multiply by ``z^k`` keeping the order."""
        if k < 0:
            raise SeriesError("negative shift")
        return TruncSeries._raw(([0] * k + list(self._c))[: self.order + 1])

    def derivative(self) -> "TruncSeries":
        """Formal derivative; the result has order one less."""
        if self.order == 0:
            return TruncSeries.zero(0)
        return TruncSeries._raw(n * c for n, c in enumerate(self._c) if n)

    # convenience aliases for the module-level operations
    def compose(self, inner: "TruncSeries") -> "TruncSeries":
        return compose(self, inner)

    def exp(self) -> "TruncSeries":
        return exp(self)

    def power_substitute(self, k: int) -> "TruncSeries":
        return power_substitute(self, k)

    def pleth_exp(self) -> "TruncSeries":
        return pleth_exp(self)


# -- module-level operations ----------------------------------------------


def add(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    return a + b


def mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    return a * b


def div(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Quotient ``q`` with ``q*b == a`` up to the common truncation order.

    When ``b`` has valuation ``v > 0`` the common factor ``z^v`` is cancelled
    first, which costs ``v`` orders of precision.
    """
    vb = b.valuation()
    if vb is None:
        raise SeriesError("division by the zero series")
    va = a.valuation()
    if va is not None and va < vb:
        raise SeriesError(f"valuation of numerator ({va}) is below that of the divisor ({vb})")
    n = min(a.order, b.order) - vb
    if n < 0:
        raise SeriesError("not enough precision to divide")
    num = list(a._c[vb: vb + n + 1])
    den = b._c[vb: vb + n + 1]
    lead = den[0]
    q = [0] * (n + 1)
    for k in range(n + 1):
        acc = num[k]
        for j in range(1, k + 1):
            if den[j]:
                acc -= den[j] * q[k - j]
        q[k] = _div(acc, lead)
    return TruncSeries._raw(q)


def compose(outer: TruncSeries, inner: TruncSeries) -> TruncSeries:
    """``outer(inner(z))``; the inner series must have no constant term."""
    if inner._c[0] != 0:
        raise SeriesError("inner series of a composition must have zero constant term")
    n = min(outer.order, inner.order)
    v = inner.valuation()
    result = [0] * (n + 1)
    result[0] = outer._c[0]
    if v is None:
        return TruncSeries._raw(result)
    power = inner.truncate(n)
    for k in range(1, n // v + 1):
        ck = outer._c[k] if k <= outer.order else 0
        if ck:
            for i, p in enumerate(power._c):
                if p:
                    result[i] += ck * p
        if (k + 1) * v <= n:
            power = power * inner
    return TruncSeries._raw(_norm(x) for x in result)


def exp(a: TruncSeries) -> TruncSeries:
    """``exp(a)`` for ``a`` with zero constant term, via ``n e_n = sum k a_k e_{n-k}``."""
    if a._c[0] != 0:
        raise SeriesError("exp needs a series with zero constant term")
    n = a.order
    ka = [k * c for k, c in enumerate(a._c)]
    e = [1] + [0] * n
    for m in range(1, n + 1):
        acc = 0
        for k in range(1, m + 1):
            if ka[k]:
                acc += ka[k] * e[m - k]
        e[m] = _div(acc, m)
    return TruncSeries._raw(e)


def log1p(a: TruncSeries) -> TruncSeries:
    """``log(1 + a)`` for ``a`` with zero constant term."""
    if a._c[0] != 0:
        raise SeriesError("log1p needs a series with zero constant term")
    one_plus = a + 1
    d = a.derivative()
    q = div(d, one_plus.truncate(d.order))
    return TruncSeries._raw([0] + [_div(c, k + 1) for k, c in enumerate(q._c)])


def power_substitute(a: TruncSeries, k: int) -> TruncSeries:
    """``a(z^k)`` truncated to the order of ``a``."""
    if not isinstance(k, int) or k < 1:
        raise SeriesError("power substitution needs a positive integer")
    n = a.order
    out = [0] * (n + 1)
    for i in range(n // k + 1):
        out[i * k] = a._c[i]
    return TruncSeries._raw(out)


def pleth_exp(a: TruncSeries) -> TruncSeries:
    """Plethystic exponential ``exp(sum_{k>=1} a(z^k)/k)``.

    Uses ``n h_n = sum_j b_j h_{n-j}`` with ``b_j = sum_{d | j} d a_d``; for
    integer input every intermediate value stays an integer.
    """
    if a._c[0] != 0:
        raise SeriesError("plethystic exponential needs zero constant term")
    n = a.order
    b = [0] * (n + 1)
    for d in range(1, n + 1):
        ad = a._c[d]
        if ad:
            w = d * ad
            for j in range(d, n + 1, d):
                b[j] += w
    h = [1] + [0] * n
    for m in range(1, n + 1):
        acc = 0
        for j in range(1, m + 1):
            if b[j]:
                acc += b[j] * h[m - j]
        h[m] = _div(acc, m)
    return TruncSeries._raw(_norm(x) for x in h)


def pleth_sum(a: TruncSeries, start: int = 1) -> TruncSeries:
    """``sum_{k>=start} a(z^k)/k`` truncated (terms with ``k > order`` vanish)."""
    if a._c[0] != 0:
        raise SeriesError("plethystic sum needs zero constant term")
    n = a.order
    out = [0] * (n + 1)
    for k in range(start, n + 1):
        for i in range(1, n // k + 1):
            if a._c[i]:
                out[i * k] += Fraction(a._c[i], k)
    return TruncSeries._raw(_norm(x) for x in out)


def geometric(order: int, step: int = 1, start: int = 0, coeff=1) -> TruncSeries:
    """``coeff * z^start / (1 - z^step)``."""
    out = [0] * (order + 1)
    for n in range(start, order + 1, step):
        out[n] = coeff
    return TruncSeries(out)


def binomial_series(order: int, r: int, t: int = 2) -> TruncSeries:
    """``sum_n binom(t n + r, n) z^n`` truncated."""
    return TruncSeries(comb(t * m + r, m) for m in range(order + 1))


# -- grammar systems ------------------------------------------------------

Rule = Callable[[Mapping[str, TruncSeries], TruncSeries], TruncSeries]


class GrammarSystem:
    """A system ``y_i = rule_i(y, z)`` of series equations.

    ``rules`` maps each unknown to a callable ``rule(env, z)`` where ``env``
    holds the current iterate of every unknown and ``z`` is the variable at
    the current working order. Rules are applied Gauss-Seidel style in the
    given order, so an unknown defined as a plain sum of others should be
    listed after its summands.

    ``gain`` is a lower bound on the number of coefficients each pass fixes;
    it only sets how fast the working order grows and never affects the
    result.
    """

    def __init__(self, rules: Mapping[str, Rule], order: int, gain: int = 1):
        if order < 0:
            raise SeriesError("order must be nonnegative")
        if gain < 1:
            raise SeriesError("gain must be at least 1")
        self.rules = dict(rules)
        self.order = order
        self.gain = gain

    @property
    def unknowns(self) -> list[str]:
        return list(self.rules)

    def apply(self, env: Mapping[str, TruncSeries], order: int | None = None) -> dict:
        """One Gauss-Seidel pass at the given working order."""
        w = self.order if order is None else order
        cur = {k: v.truncate(w) for k, v in env.items()}
        zz = TruncSeries.z(w)
        for name, rule in self.rules.items():
            val = rule(cur, zz)
            if val.order < w:
                raise SeriesError(f"rule for {name} lost precision ({val.order} < {w})")
            cur[name] = val.truncate(w)
        return cur

    def check_valuation(self) -> None:
        """Every rule at the all-zero assignment must vanish at z = 0."""
        w = min(self.order, 4)
        zero = {k: TruncSeries.zero(w) for k in self.rules}
        zz = TruncSeries.z(w)
        for name, rule in self.rules.items():
            if rule(zero, zz)[0] != 0:
                raise SeriesError(f"rule for {name} has a nonzero constant term at the zero assignment")


def solve_fixpoint(system: GrammarSystem, max_passes: int | None = None) -> dict[str, TruncSeries]:
    """Iterate a grammar system from zero until a full-order pass changes nothing.

    The working order grows by ``system.gain`` per pass until it reaches the
    target order; stabilisation is only tested at the target order.
    """
    system.check_valuation()
    n = system.order
    limit = n + 2 if max_passes is None else max_passes
    w = 0
    env = {k: TruncSeries.zero(0) for k in system.rules}
    prev_full = None
    for _ in range(limit):
        env = {k: TruncSeries(v.coeffs, w) for k, v in env.items()}
        env = system.apply(env, w)
        if w == n:
            if prev_full is not None and all(env[k] == prev_full[k] for k in env):
                return env
            prev_full = env
        w = min(n, w + system.gain)
    raise FixpointDivergence(f"no fixpoint after {limit} passes at order {n}")

"""Exact sparse integer polynomials in one variable ``x`` or two variables ``x, y``.

Coefficients are Python ints (arbitrary precision); nothing here touches
floating point. Terms print in ascending total degree, then ascending
``x``-degree, e.g. ``1 + 3*y + 3*x + 3*y^2 + 6*x*y + 3*x^2``.
"""

from __future__ import annotations

import json
from math import comb
from typing import Mapping, Sequence, Union


def _clean(coeffs) -> dict:
    return {key: c for key, c in coeffs.items() if c}


def _check_int(c) -> int:
    if isinstance(c, bool) or not isinstance(c, int):
        raise TypeError(f"coefficients must be int, got {type(c).__name__}")
    return c


def _term_text(c: int, monomial: str, first: bool) -> str:
    sign = "-" if c < 0 else "+"
    a = abs(c)
    if monomial:
        body = monomial if a == 1 else f"{a}*{monomial}"
    else:
        body = str(a)
    if first:
        return f"-{body}" if sign == "-" else body
    return f" {sign} {body}"


def _power(var: str, e: int) -> str:
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


class UniPoly:
    """Polynomial ``sum c_k x^k`` with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | Sequence[int] | int = ()):
        if isinstance(coeffs, int):
            coeffs = {0: coeffs}
        elif not isinstance(coeffs, Mapping):
            coeffs = dict(enumerate(coeffs))
        for k, c in coeffs.items():
            if k < 0:
                raise ValueError(f"negative exponent {k}")
            _check_int(c)
        self.coeffs: dict[int, int] = _clean(coeffs)

    @classmethod
    def x(cls) -> UniPoly:
        return cls({1: 1})

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return max(self.coeffs, default=-1)

    def __getitem__(self, k: int) -> int:
        return self.coeffs.get(k, 0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = UniPoly(other)
        if isinstance(other, BiPoly):
            return other.y_degree <= 0 and self == other.at_y(0)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("UniPoly", frozenset(self.coeffs.items())))

    def __repr__(self) -> str:
        return f"UniPoly({self})"

    def __str__(self) -> str:
        return self.to_text()

    def __neg__(self) -> UniPoly:
        return UniPoly({k: -c for k, c in self.coeffs.items()})

    def __add__(self, other) -> UniPoly:
        if isinstance(other, int):
            other = UniPoly(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return UniPoly(out)

    __radd__ = __add__

    def __sub__(self, other) -> UniPoly:
        if isinstance(other, int):
            other = UniPoly(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> UniPoly:
        return (-self) + other

    def __mul__(self, other) -> UniPoly:
        if isinstance(other, int):
            return UniPoly({k: c * other for k, c in self.coeffs.items()})
        if not isinstance(other, UniPoly):
            return NotImplemented
        out: dict[int, int] = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                out[i + j] = out.get(i + j, 0) + a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> UniPoly:
        if e < 0:
            raise ValueError("negative power")
        result, base = UniPoly(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def evaluate(self, x: int):
        """Value at ``x`` (Horner). Exact for ints; other ring elements work too."""
        acc = 0
        for k in range(self.degree, -1, -1):
            acc = acc * x + self.coeffs.get(k, 0)
        return acc

    __call__ = evaluate

    def compose(self, inner):
        """``self(inner)`` where ``inner`` is a UniPoly or BiPoly."""
        acc = type(inner)(0)
        for k in range(self.degree, -1, -1):
            acc = acc * inner + self.coeffs.get(k, 0)
        return acc

    def coefficient_list(self) -> list[int]:
        return [self.coeffs.get(k, 0) for k in range(self.degree + 1)]

    def to_bipoly(self) -> BiPoly:
        return BiPoly({(k, 0): c for k, c in self.coeffs.items()})

    def terms(self) -> list[tuple[int, int]]:
        return sorted(self.coeffs.items())

    def to_text(self) -> str:
        if not self.coeffs:
            return "0"
        return "".join(
            _term_text(c, _power("x", k), i == 0) for i, (k, c) in enumerate(self.terms())
        )

    def to_dict(self) -> dict:
        return {
            "vars": ["x"],
            "terms": [{"x": k, "coeff": str(c)} for k, c in self.terms()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


class BiPoly:
    """Polynomial ``sum c_{k,d} x^k y^d`` with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[tuple[int, int], int] | int | None = None):
        if coeffs is None:
            coeffs = {}
        elif isinstance(coeffs, int):
            coeffs = {(0, 0): coeffs}
        for (k, d), c in coeffs.items():
            if k < 0 or d < 0:
                raise ValueError(f"negative exponent in {(k, d)}")
            _check_int(c)
        self.coeffs: dict[tuple[int, int], int] = _clean(coeffs)

    @classmethod
    def x(cls) -> BiPoly:
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> BiPoly:
        return cls({(0, 1): 1})

    @property
    def x_degree(self) -> int:
        return max((k for k, _ in self.coeffs), default=-1)

    @property
    def y_degree(self) -> int:
        return max((d for _, d in self.coeffs), default=-1)

    @property
    def total_degree(self) -> int:
        return max((k + d for k, d in self.coeffs), default=-1)

    def __getitem__(self, kd: tuple[int, int]) -> int:
        return self.coeffs.get(kd, 0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = BiPoly(other)
        elif isinstance(other, UniPoly):
            other = other.to_bipoly()
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("BiPoly", frozenset(self.coeffs.items())))

    def __repr__(self) -> str:
        return f"BiPoly({self})"

    def __str__(self) -> str:
        return self.to_text()

    def _coerce(self, other):
        if isinstance(other, int):
            return BiPoly(other)
        if isinstance(other, UniPoly):
            return other.to_bipoly()
        if isinstance(other, BiPoly):
            return other
        return None

    def __neg__(self) -> BiPoly:
        return BiPoly({kd: -c for kd, c in self.coeffs.items()})

    def __add__(self, other) -> BiPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.coeffs)
        for kd, c in other.coeffs.items():
            out[kd] = out.get(kd, 0) + c
        return BiPoly(out)

    __radd__ = __add__

    def __sub__(self, other) -> BiPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> BiPoly:
        return (-self) + other

    def __mul__(self, other) -> BiPoly:
        if isinstance(other, int):
            return BiPoly({kd: c * other for kd, c in self.coeffs.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[tuple[int, int], int] = {}
        for (k1, d1), a in self.coeffs.items():
            for (k2, d2), b in other.coeffs.items():
                key = (k1 + k2, d1 + d2)
                out[key] = out.get(key, 0) + a * b
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> BiPoly:
        if e < 0:
            raise ValueError("negative power")
        result, base = BiPoly(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def evaluate(self, x, y):
        total = 0
        for (k, d), c in self.coeffs.items():
            total += c * x**k * y**d
        return total

    __call__ = evaluate

    def at_y(self, y: int) -> UniPoly:
        """``D(x, y)`` for a fixed integer ``y``, as a polynomial in ``x``."""
        out: dict[int, int] = {}
        for (k, d), c in self.coeffs.items():
            out[k] = out.get(k, 0) + c * y**d
        return UniPoly(out)

    def at_x(self, x: int) -> UniPoly:
        """``D(x, y)`` for a fixed integer ``x``, as a polynomial in ``y``."""
        out: dict[int, int] = {}
        for (k, d), c in self.coeffs.items():
            out[d] = out.get(d, 0) + c * x**k
        return UniPoly(out)

    def terms(self) -> list[tuple[tuple[int, int], int]]:
        return sorted(self.coeffs.items(), key=lambda t: (t[0][0] + t[0][1], t[0][0]))

    def to_text(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, ((k, d), c) in enumerate(self.terms()):
            mono = "*".join(p for p in (_power("x", k), _power("y", d)) if p)
            parts.append(_term_text(c, mono, i == 0))
        return "".join(parts)

    def to_dict(self) -> dict:
        return {
            "vars": ["x", "y"],
            "terms": [{"x": k, "y": d, "coeff": str(c)} for (k, d), c in self.terms()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


Poly = Union[UniPoly, BiPoly]


def poly_from_dict(data: Mapping) -> Poly:
    """Inverse of ``to_dict`` for both polynomial kinds."""
    names = list(data.get("vars", ()))
    if names == ["x"]:
        return UniPoly({int(t["x"]): int(t["coeff"]) for t in data["terms"]})
    if names == ["x", "y"]:
        return BiPoly({(int(t["x"]), int(t["y"])): int(t["coeff"]) for t in data["terms"]})
    raise ValueError(f"unsupported variable list {names!r}")


def poly_from_json(text: str) -> Poly:
    return poly_from_dict(json.loads(text))


# -- substitutions -----------------------------------------------------------

def substitute_shift(C: UniPoly, a: int = -1) -> BiPoly:
    """``C(x + y + a)`` expanded exactly."""
    out: dict[tuple[int, int], int] = {}
    for m, c in C.coeffs.items():
        # (x + y + a)^m = sum over k + d + r = m of multinomial * x^k y^d a^r
        for r in range(m + 1):
            scale = c * comb(m, r) * a**r
            if not scale:
                continue
            s = m - r
            for k in range(s + 1):
                key = (k, s - k)
                out[key] = out.get(key, 0) + scale * comb(s, k)
    return BiPoly(out)


def substitute_univariate_shift(W: UniPoly, a: int = 1) -> UniPoly:
    """``W(x + a)``; ``a = 1`` turns a distance-weight polynomial into a cube polynomial."""
    out: dict[int, int] = {}
    for m, c in W.coeffs.items():
        for k in range(m + 1):
            out[k] = out.get(k, 0) + c * comb(m, k) * a ** (m - k)
    return UniPoly(out)


def substitute_sum(W: UniPoly) -> BiPoly:
    """``W(x + y)``: coefficient of ``x^k y^d`` is ``w_{k+d} * C(k+d, d)``."""
    out = {}
    for m, c in W.coeffs.items():
        for k in range(m + 1):
            out[(k, m - k)] = c * comb(m, k)
    return BiPoly(out)


def substitute_neg(D: BiPoly) -> UniPoly:
    """``D(x, -x)``."""
    out: dict[int, int] = {}
    for (k, d), c in D.coeffs.items():
        out[k + d] = out.get(k + d, 0) + (-c if d & 1 else c)
    return UniPoly(out)


def swap_vars(D: BiPoly) -> BiPoly:
    """``D(y, x)``."""
    return BiPoly({(d, k): c for (k, d), c in D.coeffs.items()})


def binomial(a: int, b: int) -> int:
    """``C(a, b)``, zero when ``b > a`` or either argument is negative."""
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


# -- rational generating functions --------------------------------------------

class RationalSeries:
    """Quotient ``P(z) / Q(z)`` whose coefficients live in a polynomial ring.

    ``numerator[j]`` and ``denominator[j]`` are the coefficients of ``z^j``;
    each is an int, :class:`UniPoly` or :class:`BiPoly`. The constant term of
    the denominator must be ``1`` or ``-1`` so that the expansion stays over
    the integers.
    """

    def __init__(self, numerator: Sequence, denominator: Sequence):
        if not denominator:
            raise ValueError("empty denominator")
        self.numerator = list(numerator)
        self.denominator = list(denominator)
        q0 = self.denominator[0]
        if q0 not in (1, -1):
            if not q0:
                raise ZeroDivisionError("denominator has zero constant term")
            raise ValueError(f"denominator constant term must be +-1, got {q0}")
        self._unit = 1 if q0 == 1 else -1

    def map(self, fn) -> RationalSeries:
        """Apply a ring map (e.g. a substitution) to every coefficient."""
        def lift(c):
            return fn(UniPoly(c) if isinstance(c, int) else c)

        return RationalSeries([lift(c) for c in self.numerator], [lift(c) for c in self.denominator])

    def coefficients(self, m: int) -> list:
        """Coefficients of ``z^0 .. z^m``."""
        if m < 0:
            raise ValueError("m must be nonnegative")
        zero = self._zero()
        p, q, unit = self.numerator, self.denominator, self._unit
        out = []
        for j in range(m + 1):
            acc = p[j] if j < len(p) else zero
            acc = zero + acc
            for i in range(1, min(j, len(q) - 1) + 1):
                acc = acc - q[i] * out[j - i]
            out.append(acc * unit)
        return out

    def _zero(self):
        for c in (*self.numerator, *self.denominator):
            if isinstance(c, BiPoly):
                return BiPoly()
        return UniPoly()


def series_coefficients(S: RationalSeries, m: int) -> list:
    """Coefficients of ``z^0 .. z^m`` of the power series of ``S``."""
    return S.coefficients(m)

"""Sparse trivariate polynomials in X, Y, Z with exact integer coefficients."""
from __future__ import annotations

import re
from fractions import Fraction
from math import comb
from typing import Mapping, Union

Monomial = tuple[int, int, int]
Scalar = Union[int, Fraction]

VARS = ("X", "Y", "Z")


class PolyError(ValueError):
    pass


class NotDivisibleError(PolyError):
    pass


def _var_index(var) -> int:
    if isinstance(var, int):
        return var
    try:
        return VARS.index(var.upper())
    except ValueError:
        raise PolyError(f"unknown variable {var!r}") from None


class TriPoly:
    """Immutable polynomial stored as ``{(i, j, k): coeff}`` with no zero coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        clean = {}
        for mono, c in (terms or {}).items():
            if c:
                if len(mono) != 3 or min(mono) < 0:
                    raise PolyError(f"bad exponent triple {mono}")
                clean[tuple(mono)] = int(c)
        self._terms = clean
        self._hash = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def const(cls, c: int) -> "TriPoly":
        return cls({(0, 0, 0): c})

    @classmethod
    def var(cls, name) -> "TriPoly":
        mono = [0, 0, 0]
        mono[_var_index(name)] = 1
        return cls({tuple(mono): 1})

    @classmethod
    def coerce(cls, other) -> "TriPoly":
        if isinstance(other, TriPoly):
            return other
        if isinstance(other, int):
            return cls.const(other)
        return NotImplemented

    # -- accessors --------------------------------------------------------

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, i: int, j: int = 0, k: int = 0) -> int:
        return self._terms.get((i, j, k), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self, var) -> int:
        v = _var_index(var)
        return max((m[v] for m in self._terms), default=0)

    def total_degree(self) -> int:
        return max((sum(m) for m in self._terms), default=0)

    def __len__(self):
        return len(self._terms)

    # -- ring operations --------------------------------------------------

    def __eq__(self, other):
        other = TriPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        other = TriPoly.coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return TriPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return TriPoly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = TriPoly.coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return TriPoly.coerce(other) - self

    def __mul__(self, other):
        other = TriPoly.coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, int] = {}
        for (a, b, c), p in self._terms.items():
            for (d, e, f), q in other._terms.items():
                m = (a + d, b + e, c + f)
                out[m] = out.get(m, 0) + p * q
        return TriPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise PolyError("negative powers are not polynomials")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c: int) -> "TriPoly":
        return TriPoly({m: c * v for m, v in self._terms.items()})

    def shift(self, i: int = 0, j: int = 0, k: int = 0) -> "TriPoly":
        """Multiply by the monomial X^i Y^j Z^k."""
        return TriPoly({(a + i, b + j, c + k): v for (a, b, c), v in self._terms.items()})

    # -- evaluation and substitution -------------------------------------

    def eval(self, x: Scalar = 0, y: Scalar = 0, z: Scalar = 0) -> Fraction:
        """Exact value at a rational point (Horner in Z within each (i, j) block)."""
        x, y, z = Fraction(x), Fraction(y), Fraction(z)
        blocks: dict[tuple[int, int], dict[int, int]] = {}
        for (i, j, k), c in self._terms.items():
            blocks.setdefault((i, j), {})[k] = c
        total = Fraction(0)
        xp: dict[int, Fraction] = {}
        yp: dict[int, Fraction] = {}
        for (i, j), zs in blocks.items():
            acc = Fraction(0)
            for k in range(max(zs), -1, -1):
                acc = acc * z + zs.get(k, 0)
            if i not in xp:
                xp[i] = x ** i
            if j not in yp:
                yp[j] = y ** j
            total += xp[i] * yp[j] * acc
        return total

    def __call__(self, x: Scalar = 0, y: Scalar = 0, z: Scalar = 0) -> Fraction:
        return self.eval(x, y, z)

    def compose(self, x: "TriPoly", y: "TriPoly", z: "TriPoly") -> "TriPoly":
        """Substitute polynomials for X, Y and Z."""
        return self.substitute_rational({0: (x, ONE), 1: (y, ONE), 2: (z, ONE)})[0]

    def substitute_rational(self, subs: Mapping) -> tuple["TriPoly", "TriPoly"]:
        """Substitute rational functions ``var -> (num, den)`` for some variables.

        Returns ``(N, D)`` with ``self(subs) == N / D`` and
        ``D = prod(den_v ** deg_v(self))``; unmentioned variables stay put.
        """
        subs = {_var_index(v): (TriPoly.coerce(n), TriPoly.coerce(d)) for v, (n, d) in subs.items()}
        degs = [self.degree(v) for v in range(3)]
        gens = [TriPoly.var(v) for v in range(3)]
        num_pows, den_pows = [], []
        for v in range(3):
            n, d = subs.get(v, (gens[v], ONE))
            num_pows.append(_powers(n, degs[v]))
            den_pows.append(_powers(d, degs[v]))
        total = ZERO
        for mono, c in self._terms.items():
            term = TriPoly.const(c)
            for v in range(3):
                term = term * num_pows[v][mono[v]] * den_pows[v][degs[v] - mono[v]]
            total = total + term
        denom = ONE
        for v in range(3):
            denom = denom * den_pows[v][degs[v]]
        return total, denom

    def substitute_z(self, z: Scalar) -> "TriPoly":
        """Set Z to a rational value; the result must have integer coefficients."""
        z = Fraction(z)
        out: dict[Monomial, Fraction] = {}
        for (i, j, k), c in self._terms.items():
            out[(i, j, 0)] = out.get((i, j, 0), 0) + c * z ** k
        if any(v.denominator != 1 for v in out.values()):
            raise PolyError("substitution leaves non-integral coefficients")
        return TriPoly({m: int(v) for m, v in out.items()})

    def divide_by_binomial(self, var="Z", exp: int = 1) -> "TriPoly":
        """Exact quotient by ``(var - 1)**exp``; raises if there is a remainder."""
        v = _var_index(var)
        q = self
        for _ in range(exp):
            q = q._divide_once(v)
        return q

    def _divide_once(self, v: int) -> "TriPoly":
        # synthetic division by (t - 1) in variable v, per fixed exponents of the others
        rows: dict[tuple, dict[int, int]] = {}
        for mono, c in self._terms.items():
            rest = tuple(e for i, e in enumerate(mono) if i != v)
            rows.setdefault(rest, {})[mono[v]] = c
        out: dict[Monomial, int] = {}
        for rest, coeffs in rows.items():
            acc = 0
            for d in range(max(coeffs), 0, -1):
                acc += coeffs.get(d, 0)
                if acc:
                    mono = list(rest)
                    mono.insert(v, d - 1)
                    out[tuple(mono)] = acc
            if acc + coeffs.get(0, 0) != 0:
                raise NotDivisibleError(f"polynomial is not divisible by ({VARS[v]} - 1)")
        return TriPoly(out)

    # -- text ---------------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in graded-lex order, highest first."""
        return sorted(self._terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def render(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for idx, (mono, c) in enumerate(self.sorted_terms()):
            factors = [
                name if e == 1 else f"{name}^{e}" for name, e in zip(VARS, mono) if e
            ]
            mag = abs(c)
            if factors:
                body = "*".join(([str(mag)] if mag != 1 else []) + factors)
            else:
                body = str(mag)
            if idx == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    __str__ = render

    def __repr__(self):
        return f"TriPoly({self.render()!r})"

    @classmethod
    def parse(cls, text: str) -> "TriPoly":
        """Inverse of :meth:`render`; accepts sums of ``c*X^i*Y^j*Z^k`` terms."""
        s = text.replace(" ", "")
        if not s:
            raise PolyError("empty polynomial text")
        if s[0] not in "+-":
            s = "+" + s
        pos = 0
        out: dict[Monomial, int] = {}
        term_re = re.compile(r"([+-])([^+-]+)")
        while pos < len(s):
            m = term_re.match(s, pos)
            if not m:
                raise PolyError(f"cannot parse polynomial near {s[pos:]!r}")
            sign = -1 if m.group(1) == "-" else 1
            coeff = 1
            mono = [0, 0, 0]
            for factor in m.group(2).split("*"):
                fm = re.fullmatch(r"(\d+)|([XYZxyz])(?:\^(\d+))?", factor)
                if not fm:
                    raise PolyError(f"bad factor {factor!r}")
                if fm.group(1):
                    coeff *= int(fm.group(1))
                else:
                    mono[_var_index(fm.group(2))] += int(fm.group(3) or 1)
            key = tuple(mono)
            out[key] = out.get(key, 0) + sign * coeff
            pos = m.end()
        return cls(out)


def _powers(p: TriPoly, n: int) -> list[TriPoly]:
    pw = [ONE]
    for _ in range(n):
        pw.append(pw[-1] * p)
    return pw


ZERO = TriPoly()
ONE = TriPoly.const(1)
X = TriPoly.var("X")
Y = TriPoly.var("Y")
Z = TriPoly.var("Z")


def pow_binomial(var, exp: int) -> TriPoly:
    """(var - 1)**exp expanded with binomial coefficients."""
    if exp < 0:
        raise PolyError("exponent must be nonnegative")
    v = _var_index(var)
    out = {}
    for i in range(exp + 1):
        mono = [0, 0, 0]
        mono[v] = i
        out[tuple(mono)] = comb(exp, i) * (-1) ** (exp - i)
    return TriPoly(out)


def binomial_product(a: int, b: int, c: int) -> TriPoly:
    """(X-1)^a (Y-1)^b (Z-1)^c."""
    out: dict[Monomial, int] = {}
    for i in range(a + 1):
        ci = comb(a, i) * (-1) ** (a - i)
        for j in range(b + 1):
            cj = ci * comb(b, j) * (-1) ** (b - j)
            for k in range(c + 1):
                out[(i, j, k)] = cj * comb(c, k) * (-1) ** (c - k)
    return TriPoly(out)


def from_exponent_counts(counts: Mapping[tuple[int, int, int], int]) -> TriPoly:
    """Sum of ``n * (X-1)^a (Y-1)^b (Z-1)^c`` over ``{(a, b, c): n}``."""
    out: dict[Monomial, int] = {}
    for (a, b, c), n in counts.items():
        if not n:
            continue
        for m, v in binomial_product(a, b, c).items():
            out[m] = out.get(m, 0) + n * v
    return TriPoly(out)

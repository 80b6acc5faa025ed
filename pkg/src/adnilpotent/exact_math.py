"""Exact integer arithmetic: binomials, polynomials, truncated series, determinants.

Python integers are arbitrary precision, so every count in the package is an
ordinary ``int``.  Nothing in this module touches floating point.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

BigInt = int


def binomial(m: int, n: int) -> int:
    """Binomial coefficient with the degenerate conventions used throughout.

    ``m!/((m-n)! n!)`` if ``m >= n > 0``, ``1`` if ``n == 0`` (for any ``m``,
    negative included), ``0`` in every other case.
    """
    if n == 0:
        return 1
    if m >= n > 0:
        return _binomial_pos(m, n)
    return 0


@lru_cache(maxsize=None)
def _binomial_pos(m: int, n: int) -> int:
    n = min(n, m - n)
    result = 1
    for i in range(1, n + 1):
        result = result * (m - n + i) // i
    return result


def catalan(m: int) -> int:
    """The Catalan number ``binomial(2m, m) / (m + 1)``."""
    return _binomial_pos(2 * m, m) // (m + 1) if m > 0 else 1


def fibonacci(m: int) -> int:
    """Fibonacci numbers indexed so that ``F_0 = F_1 = 1``."""
    if m < 0:
        raise ValueError("fibonacci index must be non-negative")
    a, b = 1, 1
    for _ in range(m):
        a, b = b, a + b
    return a


class UniPoly:
    """Dense univariate polynomial with integer coefficients.

    ``coeffs[i]`` is the coefficient of ``var**i``.  Trailing zeros are
    stripped; the zero polynomial has degree ``-1``.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable[int] = (), var: str = "x"):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)
        self.var = var

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1, var: str = "x") -> "UniPoly":
        return cls([0] * degree + [coeff], var)

    @classmethod
    def constant(cls, c: int, var: str = "x") -> "UniPoly":
        return cls([c], var)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == UniPoly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "UniPoly | int") -> "UniPoly":
        if isinstance(other, int):
            other = UniPoly([other], self.var)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other: "UniPoly | int") -> "UniPoly":
        return self + (-other)

    def __rsub__(self, other: int) -> "UniPoly":
        return (-self) + other

    def __mul__(self, other: "UniPoly | int") -> "UniPoly":
        if isinstance(other, int):
            return UniPoly([c * other for c in self.coeffs], self.var)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly((), self.var)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return UniPoly(out, self.var)

    __rmul__ = __mul__

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"UniPoly({list(self.coeffs)!r}, var={self.var!r})"

    def __str__(self) -> str:
        terms = [(i, c) for i, c in enumerate(self.coeffs) if c]
        if not terms:
            return "0"
        return _join_terms((c, _power(self.var, i)) for i, c in terms)


def _power(var: str, e: int) -> str:
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


def _join_terms(terms: Iterable[tuple[int, str]]) -> str:
    out = []
    for c, mono in terms:
        sign = "-" if c < 0 else "+"
        a = abs(c)
        body = mono if (a == 1 and mono) else f"{a}{mono}"
        if not out:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


@lru_cache(maxsize=None)
def _t_binomial_coeffs(m: int, n: int) -> tuple[int, ...]:
    # q-Pascal: [m, n] = [m-1, n-1] + t^n [m-1, n]
    if n == 0 or n == m:
        return (1,)
    a = _t_binomial_coeffs(m - 1, n - 1)
    b = _t_binomial_coeffs(m - 1, n)
    out = [0] * (n * (m - n) + 1)
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i + n] += c
    return tuple(out)


def t_binomial(m: int, n: int) -> UniPoly:
    """Gaussian binomial in ``t`` with the same degenerate conventions as
    :func:`binomial`."""
    if n == 0:
        return UniPoly([1], "t")
    if m >= n > 0:
        return UniPoly(_t_binomial_coeffs(m, n), "t")
    return UniPoly((), "t")


def chebyshev_U(n: int) -> UniPoly:
    """Chebyshev polynomial of the second kind, from its explicit sum
    ``sum_j (-1)^j C(n-j, j) (2x)^(n-2j)``."""
    if n < 0:
        raise ValueError("Chebyshev index must be non-negative")
    coeffs = [0] * (n + 1)
    for j in range(n // 2 + 1):
        coeffs[n - 2 * j] = (-1) ** j * binomial(n - j, j) * 2 ** (n - 2 * j)
    return UniPoly(coeffs, "x")


class BiPoly:
    """Sparse polynomial in ``q`` and ``t``; keys are ``(q_degree, t_degree)``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | Iterable[tuple[tuple[int, int], int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[int, int], int] = {}
        for key, c in items:
            acc[key] = acc.get(key, 0) + c
        self.terms: dict[tuple[int, int], int] = {k: c for k, c in acc.items() if c}

    @classmethod
    def one(cls) -> "BiPoly":
        return cls({(0, 0): 1})

    @classmethod
    def from_t_poly(cls, p: UniPoly, q_degree: int = 0, t_shift: int = 0) -> "BiPoly":
        """``q**q_degree * t**t_shift * p(t)``."""
        return cls({(q_degree, i + t_shift): c for i, c in enumerate(p.coeffs) if c})

    def coefficient(self, q_degree: int, t_degree: int) -> int:
        return self.terms.get((q_degree, t_degree), 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "BiPoly") -> "BiPoly":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return BiPoly(out)

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        return self + BiPoly({k: -c for k, c in other.terms.items()})

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        out: dict[tuple[int, int], int] = {}
        for (a, b), c in self.terms.items():
            for (x, y), d in other.terms.items():
                key = (a + x, b + y)
                out[key] = out.get(key, 0) + c * d
        return BiPoly(out)

    def shift(self, q_degree: int, t_degree: int) -> "BiPoly":
        """Multiply by the monomial ``q**q_degree * t**t_degree``."""
        return BiPoly({(a + q_degree, b + t_degree): c for (a, b), c in self.terms.items()})

    def evaluate(self, q: int, t: int) -> int:
        return sum(c * q**a * t**b for (a, b), c in self.terms.items())

    def specialize_q(self, q: int) -> UniPoly:
        """Substitute a value for ``q``, leaving a polynomial in ``t``."""
        size = max((b for _, b in self.terms), default=-1) + 1
        out = [0] * size
        for (a, b), c in self.terms.items():
            out[b] += c * q**a
        return UniPoly(out, "t")

    def specialize_t(self, t: int) -> UniPoly:
        """Substitute a value for ``t``, leaving a polynomial in ``q``."""
        size = max((a for a, _ in self.terms), default=-1) + 1
        out = [0] * size
        for (a, b), c in self.terms.items():
            out[a] += c * t**b
        return UniPoly(out, "q")

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        """``(q_degree, t_degree, coeff)`` triples ordered by q then t."""
        return [(a, b, c) for (a, b), c in sorted(self.terms.items())]

    def to_json(self) -> list[dict]:
        return [{"q": a, "t": b, "coeff": str(c)} for a, b, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: Sequence[Mapping]) -> "BiPoly":
        return cls(((int(d["q"]), int(d["t"])), int(d["coeff"])) for d in data)

    def __repr__(self) -> str:
        return f"BiPoly({dict(sorted(self.terms.items()))!r})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return _join_terms((c, _power("q", a) + _power("t", b)) for a, b, c in self.sorted_terms())


class TruncatedSeries:
    """Power series in ``x`` known exactly through ``x**order``."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[int], order: int):
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        c = list(coeffs)[: order + 1]
        c += [0] * (order + 1 - len(c))
        self.coeffs: tuple[int, ...] = tuple(c)
        self.order = order

    @classmethod
    def from_poly(cls, p: UniPoly, order: int) -> "TruncatedSeries":
        return cls(p.coeffs, order)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i <= self.order else 0

    def __iter__(self) -> Iterator[int]:
        # explicit, since __getitem__ never raises IndexError
        return iter(self.coeffs)

    def __len__(self) -> int:
        return self.order + 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.coeffs, self.order))

    def _common(self, other: "TruncatedSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = self._common(other)
        return TruncatedSeries((self[i] + other[i] for i in range(n + 1)), n)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries((-c for c in self.coeffs), self.order)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other: "TruncatedSeries | int") -> "TruncatedSeries":
        if isinstance(other, int):
            return TruncatedSeries((c * other for c in self.coeffs), self.order)
        n = self._common(other)
        out = [0] * (n + 1)
        for i in range(n + 1):
            a = self.coeffs[i]
            if a:
                for j in range(n + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def shift(self, k: int = 1) -> "TruncatedSeries":
        """Multiply by ``x**k``; the order is kept."""
        return TruncatedSeries([0] * k + list(self.coeffs), self.order)

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self.coeffs)!r}, order={self.order})"


def series_invert(s: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse of a series whose constant term is ``+1`` or ``-1``."""
    c0 = s[0]
    if c0 not in (1, -1):
        raise ValueError(f"constant term must be +1 or -1 to stay integral, got {c0}")
    out = [c0]
    for k in range(1, s.order + 1):
        acc = sum(s.coeffs[i] * out[k - i] for i in range(1, k + 1))
        out.append(-acc * c0)
    return TruncatedSeries(out, s.order)


def series_divide(num: TruncatedSeries, den: TruncatedSeries) -> TruncatedSeries:
    return num * series_invert(den)


def det_exact(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free (Bareiss) elimination with row pivoting.

    Every division in the update step is exact, so the computation never leaves
    the integers.
    """
    n = len(matrix)
    if n == 0 or any(len(row) != n for row in matrix):
        raise ValueError("determinant needs a non-empty square matrix")
    a = [list(map(int, row)) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            row_k = a[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def det_cofactor(matrix: Sequence[Sequence[int]]) -> int:
    """Laplace expansion along the first row.  Exponential; reference use only."""
    n = len(matrix)
    if n == 0 or any(len(row) != n for row in matrix):
        raise ValueError("determinant needs a non-empty square matrix")
    if n == 1:
        return matrix[0][0]
    total = 0
    for j in range(n):
        if matrix[0][j]:
            minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
            total += (-1) ** j * matrix[0][j] * det_cofactor([list(r) for r in minor])
    return total

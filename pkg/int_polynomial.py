"""
Integer (Laurent) polynomials in one variable, backed by sympy.Poly over ZZ.

sympy has no Laurent type, so a polynomial is stored as var**low * poly with
poly(0) != 0. Arithmetic, exact division, composition and Taylor shifts are
delegated to sympy; this module only keeps the power offset and the JSON form.
"""
import logging
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Union

import sympy
from sympy import ZZ, Poly
from sympy.polys.polyerrors import ExactQuotientFailed

from homology_errors import IntegrityError

logger = logging.getLogger(__name__)

Number = Union[int, "IntPolynomial"]

NEG_INFINITY = float("-inf")


@lru_cache(maxsize=None)
def _symbol(var: str) -> sympy.Symbol:
    return sympy.Symbol(var)


def _from_dict(terms: Mapping[int, int], var: str) -> Poly:
    return Poly.from_dict({(d,): c for d, c in terms.items()} or {(0,): 0}, _symbol(var), domain=ZZ)


class IntPolynomial:
    """
    Σ c_d · var^d with integer coefficients; d may be negative (Laurent polynomials in q).

    Equal polynomials compare and hash equal, so instances serve as dict keys.
    """
    __slots__ = ("poly", "low", "var")

    def __init__(self, coeffs: Iterable[int] = (), low: int = 0, var: str = "lambda"):
        terms = {low + k: int(c) for k, c in enumerate(coeffs) if c}
        self._assign(terms, var)

    def _assign(self, terms: Mapping[int, int], var: str):
        self.var = var
        self.low = min(terms) if terms else 0
        self.poly = _from_dict({d - self.low: c for d, c in terms.items()}, var)

    @classmethod
    def from_poly(cls, poly: Poly, low: int = 0) -> "IntPolynomial":
        """Wraps var**low * poly."""
        result = cls.__new__(cls)
        terms = {low + monom[0]: int(c) for monom, c in poly.terms() if c}
        result._assign(terms, str(poly.gen))
        return result

    # --- Constructors ---

    @classmethod
    def from_ascending(cls, coeffs: Iterable[int], var: str = "lambda", low: int = 0) -> "IntPolynomial":
        return cls(coeffs, low, var)

    @classmethod
    def from_descending(cls, coeffs: Iterable[int], var: str = "lambda") -> "IntPolynomial":
        return cls.from_poly(Poly.from_list([int(c) for c in coeffs] or [0], _symbol(var), domain=ZZ))

    @classmethod
    def from_terms(cls, terms: Mapping[int, int], var: str = "lambda") -> "IntPolynomial":
        result = cls.__new__(cls)
        result._assign({d: int(c) for d, c in terms.items() if c}, var)
        return result

    @classmethod
    def constant(cls, value: int, var: str = "lambda") -> "IntPolynomial":
        return cls((value,), 0, var)

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1, var: str = "lambda") -> "IntPolynomial":
        return cls((coefficient,), degree, var)

    # --- Queries ---

    def is_zero(self) -> bool:
        return self.poly.is_zero

    @property
    def degree(self) -> Union[int, float]:
        """Highest exponent; -inf for the zero polynomial."""
        if self.is_zero():
            return NEG_INFINITY
        return self.low + self.poly.degree()

    @property
    def lowest_degree(self) -> int:
        if self.is_zero():
            raise ValueError("lowest degree of the zero polynomial is undefined")
        return self.low

    def coefficient(self, degree: int) -> int:
        k = degree - self.low
        return int(self.poly.nth(k)) if k >= 0 else 0

    def terms(self) -> Dict[int, int]:
        return {self.low + monom[0]: int(c) for monom, c in self.poly.terms() if c}

    def full_poly(self) -> Poly:
        """The sympy Poly var**low * poly; requires no negative powers."""
        if self.low < 0:
            raise ValueError(f"{self} has negative powers and is not an ordinary polynomial")
        return self.poly * _from_dict({self.low: 1}, self.var)

    def ascending(self) -> List[int]:
        """Coefficients from degree 0 upward (requires no negative powers)."""
        if self.is_zero():
            return []
        return [int(c) for c in reversed(self.full_poly().all_coeffs())]

    def descending(self) -> List[int]:
        return list(reversed(self.ascending()))

    def root_multiplicity(self, root: int) -> int:
        """Multiplicity of (var - root) as a factor."""
        if self.is_zero():
            raise ValueError("every value is a root of the zero polynomial")
        if root == 0:
            return self.low
        divisor = Poly.from_list([1, -root], _symbol(self.var), domain=ZZ)
        count, current = 0, self.poly
        while current.eval(root) == 0:
            current = current.exquo(divisor)
            count += 1
        return count

    def evaluate(self, value: Number) -> Number:
        if isinstance(value, IntPolynomial):
            if self.is_zero():
                return IntPolynomial((), 0, value.var)
            outer = Poly.from_list(self.full_poly().all_coeffs(), _symbol(value.var), domain=ZZ)
            return IntPolynomial.from_poly(outer.compose(value.full_poly()))
        return int(self.full_poly().eval(value))

    # --- Arithmetic ---

    def _coerce(self, other: Number) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial.constant(other, self.var)
        if not self.is_zero() and not other.is_zero() and self.var != other.var:
            raise ValueError(f"variable mismatch: {self.var} vs {other.var}")
        return other

    def _aligned(self, other: "IntPolynomial"):
        """Both operands as sympy Polys over a common power offset."""
        var = self.var if not self.is_zero() else other.var
        base = min(self.low, other.low)
        left = self.poly * _from_dict({self.low - base: 1}, var) if not self.is_zero() else _from_dict({}, var)
        right = other.poly * _from_dict({other.low - base: 1}, var) if not other.is_zero() else _from_dict({}, var)
        return left, right, base

    def __add__(self, other: Number) -> "IntPolynomial":
        left, right, base = self._aligned(self._coerce(other))
        return IntPolynomial.from_poly(left + right, base)

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial.from_poly(-self.poly, self.low)

    def __sub__(self, other: Number) -> "IntPolynomial":
        left, right, base = self._aligned(self._coerce(other))
        return IntPolynomial.from_poly(left - right, base)

    def __rsub__(self, other: Number) -> "IntPolynomial":
        return (-self) + other

    def __mul__(self, other: Number) -> "IntPolynomial":
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return IntPolynomial((), 0, self.var)
        return IntPolynomial.from_poly(self.poly * other.poly, self.low + other.low)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "IntPolynomial":
        if exponent < 0:
            raise ValueError("negative powers are not supported")
        return IntPolynomial.from_poly(self.poly ** exponent, self.low * exponent)

    def shift(self, offset: int) -> "IntPolynomial":
        """Multiplies by var**offset."""
        if self.is_zero():
            return self
        return IntPolynomial.from_poly(self.poly, self.low + offset)

    def divide_exact(self, divisor: "IntPolynomial") -> "IntPolynomial":
        """Exact Laurent division; raises IntegrityError when a remainder is left."""
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return self
        # Both stored polys have a nonzero constant term, so the power offsets divide freely.
        try:
            quotient = self.poly.exquo(divisor.poly)
        except ExactQuotientFailed as exc:
            raise IntegrityError(f"{divisor} does not divide {self}") from exc
        return IntPolynomial.from_poly(quotient, self.low - divisor.low)

    def substitute_shift(self, shift: int, var: str) -> "IntPolynomial":
        """Rewrites p(var_old) as a polynomial in `var` with var_old = var + shift."""
        if self.is_zero():
            return IntPolynomial((), 0, var)
        renamed = Poly.from_list(self.full_poly().all_coeffs(), _symbol(var), domain=ZZ)
        return IntPolynomial.from_poly(renamed.shift(shift))

    # --- Comparison ---

    def _key(self):
        return self.var, self.low, tuple(int(c) for c in self.poly.all_coeffs())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"IntPolynomial({self})"

    # --- Serialization ---

    def to_json(self) -> Dict[str, object]:
        """{"var", "coeffs"} with coeffs[d] the coefficient of var^d as a decimal string."""
        if self.is_zero() or self.low >= 0:
            return {"var": self.var, "coeffs": [str(c) for c in self.ascending()]}
        # Laurent: the list starts at the lowest (negative) power.
        width = self.degree - self.low + 1
        return {"var": self.var, "low": self.low,
                "coeffs": [str(self.coefficient(self.low + k)) for k in range(width)]}

    @classmethod
    def from_json(cls, data: Mapping[str, object]) -> "IntPolynomial":
        return cls((int(c) for c in data["coeffs"]), int(data.get("low", 0)), str(data["var"]))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for degree, c in sorted(self.terms().items(), reverse=True):
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if degree == 0:
                body = f"{magnitude}"
            else:
                power = self.var if degree == 1 else f"{self.var}^{degree}"
                body = power if magnitude == 1 else f"{magnitude}*{power}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def q_dimension(m: int) -> IntPolynomial:
    """1 + q + ... + q^(m-1), the graded dimension of Z[x]/(x^m)."""
    return IntPolynomial.from_poly(Poly.from_list([1] * m, _symbol("q"), domain=ZZ))

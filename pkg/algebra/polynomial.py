"""
Sparse multivariate polynomials over the rationals

A Polynomial in S = Q[x1, ..., xn] is a dictionary from exponent tuples
to nonzero Fractions. Values are immutable once built. Terms are emitted
in degrevlex order (largest monomial first), so equal polynomials always
serialize to the same bytes.
"""

import json
import logging
import re
from fractions import Fraction
from math import gcd
from types import MappingProxyType
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from core.exceptions import (
    DimensionMismatchError,
    InputFormatError,
    NotDivisibleError,
    RangeError
)

logger = logging.getLogger(__name__)

Exponent = Tuple[int, ...]
Scalar = Union[int, Fraction]


def monomial_key(exps: Sequence[int]) -> Tuple[int, Tuple[int, ...]]:
    """Sort key for degrevlex: a larger key is a larger monomial"""
    return (sum(exps), tuple(-e for e in reversed(exps)))


def _as_fraction(value: Any) -> Fraction:
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"unsupported coefficient type {type(value).__name__}")


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


class Polynomial:
    """Exact sparse polynomial in n variables"""

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Optional[Mapping[Sequence[int], Scalar]] = None):
        if n < 0:
            raise DimensionMismatchError(f"variable count must be non-negative, got {n}")
        clean: Dict[Exponent, Fraction] = {}
        for exps, coeff in (terms or {}).items():
            key = tuple(int(e) for e in exps)
            if len(key) != n:
                raise DimensionMismatchError(f"exponent {list(key)} does not have length {n}")
            if any(e < 0 for e in key):
                raise RangeError(f"negative exponent in {list(key)}")
            value = clean.get(key, Fraction(0)) + _as_fraction(coeff)
            if value:
                clean[key] = value
            else:
                clean.pop(key, None)
        self.n = n
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, n: int, terms: Dict[Exponent, Fraction]) -> "Polynomial":
        # caller guarantees validated keys and nonzero coefficients
        poly = cls.__new__(cls)
        poly.n = n
        poly._terms = terms
        poly._hash = None
        return poly

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls._raw(n, {})

    @classmethod
    def one(cls, n: int) -> "Polynomial":
        return cls._raw(n, {(0,) * n: Fraction(1)})

    @classmethod
    def constant(cls, n: int, value: Scalar) -> "Polynomial":
        value = _as_fraction(value)
        return cls._raw(n, {(0,) * n: value} if value else {})

    @classmethod
    def variable(cls, n: int, index: int) -> "Polynomial":
        """x_index, with 1-based index"""
        if not 1 <= index <= n:
            raise RangeError(f"variable x{index} does not exist in {n} variables")
        exps = [0] * n
        exps[index - 1] = 1
        return cls._raw(n, {tuple(exps): Fraction(1)})

    @classmethod
    def monomial(cls, n: int, exps: Sequence[int], coeff: Scalar = 1) -> "Polynomial":
        return cls(n, {tuple(exps): coeff})

    # ------------------------------------------------------------------
    # inspection

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return MappingProxyType(self._terms)

    def items(self) -> List[Tuple[Exponent, Fraction]]:
        """Terms in canonical order, largest monomial first"""
        return sorted(self._terms.items(), key=lambda item: monomial_key(item[0]), reverse=True)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and (0,) * self.n in self._terms)

    def is_one(self) -> bool:
        return len(self._terms) == 1 and self._terms.get((0,) * self.n) == 1

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def total_degree(self) -> int:
        """Largest term degree; -1 for the zero polynomial"""
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def leading_exponent(self) -> Optional[Exponent]:
        if not self._terms:
            return None
        return max(self._terms, key=monomial_key)

    def leading_coefficient(self) -> Fraction:
        lead = self.leading_exponent()
        return self._terms[lead] if lead is not None else Fraction(0)

    def variables(self) -> List[int]:
        """1-based indices of the variables that occur"""
        seen = set()
        for exps in self._terms:
            seen.update(k + 1 for k, e in enumerate(exps) if e)
        return sorted(seen)

    def degree_in(self, var: int) -> int:
        if not self._terms:
            return -1
        return max(e[var - 1] for e in self._terms)

    def coefficients_in(self, var: int) -> Dict[int, "Polynomial"]:
        """Split f = sum_d c_d * x_var^d; the c_d do not involve x_var"""
        buckets: Dict[int, Dict[Exponent, Fraction]] = {}
        slot = var - 1
        for exps, coeff in self._terms.items():
            d = exps[slot]
            stripped = exps[:slot] + (0,) + exps[slot + 1:]
            buckets.setdefault(d, {})[stripped] = coeff
        return {d: Polynomial._raw(self.n, terms) for d, terms in buckets.items()}

    def monomial_content(self) -> Exponent:
        """Componentwise minimum exponent over all terms"""
        if not self._terms:
            return (0,) * self.n
        it = iter(self._terms)
        low = list(next(it))
        for exps in it:
            for k, e in enumerate(exps):
                if e < low[k]:
                    low[k] = e
        return tuple(low)

    def content(self) -> Fraction:
        """Positive rational c with self / c having coprime integer coefficients"""
        if not self._terms:
            return Fraction(0)
        num = 0
        den = 1
        for coeff in self._terms.values():
            num = gcd(num, coeff.numerator)
            den = _lcm(den, coeff.denominator)
        return Fraction(num, den)

    # ------------------------------------------------------------------
    # normal forms

    def normalized(self) -> "Polynomial":
        """Primitive integer coefficients, positive leading coefficient"""
        if not self._terms:
            return self
        scale = self.content()
        if self.leading_coefficient() < 0:
            scale = -scale
        if scale == 1:
            return self
        return Polynomial._raw(self.n, {e: c / scale for e, c in self._terms.items()})

    def canonical_key(self) -> Tuple:
        return tuple((monomial_key(e), c) for e, c in self.items())

    # ------------------------------------------------------------------
    # arithmetic

    def _coerce(self, other: Any) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.n != self.n:
                raise DimensionMismatchError(f"cannot combine polynomials in {self.n} and {other.n} variables")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Polynomial.constant(self.n, other)
        return NotImplemented

    def __add__(self, other: Any) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for exps, coeff in other._terms.items():
            value = terms.get(exps, 0) + coeff
            if value:
                terms[exps] = value
            else:
                terms.pop(exps, None)
        return Polynomial._raw(self.n, terms)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.n, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Any) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: Any) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def scale(self, factor: Scalar) -> "Polynomial":
        factor = _as_fraction(factor)
        if not factor:
            return Polynomial.zero(self.n)
        return Polynomial._raw(self.n, {e: c * factor for e, c in self._terms.items()})

    def __mul__(self, other: Any) -> "Polynomial":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._terms or not other._terms:
            return Polynomial.zero(self.n)
        terms: Dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                value = terms.get(key, 0) + c1 * c2
                if value:
                    terms[key] = value
                else:
                    terms.pop(key, None)
        return Polynomial._raw(self.n, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int) or k < 0:
            raise RangeError(f"exponent must be a non-negative integer, got {k}")
        result = Polynomial.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, exps: Sequence[int]) -> "Polynomial":
        """Multiply by the monomial x^exps"""
        return Polynomial._raw(
            self.n,
            {tuple(a + b for a, b in zip(e, exps)): c for e, c in self._terms.items()}
        )

    def divide_monomial(self, exps: Sequence[int]) -> "Polynomial":
        """Divide by x^exps; every term must be divisible"""
        terms = {}
        for e, c in self._terms.items():
            key = tuple(a - b for a, b in zip(e, exps))
            if any(k < 0 for k in key):
                raise NotDivisibleError(f"not divisible: {self} by monomial {list(exps)}")
            terms[key] = c
        return Polynomial._raw(self.n, terms)

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        """Quotient q with q * other == self, or NotDivisibleError"""
        other = self._coerce(other)
        if other is NotImplemented:
            raise TypeError("exact_div needs a polynomial divisor")
        if other.is_zero:
            raise NotDivisibleError("not divisible: division by the zero polynomial")
        if self.is_zero:
            return Polynomial.zero(self.n)
        if other.is_monomial():
            (exps, coeff), = other._terms.items()
            return self.divide_monomial(exps).scale(1 / coeff)

        lead_g = other.leading_exponent()
        lc_g = other._terms[lead_g]
        remainder = dict(self._terms)
        quotient: Dict[Exponent, Fraction] = {}
        while remainder:
            lead_r = max(remainder, key=monomial_key)
            diff = tuple(a - b for a, b in zip(lead_r, lead_g))
            if any(d < 0 for d in diff):
                raise NotDivisibleError(f"not divisible: {self} by {other}")
            factor = remainder[lead_r] / lc_g
            quotient[diff] = factor
            for e, c in other._terms.items():
                key = tuple(a + b for a, b in zip(e, diff))
                value = remainder.get(key, 0) - factor * c
                if value:
                    remainder[key] = value
                else:
                    remainder.pop(key, None)
        return Polynomial._raw(self.n, quotient)

    def divides(self, other: "Polynomial") -> bool:
        """True when self divides other exactly"""
        try:
            other.exact_div(self)
        except NotDivisibleError:
            return False
        return True

    # ------------------------------------------------------------------
    # evaluation

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        if len(point) != self.n:
            raise DimensionMismatchError(f"point has {len(point)} coordinates, expected {self.n}")
        values = [_as_fraction(v) for v in point]
        total = Fraction(0)
        for exps, coeff in self._terms.items():
            term = coeff
            for v, e in zip(values, exps):
                if e:
                    term *= v ** e
            total += term
        return total

    def evaluate_mod(self, point: Sequence[int], prime: int) -> int:
        """Value modulo a prime at an integer point"""
        total = 0
        for exps, coeff in self._terms.items():
            term = coeff.numerator * pow(coeff.denominator, -1, prime)
            for v, e in zip(point, exps):
                if e:
                    term = term * pow(v, e, prime)
            total = (total + term) % prime
        return total % prime

    def substitute(self, var: int, value: Scalar) -> "Polynomial":
        """Set x_var = value"""
        value = _as_fraction(value)
        slot = var - 1
        terms: Dict[Exponent, Fraction] = {}
        for exps, coeff in self._terms.items():
            d = exps[slot]
            c = coeff * value ** d if d else coeff
            if not c:
                continue
            key = exps[:slot] + (0,) + exps[slot + 1:]
            total = terms.get(key, 0) + c
            if total:
                terms[key] = total
            else:
                terms.pop(key, None)
        return Polynomial._raw(self.n, terms)

    # ------------------------------------------------------------------
    # comparison

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, Polynomial):
            return self.n == other.n and self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._terms == Polynomial.constant(self.n, other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    # ------------------------------------------------------------------
    # serialization

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "terms": [
                {"c": f"{c.numerator}/{c.denominator}", "e": list(e)}
                for e, c in self.items()
            ]
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: Any, path: str = "$") -> "Polynomial":
        if not isinstance(data, dict):
            raise InputFormatError("polynomial must be an object", position=path)
        n = data.get("n")
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise InputFormatError("field 'n' must be a non-negative integer", position=f"{path}.n")
        raw_terms = data.get("terms")
        if not isinstance(raw_terms, list):
            raise InputFormatError("field 'terms' must be a list", position=f"{path}.terms")
        terms: Dict[Exponent, Fraction] = {}
        for k, term in enumerate(raw_terms):
            where = f"{path}.terms[{k}]"
            if not isinstance(term, dict) or "c" not in term or "e" not in term:
                raise InputFormatError("term needs 'c' and 'e'", position=where)
            exps = term["e"]
            if (not isinstance(exps, list) or len(exps) != n
                    or any(not isinstance(e, int) or isinstance(e, bool) or e < 0 for e in exps)):
                raise InputFormatError(f"exponent must be {n} non-negative integers", position=f"{where}.e")
            try:
                coeff = _as_fraction(term["c"])
            except (TypeError, ValueError, ZeroDivisionError):
                raise InputFormatError(f"bad coefficient {term['c']!r}", position=f"{where}.c")
            key = tuple(exps)
            terms[key] = terms.get(key, Fraction(0)) + coeff
        return cls(n, terms)

    @classmethod
    def from_json(cls, text: str) -> "Polynomial":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise InputFormatError(f"malformed JSON: {e.msg}", position=f"line {e.lineno} column {e.colno}")
        return cls.from_dict(data)

    _TERM = re.compile(r"\s*([+-])?\s*([^+-]+)")
    _FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")
    _NUMBER = re.compile(r"^\d+(?:/\d+)?$")

    @classmethod
    def parse(cls, text: str, n: int) -> "Polynomial":
        """Read strings like '3/2*x1^2*x3 - x2 + 1'"""
        source = text.strip()
        if not source:
            raise InputFormatError("empty polynomial string", position="char 0")
        if source == "0":
            return cls.zero(n)
        terms: Dict[Exponent, Fraction] = {}
        pos = 0
        while pos < len(source):
            match = cls._TERM.match(source, pos)
            if not match or match.end() == pos:
                raise InputFormatError(f"cannot read polynomial {text!r}", position=f"char {pos}")
            sign = -1 if match.group(1) == "-" else 1
            body = match.group(2).replace(" ", "")
            coeff = Fraction(sign)
            exps = [0] * n
            for factor in body.split("*"):
                if cls._NUMBER.match(factor):
                    coeff *= Fraction(factor)
                    continue
                fm = cls._FACTOR.match(factor)
                if not fm:
                    raise InputFormatError(f"bad factor {factor!r} in {text!r}", position=f"char {match.start(2)}")
                index = int(fm.group(1))
                if not 1 <= index <= n:
                    raise InputFormatError(f"x{index} is outside {n} variables", position=f"char {match.start(2)}")
                exps[index - 1] += int(fm.group(2) or 1)
            key = tuple(exps)
            terms[key] = terms.get(key, Fraction(0)) + coeff
            pos = match.end()
        return cls(n, terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for exps, coeff in self.items():
            factors = []
            for k, e in enumerate(exps):
                if e == 1:
                    factors.append(f"x{k + 1}")
                elif e > 1:
                    factors.append(f"x{k + 1}^{e}")
            magnitude = abs(coeff)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = f"{magnitude}*" + "*".join(factors)
            if not pieces:
                pieces.append(f"-{body}" if coeff < 0 else body)
            else:
                pieces.append(f"- {body}" if coeff < 0 else f"+ {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"Polynomial({self.n}, '{self}')"


def poly_arith(op: str, f: Polynomial, g: Polynomial) -> Polynomial:
    """Dispatch add/sub/mul/exact_div by name"""
    if f.n != g.n:
        raise DimensionMismatchError(f"cannot combine polynomials in {f.n} and {g.n} variables")
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "exact_div":
        return f.exact_div(g)
    raise RangeError(f"unknown polynomial operation {op!r}")


def variables(n: int) -> List[Polynomial]:
    """[x1, ..., xn]"""
    return [Polynomial.variable(n, k) for k in range(1, n + 1)]


def product(polys: Iterable[Polynomial], n: int) -> Polynomial:
    result = Polynomial.one(n)
    for p in polys:
        result = result * p
    return result

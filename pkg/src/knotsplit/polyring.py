"""Exact arithmetic for Laurent polynomials over Q and their fraction field.

All bracket-level computation happens in the Kauffman variable A; after the
substitution A -> t^(-1/4) the same representation holds Jones polynomials,
with integer exponents read in quarter powers of t.  Values are immutable
and hashable, operations are pure, so everything is safe to share between
threads.
"""

from __future__ import annotations

from fractions import Fraction


class DivisionByZero(ZeroDivisionError):
    """Inversion or division by an exact zero."""


class UndefinedGcd(ValueError):
    """gcd(0, 0) has no normalized representative."""


def _coerce(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"coefficient must be int or Fraction, not {type(value).__name__}")


class LaurentPolynomial:
    """A Laurent polynomial in one variable with rational coefficients.

    The representation is a map from integer exponents (negative allowed)
    to nonzero coefficients; the zero polynomial is the empty map.  Because
    the map is kept canonical, structural equality is value equality.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean: dict[int, Fraction] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for exp, coeff in items:
                coeff = _coerce(coeff)
                if not coeff:
                    continue
                exp = int(exp)
                acc = clean.get(exp)
                if acc is None:
                    clean[exp] = coeff
                else:
                    acc = acc + coeff
                    if acc:
                        clean[exp] = acc
                    else:
                        del clean[exp]
        self._terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPolynomial":
        return _ZERO

    @classmethod
    def one(cls) -> "LaurentPolynomial":
        return _ONE

    @classmethod
    def monomial(cls, exponent: int, coeff=1) -> "LaurentPolynomial":
        return cls({exponent: coeff})

    @classmethod
    def constant(cls, coeff) -> "LaurentPolynomial":
        return cls({0: coeff})

    # -- inspection ---------------------------------------------------

    def terms(self) -> tuple[tuple[int, Fraction], ...]:
        """Term list sorted by ascending exponent."""
        return tuple(sorted(self._terms.items()))

    def coefficient(self, exponent: int) -> Fraction:
        return self._terms.get(exponent, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def min_exponent(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return min(self._terms)

    def max_exponent(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return max(self._terms)

    def leading_coefficient(self) -> Fraction:
        return self._terms[self.max_exponent()]

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        out = dict(self._terms)
        for exp, coeff in other._terms.items():
            acc = out.get(exp)
            if acc is None:
                out[exp] = coeff
            else:
                acc = acc + coeff
                if acc:
                    out[exp] = acc
                else:
                    del out[exp]
        result = LaurentPolynomial.__new__(LaurentPolynomial)
        result._terms = out
        result._hash = None
        return result

    def __neg__(self):
        result = LaurentPolynomial.__new__(LaurentPolynomial)
        result._terms = {e: -c for e, c in self._terms.items()}
        result._hash = None
        return result

    def __sub__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        out: dict[int, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                acc = out.get(e)
                if acc is None:
                    out[e] = c1 * c2
                else:
                    acc = acc + c1 * c2
                    if acc:
                        out[e] = acc
                    else:
                        del out[e]
        result = LaurentPolynomial.__new__(LaurentPolynomial)
        result._terms = out
        result._hash = None
        return result

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            raise ValueError("negative powers are not defined in the polynomial ring")
        result = _ONE
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scaled(self, scalar) -> "LaurentPolynomial":
        scalar = _coerce(scalar)
        if not scalar:
            return _ZERO
        result = LaurentPolynomial.__new__(LaurentPolynomial)
        result._terms = {e: c * scalar for e, c in self._terms.items()}
        result._hash = None
        return result

    def shifted(self, k: int) -> "LaurentPolynomial":
        """Multiply by the k-th power of the variable."""
        result = LaurentPolynomial.__new__(LaurentPolynomial)
        result._terms = {e + k: c for e, c in self._terms.items()}
        result._hash = None
        return result

    def exact_div(self, divisor: "LaurentPolynomial") -> "LaurentPolynomial":
        """Exact division; raises ValueError if the quotient is not exact."""
        if divisor.is_zero():
            raise DivisionByZero("division by the zero polynomial")
        if self.is_zero():
            return _ZERO
        shift = self.min_exponent() - divisor.min_exponent()
        num = {e - self.min_exponent(): c for e, c in self._terms.items()}
        den = {e - divisor.min_exponent(): c for e, c in divisor._terms.items()}
        quotient, remainder = _ordinary_divmod(num, den)
        if remainder:
            raise ValueError("inexact polynomial division")
        return LaurentPolynomial(quotient).shifted(shift)

    def normalized(self) -> "LaurentPolynomial":
        """Unit-normalized form: lowest exponent 0, leading coefficient 1."""
        if self.is_zero():
            return _ZERO
        shifted = self.shifted(-self.min_exponent())
        return shifted.scaled(1 / shifted.leading_coefficient())

    # -- equality -----------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(sorted(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"LaurentPolynomial({format_laurent(self)!r})"


_ZERO = LaurentPolynomial()
_ONE = LaurentPolynomial({0: 1})

ZERO = _ZERO
ONE = _ONE
A = LaurentPolynomial.monomial(1)

# delta = -A^2 - A^(-2), the value of a free circle under the bracket rules.
DELTA = LaurentPolynomial({2: -1, -2: -1})

_DELTA_POWERS = [_ONE, DELTA]


def delta_power(k: int) -> LaurentPolynomial:
    """k-th power of delta = -A^2 - A^(-2), cached."""
    if k < 0:
        raise ValueError("negative circle exponent")
    while len(_DELTA_POWERS) <= k:
        _DELTA_POWERS.append(_DELTA_POWERS[-1] * DELTA)
    return _DELTA_POWERS[k]


def _ordinary_divmod(num: dict, den: dict) -> tuple[dict, dict]:
    """Long division of ordinary polynomials held as exponent->Fraction maps."""
    deg_den = max(den)
    lead_den = den[deg_den]
    quotient: dict[int, Fraction] = {}
    rem = dict(num)
    while rem:
        deg = max(rem)
        if deg < deg_den:
            break
        factor = rem[deg] / lead_den
        quotient[deg - deg_den] = factor
        for e, c in den.items():
            target = deg - deg_den + e
            acc = rem.get(target, Fraction(0)) - factor * c
            if acc:
                rem[target] = acc
            else:
                rem.pop(target, None)
    return quotient, rem


def poly_gcd(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    """Greatest common divisor, in normalized form (see ``normalized``).

    Monomial units are irrelevant to divisibility in the Laurent ring, so
    both inputs are shifted to ordinary polynomials and the Euclidean
    algorithm runs over Q[x].
    """
    if a.is_zero() and b.is_zero():
        raise UndefinedGcd("gcd(0, 0) is undefined")
    if a.is_zero():
        return b.normalized()
    if b.is_zero():
        return a.normalized()
    x = {e - a.min_exponent(): c for e, c in a._terms.items()}
    y = {e - b.min_exponent(): c for e, c in b._terms.items()}
    while y:
        _, rem = _ordinary_divmod(x, y)
        x, y = y, rem
        if y:
            shift = min(y)
            if shift:
                y = {e - shift: c for e, c in y.items()}
    return LaurentPolynomial(x).normalized()


def substitute_jones(p: LaurentPolynomial) -> LaurentPolynomial:
    """Apply A -> t^(-1/4): each exponent e becomes -e, read in quarter
    powers of t.  This is a ring isomorphism, so it commutes with all
    arithmetic."""
    return LaurentPolynomial({-e: c for e, c in p._terms.items()})


class RationalFunction:
    """A reduced fraction of Laurent polynomials.

    Canonical form: numerator and denominator share no nonunit factor, the
    denominator has lowest exponent 0 and is monic.  Equality of canonical
    forms is then structural.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPolynomial, den: LaurentPolynomial = _ONE):
        if den.is_zero():
            raise DivisionByZero("rational function with zero denominator")
        if num.is_zero():
            self.num = _ZERO
            self.den = _ONE
            return
        g = poly_gcd(num, den)
        num = num.exact_div(g)
        den = den.exact_div(g)
        shift = -den.min_exponent()
        num = num.shifted(shift)
        den = den.shifted(shift)
        scale = 1 / den.leading_coefficient()
        self.num = num.scaled(scale)
        self.den = den.scaled(scale)

    @classmethod
    def from_poly(cls, p: LaurentPolynomial) -> "RationalFunction":
        return cls(p, _ONE)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other):
        if isinstance(other, LaurentPolynomial):
            other = RationalFunction(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __neg__(self):
        out = RationalFunction.__new__(RationalFunction)
        out.num = -self.num
        out.den = self.den
        return out

    def __sub__(self, other):
        if isinstance(other, LaurentPolynomial):
            other = RationalFunction(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, LaurentPolynomial):
            other = RationalFunction(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    def invert(self) -> "RationalFunction":
        if self.num.is_zero():
            raise DivisionByZero("cannot invert zero")
        return RationalFunction(self.den, self.num)

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunction({format_laurent(self.num)!r}, {format_laurent(self.den)!r})"


# -- textual rendering ------------------------------------------------
#
# Grammar (round-trip parseable, whitespace around '+' required):
#   poly   := "0" | term (" + " term)*
#   term   := rational | rational "*A^" int        (variable "A")
#           | rational | rational "*t^(" int "/4)"  (variable "t")
# Rationals print as p or p/q; terms appear in ascending exponent order.


def format_laurent(p: LaurentPolynomial, variable: str = "A") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for exp, coeff in p.terms():
        if exp == 0:
            parts.append(str(coeff))
        elif variable == "A":
            parts.append(f"{coeff}*A^{exp}")
        elif variable == "t":
            parts.append(f"{coeff}*t^({exp}/4)")
        else:
            raise ValueError(f"unknown variable {variable!r}")
    return " + ".join(parts)


def parse_laurent(text: str, variable: str = "A") -> LaurentPolynomial:
    text = text.strip()
    if text == "0":
        return _ZERO
    terms = []
    for chunk in text.split("+"):
        chunk = chunk.strip()
        if not chunk:
            raise ValueError("empty term in polynomial text")
        if "*" in chunk:
            coeff_text, var_text = chunk.split("*", 1)
            coeff = Fraction(coeff_text.strip())
            var_text = var_text.strip()
            if variable == "A":
                if not var_text.startswith("A^"):
                    raise ValueError(f"bad term {chunk!r}")
                exp = int(var_text[2:])
            elif variable == "t":
                if not (var_text.startswith("t^(") and var_text.endswith("/4)")):
                    raise ValueError(f"bad term {chunk!r}")
                exp = int(var_text[3:-3])
            else:
                raise ValueError(f"unknown variable {variable!r}")
        else:
            coeff = Fraction(chunk)
            exp = 0
        terms.append((exp, coeff))
    return LaurentPolynomial(terms)


def format_rational(r: RationalFunction, variable: str = "A") -> str:
    if r.den == _ONE:
        return format_laurent(r.num, variable)
    return f"({format_laurent(r.num, variable)}) / ({format_laurent(r.den, variable)})"


def parse_rational(text: str, variable: str = "A") -> RationalFunction:
    text = text.strip()
    if ") / (" in text:
        num_text, den_text = text.split(") / (", 1)
        if not num_text.startswith("(") or not den_text.endswith(")"):
            raise ValueError(f"bad rational function text {text!r}")
        return RationalFunction(
            parse_laurent(num_text[1:], variable),
            parse_laurent(den_text[:-1], variable),
        )
    return RationalFunction(parse_laurent(text, variable))

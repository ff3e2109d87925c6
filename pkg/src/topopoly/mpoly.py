"""Sparse integer polynomials in the fixed variables x, y, z, a, b, t.

Exponents are stored in half-units so that terms like z^(1/2) and
a^(3/2) are exact: a stored exponent h means the variable appears to
the power h/2.  Stored exponents are never negative; computations that
pass through negative powers must clear them before building a value
of this class (see compose_laurent).

The canonical string sorts terms lexicographically by exponent tuple,
so the same polynomial always prints the same way:

    1 + 3z + 2z^2 + xz^2
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

VARS = ("x", "y", "z", "a", "b", "t")
_VAR_INDEX = {v: i for i, v in enumerate(VARS)}
_ZEROS = (0,) * len(VARS)


def _power_suffix(h: int) -> str:
    if h == 2:
        return ""
    if h % 2 == 0:
        return f"^{h // 2}"
    return f"^({h}/2)"


class MPolynomial:
    """Immutable sparse polynomial; do not mutate the term dict."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, ...], int] | None = None):
        clean: dict[tuple[int, ...], int] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != len(VARS):
                raise ValueError(f"exponent tuple {exps} needs {len(VARS)} entries")
            if any(h < 0 or not isinstance(h, int) for h in exps):
                raise ValueError(f"negative or non-integer exponent in {exps}")
            if coeff:
                clean[exps] = clean.get(exps, 0) + coeff
                if not clean[exps]:
                    del clean[exps]
        self._terms = clean

    # -- constructors ------------------------------------------------

    @staticmethod
    def zero() -> "MPolynomial":
        return MPolynomial()

    @staticmethod
    def one() -> "MPolynomial":
        return MPolynomial({_ZEROS: 1})

    @staticmethod
    def constant(c: int) -> "MPolynomial":
        return MPolynomial({_ZEROS: c})

    @staticmethod
    def variable(name: str, power: int = 1) -> "MPolynomial":
        return MPolynomial.variable_half(name, 2 * power)

    @staticmethod
    def variable_half(name: str, half_units: int) -> "MPolynomial":
        if name not in _VAR_INDEX:
            raise ValueError(f"unknown variable {name!r}")
        exps = [0] * len(VARS)
        exps[_VAR_INDEX[name]] = half_units
        return MPolynomial({tuple(exps): 1})

    @staticmethod
    def monomial(coeff: int = 1, **half_units: int) -> "MPolynomial":
        exps = [0] * len(VARS)
        for name, h in half_units.items():
            exps[_VAR_INDEX[name]] = h
        return MPolynomial({tuple(exps): coeff})

    # -- inspection --------------------------------------------------

    def terms(self) -> dict[tuple[int, ...], int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, **powers: int) -> int:
        """Coefficient of a whole-power monomial, e.g. coeff(x=1, z=2)."""
        exps = [0] * len(VARS)
        for name, p in powers.items():
            exps[_VAR_INDEX[name]] = 2 * p
        return self._terms.get(tuple(exps), 0)

    def variables(self) -> set[str]:
        out = set()
        for exps in self._terms:
            for i, h in enumerate(exps):
                if h:
                    out.add(VARS[i])
        return out

    def max_half_power(self, name: str) -> int:
        i = _VAR_INDEX[name]
        return max((exps[i] for exps in self._terms), default=0)

    # -- arithmetic --------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        terms = dict(self._terms)
        for exps, coeff in other._terms.items():
            terms[exps] = terms.get(exps, 0) + coeff
        return MPolynomial(terms)

    __radd__ = __add__

    def __neg__(self):
        return MPolynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        terms: dict[tuple[int, ...], int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                terms[key] = terms.get(key, 0) + c1 * c2
        return MPolynomial(terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = MPolynomial.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = MPolynomial.constant(other)
        if not isinstance(other, MPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __bool__(self):
        return bool(self._terms)

    # -- evaluation --------------------------------------------------

    def evaluate(self, values: Mapping[str, Fraction | int],
                 sqrts: Mapping[str, Fraction | int] | None = None) -> Fraction:
        """Exact value at a rational point.

        Variables with odd half-unit exponents need an entry in sqrts
        giving a rational square root of their value.
        """
        sqrts = sqrts or {}
        for name, s in sqrts.items():
            v = values.get(name)
            if v is None or Fraction(s) * Fraction(s) != Fraction(v):
                raise ValueError(f"sqrts[{name!r}] is not a square root of the value")
        total = Fraction(0)
        for exps, coeff in self._terms.items():
            prod = Fraction(coeff)
            for i, h in enumerate(exps):
                if not h:
                    continue
                name = VARS[i]
                if h % 2 == 0:
                    if name not in values:
                        raise ValueError(f"no value for {name}")
                    prod *= Fraction(values[name]) ** (h // 2)
                else:
                    if name not in sqrts:
                        raise ValueError(f"odd half-power of {name} needs sqrts")
                    prod *= Fraction(sqrts[name]) ** h
            total += prod
        return total

    def substitute(self, name: str, image: "MPolynomial") -> "MPolynomial":
        """Replace a whole-power variable by a polynomial."""
        i = _VAR_INDEX[name]
        out = MPolynomial.zero()
        powers: dict[int, MPolynomial] = {0: MPolynomial.one()}

        def image_pow(p: int) -> MPolynomial:
            if p not in powers:
                powers[p] = image_pow(p - 1) * image
            return powers[p]

        for exps, coeff in self._terms.items():
            h = exps[i]
            if h % 2:
                raise ValueError(f"cannot substitute into half-power of {name}")
            rest = list(exps)
            rest[i] = 0
            out = out + MPolynomial({tuple(rest): coeff}) * image_pow(h // 2)
        return out

    # -- printing ----------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for exps in sorted(self._terms):
            coeff = self._terms[exps]
            mono = "".join(VARS[i] + _power_suffix(h)
                           for i, h in enumerate(exps) if h)
            mag = abs(coeff)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}{mono}"
            else:
                body = str(mag)
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"MPolynomial({self})"


def _coerce(value) -> MPolynomial:
    if isinstance(value, MPolynomial):
        return value
    if isinstance(value, int):
        return MPolynomial.constant(value)
    raise TypeError(f"cannot combine MPolynomial with {type(value).__name__}")


def compose_laurent(poly: MPolynomial,
                    images: Mapping[str, Mapping[int, int]]) -> dict[int, int]:
    """Substitute a one-symbol Laurent polynomial for each variable.

    Each image maps exponent (possibly negative) to coefficient.  The
    result is the Laurent expansion of poly under the substitution, as
    an exponent -> coefficient dict.  Whole-power variables only.
    """
    for exps in poly._terms:
        for i, h in enumerate(exps):
            if h:
                if h % 2:
                    raise ValueError(f"half-power of {VARS[i]} cannot be composed")
                if VARS[i] not in images:
                    raise ValueError(f"no image for {VARS[i]}")
    pow_cache: dict[tuple[str, int], dict[int, int]] = {}

    def laurent_mul(u: Mapping[int, int], v: Mapping[int, int]) -> dict[int, int]:
        out: dict[int, int] = {}
        for d1, c1 in u.items():
            for d2, c2 in v.items():
                key = d1 + d2
                out[key] = out.get(key, 0) + c1 * c2
        return {d: c for d, c in out.items() if c}

    def image_pow(name: str, p: int) -> dict[int, int]:
        if p == 0:
            return {0: 1}
        key = (name, p)
        if key not in pow_cache:
            pow_cache[key] = laurent_mul(image_pow(name, p - 1),
                                         dict(images[name]))
        return pow_cache[key]

    total: dict[int, int] = {}
    for exps, coeff in poly._terms.items():
        term: dict[int, int] = {0: coeff}
        for i, h in enumerate(exps):
            if h:
                term = laurent_mul(term, image_pow(VARS[i], h // 2))
        for d, c in term.items():
            total[d] = total.get(d, 0) + c
    return {d: c for d, c in total.items() if c}


def laurent_to_poly(laurent: Mapping[int, int], name: str = "t") -> MPolynomial:
    """Build a polynomial from Laurent coefficients; negative powers
    must have cancelled."""
    bad = [d for d, c in laurent.items() if d < 0 and c]
    if bad:
        raise ValueError(f"negative powers survive: {sorted(bad)}")
    out = MPolynomial.zero()
    for d, c in laurent.items():
        if c:
            out = out + MPolynomial.monomial(c, **{name: 2 * d})
    return out

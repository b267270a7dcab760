"""Multivariate Laurent polynomials with integer coefficients."""

import re
from fractions import Fraction


class LaurentPoly:
    """An element of Z[x1^{+-1}, ..., xn^{+-1}].

    Terms are stored as a dict from exponent tuples to nonzero ints.  Values
    are treated as immutable: every operation returns a new polynomial.
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, terms=None, nvars=1):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        self.nvars = nvars
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} has wrong length for {nvars} variables")
            c = int(c)
            if c:
                clean[exp] = clean.get(exp, 0) + c
                if clean[exp] == 0:
                    del clean[exp]
        self.terms = clean
        self._hash = None

    # constructors

    @classmethod
    def constant(cls, c, nvars):
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def var(cls, i, nvars):
        """The variable x_{i+1} (``i`` is 0-based)."""
        exp = [0] * nvars
        exp[i] = 1
        return cls({tuple(exp): 1}, nvars)

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls({tuple(exp): coeff}, len(exp))

    # basic protocol

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self.nvars)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"LaurentPoly({self.format()!r}, nvars={self.nvars})"

    def __str__(self):
        return self.format()

    def is_monomial(self):
        return len(self.terms) == 1

    def _coerce(self, other):
        if isinstance(other, int):
            return LaurentPoly.constant(other, self.nvars)
        if not isinstance(other, LaurentPoly):
            raise TypeError(f"cannot combine LaurentPoly with {type(other).__name__}")
        if other.nvars != self.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
        return other

    # ring operations

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            if not self.is_monomial():
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self.terms.items()
            if abs(c) != 1:
                raise ValueError("monomial coefficient is not a unit")
            return LaurentPoly({tuple(a * k for a in e): c ** (-k)}, self.nvars)
        out = LaurentPoly.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def divide_exact(self, other):
        """Exact quotient ``self / other``; raises ArithmeticError if inexact."""
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        if not self:
            return LaurentPoly({}, self.nvars)
        # Newton polytope of the quotient lies in box(self) - box(other).
        lo = [min(e[i] for e in self.terms) - min(e[i] for e in other.terms) for i in range(self.nvars)]
        hi = [max(e[i] for e in self.terms) - max(e[i] for e in other.terms) for i in range(self.nvars)]
        lead_d = max(other.terms)
        cd = other.terms[lead_d]
        rem = self
        quot = {}
        while rem:
            lead = max(rem.terms)
            c = rem.terms[lead]
            e = tuple(a - b for a, b in zip(lead, lead_d))
            if c % cd or any(not (l <= x <= h) for x, l, h in zip(e, lo, hi)):
                raise ArithmeticError("division is not exact")
            q = c // cd
            quot[e] = q
            rem = rem - LaurentPoly({e: q}, self.nvars) * other
        return LaurentPoly(quot, self.nvars)

    def __truediv__(self, other):
        return self.divide_exact(other)

    # evaluation and substitution

    def evaluate(self, values):
        """Value at a point (ints or Fractions); returns a Fraction."""
        if len(values) != self.nvars:
            raise ValueError("wrong number of values")
        total = Fraction(0)
        for e, c in self.terms.items():
            t = Fraction(c)
            for v, a in zip(values, e):
                if a:
                    if v == 0 and a < 0:
                        raise ZeroDivisionError("negative power of zero")
                    t *= Fraction(v) ** a
            total += t
        return total

    def specialize(self, i, v, drop=True):
        """Substitute ``x_{i+1} = v``; with ``drop`` the variable is removed."""
        if not 0 <= i < self.nvars:
            raise IndexError(f"variable index {i} out of range")
        out = {}
        for e, c in self.terms.items():
            a = e[i]
            if v == 0 and a < 0:
                raise ZeroDivisionError("substituting 0 into a negative power")
            val = Fraction(v) ** a * c
            if val.denominator != 1:
                raise ArithmeticError("specialization leaves Z[x^{+-1}]")
            ne = e[:i] + e[i + 1:] if drop else e[:i] + (0,) + e[i + 1:]
            out[ne] = out.get(ne, 0) + int(val)
        return LaurentPoly(out, self.nvars - 1 if drop else self.nvars)

    def min_exponents(self):
        if not self.terms:
            return (0,) * self.nvars
        return tuple(min(e[i] for e in self.terms) for i in range(self.nvars))

    def coefficients_nonnegative(self):
        return all(c > 0 for c in self.terms.values())

    # text form

    def format(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            mono = "*".join(
                f"x{i + 1}" if a == 1 else f"x{i + 1}^{a}" for i, a in enumerate(e) if a
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    @classmethod
    def parse(cls, text, nvars):
        """Inverse of :meth:`format` (whitespace is ignored)."""
        text = re.sub(r"\s+", "", text)
        if text == "0":
            return cls({}, nvars)
        pos = 0
        terms = {}
        for m in _TERM.finditer(text):
            if m.start() != pos or (pos > 0 and not m.group(1)):
                break
            pos = m.end()
            coeff = -1 if m.group(1) == "-" else 1
            exp = [0] * nvars
            for factor in m.group(2).split("*"):
                if factor.isdigit():
                    coeff *= int(factor)
                    continue
                name, _, power = factor.partition("^")
                idx = int(name[1:]) - 1
                if not 0 <= idx < nvars:
                    raise ValueError(f"variable {name} out of range")
                exp[idx] += int(power or 1)
            terms[tuple(exp)] = terms.get(tuple(exp), 0) + coeff
        if pos != len(text) or not text:
            raise ValueError(f"cannot parse Laurent polynomial {text!r}")
        return cls(terms, nvars)


_FACTOR = r"(?:\d+|x\d+(?:\^-?\d+)?)"
_TERM = re.compile(rf"([+-]?)({_FACTOR}(?:\*{_FACTOR})*)")


def laurent_mul(a, b):
    return a * b


def laurent_specialize(p, i, v, drop=True):
    return p.specialize(i, v, drop=drop)


def variables(nvars):
    return [LaurentPoly.var(i, nvars) for i in range(nvars)]

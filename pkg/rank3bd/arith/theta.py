# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

"""Irrational parameters theta and exact numbers of the form a + b*theta.

theta is never turned into a float. Order questions about a + b*theta are answered by
refining rational enclosures of theta until the sign of a + b*x is constant on the enclosure.
"""
# pylint: disable=invalid-name
import logging
import math
import re
from dataclasses import dataclass
from fractions import Fraction

from ..errors import ParseError

logger = logging.getLogger("Theta")  # pylint: disable=invalid-name

_CF_RE = re.compile(r"^cf:(?P<prefix>[0-9,\s]*?),?\s*\((?P<period>[0-9,\s]+)\)\s*$")
_SURD_RE = re.compile(
    r"^surd:\(\s*(?P<a>[+-]?\d+)\s*(?P<op>[+-])\s*(?P<b>\d+)\s*\*\s*sqrt\(\s*(?P<d>\d+)\s*\)\s*\)"
    r"\s*/\s*(?P<c>\d+)\s*$"
)


def parse_rational(text):
    """Parse ``p``, ``p/q`` or ``-p/q`` into a Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as err:
        raise ParseError(f"Malformed rational: {text!r}") from err


def _surd_sign(P, Q, d):
    """Exact sign of P + Q*sqrt(d) for integers P, Q and d >= 0."""
    if Q == 0 or d == 0:
        return (P > 0) - (P < 0)
    if P >= 0 and Q > 0:
        return 1
    if P <= 0 and Q < 0:
        return -1
    diff = P * P - Q * Q * d
    diff_sign = (diff > 0) - (diff < 0)
    return diff_sign if P > 0 else -diff_sign


class ThetaSpec:
    """An exactly described irrational number in (0, 1)."""

    def bounds(self, width):
        """Rational bounds lo < theta < hi with hi - lo <= width."""
        raise NotImplementedError

    def __str__(self):
        raise NotImplementedError

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r})"

    def __eq__(self, other):
        return isinstance(other, ThetaSpec) and str(self) == str(other)

    def __hash__(self):
        return hash(str(self))


class ContinuedFraction(ThetaSpec):
    """theta = [0; a_1, a_2, ...] with an eventually periodic coefficient sequence.

    Parameters
    ----------
    prefix: Sequence[int]
        The leading coefficients, starting with a_0 = 0.

    period: Sequence[int]
        The repeating tail, non-empty. Every coefficient after a_0 is at least 1.
    """

    def __init__(self, prefix, period):
        self.prefix = tuple(int(x) for x in prefix)
        self.period = tuple(int(x) for x in period)
        if not self.prefix or self.prefix[0] != 0:
            raise ParseError(f"Continued fraction must start with 0, got {self.prefix}")
        if not self.period:
            raise ParseError("Continued fraction needs a non-empty periodic tail")
        if any(x < 1 for x in self.prefix[1:] + self.period):
            raise ParseError("Continued fraction coefficients after the first must be >= 1")

    def coefficient(self, n):
        """The n-th coefficient a_n."""
        if n < len(self.prefix):
            return self.prefix[n]
        return self.period[(n - len(self.prefix)) % len(self.period)]

    def convergents(self):
        """Yield the convergents p_n/q_n as (p_n, q_n), n = 0, 1, ..."""
        p_prev, q_prev = 1, 0
        p, q = self.coefficient(0), 1
        n = 0
        while True:
            yield p, q
            n += 1
            a = self.coefficient(n)
            p, p_prev = a * p + p_prev, p
            q, q_prev = a * q + q_prev, q

    def bounds(self, width):
        width = Fraction(width)
        if width <= 0:
            raise ValueError(f"Width must be positive, got {width}")
        convergents = self.convergents()
        p0, q0 = next(convergents)
        for p1, q1 in convergents:
            # theta lies strictly between consecutive convergents.
            if Fraction(1, q0 * q1) <= width:
                lo, hi = sorted((Fraction(p0, q0), Fraction(p1, q1)))
                return lo, hi
            p0, q0 = p1, q1
        raise AssertionError("unreachable")

    def __str__(self):
        head = ",".join(str(x) for x in self.prefix)
        tail = ",".join(str(x) for x in self.period)
        return f"cf:{head},({tail})"


class QuadraticSurd(ThetaSpec):
    """theta = (a + b*sqrt(d)) / c with b != 0, c > 0 and d a positive non-square."""

    def __init__(self, a, b, d, c):
        self.a, self.b, self.d, self.c = int(a), int(b), int(d), int(c)
        if self.b == 0:
            raise ParseError("Surd coefficient b must be non-zero")
        if self.c <= 0:
            raise ParseError("Surd denominator c must be positive")
        if self.d <= 0 or math.isqrt(self.d) ** 2 == self.d:
            raise ParseError(f"Surd radicand must be a positive non-square, got {self.d}")
        if _surd_sign(self.a, self.b, self.d) <= 0 or _surd_sign(
            self.a - self.c, self.b, self.d
        ) >= 0:
            raise ParseError(f"Surd {self} does not lie in (0, 1)")

    def bounds(self, width):
        width = Fraction(width)
        if width <= 0:
            raise ValueError(f"Width must be positive, got {width}")
        k = 0
        while Fraction(abs(self.b), self.c * 2 ** k) > width:
            k += 1
        # s/2^k < sqrt(d) < (s+1)/2^k strictly because d*4^k is not a square.
        s = math.isqrt(self.d * 4 ** k)
        ends = [Fraction(self.a * 2 ** k + self.b * x, self.c * 2 ** k) for x in (s, s + 1)]
        lo, hi = sorted(ends)
        return lo, hi

    def __str__(self):
        op = "+" if self.b > 0 else "-"
        return f"surd:({self.a}{op}{abs(self.b)}*sqrt({self.d}))/{self.c}"


def parse_theta(text):
    """Parse the textual theta syntax.

    Parameters
    ----------
    text: str
        ``cf:0,2,(2)`` for [0;2,2,2,...] or ``surd:(-1+1*sqrt(2))/1``.

    Returns
    -------
    spec: ThetaSpec
        The parsed specification.
    """
    text = text.strip()
    match = _CF_RE.match(text)
    if match:
        prefix = [x for x in match.group("prefix").replace(" ", "").split(",") if x]
        period = [x for x in match.group("period").replace(" ", "").split(",") if x]
        return ContinuedFraction(prefix, period)
    match = _SURD_RE.match(text)
    if match:
        b = int(match.group("b")) * (1 if match.group("op") == "+" else -1)
        return QuadraticSurd(match.group("a"), b, match.group("d"), match.group("c"))
    raise ParseError(f"Malformed theta spec: {text!r}")


def theta_bounds(spec, width):
    """Rational lo < theta < hi with hi - lo <= width; smaller widths give nested intervals."""
    return spec.bounds(width)


@dataclass(frozen=True)
class ThetaReal:
    """The real number a + b*theta with rational a and b.

    Since theta is irrational the pair (a, b) is determined by the value.
    """

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    def __add__(self, other):
        return ThetaReal(self.a + other.a, self.b + other.b)

    def __neg__(self):
        return ThetaReal(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor):
        """Multiply by a rational number."""
        factor = Fraction(factor)
        return ThetaReal(self.a * factor, self.b * factor)

    def is_zero(self):
        return self.a == 0 and self.b == 0

    def sign(self, spec):
        """Sign of the value, see `theta_sign`."""
        return theta_sign(self, spec)

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*theta"
        op = "+" if self.b > 0 else "-"
        return f"{self.a}{op}{abs(self.b)}*theta"


def theta_sign(x, spec):
    """Sign of a + b*theta in {-1, 0, 1}.

    The enclosure of theta is refined until a + b*lo and a + b*hi agree in sign; this
    terminates because a + b*theta = 0 with b != 0 would make theta rational.
    """
    if x.b == 0:
        return (x.a > 0) - (x.a < 0)
    width = Fraction(1)
    while True:
        lo, hi = spec.bounds(width)
        v_lo = x.a + x.b * lo
        v_hi = x.a + x.b * hi
        if v_lo > 0 and v_hi > 0:
            return 1
        if v_lo < 0 and v_hi < 0:
            return -1
        logger.debug("Refine theta enclosure below width %s for %s", width, x)
        width /= 16

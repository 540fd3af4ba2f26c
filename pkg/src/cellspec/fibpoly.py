"""Dense integer polynomials and the disguised Fibonacci family.

The polynomials f_i are defined by f_0 = 0, f_1 = 1 and

    f_i = f_{i-1} - f_{i-2}        (i odd),
    f_i = x*f_{i-1} - f_{i-2}      (i even).

They are disguised Fibonacci polynomials: with g_0 = 0, g_1 = 1 and
g_i = x*g_{i-1} + g_{i-2} one has, up to sign, f_i(-x^2) = g_i(x) for odd i
and f_i(-x^2) = x*g_i(x) for even i.  Each f_i factors over Z as the product
of irreducible polynomials fbar_d over the divisors d of i, so fbar_i is
obtained from f_i by exact division.  For i > 2 the roots of fbar_i are
4*cos^2(pi*j/i) for j coprime to i, all in the open interval (0, 4), and the
largest root increases strictly with i, approaching 4.

Everything here is exact: coefficients are Python ints, root counting is done
with Sturm sequences over Fraction, and no floats appear anywhere.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from math import gcd as _int_gcd


class IntPolynomial:
    """A polynomial with integer coefficients, stored densely ascending.

    >>> p = IntPolynomial([1, -3, 1])   # 1 - 3x + x^2
    >>> str(p)
    'x^2 - 3x + 1'
    >>> p.degree
    2
    >>> p(Fraction(1, 2))
    Fraction(-1, 4)
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficients required, got {c!r}")
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree, with the convention degree(0) = -1."""
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> int:
        if not self.coeffs:
            return 0
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == IntPolynomial((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("IntPolynomial", self.coeffs))

    def __add__(self, other) -> "IntPolynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "IntPolynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        """Division with remainder inside Z[x].

        Each elimination step requires the divisor's leading coefficient to
        divide the current leading coefficient; raises ValueError otherwise.
        For the monic divisors used throughout this package the division is
        ordinary polynomial long division.
        """
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree
        lc = other.leading_coefficient
        if len(rem) - 1 < d:
            return IntPolynomial(), IntPolynomial(rem)
        quo = [0] * (len(rem) - d)
        for k in range(len(rem) - 1, d - 1, -1):
            if rem[k] == 0:
                continue
            q, r = divmod(rem[k], lc)
            if r != 0:
                raise ValueError(
                    f"leading coefficient {lc} does not divide {rem[k]} in Z[x]"
                )
            quo[k - d] = q
            for j, c in enumerate(other.coeffs):
                rem[j + k - d] -= q * c
        return IntPolynomial(quo), IntPolynomial(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "IntPolynomial":
        """Divide, insisting on zero remainder."""
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError(f"{other} does not divide {self} exactly")
        return q

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def content(self) -> int:
        """Gcd of the coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.coeffs:
            g = _int_gcd(g, abs(c))
        return g

    def primitive_part(self) -> "IntPolynomial":
        """self divided by its content, normalized to positive leading coefficient."""
        if self.is_zero():
            return self
        g = self.content()
        if self.leading_coefficient < 0:
            g = -g
        return IntPolynomial(tuple(c // g for c in self.coeffs))

    def gcd(self, other: "IntPolynomial") -> "IntPolynomial":
        """Primitive gcd in Z[x] with positive leading coefficient.

        Computed by the Euclidean algorithm over Q followed by clearing
        denominators; degrees in this package are small enough that
        coefficient growth is a non-issue.
        """
        a = [Fraction(c) for c in self.coeffs]
        b = [Fraction(c) for c in other.coeffs]
        while any(b):
            a, b = b, _frac_rem(a, b)
        if not any(a):
            return IntPolynomial()
        return _frac_to_primitive(a).primitive_part()

    def __call__(self, x):
        """Evaluate by Horner's rule; x may be an int, Fraction or polynomial."""
        result = x * 0
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def shift_down(self) -> "IntPolynomial":
        """self / x, requiring zero constant term."""
        if self.coeffs and self.coeffs[0] != 0:
            raise ValueError("nonzero constant term, not divisible by x")
        return IntPolynomial(self.coeffs[1:])

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                xs = "x" if i == 1 else f"x^{i}"
                body = xs if mag == 1 else f"{mag}{xs}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)!r})"


def _coerce(value):
    if isinstance(value, IntPolynomial):
        return value
    if isinstance(value, int):
        return IntPolynomial((value,))
    return NotImplemented


def _frac_rem(a, b):
    """Remainder of the Fraction coefficient lists a mod b (ascending, b nonzero)."""
    rem = list(a)
    while rem and rem[-1] == 0:
        rem.pop()
    db = len(b) - 1
    while b and b[-1] == 0:
        b = b[:-1]
        db -= 1
    lb = b[-1]
    while len(rem) - 1 >= db:
        q = rem[-1] / lb
        k = len(rem) - 1 - db
        for j, c in enumerate(b):
            rem[j + k] -= q * c
        rem.pop()
        while rem and rem[-1] == 0:
            rem.pop()
    return rem


def _frac_to_primitive(coeffs) -> IntPolynomial:
    """Scale a Fraction coefficient list by a positive rational to a primitive
    integer polynomial.  The scaling factor is positive, so every coefficient
    keeps its sign; this matters for Sturm chains, where a sign flip would
    corrupt the variation count."""
    denom = 1
    for c in coeffs:
        denom = denom * c.denominator // _int_gcd(denom, c.denominator)
    ints = IntPolynomial([int(c * denom) for c in coeffs])
    g = ints.content()
    return IntPolynomial(tuple(c // g for c in ints.coeffs))


# --- the Fibonacci-like family -------------------------------------------------


@functools.lru_cache(maxsize=None)
def fib_f(i: int) -> IntPolynomial:
    """The i-th polynomial of the alternating family.

    >>> [str(fib_f(i)) for i in range(6)]
    ['0', '1', 'x', 'x - 1', 'x^2 - 2x', 'x^2 - 3x + 1']
    """
    if i < 0:
        raise ValueError("index must be non-negative")
    prev, cur = IntPolynomial(), IntPolynomial.one()  # f_0, f_1
    if i == 0:
        return prev
    x = IntPolynomial.x()
    for k in range(2, i + 1):
        if k % 2 == 0:
            prev, cur = cur, x * cur - prev
        else:
            prev, cur = cur, cur - prev
    return cur


@functools.lru_cache(maxsize=None)
def fib_g(i: int) -> IntPolynomial:
    """The i-th Fibonacci polynomial: g_0 = 0, g_1 = 1, g_i = x*g_{i-1} + g_{i-2}.

    >>> str(fib_g(4))
    'x^3 + 2x'
    """
    if i < 0:
        raise ValueError("index must be non-negative")
    prev, cur = IntPolynomial(), IntPolynomial.one()
    if i == 0:
        return prev
    x = IntPolynomial.x()
    for _ in range(2, i + 1):
        prev, cur = cur, x * cur + prev
    return cur


def check_fg_relation(i: int) -> bool:
    """Exact check of the substitution identity linking f_i and g_i.

    For odd i:  (-1)^floor(i/2) * f_i(-x^2) == g_i(x).
    For even i: (-1)^(i/2)      * f_i(-x^2) == x * g_i(x).
    """
    if i < 0:
        raise ValueError("index must be non-negative")
    minus_x_sq = IntPolynomial((0, 0, -1))
    lhs = fib_f(i)(minus_x_sq)
    if (i // 2) % 2 == 1:
        lhs = -lhs
    if i % 2 == 1:
        return lhs == fib_g(i)
    return lhs == IntPolynomial.x() * fib_g(i)


def divisors(i: int) -> list[int]:
    """Positive divisors of i in increasing order."""
    if i <= 0:
        raise ValueError("positive integer required")
    small, large = [], []
    d = 1
    while d * d <= i:
        if i % d == 0:
            small.append(d)
            if d != i // d:
                large.append(i // d)
        d += 1
    return small + large[::-1]


@functools.lru_cache(maxsize=None)
def fib_irreducible_factor(i: int) -> IntPolynomial:
    """The factor fbar_i of f_i that is new at index i.

    Defined by f_i = prod over divisors d of i of fbar_d, computed by exact
    division of f_i by the product of the fbar_d for proper divisors d.  For
    i > 2 the result is irreducible over Q of degree phi(i)/2.  The degenerate
    rows fbar_0 = 0 and fbar_1 = 1 follow the reference table.

    >>> str(fib_irreducible_factor(12))
    'x^2 - 4x + 1'
    """
    if i < 0:
        raise ValueError("index must be non-negative")
    if i == 0:
        return IntPolynomial()
    if i == 1:
        return IntPolynomial.one()
    quotient = fib_f(i)
    for d in divisors(i)[:-1]:
        quotient = quotient.exact_div(fib_irreducible_factor(d))
    return quotient


def eval_at_matrix(p: IntPolynomial, m):
    """Evaluate p at a square IntMatrix by Horner's rule, exactly.

    The constant term contributes c * identity.  Works with any matrix type
    offering __matmul__, __add__, int __rmul__ and identity_like().
    """
    acc = 0 * m.identity_like()
    for c in reversed(p.coeffs):
        acc = acc @ m + c * m.identity_like()
    return acc


# --- exact real root location (Sturm) ------------------------------------------


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    """p / gcd(p, p'), primitive with positive leading coefficient."""
    if p.is_zero():
        raise ValueError("zero polynomial has no squarefree part")
    g = p.gcd(p.derivative())
    if g.degree <= 0:
        return p.primitive_part()
    return p.primitive_part().exact_div(g)


def sturm_chain(p: IntPolynomial) -> list[IntPolynomial]:
    """Sturm chain of the squarefree part of p, rescaled to primitive integer
    polynomials (positive rescaling only, so sign variations are preserved)."""
    p0 = squarefree_part(p)
    chain = [p0]
    if p0.degree >= 1:
        chain.append(p0.derivative().primitive_part())
        while chain[-1].degree >= 1:
            a = [Fraction(c) for c in chain[-2].coeffs]
            b = [Fraction(c) for c in chain[-1].coeffs]
            rem = _frac_rem(a, b)
            if not any(rem):
                break
            chain.append(-_frac_to_primitive(rem))
    return chain


def _variations(signs) -> int:
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _sign_at(p: IntPolynomial, x: Fraction) -> int:
    v = p(x)
    return (v > 0) - (v < 0)


def _sign_at_inf(p: IntPolynomial, positive: bool) -> int:
    lc = p.leading_coefficient
    s = (lc > 0) - (lc < 0)
    if not positive and p.degree % 2 == 1:
        s = -s
    return s


def count_roots_in(p: IntPolynomial, lo=None, hi=None) -> int:
    """Number of distinct real roots of p in the half-open interval (lo, hi].

    lo=None means -infinity, hi=None means +infinity.  Exact, via Sturm's
    theorem; endpoint roots are handled by the usual drop-zero-signs rule
    (a root at lo is excluded, a root at hi included).
    """
    chain = sturm_chain(p)
    if chain[0].degree <= 0:
        return 0
    if lo is None:
        v_lo = _variations([_sign_at_inf(q, positive=False) for q in chain])
    else:
        lo = Fraction(lo)
        v_lo = _variations([_sign_at(q, lo) for q in chain])
    if hi is None:
        v_hi = _variations([_sign_at_inf(q, positive=True) for q in chain])
    else:
        hi = Fraction(hi)
        v_hi = _variations([_sign_at(q, hi) for q in chain])
    return v_lo - v_hi


def count_real_roots(p: IntPolynomial) -> int:
    return count_roots_in(p, None, None)


def root_bound(p: IntPolynomial) -> Fraction:
    """A Cauchy bound: every real root lies in (-B, B]."""
    if p.is_zero() or p.degree <= 0:
        return Fraction(1)
    lc = abs(p.leading_coefficient)
    biggest = max(abs(c) for c in p.coeffs[:-1])
    return 1 + Fraction(biggest, lc)


def max_root_bracket(p: IntPolynomial, width: Fraction) -> tuple[Fraction, Fraction]:
    """An interval (a, b] of length <= width containing exactly the largest
    real root of p.  Requires p to have at least one real root."""
    if count_real_roots(p) == 0:
        raise ValueError("polynomial has no real root")
    b = root_bound(p)
    a = -b
    while b - a > width:
        mid = (a + b) / 2
        if count_roots_in(p, mid, b) >= 1:
            a = mid
        else:
            b = mid
    return a, b


def max_root_strictly_less(p: IntPolynomial, q: IntPolynomial) -> bool:
    """Exact comparison: is the largest real root of p strictly below q's?

    Refines Sturm bisection brackets for both maximal roots until the
    brackets separate.  Raises if the brackets cannot be separated (which
    would mean the maximal roots coincide).
    """
    width = Fraction(1)
    for _ in range(220):
        ap, bp = max_root_bracket(p, width)
        aq, bq = max_root_bracket(q, width)
        if bp <= aq:
            return True
        if bq <= ap:
            return False
        width /= 4
    raise ValueError("maximal roots are equal or indistinguishably close")

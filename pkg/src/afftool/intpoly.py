"""Exact integer polynomials: arithmetic, gcds, cyclotomic machinery.

Coefficients are arbitrary-precision Python ints, stored lowest degree
first. User-facing polynomials are capped at degree 64 (desk scale);
internal cyclotomic intermediates such as x^k - 1 may exceed the cap.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

MAX_DEGREE = 64


def _trim(coeffs):
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return c


class IntPoly:
    """Integer polynomial, coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, _unchecked: bool = False):
        c = _trim(int(x) for x in coeffs)
        if not _unchecked and len(c) - 1 > MAX_DEGREE:
            raise ValueError(f"degree {len(c) - 1} exceeds desk-scale cap {MAX_DEGREE}")
        self.coeffs = tuple(c)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "IntPoly":
        return cls(())

    @classmethod
    def one(cls) -> "IntPoly":
        return cls((1,))

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPoly":
        return cls([0] * k + [c], _unchecked=True)

    # -- basic queries -------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def leading(self) -> int:
        if not self.coeffs:
            return 0
        return self.coeffs[-1]

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self[k]
            if c == 0:
                continue
            if k == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                term = f"{mag}x" + (f"^{k}" if k > 1 else "")
            if not parts:
                parts.append(("-" if c < 0 else "") + term)
            else:
                parts.append(("- " if c < 0 else "+ ") + term)
        return " ".join(parts)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(
            [self[k] + other[k] for k in range(n)], _unchecked=True
        )

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(
            [self[k] - other[k] for k in range(n)], _unchecked=True
        )

    def __neg__(self) -> "IntPoly":
        return IntPoly([-c for c in self.coeffs], _unchecked=True)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        if self.is_zero() or other.is_zero():
            return IntPoly.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(out, _unchecked=True)

    def scale(self, c: int) -> "IntPoly":
        return IntPoly([c * a for a in self.coeffs], _unchecked=True)

    def __pow__(self, k: int) -> "IntPoly":
        if k < 0:
            raise ValueError("negative polynomial power")
        out = IntPoly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def divmod(self, divisor: "IntPoly"):
        """Polynomial division over Q; (quotient, remainder) exact in Fractions.

        Returns IntPoly pair when both come out integral, else raises.
        Use try_divide for the common exact-integer-division test.
        """
        q, r = self._divmod_fraction(divisor)
        return _frac_to_intpoly(q), _frac_to_intpoly(r)

    def _divmod_fraction(self, divisor: "IntPoly"):
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        den = divisor.coeffs
        dd = divisor.degree
        lead = Fraction(divisor.leading())
        quo = [Fraction(0)] * max(0, len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            f = c / lead
            quo[k - dd] = f
            for j in range(dd + 1):
                rem[k - dd + j] -= f * den[j]
        return quo, rem

    def try_divide(self, divisor: "IntPoly"):
        """Exact division: self = q * divisor with q integral, else None."""
        quo, rem = self._divmod_fraction(divisor)
        if any(r != 0 for r in rem):
            return None
        if any(q.denominator != 1 for q in quo):
            return None
        return IntPoly([int(q) for q in quo], _unchecked=True)

    def divides(self, other: "IntPoly") -> bool:
        return other.try_divide(self) is not None

    def multiplicity_in(self, other: "IntPoly") -> int:
        """Largest e with self^e dividing other."""
        if self.degree < 1:
            raise ValueError("multiplicity of a constant is undefined")
        e = 0
        cur = other
        while True:
            nxt = cur.try_divide(self)
            if nxt is None:
                return e
            cur = nxt
            e += 1

    def derivative(self) -> "IntPoly":
        return IntPoly(
            [k * c for k, c in enumerate(self.coeffs)][1:], _unchecked=True
        )

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, abs(c))
        return g

    def primitive(self) -> "IntPoly":
        g = self.content()
        if g in (0, 1):
            return self
        return IntPoly([c // g for c in self.coeffs], _unchecked=True)

    def eval_int(self, x: int) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def reciprocal(self) -> "IntPoly":
        """x^deg * p(1/x); coefficient reversal."""
        return IntPoly(tuple(reversed(self.coeffs)), _unchecked=True)


def _frac_to_intpoly(coeffs) -> IntPoly:
    out = []
    for c in coeffs:
        f = Fraction(c)
        if f.denominator != 1:
            raise ValueError("non-integral coefficient in exact division")
        out.append(int(f))
    return IntPoly(out, _unchecked=True)


def poly_gcd(p: IntPoly, q: IntPoly) -> IntPoly:
    """Monic-normalized gcd over Q, returned as a primitive integer polynomial
    with positive leading coefficient (monic whenever the gcd is monic-able)."""
    a = [Fraction(c) for c in p.coeffs]
    b = [Fraction(c) for c in q.coeffs]

    def trim(v):
        while v and v[-1] == 0:
            v.pop()
        return v

    a, b = trim(a), trim(b)
    while b:
        # a mod b over Q
        dd = len(b) - 1
        lead = b[-1]
        rem = a[:]
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            f = c / lead
            for j in range(dd + 1):
                rem[k - dd + j] -= f * b[j]
        a, b = b, trim(rem)
    if not a:
        return IntPoly.zero()
    # clear denominators, primitive part, positive leading coefficient
    den = 1
    for c in a:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in a]
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return IntPoly(ints, _unchecked=True)


def squarefree_decomposition(p: IntPoly):
    """Yun's algorithm: returns [(u_e, e)] with p = lc * prod u_e^e, u_e squarefree,
    pairwise coprime, each u_e primitive with positive leading coefficient."""
    if p.degree < 1:
        return []
    p = p.primitive()
    if p.leading() < 0:
        p = -p
    out = []
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        return [(p, 1)]
    w = p.try_divide(g)
    y = p.derivative().divmod(g)[0]
    e = 1
    while w.degree > 0:
        z = y - w.derivative()
        u = poly_gcd(w, z)
        if u.degree > 0:
            out.append((u, e))
        w2 = w.try_divide(u) if u.degree > 0 else w
        if u.degree == 0:
            w2 = w
            u = IntPoly.one()
        y = z.divmod(u)[0]
        w = w2
        e += 1
    return out


def euler_phi(k: int) -> int:
    """Euler totient by trial factorization (k small at desk scale)."""
    if k < 1:
        raise ValueError("totient needs a positive integer")
    out = k
    n = k
    d = 2
    while d * d <= n:
        if n % d == 0:
            out -= out // d
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out -= out // n
    return out


@lru_cache(maxsize=None)
def cyclotomic(k: int) -> IntPoly:
    """k-th cyclotomic polynomial via iterated exact division of x^k - 1."""
    if k < 1:
        raise ValueError("cyclotomic index must be >= 1")
    if euler_phi(k) > MAX_DEGREE:
        raise ValueError(f"cyclotomic index {k} beyond desk-scale degree cap")
    num = IntPoly.monomial(k) - IntPoly.one()
    for d in range(1, k):
        if k % d == 0:
            num = num.try_divide(cyclotomic(d))
            assert num is not None
    return IntPoly(num.coeffs)  # re-check the cap on the final value


def cyclotomic_indices_up_to_degree(n: int):
    """All k with phi(k) <= n. Uses phi(k) >= sqrt(k/2), so k <= 2 n^2."""
    if n < 1:
        return []
    return [k for k in range(1, 2 * n * n + 3) if euler_phi(k) <= n]


def cyclotomic_factorization(p: IntPoly):
    """[(k, multiplicity)] over all cyclotomic factors of p, multiplicity-exact."""
    if not p.is_monic():
        raise ValueError("cyclotomic factor extraction expects a monic polynomial")
    out = []
    rem = p
    for k in cyclotomic_indices_up_to_degree(p.degree):
        phi_k = cyclotomic(k)
        if phi_k.degree > rem.degree:
            continue
        mult = 0
        while True:
            nxt = rem.try_divide(phi_k)
            if nxt is None:
                break
            rem = nxt
            mult += 1
        if mult:
            out.append((k, mult))
    return out


def cyclotomic_part(p: IntPoly) -> IntPoly:
    """Product, with multiplicity, of all cyclotomic factors of p (monic p).

    Returns 1 when p has no root-of-unity root.
    """
    out = IntPoly.one()
    for k, mult in cyclotomic_factorization(p):
        out = out * cyclotomic(k) ** mult
    return out

"""Parameter tuples for the factorization identities.

A full tuple ties a product side to a minimal model: (p, p') label the model,
b and b' are the scaling factors, a (2 for the triple scheme, 3 for the
quintuple scheme) and a' the moduli, and c the common residue, subject to
a*b | p, a'*b' | p', gcd(p, p') = 1 and a' > c.  The derived quantities are
B = b*b' and n = pp' / (a*a'*b*b'), the number of characters in the sum.

A product quadruple (a', B, c, n) determines the product side alone; the
same quadruple generally admits several realizations as full tuples.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass


class ParameterError(ValueError):
    """Raised when a parameter tuple violates one of its constraints."""


class Scheme(enum.Enum):
    TRIPLE = "triple"
    QUINTUPLE = "quintuple"

    @property
    def modulus(self) -> int:
        """The fixed modulus a: 2 for triple products, 3 for quintuple."""
        return 2 if self is Scheme.TRIPLE else 3


def divisors(m: int) -> list[int]:
    out = []
    d = 1
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            if d != m // d:
                out.append(m // d)
        d += 1
    return sorted(out)


def prime_factors(m: int) -> list[int]:
    """Distinct prime divisors in increasing order."""
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        out.append(m)
    return out


def is_prime(m: int) -> bool:
    return m > 1 and prime_factors(m) == [m]


@dataclass(frozen=True)
class FactorizationParams:
    scheme: Scheme
    p: int
    p_prime: int
    a_prime: int
    b: int
    b_prime: int
    c: int

    def __post_init__(self) -> None:
        problems = []
        ints = {"p": self.p, "p'": self.p_prime, "a'": self.a_prime,
                "b": self.b, "b'": self.b_prime, "c": self.c}
        for name, v in ints.items():
            if not isinstance(v, int):
                problems.append(f"type: {name} must be an integer")
        if not problems:
            a = self.scheme.modulus
            if self.p < 2 or self.p_prime < 2:
                problems.append("range: p and p' must be greater than 1")
            if self.a_prime < 1 or self.b < 1 or self.b_prime < 1:
                problems.append("range: a', b, b' must be positive")
            if self.c < 0:
                problems.append("range: c must be nonnegative")
            if self.a_prime <= self.c:
                problems.append(f"range: a' must exceed c (a'={self.a_prime}, c={self.c})")
            if self.p >= 2 and self.p_prime >= 2 and math.gcd(self.p, self.p_prime) != 1:
                problems.append(f"coprimality: gcd(p, p') must be 1, got gcd({self.p}, {self.p_prime})")
            if self.b >= 1 and self.p % (a * self.b) != 0:
                problems.append(f"divisibility: a*b = {a * self.b} must divide p = {self.p}")
            if self.b_prime >= 1 and self.a_prime >= 1 and self.p_prime % (self.a_prime * self.b_prime) != 0:
                problems.append(
                    f"divisibility: a'*b' = {self.a_prime * self.b_prime} must divide p' = {self.p_prime}"
                )
            if self.scheme is Scheme.TRIPLE and self.c % 2 == 0:
                problems.append(f"parity: c must be odd in the triple scheme, got c={self.c}")
        if problems:
            raise ParameterError("; ".join(problems))

    @property
    def a(self) -> int:
        return self.scheme.modulus

    @property
    def B(self) -> int:
        return self.b * self.b_prime

    @property
    def n(self) -> int:
        return (self.p * self.p_prime) // (self.a * self.a_prime * self.b * self.b_prime)

    @property
    def p_over_b(self) -> int:
        return self.p // self.b

    @property
    def pp_over_bp(self) -> int:
        return self.p_prime // self.b_prime


def validate(scheme: Scheme, p: int, p_prime: int, a_prime: int,
             b: int, b_prime: int, c: int) -> FactorizationParams:
    """Check every constraint and return the tuple with B and n derived."""
    return FactorizationParams(scheme, p, p_prime, a_prime, b, b_prime, c)


@dataclass(frozen=True)
class ProductParams:
    """The quadruple (a', B, c, n) that fixes a product side on its own."""

    scheme: Scheme
    a_prime: int
    B: int
    c: int
    n: int

    def __post_init__(self) -> None:
        problems = []
        if self.a_prime < 1 or self.B < 1 or self.n < 1:
            problems.append("range: a', B, n must be positive")
        if self.c < 0:
            problems.append("range: c must be nonnegative")
        if self.a_prime <= self.c:
            problems.append(f"range: a' must exceed c (a'={self.a_prime}, c={self.c})")
        if self.scheme is Scheme.TRIPLE and (self.a_prime % 2 == 0 or self.c % 2 == 0):
            problems.append(f"parity: a' and c must both be odd in the triple scheme "
                            f"(a'={self.a_prime}, c={self.c})")
        if problems:
            raise ParameterError("; ".join(problems))

    @property
    def is_canonical(self) -> bool:
        """gcd(a', c) = 1 (when c > 0) and gcd(B, n) = 1."""
        if self.c > 0 and math.gcd(self.a_prime, self.c) != 1:
            return False
        return math.gcd(self.B, self.n) == 1


def product_params_of(fp: FactorizationParams) -> ProductParams:
    """Project a full tuple onto its product quadruple (no reduction applied)."""
    return ProductParams(fp.scheme, fp.a_prime, fp.B, fp.c, fp.n)


def canonicalize(pp: ProductParams) -> tuple[ProductParams, int]:
    """Reduce gcd(a', c) into B and gcd(B, n) into the variable.

    Returns the reduced quadruple and the power k such that the original
    series equals the reduced series evaluated at q**k.  The (a', c)
    reduction needs c > 0 and is skipped for c = 0.
    """
    ap, B, c, n = pp.a_prime, pp.B, pp.c, pp.n
    if c > 0:
        g = math.gcd(ap, c)
        ap //= g
        c //= g
        B *= g
    k = math.gcd(B, n)
    return ProductParams(pp.scheme, ap, B // k, c, n // k), k


def find_realizations(pp: ProductParams, limit: int | None = None) -> list[FactorizationParams]:
    """All full tuples realizing the quadruple, ordered by (p, b).

    Enumerates the divisor factorizations of a*a'*B*n; an empty list is a
    legitimate outcome, not an error.
    """
    a = pp.scheme.modulus
    total = a * pp.a_prime * pp.B * pp.n
    out: list[FactorizationParams] = []
    for p in divisors(total):
        p_prime = total // p
        if p < 2 or p_prime < 2 or math.gcd(p, p_prime) != 1:
            continue
        for b in divisors(pp.B):
            b_prime = pp.B // b
            try:
                fp = FactorizationParams(pp.scheme, p, p_prime, pp.a_prime, b, b_prime, pp.c)
            except ParameterError:
                continue
            out.append(fp)
            if limit is not None and len(out) >= limit:
                return out
    return out

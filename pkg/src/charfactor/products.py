"""Product-side series shared by the identity verifier and the sign scanner.

Both sides take a product quadruple (a', B, c, n); the optional sign vector
flips individual product arguments, which is how the signed variants differ
from the plain identities.
"""

from __future__ import annotations

from .series import ShiftedSeries, SignedMonomial, inverse_euler_power, pochhammer

#: one sign per product argument, then the base(s); all +1 is the plain identity
TRIPLE_PLAIN = (1, 1, 1, 1)
QUINTUPLE_PLAIN = (1, 1, 1, 1, 1, 1)


def triple_side(ap: int, B: int, c: int, n: int, order: int,
                signs: tuple[int, int, int, int] = TRIPLE_PLAIN) -> ShiftedSeries:
    """(s1 q^{B(a'-c)/2}, s2 q^{B(a'+c)/2}, s3 q^{Ba'}; sb q^{Ba'}) / (q^n; q^n)."""
    s1, s2, s3, sb = signs
    if (ap - c) % 2 != 0:
        raise ValueError(f"a' and c must have equal parity for a triple product (a'={ap}, c={c})")
    factors = (
        SignedMonomial(s1, B * (ap - c) // 2),
        SignedMonomial(s2, B * (ap + c) // 2),
        SignedMonomial(s3, B * ap),
    )
    num = pochhammer(factors, SignedMonomial(sb, B * ap), order)
    return num * inverse_euler_power(n, order)


def quintuple_side(ap: int, B: int, c: int, n: int, order: int,
                   signs: tuple[int, int, int, int, int, int] = QUINTUPLE_PLAIN) -> ShiftedSeries:
    """(s1 q^{Bc}, s2 q^{B(2a'-c)}, s3 q^{2Ba'}; sb q^{2Ba'})
    (t1 q^{2B(a'+c)}, t2 q^{2B(a'-c)}; q^{4Ba'}) / (q^n; q^n)."""
    s1, s2, s3, sb, t1, t2 = signs
    first = pochhammer(
        (
            SignedMonomial(s1, B * c),
            SignedMonomial(s2, B * (2 * ap - c)),
            SignedMonomial(s3, 2 * B * ap),
        ),
        SignedMonomial(sb, 2 * B * ap),
        order,
    )
    second = pochhammer(
        (
            SignedMonomial(t1, 2 * B * (ap + c)),
            SignedMonomial(t2, 2 * B * (ap - c)),
        ),
        SignedMonomial(1, 4 * B * ap),
        order,
    )
    return first * second * inverse_euler_power(n, order)

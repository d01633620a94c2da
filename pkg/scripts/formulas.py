"""
Closed-form evaluators for the clique-count formulas of the kP3 problem.

Everything is exact integer or Fraction arithmetic. The union/join lower
bound and the peeling upper bound take an ExOracle, so they can run on
the P3 closed form or on an enumeration-backed oracle for other patterns.
"""

import math
from fractions import Fraction
from typing import Callable, Literal, Tuple

from scripts.errors import ArgumentError

# ex(n, K_i, H) for a fixed pattern H.
ExOracle = Callable[[int, int], int]

BinomialConvention = Literal["standard", "zero-base-one"]
CONVENTIONS = ("standard", "zero-base-one")

Regime = Literal["trivial", "small-k", "large-s", "large-n", "s-equals-k-plus-one", "open"]


def binom(a: int, b: int, convention: BinomialConvention = "standard") -> int:
    """C(a, b), zero when b < 0 or b > a.

    ``zero-base-one`` additionally sets C(0, b) = 1 for b > 0. It exists to
    show how the bound sums move under that reading and is never the default.
    """
    if convention not in CONVENTIONS:
        raise ArgumentError(f"unknown binomial convention {convention!r}")
    if convention == "zero-base-one" and a == 0 and b > 0:
        return 1
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


def f_formula(n: int, k: int, s: int) -> int:
    """s-cliques of K_{k-1} + M_{n-k+1}."""
    if k < 1 or n < k:
        raise ArgumentError(f"f(n, k, s) needs n >= k >= 1, got n={n}, k={k}")
    if s < 0:
        raise ArgumentError(f"clique size must be nonnegative, got {s}")
    rest = n - k + 1
    return binom(k - 1, s) + rest * binom(k - 1, s - 1) + (rest // 2) * binom(k - 1, s - 2)


def conjecture_value(n: int, k: int, s: int) -> int:
    """max{C(3k-1, s), f(n, k, s)}, the conjectured ex(n, K_s, kP3)."""
    if k < 1 or s < 3 or n < 3 * k:
        raise ArgumentError(f"conjectured value needs n >= 3k, s >= 3, k >= 1; got n={n}, k={k}, s={s}")
    return max(binom(3 * k - 1, s), f_formula(n, k, s))


def g_threshold(k: int, s: int) -> int:
    """Smallest n from which the large-n argument applies for 3 <= s <= k.

    The leading quotient is kept as a Fraction; a non-integral final value is
    rounded up.
    """
    if not 3 <= s <= k:
        raise ArgumentError(f"g(k, s) needs k >= s >= 3, got k={k}, s={s}")
    denominator = binom(k - 2, s - 2)
    if denominator == 0:
        raise ArgumentError(f"C({k - 2}, {s - 2}) vanishes")
    top = max(binom(3 * k - 3, x) for x in (s, s - 1, s - 2))
    value = Fraction(top, denominator) * (9 * k - 8) + k + 1
    return math.ceil(value)


def luo_f(n: int, k: int, a: int, s: int) -> int:
    """C(k-a, s) + (n-k+a) C(a, s-1)."""
    if not n >= k >= a >= 1:
        raise ArgumentError(f"luo_f needs n >= k >= a >= 1, got n={n}, k={k}, a={a}")
    return binom(k - a, s) + (n - k + a) * binom(a, s - 1)


def luo_bound(n: int, k: int, s: int) -> int:
    """Upper bound on s-cliques of a connected n-vertex graph without a path on k vertices."""
    if not n >= k >= 4:
        raise ArgumentError(f"luo_bound needs n >= k >= 4, got n={n}, k={k}")
    t = (k - 2) // 2
    return max(luo_f(n, k - 1, 1, s), luo_f(n, k - 1, t, s))


def s_equals_k_plus_one_threshold(k: int) -> int:
    """n from which the s = k + 1 case is settled."""
    if k < 1:
        raise ArgumentError(f"k must be positive, got {k}")
    return 6 * binom(3 * k - 1, k) + k - 3


def proven_regime(n: int, k: int, s: int) -> Regime:
    """Which proven case, if any, covers the conjectured value at (n, k, s)."""
    if k < 1 or s < 3 or n < 3 * k:
        raise ArgumentError(f"regimes are defined for n >= 3k, s >= 3, k >= 1; got n={n}, k={k}, s={s}")
    if s >= 3 * k:
        return "trivial"
    if k in (2, 3):
        return "small-k"
    if s >= k + 2:
        return "large-s"
    if s <= k and n >= max(g_threshold(k, s), 3 * k - 1):
        return "large-n"
    if s == k + 1 and n >= s_equals_k_plus_one_threshold(k):
        return "s-equals-k-plus-one"
    return "open"


def two_p3_triangle_law(n: int) -> int:
    """ex(n, K_3, 2P3): 10 up to n = 22, then the fan value."""
    if n < 6:
        raise ArgumentError(f"the 2P3 triangle law starts at n = 6, got {n}")
    return 10 if n <= 22 else (n - 1) // 2


def ex_p3_closed(n: int, i: int) -> int:
    """ex(n, K_i, P3): P3-free means maximum degree at most 1."""
    if n < 0 or i < 0:
        raise ArgumentError(f"ex(n, K_i, P3) needs n, i >= 0, got n={n}, i={i}")
    if i == 0:
        return 1
    if i == 1:
        return n
    if i == 2:
        return n // 2
    return 0


def thm11_lower(
    n: int,
    k: int,
    s: int,
    m: int,
    oracle: ExOracle,
    convention: BinomialConvention = "standard",
) -> Tuple[int, int, int]:
    """Union/join lower bound on ex(n, K_s, kH) for a connected H on m vertices.

    Returns (best, union_branch, join_branch) where the union branch counts
    K_{km-1} plus an extremal H-free graph and the join branch counts
    K_{k-1} joined with one.
    """
    if k < 1 or m < 1:
        raise ArgumentError(f"k and m must be positive, got k={k}, m={m}")
    if n < k * m:
        raise ArgumentError(f"lower bound needs n >= km, got n={n}, k={k}, m={m}")
    if s < 0:
        raise ArgumentError(f"clique size must be nonnegative, got {s}")
    union = oracle(n - k * m + 1, s) + binom(k * m - 1, s, convention)
    join = sum(oracle(n - k + 1, i) * binom(k - 1, s - i, convention) for i in range(s + 1))
    return max(union, join), union, join


def thm12_upper(
    n: int,
    k: int,
    s: int,
    m: int,
    oracle: ExOracle,
    convention: BinomialConvention = "standard",
) -> int:
    """Upper bound on ex(n, K_s, kH) by peeling k - 1 copies of H."""
    if k < 1 or m < 3 or s < 1:
        raise ArgumentError(f"upper bound needs k >= 1, m >= 3, s >= 1; got k={k}, m={m}, s={s}")
    if n < k * m:
        raise ArgumentError(f"upper bound needs n >= km, got n={n}, k={k}, m={m}")
    peeled = (k - 1) * m
    return sum(oracle(n - peeled, i) * binom(peeled, s - i, convention) for i in range(s + 1))

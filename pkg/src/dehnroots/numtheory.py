"""Exact integer arithmetic: gcd/Bezout, factorization, divisors, CRT.

Everything here is deterministic and pure. Factorization is plain trial
division, good for the documented input ceiling of 10**12; there is no
probabilistic primality testing.

The one nontrivial routine is ``bezout_avoiding_primes``: given coprime
d1, d2 and a finite set Q of primes, it produces c1, c2 with
c1*d1 + c2*d2 = 1 such that no prime of Q divides c1 or c2.  (By
convention 0 is divisible by every prime, so c1 = 0 never qualifies
when Q is nonempty.)
"""

from dataclasses import dataclass
from math import gcd, isqrt

__all__ = [
    "FACTOR_LIMIT",
    "Factorization",
    "BezoutWitness",
    "NotAUnit",
    "ModuliNotCoprime",
    "PreconditionViolated",
    "gcd",
    "ext_gcd",
    "mod_inverse",
    "is_prime",
    "factorize",
    "divisors",
    "coprime_divisor_pairs",
    "crt",
    "bezout_avoiding_primes",
    "primes_up_to",
]

# Documented ceiling for trial-division factoring: sqrt(10**12) = 10**6
# candidate divisors is still sub-second.
FACTOR_LIMIT = 10**12


class NotAUnit(ValueError):
    """Raised when asked to invert a residue that shares a factor with the modulus."""


class ModuliNotCoprime(ValueError):
    """Raised by ``crt`` when the moduli are not pairwise coprime."""


class PreconditionViolated(ValueError):
    """Raised by ``bezout_avoiding_primes`` on inputs outside the lemma's hypotheses."""


def ext_gcd(a, b):
    """Extended Euclid: return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0.

    ext_gcd(0, 0) returns (0, 1, 0).
    """
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def mod_inverse(a, n):
    """Inverse of a mod n, as a residue in [1, n-1].  Requires n >= 2."""
    if n < 2:
        raise ValueError("modulus must be >= 2, got %r" % (n,))
    g, s, _ = ext_gcd(a, n)
    if g != 1:
        raise NotAUnit("%d is not a unit mod %d (gcd = %d)" % (a, n, g))
    return s % n


def is_prime(n):
    """Deterministic primality by trial division (2, 3, then 6k+-1)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    d = 5
    while d * d <= n:
        if n % d == 0 or n % (d + 2) == 0:
            return False
        d += 6
    return True


@dataclass(frozen=True)
class Factorization:
    """A positive integer together with its prime factorization.

    ``factors`` is a tuple of (prime, exponent) pairs with strictly
    increasing primes; the empty tuple represents 1.
    """

    value: int
    factors: tuple

    def __post_init__(self):
        if self.value < 1:
            raise ValueError("value must be positive, got %r" % (self.value,))
        prod = 1
        prev = 1
        for p, e in self.factors:
            if p <= prev:
                raise ValueError("primes must be strictly increasing")
            if e < 1:
                raise ValueError("exponents must be positive")
            prev = p
            prod *= p**e
        if prod != self.value:
            raise ValueError(
                "factors %r reassemble to %d, not %d" % (self.factors, prod, self.value)
            )


def factorize(n):
    """Factor n >= 1 by trial division.  n must not exceed FACTOR_LIMIT."""
    if n < 1:
        raise ValueError("cannot factor %r" % (n,))
    if n > FACTOR_LIMIT:
        raise ValueError("%d exceeds the supported factoring range %d" % (n, FACTOR_LIMIT))
    factors = []
    m = n
    for p in (2, 3):
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
    d = 5
    while d * d <= m:
        for p in (d, d + 2):
            if m % p == 0:
                e = 0
                while m % p == 0:
                    m //= p
                    e += 1
                factors.append((p, e))
        d += 6
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


def divisors(n):
    """All positive divisors of n, strictly increasing."""
    divs = [1]
    for p, e in factorize(n).factors:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def coprime_divisor_pairs(n):
    """Unordered pairs (d1, d2), d1 <= d2, of coprime divisors of n.

    Since d1 and d2 are coprime divisors, d1*d2 divides n automatically.
    The list includes (1, 1) and all (1, d) pairs, sorted lexicographically.
    """
    fac = factorize(n).factors
    pairs = set()

    def split(i, d1, d2):
        if i == len(fac):
            pairs.add((d1, d2) if d1 <= d2 else (d2, d1))
            return
        p, e = fac[i]
        split(i + 1, d1, d2)
        q = 1
        for _ in range(e):
            q *= p
            split(i + 1, d1 * q, d2)
            split(i + 1, d1, d2 * q)

    split(0, 1, 1)
    return sorted(pairs)


def crt(pairs):
    """Solve x = r_i (mod m_i) for pairwise coprime moduli m_i >= 1.

    Returns the unique solution in [0, prod(m_i) - 1]; an empty input
    yields 0.  Raises ModuliNotCoprime when the moduli share a factor.
    """
    x, modulus = 0, 1
    for r, m in pairs:
        if m < 1:
            raise ValueError("moduli must be >= 1, got %r" % (m,))
        if gcd(modulus, m) != 1:
            raise ModuliNotCoprime("modulus %d is not coprime to the others" % (m,))
        if m == 1:
            continue
        # Lift x from (mod modulus) to (mod modulus*m).
        k = ((r - x) * mod_inverse(modulus % m, m)) % m
        x += modulus * k
        modulus *= m
    return x


@dataclass(frozen=True)
class BezoutWitness:
    """Coefficients c1, c2 with c1*d1 + c2*d2 = 1."""

    c1: int
    c2: int
    d1: int
    d2: int

    def __post_init__(self):
        if self.c1 * self.d1 + self.c2 * self.d2 != 1:
            raise ValueError("not a Bezout identity: %r" % (self,))


def bezout_avoiding_primes(d1, d2, avoid):
    """Bezout coefficients for coprime d1, d2 avoiding a set of primes.

    Returns a BezoutWitness (c1, c2, d1, d2) with c1*d1 + c2*d2 = 1 and
    no prime q in ``avoid`` dividing c1 or c2.  Requires gcd(d1, d2) = 1,
    and if 2 is in ``avoid``, that d1 and d2 are not both odd (otherwise
    c1 + c2 would always be even, forcing one of them even).

    Construction: from a base identity A*d1 + B*d2 = 1, the full family of
    solutions is c1 = A - k*d2, c2 = B + k*d1.  For each prime q, c1(k) or
    c2(k) vanishes mod q for at most one residue of k each (and not at all
    when q divides the corresponding step d2 or d1), so some residue m_q
    avoids both; a k meeting every m_q exists by the Chinese Remainder
    Theorem.  We take the smallest valid residue for each q and the
    smallest nonnegative k, which makes the output deterministic.
    """
    if d1 < 1 or d2 < 1:
        raise PreconditionViolated("d1 and d2 must be positive")
    if gcd(d1, d2) != 1:
        raise PreconditionViolated("gcd(%d, %d) != 1" % (d1, d2))
    for q in avoid:
        if not is_prime(q):
            raise PreconditionViolated("%r is not prime" % (q,))
    if 2 in avoid and d1 % 2 == 1 and d2 % 2 == 1:
        raise PreconditionViolated("with 2 in the avoided set, d1 and d2 cannot both be odd")

    _, base1, base2 = ext_gcd(d1, d2)
    congruences = []
    for q in sorted(avoid):
        forbidden = set()
        if d2 % q:
            forbidden.add(base1 * mod_inverse(d2, q) % q)  # c1(k) = 0 mod q
        if d1 % q:
            forbidden.add(-base2 * mod_inverse(d1, q) % q)  # c2(k) = 0 mod q
        residue = next(r for r in range(q) if r not in forbidden)
        congruences.append((residue, q))
    k = crt(congruences)
    return BezoutWitness(base1 - k * d2, base2 + k * d1, d1, d2)


def primes_up_to(limit):
    """Primes <= limit by a sieve of Eratosthenes."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
    return [i for i, flag in enumerate(sieve) if flag]

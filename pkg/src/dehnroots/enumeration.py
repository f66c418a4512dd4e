"""Exhaustive enumeration of root classes for a given genus and degree.

``datasets(g, n)`` lists every canonical data set of genus g and degree n,
i.e. every conjugacy class of degree-n roots of the twist on the genus
g+1 surface.  The search runs over

  * the quotient genus g0 with g0*n <= g,
  * multisets of cone orders (divisors of n exceeding 1) whose weights
    (n/n_i)(n_i - 1)/2 sum to g - g0*n,
  * pairs of units (a, b) with a + b = a*b mod n, found by scanning the
    x with x and 1 - x both units and inverting,
  * cone residues, generated nondecreasing within runs of equal order so
    each class appears exactly once.

Residue assignment is pruned on suffix gcds: positions i.. contribute a
multiple of gcd(n, n/n_i, ...), so a partial sum not divisible by that
gcd can never reach 0 mod n.

``oracle_datasets`` answers the same question by brute force over raw
residue tuples; it is deliberately naive, range-guarded, and kept as an
independent cross-check of the search above.
"""

import os
from itertools import product

from .dataset import DataSet, validate
from .numtheory import divisors, gcd, mod_inverse

__all__ = [
    "DEFAULT_CLASS_CAP",
    "ClassCapExceeded",
    "OracleRangeExceeded",
    "cone_weight",
    "cone_multisets",
    "twist_pairs",
    "datasets",
    "oracle_datasets",
    "root_degrees",
    "has_root",
    "genus_set",
    "primary_datasets",
]

DEFAULT_CLASS_CAP = 10**7
CAP_ENV_VAR = "DEHN_ROOTS_CLASS_CAP"

# Hard bounds for the brute-force oracle; beyond them it is exponential noise.
ORACLE_MAX_DEGREE = 15
ORACLE_MAX_GENUS = 12


class ClassCapExceeded(RuntimeError):
    """The enumeration produced more classes than the configured cap."""


class OracleRangeExceeded(ValueError):
    """The brute-force oracle was asked for more than its guarded range."""


def class_cap_from_env():
    """The class cap configured via DEHN_ROOTS_CLASS_CAP, or the default."""
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None:
        return DEFAULT_CLASS_CAP
    cap = int(raw)
    if cap < 1:
        raise ValueError("%s must be a positive integer" % CAP_ENV_VAR)
    return cap


def cone_weight(n, order):
    """Genus contribution (n/order)(order - 1)/2 of one cone of the given order."""
    twice = (n // order) * (order - 1)
    if twice % 2:
        raise ValueError("order %d has non-integral weight in degree %d" % (order, n))
    return twice // 2


def _order_multisets(n, twice_target):
    """Multisets of divisors > 1 of n whose doubled weights sum to twice_target.

    Doubled weights keep everything integral for even n (the fractional
    candidates need that); each multiset comes out sorted ascending and
    the list is in lexicographic order.
    """
    divs = [d for d in divisors(n) if d > 1]
    weights = [(n // d) * (d - 1) for d in divs]
    out = []
    acc = []

    def extend(i, remaining):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for j in range(i, len(divs)):
            if weights[j] <= remaining:
                acc.append(divs[j])
                extend(j, remaining - weights[j])
                acc.pop()

    extend(0, twice_target)
    return out


def cone_multisets(n, target):
    """All multisets of cone orders for degree n with weights summing to target.

    target = 0 yields the single empty multiset.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError("degree must be odd and >= 3, got %r" % (n,))
    if target < 0:
        return []
    return _order_multisets(n, 2 * target)


def twist_pairs(n):
    """Unordered unit pairs (a, b), a <= b, with a + b = a*b mod n.

    Scans the x for which x and 1 - x are both units and takes
    a = x^-1, b = (1-x)^-1; distinct x off the x <-> 1-x symmetry give
    distinct pairs.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError("degree must be odd and >= 3, got %r" % (n,))
    pairs = set()
    for x in range(2, n):
        if gcd(x, n) == 1 and gcd(x - 1, n) == 1:
            a = mod_inverse(x, n)
            b = mod_inverse((1 - x) % n, n)
            pairs.add((a, b) if a <= b else (b, a))
    return sorted(pairs)


def _cone_assignments(n, orders, target, unit_cache=None):
    """Yield residue tuples (c_1..c_m) for the given sorted cone orders with
    sum (n/n_i)*c_i = target mod n, nondecreasing within equal-order runs."""
    m = len(orders)
    if unit_cache is None:
        unit_cache = {}
    for order in set(orders):
        if order not in unit_cache:
            unit_cache[order] = [c for c in range(1, order) if gcd(c, order) == 1]
    steps = [n // order for order in orders]
    suffix = [0] * (m + 1)
    suffix[m] = n
    for i in range(m - 1, -1, -1):
        suffix[i] = gcd(suffix[i + 1], steps[i])
    acc = [0] * m

    def place(i, need, start):
        if need % suffix[i]:
            return
        if i == m:
            yield tuple(acc)
            return
        units = unit_cache[orders[i]]
        first = start if i and orders[i - 1] == orders[i] else 0
        step = steps[i]
        for j in range(first, len(units)):
            acc[i] = units[j]
            yield from place(i + 1, (need - step * units[j]) % n, j)

    yield from place(0, target % n, 0)


def _iter_datasets(g, n):
    """Yield every canonical data set of genus g and degree n, no duplicates."""
    if g < 1 or n < 3 or n % 2 == 0:
        return
    pairs = twist_pairs(n)
    unit_cache = {}
    for g0 in range(g // n + 1):
        remaining = g - g0 * n
        for orders in cone_multisets(n, remaining):
            if not orders:
                continue  # (III) and (IV) force at least one cone
            for a, b in pairs:
                target = (-(a + b)) % n
                for residues in _cone_assignments(n, orders, target, unit_cache):
                    yield DataSet(n, g0, a, b, tuple(zip(residues, orders)))


def datasets(g, n, class_cap=None):
    """All root classes of genus g and degree n, canonical and sorted.

    Nonpositive genus and even or tiny degree give an empty list (those
    cases are theorems, not errors).  Raises ClassCapExceeded, returning
    nothing, once more than ``class_cap`` classes appear (default 10**7).
    """
    cap = DEFAULT_CLASS_CAP if class_cap is None else class_cap
    found = []
    for ds in _iter_datasets(g, n):
        found.append(ds)
        if len(found) > cap:
            raise ClassCapExceeded(
                "more than %d classes of genus %d, degree %d" % (cap, g, n)
            )
    found.sort()
    return found


def oracle_datasets(g, n):
    """Brute-force cross-check of ``datasets``: try every raw residue tuple.

    Enumerates every quotient genus, every ordered tuple of cone orders
    matching the genus, and every tuple of raw residues; keeps what
    ``validate`` accepts, canonicalizes, deduplicates.  Guarded to
    n <= 15, g <= 12.
    """
    if n > ORACLE_MAX_DEGREE or g > ORACLE_MAX_GENUS:
        raise OracleRangeExceeded(
            "oracle accepts n <= %d and g <= %d" % (ORACLE_MAX_DEGREE, ORACLE_MAX_GENUS)
        )
    if g < 1 or n < 3 or n % 2 == 0:
        return []
    divs = [d for d in divisors(n) if d > 1]
    out = set()
    for g0 in range(g // n + 1):
        remaining2 = 2 * (g - g0 * n)
        shapes = [()] if remaining2 == 0 else []
        frontier = [()]
        while frontier:
            shape = frontier.pop()
            for d in divs:
                extended = shape + (d,)
                weight2 = sum((n // x) * (x - 1) for x in extended)
                if weight2 == remaining2:
                    shapes.append(extended)
                elif weight2 < remaining2:
                    frontier.append(extended)
        units = [u for u in range(n) if gcd(u, n) == 1]
        for shape in shapes:
            for a in units:
                for b in units:
                    for residues in product(*(range(d) for d in shape)):
                        # quick unit screen before paying for construction;
                        # validate() re-checks everything on survivors
                        if any(gcd(c, d) != 1 for c, d in zip(residues, shape)):
                            continue
                        candidate = DataSet(n, g0, a, b, tuple(zip(residues, shape)))
                        if validate(candidate).valid and candidate.genus == g:
                            out.add(candidate)
    return sorted(out)


def has_root(g, n):
    """True when the genus-(g+1) twist has a degree-n root (first witness wins)."""
    for _ in _iter_datasets(g, n):
        return True
    return False


def root_degrees(g):
    """All degrees of roots of the twist on the genus-(g+1) surface.

    Only odd n in [3, 2g+1] can occur, so only those are scanned.
    """
    if g < 1:
        return []
    return [n for n in range(3, 2 * g + 2, 2) if has_root(g, n)]


def genus_set(n, g_max):
    """All g <= g_max for which the genus-(g+1) twist has a degree-n root."""
    return [g for g in range(g_max + 1) if has_root(g, n)]


def primary_datasets(g, n, class_cap=None):
    """The classes of genus g, degree n in which every cone has order n."""
    return [
        ds
        for ds in datasets(g, n, class_cap)
        if all(order == n for _, order in ds.cones)
    ]

"""Two-prime Whiteman generalized cyclotomy of order six.

For distinct primes ``n1, n2`` with ``gcd(n1 - 1, n2 - 1) = 6`` the units of
``Z_n`` (``n = n1 * n2``) split into six classes ``W_i = {g^s u^i}`` where
``g`` is a common primitive root and ``u = g (mod n1), u = 1 (mod n2)``.
The remaining residues are ``0``, the nonzero multiples ``P`` of ``n1`` and
the nonzero multiples ``Q`` of ``n2``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd, isqrt

import numpy as np
from sympy import isprime

from .gf import ord_mod

ORDER = 6

# label codes in ClassMap.labels: 0..5 are W_0..W_5
P_LABEL = 6
Q_LABEL = 7
ZERO_LABEL = 8
LABEL_NAMES = ("W0", "W1", "W2", "W3", "W4", "W5", "P", "Q", "ZERO")


class CyclotomyError(ValueError):
    """Parameters violate a precondition of the order-six cyclotomy."""


class ClosedFormMismatch(ArithmeticError):
    """No sign assignment reproduces the brute-force cyclotomic numbers."""


def _check_primes(n1, n2):
    for name, v in (("n1", n1), ("n2", n2)):
        if not isinstance(v, (int, np.integer)) or not isprime(int(v)):
            raise CyclotomyError(f"{name}={v} must be prime")
        if v % 2 == 0:
            raise CyclotomyError(f"{name}={v} must be odd")
    if n1 == n2:
        raise CyclotomyError(f"n1 and n2 must be distinct, got {n1} twice")


def validate_params(n1, n2):
    """Raise :class:`CyclotomyError` naming the first violated invariant."""
    _check_primes(n1, n2)
    d = gcd(n1 - 1, n2 - 1)
    if d != ORDER:
        raise CyclotomyError(f"gcd(n1-1, n2-1) = gcd({n1 - 1}, {n2 - 1}) = {d} != 6")


def is_primitive_root(g, p):
    return g % p != 0 and ord_mod(g % p, p) == p - 1


def find_common_primitive_root(n1, n2):
    """Smallest positive integer that is a primitive root modulo both primes."""
    _check_primes(n1, n2)
    g = 2
    while not (is_primitive_root(g, n1) and is_primitive_root(g, n2)):
        g += 1
    return g


def compute_u(n1, n2, g):
    """The unique ``u`` in ``[1, n)`` with ``u = g (mod n1)`` and ``u = 1 (mod n2)``."""
    n = n1 * n2
    # CRT: u = 1 + n2 * t with n2 * t = g - 1 (mod n1)
    t = (g - 1) * pow(n2, -1, n1) % n1
    u = (1 + n2 * t) % n
    return u


@dataclass(frozen=True, eq=False)
class ClassMap:
    labels: np.ndarray

    def label(self, t):
        return LABEL_NAMES[int(self.labels[t % len(self.labels)])]

    def code(self, t):
        return int(self.labels[t % len(self.labels)])

    def members(self, code):
        return np.flatnonzero(self.labels == code)

    def sizes(self):
        counts = np.bincount(self.labels, minlength=len(LABEL_NAMES))
        return {name: int(c) for name, c in zip(LABEL_NAMES, counts)}


@dataclass(frozen=True, eq=False)
class WhitemanCyclotomy:
    n1: int
    n2: int
    g: int
    u: int
    classes: ClassMap = field(repr=False)

    @property
    def n(self):
        return self.n1 * self.n2

    @property
    def d(self):
        return ORDER

    @property
    def e(self):
        return (self.n1 - 1) * (self.n2 - 1) // ORDER

    @property
    def eta(self):
        return (self.n1 - 1) * (self.n2 - 1) // 36

    @property
    def big_m(self):
        return ((self.n1 - 2) * (self.n2 - 2) - 1) // 6

    def W(self, i):
        return self.classes.members(i % ORDER)

    @property
    def P(self):
        return self.classes.members(P_LABEL)

    @property
    def Q(self):
        return self.classes.members(Q_LABEL)

    def mask(self, codes):
        return np.isin(self.classes.labels, list(codes))

    @property
    def D0(self):
        return np.flatnonzero(self.mask((0, 2, 4)))

    @property
    def D1(self):
        return np.flatnonzero(self.mask((1, 3, 5)))

    @property
    def C1(self):
        """Support of the first-class sequence: ``P`` and the odd classes."""
        return np.flatnonzero(self.mask((P_LABEL, 1, 3, 5)))

    @property
    def C0(self):
        return np.flatnonzero(self.mask((ZERO_LABEL, Q_LABEL, 0, 2, 4)))

    @property
    def C1_star(self):
        """Support of the second-class sequence: ``P`` and ``W_3, W_4, W_5``."""
        return np.flatnonzero(self.mask((P_LABEL, 3, 4, 5)))

    @property
    def C0_star(self):
        return np.flatnonzero(self.mask((ZERO_LABEL, Q_LABEL, 0, 1, 2)))

    def class_index(self, t):
        """Class index ``i`` with ``t`` in ``W_i``; ``None`` for non-units."""
        c = self.classes.code(t)
        return c if c < ORDER else None

    def in_D0(self, t):
        c = self.classes.code(t)
        return c < ORDER and c % 2 == 0


def build_partition(n1, n2, g, u):
    n = n1 * n2
    e = (n1 - 1) * (n2 - 1) // ORDER
    labels = np.full(n, -1, dtype=np.int8)
    labels[0] = ZERO_LABEL
    labels[np.arange(n1, n, n1)] = P_LABEL
    labels[np.arange(n2, n, n2)] = Q_LABEL
    # g^s for s < e, by repeated multiplication
    gpow = np.empty(e, dtype=np.int64)
    x = 1
    for s in range(e):
        gpow[s] = x
        x = x * g % n
    ui = 1
    for i in range(ORDER):
        cls = gpow * ui % n
        if np.any(labels[cls] != -1):
            raise CyclotomyError(f"class W{i} overlaps an earlier class; g={g} is not a valid generator")
        labels[cls] = i
        ui = ui * u % n
    if np.any(labels == -1):
        raise CyclotomyError("classes W_0..W_5 do not cover the units of Z_n")
    return ClassMap(labels)


def whiteman(n1, n2, g=None):
    """Construct the order-six cyclotomy; ``g`` defaults to the smallest common primitive root."""
    validate_params(n1, n2)
    if g is None:
        g = find_common_primitive_root(n1, n2)
    elif not (is_primitive_root(g, n1) and is_primitive_root(g, n2)):
        raise CyclotomyError(f"g={g} is not a common primitive root of {n1} and {n2}")
    u = compute_u(n1, n2, g)
    return WhitemanCyclotomy(int(n1), int(n2), int(g), int(u), build_partition(n1, n2, g, u))


def valid_pairs(nmax, pmin=3):
    """All ``(n1, n2)`` with ``n1 < n2``, ``n1 * n2 < nmax`` and ``gcd(n1-1, n2-1) = 6``."""
    primes = [p for p in range(max(pmin, 7), nmax // 7 + 1) if p % 6 == 1 and isprime(p)]
    return [
        (a, b)
        for a, b in itertools.combinations(primes, 2)
        if a * b < nmax and gcd(a - 1, b - 1) == ORDER
    ]


# counting


def cyclotomic_number(c, i, j):
    """``|(W_i + 1) & W_j|`` by direct count."""
    if not (0 <= i < ORDER and 0 <= j < ORDER):
        raise IndexError(f"class indices must lie in 0..5, got ({i}, {j})")
    return difference_count(c, i, j, 1)


def cyclotomic_table(c):
    """6 x 6 table of cyclotomic numbers in one pass over the units."""
    lab = c.classes.labels
    units = np.flatnonzero(lab < ORDER)
    nxt = lab[(units + 1) % c.n]
    ok = nxt < ORDER
    table = np.zeros((ORDER, ORDER), dtype=np.int64)
    np.add.at(table, (lab[units[ok]], nxt[ok]), 1)
    return table


def difference_count(c, i, j, t):
    """``|(W_i + t) & W_j|``."""
    if t % c.n == 0:
        raise ValueError("shift t must be nonzero modulo n")
    shifted = (c.W(i) + t) % c.n
    return int(np.count_nonzero(c.classes.labels[shifted] == j % ORDER))


def difference_count_on_pq(c, i, j, t):
    """Closed form of ``|(W_i + t) & W_j|`` for ``t`` in ``P`` or ``Q``."""
    n1, n2 = c.n1, c.n2
    in_p = t % n1 == 0
    in_q = t % n2 == 0
    if t % c.n == 0 or not (in_p or in_q):
        raise ValueError("closed form applies to t in P or Q only")
    if i % ORDER != j % ORDER:
        return (n1 - 1) * (n2 - 1) // 36
    if in_p:
        return (n1 - 1) * (n2 - 7) // 36
    return (n1 - 7) * (n2 - 1) // 36


def minus_one_class(c):
    return c.class_index(c.n - 1)


def minus_one_class_expected(c):
    """Class of -1 predicted from the parity of ``(n1-1)(n2-1)/36``."""
    return 0 if c.eta % 2 else 3


def minus_one_congruence_class(n1, n2):
    """Class of -1 predicted by ``n1 * n2 mod 12`` (3 for 7, 0 for 1)."""
    r = n1 * n2 % 12
    return {7: 3, 1: 0}.get(r)


def class_product(c, r, j):
    """``{r * t mod n : t in W_j}`` as a sorted array."""
    return np.sort(r * c.W(j) % c.n)


# quadratic forms and closed-form cyclotomic numbers


def _representations(N, k):
    """Nonnegative ``(x, y)`` with ``x^2 + k*y^2 = N``."""
    out = []
    for x in range(isqrt(N) + 1):
        r = N - x * x
        if r % k:
            continue
        y = isqrt(r // k)
        if y * y * k == r:
            out.append((x, y))
    return out


@dataclass(frozen=True)
class QuadFormReps:
    repX: int
    repY: int
    repA: int
    repB: int
    repC: int
    repD: int
    bigM: int
    xy_all: tuple = ()
    ab_all: tuple = ()
    cd_all: tuple = ()


def solve_quadform_reps(n1, n2):
    """Representations ``n = x^2 + 3y^2`` and ``4n = a^2 + 3b^2 = c^2 + 27d^2``.

    The scalar fields hold one preferred representation (smallest second
    component prime to 3); every nonnegative representation is kept in the
    ``*_all`` tuples for the sign/representation search.
    """
    n = n1 * n2
    xy = _representations(n, 3)
    ab = _representations(4 * n, 3)
    cd = _representations(4 * n, 27)
    if not (xy and ab and cd):
        raise ArithmeticError(f"no quadratic-form representation for n={n}")
    big_m = ((n1 - 2) * (n2 - 2) - 1) // 6
    return QuadFormReps(
        *_preferred(xy), *_preferred(ab), *_preferred(cd), big_m, tuple(xy), tuple(ab), tuple(cd)
    )


def _preferred(reps):
    # smallest second component not divisible by 3, else smallest second component
    by_y = sorted(reps, key=lambda r: r[1])
    return next((r for r in by_y if r[1] % 3), by_y[0])


# Each entry: list of (i, j) cells sharing a value, and the linear form
# (const, M, x, y, a, b, c, d) giving 72 * value.
_EVEN_ETA_BLOCK = (
    ([(0, 0), (3, 0), (3, 3)], (20, 12, -8, 0, -2, 0, 2, 0)),
    ([(0, 1), (2, 5), (4, 3)], (-4, 12, 0, 0, -3, -9, -1, 9)),
    ([(0, 2), (1, 4), (5, 3)], (-4, 12, -8, 24, 1, -3, -1, -9)),
    ([(0, 3)], (-4, 12, 24, 0, 6, 0, 2, 0)),
    ([(0, 4), (1, 3), (5, 2)], (-4, 12, -8, -24, 1, 3, -1, 9)),
    ([(0, 5), (2, 3), (4, 1)], (-4, 12, 0, 0, -3, 9, -1, -9)),
    ([(1, 0), (2, 2), (3, 1), (3, 4), (4, 0), (5, 5)], (8, 12, 4, 12, 1, 3, -1, 9)),
    ([(1, 1), (2, 0), (3, 2), (3, 5), (4, 4), (5, 0)], (8, 12, 4, -12, 1, -3, -1, -9)),
    ([(1, 2), (1, 5), (2, 4), (4, 2), (5, 1), (5, 4)], (-4, 12, 4, 0, -2, 0, 2, 0)),
    ([(2, 1), (4, 5)], (-4, 12, -12, 0, 6, 0, 2, 0)),
)

_ODD_ETA_BLOCK = (
    ([(0, 0)], (32, 12, -24, 0, 6, 0, 2, 0)),
    ([(0, 1), (1, 0), (5, 5)], (8, 12, 8, 24, 1, 3, -1, 9)),
    ([(0, 2), (2, 0), (4, 4)], (8, 12, 0, 0, -3, 9, -1, -9)),
    ([(0, 3), (3, 0), (3, 3)], (8, 12, 8, 0, -2, 0, 2, 0)),
    ([(0, 4), (4, 0), (2, 2)], (8, 12, 0, 0, -3, -9, -1, 9)),
    ([(0, 5), (5, 0), (1, 1)], (8, 12, 8, -24, 1, -3, -1, -9)),
    ([(1, 2), (2, 1), (4, 5), (5, 4), (5, 1), (1, 5)], (-4, 12, -4, 0, -2, 0, 2, 0)),
    ([(1, 3), (2, 5), (3, 1), (3, 4), (4, 3), (5, 2)], (-4, 12, -4, -12, 1, 3, -1, 9)),
    ([(1, 4), (2, 3), (3, 2), (3, 5), (4, 1), (5, 3)], (-4, 12, -4, 12, 1, -3, -1, -9)),
    ([(2, 4), (4, 2)], (-4, 12, 12, 0, 6, 0, 2, 0)),
)


def closed_form_block(eta_odd):
    return _ODD_ETA_BLOCK if eta_odd else _EVEN_ETA_BLOCK


def closed_form_table_72(eta_odd, big_m, x, y, a, b, c, d):
    """72 times the closed-form cyclotomic numbers for given representation values."""
    table = np.zeros((ORDER, ORDER), dtype=np.int64)
    vals = np.array([1, big_m, x, y, a, b, c, d], dtype=np.int64)
    for cells, form in closed_form_block(eta_odd):
        v = int(np.dot(form, vals))
        for i, j in cells:
            table[i, j] = v
    return table


@dataclass(frozen=True)
class ClosedFormWitness:
    table: np.ndarray
    x: int
    y: int
    a: int
    b: int
    c: int
    d: int

    @property
    def signs(self):
        return (self.x, self.y, self.a, self.b, self.c, self.d)


def closed_form_cyclotomic_numbers(c, reps=None):
    """Find representation values and signs for which the closed forms equal brute force.

    Returns a :class:`ClosedFormWitness` whose ``table`` holds the closed-form
    cyclotomic numbers.  Raises :class:`ClosedFormMismatch` if no choice works.
    """
    if reps is None:
        reps = solve_quadform_reps(c.n1, c.n2)
    target = 72 * cyclotomic_table(c)
    eta_odd = bool(c.eta % 2)
    xy = reps.xy_all or ((reps.repX, reps.repY),)
    ab = reps.ab_all or ((reps.repA, reps.repB),)
    cd = reps.cd_all or ((reps.repC, reps.repD),)
    for (x, y), (a, b), (cc, d) in itertools.product(xy, ab, cd):
        for sg in itertools.product((1, -1), repeat=6):
            vals = [s * v for s, v in zip(sg, (x, y, a, b, cc, d))]
            t72 = closed_form_table_72(eta_odd, reps.bigM, *vals)
            if np.array_equal(t72, target):
                return ClosedFormWitness(t72 // 72, *vals)
    raise ClosedFormMismatch(
        f"closed forms do not reproduce the cyclotomic numbers for ({c.n1}, {c.n2})"
    )


def equality_pattern_holds(table, eta_odd):
    """True if every group of cells sharing a closed form has one common value."""
    return all(len({int(table[i, j]) for i, j in cells}) == 1 for cells, _ in closed_form_block(eta_odd))

"""Prime fields GF(p) and explicit extensions GF(p^m).

Extension elements are coefficient vectors of length ``m`` over GF(p) in the
polynomial basis ``1, x, ..., x^(m-1)`` modulo a monic irreducible modulus.
Elements are ordered canonically by their value as base-p integers with the
constant coefficient as least significant digit; :meth:`ExtField.index` and
:meth:`ExtField.from_index` convert between the two views.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

import numpy as np
from sympy import factorint, isprime

from .polyalg import Poly, poly_gcd

EXT_DEGREE_CAP = 30


class ExtensionCapError(ValueError):
    """Requested extension degree exceeds the configured cap."""


def _require_prime(p):
    if not isinstance(p, (int, np.integer)) or p < 2 or not isprime(int(p)):
        raise ValueError(f"field characteristic must be prime, got {p!r}")


class ExtField:
    """GF(p^m) as GF(p)[x] / (modulus)."""

    def __init__(self, p, modulus):
        _require_prime(p)
        self.p = int(p)
        mod = Poly(modulus, self.p) if not isinstance(modulus, Poly) else modulus
        if mod.deg < 1 or mod.lead != 1:
            raise ValueError("modulus must be monic of degree >= 1")
        self.modulus = mod
        self.m = mod.deg
        self.order = self.p**self.m
        m = self.m
        big = self.p > 2**20
        self._dtype = object if big else np.int64
        # row k: x^(m+k) reduced mod modulus, for k = 0..m-2
        red = np.zeros((max(m - 1, 0), m), dtype=self._dtype)
        if m > 1:
            cur = [(-c) % self.p for c in mod.to_list()[:m]]
            for k in range(m - 1):
                red[k] = cur
                top = cur[-1]
                cur = [0] + cur[:-1]
                if top:
                    cur = [(c - top * t) % self.p for c, t in zip(cur, mod.to_list()[:m])]
        self._red = red

    def __repr__(self):
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m}) mod {self.modulus.to_list()}"

    def __eq__(self, other):
        return isinstance(other, ExtField) and self.p == other.p and self.modulus == other.modulus

    def __hash__(self):
        return hash((self.p, tuple(self.modulus.to_list())))

    # element construction

    def __call__(self, value):
        """Element from an int (embedded scalar), a coefficient sequence, or an element."""
        if isinstance(value, FieldElem):
            if value.field != self:
                raise ValueError("field mismatch")
            return value
        if isinstance(value, (int, np.integer)):
            return FieldElem(self, (int(value) % self.p,) + (0,) * (self.m - 1))
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.m:
            coeffs = self._reduce(coeffs)
        coeffs += [0] * (self.m - len(coeffs))
        return FieldElem(self, tuple(coeffs))

    def zero(self):
        return self(0)

    def one(self):
        return self(1)

    def gen(self):
        """The class of ``x``."""
        return self([0, 1])

    def from_index(self, k):
        digits = []
        for _ in range(self.m):
            k, r = divmod(k, self.p)
            digits.append(r)
        return FieldElem(self, tuple(digits))

    def index(self, a):
        v = 0
        for c in reversed(a.coeffs):
            v = v * self.p + c
        return v

    def elements(self):
        for k in range(self.order):
            yield self.from_index(k)

    # raw vector arithmetic

    def _reduce(self, conv):
        m = self.m
        conv = list(conv)
        low = np.array(conv[:m] + [0] * max(0, m - len(conv)), dtype=self._dtype)
        high = conv[m:]
        if high:
            low = low + np.array(high, dtype=self._dtype) @ self._red[: len(high)]
        return [int(c) % self.p for c in low]

    def _mul(self, a, b):
        if self.m == 1:
            return ((a[0] * b[0]) % self.p,)
        conv = np.convolve(np.array(a, dtype=self._dtype), np.array(b, dtype=self._dtype))
        return tuple(self._reduce(conv))

    def _basis_matrices(self):
        # B[i] is the matrix of multiplication by x^i
        if getattr(self, "_basis", None) is None:
            m = self.m
            B = np.zeros((m, m, m), dtype=self._dtype)
            cur = np.eye(m, dtype=self._dtype)
            for i in range(m):
                B[i] = cur
                if i + 1 < m:
                    shifted = np.zeros_like(cur)
                    shifted[1:] = cur[:-1]
                    # the top row overflows into x^m, reduced by the modulus
                    if m > 1:
                        shifted = (shifted + np.outer(self._red[0], cur[-1])) % self.p
                    cur = shifted
            self._basis = B
        return self._basis

    def mul_matrix(self, a):
        """Matrix ``M`` over GF(p) with ``M @ v`` the coordinates of ``a * v``."""
        coeffs = np.array(self(a).coeffs if not isinstance(a, np.ndarray) else a, dtype=self._dtype)
        return np.tensordot(coeffs, self._basis_matrices(), axes=1) % self.p

    def is_base(self, a):
        """True if ``a`` lies in the prime subfield."""
        return all(c == 0 for c in a.coeffs[1:])


class PrimeField(ExtField):
    """GF(p), realised as the degree-one extension modulo ``x``."""

    def __init__(self, p):
        super().__init__(p, [0, 1])


@dataclass(frozen=True, eq=False)
class FieldElem:
    field: ExtField
    coeffs: tuple

    def _other(self, b):
        if isinstance(b, FieldElem):
            if b.field is not self.field and b.field != self.field:
                raise ValueError(f"field mismatch: {self.field!r} vs {b.field!r}")
            return b
        if isinstance(b, (int, np.integer)):
            return self.field(int(b))
        return NotImplemented

    def __add__(self, b):
        b = self._other(b)
        if b is NotImplemented:
            return b
        p = self.field.p
        return FieldElem(self.field, tuple((x + y) % p for x, y in zip(self.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FieldElem(self.field, tuple((-x) % p for x in self.coeffs))

    def __sub__(self, b):
        b = self._other(b)
        if b is NotImplemented:
            return b
        return self + (-b)

    def __rsub__(self, b):
        return (-self) + b

    def __mul__(self, b):
        b = self._other(b)
        if b is NotImplemented:
            return b
        return FieldElem(self.field, self.field._mul(self.coeffs, b.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        if self.field.m == 1:
            return self.field(pow(self.coeffs[0], -1, self.field.p))
        return self ** (self.field.order - 2)

    def __truediv__(self, b):
        b = self._other(b)
        if b is NotImplemented:
            return b
        return self * b.inverse()

    def __rtruediv__(self, b):
        return self._other(b) * self.inverse()

    def is_zero(self):
        return not any(self.coeffs)

    def __eq__(self, b):
        if isinstance(b, (int, np.integer)):
            b = self.field(int(b))
        if not isinstance(b, FieldElem):
            return NotImplemented
        return self.field == b.field and self.coeffs == b.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __int__(self):
        if not self.field.is_base(self):
            raise ValueError(f"{self} is not in the prime subfield")
        return self.coeffs[0]

    def __repr__(self):
        if self.field.m == 1:
            return f"{self.coeffs[0]} (mod {self.field.p})"
        return f"FieldElem({list(self.coeffs)}, p={self.field.p})"


def elem_arith(a, b, op):
    """Apply ``op`` in {"add", "sub", "mul", "div"} to two elements of one field."""
    if a.field != b.field:
        raise ValueError(f"field mismatch: {a.field!r} vs {b.field!r}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


# irreducibility


def is_irreducible(f):
    """Rabin's test over GF(p)."""
    p, m = f.p, f.deg
    if m < 1:
        return False
    if m == 1:
        return True
    x = Poly([0, 1], p)
    for r in factorint(m):
        h = x.powmod(p ** (m // r), f) - x
        if poly_gcd(f, h).deg > 0:
            return False
    return ((x.powmod(p**m, f) - x) % f).is_zero()


def is_irreducible_trial(f):
    """Trial division by every monic polynomial of degree 1..deg/2."""
    p, m = f.p, f.deg
    for d in range(1, m // 2 + 1):
        for k in range(p**d):
            low = [(k // p**i) % p for i in range(d)]
            if (f % Poly(low + [1], p)).is_zero():
                return False
    return m >= 1


@lru_cache(maxsize=None)
def smallest_irreducible(p, m):
    """Monic irreducible of degree ``m`` smallest as a base-p integer (constant term least significant)."""
    for k in range(p**m):
        low = [(k // p**i) % p for i in range(m)]
        if m > 1 and low[0] == 0:
            continue
        f = Poly(low + [1], p)
        if is_irreducible(f):
            return f
    raise AssertionError("an irreducible polynomial of every degree exists")


@lru_cache(maxsize=None)
def make_ext_field(p, m, cap=EXT_DEGREE_CAP):
    """GF(p^m) with the canonical (smallest) irreducible modulus."""
    _require_prime(p)
    if m < 1:
        raise ValueError(f"extension degree must be >= 1, got {m}")
    if m > cap:
        raise ExtensionCapError(f"extension degree {m} exceeds cap {cap}")
    if m == 1:
        return PrimeField(p)
    return ExtField(p, smallest_irreducible(p, m))


# orders and roots of unity


def mult_order(a):
    """Multiplicative order of a nonzero field element."""
    if a.is_zero():
        raise ValueError("zero has no multiplicative order")
    N = a.field.order - 1
    t = N
    for r, k in factorint(N).items():
        for _ in range(k):
            if a ** (t // r) == 1:
                t //= r
            else:
                break
    return t


def ord_mod(q, n):
    """Multiplicative order of ``q`` modulo ``n``."""
    if n < 1:
        raise ValueError("modulus must be positive")
    if n == 1:
        return 1
    if gcd(q, n) != 1:
        raise ValueError(f"gcd({q}, {n}) != 1, no multiplicative order")
    phi = 1
    for r, k in factorint(n).items():
        phi *= (r - 1) * r ** (k - 1)
    t = phi
    for r, k in factorint(phi).items():
        for _ in range(k):
            if pow(q, t // r, n) == 1:
                t //= r
            else:
                break
    return t


def is_generator(a):
    N = a.field.order - 1
    if a.is_zero():
        return False
    return all(a ** (N // r) != 1 for r in factorint(N))


@lru_cache(maxsize=None)
def smallest_generator(F):
    for k in range(1, F.order):
        a = F.from_index(k)
        if is_generator(a):
            return a
    raise AssertionError("multiplicative group is cyclic")


def primitive_nth_root(F, n):
    """Primitive n-th root of unity: ``gamma^((p^m - 1) / n)`` for the smallest generator ``gamma``."""
    N = F.order - 1
    if n < 1 or N % n:
        raise ValueError(f"{n} does not divide {N}; no primitive {n}-th root in {F!r}")
    if n == 1:
        return F.one()
    return smallest_generator(F) ** (N // n)


def legendre(a, p):
    """Legendre symbol (a|p) for an odd prime p via Euler's criterion."""
    if p == 2 or not isprime(p):
        raise ValueError(f"Legendre symbol needs an odd prime, got {p}")
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


class ExtPoly:
    """Polynomial over an extension field; ``rows[k]`` holds the coordinates of the x^k coefficient."""

    def __init__(self, field, rows):
        self.field = field
        rows = np.asarray(rows, dtype=field._dtype).reshape(-1, field.m) % field.p
        nz = np.flatnonzero(rows.any(axis=1))
        self.rows = rows[: nz[-1] + 1] if nz.size else rows[:0]

    @classmethod
    def one(cls, field):
        return cls(field, [field.one().coeffs])

    @classmethod
    def lift(cls, field, f):
        """Embed a GF(p) polynomial."""
        rows = np.zeros((len(f.coeffs), field.m), dtype=field._dtype)
        rows[:, 0] = f.coeffs
        return cls(field, rows)

    @classmethod
    def from_roots(cls, field, roots):
        """``prod (x - r)`` for roots given as coordinate vectors."""
        p = field.p
        rows = np.zeros((len(roots) + 1, field.m), dtype=field._dtype)
        rows[0, 0] = 1
        deg = 0
        for r in roots:
            M = field.mul_matrix(np.asarray(r))
            prod = rows[: deg + 1] @ M.T
            rows[1 : deg + 2] = rows[: deg + 1].copy()
            rows[0] = 0
            rows[: deg + 1] = (rows[: deg + 1] - prod) % p
            deg += 1
        return cls(field, rows)

    @property
    def deg(self):
        return len(self.rows) - 1

    def coeff(self, k):
        return FieldElem(self.field, tuple(int(c) for c in self.rows[k]))

    def __mul__(self, other):
        F = self.field
        if self.deg < 0 or other.deg < 0:
            return ExtPoly(F, [])
        out = np.zeros((self.deg + other.deg + 1, F.m), dtype=F._dtype)
        for i, a in enumerate(self.rows):
            if a.any():
                out[i : i + len(other.rows)] += other.rows @ F.mul_matrix(a).T
                out %= F.p
        return ExtPoly(F, out)

    def __eq__(self, other):
        return isinstance(other, ExtPoly) and self.field == other.field and np.array_equal(self.rows, other.rows)

    def is_base(self):
        return not self.rows[:, 1:].any()

    def to_base(self):
        """Project to GF(p)[x]; raises if some coefficient lies outside the prime field."""
        if not self.is_base():
            raise ValueError("polynomial has coefficients outside the prime field")
        return Poly(self.rows[:, 0], self.field.p)

"""Dense polynomials over prime fields, minimal polynomials and linear complexity.

Coefficients are stored low degree first in a numpy integer array, reduced
into ``[0, p)`` and trimmed so the last entry is nonzero (the zero polynomial
has an empty coefficient array).
"""

from __future__ import annotations

import re

import numpy as np

_INT_LIMIT = 2**62


def _as_array(coeffs, p):
    arr = np.asarray(coeffs)
    if arr.dtype == object or p > 2**31:
        arr = np.array([int(c) % p for c in np.ravel(arr)], dtype=object)
    else:
        arr = np.asarray(arr, dtype=np.int64).ravel() % p
    nz = np.flatnonzero(arr)
    return arr[: nz[-1] + 1] if nz.size else arr[:0]


class Poly:
    """Polynomial over GF(p) with ``coeffs[i]`` the coefficient of ``x**i``."""

    __slots__ = ("p", "coeffs")

    def __init__(self, coeffs, p):
        if p < 2:
            raise ValueError(f"characteristic must be a prime >= 2, got {p}")
        self.p = int(p)
        self.coeffs = _as_array(coeffs, self.p)

    # constructors

    @classmethod
    def zero(cls, p):
        return cls([], p)

    @classmethod
    def one(cls, p):
        return cls([1], p)

    @classmethod
    def monomial(cls, k, p, c=1):
        v = np.zeros(k + 1, dtype=np.int64)
        v[k] = c
        return cls(v, p)

    @classmethod
    def xn_minus_one(cls, n, p):
        """``x**n - 1``."""
        v = np.zeros(n + 1, dtype=np.int64)
        v[0] = p - 1
        v[n] += 1
        return cls(v, p)

    @classmethod
    def from_support(cls, support, n, p):
        """Sum of ``x**i`` over ``i`` in ``support`` (indices below ``n``)."""
        v = np.zeros(n, dtype=np.int64)
        v[np.asarray(list(support), dtype=np.int64)] = 1
        return cls(v, p)

    # basic properties

    @property
    def deg(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return len(self.coeffs) == 0

    @property
    def lead(self):
        return int(self.coeffs[-1]) if len(self.coeffs) else 0

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(pow(self.lead, -1, self.p))

    def weight(self):
        return int(np.count_nonzero(self.coeffs))

    def to_list(self):
        return [int(c) for c in self.coeffs]

    def padded(self, length):
        """Coefficient vector zero-padded (or checked) to ``length``."""
        if len(self.coeffs) > length:
            raise ValueError(f"degree {self.deg} does not fit in length {length}")
        out = np.zeros(length, dtype=np.int64)
        out[: len(self.coeffs)] = self.coeffs
        return out

    def _check(self, other):
        if isinstance(other, int):
            return Poly([other], self.p)
        if not isinstance(other, Poly):
            return NotImplemented
        if other.p != self.p:
            raise ValueError(f"field mismatch: GF({self.p}) vs GF({other.p})")
        return other

    # arithmetic

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = a.copy()
        out[: len(b)] += b
        return Poly(out, self.p)

    __radd__ = __add__

    def __neg__(self):
        return Poly(-self.coeffs, self.p)

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        return Poly(self.coeffs * (int(c) % self.p), self.p)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._check(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.p)
        a, b = self.coeffs, other.coeffs
        if (self.p - 1) ** 2 * min(len(a), len(b)) >= _INT_LIMIT:
            a, b = a.astype(object), b.astype(object)
        return Poly(np.convolve(a, b), self.p)

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by ``x**k``."""
        if self.is_zero():
            return self
        return Poly(np.concatenate([np.zeros(k, dtype=self.coeffs.dtype), self.coeffs]), self.p)

    def __divmod__(self, other):
        other = self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        db = other.deg
        if self.deg < db:
            return Poly.zero(p), self
        r = self.coeffs.copy()
        b = other.coeffs
        inv = pow(int(b[-1]), -1, p)
        q = np.zeros(self.deg - db + 1, dtype=r.dtype)
        for i in range(self.deg - db, -1, -1):
            c = int(r[i + db]) * inv % p
            if c:
                q[i] = c
                r[i : i + db + 1] = (r[i : i + db + 1] - c * b) % p
        return Poly(q, p), Poly(r[:db], p)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        """Quotient of an exact division; raises if the remainder is nonzero."""
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError(f"{other!r} does not divide {self!r}")
        return q

    def powmod(self, e, mod):
        result = Poly.one(self.p) % mod
        base = self % mod
        while e:
            if e & 1:
                result = (result * base) % mod
            base = (base * base) % mod
            e >>= 1
        return result

    def __call__(self, x):
        """Evaluate at an integer point of GF(p)."""
        acc = 0
        for c in reversed(self.to_list()):
            acc = (acc * x + c) % self.p
        return acc

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.p == other.p and len(self.coeffs) == len(other.coeffs) and bool(
            np.all(self.coeffs == other.coeffs)
        )

    def __hash__(self):
        return hash((self.p, tuple(self.to_list())))

    def __repr__(self):
        return f"Poly({to_human(self)}, p={self.p})"


def _strip_high(v):
    nz = np.flatnonzero(v)
    return v[nz[0] :] if nz.size else v[:0]


def poly_gcd(a, b):
    """Monic greatest common divisor by Euclid's algorithm."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    if a.p != b.p:
        raise ValueError(f"field mismatch: GF({a.p}) vs GF({b.p})")
    p = a.p
    if p == 2:
        return _gcd_binary(a, b)
    # work on raw high-degree-first arrays to avoid per-step allocations
    x, y = a.coeffs[::-1].copy(), b.coeffs[::-1].copy()
    if len(x) < len(y):
        x, y = y, x
    while y.size:
        inv = pow(int(y[0]), -1, p)
        ly = len(y)
        for i in range(len(x) - ly + 1):
            c = int(x[i]) * inv % p
            if c:
                x[i : i + ly] = (x[i : i + ly] - c * y) % p
        x, y = y, _strip_high(x[len(x) - ly + 1 :] if len(x) >= ly else x)
    return Poly(x[::-1], p).monic()


def _to_int(f):
    return int("".join(str(int(c)) for c in f.coeffs[::-1]) or "0", 2)


def _gcd_binary(a, b):
    # bit k of the int is the coefficient of x^k
    x, y = _to_int(a), _to_int(b)
    while y:
        ly = y.bit_length()
        while x.bit_length() >= ly:
            x ^= y << (x.bit_length() - ly)
        x, y = y, x
    return Poly([(x >> k) & 1 for k in range(x.bit_length())], 2)


def poly_lcm(a, b):
    return (a * b).exact_div(poly_gcd(a, b)).monic()


# text formats


def to_coeff_text(f):
    """Low-degree-first comma separated coefficient list."""
    return ",".join(str(c) for c in f.to_list()) if not f.is_zero() else "0"


def from_coeff_text(text, p):
    return Poly([int(tok) for tok in text.split(",") if tok.strip()], p)


def to_human(f):
    """Descending powers, e.g. ``x^96+x^94+2x^5+1``."""
    if f.is_zero():
        return "0"
    terms = []
    for i in range(f.deg, -1, -1):
        c = int(f.coeffs[i])
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
            continue
        mono = "x" if i == 1 else f"x^{i}"
        terms.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(terms)


_TERM = re.compile(r"^(\d*)(?:\*?x(?:\^(\d+))?)?$")


def from_human(text, p):
    v = {}
    for tok in text.replace(" ", "").replace("-", "+-").split("+"):
        if not tok:
            continue
        sign = 1
        if tok.startswith("-"):
            sign, tok = -1, tok[1:]
        m = _TERM.match(tok)
        if not m or not tok:
            raise ValueError(f"cannot parse term {tok!r}")
        coef, exp = m.group(1), m.group(2)
        has_x = "x" in tok
        c = int(coef) if coef else 1
        k = (int(exp) if exp else 1) if has_x else 0
        v[k] = v.get(k, 0) + sign * c
    if not v:
        return Poly.zero(p)
    out = np.zeros(max(v) + 1, dtype=object)
    for k, c in v.items():
        out[k] = c % p
    return Poly(out, p)


# sequences


def sequence_poly(s):
    """Lift one period of a sequence to ``s_0 + s_1 x + ... + s_{n-1} x^{n-1}``."""
    return Poly(np.asarray(s.values, dtype=np.int64), s.q)


def _gcd_with_xn(s):
    return poly_gcd(Poly.xn_minus_one(s.n, s.q), sequence_poly(s))


def minimal_poly(s):
    """``(x^n - 1) / gcd(x^n - 1, S(x))``; the zero sequence gives ``1``."""
    f = sequence_poly(s)
    if f.is_zero():
        return Poly.one(s.q)
    return Poly.xn_minus_one(s.n, s.q).exact_div(_gcd_with_xn(s)).monic()


def linear_complexity(s):
    f = sequence_poly(s)
    if f.is_zero():
        return 0
    return s.n - _gcd_with_xn(s).deg


def annihilates(f, values, p):
    """True if ``f = c_0 + ... + c_L x^L`` kills ``values`` in the sense ``f(x) S(x) = 0``.

    That is ``sum_k c_k s_{j-k} = 0`` for every full window, the convention under
    which ``(x^n - 1) / gcd(x^n - 1, S(x))`` is the minimal polynomial.
    """
    c = f.coeffs.astype(np.int64)
    v = np.asarray(values, dtype=np.int64)
    L = f.deg
    if L < 0:
        return not np.any(v)
    windows = np.lib.stride_tricks.sliding_window_view(v, L + 1)
    return not np.any((windows @ c[::-1]) % p)


def berlekamp_massey(stream, p):
    """Shortest LFSR of a finite stream over GF(p).

    Returns ``(L, C)`` where ``C = 1 + c_1 x + ... + c_L x^L`` is the
    connection polynomial: ``s_j + sum_k c_k s_{j-k} = 0`` for ``j >= L``.
    """
    s = np.asarray(stream, dtype=np.int64) % p
    if p == 2:
        return _bm_binary(s)
    N = len(s)
    C = np.zeros(N + 1, dtype=np.int64)
    B = np.zeros(N + 1, dtype=np.int64)
    C[0] = B[0] = 1
    L, m, b = 0, 1, 1
    lb = 1  # B is zero beyond index lb
    for i in range(N):
        d = int(np.dot(C[: L + 1], s[i - L : i + 1][::-1]) % p)
        if d == 0:
            m += 1
            continue
        coef = d * pow(b, -1, p) % p
        span = min(lb, N + 1 - m)
        if 2 * L <= i:
            T = C[: L + 1].copy()
            C[m : m + span] = (C[m : m + span] - coef * B[:span]) % p
            B[:] = 0
            B[: len(T)] = T
            lb = len(T)
            L, b, m = i + 1 - L, d, 1
        else:
            C[m : m + span] = (C[m : m + span] - coef * B[:span]) % p
            m += 1
    return L, Poly(C[: L + 1], p)


def _bm_binary(s):
    # polynomials as Python ints, bit k = coefficient of x^k
    N = len(s)
    rev = int("".join("1" if v else "0" for v in s), 2) if N else 0  # bit N-1-j holds s_j
    C = B = 1
    L, m = 0, 1
    for i in range(N):
        window = rev >> (N - 1 - i)  # bit k holds s_{i-k}
        d = (C & window).bit_count() & 1
        if not d:
            m += 1
            continue
        if 2 * L <= i:
            C, B = C ^ (B << m), C
            L, m = i + 1 - L, 1
        else:
            C ^= B << m
            m += 1
    coeffs = [(C >> k) & 1 for k in range(L + 1)]
    return L, Poly(coeffs, 2)


def bm_linear_complexity(s):
    """Linear complexity of a periodic sequence from two periods of output."""
    stream = np.tile(np.asarray(s.values, dtype=np.int64), 2)
    return berlekamp_massey(stream, s.q)[0]

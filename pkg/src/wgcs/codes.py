"""Cyclic codes defined by the first-class sequence, and their minimum distance."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd, isqrt

import numpy as np

from .cyclotomy import ORDER, P_LABEL, Q_LABEL
from .gf import EXT_DEGREE_CAP, ExtPoly, make_ext_field, ord_mod, primitive_nth_root
from .polyalg import Poly, minimal_poly, poly_gcd
from .sequence import PeriodicSequence, wgcs1

# how Lambda(beta) behaves when it is forced into {0, -1}
NOT_ZERO_OR_MINUS_ONE = "NOT_ZERO_OR_MINUS_ONE"
ZERO = "ZERO"
MINUS_ONE = "MINUS_ONE"
NOT_APPLICABLE = "NOT_APPLICABLE"
UNDECIDABLE = "UNDECIDABLE"

# distance methods
EXHAUSTIVE = "EXHAUSTIVE"
SINGLE_QUOTIENT = "SINGLE_QUOTIENT"
DOUBLE_QUOTIENT = "DOUBLE_QUOTIENT"
SQRT_BOUND = "SQRT_BOUND"
QUADRATIC_BOUND = "QUADRATIC_BOUND"
RANDOM_SEARCH = "RANDOM_SEARCH"
CODEWORD_WEIGHT = "CODEWORD_WEIGHT"

DEFAULT_BUDGET = 2**24


class NotInD0Error(ValueError):
    """``q mod n`` lies in ``D_1`` so the factors ``d_0, d_1`` are not defined over GF(q)."""


class BudgetExceeded(RuntimeError):
    pass


def _require_coprime(n, q):
    if gcd(n, q) != 1:
        raise ValueError(f"gcd(n, q) = gcd({n}, {q}) != 1")


@dataclass(frozen=True, eq=False)
class CyclicCode:
    n: int
    q: int
    gen: Poly

    def __post_init__(self):
        if self.gen.p != self.q:
            raise ValueError("generator field does not match q")
        if not (Poly.xn_minus_one(self.n, self.q) % self.gen).is_zero():
            raise ValueError("generator does not divide x^n - 1")
        object.__setattr__(self, "gen", self.gen.monic())

    @property
    def k(self):
        return self.n - self.gen.deg

    @property
    def check_poly(self):
        return Poly.xn_minus_one(self.n, self.q).exact_div(self.gen)

    def generator_matrix(self):
        """``k x n`` matrix whose rows are ``x^i g(x)``."""
        g = self.gen.padded(self.gen.deg + 1)
        G = np.zeros((self.k, self.n), dtype=np.int64)
        for i in range(self.k):
            G[i, i : i + len(g)] = g
        return G

    def __repr__(self):
        return f"CyclicCode([{self.n},{self.k}] over GF({self.q}))"


def code_from_sequence(s, q=None):
    """Cyclic code generated by ``(x^n - 1) / gcd(x^n - 1, S(x))``."""
    q = s.q if q is None else q
    _require_coprime(s.n, q)
    if q != s.q:
        s = PeriodicSequence(s.n, q, s.values)
    return CyclicCode(s.n, q, minimal_poly(s))


def wgcs_code(c, q):
    return code_from_sequence(wgcs1(c, q))


# case analysis


@dataclass(frozen=True)
class CaseReport:
    delta1: int
    delta2: int
    delta: int
    n_mod12: int
    quarter_vanishes: bool
    lambda_beta_case: str
    q_in_d0: bool
    ext_degree: int
    sufficient_condition_holds: bool

    @property
    def part(self):
        return 2 if self.quarter_vanishes else 1

    def to_dict(self):
        return {
            "delta1": self.delta1,
            "delta2": self.delta2,
            "delta": self.delta,
            "nMod12": self.n_mod12,
            "quarterVanishes": self.quarter_vanishes,
            "lambdaBetaCase": self.lambda_beta_case,
            "qInD0": self.q_in_d0,
            "extDegree": self.ext_degree,
            "part": self.part,
        }


def discriminants(c, q):
    p = q
    d1 = (c.n1 + 1) // 2 % p
    d2 = (c.n2 - 1) // 2 % p
    d = (c.n1 + 1) * (c.n2 - 1) // 2 % p
    return d1, d2, d


def quarter_vanishes(n, p):
    r = n % 12
    if r == 7:
        return (n + 1) // 4 % p == 0
    if r == 1:
        return (n - 1) // 4 % p == 0
    raise ValueError(f"n = {n} is not 1 or 7 mod 12")


def classify_case(c, q, ext_cap=EXT_DEGREE_CAP):
    _require_coprime(c.n, q)
    d1, d2, d = discriminants(c, q)
    qv = quarter_vanishes(c.n, q)
    m = ord_mod(q, c.n)
    case = NOT_APPLICABLE
    if qv:
        if m > ext_cap:
            case = UNDECIDABLE
        else:
            lb = lambda_at(root_table(c, q, ext_cap), c, 1)
            if not lb.any():
                case = ZERO
            elif lb[0] == q - 1 and not lb[1:].any():
                case = MINUS_ONE
            else:
                case = NOT_ZERO_OR_MINUS_ONE
    return CaseReport(d1, d2, d, c.n % 12, qv, case, c.in_D0(q % c.n), m, qv)


# evaluations at powers of beta


class RootTable:
    """Powers ``beta^k`` (``0 <= k < n``) as coordinate rows over GF(q)."""

    def __init__(self, c, q, ext_cap=EXT_DEGREE_CAP):
        _require_coprime(c.n, q)
        self.n, self.q = c.n, q
        self.m = ord_mod(q, c.n)
        self.field = make_ext_field(q, self.m, ext_cap)
        self.beta = primitive_nth_root(self.field, c.n)
        M = self.field.mul_matrix(self.beta)
        pw = np.zeros((c.n, self.m), dtype=np.int64)
        pw[0, 0] = 1
        for k in range(1, c.n):
            pw[k] = M @ pw[k - 1] % q
        self.powers = pw

    def elem(self, k):
        return self.field(self.powers[k % self.n])

    def power_sum(self, exps):
        """Coordinates of ``sum beta^e`` over the given exponents."""
        return self.powers[np.asarray(exps) % self.n].sum(axis=0) % self.q


@lru_cache(maxsize=32)
def root_table(c, q, ext_cap=EXT_DEGREE_CAP):
    return RootTable(c, q, ext_cap)


def lambda_at(rt, c, t):
    return rt.power_sum(t * c.C1)


def eval_lambda_at(c, q, t, ext_cap=EXT_DEGREE_CAP):
    """``Lambda(beta^t)`` as an element of GF(q^m)."""
    rt = root_table(c, q, ext_cap)
    return rt.field(lambda_at(rt, c, t))


def predicted_lambda_at(c, q, t, lam_beta):
    """The four-way table for ``Lambda(beta^t)`` given ``Lambda(beta)`` as an element."""
    code = c.classes.code(t)
    F = lam_beta.field
    if code == P_LABEL:
        return F(-((c.n1 + 1) // 2))
    if code == Q_LABEL:
        return F((c.n2 - 1) // 2)
    if code < ORDER:
        return lam_beta if code % 2 == 0 else -(lam_beta + 1)
    return F((c.n1 + 1) * (c.n2 - 1) // 2)


def class_sum(rt, c, j, t):
    """``sum_{i in W_j} beta^(i t)`` as coordinates."""
    return rt.power_sum(t * c.W(j))


# factors of x^n - 1


def cyclotomic_cosets(exps, q, n):
    """Partition ``exps`` into orbits under multiplication by ``q`` mod ``n``."""
    remaining = set(int(e) for e in exps)
    cosets = []
    for e in sorted(remaining):
        if e not in remaining:
            continue
        orbit = []
        x = e
        while x not in orbit:
            orbit.append(x)
            x = x * q % n
        remaining.difference_update(orbit)
        cosets.append(orbit)
    return cosets


def _base_poly_from_exps(rt, exps):
    F = rt.field
    total = Poly.one(rt.q)
    for orbit in cyclotomic_cosets(exps, rt.q, rt.n):
        f = ExtPoly.from_roots(F, rt.powers[orbit])
        if not f.is_base():
            raise ArithmeticError("coset product has coefficients outside GF(q)")
        total = total * f.to_base()
    return total


def d_polys(c, q, ext_cap=EXT_DEGREE_CAP):
    """``d_0 = prod_{i in D_0} (x - beta^i)`` and ``d_1`` likewise, over GF(q)."""
    if not c.in_D0(q % c.n):
        raise NotInD0Error(
            f"q = {q} lies in D_1 mod n = {c.n}; Frobenius swaps the root sets of d_0 and d_1"
        )
    rt = root_table(c, q, ext_cap)
    return _base_poly_from_exps(rt, c.D0), _base_poly_from_exps(rt, c.D1)


def class_poly(c, q, i, ext_cap=EXT_DEGREE_CAP):
    """``omega_i = prod_{j in W_i} (x - beta^j)`` over GF(q^m)."""
    rt = root_table(c, q, ext_cap)
    return ExtPoly.from_roots(rt.field, rt.powers[c.W(i)])


def omega_poly(c, q):
    """``(x^n - 1)(x - 1) / ((x^n1 - 1)(x^n2 - 1))``: the product over all unit exponents."""
    num = Poly.xn_minus_one(c.n, q) * Poly([q - 1, 1], q)
    return num.exact_div(Poly.xn_minus_one(c.n1, q) * Poly.xn_minus_one(c.n2, q))


def theta_poly(c, q):
    """``sum_{i in D_0} x^i``; it vanishes at ``beta`` exactly when ``Lambda(beta) = 0``."""
    return Poly.from_support(c.D0, c.n, q)


def split_without_beta(c, q):
    """``(gcd(omega, theta), omega / gcd)`` computed over GF(q) alone.

    When ``Lambda(beta)`` lies in ``{0, -1}`` the gcd is the factor ``d_j`` whose
    roots make ``Lambda`` vanish; the labelling ``j`` itself depends on ``beta``.
    """
    w = omega_poly(c, q)
    h = poly_gcd(w, theta_poly(c, q))
    return h, w.exact_div(h).monic()


# predicted generator


@dataclass(frozen=True, eq=False)
class GeneratorPrediction:
    gen: Poly | None
    candidates: tuple
    branch: int | None
    ambiguous: bool
    report: CaseReport
    note: str = ""

    @property
    def linear_complexity(self):
        g = self.gen if self.gen is not None else self.candidates[0]
        return g.deg


def removed_base_factor(c, q, d1, d2, d):
    """Product of the factors of ``x^n - 1`` that do not depend on ``beta``."""
    G = Poly.one(q)
    xm1 = Poly([q - 1, 1], q)
    if d == 0:
        G = G * xm1
    if d1 == 0:
        G = G * Poly.xn_minus_one(c.n2, q).exact_div(xm1)
    if d2 == 0:
        G = G * Poly.xn_minus_one(c.n1, q).exact_div(xm1)
    return G


def predicted_linear_complexity(c, q):
    """Linear span read off the case table."""
    d1, d2, d = discriminants(c, q)
    removed = (d == 0) + (d1 == 0) * (c.n2 - 1) + (d2 == 0) * (c.n1 - 1)
    if quarter_vanishes(c.n, q):
        removed += 3 * c.e
    return c.n - removed


def theoretical_generator(c, q, ext_cap=EXT_DEGREE_CAP, computed=None):
    """Generator predicted by the case analysis.

    ``computed`` (the GCD generator) is only consulted when the extension cap
    prevents evaluating ``Lambda(beta)``; then both ``d_j`` candidates are
    returned and the matching one is reported.
    """
    report = classify_case(c, q, ext_cap)
    xn = Poly.xn_minus_one(c.n, q)
    base = removed_base_factor(c, q, report.delta1, report.delta2, report.delta)
    if not report.quarter_vanishes:
        g = xn.exact_div(base).monic()
        return GeneratorPrediction(g, (g,), None, False, report)
    if not report.q_in_d0:
        raise NotInD0Error(f"q = {q} not in D_0 although the quarter condition holds")
    if report.lambda_beta_case in (ZERO, MINUS_ONE):
        j = 0 if report.lambda_beta_case == ZERO else 1
        dj = d_polys(c, q, ext_cap)[j]
        g = xn.exact_div(base * dj).monic()
        return GeneratorPrediction(g, (g,), j, False, report)
    if report.lambda_beta_case == UNDECIDABLE:
        h, rest = split_without_beta(c, q)
        cands = tuple(xn.exact_div(base * f).monic() for f in (h, rest))
        note = f"extension degree {report.ext_degree} over cap {ext_cap}"
        if computed is not None:
            hits = [i for i, g in enumerate(cands) if g == computed.monic()]
            note += f"; GCD generator matches candidate {hits[0] if hits else 'none'}"
        return GeneratorPrediction(None, cands, None, True, report, note)
    raise ArithmeticError(f"Lambda(beta) outside {{0, -1}} for ({c.n1}, {c.n2}, {q})")


def factor_signature(c, q, gen):
    """Which factors of ``x^n - 1`` the generator omits, found by divisibility.

    Returns a frozenset over {"one", "P", "Q", "d"}: ``x - 1``,
    ``(x^n2 - 1)/(x - 1)``, ``(x^n1 - 1)/(x - 1)`` and a degree ``3e`` factor.
    """
    xn = Poly.xn_minus_one(c.n, q)
    G = xn.exact_div(gen)
    xm1 = Poly([q - 1, 1], q)
    sig = set()
    deg = G.deg
    if (G % xm1).is_zero():
        sig.add("one")
        deg -= 1
    if (G % Poly.xn_minus_one(c.n2, q).exact_div(xm1)).is_zero():
        sig.add("P")
        deg -= c.n2 - 1
    if (G % Poly.xn_minus_one(c.n1, q).exact_div(xm1)).is_zero():
        sig.add("Q")
        deg -= c.n1 - 1
    if deg == 3 * c.e:
        sig.add("d")
    elif deg != 0:
        sig.add(f"other:{deg}")
    return frozenset(sig)


# residue-class clauses for q = 2, 3, 5: (modulus, {(n1 mod, n2 mod): signature})
_ONE, _P, _Q, _D = "one", "P", "Q", "d"
RESIDUE_CLAUSES = {
    2: (
        24,
        {
            (13, 7): {_ONE}, (1, 19): {_ONE},
            (7, 19): {_ONE, _P}, (19, 7): {_ONE, _P},
            (7, 13): {_ONE, _P, _Q}, (19, 1): {_ONE, _P, _Q},
            (1, 7): {_ONE, _D}, (13, 19): {_ONE, _D},
            (7, 7): {_ONE, _P, _D}, (19, 19): {_ONE, _P, _D},
            (7, 1): {_ONE, _P, _Q, _D}, (19, 13): {_ONE, _P, _Q, _D},
        },
    ),
    3: (12, {(7, 7): {_ONE, _Q, _D}}),
    5: (
        60,
        {
            **{k: set() for k in [(1, 43), (1, 7), (31, 43), (31, 7), (31, 13), (31, 37)]},
            **{k: {_ONE, _P} for k in [(19, 13), (19, 7), (19, 43), (49, 43), (49, 7)]},
            **{k: {_ONE, _Q} for k in [(43, 1), (7, 1), (43, 31), (7, 31), (37, 31), (13, 31)]},
            **{
                k: {_D}
                for k in [(1, 19), (31, 49), (13, 43), (37, 7), (43, 13), (7, 37), (31, 19), (13, 7), (37, 43)]
            },
            **{k: {_ONE, _P, _D} for k in [(19, 19), (19, 49), (49, 19)]},
            **{k: {_ONE, _Q, _D} for k in [(1, 31), (31, 1)]},
            **{k: {_ONE, _P, _Q, _D} for k in [(19, 31), (19, 1), (49, 31)]},
        },
    ),
}


def residue_clause(n1, n2, q):
    """``(modulus, residues, expected signature)`` or ``None`` when no clause covers the pair."""
    if q not in RESIDUE_CLAUSES:
        return None
    mod, table = RESIDUE_CLAUSES[q]
    key = (n1 % mod, n2 % mod)
    if key not in table:
        return None
    return mod, key, frozenset(table[key])


# encoding and distance


def encode(code, message):
    msg = np.asarray(message, dtype=np.int64)
    if msg.shape != (code.k,):
        raise ValueError(f"message length {msg.size} != k = {code.k}")
    return (Poly(msg, code.q) * code.gen).padded(code.n)


@dataclass(frozen=True)
class DistanceInfo:
    lower: int
    upper: int
    method: str
    exact: int | None = None
    witness: tuple | None = field(default=None, compare=False)
    detail: str = ""

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(f"lower bound {self.lower} exceeds upper bound {self.upper}")
        if self.exact is not None and not (self.lower == self.exact == self.upper):
            raise ValueError("exact distance must equal both bounds")

    def to_dict(self):
        return {
            "exact": self.exact,
            "lower": self.lower,
            "upper": self.upper,
            "method": self.method,
            "witnessWeight": None if self.witness is None else int(np.count_nonzero(self.witness)),
            "detail": self.detail,
        }

    @classmethod
    def from_dict(cls, d):
        return cls(d["lower"], d["upper"], d["method"], d["exact"], None, d.get("detail", ""))


def _pack_rows(G):
    """Pack 0/1 rows into uint64 words."""
    k, n = G.shape
    words = -(-n // 64)
    padded = np.zeros((k, words * 64), dtype=np.uint8)
    padded[:, :n] = G
    return np.packbits(padded, axis=1, bitorder="little").view(np.uint64)


def _unpack(row, n):
    return np.unpackbits(row.view(np.uint8), bitorder="little")[:n].astype(np.int64)


def min_distance_exact(code, budget=DEFAULT_BUDGET):
    """Minimum weight over all ``q^k - 1`` nonzero codewords."""
    k, q, n = code.k, code.q, code.n
    if k == 0:
        raise ValueError("the zero code has no nonzero codewords")
    total = q**k - 1
    if total > budget:
        raise BudgetExceeded(f"{total} codewords exceed budget {budget}")
    G = code.generator_matrix()
    if q == 2:
        best, word = _exhaustive_binary(G)
        witness = _unpack(word, n)
    else:
        best, witness = _exhaustive_qary(G, q)
    return DistanceInfo(best, best, EXHAUSTIVE, best, tuple(int(v) for v in witness), f"{total} codewords")


def _exhaustive_binary(G):
    # all combinations of the low rows as a table, Gray code over the rest
    k = G.shape[0]
    packed = _pack_rows(G)
    lo = min(k, 12)
    table = np.zeros((1 << lo, packed.shape[1]), dtype=np.uint64)
    for i in range(lo):
        table[1 << i : 1 << (i + 1)] = table[: 1 << i] ^ packed[i]
    best, best_word = None, None
    cur = np.zeros(packed.shape[1], dtype=np.uint64)
    hi = k - lo
    for step in range(1 << hi):
        if step:
            bit = (step & -step).bit_length() - 1
            cur = cur ^ packed[lo + bit]
        words = table ^ cur
        weights = np.bitwise_count(words).sum(axis=1)
        if step == 0:
            weights[0] = np.iinfo(np.int64).max
        i = int(np.argmin(weights))
        if best is None or weights[i] < best:
            best, best_word = int(weights[i]), words[i].copy()
    return best, best_word


def _exhaustive_qary(G, q, chunk=1 << 14):
    k, n = G.shape
    total = q**k
    best, witness = None, None
    powers = q ** np.arange(k, dtype=np.int64)
    for start in range(1, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        msgs = (idx[:, None] // powers) % q
        words = msgs @ G % q
        weights = np.count_nonzero(words, axis=1)
        i = int(np.argmin(weights))
        if best is None or weights[i] < best:
            best, witness = int(weights[i]), words[i]
    return best, witness


def systematic_form(G, q, order):
    """Row-reduce ``G`` over GF(q) choosing pivots along the column ``order``."""
    G = (G % q).astype(np.uint8 if q == 2 else np.int64)
    k = G.shape[0]
    r = 0
    for col in order:
        if r == k:
            break
        nz = np.flatnonzero(G[r:, col])
        if not nz.size:
            continue
        piv = r + nz[0]
        if piv != r:
            G[[r, piv]] = G[[piv, r]]
        if q != 2:
            G[r] = G[r] * pow(int(G[r, col]), -1, q) % q
        rows = np.flatnonzero(G[:, col])
        rows = rows[rows != r]
        if rows.size:
            if q == 2:
                G[rows] ^= G[r]
            else:
                G[rows] = (G[rows] - np.outer(G[rows, col], G[r])) % q
        r += 1
    return G[:r].astype(np.int64)


def min_distance_upper(code, trials=2000, seed=0, depth=2):
    """Information-set search: systematic rows and sums of at most ``depth`` (1 or 2) rows."""
    if code.k < 1:
        raise ValueError("code has dimension 0")
    rng = np.random.default_rng(seed)
    G0 = code.generator_matrix()
    q, n = code.q, code.n
    best = code.gen.weight()
    witness = code.gen.padded(n)
    for _ in range(trials):
        S = systematic_form(G0, q, rng.permutation(n))
        w = np.count_nonzero(S, axis=1)
        i = int(np.argmin(w))
        if w[i] < best:
            best, witness = int(w[i]), S[i]
        if depth >= 2 and len(S) > 1:
            wt, word = _best_pair(S, q)
            if wt < best:
                best, witness = wt, word
    return DistanceInfo(1, best, RANDOM_SEARCH, None, tuple(int(v) for v in witness), f"{trials} trials, seed {seed}")


def _best_pair(S, q):
    k = len(S)
    iu, ju = np.triu_indices(k, 1)
    best, word = None, None
    if q == 2:
        packed = _pack_rows(S)
        weights = np.bitwise_count(packed[iu] ^ packed[ju]).sum(axis=1)
        t = int(np.argmin(weights))
        return int(weights[t]), (S[iu[t]] + S[ju[t]]) % 2
    for a in range(1, q):
        words = (S[iu] + a * S[ju]) % q
        weights = np.count_nonzero(words, axis=1)
        t = int(np.argmin(weights))
        if best is None or weights[t] < best:
            best, word = int(weights[t]), words[t]
    return best, word


# bounds from code shape


SHAPES = ("single", "double", "single-d", "double-d")


def sqrt_lower(target):
    r = isqrt(target)
    return r if r * r == target else r + 1


def quadratic_lower(target):
    d = 1
    while d * d - d + 1 < target:
        d += 1
    return d


def shape_generator(c, q, kind, i=None, dj=None):
    """Generator for the named shape; ``i`` picks which ``x^{n_i} - 1`` is removed."""
    xn = Poly.xn_minus_one(c.n, q)
    ni = {1: c.n1, 2: c.n2}
    if kind == "single":
        return xn.exact_div(Poly.xn_minus_one(ni[i], q))
    den = Poly.xn_minus_one(c.n1, q) * Poly.xn_minus_one(c.n2, q)
    if kind == "double":
        return (xn * Poly([q - 1, 1], q)).exact_div(den)
    if kind == "single-d":
        return xn.exact_div(Poly.xn_minus_one(ni[i], q) * dj)
    if kind == "double-d":
        return (xn * Poly([q - 1, 1], q)).exact_div(den * dj)
    raise ValueError(f"unknown shape {kind!r}")


def distance_bounds(c, q, kind, i=None, gen=None):
    """Distance information for the code shapes with known exact values or lower bounds.

    ``single``: ``(x^n-1)/(x^{n_i}-1)``, exact distance the other prime.
    ``double``: ``(x^n-1)(x-1)/((x^n1-1)(x^n2-1))``, exact ``min(n1, n2)``.
    ``single-d`` / ``double-d``: the same divided by ``d_j``; square-root lower
    bound, raised by the quadratic inequality when ``-1`` lies in ``D_1``.
    The upper bound comes from an explicit codeword of weight ``target``, or
    from ``gen`` itself when that is lighter.
    """
    other = {1: c.n2, 2: c.n1}
    if kind == "single":
        d = other[i]
        return DistanceInfo(d, d, SINGLE_QUOTIENT, d)
    if kind == "double":
        d = min(c.n1, c.n2)
        return DistanceInfo(d, d, DOUBLE_QUOTIENT, d)
    if kind not in ("single-d", "double-d"):
        raise ValueError(f"unknown shape {kind!r}")
    if not c.in_D0(q % c.n):
        raise NotInD0Error(f"q = {q} is not in D_0; the bound needs d_j over GF(q)")
    target = other[i] if kind == "single-d" else min(c.n1, c.n2)
    lower, method = sqrt_lower(target), SQRT_BOUND
    if minus_one_in_d1(c):
        lower, method = max(lower, quadratic_lower(target)), QUADRATIC_BOUND
    # gen divides (x^n - 1)/(x^{n_i} - 1), a word of weight n/n_i; for the double
    # shape take the larger prime, leaving weight min(n1, n2)
    word = shape_generator(c, q, "single", i if kind == "single-d" else 2)
    witness = tuple(int(v) for v in word.padded(c.n))
    upper = target
    if gen is not None and gen.weight() < upper:
        upper, witness = gen.weight(), tuple(int(v) for v in gen.padded(c.n))
    return DistanceInfo(lower, max(lower, upper), method, None, witness, f"target {target}")


def minus_one_in_d1(c):
    return c.class_index(c.n - 1) % 2 == 1


def infer_shape(c, q, gen):
    """``(kind, i)`` for generators of a known shape, else ``None``."""
    sig = factor_signature(c, q, gen)
    table = {
        frozenset({"one", "P"}): ("single", 2),
        frozenset({"one", "Q"}): ("single", 1),
        frozenset({"one", "P", "Q"}): ("double", None),
        frozenset({"one", "P", "d"}): ("single-d", 2),
        frozenset({"one", "Q", "d"}): ("single-d", 1),
        frozenset({"one", "P", "Q", "d"}): ("double-d", None),
    }
    return table.get(sig)

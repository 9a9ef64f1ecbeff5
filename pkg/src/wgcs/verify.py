"""Machine checks of every combinatorial and in-field identity, and the analysis report."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from math import gcd

import numpy as np
from sympy import primerange

from . import codes as cd
from .cyclotomy import (
    ORDER,
    P_LABEL,
    Q_LABEL,
    ClosedFormMismatch,
    class_product,
    closed_form_cyclotomic_numbers,
    cyclotomic_table,
    difference_count_on_pq,
    equality_pattern_holds,
    minus_one_class,
    minus_one_class_expected,
    minus_one_congruence_class,
    solve_quadform_reps,
    whiteman,
)
from .gf import EXT_DEGREE_CAP, ExtensionCapError, ExtPoly, legendre, ord_mod
from .polyalg import (
    Poly,
    annihilates,
    bm_linear_complexity,
    linear_complexity,
    minimal_poly,
    poly_gcd,
    poly_lcm,
    to_coeff_text,
    to_human,
)
from .sequence import (
    acf_numerators,
    acf_spectrum,
    balance_weight,
    component_counts,
    dcount,
    predicted_component_counts,
    theoretical_acf_values,
    wgcs1,
)

SCHEMA = 1
FULL_SCAN_LIMIT = 2000
SHAPE_BUDGET = 2**20


@dataclass(frozen=True)
class Check:
    id: str
    passed: bool | None
    detail: str = ""

    def __post_init__(self):
        if self.passed is not None:
            object.__setattr__(self, "passed", bool(self.passed))


def _plain(obj):
    """Recursively turn numpy scalars and tuples into JSON-native values."""
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.generic):
        return obj.item()
    return obj


def _sample(values, limit, rng):
    values = np.asarray(values)
    if len(values) <= limit:
        return values
    return np.sort(rng.choice(values, size=limit, replace=False))


def _shifts(c, rng, limit=FULL_SCAN_LIMIT):
    return _sample(np.arange(1, c.n), limit, rng)


# cyclotomy


def cyclotomy_checks(c, rng=None):
    rng = rng or np.random.default_rng(0)
    out = []
    sizes = c.classes.sizes()
    want = {**{f"W{i}": c.e for i in range(ORDER)}, "P": c.n2 - 1, "Q": c.n1 - 1, "ZERO": 1}
    out.append(Check("partition", sizes == want, f"sizes {sizes}"))

    bad = []
    for i in range(ORDER):
        members = c.W(i)
        for r in {int(members[0]), int(rng.choice(members))}:
            for j in range(ORDER):
                if not np.array_equal(class_product(c, r, j), c.W(i + j)):
                    bad.append((i, r, j))
    out.append(Check("coset-action", not bad, f"failures {bad[:3]}" if bad else "r W_j = W_(i+j) for all i, j"))

    bad = []
    lab = c.classes.labels
    for t in np.flatnonzero((lab == P_LABEL) | (lab == Q_LABEL)):
        for i in range(ORDER):
            counts = np.bincount(lab[(c.W(i) + t) % c.n], minlength=9)[:ORDER]
            for j in range(ORDER):
                if counts[j] != difference_count_on_pq(c, i, j, int(t)):
                    bad.append((int(t), i, j))
    out.append(Check("difference-counts-on-P-Q", not bad, f"failures {bad[:3]}" if bad else "all t in P and Q"))

    k = minus_one_class(c)
    exp_parity = minus_one_class_expected(c)
    exp_cong = minus_one_congruence_class(c.n1, c.n2)
    out.append(
        Check(
            "minus-one-class",
            k == exp_parity == exp_cong,
            f"-1 in W{k}; eta parity predicts W{exp_parity}; n mod 12 = {c.n % 12} predicts W{exp_cong}",
        )
    )

    try:
        wit = closed_form_cyclotomic_numbers(c)
        pattern = equality_pattern_holds(cyclotomic_table(c), c.eta % 2 == 1)
        out.append(
            Check(
                "cyclotomic-closed-forms",
                pattern,
                f"witness (x,y,a,b,c,d) = {wit.signs}; equality pattern {'holds' if pattern else 'broken'}",
            )
        )
    except ClosedFormMismatch as exc:
        out.append(Check("cyclotomic-closed-forms", False, str(exc)))
    return out


# sequence


def sequence_checks(c, rng=None):
    rng = rng or np.random.default_rng(0)
    s = wgcs1(c)
    out = []
    emp = acf_numerators(s)
    theo = theoretical_acf_values(c)
    bad = np.flatnonzero(emp != theo)
    out.append(
        Check("acf-closed-form", not bad.size, f"mismatch at shifts {bad[:5].tolist()}" if bad.size else f"all {c.n - 1} shifts")
    )
    shifts = _shifts(c, rng)
    bad = [int(w) for w in shifts if c.n - 4 * dcount(s, 1, 0, int(w)) != emp[w]]
    out.append(Check("acf-difference-identity", not bad, f"{len(shifts)} shifts checked"))

    mism = {}
    for w in shifts:
        got = component_counts(c, int(w))
        pred = predicted_component_counts(c, int(w))
        for name in got:
            if pred[name] is not None and pred[name] != got[name]:
                mism.setdefault(name, int(w))
    for name in ("odd-vs-even", "P-vs-even", "odd-vs-QR", "P-vs-QR"):
        out.append(
            Check(
                f"component-{name}",
                name not in mism,
                f"first mismatch at w = {mism[name]}" if name in mism else f"{len(shifts)} shifts checked",
            )
        )
    out.append(Check("balance", s.weight() == balance_weight(c), f"weight {s.weight()}"))
    return out


# codes


def code_checks(c, q, ext_cap=EXT_DEGREE_CAP, rng=None, code=None):
    rng = rng or np.random.default_rng(0)
    out = []
    s = wgcs1(c, q)
    lc = linear_complexity(s)
    bm = bm_linear_complexity(s)
    out.append(Check("lc-gcd-vs-bm", lc == bm, f"gcd {lc}, Berlekamp-Massey {bm}"))
    mp = minimal_poly(s)
    out.append(
        Check(
            "minimal-poly-annihilates",
            mp.deg == lc and annihilates(mp, np.tile(s.values, 2), q),
            f"degree {mp.deg} over two periods",
        )
    )
    code = code or cd.code_from_sequence(s)
    xn = Poly.xn_minus_one(c.n, q)
    out.append(Check("generator-divides-xn-1", (xn % code.gen).is_zero(), f"[{code.n},{code.k}]"))

    pred = cd.theoretical_generator(c, q, ext_cap, computed=code.gen)
    L_table = cd.predicted_linear_complexity(c, q)
    if pred.ambiguous:
        match = code.gen in pred.candidates
        detail = pred.note
    else:
        match = pred.gen == code.gen
        detail = f"part {pred.report.part}, branch d_{pred.branch}" if pred.branch is not None else f"part {pred.report.part}"
    out.append(Check("generator-case-table", match and L_table == lc, f"{detail}; table L = {L_table}, gcd L = {lc}"))

    lam_one = Poly.from_support(c.C1, c.n, q)(1)
    out.append(
        Check(
            "lambda-at-one",
            lam_one == pred.report.delta,
            f"Lambda(1) = {lam_one}, (n1+1)(n2-1)/2 mod {q} = {pred.report.delta}",
        )
    )

    if pred.report.quarter_vanishes:
        out.append(Check("q-in-d0-sufficient", pred.report.q_in_d0, f"q mod n = {q % c.n}"))
    else:
        out.append(Check("q-in-d0-sufficient", None, "hypotheses do not hold"))

    try:
        rt = cd.root_table(c, q, ext_cap)
    except ExtensionCapError as exc:
        for cid in ("class-sums", "lambda-power-table", "lambda-frobenius", "lambda-quadratic", "d-poly-factorization"):
            out.append(Check(cid, None, str(exc)))
        return out
    out.extend(_beta_checks(c, q, rt, rng))
    return out


def _beta_checks(c, q, rt, rng):
    out = []
    F = rt.field
    lab = c.classes.labels
    bad = []
    for code_, want in ((P_LABEL, -((c.n1 - 1) // 6)), (Q_LABEL, -((c.n2 - 1) // 6))):
        for t in _sample(np.flatnonzero(lab == code_), 6, rng):
            for j in range(ORDER):
                got = F(cd.class_sum(rt, c, j, int(t)))
                if got != F(want):
                    bad.append((int(t), j))
    out.append(Check("class-sums", not bad, f"failures {bad[:3]}" if bad else "t in P and Q, every class"))

    lam = F(cd.lambda_at(rt, c, 1))
    ts = _sample(np.arange(c.n), FULL_SCAN_LIMIT, rng)
    bad = [int(t) for t in ts if F(cd.lambda_at(rt, c, int(t))) != cd.predicted_lambda_at(c, q, int(t), lam)]
    out.append(Check("lambda-power-table", not bad, f"failures at t = {bad[:3]}" if bad else f"{len(ts)} exponents"))

    lhs = lam**q
    rhs = lam if c.in_D0(q % c.n) else -(lam + 1)
    out.append(Check("lambda-frobenius", lhs == rhs, f"q in {'D0' if c.in_D0(q % c.n) else 'D1'}"))

    r = c.n % 12
    target = (c.n - 1) // 4 if r == 1 else -((c.n + 1) // 4)
    out.append(Check("lambda-quadratic", lam * (lam + 1) == F(target), f"n mod 12 = {r}, target {target % q}"))

    if c.in_D0(q % c.n):
        d0, d1 = cd.d_polys(c, q)
        xn = Poly.xn_minus_one(c.n, q)
        rest = (Poly.xn_minus_one(c.n1, q) * Poly.xn_minus_one(c.n2, q)).exact_div(Poly([q - 1, 1], q))
        ok = d0.deg == d1.deg == 3 * c.e and d0 * d1 * rest == xn
        out.append(Check("d-poly-factorization", ok, f"deg d0 = {d0.deg}, deg d1 = {d1.deg}"))
    else:
        out.append(Check("d-poly-factorization", None, "q lies in D1"))
    return out


def field_checks(c, q, ext_cap=EXT_DEGREE_CAP, rng=None, trials=20):
    rng = rng or np.random.default_rng(0)
    ords = (ord_mod(q, c.n), ord_mod(q, c.n1), ord_mod(q, c.n2))
    out = [Check("ord-mod-lcm", ords[0] == np.lcm(ords[1], ords[2]), f"ord_n q = {ords[0]}")]
    try:
        rt = cd.root_table(c, q, ext_cap)
    except ExtensionCapError as exc:
        return out + [Check(cid, None, str(exc)) for cid in ("field-axioms", "frobenius", "primitive-root-order")]
    F = rt.field

    def rand():
        return F(rng.integers(0, q, F.m).tolist())

    bad = 0
    for _ in range(trials):
        a, b, x = rand(), rand(), rand()
        bad += (a + b) + x != a + (b + x)
        bad += a * (b + x) != a * b + a * x
        if not a.is_zero():
            bad += a * a.inverse() != F.one()
    out.append(Check("field-axioms", bad == 0, f"{trials} random triples in GF({q}^{F.m})"))
    bad = sum(a ** F.order != a for a in (rand() for _ in range(trials)))
    out.append(Check("frobenius", bad == 0, f"a^(q^m) = a on {trials} samples"))
    beta = rt.elem(1)
    primes = [int(r) for r in primerange(2, c.n + 1) if c.n % r == 0]
    ok = beta**c.n == F.one() and all(beta ** (c.n // r) != F.one() for r in primes)
    out.append(Check("primitive-root-order", ok, f"beta^n = 1, beta^(n/r) != 1 for r in {primes}"))
    return out


def gcd_checks(q, rng=None, trials=20, max_deg=12):
    rng = rng or np.random.default_rng(0)
    bad = 0
    for _ in range(trials):
        a = Poly(rng.integers(0, q, rng.integers(1, max_deg + 2)), q)
        b = Poly(rng.integers(0, q, rng.integers(1, max_deg + 2)), q)
        if a.is_zero() or b.is_zero():
            continue
        g = poly_gcd(a, b)
        bad += g.lead != 1 or not (a % g).is_zero() or not (b % g).is_zero()
        bad += g * poly_lcm(a, b) != (a * b).monic()
    return [Check("poly-gcd", bad == 0, f"{trials} random pairs over GF({q})")]


def shape_distance_checks(c, q, budget=SHAPE_BUDGET):
    """Exhaustive distance of the quotient shapes against ``n1``, ``n2`` and ``min(n1, n2)``."""
    out = []
    for kind, i in (("single", 1), ("single", 2), ("double", None)):
        cid = f"shape-distance-{kind}" + (f"-{i}" if i else "")
        gen = cd.shape_generator(c, q, kind, i)
        code = cd.CyclicCode(c.n, q, gen)
        want = cd.distance_bounds(c, q, kind, i).exact
        try:
            got = cd.min_distance_exact(code, budget).exact
        except cd.BudgetExceeded as exc:
            out.append(Check(cid, None, str(exc)))
            continue
        out.append(Check(cid, got == want, f"[{code.n},{code.k}] exhaustive {got}, expected {want}"))
    return out


def class_poly_checks(c, q, ext_cap=EXT_DEGREE_CAP):
    """Product of the six class polynomials against the unit part of ``x^n - 1``."""
    try:
        rt = cd.root_table(c, q, ext_cap)
    except ExtensionCapError as exc:
        return [Check("class-poly-product", None, str(exc))]
    polys = [cd.class_poly(c, q, i, ext_cap) for i in range(ORDER)]
    prod = polys[0]
    for f in polys[1:]:
        prod = prod * f
    omega = ExtPoly.lift(rt.field, cd.omega_poly(c, q))
    degs = [f.deg for f in polys]
    return [Check("class-poly-product", prod == omega and degs == [c.e] * ORDER, f"degrees {degs}")]


def legendre_two_check(limit=1000):
    bad = []
    for p in primerange(3, limit):
        by_mod8 = 1 if p % 8 in (1, 7) else -1
        if legendre(2, p) != by_mod8:
            bad.append(p)
        if p % 24 in (1, 7) and legendre(2, p) != 1 or p % 24 in (13, 19) and legendre(2, p) != -1:
            bad.append(p)
    return Check("legendre-two", not bad, f"primes below {limit}")


def all_checks(c, q, ext_cap=EXT_DEGREE_CAP, seed=0, code=None, shape_budget=SHAPE_BUDGET):
    rng = np.random.default_rng(seed)
    out = cyclotomy_checks(c, rng) + sequence_checks(c, rng)
    if q is not None:
        out += field_checks(c, q, ext_cap, rng) + gcd_checks(q, rng)
        out += code_checks(c, q, ext_cap, rng, code)
        out += class_poly_checks(c, q, ext_cap) if c.e <= 60 else []
        out += shape_distance_checks(c, q, shape_budget)
    out.append(legendre_two_check())
    return out


def checks_pass(checks):
    return all(ch.passed is not False for ch in checks)


# report


@dataclass
class AnalysisReport:
    params: dict
    classSizes: dict
    minusOneClass: int
    cyclotomicNumbers: list
    quadForms: dict
    acfSpectrum: dict
    linearComplexity: dict
    caseReport: dict
    generator: dict
    dimension: int
    distanceInfo: dict | None
    theoremChecks: list = field(default_factory=list)
    schema: int = SCHEMA

    def __post_init__(self):
        for name, value in vars(self).items():
            setattr(self, name, _plain(value))

    def to_dict(self):
        return asdict(self)

    def to_json(self, indent=2):
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, d):
        d = dict(d)
        if d.get("schema") != SCHEMA:
            raise ValueError(f"unsupported schema {d.get('schema')!r}")
        return cls(**d)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    @property
    def passed(self):
        return all(ch["passed"] is not False for ch in self.theoremChecks)


def estimate_distance(c, q, code, budget=cd.DEFAULT_BUDGET, trials=200, seed=0, mode="auto"):
    if code.k == 0:
        return cd.DistanceInfo(0, 0, cd.EXHAUSTIVE, 0, None, "zero code")
    bounds = None
    shape = cd.infer_shape(c, q, code.gen)
    if shape is not None:
        try:
            bounds = cd.distance_bounds(c, q, *shape, gen=code.gen)
        except cd.NotInD0Error:
            bounds = None
    if mode != "random" and bounds is not None and bounds.exact is not None:
        return bounds
    if mode == "exhaustive" or (mode == "auto" and q**code.k - 1 <= budget):
        return cd.min_distance_exact(code, budget)
    found = cd.min_distance_upper(code, trials, seed)
    if bounds is None:
        return found
    best = found if found.upper <= bounds.upper else bounds
    detail = f"{found.detail} found {found.upper}; lower bound by {bounds.method}, {bounds.detail}"
    return cd.DistanceInfo(bounds.lower, max(bounds.lower, best.upper), cd.RANDOM_SEARCH, None, best.witness, detail)


def analyze(n1, n2, q, g=None, ext_cap=EXT_DEGREE_CAP, budget=cd.DEFAULT_BUDGET, trials=200, seed=0, distance=True):
    c = whiteman(n1, n2, g)
    if gcd(c.n, q) != 1:
        raise ValueError(f"gcd(n, q) = gcd({c.n}, {q}) != 1")
    s = wgcs1(c, q)
    code = cd.code_from_sequence(s)
    checks = all_checks(c, q, ext_cap, seed, code, min(budget, SHAPE_BUDGET))
    report = cd.classify_case(c, q, ext_cap)
    reps = solve_quadform_reps(n1, n2)
    try:
        wit = list(closed_form_cyclotomic_numbers(c, reps).signs)
    except ClosedFormMismatch:
        wit = None
    spectrum = acf_spectrum(wgcs1(c))
    dist = estimate_distance(c, q, code, budget, trials, seed) if distance else None
    return AnalysisReport(
        params={"n1": n1, "n2": n2, "q": q, "n": c.n, "g": c.g, "u": c.u, "e": c.e, "eta": c.eta},
        classSizes=c.classes.sizes(),
        minusOneClass=minus_one_class(c),
        cyclotomicNumbers=cyclotomic_table(c).tolist(),
        quadForms={
            "x": reps.repX, "y": reps.repY, "a": reps.repA, "b": reps.repB,
            "c": reps.repC, "d": reps.repD, "M": reps.bigM, "witness": wit,
        },
        acfSpectrum={str(k): len(v) for k, v in sorted(spectrum.items(), key=lambda kv: -kv[0].sort_key())},
        linearComplexity={"gcd": linear_complexity(s), "bm": bm_linear_complexity(s)},
        caseReport=report.to_dict(),
        generator={"coeffs": to_coeff_text(code.gen), "human": to_human(code.gen), "degree": code.gen.deg},
        dimension=code.k,
        distanceInfo=None if dist is None else dist.to_dict(),
        theoremChecks=[asdict(ch) for ch in checks],
    )


# sweep


def sweep_row(n1, n2, q, ext_cap=EXT_DEGREE_CAP, acf=True):
    """One sweep line: GCD generator against the case table, BM, ACF and the residue clause."""
    c = whiteman(n1, n2)
    s = wgcs1(c, q)
    code = cd.code_from_sequence(s)
    L = code.gen.deg
    bm = bm_linear_complexity(s)
    pred = cd.theoretical_generator(c, q, ext_cap, computed=code.gen)
    gen_ok = code.gen in pred.candidates if pred.ambiguous else pred.gen == code.gen
    clause = cd.residue_clause(n1, n2, q)
    sig = cd.factor_signature(c, q, code.gen)
    acf_ok = bool(np.array_equal(acf_numerators(wgcs1(c)), theoretical_acf_values(c))) if acf else None
    table_L = cd.predicted_linear_complexity(c, q)
    return _plain({
        "n1": n1,
        "n2": n2,
        "q": q,
        "n": c.n,
        "k": code.k,
        "lcGcd": L,
        "lcBm": bm,
        "lcTable": table_L,
        "part": pred.report.part,
        "lambdaBetaCase": pred.report.lambda_beta_case,
        "generatorMatches": gen_ok,
        "generatorChecked": "candidates" if pred.ambiguous else "exact",
        "omitted": sorted(sig),
        "clause": None if clause is None else f"({clause[1][0]},{clause[1][1]}) mod {clause[0]}",
        "clauseAgrees": None if clause is None else clause[2] == sig,
        "acfMatches": acf_ok,
        "passed": bool(gen_ok and L == bm == table_L and acf_ok is not False),
    })


def sweep(pairs, qs, ext_cap=EXT_DEGREE_CAP, jobs=1):
    tasks = [(n1, n2, q) for n1, n2 in pairs for q in qs if (n1 * n2) % q]
    if jobs > 1 and len(tasks) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(jobs) as ex:
            rows = list(ex.map(_sweep_task, [(t, ext_cap) for t in tasks]))
    else:
        rows = [sweep_row(*t, ext_cap) for t in tasks]
    return sorted(rows, key=lambda r: (r["n1"], r["n2"], r["q"]))


def _sweep_task(arg):
    (n1, n2, q), ext_cap = arg
    return sweep_row(n1, n2, q, ext_cap)

"""Binary sequences built from the order-six cyclotomy and their autocorrelation."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cyclotomy import P_LABEL, Q_LABEL, ZERO_LABEL, ORDER


@dataclass(frozen=True, eq=False)
class PeriodicSequence:
    n: int
    q: int
    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.int64) % self.q
        if v.ndim != 1 or len(v) != self.n:
            raise ValueError(f"sequence length {v.size} does not match period {self.n}")
        object.__setattr__(self, "values", v)

    @property
    def bits(self):
        return self.values

    def __getitem__(self, i):
        return int(self.values[i % self.n])

    def __eq__(self, other):
        return (
            isinstance(other, PeriodicSequence)
            and (self.n, self.q) == (other.n, other.q)
            and bool(np.array_equal(self.values, other.values))
        )

    def weight(self):
        return int(np.count_nonzero(self.values))

    def to_bitstring(self):
        return "".join(str(int(b)) for b in self.values)

    @classmethod
    def from_bitstring(cls, text, q=2):
        text = text.strip()
        return cls(len(text), q, np.array([int(ch) for ch in text], dtype=np.int64))


def _indicator(c, support, q):
    v = np.zeros(c.n, dtype=np.int64)
    v[support] = 1
    return PeriodicSequence(c.n, q, v)


def wgcs1(c, q=2):
    """First-class sequence: 1 on ``P`` and ``W_1, W_3, W_5``."""
    return _indicator(c, c.C1, q)


def wgcs2(c, q=2):
    """Second-class sequence: 1 on ``P`` and ``W_3, W_4, W_5``."""
    return _indicator(c, c.C1_star, q)


# autocorrelation


@dataclass(frozen=True, order=False)
class AcfValue:
    """Exact ``numerator / denominator`` with the denominator kept at the period."""

    numerator: int
    denominator: int

    def __str__(self):
        return f"{self.numerator}/{self.denominator}"

    def __float__(self):
        return self.numerator / self.denominator

    @classmethod
    def parse(cls, text):
        a, b = text.split("/")
        return cls(int(a), int(b))

    def sort_key(self):
        return self.numerator * 1.0 / self.denominator


def _require_binary(s):
    if s.q != 2 and np.any(s.values > 1):
        raise ValueError("autocorrelation is defined for binary sequences only")


def _signs(s):
    return 1 - 2 * s.values


def autocorrelation(s, w):
    _require_binary(s)
    x = _signs(s)
    return AcfValue(int(np.dot(x, np.roll(x, -(w % s.n)))), s.n)


def acf_numerators(s):
    """Unnormalised autocorrelation at every shift ``0..n-1``."""
    _require_binary(s)
    x = _signs(s)
    n = s.n
    out = np.empty(n, dtype=np.int64)
    doubled = np.concatenate([x, x])
    for w in range(n):
        out[w] = np.dot(x, doubled[w : w + n])
    return out


def acf_spectrum(s):
    """Map each distinct ACF value over shifts ``1..n-1`` to the sorted shifts attaining it."""
    nums = acf_numerators(s)
    spectrum = {}
    for val in np.unique(nums[1:]):
        spectrum[AcfValue(int(val), s.n)] = (np.flatnonzero(nums[1:] == val) + 1).tolist()
    return spectrum


def theoretical_acf(c, w):
    """Predicted autocorrelation of the first-class sequence at shift ``w``."""
    n, n1, n2 = c.n, c.n1, c.n2
    code = c.classes.code(w)
    if code == ZERO_LABEL:
        raise ValueError("shift w must be nonzero modulo n")
    if code == P_LABEL:
        return AcfValue(n2 - n1 - 3, n)
    if code == Q_LABEL:
        return AcfValue(n1 - n2 + 1, n)
    if c.eta % 2 == 0:
        return AcfValue(-1, n)
    return AcfValue(1 if code % 2 == 0 else -3, n)


def theoretical_acf_values(c):
    """Predicted values for shifts ``0..n-1`` as numerators over ``n``."""
    lab = c.classes.labels
    out = np.empty(c.n, dtype=np.int64)
    out[0] = c.n
    out[lab == P_LABEL] = c.n2 - c.n1 - 3
    out[lab == Q_LABEL] = c.n1 - c.n2 + 1
    units = lab < ORDER
    if c.eta % 2 == 0:
        out[units] = -1
    else:
        out[units & (lab % 2 == 0)] = 1
        out[units & (lab % 2 == 1)] = -3
    return out


def dcount(s, i, j, w):
    """``|C_i & (C_j + w)|`` where ``C_b`` is the set of positions holding bit ``b``."""
    if w % s.n == 0:
        raise ValueError("shift w must be nonzero modulo n")
    if i not in (0, 1) or j not in (0, 1):
        raise ValueError("i and j must be 0 or 1")
    # t in C_j + w  <=>  s[t - w] == j
    shifted = np.roll(s.values, w % s.n)
    return int(np.count_nonzero((s.values == i) & (shifted == j)))


# components of d(1, 0; w) with R = {0}


def _count_in(c, a_mask, b_mask, w):
    """``|A & (B + w)|`` for boolean masks over ``Z_n``."""
    return int(np.count_nonzero(a_mask & np.roll(b_mask, w % c.n)))


def component_masks(c):
    lab = c.classes.labels
    units = lab < ORDER
    odd = units & (lab % 2 == 1)
    even = units & (lab % 2 == 0)
    p = lab == P_LABEL
    qr = (lab == Q_LABEL) | (lab == ZERO_LABEL)
    return {"odd": odd, "even": even, "P": p, "QR": qr}


COMPONENTS = (
    ("odd-vs-even", "odd", "even"),
    ("P-vs-even", "P", "even"),
    ("odd-vs-QR", "odd", "QR"),
    ("P-vs-QR", "P", "QR"),
)


def component_counts(c, w):
    """The four intersection counts that sum to ``d(1, 0; w)``."""
    masks = component_masks(c)
    return {name: _count_in(c, masks[a], masks[b], w) for name, a, b in COMPONENTS}


def predicted_component_counts(c, w):
    """Closed-form values of the four counts; ``None`` where no prediction is made."""
    n1, n2 = c.n1, c.n2
    code = c.classes.code(w)
    if code == ZERO_LABEL:
        raise ValueError("shift w must be nonzero modulo n")
    unit = code < ORDER
    in_d0 = unit and code % 2 == 0
    eta_odd = c.eta % 2 == 1
    M = c.big_m
    out = {}

    if not unit:
        out["odd-vs-even"] = None
    elif eta_odd:
        out["odd-vs-even"] = 3 * M // 2
    else:
        out["odd-vs-even"] = (3 * M - 1) // 2 if in_d0 else (3 * M + 1) // 2

    half2 = (n2 - 1) // 2
    if code == P_LABEL:
        out["P-vs-even"] = 0
    elif code == Q_LABEL:
        out["P-vs-even"] = half2
    elif in_d0 != eta_odd:
        # D0 when eta even, D1 when eta odd
        out["P-vs-even"] = half2
    else:
        out["P-vs-even"] = half2 - 1

    out["odd-vs-QR"] = 0 if code == Q_LABEL else (n1 - 1) // 2
    out["P-vs-QR"] = 0 if code == Q_LABEL else 1
    return out


def balance_weight(c):
    """Predicted one-period weight ``(n2 - 1) + (n1 - 1)(n2 - 1)/2``."""
    return (c.n2 - 1) + (c.n1 - 1) * (c.n2 - 1) // 2

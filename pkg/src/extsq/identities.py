"""Truncated, coefficient-by-coefficient checks of the exterior-square identities.

Every verifier returns a :class:`VerificationReport`; a mathematical mismatch
is a ``fail`` report carrying the first differing coefficient, never an
exception.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from .algebra import BiSeries, SymPoly, geometric, series_inverse, series_mul, quotient_normalize
from .symmetric import (
    FourierIndex,
    enumerate_partitions,
    is_conjugate_even,
    lambda_of_index,
    odd_column_count,
    schur,
)

IDENTITIES = ("bf", "bf-unconstrained", "theorem1", "hecke", "littlewood", "reindexing", "theorem1-numeric")


@dataclass
class Discrepancy:
    x_degree: int | None = None
    y_degree: int | None = None
    difference: SymPoly | str | None = None
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {}
        if self.x_degree is not None:
            out["x_degree"] = self.x_degree
        if self.y_degree is not None:
            out["y_degree"] = self.y_degree
        if self.difference is not None:
            out["difference"] = str(self.difference)
        out.update(self.detail)
        return out

    @classmethod
    def from_dict(cls, d: dict) -> Discrepancy:
        d = dict(d)
        return cls(d.pop("x_degree", None), d.pop("y_degree", None), d.pop("difference", None), d)


@dataclass
class VerificationReport:
    identity: str
    params: dict
    status: str
    discrepancy: Discrepancy | None = None
    terms_checked: int = 0
    elapsed_ms: float = 0.0

    def __post_init__(self):
        if self.identity not in IDENTITIES:
            raise ValueError(f"unknown identity {self.identity!r}")
        if self.status not in ("pass", "fail"):
            raise ValueError(f"status must be pass or fail, got {self.status!r}")
        if (self.status == "pass") != (self.discrepancy is None):
            raise ValueError("status is pass exactly when there is no discrepancy")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        out = {"identity": self.identity, "params": self.params, "status": self.status}
        if self.discrepancy is not None:
            out["discrepancy"] = self.discrepancy.to_dict()
        out["terms_checked"] = self.terms_checked
        out["elapsed_ms"] = self.elapsed_ms
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, d: dict) -> VerificationReport:
        disc = d.get("discrepancy")
        return cls(
            identity=d["identity"],
            params=d["params"],
            status=d["status"],
            discrepancy=Discrepancy.from_dict(disc) if disc is not None else None,
            terms_checked=d["terms_checked"],
            elapsed_ms=d["elapsed_ms"],
        )

    @classmethod
    def from_json(cls, text: str) -> VerificationReport:
        return cls.from_dict(json.loads(text))


class _Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.ms = round((time.perf_counter() - self.start) * 1000, 3)


def _support(p: SymPoly, q: SymPoly) -> int:
    return len(set(p.terms) | set(q.terms))


def compare_series(identity: str, params: dict, lhs: BiSeries, rhs: BiSeries, timer=None,
                   max_weight: int | None = None) -> VerificationReport:
    """Compare two series coefficientwise in (X-degree, Y-degree) order."""
    first = None
    checked = 0
    for a, b in lhs.degrees():
        if max_weight is not None and a + 2 * b > max_weight:
            continue
        p, q = lhs.coeff(a, b), rhs.coeff(a, b)
        checked += _support(p, q)
        if first is None and p != q:
            first = Discrepancy(a, b, p - q)
    status = "pass" if first is None else "fail"
    elapsed = round((time.perf_counter() - timer.start) * 1000, 3) if timer else 0.0
    return VerificationReport(identity, params, status, first, checked, elapsed)


# --- Fourier-index gradings ------------------------------------------------


def x_exponent(k) -> int:
    """k_1 + k_3 + k_5 + ..."""
    return sum(v for i, v in enumerate(k, start=1) if i % 2)


def y_exponent(k) -> int:
    """k_2 + k_3 + 2 k_4 + 2 k_5 + ..."""
    return sum((i // 2) * v for i, v in enumerate(k, start=1))


def _bounded_indices(n: int, cap_x: int, cap_y: int):
    """Every k = (k_1..k_{n-1}) whose X- and Y-exponents fit in the caps."""
    slots = [(i % 2, i // 2) for i in range(1, n)]
    k = [0] * (n - 1)

    def rec(i, rx, ry):
        if i == n - 1:
            yield FourierIndex(k)
            return
        wx, wy = slots[i]
        v = 0
        while v * wx <= rx and v * wy <= ry:
            k[i] = v
            yield from rec(i + 1, rx - v * wx, ry - v * wy)
            v += 1
        k[i] = 0

    yield from rec(0, cap_x, cap_y)


class _Accumulator:
    """Collects SymPoly terms per (a, b) without building intermediate polynomials."""

    def __init__(self, n, normalize):
        self.n = n
        self.normalize = normalize
        self.data: dict[tuple[int, int], dict] = {}

    def add(self, a, b, poly: SymPoly, sign: int = 1):
        bucket = self.data.setdefault((a, b), {})
        for m, c in poly.terms.items():
            if self.normalize:
                low = min(m)
                if low:
                    m = tuple(e - low for e in m)
            bucket[m] = bucket.get(m, 0) + sign * c

    def series(self, cap_x, cap_y) -> BiSeries:
        return BiSeries(self.n, cap_x, cap_y,
                        {k: SymPoly(self.n, {m: c for m, c in t.items() if c}) for k, t in self.data.items()})


# --- local factors ---------------------------------------------------------


def l0_factor(n: int, cap_x: int | None = None, cap_y: int | None = None) -> BiSeries:
    """1 - Y^(n/2) for even n, 1 - X Y^((n-1)/2) for odd n."""
    if n < 2:
        raise ValueError("n must be >= 2")
    dx, dy = (0, n // 2) if n % 2 == 0 else (1, (n - 1) // 2)
    cap_x = dx if cap_x is None else cap_x
    cap_y = dy if cap_y is None else cap_y
    return BiSeries(n, cap_x, cap_y, [((0, 0), 1), ((dx, dy), -1)])


@lru_cache(maxsize=64)
def standard_factor(n: int, cap_x: int, cap_y: int) -> BiSeries:
    """prod_i (1 - alpha_i X)^(-1)."""
    out = BiSeries.one(n, cap_x, cap_y)
    for i in range(n):
        lin = BiSeries(n, cap_x, cap_y, [((0, 0), 1), ((1, 0), -SymPoly.variable(i, n))])
        out = series_mul(out, series_inverse(lin))
    return out


@lru_cache(maxsize=64)
def exterior_square_factor(n: int, cap_x: int, cap_y: int) -> BiSeries:
    """prod_{i<j} (1 - alpha_i alpha_j Y)^(-1)."""
    out = BiSeries.one(n, cap_x, cap_y)
    for i in range(n):
        for j in range(i + 1, n):
            pair = SymPoly.variable(i, n) * SymPoly.variable(j, n)
            lin = BiSeries(n, cap_x, cap_y, [((0, 0), 1), ((0, 1), -pair)])
            out = series_mul(out, series_inverse(lin))
    return out


def bf_sum_side(n: int, cap_x: int, cap_y: int, convention: str = "geq", quotient: bool = True) -> BiSeries:
    """Sum of S_lambda(k) X^(k1+k3+...) Y^(k2+k3+2k4+2k5+...) over k inside the caps."""
    if n < 2:
        raise ValueError("n must be >= 2")
    acc = _Accumulator(n, quotient)
    for k in _bounded_indices(n, cap_x, cap_y):
        acc.add(x_exponent(k), y_exponent(k), schur(lambda_of_index(k, convention), n))
    return acc.series(cap_x, cap_y)


def bf_product_side(n: int, cap_x: int, cap_y: int, quotient: bool = True, with_l0: bool = True) -> BiSeries:
    """L0 times the standard and exterior-square local factors."""
    if n < 2:
        raise ValueError("n must be >= 2")
    out = series_mul(exterior_square_factor(n, cap_x, cap_y), standard_factor(n, cap_x, cap_y), normalize=quotient)
    if with_l0:
        out = series_mul(out, l0_factor(n, cap_x, cap_y), normalize=quotient)
    return out


def unconstrained_sum_side(n: int, cap_x: int, cap_y: int, max_weight: int | None = None) -> BiSeries:
    """Sum over all lambda with at most n parts of S_lambda X^o(lambda) Y^((|lambda| - o)/2)."""
    acc = _Accumulator(n, False)
    top = cap_x + 2 * cap_y if max_weight is None else min(max_weight, cap_x + 2 * cap_y)
    for w in range(top + 1):
        for lam in enumerate_partitions(w, n):
            o = odd_column_count(lam)
            b = (w - o) // 2
            if o <= cap_x and b <= cap_y:
                acc.add(o, b, schur(lam, n))
    return acc.series(cap_x, cap_y)


def verify_bf(n: int, cap_x: int, cap_y: int, constrained: bool = True, quotient: bool = True,
              convention: str = "geq", max_weight: int | None = None) -> VerificationReport:
    with _Timer() as t:
        if constrained:
            params = {"n": n, "cap_x": cap_x, "cap_y": cap_y, "quotient": quotient, "convention": convention}
            lhs = bf_sum_side(n, cap_x, cap_y, convention, quotient)
            rhs = bf_product_side(n, cap_x, cap_y, quotient=quotient)
            return compare_series("bf", params, lhs, rhs, t)
        params = {"n": n, "cap_x": cap_x, "cap_y": cap_y, "max_weight": max_weight}
        lhs = unconstrained_sum_side(n, cap_x, cap_y, max_weight)
        rhs = bf_product_side(n, cap_x, cap_y, quotient=False, with_l0=False)
        return compare_series("bf-unconstrained", params, lhs, rhs, t, max_weight=max_weight)


def even_slots(n: int) -> list[int]:
    """1-based slots carrying m_2, m_4, ...: up to n-1 for odd n, n-2 for even n."""
    last = n - 1 if n % 2 else n - 2
    return list(range(2, last + 1, 2))


def theorem1_sum_side(n: int, cap_y: int, convention: str = "geq", quotient: bool = True) -> BiSeries:
    """Local Dirichlet side: sum of A(1, p^e2, 1, p^e4, ...) Y^(e2 + 2 e4 + ...), times (1 - Y^(n/2))^(-1) for even n."""
    if n < 2:
        raise ValueError("n must be >= 2")
    slots = even_slots(n)
    acc = _Accumulator(n, quotient)

    def rec(i, remaining, k):
        if i == len(slots):
            acc.add(0, cap_y - remaining, schur(lambda_of_index(k, convention), n))
            return
        s = slots[i]
        weight = s // 2
        v = 0
        while v * weight <= remaining:
            k[s - 1] = v
            rec(i + 1, remaining - v * weight, k)
            v += 1
        k[s - 1] = 0

    rec(0, cap_y, [0] * (n - 1))
    out = acc.series(0, cap_y)
    if n % 2 == 0:
        zeta = geometric(SymPoly.constant(1, n), 0, n // 2, 0, cap_y)
        out = series_mul(out, zeta, normalize=quotient)
    return out


def verify_theorem1(n: int, cap_y: int, convention: str = "geq", quotient: bool = True) -> VerificationReport:
    with _Timer() as t:
        params = {"n": n, "cap_y": cap_y, "quotient": quotient, "convention": convention}
        lhs = theorem1_sum_side(n, cap_y, convention, quotient)
        rhs = exterior_square_factor(n, 0, cap_y)
        if quotient:
            rhs = rhs.normalized()
        return compare_series("theorem1", params, lhs, rhs, t)


def _pad_even_exponents(n: int, e) -> tuple[int, ...]:
    slots = even_slots(n)
    e = tuple(int(x) for x in e)
    if len(e) > len(slots):
        raise ValueError(f"n={n} has {len(slots)} even slots, got {len(e)} exponents")
    if any(x < 0 for x in e):
        raise ValueError("exponents must be nonnegative")
    return e + (0,) * (len(slots) - len(e))


def hecke_lhs_index(n: int, e) -> FourierIndex:
    """(0, e_2, 0, e_4, ...) for the second factor A(1, m_2, 1, m_4, ...)."""
    e = _pad_even_exponents(n, e)
    k = [0] * (n - 1)
    for s, v in zip(even_slots(n), e):
        k[s - 1] = v
    return FourierIndex(k)


def hecke_rhs_indices(n: int, k: int, e) -> list[FourierIndex]:
    """Indices (g_n, e_2 - g_2, g_2, e_4 - g_4, g_4, ...) over g_2 + g_4 + ... + g_n = k, g_s <= e_s.

    For odd n the slot after m_{n-1} does not exist, so g_{n-1} is summed
    without appearing in the index.
    """
    e = _pad_even_exponents(n, e)
    slots = even_slots(n)
    out = []
    for gammas in product(*(range(v + 1) for v in e)):
        g_n = k - sum(gammas)
        if g_n < 0:
            continue
        idx = [0] * (n - 1)
        idx[0] = g_n
        for s, v, g in zip(slots, e, gammas):
            idx[s - 1] = v - g
            if s < n - 1:
                idx[s] = g
        out.append(FourierIndex(idx))
    return out


def verify_hecke(n: int, k: int, e, convention: str = "geq", quotient: bool = True) -> VerificationReport:
    if n < 3:
        raise ValueError("Hecke relations need n >= 3")
    if k < 0:
        raise ValueError("k must be >= 0")
    with _Timer() as t:
        e = _pad_even_exponents(n, e)
        params = {"n": n, "k": k, "e": list(e), "quotient": quotient, "convention": convention}
        first = FourierIndex([k] + [0] * (n - 2))
        lhs = schur(lambda_of_index(first, convention), n) * schur(lambda_of_index(hecke_lhs_index(n, e), convention), n)
        rhs = SymPoly.zero(n)
        for idx in hecke_rhs_indices(n, k, e):
            rhs = rhs + schur(lambda_of_index(idx, convention), n)
        if quotient:
            lhs, rhs = quotient_normalize(lhs), quotient_normalize(rhs)
        disc = None
        if lhs != rhs:
            y = sum((s // 2) * v for s, v in zip(even_slots(n), e))
            disc = Discrepancy(k, y, lhs - rhs)
        status = "pass" if disc is None else "fail"
    return VerificationReport("hecke", params, status, disc, _support(lhs, rhs), t.ms)


def verify_littlewood(n: int, d: int) -> VerificationReport:
    if n < 2 or d < 0:
        raise ValueError("need n >= 2 and d >= 0")
    with _Timer() as t:
        params = {"n": n, "d": d}
        lhs = exterior_square_factor(n, 0, d).coeff(0, d)
        rhs = SymPoly.zero(n)
        for lam in enumerate_partitions(2 * d, n):
            if is_conjugate_even(lam):
                rhs = rhs + schur(lam, n)
        disc = None if lhs == rhs else Discrepancy(0, d, lhs - rhs)
        status = "pass" if disc is None else "fail"
    return VerificationReport("littlewood", params, status, disc, _support(lhs, rhs), t.ms)


def hecke_assembled(n: int, cap_x: int, cap_y: int, convention: str = "geq", quotient: bool = True) -> BiSeries:
    """Sum over k, e of the Hecke right-hand sides, weighted X^k Y^(e_2 + 2 e_4 + ...)."""
    slots = even_slots(n)
    acc = _Accumulator(n, quotient)
    ranges = [range(cap_y // (s // 2) + 1) for s in slots]
    for k in range(cap_x + 1):
        for e in product(*ranges):
            y = sum((s // 2) * v for s, v in zip(slots, e))
            if y > cap_y:
                continue
            for idx in hecke_rhs_indices(n, k, e):
                acc.add(k, y, schur(lambda_of_index(idx, convention), n))
    return acc.series(cap_x, cap_y)


def verify_reindexing(n: int, cap_x: int, cap_y: int, convention: str = "geq", quotient: bool = True) -> VerificationReport:
    """Summed Hecke relations equal the Fourier double series, times (1 - X Y^((n-1)/2))^(-1) for odd n."""
    if n < 3:
        raise ValueError("Hecke relations need n >= 3")
    with _Timer() as t:
        params = {"n": n, "cap_x": cap_x, "cap_y": cap_y, "quotient": quotient, "convention": convention}
        lhs = hecke_assembled(n, cap_x, cap_y, convention, quotient)
        rhs = bf_sum_side(n, cap_x, cap_y, convention, quotient)
        if n % 2:
            extra = geometric(SymPoly.constant(1, n), 1, (n - 1) // 2, cap_x, cap_y)
            rhs = series_mul(rhs, extra, normalize=quotient)
        return compare_series("reindexing", params, lhs, rhs, t)

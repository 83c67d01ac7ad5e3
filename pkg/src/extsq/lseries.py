"""Numeric mode: Satake parameters in, Dirichlet coefficients out.

Fourier coefficients at prime powers are Schur polynomials evaluated at the
Satake parameters; global coefficients follow by multiplicativity.  The
exterior-square Euler product is expanded independently from the pair
products alpha_i alpha_j, without touching Schur polynomials.
"""

from __future__ import annotations

import cmath
import json
import math
import random
import time
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path

from .identities import Discrepancy, VerificationReport, even_slots
from .symmetric import FourierIndex, lambda_of_index, schur

UNIMODULAR_TOL = 1e-9


class SatakeError(ValueError):
    """Invalid or insufficient Satake data."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    for d in range(2, math.isqrt(p) + 1):
        if p % d == 0:
            return False
    return True


def factorize(m: int) -> dict[int, int]:
    if m < 1:
        raise ValueError(f"need a positive integer, got {m}")
    out = {}
    d = 2
    while d * d <= m:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 1
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


@dataclass(frozen=True)
class SatakeData:
    n: int
    entries: dict[int, tuple[complex, ...]]
    label: str = ""

    def __post_init__(self):
        ordered = {int(p): tuple(complex(a) for a in self.entries[p]) for p in sorted(self.entries)}
        object.__setattr__(self, "entries", ordered)

    @property
    def primes(self) -> list[int]:
        return list(self.entries)

    def validate(self) -> SatakeData:
        if self.n < 2:
            raise SatakeError(f"n must be >= 2, got {self.n}")
        for p, alpha in self.entries.items():
            if not is_prime(p):
                raise SatakeError(f"p={p}: not a prime")
            if len(alpha) != self.n:
                raise SatakeError(f"p={p}: expected {self.n} Satake parameters, got {len(alpha)}")
            prod = math.prod(alpha)
            if abs(prod - 1) > UNIMODULAR_TOL:
                raise SatakeError(f"p={p}: product of Satake parameters is {prod:.12g}, not 1")
        return self

    def alpha(self, p: int) -> tuple[complex, ...]:
        try:
            return self.entries[p]
        except KeyError:
            raise SatakeError(f"missing prime {p}") from None

    def scaled(self, p: int, factor: float) -> SatakeData:
        """Copy with the tuple at ``p`` multiplied by ``factor`` (not validated)."""
        entries = dict(self.entries)
        entries[p] = tuple(a * factor for a in self.alpha(p))
        return SatakeData(self.n, entries, self.label)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "label": self.label,
            "primes": [{"p": p, "alpha": [[a.real, a.imag] for a in alpha]} for p, alpha in self.entries.items()],
        }

    @classmethod
    def from_dict(cls, d: dict, validate: bool = True) -> SatakeData:
        try:
            n = int(d["n"])
            entries = {}
            for row in d["primes"]:
                p = int(row["p"])
                if p in entries:
                    raise SatakeError(f"p={p}: listed twice")
                entries[p] = tuple(complex(float(re), float(im)) for re, im in row["alpha"])
            label = str(d.get("label", ""))
        except SatakeError:
            raise
        except (KeyError, TypeError, ValueError) as exc:
            raise SatakeError(f"malformed Satake data: {exc}") from exc
        data = cls(n, entries, label)
        return data.validate() if validate else data


def load_satake(path) -> SatakeData:
    try:
        raw = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise SatakeError(f"{path}: not valid JSON ({exc})") from exc
    return SatakeData.from_dict(raw)


def save_satake(data: SatakeData, path) -> None:
    Path(path).write_text(json.dumps(data.to_dict(), indent=2) + "\n")


def generate_satake(n: int, primes, seed: int | None = None, label: str | None = None) -> SatakeData:
    """Random test data: each tuple is rescaled so its product is exactly 1.

    Not the Satake parameters of any actual automorphic form.
    """
    rng = random.Random(seed)
    entries = {}
    for p in primes:
        if not is_prime(p):
            raise SatakeError(f"p={p}: not a prime")
        alpha = [rng.uniform(0.8, 1.25) * cmath.exp(2j * math.pi * rng.random()) for _ in range(n - 1)]
        alpha.append(1 / math.prod(alpha))
        entries[p] = tuple(alpha)
    return SatakeData(n, entries, label or f"random-n{n}-seed{seed}").validate()


def local_coefficient(k, p: int, data: SatakeData, convention: str = "geq") -> complex:
    """A(p^k_1, ..., p^k_{n-1}) as S_lambda(alpha(p))."""
    k = FourierIndex(k)
    if k.n != data.n:
        raise ValueError(f"index {k.text()} has length {len(k)}, expected {data.n - 1}")
    return complex(schur(lambda_of_index(k, convention), data.n).evaluate(data.alpha(p)))


def global_coefficient(m, data: SatakeData, convention: str = "geq") -> complex:
    """A(m_1, ..., m_{n-1}) by multiplicativity over the primes dividing any m_i."""
    m = tuple(int(x) for x in m)
    if len(m) != data.n - 1:
        raise ValueError(f"need {data.n - 1} arguments, got {len(m)}")
    factored = [factorize(x) for x in m]
    primes = sorted(set().union(*factored))
    value = complex(1)
    for p in primes:
        value *= local_coefficient([f.get(p, 0) for f in factored], p, data, convention)
    return value


@dataclass
class DirichletSlice:
    M: int
    coeffs: dict[int, complex] = field(default_factory=dict)

    def __getitem__(self, m: int) -> complex:
        return self.coeffs.get(m, 0j)


def _weighted_tuples(m: int, weights: list[int]):
    """Tuples (x_1, ...) of positive integers with prod x_i^w_i == m."""
    if not weights:
        if m == 1:
            yield ()
        return
    w, rest = weights[0], weights[1:]
    x = 1
    while x**w <= m:
        if m % x**w == 0:
            for tail in _weighted_tuples(m // x**w, rest):
                yield (x,) + tail
        x += 1


def _support(data: SatakeData, M: int, listed_primes_only: bool) -> list[int]:
    if listed_primes_only:
        listed = set(data.primes)
        return [m for m in range(1, M + 1) if set(factorize(m)) <= listed]
    for p in range(2, M + 1):
        if is_prime(p) and p not in data.entries:
            raise SatakeError(f"missing prime {p}")
    return list(range(1, M + 1))


def dirichlet_side(data: SatakeData, M: int, listed_primes_only: bool = False, convention: str = "geq") -> DirichletSlice:
    """Coefficients of sum A(1, m_2, 1, m_4, ...)/(m_2 m_4^2 ...)^s, convolved with zeta(ns/2) for even n."""
    n = data.n
    slots = even_slots(n)
    weights = [s // 2 for s in slots]
    support = _support(data, M, listed_primes_only)
    base = {}
    for m in support:
        total = 0j
        for xs in _weighted_tuples(m, weights):
            args = [1] * (n - 1)
            for s, x in zip(slots, xs):
                args[s - 1] = x
            total += global_coefficient(args, data, convention)
        base[m] = total
    if n % 2:
        return DirichletSlice(M, base)
    half = n // 2
    out = {}
    for m in support:
        total = 0j
        t = 1
        while t**half <= m:
            if m % t**half == 0:
                total += base[m // t**half]
            t += 1
        out[m] = total
    return DirichletSlice(M, out)


def euler_side(data: SatakeData, M: int, listed_primes_only: bool = False) -> DirichletSlice:
    """Coefficients of prod_p prod_{i<j} (1 - alpha_i alpha_j p^-s)^(-1) up to M."""
    support = _support(data, M, listed_primes_only)
    local = {}
    for p in data.primes:
        if p > M:
            continue
        depth = 0
        while p ** (depth + 1) <= M:
            depth += 1
        series = [1 + 0j] + [0j] * depth
        for a, b in combinations(data.alpha(p), 2):
            r = a * b
            # multiply by the geometric series 1/(1 - r u)
            for e in range(1, depth + 1):
                series[e] += r * series[e - 1]
        local[p] = series
    out = {}
    for m in support:
        value = 1 + 0j
        for p, e in factorize(m).items():
            value *= local[p][e]
        out[m] = value
    return DirichletSlice(M, out)


def numeric_verify_theorem1(data: SatakeData, M: int, tol: float = 1e-9, listed_primes_only: bool = False,
                            convention: str = "geq") -> VerificationReport:
    if tol <= 0:
        raise ValueError("tol must be positive")
    if M < 1:
        raise ValueError("M must be >= 1")
    start = time.perf_counter()
    params = {"n": data.n, "M": M, "tol": tol, "label": data.label, "listed_primes_only": listed_primes_only}
    lhs = dirichlet_side(data, M, listed_primes_only, convention)
    rhs = euler_side(data, M, listed_primes_only)
    worst_m, worst = None, -1.0
    for m in sorted(rhs.coeffs):
        d, e = lhs[m], rhs[m]
        err = abs(d - e) / max(1.0, abs(e))
        if err > worst:
            worst_m, worst = m, err
    disc = None
    if worst > tol:
        d, e = lhs[worst_m], rhs[worst_m]
        disc = Discrepancy(detail={
            "m": worst_m,
            "dirichlet": [d.real, d.imag],
            "euler": [e.real, e.imag],
            "rel_error": worst,
        })
    elapsed = round((time.perf_counter() - start) * 1000, 3)
    return VerificationReport("theorem1-numeric", params, "pass" if disc is None else "fail", disc, len(rhs.coeffs), elapsed)

"""Partitions, Schur polynomials and the exponent-to-partition map.

``schur`` expands the Jacobi-Trudi determinant det(h_{lambda_i - i + j}).  The
determinant is expanded along rows with memoized minors; every entry is a
complete homogeneous polynomial and every minor is symmetric, so products are
taken on dominant-monomial coefficients and expanded to a full polynomial at
the end.  ``schur_oracle`` sums content monomials of semistandard tableaux
and shares no code with it.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, combinations_with_replacement

from .algebra import SymPoly

CONVENTIONS = ("geq", "paper-literal")
ORACLE_MAX_WEIGHT = 12


class Partition(tuple):
    """Weakly decreasing tuple of positive integers; ``()`` is the empty partition."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Accepts ``"3+1"``, ``"3,1"`` or ``"0"``/``""`` for the empty partition."""
        text = text.strip().strip("()")
        if text in ("", "0"):
            return cls(())
        sep = "+" if "+" in text else ","
        return cls(int(x) for x in text.split(sep) if x.strip())

    @property
    def weight(self) -> int:
        return sum(self)

    def conjugate(self) -> Partition:
        return conjugate(self)

    def padded(self, n: int) -> tuple[int, ...]:
        if len(self) > n:
            raise ValueError(f"{self.text()} has more than {n} parts")
        return tuple(self) + (0,) * (n - len(self))

    def text(self) -> str:
        return "+".join(map(str, self)) if self else "0"

    def __repr__(self):
        return f"Partition({tuple(self)!r})"


class FourierIndex(tuple):
    """Exponents (k_1, ..., k_{n-1}) of A(p^k_1, ..., p^k_{n-1})."""

    def __new__(cls, k):
        k = tuple(int(x) for x in k)
        if any(x < 0 for x in k):
            raise ValueError(f"Fourier exponents must be nonnegative: {k}")
        return super().__new__(cls, k)

    @classmethod
    def parse(cls, text: str) -> FourierIndex:
        text = text.strip()
        if text.startswith("k="):
            text = text[2:]
        text = text.strip("()")
        return cls(int(x) for x in text.split(",") if x.strip())

    @property
    def n(self) -> int:
        return len(self) + 1

    def text(self) -> str:
        return "k=(" + ",".join(map(str, self)) + ")"

    def __repr__(self):
        return f"FourierIndex({tuple(self)!r})"


def conjugate(lam) -> Partition:
    lam = Partition(lam)
    if not lam:
        return lam
    return Partition(sum(1 for part in lam if part >= i) for i in range(1, lam[0] + 1))


def is_conjugate_even(lam) -> bool:
    return all(part % 2 == 0 for part in conjugate(lam))


def enumerate_partitions(weight: int, max_parts: int) -> list[Partition]:
    """Partitions of ``weight`` with at most ``max_parts`` parts, reverse lex order."""
    if weight < 0 or max_parts < 0:
        raise ValueError("weight and max_parts must be nonnegative")
    out = []

    def rec(remaining, largest, prefix):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        if len(prefix) == max_parts:
            return
        for part in range(min(remaining, largest), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(weight, weight, [])
    return out


def one_box_extensions(lam, max_parts: int | None = None) -> list[Partition]:
    """All partitions obtained from ``lam`` by adding a single box."""
    lam = list(Partition(lam))
    out = []
    for i in range(len(lam) + 1):
        if max_parts is not None and i >= max_parts:
            break
        if i == 0 or (i < len(lam) and lam[i] < lam[i - 1]) or (i == len(lam) and lam[i - 1] > 0):
            mu = lam + [0] if i == len(lam) else lam[:]
            mu[i] += 1
            out.append(Partition(mu))
    return out


def homogeneous_h(k: int, n: int) -> SymPoly:
    if k < 0:
        return SymPoly.zero(n)
    terms = {}
    for combo in combinations_with_replacement(range(n), k):
        exps = [0] * n
        for i in combo:
            exps[i] += 1
        terms[tuple(exps)] = 1
    return SymPoly(n, terms)


def elementary_e(k: int, n: int) -> SymPoly:
    if k < 0 or k > n:
        return SymPoly.zero(n)
    terms = {}
    for combo in combinations(range(n), k):
        exps = [0] * n
        for i in combo:
            exps[i] = 1
        terms[tuple(exps)] = 1
    return SymPoly(n, terms)


# --- dominant-coefficient arithmetic for symmetric polynomials -------------


@lru_cache(maxsize=None)
def _padded_partitions(weight: int, n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(p.padded(n) for p in enumerate_partitions(weight, n))


def _bounded_compositions(total: int, bounds: tuple[int, ...]):
    """Compositions of ``total`` with entry i at most ``bounds[i]``."""
    n = len(bounds)
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + bounds[i]
    if total > suffix[0]:
        return
    comp = [0] * n

    def rec(i, remaining):
        if i == n - 1:
            if remaining <= bounds[i]:
                comp[i] = remaining
                yield tuple(comp)
            return
        lo = max(0, remaining - suffix[i + 1])
        for v in range(lo, min(bounds[i], remaining) + 1):
            comp[i] = v
            yield from rec(i + 1, remaining - v)

    yield from rec(0, total)


def _mul_h(a: int, dom: dict, degree: int, n: int) -> dict:
    """h_a times a homogeneous symmetric polynomial given by dominant coefficients."""
    if a == 0:
        return dict(dom)
    out = {}
    for nu in _padded_partitions(degree + a, n):
        total = 0
        for beta in _bounded_compositions(a, nu):
            rest = tuple(sorted((x - y for x, y in zip(nu, beta)), reverse=True))
            total += dom.get(rest, 0)
        if total:
            out[nu] = total
    return out


def _jacobi_trudi_dominant(lam: Partition, n: int) -> dict:
    ell = len(lam)
    memo = {}

    def minor(row, cols):
        # determinant of rows row..ell-1 against the column set ``cols``
        if row == ell:
            return {(0,) * n: 1}, 0
        key = (row, cols)
        if key in memo:
            return memo[key]
        acc: dict = {}
        degree = None
        for t, c in enumerate(cols):
            a = lam[row] - row + c
            if a < 0:
                continue
            sub, sub_deg = minor(row + 1, cols[:t] + cols[t + 1:])
            if not sub:
                continue
            prod = _mul_h(a, sub, sub_deg, n)
            degree = sub_deg + a
            sign = -1 if t % 2 else 1
            for m, v in prod.items():
                s = acc.get(m, 0) + sign * v
                if s:
                    acc[m] = s
                else:
                    acc.pop(m, None)
        result = (acc, degree if degree is not None else 0)
        memo[key] = result
        return result

    dom, _ = minor(0, tuple(range(ell)))
    return dom


def _multiset_permutations(seq):
    seq = sorted(seq)
    n = len(seq)
    while True:
        yield tuple(seq)
        i = n - 2
        while i >= 0 and seq[i] >= seq[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while seq[j] <= seq[i]:
            j -= 1
        seq[i], seq[j] = seq[j], seq[i]
        seq[i + 1:] = reversed(seq[i + 1:])


def symmetrize(dom: dict, n: int) -> SymPoly:
    """Expand dominant-monomial coefficients to the full symmetric polynomial."""
    terms = {}
    for nu, c in dom.items():
        for m in _multiset_permutations(nu):
            terms[m] = c
    return SymPoly(n, terms)


@lru_cache(maxsize=4096)
def _schur_cached(lam: tuple[int, ...], n: int) -> SymPoly:
    return symmetrize(_jacobi_trudi_dominant(Partition(lam), n), n)


def schur(lam, n: int) -> SymPoly:
    """Schur polynomial S_lambda(alpha_1..alpha_n); zero when lambda has more than n parts."""
    lam = Partition(lam)
    if n < 1:
        raise ValueError("n must be >= 1")
    if len(lam) > n:
        return SymPoly.zero(n)
    return _schur_cached(tuple(lam), n)


def semistandard_tableaux(lam, n: int):
    """Yield every semistandard tableau of shape ``lam`` with entries 1..n, as lists of rows."""
    lam = Partition(lam)
    cells = [(r, c) for r, length in enumerate(lam) for c in range(length)]
    rows = [[0] * length for length in lam]

    def rec(idx):
        if idx == len(cells):
            yield [row[:] for row in rows]
            return
        r, c = cells[idx]
        lo = 1
        if c > 0:
            lo = rows[r][c - 1]
        if r > 0:
            lo = max(lo, rows[r - 1][c] + 1)
        for v in range(lo, n + 1):
            rows[r][c] = v
            yield from rec(idx + 1)

    yield from rec(0)


def schur_oracle(lam, n: int) -> SymPoly:
    """Schur polynomial as a sum of tableau content monomials (small weights only)."""
    lam = Partition(lam)
    if lam.weight > ORACLE_MAX_WEIGHT:
        raise ValueError(f"schur_oracle limited to weight <= {ORACLE_MAX_WEIGHT}, got {lam.weight}")
    terms: dict[tuple[int, ...], int] = {}
    for tab in semistandard_tableaux(lam, n):
        exps = [0] * n
        for row in tab:
            for v in row:
                exps[v - 1] += 1
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + 1
    return SymPoly(n, terms)


def lambda_of_index(k, convention: str = "geq") -> Partition:
    """Partition attached to the Fourier exponents k = (k_1, ..., k_{n-1}).

    ``"geq"``: lambda_j = k_j + ... + k_{n-1}, so k_j counts columns of height j.
    ``"paper-literal"``: lambda_j = k_{j+1} + ... + k_{n-1} (strict inequality).
    """
    k = FourierIndex(k)
    if convention == "geq":
        offset = 0
    elif convention == "paper-literal":
        offset = 1
    else:
        raise ValueError(f"unknown convention {convention!r}; expected one of {CONVENTIONS}")
    return Partition(sum(k[j + offset:]) for j in range(len(k)))


def index_of_partition(lam, n: int) -> FourierIndex:
    """Inverse of ``lambda_of_index`` under the default convention; needs lambda_n = 0."""
    lam = Partition(lam)
    if len(lam) > n - 1:
        raise ValueError(f"{lam.text()} has a nonzero part lambda_{n}")
    padded = lam.padded(n)
    return FourierIndex(padded[j] - padded[j + 1] for j in range(n - 1))


def odd_column_count(lam) -> int:
    return sum(1 for col in conjugate(lam) if col % 2)

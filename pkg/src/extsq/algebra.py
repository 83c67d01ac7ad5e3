"""Exact sparse polynomials in alpha_1..alpha_n and truncated series in X, Y.

Polynomials carry Python integers as coefficients.  The quotient by
alpha_1 * ... * alpha_n = 1 is realized as a monomial rewrite: every exponent
vector has its minimum entry subtracted, which gives a canonical
representative with min exponent 0.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping

Exponents = tuple[int, ...]


class SymPoly:
    """Immutable sparse polynomial with integer coefficients in ``nvars`` variables."""

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponents, int] | Iterable = ()):
        if nvars < 1:
            raise ValueError(f"nvars must be >= 1, got {nvars}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Exponents, int] = {}
        for exps, c in items:
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError(f"monomial {exps} does not have {nvars} exponents")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            clean[exps] = clean.get(exps, 0) + int(c)
        self.nvars = nvars
        self._terms = {m: c for m, c in clean.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict[Exponents, int]) -> SymPoly:
        # trusted constructor: terms already validated and free of zeros
        p = cls.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, nvars: int) -> SymPoly:
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, c: int, nvars: int) -> SymPoly:
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def monomial(cls, exps: Iterable[int], coeff: int = 1) -> SymPoly:
        exps = tuple(exps)
        return cls(len(exps), {exps: coeff})

    @classmethod
    def variable(cls, i: int, nvars: int) -> SymPoly:
        """The variable alpha_{i+1} (0-based ``i``)."""
        exps = [0] * nvars
        exps[i] = 1
        return cls._raw(nvars, {tuple(exps): 1})

    @property
    def terms(self) -> dict[Exponents, int]:
        return dict(self._terms)

    def items(self):
        """Terms in the canonical order: exponent tuples in descending lex order."""
        return sorted(self._terms.items(), reverse=True)

    def coeff(self, exps: Iterable[int]) -> int:
        return self._terms.get(tuple(exps), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            return self == SymPoly.constant(other, self.nvars)
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def _check(self, other: SymPoly) -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"nvars mismatch: {self.nvars} vs {other.nvars}")

    def _coerce(self, other) -> SymPoly:
        if isinstance(other, int):
            return SymPoly.constant(other, self.nvars)
        if isinstance(other, SymPoly):
            self._check(other)
            return other
        raise TypeError(f"cannot combine SymPoly with {type(other).__name__}")

    def __add__(self, other):
        return poly_add(self, self._coerce(other))

    __radd__ = __add__

    def __neg__(self):
        return SymPoly._raw(self.nvars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return poly_add(self, -self._coerce(other))

    def __rsub__(self, other):
        return poly_add(-self, self._coerce(other))

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return SymPoly.zero(self.nvars)
            return SymPoly._raw(self.nvars, {m: c * other for m, c in self._terms.items()})
        return poly_mul(self, self._coerce(other))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = SymPoly.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def degree(self) -> int:
        return max((sum(m) for m in self._terms), default=-1)

    def substitute_zero(self, i: int) -> SymPoly:
        """Set variable ``i`` (0-based) to zero and drop it, giving ``nvars - 1`` variables."""
        if self.nvars == 1:
            raise ValueError("cannot drop the only variable")
        out: dict[Exponents, int] = {}
        for m, c in self._terms.items():
            if m[i] == 0:
                out[m[:i] + m[i + 1:]] = c
        return SymPoly._raw(self.nvars - 1, out)

    def permute(self, perm: Iterable[int]) -> SymPoly:
        """Rename variables: alpha_i becomes alpha_{perm[i]}."""
        perm = tuple(perm)
        out = {}
        for m, c in self._terms.items():
            new = [0] * self.nvars
            for i, e in enumerate(m):
                new[perm[i]] = e
            out[tuple(new)] = c
        return SymPoly._raw(self.nvars, out)

    def evaluate(self, values):
        if len(values) != self.nvars:
            raise ValueError(f"need {self.nvars} values, got {len(values)}")
        total = 0
        for m, c in self._terms.items():
            term = c
            for v, e in zip(values, m):
                if e:
                    term = term * v**e
            total += term
        return total

    def to_text(self) -> str:
        """Canonical text form: descending lex monomial order, explicit signs."""
        if not self._terms:
            return "0"
        pieces = []
        for m, c in self.items():
            factors = []
            for i, e in enumerate(m):
                if e == 1:
                    factors.append(f"a{i + 1}")
                elif e > 1:
                    factors.append(f"a{i + 1}^{e}")
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            if pieces:
                pieces.append(f" {sign} {body}")
            else:
                pieces.append(body if c > 0 else f"-{body}")
        return "".join(pieces)

    __str__ = to_text

    def __repr__(self):
        return f"SymPoly({self.nvars}, {self.to_text()!r})"


def poly_add(p: SymPoly, q: SymPoly) -> SymPoly:
    p._check(q)
    out = dict(p._terms)
    for m, c in q._terms.items():
        s = out.get(m, 0) + c
        if s:
            out[m] = s
        else:
            out.pop(m, None)
    return SymPoly._raw(p.nvars, out)


def _normal_exps(m: Exponents) -> Exponents:
    low = min(m)
    return tuple(e - low for e in m) if low else m


def poly_mul(p: SymPoly, q: SymPoly, normalize: bool = False) -> SymPoly:
    p._check(q)
    if len(p._terms) > len(q._terms):
        p, q = q, p
    out: dict[Exponents, int] = {}
    get = out.get
    qitems = list(q._terms.items())
    for m1, c1 in p._terms.items():
        for m2, c2 in qitems:
            m = tuple(a + b for a, b in zip(m1, m2))
            if normalize:
                m = _normal_exps(m)
            out[m] = get(m, 0) + c1 * c2
    return SymPoly._raw(p.nvars, {m: c for m, c in out.items() if c})


def quotient_normalize(p: SymPoly) -> SymPoly:
    """Reduce modulo alpha_1 * ... * alpha_n = 1 to the min-exponent-0 representative."""
    out: dict[Exponents, int] = {}
    for m, c in p._terms.items():
        m = _normal_exps(m)
        out[m] = out.get(m, 0) + c
    return SymPoly._raw(p.nvars, {m: c for m, c in out.items() if c})


def is_quotient_normal(p: SymPoly) -> bool:
    return all(min(m) == 0 for m in p._terms)


class BiSeries:
    """Power series in X and Y with SymPoly coefficients, truncated per axis.

    Only coefficients of ``X^a Y^b`` with ``a <= cap_x`` and ``b <= cap_y``
    are kept.  Zero coefficients are not stored.
    """

    __slots__ = ("nvars", "cap_x", "cap_y", "_coeffs")

    def __init__(self, nvars: int, cap_x: int, cap_y: int, coeffs: Mapping | Iterable = ()):
        if cap_x < 0 or cap_y < 0:
            raise ValueError("caps must be nonnegative")
        self.nvars = nvars
        self.cap_x = cap_x
        self.cap_y = cap_y
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        out: dict[tuple[int, int], SymPoly] = {}
        for (a, b), c in items:
            if a < 0 or b < 0:
                raise ValueError(f"negative degree ({a}, {b})")
            if a > cap_x or b > cap_y:
                continue
            if isinstance(c, int):
                c = SymPoly.constant(c, nvars)
            if c.nvars != nvars:
                raise ValueError(f"coefficient at ({a}, {b}) has nvars {c.nvars}, expected {nvars}")
            prev = out.get((a, b))
            out[(a, b)] = c if prev is None else prev + c
        self._coeffs = {k: v for k, v in out.items() if v}

    @classmethod
    def one(cls, nvars: int, cap_x: int, cap_y: int) -> BiSeries:
        return cls(nvars, cap_x, cap_y, {(0, 0): SymPoly.constant(1, nvars)})

    @property
    def caps(self) -> tuple[int, int]:
        return self.cap_x, self.cap_y

    def coeff(self, a: int, b: int) -> SymPoly:
        return self._coeffs.get((a, b), SymPoly.zero(self.nvars))

    def keys(self):
        return sorted(self._coeffs)

    def items(self):
        return sorted(self._coeffs.items())

    def degrees(self):
        """All (a, b) inside the caps, in the fixed report order."""
        return [(a, b) for a in range(self.cap_x + 1) for b in range(self.cap_y + 1)]

    def map(self, fn) -> BiSeries:
        return BiSeries(self.nvars, self.cap_x, self.cap_y, {k: fn(v) for k, v in self._coeffs.items()})

    def normalized(self) -> BiSeries:
        return self.map(quotient_normalize)

    def _check(self, other: BiSeries) -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"nvars mismatch: {self.nvars} vs {other.nvars}")
        if self.caps != other.caps:
            raise ValueError(f"cap mismatch: {self.caps} vs {other.caps}")

    def __eq__(self, other):
        if not isinstance(other, BiSeries):
            return NotImplemented
        return self.nvars == other.nvars and self.caps == other.caps and self._coeffs == other._coeffs

    __hash__ = None

    def __add__(self, other: BiSeries) -> BiSeries:
        self._check(other)
        merged = list(self._coeffs.items()) + list(other._coeffs.items())
        return BiSeries(self.nvars, self.cap_x, self.cap_y, merged)

    def __neg__(self):
        return self.map(lambda p: -p)

    def __sub__(self, other: BiSeries) -> BiSeries:
        return self + (-other)

    def __mul__(self, other: BiSeries) -> BiSeries:
        return series_mul(self, other)

    def __repr__(self):
        body = ", ".join(f"X^{a}Y^{b}: {p}" for (a, b), p in self.items())
        return f"BiSeries(n={self.nvars}, caps={self.caps}, {{{body}}})"


def series_mul(f: BiSeries, g: BiSeries, normalize: bool = False) -> BiSeries:
    """Truncated product; coefficients are quotient-normalized if ``normalize``."""
    f._check(g)
    cx, cy = f.caps
    acc: dict[tuple[int, int], SymPoly] = {}
    gitems = list(g._coeffs.items())
    for (a1, b1), p in f._coeffs.items():
        for (a2, b2), q in gitems:
            a, b = a1 + a2, b1 + b2
            if a > cx or b > cy:
                continue
            prod = poly_mul(p, q, normalize=normalize)
            prev = acc.get((a, b))
            acc[(a, b)] = prod if prev is None else poly_add(prev, prod)
    return BiSeries(f.nvars, cx, cy, acc)


def series_inverse(f: BiSeries, normalize: bool = False) -> BiSeries:
    """Multiplicative inverse of a series whose constant term is 1."""
    one = SymPoly.constant(1, f.nvars)
    if f.coeff(0, 0) != one:
        raise ValueError("series_inverse needs constant term 1")
    rest = [(k, p) for k, p in f._coeffs.items() if k != (0, 0)]
    g: dict[tuple[int, int], SymPoly] = {(0, 0): one}
    for a in range(f.cap_x + 1):
        for b in range(f.cap_y + 1):
            if (a, b) == (0, 0):
                continue
            total = SymPoly.zero(f.nvars)
            for (i, j), p in rest:
                if i <= a and j <= b:
                    q = g.get((a - i, b - j))
                    if q is not None:
                        total = poly_add(total, poly_mul(p, q, normalize=normalize))
            if total:
                g[(a, b)] = -total
    return BiSeries(f.nvars, f.cap_x, f.cap_y, g)


def geometric(term: SymPoly, x_deg: int, y_deg: int, cap_x: int, cap_y: int) -> BiSeries:
    """(1 - term * X^x_deg * Y^y_deg)^(-1), truncated."""
    if (x_deg, y_deg) == (0, 0):
        raise ValueError("geometric series needs a positive marker degree")
    n = term.nvars
    out = {}
    power = SymPoly.constant(1, n)
    k = 0
    while k * x_deg <= cap_x and k * y_deg <= cap_y:
        out[(k * x_deg, k * y_deg)] = power
        power = power * term
        k += 1
    return BiSeries(n, cap_x, cap_y, out)

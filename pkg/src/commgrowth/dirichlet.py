"""Exact arithmetic on truncated Dirichlet series.

A series ``sum c_n n^{-s}`` is stored only up to a fixed limit ``N``; every
operation keeps that limit and never extrapolates.  Coefficients are
:class:`fractions.Fraction` throughout.
"""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Sequence, Union

from sympy import isprime, primerange

Number = Union[int, Fraction]


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"coefficient {x!r} is not an exact rational")


@dataclass(frozen=True)
class TruncatedDirichletSeries:
    """Coefficients ``c_1..c_N`` of a Dirichlet series; absent indices are 0."""

    limit: int
    coeffs: Mapping[int, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if not isinstance(self.limit, int) or self.limit < 1:
            raise ValueError(f"limit must be a positive integer, got {self.limit!r}")
        clean = {}
        for n, c in self.coeffs.items():
            if not isinstance(n, int) or not 1 <= n <= self.limit:
                raise ValueError(f"index {n!r} outside [1, {self.limit}]")
            c = _as_fraction(c)
            if c:
                clean[n] = c
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def identity(cls, limit: int) -> "TruncatedDirichletSeries":
        return cls(limit, {1: Fraction(1)})

    @classmethod
    def from_sequence(cls, values: Sequence[Number]) -> "TruncatedDirichletSeries":
        """Build from ``(c_1, ..., c_N)``."""
        return cls(len(values), {n: v for n, v in enumerate(values, start=1)})

    def __getitem__(self, n: int) -> Fraction:
        if not 1 <= n <= self.limit:
            raise IndexError(n)
        return self.coeffs.get(n, Fraction(0))

    def __iter__(self) -> Iterator[Fraction]:
        return (self[n] for n in range(1, self.limit + 1))

    def __len__(self) -> int:
        return self.limit

    def __mul__(self, other):
        if not isinstance(other, TruncatedDirichletSeries):
            return NotImplemented
        return series_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, TruncatedDirichletSeries):
            return NotImplemented
        return self.limit == other.limit and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.limit, frozenset(self.coeffs.items())))

    def as_list(self) -> list[Fraction]:
        return list(self)

    def support(self) -> list[int]:
        return sorted(self.coeffs)

    def truncate(self, limit: int) -> "TruncatedDirichletSeries":
        if limit > self.limit:
            raise ValueError("cannot extend a truncated series")
        return TruncatedDirichletSeries(
            limit, {n: c for n, c in self.coeffs.items() if n <= limit}
        )

    # serialization -------------------------------------------------------

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "c_n"])
        for n in range(1, self.limit + 1):
            writer.writerow([n, str(self[n])])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "TruncatedDirichletSeries":
        rows = list(csv.reader(io.StringIO(text)))
        if not rows or rows[0] != ["n", "c_n"]:
            raise ValueError("expected CSV header 'n,c_n'")
        coeffs = {int(n): Fraction(c) for n, c in rows[1:]}
        limit = max(coeffs) if coeffs else 1
        return cls(limit, coeffs)

    def to_json_dict(self) -> dict:
        return {
            "limit": self.limit,
            "coeffs": {str(n): str(c) for n, c in sorted(self.coeffs.items())},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str | dict) -> "TruncatedDirichletSeries":
        data = json.loads(text) if isinstance(text, str) else text
        return cls(
            int(data["limit"]),
            {int(n): Fraction(c) for n, c in data["coeffs"].items()},
        )


def _plain(c: Fraction):
    # integral Fractions become ints so hot loops run on machine-width arithmetic
    return c.numerator if c.denominator == 1 else c


def _dense(s: TruncatedDirichletSeries) -> list:
    out = [0] * (s.limit + 1)
    for n, c in s.coeffs.items():
        out[n] = _plain(c)
    return out


def _from_dense(values: list, N: int) -> TruncatedDirichletSeries:
    return TruncatedDirichletSeries(N, {n: values[n] for n in range(1, N + 1) if values[n]})


def series_mul(a: TruncatedDirichletSeries, b: TruncatedDirichletSeries) -> TruncatedDirichletSeries:
    """Dirichlet convolution ``c_n = sum_{d|n} a_d b_{n/d}`` truncated at ``N``."""
    if a.limit != b.limit:
        raise ValueError(f"truncation limits differ: {a.limit} != {b.limit}")
    N = a.limit
    if len(a.coeffs) > len(b.coeffs):
        a, b = b, a
    bd = _dense(b)
    out = [0] * (N + 1)
    for i, ai in a.coeffs.items():
        ai = _plain(ai)
        for j in range(1, N // i + 1):
            bj = bd[j]
            if bj:
                out[i * j] += ai * bj
    return _from_dense(out, N)


# local factors -----------------------------------------------------------


@dataclass(frozen=True)
class ExplicitSupport:
    """Local factor given by ``(index, coefficient)`` pairs; ``c_1 = 1`` unless listed.

    ``terms`` may be a finite sequence or a zero-argument callable returning an
    iterator (for factors with infinite support); indices must increase.
    """

    terms: Union[Sequence[tuple[int, Number]], Callable[[], Iterable[tuple[int, Number]]]]

    def iter_terms(self) -> Iterator[tuple[int, Number]]:
        src = self.terms() if callable(self.terms) else self.terms
        prev = 0
        for m, c in src:
            if m <= prev:
                raise ValueError(f"support indices must be strictly increasing, got {m} after {prev}")
            prev = m
            yield m, c


@dataclass(frozen=True)
class RationalInU:
    """Power series ``num(u)/den(u)`` in ``u = p^{-s}``; coefficient lists low degree first."""

    num: tuple[int, ...]
    den: tuple[int, ...]
    p: int

    def __post_init__(self):
        object.__setattr__(self, "num", tuple(int(x) for x in self.num))
        object.__setattr__(self, "den", tuple(int(x) for x in self.den))


LocalFactor = Union[ExplicitSupport, RationalInU]

TRIVIAL = ExplicitSupport(())


def power_series_coeffs(num: Sequence[int], den: Sequence[int], count: int) -> list[Fraction]:
    """First ``count`` coefficients of ``num/den`` with ``den[0] == 1``."""
    if not den or den[0] != 1:
        raise ValueError("denominator must have constant term 1")
    out: list[Fraction] = []
    for k in range(count):
        acc = Fraction(num[k]) if k < len(num) else Fraction(0)
        for j in range(1, min(k, len(den) - 1) + 1):
            acc -= den[j] * out[k - j]
        out.append(acc)
    return out


def expand_local_factor(f: LocalFactor, N: int) -> TruncatedDirichletSeries:
    if isinstance(f, RationalInU):
        if not f.den or f.den[0] != 1:
            raise ValueError("den(0) must equal 1")
        if not isprime(f.p):
            raise ValueError(f"{f.p} is not prime")
        kmax = 0
        while f.p ** (kmax + 1) <= N:
            kmax += 1
        series = power_series_coeffs(f.num, f.den, kmax + 1)
        return TruncatedDirichletSeries(N, {f.p ** k: c for k, c in enumerate(series)})
    if isinstance(f, ExplicitSupport):
        coeffs: dict[int, Fraction] = {1: Fraction(1)}
        for m, c in f.iter_terms():
            if m > N:
                break
            coeffs[m] = _as_fraction(c)
        return TruncatedDirichletSeries(N, coeffs)
    raise TypeError(f"not a local factor: {f!r}")


FactorSource = Union[
    Mapping[int, LocalFactor],
    Iterable[tuple[int, LocalFactor]],
    Callable[[int], LocalFactor],
]


def euler_product(factors: FactorSource, N: int) -> TruncatedDirichletSeries:
    """Truncated product of local factors over every prime ``p <= N``.

    ``factors`` is either a callable ``p -> LocalFactor`` or a collection of
    ``(p, factor)`` pairs.  In the latter case every prime up to ``N`` must be
    present; pass :data:`TRIVIAL` (or ``None``) for primes whose factor is 1.
    """
    if callable(factors) and not isinstance(factors, Mapping):
        lookup = {p: factors(p) for p in primerange(2, N + 1)}
    else:
        items = factors.items() if isinstance(factors, Mapping) else factors
        lookup = {}
        for p, f in items:
            if p in lookup:
                raise ValueError(f"duplicate factor for {p}")
            lookup[p] = f
        missing = [p for p in primerange(2, N + 1) if p not in lookup]
        if missing:
            raise ValueError(
                f"no local factor supplied for primes {missing[:10]}"
                + ("..." if len(missing) > 10 else "")
                + "; pass TRIVIAL explicitly for trivial places"
            )
    # in-place multiplication by each factor on a dense array; indices are
    # visited downwards so every read sees the value before this factor
    values = [0] * (N + 1)
    values[1] = 1
    for p in sorted(lookup):
        f = lookup[p]
        if f is None:
            continue
        local = expand_local_factor(f, N)
        if local.coeffs.get(1) != 1:
            raise ValueError(f"local factor at {p} does not have constant term 1")
        terms = [(m, _plain(c)) for m, c in sorted(local.coeffs.items()) if m > 1]
        if not terms:
            continue
        smallest = terms[0][0]
        for j in range(N // smallest, 0, -1):
            v = values[j]
            if not v:
                continue
            for m, c in terms:
                k = j * m
                if k > N:
                    break
                values[k] += c * v
    return _from_dense(values, N)


def partial_sums(s: TruncatedDirichletSeries) -> list[Fraction]:
    out = []
    acc = Fraction(0)
    for c in s:
        acc += c
        out.append(acc)
    return out


@dataclass
class ProbeReport:
    alpha: Fraction
    checkpoints: list[tuple[int, float]]
    band_range: tuple[int, int]
    band_min: float
    band_max: float

    @property
    def final(self) -> float:
        return self.checkpoints[-1][1]

    @property
    def band_ratio(self) -> float:
        return self.band_max / self.band_min if self.band_min else math.inf

    def as_dict(self) -> dict:
        return {
            "alpha": str(self.alpha),
            "checkpoints": [[n, v] for n, v in self.checkpoints],
            "band_range": list(self.band_range),
            "band_min": self.band_min,
            "band_max": self.band_max,
        }


def asymptotic_ratio_probe(
    s: TruncatedDirichletSeries, alpha: Number, band_start: int | None = None
) -> ProbeReport:
    """Sample ``c_{<=n} / n**alpha`` at ``n = ceil(N / 2**k)``.

    The band is taken over ``n`` in ``[band_start, N]``; by default the top half.
    """
    alpha = _as_fraction(alpha)
    if alpha < 0:
        raise ValueError("alpha must be nonnegative")
    N = s.limit
    sums = partial_sums(s)
    a = float(alpha)

    def ratio(n: int) -> float:
        return float(sums[n - 1]) / n**a

    points = []
    k = 0
    while True:
        n = -(-N // 2**k)
        points.append(n)
        if n == 1:
            break
        k += 1
    points.reverse()
    lo = band_start if band_start is not None else -(-N // 2)
    lo = max(1, lo)
    values = [ratio(n) for n in range(lo, N + 1)]
    return ProbeReport(
        alpha=alpha,
        checkpoints=[(n, ratio(n)) for n in points],
        band_range=(lo, N),
        band_min=min(values),
        band_max=max(values),
    )

"""Truncated Laurent and power series over complex coefficients.

A :class:`TruncatedSeries` is a finite coefficient window; every degree
outside the window is exactly zero.  Instances are immutable and all
operations return new values, so series can be shared freely across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "DomainError",
    "EvalDomain",
    "TruncatedSeries",
    "make_series",
    "series_exp",
    "series_geometric",
    "constant_series",
    "series_to_json",
    "series_from_json",
    "coeff_close",
    "max_coeff_diff",
    "coeff_residual",
    "PRODUCT_DEGREE_CAP",
    "DEFAULT_TRUNCATION",
]

PRODUCT_DEGREE_CAP = 256
DEFAULT_TRUNCATION = 64
ENTIRE_MAX_ABS_ARG = 4.0
GEOMETRIC_MAX_ABS_ARG = 0.9


class DomainError(ValueError):
    """Raised when an argument lies outside a series' evaluation domain."""


@dataclass(frozen=True)
class EvalDomain:
    """Evaluation is restricted to the closed disk |z| <= max_abs_arg."""

    max_abs_arg: float = ENTIRE_MAX_ABS_ARG


def _checked(value, what: str) -> complex:
    v = complex(value)
    if not (math.isfinite(v.real) and math.isfinite(v.imag)):
        raise ValueError(f"{what} must be finite, got {value!r}")
    return v


def _ipow(base: complex, exponent: int) -> complex:
    """base ** exponent for integer exponents, with 0 ** 0 == 1."""
    if exponent == 0:
        return 1 + 0j
    if base == 0:
        if exponent < 0:
            raise ZeroDivisionError("zero cannot be raised to a negative power")
        return 0j
    return base ** exponent


class TruncatedSeries:
    """Finite window of Laurent coefficients a_k for k in [min_deg, max_deg]."""

    __slots__ = ("min_deg", "max_deg", "coeffs", "label", "domain")

    def __init__(self, min_deg: int, coeffs: Sequence[complex], label: str | None = None,
                 domain: EvalDomain | None = None):
        cs = tuple(_checked(c, "coefficient") for c in coeffs)
        if not cs:
            raise ValueError("a series needs at least one coefficient")
        self.min_deg = int(min_deg)
        self.max_deg = self.min_deg + len(cs) - 1
        self.coeffs = cs
        self.label = label
        self.domain = domain if domain is not None else EvalDomain()

    # -- inspection ---------------------------------------------------------

    def degrees(self) -> range:
        return range(self.min_deg, self.max_deg + 1)

    def coeff(self, k: int) -> complex:
        """Coefficient of z**k; zero outside the stored window."""
        if self.min_deg <= k <= self.max_deg:
            return self.coeffs[k - self.min_deg]
        return 0j

    def __repr__(self) -> str:
        tag = f" {self.label!r}" if self.label else ""
        return (f"TruncatedSeries(window=[{self.min_deg}, {self.max_deg}],"
                f" {len(self.coeffs)} coeffs{tag})")

    # -- evaluation ---------------------------------------------------------

    def evaluate(self, z: complex) -> complex:
        """Horner evaluation, negative and nonnegative halves separately.

        Raises DomainError if |z| exceeds the evaluation domain, or if z == 0
        while the window contains negative degrees.
        """
        z = complex(z)
        if abs(z) > self.domain.max_abs_arg:
            raise DomainError(
                f"|z| = {abs(z):.6g} exceeds the evaluation bound "
                f"{self.domain.max_abs_arg:.6g}")
        if self.min_deg < 0 and z == 0:
            raise DomainError("z = 0 is outside the domain of a negative-degree window")
        total = 0j
        if self.max_deg >= 0:
            lo = max(self.min_deg, 0)
            acc = 0j
            for d in range(self.max_deg, lo - 1, -1):
                acc = acc * z + self.coeff(d)
            total += acc * _ipow(z, lo)
        if self.min_deg < 0:
            u = 1 / z
            acc = 0j
            for d in range(self.min_deg, min(self.max_deg, -1) + 1):
                acc = (acc + self.coeff(d)) * u
            total += acc
        return total

    # -- structural operations ----------------------------------------------

    def scale_argument(self, lam: complex) -> "TruncatedSeries":
        """Series of f(lam * z): coefficient a_k picks up lam**k."""
        lam = _checked(lam, "scale factor")
        if lam == 0 and self.min_deg < 0:
            raise ValueError("cannot scale a negative-degree window by zero")
        scaled = tuple(c * _ipow(lam, d) for d, c in zip(self.degrees(), self.coeffs))
        if lam == 0:
            dom = self.domain
        else:
            dom = EvalDomain(self.domain.max_abs_arg / abs(lam))
        return TruncatedSeries(self.min_deg, scaled, label=self.label, domain=dom)

    def derivative(self) -> "TruncatedSeries":
        """Termwise d/dz; the degree-0 term dies, all others shift down."""
        support = [d for d in self.degrees() if d != 0]
        if not support:
            return TruncatedSeries(0, (0j,), label=self.label, domain=self.domain)
        lo, hi = min(support) - 1, max(support) - 1
        coeffs = tuple(complex(d + 1) * self.coeff(d + 1) for d in range(lo, hi + 1))
        return TruncatedSeries(lo, coeffs, label=self.label, domain=self.domain)

    def with_label(self, label: str | None) -> "TruncatedSeries":
        return TruncatedSeries(self.min_deg, self.coeffs, label=label, domain=self.domain)

    def with_domain(self, domain: EvalDomain) -> "TruncatedSeries":
        return TruncatedSeries(self.min_deg, self.coeffs, label=self.label, domain=domain)

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> "TruncatedSeries | None":
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, float, complex)):
            return constant_series(other)
        return None

    def __add__(self, other) -> "TruncatedSeries":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        lo = min(self.min_deg, o.min_deg)
        hi = max(self.max_deg, o.max_deg)
        coeffs = tuple(self.coeff(d) + o.coeff(d) for d in range(lo, hi + 1))
        dom = EvalDomain(min(self.domain.max_abs_arg, o.domain.max_abs_arg))
        return TruncatedSeries(lo, coeffs, domain=dom)

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.min_deg, tuple(-c for c in self.coeffs),
                               label=self.label, domain=self.domain)

    def __sub__(self, other) -> "TruncatedSeries":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "TruncatedSeries":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, float, complex)):
            w = _checked(other, "scalar")
            return TruncatedSeries(self.min_deg, tuple(c * w for c in self.coeffs),
                                   label=self.label, domain=self.domain)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        lo = self.min_deg + other.min_deg
        hi = min(self.max_deg + other.max_deg, PRODUCT_DEGREE_CAP)
        if hi < lo:
            raise ValueError("product window is empty after the degree cap")
        out = [0j] * (hi - lo + 1)
        for i, a in zip(self.degrees(), self.coeffs):
            if a == 0:
                continue
            for j, b in zip(other.degrees(), other.coeffs):
                d = i + j
                if d > hi:
                    break
                out[d - lo] += a * b
        dom = EvalDomain(min(self.domain.max_abs_arg, other.domain.max_abs_arg))
        return TruncatedSeries(lo, tuple(out), domain=dom)

    __rmul__ = __mul__


# -- constructors -------------------------------------------------------------

def make_series(terms: Iterable[tuple[int, complex]], label: str | None = None,
                domain: EvalDomain | None = None) -> TruncatedSeries:
    """Build a series from (degree, coefficient) pairs.

    The window spans the min to max supplied degree; unsupplied interior
    degrees are zero.  Duplicate degrees are an error.
    """
    seen: dict[int, complex] = {}
    for d, v in terms:
        d = int(d)
        if d in seen:
            raise ValueError(f"duplicate degree {d}")
        seen[d] = _checked(v, f"coefficient of degree {d}")
    if not seen:
        raise ValueError("no terms supplied")
    lo, hi = min(seen), max(seen)
    coeffs = tuple(seen.get(d, 0j) for d in range(lo, hi + 1))
    return TruncatedSeries(lo, coeffs, label=label, domain=domain)


def constant_series(value: complex, label: str | None = None) -> TruncatedSeries:
    return TruncatedSeries(0, (_checked(value, "constant"),), label=label)


def series_exp(trunc: int = DEFAULT_TRUNCATION) -> TruncatedSeries:
    """The exponential series sum z^k / k! truncated at degree trunc."""
    if trunc < 0:
        raise ValueError("truncation order must be nonnegative")
    coeffs = tuple(1 / math.factorial(k) + 0j for k in range(trunc + 1))
    return TruncatedSeries(0, coeffs, label="exp",
                           domain=EvalDomain(ENTIRE_MAX_ABS_ARG))


def series_geometric(trunc: int = DEFAULT_TRUNCATION) -> TruncatedSeries:
    """The geometric series sum z^k (that is, 1/(1-z)) truncated at trunc."""
    if trunc < 0:
        raise ValueError("truncation order must be nonnegative")
    return TruncatedSeries(0, (1 + 0j,) * (trunc + 1), label="geometric",
                           domain=EvalDomain(GEOMETRIC_MAX_ABS_ARG))


# -- serialization ------------------------------------------------------------

def series_to_json(s: TruncatedSeries) -> dict:
    obj: dict = {
        "min_deg": s.min_deg,
        "coeffs": [[c.real, c.imag] for c in s.coeffs],
    }
    if s.label is not None:
        obj["label"] = s.label
    return obj


def series_from_json(obj: dict) -> TruncatedSeries:
    if not isinstance(obj, dict):
        raise ValueError("series JSON must be an object")
    try:
        min_deg = obj["min_deg"]
        raw = obj["coeffs"]
    except (KeyError, TypeError) as exc:
        raise ValueError("series JSON needs 'min_deg' and 'coeffs'") from exc
    if not isinstance(min_deg, int):
        raise ValueError("'min_deg' must be an integer")
    if not isinstance(raw, list) or not raw:
        raise ValueError("'coeffs' must be a nonempty list of [re, im] pairs")
    coeffs = []
    for entry in raw:
        if not (isinstance(entry, (list, tuple)) and len(entry) == 2):
            raise ValueError(f"bad coefficient entry {entry!r}")
        coeffs.append(complex(float(entry[0]), float(entry[1])))
    label = obj.get("label")
    if label is not None and not isinstance(label, str):
        raise ValueError("'label' must be a string")
    return TruncatedSeries(min_deg, coeffs, label=label)


# -- comparison helpers --------------------------------------------------------

def max_coeff_diff(s: TruncatedSeries, t: TruncatedSeries,
                   lo: int | None = None, hi: int | None = None) -> float:
    """Max |a_k - b_k| over [lo, hi] (default: the union of both windows)."""
    if lo is None:
        lo = min(s.min_deg, t.min_deg)
    if hi is None:
        hi = max(s.max_deg, t.max_deg)
    return max((abs(s.coeff(d) - t.coeff(d)) for d in range(lo, hi + 1)), default=0.0)


def coeff_residual(s: TruncatedSeries, t: TruncatedSeries,
                   lo: int | None = None, hi: int | None = None) -> float:
    """Max normalized coefficient gap |a-b| / max(1, |a|, |b|) over a window."""
    if lo is None:
        lo = min(s.min_deg, t.min_deg)
    if hi is None:
        hi = max(s.max_deg, t.max_deg)
    worst = 0.0
    for d in range(lo, hi + 1):
        a, b = s.coeff(d), t.coeff(d)
        gap = abs(a - b) / max(1.0, abs(a), abs(b))
        if gap > worst:
            worst = gap
    return worst


def coeff_close(s: TruncatedSeries, t: TruncatedSeries,
                rel: float = 1e-9, abs_tol: float = 1e-12) -> bool:
    """Coefficientwise closeness with relative tolerance and absolute floor."""
    lo = min(s.min_deg, t.min_deg)
    hi = max(s.max_deg, t.max_deg)
    for d in range(lo, hi + 1):
        a, b = s.coeff(d), t.coeff(d)
        if abs(a - b) > max(abs_tol, rel * max(abs(a), abs(b))):
            return False
    return True

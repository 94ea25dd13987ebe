"""Higher-order hyperbolic families: cyclic components of the exponential.

Component s of order n with weight alpha is the series
sum_m alpha**m z**(n m + s) / (n m + s)!, the degree-class sieve of exp.
At n = 2 these are cosh and sinh for alpha = 1, and cos and sin for
alpha = -1.  The geometric counterpart sieves 1/(1-z) instead.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from .cyclic import AlphaRoot, CyclicContext, alpha_root, make_context, project_series
from .series import (DEFAULT_TRUNCATION, GEOMETRIC_MAX_ABS_ARG, DomainError,
                     TruncatedSeries, _ipow, series_exp, series_from_json,
                     series_to_json)

__all__ = [
    "HyperbolicFamily",
    "build_family",
    "h_eval",
    "g_eval",
    "laurent_component",
    "family_to_json",
    "family_from_json",
]


@dataclass(frozen=True)
class HyperbolicFamily:
    """The n component series plus the data needed for closed-form evaluation.

    base is the scalar function whose sieve the components are (the library
    exponential for the classical family); it feeds the closed-form path and
    is None when only series evaluation is available.
    """

    ctx: CyclicContext
    root: AlphaRoot
    components: tuple[TruncatedSeries, ...]
    base: Callable[[complex], complex] | None = field(default=None, compare=False)
    kind: str = "exp"


@lru_cache(maxsize=128)
def build_family(n: int, a: AlphaRoot, trunc: int = DEFAULT_TRUNCATION) -> HyperbolicFamily:
    """Sieve the exponential series into its n weighted components."""
    n = int(n)
    if a.n != n:
        raise ValueError(f"root order {a.n} does not match requested order {n}")
    ctx = make_context(n)
    base = series_exp(trunc)
    comps = tuple(
        project_series(base, ctx, s, a).with_label(f"exp[{s} mod {n}]")
        for s in range(n)
    )
    return HyperbolicFamily(ctx, a, comps, base=cmath.exp, kind="exp")


def h_eval(fam: HyperbolicFamily, s: int, z: complex, method: str = "series") -> complex:
    """Evaluate component s at z.

    method "series" runs Horner on the stored window; "closed" averages the
    base function over root-of-unity rotations of the scaled argument, which
    needs alpha != 0 and an attached base function.
    """
    n = fam.ctx.n
    s = int(s) % n
    z = complex(z)
    comp = fam.components[s]
    if method == "series":
        return comp.evaluate(z)
    if method != "closed":
        raise ValueError(f"unknown method {method!r}")
    if fam.root.alpha == 0:
        raise ValueError("closed form needs alpha != 0; use the series method")
    if fam.base is None:
        raise ValueError("this family carries no base function for the closed form")
    if abs(z) > comp.domain.max_abs_arg:
        raise DomainError(
            f"|z| = {abs(z):.6g} exceeds the evaluation bound "
            f"{comp.domain.max_abs_arg:.6g}")
    ctx, r = fam.ctx, fam.root.root
    acc = 0j
    for k in range(n):
        acc += ctx.omega_pow[(-k * s) % n] * fam.base(ctx.omega_pow[k] * r * z)
    return acc / n * _ipow(r, -s)


def g_eval(ctx: CyclicContext, a: AlphaRoot, l: int, z: complex) -> complex:
    """Closed-form geometric component: the sieve of 1/(1-z), evaluated at z.

    Requires alpha != 0 and |r z| <= 0.9 so every rotated argument stays
    inside the geometric domain.
    """
    if a.n != ctx.n:
        raise ValueError(f"root order {a.n} does not match context order {ctx.n}")
    if a.alpha == 0:
        raise ValueError("alpha = 0 has no pointwise form; sieve the series instead")
    n = ctx.n
    l = int(l) % n
    z = complex(z)
    if abs(a.root * z) > GEOMETRIC_MAX_ABS_ARG:
        raise DomainError(
            f"|r z| = {abs(a.root * z):.6g} exceeds the geometric bound "
            f"{GEOMETRIC_MAX_ABS_ARG}")
    acc = 0j
    for k in range(n):
        acc += ctx.omega_pow[(-k * l) % n] / (1 - ctx.omega_pow[k] * a.root * z)
    return acc / n * _ipow(a.root, -l)


def laurent_component(s: TruncatedSeries, ctx: CyclicContext, a: AlphaRoot,
                      l: int) -> TruncatedSeries:
    """Weighted component of an arbitrary series, labeled for bookkeeping."""
    l = int(l) % ctx.n
    src = s.label or "series"
    return project_series(s, ctx, l, a).with_label(f"{src}[{l} mod {ctx.n}]")


# -- serialization ------------------------------------------------------------

def family_to_json(fam: HyperbolicFamily) -> dict:
    return {
        "n": fam.ctx.n,
        "alpha": [fam.root.alpha.real, fam.root.alpha.imag],
        "branch": fam.root.branch,
        "kind": fam.kind,
        "components": [series_to_json(c) for c in fam.components],
    }


def family_from_json(obj: dict) -> HyperbolicFamily:
    if not isinstance(obj, dict):
        raise ValueError("family JSON must be an object")
    try:
        n = int(obj["n"])
        al = obj["alpha"]
        branch = int(obj["branch"])
        raw = obj["components"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError("family JSON needs n, alpha, branch, components") from exc
    if not (isinstance(al, (list, tuple)) and len(al) == 2):
        raise ValueError("'alpha' must be an [re, im] pair")
    if not isinstance(raw, list) or len(raw) != n:
        raise ValueError("'components' must list exactly n series")
    a = alpha_root(complex(float(al[0]), float(al[1])), n, branch)
    ctx = make_context(n)
    comps = tuple(series_from_json(c) for c in raw)
    kind = obj.get("kind", "exp")
    base = cmath.exp if kind == "exp" else None
    return HyperbolicFamily(ctx, a, comps, base=base, kind=kind)

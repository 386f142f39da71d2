"""Lambda operations on the quasi-shuffle algebra.

The Adams (Frobenius) operator multiplies every part of a composition by n;
it is a ring endomorphism. The lambda operations are recovered from the
Adams operators through the Newton recursion

    n * lam_n(a) = sum_{i=1..n} (-1)**(i-1) * lam_{n-i}(a) * f_i(a),

the series convention being lam_t(a) = 1 + sum lam_n(a) t^n with
t (d/dt) log lam_t(a) = sum (-1)**(n-1) f_n(a) t^n. With this convention
lam_n of a sum of monomials is the n-th elementary symmetric polynomial of
those monomials, which the polynomial oracle verifies directly.

Every division by n in the recursion is exact on integral elements; an
inexact one raises IntegralityError because it can only mean a bug.

Computed lambda series are memoized per element. The environment variable
QSYMM_MAX_MEMO caps the number of cached elements (default 4096, FIFO
eviction); results are deterministic, so cache races are benign.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .compositions import Composition, composition
from .elements import QSymmElement, Scalar, _norm_scalar
from .errors import IntegralityError

_DEFAULT_MEMO_CAP = 4096
_series_memo: dict[QSymmElement, list[QSymmElement]] = {}


def _memo_cap() -> int:
    raw = os.environ.get("QSYMM_MAX_MEMO", "")
    try:
        cap = int(raw)
    except ValueError:
        return _DEFAULT_MEMO_CAP
    return max(cap, 0) if raw else _DEFAULT_MEMO_CAP


def clear_memo() -> None:
    """Drop all cached lambda series (mainly for tests and memory control)."""
    _series_memo.clear()


def frobenius(n: int, a: QSymmElement) -> QSymmElement:
    """Adams operator: multiply every part of every composition by n."""
    if n < 1:
        raise ValueError("frobenius index must be >= 1")
    return QSymmElement({tuple(n * p for p in comp): q for comp, q in a.terms()})


@dataclass(frozen=True)
class LambdaSeries:
    """Truncated series 1 + lam_1(a) t + ... + lam_N(a) t^N."""

    base: QSymmElement
    coefficients: tuple[QSymmElement, ...]

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, n: int) -> QSymmElement:
        if not 0 <= n <= self.order:
            raise ValueError(f"series truncated at order {self.order}, asked for {n}")
        return self.coefficients[n]


def _divide_exact(el: QSymmElement, n: int, must_be_integral: bool) -> QSymmElement:
    terms: dict[Composition, Scalar] = {}
    for comp, q in el.terms():
        if must_be_integral:
            if not isinstance(q, int) or q % n != 0:
                raise IntegralityError(
                    f"division by {n} is inexact on coefficient {q} of "
                    f"{comp}; lambda operations must stay integral"
                )
            terms[comp] = q // n
        else:
            terms[comp] = _norm_scalar(Fraction(q, n))
    return QSymmElement(terms)


def lambda_series(a: QSymmElement, order: int) -> LambdaSeries:
    """Lambda series of `a` up to the given truncation order (memoized)."""
    if order < 0:
        raise ValueError("order must be >= 0")
    cached = _series_memo.get(a)
    # Extend a copy and swap it in whole: entries are only ever replaced by
    # longer versions of themselves, so concurrent last-write-wins is safe.
    coeffs = list(cached) if cached is not None else [QSymmElement.one()]
    integral = a.is_integral()
    while len(coeffs) <= order:
        n = len(coeffs)
        acc = QSymmElement()
        for i in range(1, n + 1):
            term = coeffs[n - i] * frobenius(i, a)
            acc = acc + term if i % 2 == 1 else acc - term
        coeffs.append(_divide_exact(acc, n, integral))
    if cached is None or len(coeffs) > len(cached):
        cap = _memo_cap()
        if cap:
            while len(_series_memo) >= cap and a not in _series_memo:
                _series_memo.pop(next(iter(_series_memo)))
            _series_memo[a] = coeffs
    return LambdaSeries(a, tuple(coeffs[: order + 1]))


def lambda_n(n: int, a: QSymmElement) -> QSymmElement:
    """The n-th lambda operation; lam_0 = 1, lam_1 = identity."""
    if n < 0:
        raise ValueError("lambda index must be >= 0")
    return lambda_series(a, n).coefficient(n)


def adams_from_lambda(n: int, series: LambdaSeries) -> QSymmElement:
    """Recover the n-th Adams operator value from a lambda series.

    Inverts the Newton recursion; round-trips with `frobenius` on the
    series base element.
    """
    if n < 1:
        raise ValueError("adams index must be >= 1")
    if series.order < n:
        raise ValueError(f"series truncated at order {series.order}, need {n}")
    lam = series.coefficients
    adams: list[QSymmElement] = [QSymmElement()]  # placeholder at index 0
    for m in range(1, n + 1):
        acc = m * lam[m]
        for i in range(1, m):
            term = lam[m - i] * adams[i]
            acc = acc - term if i % 2 == 1 else acc + term
        adams.append(acc if m % 2 == 1 else -acc)
    return adams[n]


def elementary_gen(n: int, alpha: Iterable[int]) -> QSymmElement:
    """The weight n*wt(alpha) generator lam_n(alpha) of a composition."""
    if n < 1:
        raise ValueError("generator index must be >= 1")
    comp = composition(alpha)
    if not comp:
        raise ValueError("generator base composition must be nonempty")
    return lambda_n(n, QSymmElement.monomial(comp))


def power_gen(n: int, alpha: Iterable[int]) -> QSymmElement:
    """The power-sum counterpart: the single composition with every part
    multiplied by n."""
    if n < 1:
        raise ValueError("generator index must be >= 1")
    comp = composition(alpha)
    if not comp:
        raise ValueError("generator base composition must be nonempty")
    return QSymmElement.monomial(tuple(n * p for p in comp))


# -- truncated power series over QSymm ---------------------------------------


def _series_mul(a: list[QSymmElement], b: list[QSymmElement], order: int) -> list[QSymmElement]:
    out = [QSymmElement() for _ in range(order + 1)]
    for i, ai in enumerate(a):
        if i > order or not ai:
            continue
        for j, bj in enumerate(b):
            if i + j > order:
                break
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return out


def _series_exp(s: list[QSymmElement], order: int) -> list[QSymmElement]:
    """exp of a series with zero constant term, truncated at `order`."""
    if s[0]:
        raise ValueError("exp needs a series with zero constant term")
    result = [QSymmElement.one()] + [QSymmElement() for _ in range(order)]
    power = list(result)
    for k in range(1, order + 1):
        power = _series_mul(power, s, order)
        power = [t * Fraction(1, k) for t in power]
        for i in range(order + 1):
            result[i] = result[i] + power[i]
    return result


def exp_identity_check(alpha: Iterable[int], order: int) -> bool:
    """Check that exp(sum (-1)**(n-1)/n * f_n(alpha) t^n) truncated at
    `order` has integral coefficients and equals the lambda series of alpha
    termwise. Returns False on any mismatch."""
    if order < 1:
        raise ValueError("order must be >= 1")
    base = QSymmElement.monomial(composition(alpha))
    log_terms = [QSymmElement()]
    for n in range(1, order + 1):
        coeff = Fraction(1, n) if n % 2 == 1 else Fraction(-1, n)
        log_terms.append(frobenius(n, base) * coeff)
    exp_side = _series_exp(log_terms, order)
    lam = lambda_series(base, order)
    for n in range(order + 1):
        if not exp_side[n].is_integral():
            return False
        if exp_side[n] != lam.coefficient(n):
            return False
    return True

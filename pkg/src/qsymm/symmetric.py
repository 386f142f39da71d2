"""Symmetric functions in the elementary and power-sum bases.

A polynomial is a finite rational combination of partitions (weakly
decreasing tuples of positive ints); a partition stands for the product of
the basis functions indexed by its parts. Conversions between the two bases
run through the Newton identities

    n * e_n = sum_{i=1..n} (-1)**(i-1) * e_{n-i} * p_i

so the p-basis side is intrinsically rational while p_n written in the e
basis always has integer coefficients. Plethysm is implemented only for
substitution of a power sum on the right (p_k -> p_{k*m}), which is all the
generator machinery needs, and evaluation substitutes lambda operations for
the elementary functions, turning any e-polynomial into an operation on
quasi-shuffle elements.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Union

from .compositions import composition
from .elements import QSymmElement, Scalar, _norm_scalar
from .errors import IntegralityError
from .lambda_ops import frobenius, lambda_n, lambda_series

Partition = tuple[int, ...]

E_BASIS = "e"
P_BASIS = "p"


def _partition(parts: Iterable[int]) -> Partition:
    p = tuple(sorted(parts, reverse=True))
    if any(x < 1 for x in p):
        raise ValueError("partition parts must be positive")
    return p


class SymmPoly:
    """Sparse symmetric function tagged with its basis ('e' or 'p')."""

    __slots__ = ("basis", "_terms")

    def __init__(
        self,
        basis: str,
        terms: Mapping[Partition, Scalar] | Iterable[tuple[Partition, Scalar]] = (),
    ):
        if basis not in (E_BASIS, P_BASIS):
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Partition, Scalar] = {}
        for part, q in items:
            part = _partition(part)
            q = acc.get(part, 0) + _norm_scalar(q)
            if q:
                acc[part] = q
            else:
                acc.pop(part, None)
        self._terms = {
            p: _norm_scalar(acc[p])
            for p in sorted(acc, key=lambda p: (sum(p), -len(p), p))
        }

    @classmethod
    def e(cls, n: int) -> "SymmPoly":
        """The n-th elementary symmetric function (e_0 = 1)."""
        if n < 0:
            raise ValueError("index must be >= 0")
        return cls(E_BASIS, {(n,) if n else (): 1})

    @classmethod
    def p(cls, n: int) -> "SymmPoly":
        """The n-th power sum (p_0 = 1)."""
        if n < 0:
            raise ValueError("index must be >= 0")
        return cls(P_BASIS, {(n,) if n else (): 1})

    @classmethod
    def one(cls, basis: str) -> "SymmPoly":
        return cls(basis, {(): 1})

    @classmethod
    def zero(cls, basis: str) -> "SymmPoly":
        return cls(basis)

    def terms(self) -> Iterator[tuple[Partition, Scalar]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_integral(self) -> bool:
        return all(q.denominator == 1 for q in self._terms.values())

    def _check_basis(self, other: "SymmPoly") -> None:
        if self.basis != other.basis:
            raise ValueError(f"mixed bases: {self.basis!r} and {other.basis!r}")

    def __add__(self, other: "SymmPoly") -> "SymmPoly":
        if not isinstance(other, SymmPoly):
            return NotImplemented
        self._check_basis(other)
        acc = dict(self._terms)
        for part, q in other._terms.items():
            s = acc.get(part, 0) + q
            if s:
                acc[part] = s
            else:
                acc.pop(part, None)
        return SymmPoly(self.basis, acc)

    def __neg__(self) -> "SymmPoly":
        return SymmPoly(self.basis, {p: -q for p, q in self._terms.items()})

    def __sub__(self, other: "SymmPoly") -> "SymmPoly":
        if not isinstance(other, SymmPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union["SymmPoly", Scalar]) -> "SymmPoly":
        if isinstance(other, SymmPoly):
            self._check_basis(other)
            acc: dict[Partition, Scalar] = {}
            for p1, q1 in self._terms.items():
                for p2, q2 in other._terms.items():
                    key = _partition(p1 + p2)
                    s = acc.get(key, 0) + q1 * q2
                    if s:
                        acc[key] = s
                    else:
                        acc.pop(key, None)
            return SymmPoly(self.basis, acc)
        q = _norm_scalar(other)
        if not q:
            return SymmPoly(self.basis)
        return SymmPoly(self.basis, {p: v * q for p, v in self._terms.items()})

    def __rmul__(self, other: Scalar) -> "SymmPoly":
        return self.__mul__(other)

    def __pow__(self, n: int) -> "SymmPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = SymmPoly.one(self.basis)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymmPoly):
            return NotImplemented
        return self.basis == other.basis and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.basis, tuple(self._terms.items())))

    def __repr__(self) -> str:
        return f"SymmPoly({format_symm(self)!r})"

    def __str__(self) -> str:
        return format_symm(self)


@lru_cache(maxsize=None)
def _e_in_p(n: int) -> SymmPoly:
    """e_n expressed in the p basis (rational coefficients)."""
    if n == 0:
        return SymmPoly.one(P_BASIS)
    acc = SymmPoly.zero(P_BASIS)
    for i in range(1, n + 1):
        term = _e_in_p(n - i) * SymmPoly.p(i)
        acc = acc + term if i % 2 == 1 else acc - term
    return acc * Fraction(1, n)


@lru_cache(maxsize=None)
def _p_in_e(n: int) -> SymmPoly:
    """p_n expressed in the e basis (integer coefficients)."""
    if n == 0:
        return SymmPoly.one(E_BASIS)
    acc = n * SymmPoly.e(n)
    for i in range(1, n):
        term = SymmPoly.e(n - i) * _p_in_e(i)
        acc = acc - term if i % 2 == 1 else acc + term
    return acc if n % 2 == 1 else -acc


def e_to_p(f: SymmPoly) -> SymmPoly:
    """Rewrite an e-basis polynomial in the p basis."""
    if f.basis != E_BASIS:
        raise ValueError("e_to_p needs an e-basis polynomial")
    acc = SymmPoly.zero(P_BASIS)
    for part, q in f.terms():
        prod = SymmPoly.one(P_BASIS)
        for n in part:
            prod = prod * _e_in_p(n)
        acc = acc + prod * q
    return acc


def p_to_e(f: SymmPoly) -> SymmPoly:
    """Rewrite a p-basis polynomial in the e basis."""
    if f.basis != P_BASIS:
        raise ValueError("p_to_e needs a p-basis polynomial")
    acc = SymmPoly.zero(E_BASIS)
    for part, q in f.terms():
        prod = SymmPoly.one(E_BASIS)
        for n in part:
            prod = prod * _p_in_e(n)
        acc = acc + prod * q
    return acc


def plethysm_p(f: SymmPoly, m: int) -> SymmPoly:
    """Substitute p_k -> p_{k*m} in every term (plethysm by a power sum)."""
    if f.basis != P_BASIS:
        raise ValueError("plethysm_p needs a p-basis polynomial")
    if m < 1:
        raise ValueError("power-sum index must be >= 1")
    return SymmPoly(P_BASIS, {tuple(k * m for k in part): q for part, q in f.terms()})


def e_compose_p(n: int, m: int) -> SymmPoly:
    """The e-basis polynomial for the n-th elementary function composed with
    the m-th power sum; always has integer coefficients."""
    if n < 1 or m < 1:
        raise ValueError("indices must be >= 1")
    result = p_to_e(plethysm_p(e_to_p(SymmPoly.e(n)), m))
    if not result.is_integral():
        raise IntegralityError(
            f"elementary composed with power sum ({n}, {m}) produced "
            f"non-integer coefficients: {result}"
        )
    return result


def evaluate_at(f: SymmPoly, a: QSymmElement) -> QSymmElement:
    """Substitute the lambda operations of `a` for the elementary functions
    in an e-basis polynomial; a ring homomorphism in `f` for fixed `a`."""
    if f.basis != E_BASIS:
        raise ValueError("evaluate_at needs an e-basis polynomial")
    max_index = max((part[0] for part, _ in f.terms() if part), default=0)
    lam = lambda_series(a, max_index)
    acc = QSymmElement()
    for part, q in f.terms():
        prod = QSymmElement.one()
        for n in part:
            prod = prod * lam.coefficient(n)
        acc = acc + prod * q
    return acc


def plethysm_compat_check(n: int, m: int, alpha: Iterable[int]) -> bool:
    """Compare the two routes to lam_n of the m-th Adams image of a
    composition: direct, and through the composed e-basis polynomial."""
    base = QSymmElement.monomial(composition(alpha))
    via_polynomial = evaluate_at(e_compose_p(n, m), base)
    direct = lambda_n(n, frobenius(m, base))
    return via_polynomial == direct


def format_symm(f: SymmPoly) -> str:
    """Render like `e2^2 - 2*e1*e3 + 2*e4`; the empty product is `1`."""
    if not f:
        return "0"
    chunks: list[tuple[str, str]] = []
    for part, q in f.terms():
        sign = "-" if q < 0 else "+"
        mag = -q if q < 0 else q
        factors = []
        for n in sorted(set(part)):
            count = part.count(n)
            factors.append(f"{f.basis}{n}" + (f"^{count}" if count > 1 else ""))
        body = "*".join(factors) if factors else "1"
        if mag != 1:
            body = f"{mag}*{body}" if factors else str(mag)
        chunks.append((sign, body))
    first_sign, first_body = chunks[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in chunks[1:]:
        out += f" {sign} {body}"
    return out

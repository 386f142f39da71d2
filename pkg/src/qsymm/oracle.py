"""Brute-force substitution oracle in finitely many variables.

Everything the other modules compute symbolically can be expanded into an
honest polynomial in x_1..x_k and recomputed from scratch there: a
composition becomes a sum over strictly increasing index tuples, the Adams
operator becomes x_j -> x_j**n, and a lambda power becomes the elementary
symmetric polynomial of the expansion's monomials. k at least the weight of
the element keeps the expansion faithful, so agreement in k variables is
agreement in the ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, Union

from .compositions import composition, enumerate_compositions, format_composition
from .elements import QSymmElement, Scalar, _norm_scalar, quasi_shuffle
from .lambda_ops import frobenius, lambda_n

ExponentVector = tuple[int, ...]


class TruncatedPolynomial:
    """Exact polynomial in a fixed number of variables, sparse over exponent
    vectors."""

    __slots__ = ("k", "_terms")

    def __init__(
        self,
        k: int,
        terms: Mapping[ExponentVector, Scalar] | Iterable[tuple[ExponentVector, Scalar]] = (),
    ):
        if k < 0:
            raise ValueError("variable count must be >= 0")
        self.k = k
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[ExponentVector, Scalar] = {}
        for exps, q in items:
            exps = tuple(exps)
            if len(exps) != k or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps!r} for {k} variables")
            q = acc.get(exps, 0) + _norm_scalar(q)
            if q:
                acc[exps] = q
            else:
                acc.pop(exps, None)
        self._terms = {e: _norm_scalar(acc[e]) for e in sorted(acc)}

    @classmethod
    def zero(cls, k: int) -> "TruncatedPolynomial":
        return cls(k)

    @classmethod
    def one(cls, k: int) -> "TruncatedPolynomial":
        return cls(k, {(0,) * k: 1})

    def terms(self):
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def _check_vars(self, other: "TruncatedPolynomial") -> None:
        if self.k != other.k:
            raise ValueError(f"mismatched variable counts {self.k} and {other.k}")

    def __add__(self, other: "TruncatedPolynomial") -> "TruncatedPolynomial":
        if not isinstance(other, TruncatedPolynomial):
            return NotImplemented
        self._check_vars(other)
        acc = dict(self._terms)
        for exps, q in other._terms.items():
            s = acc.get(exps, 0) + q
            if s:
                acc[exps] = s
            else:
                acc.pop(exps, None)
        return TruncatedPolynomial(self.k, acc)

    def __neg__(self) -> "TruncatedPolynomial":
        return TruncatedPolynomial(self.k, {e: -q for e, q in self._terms.items()})

    def __sub__(self, other: "TruncatedPolynomial") -> "TruncatedPolynomial":
        if not isinstance(other, TruncatedPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union["TruncatedPolynomial", Scalar]) -> "TruncatedPolynomial":
        if isinstance(other, TruncatedPolynomial):
            self._check_vars(other)
            acc: dict[ExponentVector, Scalar] = {}
            for e1, q1 in self._terms.items():
                for e2, q2 in other._terms.items():
                    key = tuple(a + b for a, b in zip(e1, e2))
                    s = acc.get(key, 0) + q1 * q2
                    if s:
                        acc[key] = s
                    else:
                        acc.pop(key, None)
            return TruncatedPolynomial(self.k, acc)
        q = _norm_scalar(other)
        if not q:
            return TruncatedPolynomial(self.k)
        return TruncatedPolynomial(self.k, {e: v * q for e, v in self._terms.items()})

    def __rmul__(self, other: Scalar) -> "TruncatedPolynomial":
        return self.__mul__(other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedPolynomial):
            return NotImplemented
        return self.k == other.k and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.k, tuple(self._terms.items())))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for exps, q in self._terms.items():
            vars_part = "*".join(
                f"x{i + 1}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(exps)
                if e
            )
            if not vars_part:
                pieces.append(str(q))
            elif q == 1:
                pieces.append(vars_part)
            elif q == -1:
                pieces.append(f"-{vars_part}")
            else:
                pieces.append(f"{q}*{vars_part}")
        return " + ".join(pieces).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"TruncatedPolynomial({self.k}, {str(self)!r})"


def expand_composition(alpha: Iterable[int], k: int) -> TruncatedPolynomial:
    """Sum over strictly increasing index tuples in k variables; requires
    k >= length(alpha) so no witness monomial is lost."""
    alpha = composition(alpha)
    m = len(alpha)
    if k < m:
        raise ValueError(
            f"insufficient variables: need at least {m} for {format_composition(alpha)}"
        )
    terms: dict[ExponentVector, Scalar] = {}
    for idxs in combinations(range(k), m):
        exps = [0] * k
        for pos, part in zip(idxs, alpha):
            exps[pos] = part
        terms[tuple(exps)] = 1
    return TruncatedPolynomial(k, terms)


def expand_element(a: QSymmElement, k: int) -> TruncatedPolynomial:
    """Image of an element in k variables. Compositions longer than k need
    more distinct indices than are available, so they vanish; that makes
    this the honest ring map, at the price of faithfulness below weight k."""
    acc = TruncatedPolynomial.zero(k)
    for comp, q in a.terms():
        if len(comp) <= k:
            acc = acc + expand_composition(comp, k) * q
    return acc


def poly_mul(p: TruncatedPolynomial, q: TruncatedPolynomial) -> TruncatedPolynomial:
    return p * q


def frobenius_poly(n: int, p: TruncatedPolynomial) -> TruncatedPolynomial:
    """Substitute x_j -> x_j**n, i.e. scale every exponent vector by n."""
    if n < 1:
        raise ValueError("frobenius index must be >= 1")
    return TruncatedPolynomial(p.k, {tuple(n * e for e in exps): q for exps, q in p.terms()})


def elementary_of_monomials(n: int, alpha: Iterable[int], k: int) -> TruncatedPolynomial:
    """n-th elementary symmetric polynomial of the monomials in the
    expansion of `alpha`: every monomial is a line element, so this is the
    lambda power computed entirely on the polynomial side."""
    if n < 0:
        raise ValueError("index must be >= 0")
    monomials = list(expand_composition(alpha, k).terms())
    elem = [TruncatedPolynomial.one(k)] + [TruncatedPolynomial.zero(k)] * n
    for exps, _ in monomials:
        mono = TruncatedPolynomial(k, {exps: 1})
        for j in range(n, 0, -1):
            elem[j] = elem[j] + elem[j - 1] * mono
    return elem[n]


# -- differential test driver -------------------------------------------------


@dataclass(frozen=True)
class OracleCheck:
    identity: str
    instance: str
    status: str  # "pass" | "fail"
    lhs: str
    rhs: str

    def to_json_obj(self) -> dict:
        return {
            "identity": self.identity,
            "instance": self.instance,
            "status": self.status,
            "lhs": self.lhs,
            "rhs": self.rhs,
        }


@dataclass(frozen=True)
class OracleReport:
    max_weight: int
    vars: int
    checks: tuple[OracleCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    @property
    def failures(self) -> tuple[OracleCheck, ...]:
        return tuple(c for c in self.checks if c.status != "pass")

    def to_json_obj(self) -> list[dict]:
        return [c.to_json_obj() for c in self.checks]

    def summary(self) -> str:
        n_fail = len(self.failures)
        return (
            f"oracle suite: {len(self.checks)} checks, "
            f"{len(self.checks) - n_fail} passed, {n_fail} failed "
            f"(max weight {self.max_weight}, {self.vars} variables)"
        )


def _check(identity: str, instance: str, lhs: TruncatedPolynomial, rhs: TruncatedPolynomial) -> OracleCheck:
    status = "pass" if lhs == rhs else "fail"
    return OracleCheck(identity, instance, status, str(lhs), str(rhs))


def oracle_suite(max_weight: int, k: int) -> OracleReport:
    """Differential test run: quasi-shuffle products, Adams operators and
    lambda powers recomputed on the polynomial side for all compositions up
    to `max_weight`. Requires k >= max_weight for faithfulness. Lambda
    checks are capped at weight-3 bases since their cost grows with n times
    the weight; the dedicated test suite pins that window anyway."""
    if max_weight < 1:
        raise ValueError("max_weight must be >= 1")
    if k < max_weight:
        raise ValueError(f"need at least as many variables as the weight ({k} < {max_weight})")
    checks: list[OracleCheck] = []

    by_weight = {w: enumerate_compositions(w) for w in range(0, max_weight + 1)}

    for u in range(0, max_weight + 1):
        for v in range(0, max_weight + 1 - u):
            for a in by_weight[u]:
                for b in by_weight[v]:
                    lhs = expand_element(quasi_shuffle(a, b), k)
                    rhs = expand_composition(a, k) * expand_composition(b, k)
                    checks.append(
                        _check(
                            "product",
                            f"{format_composition(a)}*{format_composition(b)}",
                            lhs,
                            rhs,
                        )
                    )

    for n in (1, 2, 3):
        for w in range(1, max_weight + 1):
            for alpha in by_weight[w]:
                lhs = expand_element(frobenius(n, QSymmElement.monomial(alpha)), k)
                rhs = frobenius_poly(n, expand_composition(alpha, k))
                checks.append(
                    _check("frobenius", f"f{n}({format_composition(alpha)})", lhs, rhs)
                )

    for n in (0, 1, 2, 3):
        for w in range(1, min(max_weight, 3) + 1):
            for alpha in by_weight[w]:
                lhs = expand_element(lambda_n(n, QSymmElement.monomial(alpha)), k)
                rhs = elementary_of_monomials(n, alpha, k)
                checks.append(
                    _check("lambda", f"lambda{n}({format_composition(alpha)})", lhs, rhs)
                )

    return OracleReport(max_weight=max_weight, vars=k, checks=tuple(checks))

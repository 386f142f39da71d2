"""The free module on compositions with the quasi-shuffle multiplication.

An element is a finite linear combination of compositions with exact rational
coefficients. Multiplication interleaves two compositions, optionally summing
one part from each side:

    (a::u) * (b::v) = a::(u * (b::v)) + b::((a::u) * v) + (a+b)::(u * v)

with the empty composition as unit. This is the multiplication the monomial
power-series realization induces, and the polynomial oracle checks it term
for term.

Elements are immutable; term maps iterate in wll-descending order so the
leading term is always first and output is reproducible.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Union

from .compositions import (
    Composition,
    composition,
    format_composition,
    parse_composition,
    _parse_composition_at,
    _skip_ws,
    wll_key,
)
from .errors import ParseError

Scalar = Union[int, Fraction]


def _norm_scalar(q: Scalar) -> Scalar:
    """Collapse integer-valued fractions to int; ints stay ints."""
    if isinstance(q, Fraction):
        if q.denominator == 1:
            return q.numerator
        return q
    if isinstance(q, int) and not isinstance(q, bool):
        return q
    raise TypeError(f"coefficients must be int or Fraction, got {type(q).__name__}")


@lru_cache(maxsize=None)
def _shuffle_terms(a: Composition, b: Composition) -> tuple[tuple[Composition, int], ...]:
    """Quasi-shuffle of two basis compositions as a term tuple (int coeffs)."""
    if b < a:  # commutative; canonicalize to halve the cache
        a, b = b, a
    if not a:
        return ((b, 1),)
    if not b:
        return ((a, 1),)
    acc: dict[Composition, int] = {}
    head_a, tail_a = a[0], a[1:]
    head_b, tail_b = b[0], b[1:]
    for prefix, rest_a, rest_b in (
        ((head_a,), tail_a, b),
        ((head_b,), a, tail_b),
        ((head_a + head_b,), tail_a, tail_b),
    ):
        for comp, m in _shuffle_terms(rest_a, rest_b):
            key = prefix + comp
            acc[key] = acc.get(key, 0) + m
    return tuple(acc.items())


# A trie node is [coefficient-at-node, {next part: child}, flat suffix list].
# Multiplying two elements through their tries shares all common-suffix work,
# which beats the per-term-pair route once both sides carry many long words.


def _build_trie(terms: Iterable[tuple[Composition, Scalar]]) -> list:
    root: list = [0, {}, None]
    for comp, q in terms:
        node = root
        for part in comp:
            node = node[1].setdefault(part, [0, {}, None])
        node[0] += q
    _flatten_trie(root)
    return root


def _flatten_trie(node: list) -> list:
    """Postorder fill of each node's nonempty-suffix word list."""
    flat: list[tuple[Composition, Scalar]] = []
    for part, child in node[1].items():
        _flatten_trie(child)
        prefix = (part,)
        if child[0]:
            flat.append((prefix, child[0]))
        for word, q in child[2]:
            flat.append((prefix + word, q))
    node[2] = flat
    return node


def _mul_tries(root_a: list, root_b: list) -> dict[Composition, Scalar]:
    memo: dict[tuple, dict[Composition, Scalar]] = {}

    def rec(a: list, with_eps_a: bool, b: list, with_eps_b: bool) -> dict[Composition, Scalar]:
        key = (id(a), with_eps_a, id(b), with_eps_b)
        hit = memo.get(key)
        if hit is not None:
            return hit
        res: dict[Composition, Scalar] = {}
        if with_eps_a and a[0]:
            ca = a[0]
            if with_eps_b and b[0]:
                res[()] = ca * b[0]
            for word, q in b[2]:
                res[word] = res.get(word, 0) + ca * q
        if with_eps_b and b[0]:
            cb = b[0]
            for word, q in a[2]:
                res[word] = res.get(word, 0) + cb * q
        for x, child_a in a[1].items():
            for word, q in rec(child_a, True, b, False).items():
                key2 = (x,) + word
                res[key2] = res.get(key2, 0) + q
        for y, child_b in b[1].items():
            for word, q in rec(a, False, child_b, True).items():
                key2 = (y,) + word
                res[key2] = res.get(key2, 0) + q
        for x, child_a in a[1].items():
            for y, child_b in b[1].items():
                merged = (x + y,)
                for word, q in rec(child_a, True, child_b, True).items():
                    key2 = merged + word
                    res[key2] = res.get(key2, 0) + q
        memo[key] = res
        return res

    return rec(root_a, True, root_b, True)


def _mul_pairwise(a: "QSymmElement", b: "QSymmElement") -> dict[Composition, Scalar]:
    acc: dict[Composition, Scalar] = {}
    for c1, q1 in a._terms.items():
        for c2, q2 in b._terms.items():
            q12 = q1 * q2
            for comp, m in _shuffle_terms(c1, c2):
                s = acc.get(comp, 0) + q12 * m
                if s:
                    acc[comp] = s
                else:
                    acc.pop(comp, None)
    return acc


def _mul_trie(a: "QSymmElement", b: "QSymmElement") -> dict[Composition, Scalar]:
    return _mul_tries(_build_trie(a._terms.items()), _build_trie(b._terms.items()))


# Large products are cached whole; entries can be megabytes, so the cap is
# small and eviction is FIFO. Deterministic results make races benign.
_PRODUCT_CACHE_CAP = 512
_product_cache: dict[tuple, "QSymmElement"] = {}


class QSymmElement:
    """A finite rational combination of compositions, in canonical form
    (no zero coefficients, terms sorted wll-descending)."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Composition, Scalar] | Iterable[tuple[Composition, Scalar]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Composition, Scalar] = {}
        for comp, q in items:
            comp = composition(comp)
            q = _norm_scalar(q)
            q = acc.get(comp, 0) + q
            if q:
                acc[comp] = q
            else:
                acc.pop(comp, None)
        self._terms = {c: _norm_scalar(acc[c]) for c in sorted(acc, key=wll_key, reverse=True)}
        self._hash: int | None = None

    @classmethod
    def zero(cls) -> "QSymmElement":
        return cls()

    @classmethod
    def one(cls) -> "QSymmElement":
        return cls({(): 1})

    @classmethod
    def monomial(cls, comp: Iterable[int], coeff: Scalar = 1) -> "QSymmElement":
        return cls({composition(comp): coeff})

    # -- inspection --------------------------------------------------------

    def terms(self) -> Iterator[tuple[Composition, Scalar]]:
        """Iterate (composition, coefficient) pairs, wll-descending."""
        return iter(self._terms.items())

    def compositions(self) -> Iterator[Composition]:
        return iter(self._terms)

    def coefficient(self, comp: Iterable[int]) -> Scalar:
        return self._terms.get(composition(comp), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_integral(self) -> bool:
        """True iff every coefficient is an integer."""
        return all(q.denominator == 1 for q in self._terms.values())

    def is_homogeneous(self, w: int) -> bool:
        """True iff every present composition has weight `w` (vacuously true
        for the zero element)."""
        return all(sum(c) == w for c in self._terms)

    def homogeneous_weight(self) -> int | None:
        """The common weight of all terms, or None if zero or mixed."""
        weights = {sum(c) for c in self._terms}
        if len(weights) == 1:
            return weights.pop()
        return None

    def leading_term_wll(self) -> tuple[Composition, Scalar]:
        """The wll-largest composition present, with its coefficient."""
        if not self._terms:
            raise ValueError("the zero element has no leading term")
        comp = next(iter(self._terms))
        return comp, self._terms[comp]

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "QSymmElement") -> "QSymmElement":
        if not isinstance(other, QSymmElement):
            return NotImplemented
        acc = dict(self._terms)
        for comp, q in other._terms.items():
            s = acc.get(comp, 0) + q
            if s:
                acc[comp] = s
            else:
                acc.pop(comp, None)
        return QSymmElement(acc)

    def __neg__(self) -> "QSymmElement":
        return QSymmElement({c: -q for c, q in self._terms.items()})

    def __sub__(self, other: "QSymmElement") -> "QSymmElement":
        if not isinstance(other, QSymmElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union["QSymmElement", Scalar]) -> "QSymmElement":
        if isinstance(other, QSymmElement):
            # Few or short terms: per-pair shuffles, memoized across calls.
            # Two long operands: the trie route shares common-suffix work,
            # and the whole product is worth caching.
            if len(self._terms) * len(other._terms) <= 64:
                return QSymmElement(_mul_pairwise(self, other))
            key = (self, other) if hash(self) <= hash(other) else (other, self)
            cached = _product_cache.get(key)
            if cached is None:
                cached = QSymmElement(_mul_trie(self, other))
                while len(_product_cache) >= _PRODUCT_CACHE_CAP:
                    _product_cache.pop(next(iter(_product_cache)))
                _product_cache[key] = cached
            return cached
        q = _norm_scalar(other)
        if not q:
            return QSymmElement()
        return QSymmElement({c: v * q for c, v in self._terms.items()})

    def __rmul__(self, other: Scalar) -> "QSymmElement":
        return self.__mul__(other)

    def __pow__(self, n: int) -> "QSymmElement":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = QSymmElement.one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSymmElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"QSymmElement({format_element(self)!r})"

    def __str__(self) -> str:
        return format_element(self)


def quasi_shuffle(a: Iterable[int], b: Iterable[int]) -> QSymmElement:
    """Quasi-shuffle product of two basis compositions.

    >>> print(quasi_shuffle((1,), (1,)))
    2*[1,1] + [2]
    """
    return QSymmElement(_shuffle_terms(composition(a), composition(b)))


# -- text and JSON forms ----------------------------------------------------


def _format_coeff(q: Scalar) -> str:
    return str(q)


def format_element(el: QSymmElement) -> str:
    """Render in wll-descending order, e.g. `2*[1,1] + [2]`; zero is `0`."""
    if not el:
        return "0"
    chunks: list[tuple[str, str]] = []
    for comp, q in el.terms():
        sign = "-" if q < 0 else "+"
        mag = -q if q < 0 else q
        body = format_composition(comp) if mag == 1 else f"{_format_coeff(mag)}*{format_composition(comp)}"
        chunks.append((sign, body))
    first_sign, first_body = chunks[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in chunks[1:]:
        out += f" {sign} {body}"
    return out


def parse_element(s: str) -> QSymmElement:
    """Parse element text: signed terms `coeff*[comp]`, `[comp]`, or a bare
    rational meaning a multiple of the empty composition. `0` is the zero
    element."""
    text = s.strip()
    if text == "0":
        return QSymmElement()
    pos = _skip_ws(s, 0)
    acc: dict[Composition, Scalar] = {}
    first = True
    while pos < len(s):
        sign = 1
        if s[pos] in "+-":
            sign = -1 if s[pos] == "-" else 1
            pos = _skip_ws(s, pos + 1)
        elif not first:
            raise ParseError("expected '+' or '-' between terms", pos)
        first = False
        coeff: Scalar = 1
        if pos < len(s) and s[pos].isdigit():
            coeff, pos = _parse_rational(s, pos)
            pos = _skip_ws(s, pos)
            if pos < len(s) and s[pos] == "*":
                pos = _skip_ws(s, pos + 1)
                comp, pos = _parse_composition_at(s, pos)
            else:
                comp = ()
        elif pos < len(s) and s[pos] == "[":
            comp, pos = _parse_composition_at(s, pos)
        else:
            raise ParseError("expected a coefficient or '['", pos)
        acc[comp] = acc.get(comp, 0) + sign * coeff
        pos = _skip_ws(s, pos)
    if first:
        raise ParseError("empty element literal", 0)
    return QSymmElement(acc)


def _parse_rational(s: str, pos: int) -> tuple[Scalar, int]:
    start = pos
    while pos < len(s) and s[pos].isdigit():
        pos += 1
    if pos == start:
        raise ParseError("expected an integer", pos)
    num = int(s[start:pos])
    if pos < len(s) and s[pos] == "/":
        pos += 1
        dstart = pos
        while pos < len(s) and s[pos].isdigit():
            pos += 1
        if pos == dstart:
            raise ParseError("expected a denominator", pos)
        den = int(s[dstart:pos])
        if den == 0:
            raise ParseError("zero denominator", dstart)
        return _norm_scalar(Fraction(num, den)), pos
    return num, pos


def element_to_json_obj(el: QSymmElement) -> list[dict]:
    """JSON form: wll-descending array of {"composition", "coeff"} objects,
    coefficients as decimal strings with an optional /denominator."""
    return [
        {"composition": list(comp), "coeff": _format_coeff(q)}
        for comp, q in el.terms()
    ]


def element_from_json_obj(obj: list[dict]) -> QSymmElement:
    acc: dict[Composition, Scalar] = {}
    for entry in obj:
        comp = composition(entry["composition"])
        q = Fraction(entry["coeff"])
        acc[comp] = acc.get(comp, 0) + q
    return QSymmElement(acc)


__all__ = [
    "QSymmElement",
    "quasi_shuffle",
    "format_element",
    "parse_element",
    "element_to_json_obj",
    "element_from_json_obj",
    "parse_composition",
]

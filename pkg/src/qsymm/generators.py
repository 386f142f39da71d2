"""Free polynomial generators for the quasi-shuffle algebra.

The generators are the lambda powers of elementary Lyndon compositions
(Lyndon words whose parts have gcd 1). A formal monomial is a multiset of
(base composition, lambda index) factors; expanding a monomial multiplies
the corresponding lambda powers out in the quasi-shuffle algebra.

`express` inverts the expansion constructively: given any composition it
returns the unique integer generator polynomial whose expansion is exactly
that composition. The rewriting recurses along the weight-length-lex order:

- a Lyndon word is the content-gcd power sum of its reduced word, which the
  Newton identities turn into a generator polynomial;
- a word with several Lyndon factor blocks is, up to wll-smaller terms, the
  quasi-shuffle product of its leading block and its tail;
- a pure power of a Lyndon word is, up to wll-smaller terms, the expansion
  of an elementary-composed-with-power-sum polynomial.

Each branch asserts at runtime that the remainder really drops in the wll
order; a violation raises ConsistencyError rather than producing a wrong
answer. Per-weight freeness certificates record the transition matrix from
generator monomials to compositions and its exact determinant, which must
be +1 or -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Iterator

from .compositions import (
    Composition,
    cfl_factorize,
    composition,
    concat_power,
    content_gcd,
    enumerate_compositions,
    enumerate_elementary_lyndon,
    format_composition,
    is_lyndon,
    _parse_composition_at,
    _skip_ws,
    reduce_content,
    weight,
    wll_key,
)
from .elements import QSymmElement, Scalar
from .errors import ConsistencyError, ParseError
from .lambda_ops import elementary_gen
from .symmetric import E_BASIS, SymmPoly, e_compose_p, _p_in_e

# A factor is (base composition, lambda index); a monomial is a tuple of
# factors sorted by (weight, base, index), one entry per power.
Factor = tuple[Composition, int]
GeneratorMonomial = tuple[Factor, ...]

UNIT_MONOMIAL: GeneratorMonomial = ()


def _factor_key(f: Factor) -> tuple[int, Composition, int]:
    alpha, n = f
    return (weight(alpha), alpha, n)


def make_monomial(factors: Iterable[Factor]) -> GeneratorMonomial:
    """Canonicalize a factor multiset, validating every base composition."""
    canon: list[Factor] = []
    for alpha, n in factors:
        alpha = composition(alpha)
        if not alpha or not is_lyndon(alpha) or content_gcd(alpha) != 1:
            raise ValueError(f"{format_composition(alpha)} is not an elementary Lyndon word")
        if n < 1:
            raise ValueError("lambda index must be >= 1")
        canon.append((alpha, n))
    return tuple(sorted(canon, key=_factor_key))


def monomial_weight(m: GeneratorMonomial) -> int:
    return sum(n * weight(alpha) for alpha, n in m)


def _monomial_sort_key(m: GeneratorMonomial) -> tuple:
    return tuple(_factor_key(f) for f in m)


@lru_cache(maxsize=None)
def _expand_monomial(m: GeneratorMonomial) -> QSymmElement:
    if not m:
        return QSymmElement.one()
    acc = _expand_monomial(m[:-1])
    alpha, n = m[-1]
    return acc * elementary_gen(n, alpha)


class GeneratorPolynomial:
    """Integer polynomial in the formal generators, canonical form."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[GeneratorMonomial, int] | Iterable[tuple[GeneratorMonomial, int]] = ()):
        items = terms.items() if isinstance(terms, dict) else terms
        acc: dict[GeneratorMonomial, int] = {}
        for mono, c in items:
            if not isinstance(c, int) or isinstance(c, bool):
                raise ValueError("generator polynomial coefficients must be int")
            c = acc.get(mono, 0) + c
            if c:
                acc[mono] = c
            else:
                acc.pop(mono, None)
        self._terms = {m: acc[m] for m in sorted(acc, key=_monomial_sort_key, reverse=True)}

    @classmethod
    def zero(cls) -> "GeneratorPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "GeneratorPolynomial":
        return cls({UNIT_MONOMIAL: 1})

    @classmethod
    def generator(cls, alpha: Iterable[int], n: int) -> "GeneratorPolynomial":
        return cls({make_monomial([(composition(alpha), n)]): 1})

    def terms(self) -> Iterator[tuple[GeneratorMonomial, int]]:
        return iter(self._terms.items())

    def coefficient(self, m: GeneratorMonomial) -> int:
        return self._terms.get(m, 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: "GeneratorPolynomial") -> "GeneratorPolynomial":
        if not isinstance(other, GeneratorPolynomial):
            return NotImplemented
        acc = dict(self._terms)
        for mono, c in other._terms.items():
            s = acc.get(mono, 0) + c
            if s:
                acc[mono] = s
            else:
                acc.pop(mono, None)
        return GeneratorPolynomial(acc)

    def __neg__(self) -> "GeneratorPolynomial":
        return GeneratorPolynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "GeneratorPolynomial") -> "GeneratorPolynomial":
        if not isinstance(other, GeneratorPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, GeneratorPolynomial):
            acc: dict[GeneratorMonomial, int] = {}
            for m1, c1 in self._terms.items():
                for m2, c2 in other._terms.items():
                    key = tuple(sorted(m1 + m2, key=_factor_key))
                    s = acc.get(key, 0) + c1 * c2
                    if s:
                        acc[key] = s
                    else:
                        acc.pop(key, None)
            return GeneratorPolynomial(acc)
        if isinstance(other, int) and not isinstance(other, bool):
            if not other:
                return GeneratorPolynomial()
            return GeneratorPolynomial({m: c * other for m, c in self._terms.items()})
        return NotImplemented

    def __rmul__(self, other: int) -> "GeneratorPolynomial":
        return self.__mul__(other)

    def __pow__(self, n: int) -> "GeneratorPolynomial":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = GeneratorPolynomial.one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GeneratorPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __repr__(self) -> str:
        return f"GeneratorPolynomial({format_generator_polynomial(self)!r})"

    def __str__(self) -> str:
        return format_generator_polynomial(self)

    def expand(self) -> QSymmElement:
        """Multiply the generators out in the quasi-shuffle algebra."""
        acc = QSymmElement()
        for mono, c in self._terms.items():
            acc = acc + _expand_monomial(mono) * c
        return acc


def expand(g: GeneratorPolynomial) -> QSymmElement:
    return g.expand()


def _symm_to_generators(f: SymmPoly, alpha: Composition) -> GeneratorPolynomial:
    """Reinterpret an integer e-basis polynomial with e_j read as the j-th
    generator of `alpha`."""
    if f.basis != E_BASIS:
        raise ValueError("need an e-basis polynomial")
    terms: dict[GeneratorMonomial, int] = {}
    for part, q in f.terms():
        if q.denominator != 1:
            raise ValueError(f"non-integer coefficient {q} cannot enter a generator polynomial")
        mono = make_monomial([(alpha, j) for j in part])
        terms[mono] = terms.get(mono, 0) + int(q)
    return GeneratorPolynomial(terms)


_express_memo: dict[Composition, GeneratorPolynomial] = {}


def express(beta: Iterable[int]) -> GeneratorPolynomial:
    """The unique generator polynomial expanding to the given composition.

    Raises ConsistencyError if a rewriting remainder fails to be strictly
    wll-smaller, which the theory rules out.
    """
    beta = composition(beta)
    if not beta:
        raise ValueError("express needs a nonempty composition")
    cached = _express_memo.get(beta)
    if cached is not None:
        return cached

    if is_lyndon(beta):
        g = content_gcd(beta)
        alpha = reduce_content(beta)
        result = _symm_to_generators(_p_in_e(g), alpha)
    else:
        factors = cfl_factorize(beta)
        if len(factors) >= 2:
            head_word, head_mult = factors[0]
            head = concat_power(head_word, head_mult)
            tail = beta[len(head):]
            candidate = express(head) * express(tail)
        else:
            lyndon, mult = factors[0]
            g = content_gcd(lyndon)
            alpha = reduce_content(lyndon)
            candidate = _symm_to_generators(e_compose_p(mult, g), alpha)
        result = candidate - express_element(_remainder(candidate, beta))

    _express_memo[beta] = result
    return result


def _remainder(candidate: GeneratorPolynomial, beta: Composition) -> QSymmElement:
    """expand(candidate) minus beta, verified strictly wll-smaller than beta."""
    rem = candidate.expand() - QSymmElement.monomial(beta)
    beta_key = wll_key(beta)
    for comp in rem.compositions():
        if wll_key(comp) >= beta_key:
            raise ConsistencyError(
                f"rewriting {format_composition(beta)} left the non-smaller "
                f"term {format_composition(comp)} in the remainder"
            )
    return rem


def express_element(a: QSymmElement) -> GeneratorPolynomial:
    """Linear extension of `express` to integral elements."""
    if not a.is_integral():
        raise ValueError("express_element needs an integral element")
    acc = GeneratorPolynomial()
    for comp, q in a.terms():
        part = GeneratorPolynomial.one() if not comp else express(comp)
        acc = acc + part * int(q)
    return acc


def enumerate_generator_monomials(w: int) -> list[GeneratorMonomial]:
    """All generator monomials of total weight `w`, in the canonical
    descending monomial order (there are 2**(w-1) of them)."""
    if w < 1:
        raise ValueError("weight must be >= 1")
    symbols: list[Factor] = []
    for alpha in enumerate_elementary_lyndon(w):
        for n in range(1, w // weight(alpha) + 1):
            symbols.append((alpha, n))
    symbols.sort(key=_factor_key)
    sym_weight = [n * weight(alpha) for alpha, n in symbols]

    found: list[GeneratorMonomial] = []

    def pick(start: int, remaining: int, acc: list[Factor]) -> None:
        if remaining == 0:
            found.append(tuple(acc))
            return
        for j in range(start, len(symbols)):
            if sym_weight[j] <= remaining:
                acc.append(symbols[j])
                pick(j, remaining - sym_weight[j], acc)
                acc.pop()

    pick(0, w, [])
    found.sort(key=_monomial_sort_key, reverse=True)
    return found


# -- exact determinants and certificates -------------------------------------


def det_bareiss(rows: Iterable[Iterable[int]]) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    a = [list(r) for r in rows]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("matrix must be square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i, row_k = a[i], a[k]
            factor = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class FreenessCertificate:
    """Per-weight witness that the generator monomials form a basis: the
    transition matrix to the composition basis with determinant +1 or -1."""

    weight: int
    determinant: int
    row_order: tuple[Composition, ...]
    col_order: tuple[GeneratorMonomial, ...]
    matrix: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.row_order)

    @property
    def composition_count(self) -> int:
        return len(self.row_order)

    @property
    def monomial_count(self) -> int:
        return len(self.col_order)

    @property
    def is_unimodular(self) -> bool:
        return self.determinant in (1, -1)


def _expand_elementary(mono: GeneratorMonomial) -> QSymmElement:
    return _expand_monomial(mono)


def _expand_product_form(mono: GeneratorMonomial) -> QSymmElement:
    acc = QSymmElement.one()
    for alpha, n in mono:
        acc = acc * product_gen(n, alpha).expand()
    return acc


_GENERATOR_EXPANDERS: dict[str, Callable[[GeneratorMonomial], QSymmElement]] = {
    "elementary": _expand_elementary,
    "product": _expand_product_form,
}


@lru_cache(maxsize=None)
def freeness_certificate(w: int, generators: str = "elementary") -> FreenessCertificate:
    """Build the weight-`w` transition matrix and its exact determinant.

    `generators` selects which family labels the columns: the lambda-power
    generators themselves ("elementary") or their product-form counterparts
    ("product"). Raises ConsistencyError if the matrix is not square or the
    determinant is not +1 or -1, since either would falsify freeness.
    """
    if w < 1:
        raise ValueError("weight must be >= 1")
    try:
        expander = _GENERATOR_EXPANDERS[generators]
    except KeyError:
        raise ValueError(f"unknown generator family {generators!r}") from None
    comps = enumerate_compositions(w)
    monos = enumerate_generator_monomials(w)
    if len(comps) != len(monos):
        raise ConsistencyError(
            f"weight {w}: {len(monos)} generator monomials vs "
            f"{len(comps)} compositions; transition matrix is not square"
        )
    columns: list[dict[Composition, Scalar]] = []
    for mono in monos:
        el = expander(mono)
        if not el.is_integral() or not el.is_homogeneous(w):
            raise ConsistencyError(f"expansion of {format_monomial(mono)} is malformed")
        columns.append(dict(el.terms()))
    matrix = tuple(
        tuple(int(col.get(comp, 0)) for col in columns) for comp in comps
    )
    det = det_bareiss(matrix)
    if det not in (1, -1):
        raise ConsistencyError(
            f"weight {w} transition matrix has determinant {det}, not +1/-1"
        )
    return FreenessCertificate(
        weight=w,
        determinant=det,
        row_order=tuple(comps),
        col_order=tuple(monos),
        matrix=matrix,
    )


# -- the product-form generator family ---------------------------------------


@lru_cache(maxsize=None)
def _product_gens_up_to(alpha: Composition, order: int) -> tuple[GeneratorPolynomial, ...]:
    """Solve prod_{k<=N} (1 - g_k t^k) = sum_k (-1)^k e_k(alpha) t^k for the
    g_k, term by term; the relation is triangular with unit diagonal."""
    series = [GeneratorPolynomial.one()] + [GeneratorPolynomial.zero()] * order
    gens: list[GeneratorPolynomial] = []
    for k in range(1, order + 1):
        e_k = GeneratorPolynomial.generator(alpha, k)
        target = e_k if k % 2 == 0 else -e_k
        g_k = series[k] - target
        gens.append(g_k)
        for j in range(order, k - 1, -1):
            series[j] = series[j] - g_k * series[j - k]
    return tuple(gens)


def product_gen(n: int, alpha: Iterable[int], order: int | None = None) -> GeneratorPolynomial:
    """The n-th generator of the product form: the factor coefficients g_k in
    prod (1 - g_k t^k) matching the alternating lambda-power series of
    `alpha`.

    Each g_n is the n-th lambda-power generator up to sign plus products of
    lower ones, so the two families generate the same ring. The defining
    product relation is the only reading under which that triangularity
    holds; it is asserted by the test suite rather than assumed.
    """
    alpha = composition(alpha)
    if order is None:
        order = n
    if not 1 <= n <= order:
        raise ValueError("need 1 <= n <= order")
    make_monomial([(alpha, 1)])  # validates alpha is elementary Lyndon
    return _product_gens_up_to(alpha, order)[n - 1]


# -- text and JSON forms ------------------------------------------------------


def format_monomial(m: GeneratorMonomial) -> str:
    """Render like `e1([1])^2*e2([1,2])`; the unit monomial is `1`."""
    if not m:
        return "1"
    pieces: list[str] = []
    i = 0
    while i < len(m):
        j = i
        while j < len(m) and m[j] == m[i]:
            j += 1
        alpha, n = m[i]
        piece = f"e{n}({format_composition(alpha)})"
        if j - i > 1:
            piece += f"^{j - i}"
        pieces.append(piece)
        i = j
    return "*".join(pieces)


def format_generator_polynomial(g: GeneratorPolynomial) -> str:
    """Render like `e1([1])*e2([1]) - e1([1,2]) - 3*e3([1])`; zero is `0`."""
    if not g:
        return "0"
    chunks: list[tuple[str, str]] = []
    for mono, c in g.terms():
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        body = format_monomial(mono)
        if mag != 1:
            body = f"{mag}*{body}" if mono else str(mag)
        chunks.append((sign, body))
    first_sign, first_body = chunks[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in chunks[1:]:
        out += f" {sign} {body}"
    return out


def parse_generator_polynomial(s: str) -> GeneratorPolynomial:
    """Parse the text form produced by `format_generator_polynomial`."""
    text = s.strip()
    if text == "0":
        return GeneratorPolynomial()
    pos = _skip_ws(s, 0)
    acc: dict[GeneratorMonomial, int] = {}
    first = True
    while pos < len(s):
        sign = 1
        if s[pos] in "+-":
            sign = -1 if s[pos] == "-" else 1
            pos = _skip_ws(s, pos + 1)
        elif not first:
            raise ParseError("expected '+' or '-' between terms", pos)
        first = False
        coeff = 1
        if pos < len(s) and s[pos].isdigit():
            start = pos
            while pos < len(s) and s[pos].isdigit():
                pos += 1
            coeff = int(s[start:pos])
            pos = _skip_ws(s, pos)
            if pos < len(s) and s[pos] == "*":
                pos = _skip_ws(s, pos + 1)
            else:
                acc[UNIT_MONOMIAL] = acc.get(UNIT_MONOMIAL, 0) + sign * coeff
                pos = _skip_ws(s, pos)
                continue
        factors: list[Factor] = []
        while True:
            factor, power, pos = _parse_factor(s, pos)
            factors.extend([factor] * power)
            pos = _skip_ws(s, pos)
            if pos < len(s) and s[pos] == "*":
                pos = _skip_ws(s, pos + 1)
                continue
            break
        mono = make_monomial(factors)
        acc[mono] = acc.get(mono, 0) + sign * coeff
        pos = _skip_ws(s, pos)
    if first:
        raise ParseError("empty generator polynomial literal", 0)
    return GeneratorPolynomial(acc)


def _parse_factor(s: str, pos: int) -> tuple[Factor, int, int]:
    if pos >= len(s) or s[pos] != "e":
        raise ParseError("expected a generator factor like e2([1,2])", pos)
    pos += 1
    start = pos
    while pos < len(s) and s[pos].isdigit():
        pos += 1
    if pos == start:
        raise ParseError("expected a lambda index after 'e'", pos)
    n = int(s[start:pos])
    if pos >= len(s) or s[pos] != "(":
        raise ParseError("expected '(' in generator factor", pos)
    alpha, pos = _parse_composition_at(s, pos + 1)
    pos = _skip_ws(s, pos)
    if pos >= len(s) or s[pos] != ")":
        raise ParseError("expected ')' in generator factor", pos)
    pos += 1
    power = 1
    if pos < len(s) and s[pos] == "^":
        pos += 1
        start = pos
        while pos < len(s) and s[pos].isdigit():
            pos += 1
        if pos == start:
            raise ParseError("expected an exponent after '^'", pos)
        power = int(s[start:pos])
        if power < 1:
            raise ParseError("exponent must be >= 1", start)
    return (alpha, n), power, pos


def generator_polynomial_to_json_obj(g: GeneratorPolynomial) -> list[dict]:
    """JSON form mirroring the element format, with factor arrays."""
    out: list[dict] = []
    for mono, c in g.terms():
        factors: list[dict] = []
        i = 0
        while i < len(mono):
            j = i
            while j < len(mono) and mono[j] == mono[i]:
                j += 1
            alpha, n = mono[i]
            factors.append({"alpha": list(alpha), "n": n, "power": j - i})
            i = j
        out.append({"factors": factors, "coeff": str(c)})
    return out


def generator_polynomial_from_json_obj(obj: list[dict]) -> GeneratorPolynomial:
    acc: dict[GeneratorMonomial, int] = {}
    for entry in obj:
        factors: list[Factor] = []
        for f in entry["factors"]:
            factors.extend([(composition(f["alpha"]), f["n"])] * f.get("power", 1))
        mono = make_monomial(factors)
        acc[mono] = acc.get(mono, 0) + int(entry["coeff"])
    return GeneratorPolynomial(acc)


def certificate_to_json_obj(cert: FreenessCertificate) -> dict:
    """Certificate JSON: weight, size, determinant and matrix entries as
    decimal strings, row-major."""
    return {
        "weight": cert.weight,
        "size": cert.size,
        "determinant": str(cert.determinant),
        "row_order": [list(c) for c in cert.row_order],
        "col_order": [
            [{"alpha": list(alpha), "n": n} for alpha, n in mono]
            for mono in cert.col_order
        ],
        "matrix": [str(v) for row in cert.matrix for v in row],
    }

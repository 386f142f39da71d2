"""Generator polynomials, the constructive rewriting, and certificates."""

import json
import random

import pytest

from qsymm.compositions import (
    enumerate_compositions,
    enumerate_elementary_lyndon,
    weight,
)
from qsymm.elements import QSymmElement
from qsymm.generators import (
    GeneratorPolynomial,
    certificate_to_json_obj,
    det_bareiss,
    enumerate_generator_monomials,
    expand,
    express,
    express_element,
    format_generator_polynomial,
    format_monomial,
    freeness_certificate,
    generator_polynomial_from_json_obj,
    generator_polynomial_to_json_obj,
    make_monomial,
    monomial_weight,
    parse_generator_polynomial,
    product_gen,
)

from helpers import cofactor_det, solve_exact


def gen(alpha, n):
    return GeneratorPolynomial.generator(alpha, n)


def nonempty_up_to(max_weight):
    out = []
    for w in range(1, max_weight + 1):
        out.extend(enumerate_compositions(w))
    return out


class TestMonomials:
    def test_unit(self):
        assert make_monomial([]) == ()
        assert monomial_weight(()) == 0

    def test_weight(self):
        m = make_monomial([((1,), 2), ((1, 2), 1)])
        assert monomial_weight(m) == 2 * 1 + 1 * 3

    def test_rejects_non_lyndon(self):
        with pytest.raises(ValueError):
            make_monomial([((2, 1), 1)])

    def test_rejects_nonreduced(self):
        with pytest.raises(ValueError):
            make_monomial([((2,), 1)])  # gcd 2

    def test_canonical_factor_order(self):
        a = make_monomial([((1, 2), 1), ((1,), 3), ((1,), 1)])
        b = make_monomial([((1,), 1), ((1, 2), 1), ((1,), 3)])
        assert a == b
        assert a == (((1,), 1), ((1,), 3), ((1, 2), 1))


class TestExpand:
    def test_unit_monomial(self):
        assert GeneratorPolynomial.one().expand() == QSymmElement.one()
        assert GeneratorPolynomial.zero().expand() == QSymmElement.zero()

    def test_second_power_of_one(self):
        assert gen((1,), 2).expand() == QSymmElement.monomial((1, 1))

    def test_product_monomial(self):
        g = gen((1,), 1) * gen((1, 2), 1)
        direct = QSymmElement.monomial((1,)) * QSymmElement.monomial((1, 2))
        assert g.expand() == direct
        # value pinned by the quasi-shuffle recursion / polynomial oracle
        assert direct == QSymmElement({(1, 1, 2): 2, (1, 2, 1): 1, (2, 2): 1, (1, 3): 1})

    def test_expand_is_linear(self):
        g = gen((1,), 2) * 3 - gen((1, 2), 1)
        expected = QSymmElement({(1, 1): 3, (1, 2): -1})
        assert g.expand() == expected


class TestExpress:
    def test_pure_power_case(self):
        assert express((1, 1)) == gen((1,), 2)

    def test_lyndon_case(self):
        expected = gen((1,), 1) ** 3 - 3 * (gen((1,), 1) * gen((1,), 2)) + 3 * gen((1,), 3)
        assert express((3,)) == expected

    def test_split_case(self):
        expected = gen((1,), 1) * gen((1,), 2) - gen((1, 2), 1) - 3 * gen((1,), 3)
        assert express((2, 1)) == expected

    def test_elementary_lyndon_is_its_own_generator(self):
        for alpha in enumerate_elementary_lyndon(5):
            assert express(alpha) == gen(alpha, 1)

    def test_round_trip_through_weight_seven(self):
        for w in range(1, 8):
            for beta in enumerate_compositions(w):
                assert expand(express(beta)) == QSymmElement.monomial(beta), beta

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            express(())

    def test_integer_coefficients(self):
        for beta in nonempty_up_to(6):
            g = express(beta)
            assert all(isinstance(c, int) for _, c in g.terms())


class TestExpressElement:
    def test_zero(self):
        assert express_element(QSymmElement.zero()) == GeneratorPolynomial.zero()

    def test_square_of_first_generator(self):
        el = QSymmElement({(1, 1): 2, (2,): 1})
        assert express_element(el) == gen((1,), 1) ** 2

    def test_single_lyndon(self):
        assert express_element(QSymmElement.monomial((1, 2))) == gen((1, 2), 1)

    def test_unit_term(self):
        el = QSymmElement({(): 5, (1,): -2})
        g = express_element(el)
        assert expand(g) == el

    def test_rejects_non_integral(self):
        from fractions import Fraction

        with pytest.raises(ValueError):
            express_element(QSymmElement.monomial((1,), Fraction(1, 2)))

    def test_linear_round_trip_random(self):
        rng = random.Random(17)
        comps = [()] + nonempty_up_to(5)
        for _ in range(50):
            chosen = rng.sample(comps, rng.randint(1, 6))
            el = QSymmElement({c: rng.randint(-9, 9) for c in chosen})
            assert expand(express_element(el)) == el


class TestEnumeration:
    def test_weight_two(self):
        monos = enumerate_generator_monomials(2)
        assert set(monos) == {
            make_monomial([((1,), 1), ((1,), 1)]),
            make_monomial([((1,), 2)]),
        }

    def test_weight_three(self):
        monos = enumerate_generator_monomials(3)
        assert set(monos) == {
            make_monomial([((1,), 1)] * 3),
            make_monomial([((1,), 1), ((1,), 2)]),
            make_monomial([((1,), 3)]),
            make_monomial([((1, 2), 1)]),
        }

    def test_weight_four_contains(self):
        monos = set(enumerate_generator_monomials(4))
        assert len(monos) == 8
        assert make_monomial([((1, 3), 1)]) in monos
        assert make_monomial([((1, 1, 2), 1)]) in monos
        assert make_monomial([((1,), 1), ((1, 2), 1)]) in monos

    def test_counts_match_compositions(self):
        for w in range(1, 11):
            assert len(enumerate_generator_monomials(w)) == 2 ** (w - 1)

    def test_homogeneous(self):
        for w in range(1, 8):
            for m in enumerate_generator_monomials(w):
                assert monomial_weight(m) == w


class TestDeterminant:
    def test_examples(self):
        assert det_bareiss([[3]]) == 3
        assert det_bareiss([[1, 2], [3, 4]]) == -2
        assert det_bareiss([[0, 1], [1, 0]]) == -1  # needs a row swap
        assert det_bareiss([[1, 2], [2, 4]]) == 0

    def test_against_cofactor_expansion(self):
        rng = random.Random(23)
        for n in range(1, 7):
            for _ in range(12):
                m = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
                assert det_bareiss(m) == cofactor_det(m)

    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            det_bareiss([[1, 2]])


class TestCertificates:
    def test_weight_one(self):
        cert = freeness_certificate(1)
        assert cert.size == 1
        assert cert.matrix == ((1,),)
        assert cert.determinant == 1

    def test_weight_two_matrix(self):
        cert = freeness_certificate(2)
        assert cert.monomial_count == cert.composition_count == 2
        assert cert.determinant in (1, -1)
        # rows are wll-descending: [1,1] then [2]
        assert cert.row_order == ((1, 1), (2,))
        flat = sorted(v for row in cert.matrix for v in row)
        assert flat == [0, 1, 1, 2]

    def test_unimodular_through_weight_eight(self):
        for w in range(1, 9):
            cert = freeness_certificate(w)
            assert cert.monomial_count == 2 ** (w - 1)
            assert cert.composition_count == 2 ** (w - 1)
            assert cert.determinant in (1, -1)

    def test_express_matches_linear_solve(self):
        # two independent routes to the generator coordinates of a composition
        for w in range(1, 6):
            cert = freeness_certificate(w)
            matrix = [list(row) for row in cert.matrix]
            col_index = {m: j for j, m in enumerate(cert.col_order)}
            for i, beta in enumerate(cert.row_order):
                rhs = [1 if r == i else 0 for r in range(cert.size)]
                solution = solve_exact(matrix, rhs)
                assert all(x.denominator == 1 for x in solution)
                g = express(beta)
                vector = [0] * cert.size
                for mono, c in g.terms():
                    vector[col_index[mono]] = c
                assert [int(x) for x in solution] == vector

    def test_certificate_json_shape(self):
        cert = freeness_certificate(3)
        obj = certificate_to_json_obj(cert)
        assert obj["weight"] == 3
        assert obj["size"] == 4
        assert obj["determinant"] in ("1", "-1")
        assert len(obj["matrix"]) == 16
        assert all(isinstance(v, str) for v in obj["matrix"])
        text = json.dumps(obj)
        assert json.loads(text) == obj


class TestProductFormGenerators:
    def test_first_three(self):
        alpha = (1, 2)
        assert product_gen(1, alpha) == gen(alpha, 1)
        assert product_gen(2, alpha) == -gen(alpha, 2)
        assert product_gen(3, alpha) == gen(alpha, 3) - gen(alpha, 1) * gen(alpha, 2)

    def test_triangular_through_five(self):
        for alpha in [(1,), (1, 2)]:
            for n in range(1, 6):
                g = product_gen(n, alpha)
                top = make_monomial([(alpha, n)])
                sign = 1 if n % 2 == 1 else -1
                assert g.coefficient(top) == sign
                for mono, _ in g.terms():
                    if mono != top:
                        assert len(mono) >= 2  # products of lower generators only

    def test_order_independence(self):
        # the k-th factor coefficient is settled at step k
        assert product_gen(3, (1,), order=3) == product_gen(3, (1,), order=6)

    def test_product_relation_holds(self):
        # multiplying the factors back together recovers the alternating
        # lambda-power series termwise
        alpha = (1,)
        order = 5
        gens = [product_gen(n, alpha, order=order) for n in range(1, order + 1)]
        series = [GeneratorPolynomial.one()] + [GeneratorPolynomial.zero()] * order
        for k, g_k in enumerate(gens, start=1):
            for j in range(order, k - 1, -1):
                series[j] = series[j] - g_k * series[j - k]
        for k in range(1, order + 1):
            expected = gen(alpha, k) if k % 2 == 0 else -gen(alpha, k)
            assert series[k] == expected

    def test_product_certificates_unimodular(self):
        for w in range(1, 6):
            cert = freeness_certificate(w, "product")
            assert cert.determinant in (1, -1)

    def test_requires_elementary_lyndon(self):
        with pytest.raises(ValueError):
            product_gen(2, (2,))


class TestTextAndJson:
    def test_format_examples(self):
        g = gen((1,), 1) * gen((1,), 2) - gen((1, 2), 1) - 3 * gen((1,), 3)
        assert format_generator_polynomial(g) == "-e1([1,2]) - 3*e3([1]) + e1([1])*e2([1])"
        assert format_generator_polynomial(GeneratorPolynomial.zero()) == "0"
        assert format_generator_polynomial(GeneratorPolynomial.one()) == "1"
        assert format_monomial(make_monomial([((1,), 1), ((1,), 1)])) == "e1([1])^2"

    def test_parse_round_trip(self):
        rng = random.Random(29)
        corpus = [express(beta) for beta in nonempty_up_to(5)]
        corpus += [GeneratorPolynomial.zero(), GeneratorPolynomial.one()]
        corpus += [product_gen(n, (1,)) for n in range(1, 6)]
        for g in corpus:
            assert parse_generator_polynomial(format_generator_polynomial(g)) == g

    def test_parse_examples(self):
        g = parse_generator_polynomial("e1([1])*e2([1]) - e1([1,2]) - 3*e3([1])")
        assert g == express((2, 1))
        assert parse_generator_polynomial("2") == GeneratorPolynomial.one() * 2

    def test_json_round_trip(self):
        for beta in nonempty_up_to(5):
            g = express(beta)
            obj = generator_polynomial_to_json_obj(g)
            assert generator_polynomial_from_json_obj(json.loads(json.dumps(obj))) == g

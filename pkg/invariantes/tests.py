import random
from math import comb, factorial

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase, override_settings
from sympy import Rational
from sympy.functions.combinatorial.numbers import stirling

from algebra.services import formatear_hilbert, to_hilbert_basis
from algebra.tipos import MEMORIA_DE_CARACTER, LinearCombination, RationalPolynomial
from coproductos.services import reduced_coproduct
from hipergrafos.exceptions import LimiteExcedido
from hipergrafos.services import (
    canonical_form, complete_graph, disjoint_union, path_graph, simplex_hypergraph,
)
from hipergrafos.tipos import CanonicalHypergraph, Hypergraph, Modo

from .services import (
    chromatic, chromatic_coefficient_checks, chromatic_hilbert, chromatic_via_counts,
    chromatic_via_gamma, chromatic_via_lambda, coefficients_via_counts, coloring_oracle,
    coproduct_compatibility, delta_compatibility, eulerian_idempotent, eulerian_lc,
    lambda_character, p_zero, spanning_counts,
)
from .tipos import ChromaticVariant


def H(vertices, aristas=()):
    return Hypergraph(tuple(vertices), frozenset(frozenset(a) for a in aristas))


def P(*coeficientes):
    """Polinomio a partir de coeficientes ascendentes."""
    return RationalPolynomial.from_coefficients(coeficientes)


def hipergrafo_aleatorio(rng, n, max_aristas=4):
    vertices = list(range(n))
    aristas = set()
    for _ in range(rng.randint(0, max_aristas)):
        if n >= 2:
            aristas.add(frozenset(rng.sample(vertices, rng.randint(2, n))))
    return Hypergraph(tuple(vertices), frozenset(aristas))


def caida(n):
    """X(X-1)...(X-n+1)."""
    p = P(1)
    for i in range(n):
        p = p * P(-i, 1)
    return p


VARIANTES = list(ChromaticVariant)

MUESTRA = [
    H(''), simplex_hypergraph(1), simplex_hypergraph(2), simplex_hypergraph(3), simplex_hypergraph(4),
    complete_graph(3), path_graph(4), H('abcd', ['abc', 'cd']), H('abcd', ['abc', 'bcd', 'ad']),
    H('abcde', ['abc', 'cde']), H('abcd', ['ab', 'cd']),
]


class TablasDeSimplicesTests(SimpleTestCase):

    def test_cap_es_factorial_descendente(self):
        for n in range(2, 7):
            self.assertEqual(chromatic(simplex_hypergraph(n), 'cap'), caida(n))

    def test_subset(self):
        for n in range(2, 7):
            self.assertEqual(chromatic(simplex_hypergraph(n), 'subset'), RationalPolynomial.monomial(n) - P(0, 1))
        self.assertEqual(str(chromatic(simplex_hypergraph(4), 'subset')), "X^4 - X")

    def test_mixto_t3(self):
        p = chromatic(simplex_hypergraph(3), ChromaticVariant.MIXED)
        self.assertEqual(p, P(0, Rational(1, 2), Rational(-3, 2), 1))
        self.assertFalse(p.is_integral())

    def test_mixto_en_base_de_hilbert(self):
        self.assertEqual(formatear_hilbert(chromatic_hilbert(simplex_hypergraph(5), 'mixed')),
                         "5 H2 + 70 H3 + 180 H4 + 120 H5")
        self.assertEqual(to_hilbert_basis(chromatic(simplex_hypergraph(7), 'mixed')),
                         [0, 0, 7, 434, 3780, 10920, 12600, 5040])

    def test_mixto_filas_de_hilbert(self):
        # n·(k-1)!·S(n-1, k-1): el último bloque es un singleton
        for n in range(1, 8):
            fila = to_hilbert_basis(chromatic(simplex_hypergraph(n), 'mixed'))
            if n == 1:
                self.assertEqual(fila, [0, 1])
                continue
            esperado = [0, 0] + [n * factorial(k - 1) * stirling(n - 1, k - 1) for k in range(2, n + 1)]
            self.assertEqual(fila, esperado)

    def test_vacio(self):
        for v in VARIANTES:
            self.assertEqual(chromatic(H(''), v), P(1))
            self.assertEqual(chromatic(H('abc'), v), RationalPolynomial.monomial(3))


class OraculoTests(SimpleTestCase):

    def test_ejemplos(self):
        self.assertEqual(coloring_oracle(simplex_hypergraph(3), 2, 'subset'), 6)
        self.assertEqual(coloring_oracle(simplex_hypergraph(3), 2, 'cap'), 0)
        for v in VARIANTES:
            self.assertEqual(coloring_oracle(H('abc'), 1, v), 1)
            self.assertEqual(coloring_oracle(simplex_hypergraph(2), 1, v), 0)

    def test_equivalencia(self):
        rng = random.Random(3)
        casos = MUESTRA + [hipergrafo_aleatorio(rng, rng.randint(3, 5)) for _ in range(8)]
        for G in casos:
            for v in VARIANTES:
                p = chromatic(G, v)
                for N in range(G.n + 2):
                    self.assertEqual(p.evaluate(N), coloring_oracle(G, N, v), (str(G), v, N))

    @override_settings(HIPERGRAFOS_LIMITE_TRABAJO=100)
    def test_cota_de_trabajo(self):
        with self.assertRaises(LimiteExcedido):
            coloring_oracle(simplex_hypergraph(5), 3, 'subset')


class GammaTests(SimpleTestCase):

    def test_gamma_igual_a_cap(self):
        for G in MUESTRA:
            self.assertEqual(chromatic_via_gamma(G), chromatic(G, 'cap'))

    def test_t3(self):
        self.assertEqual(chromatic_via_gamma(simplex_hypergraph(3)), caida(3))

    def test_grafos(self):
        for G in [complete_graph(4), path_graph(4), H('abcd', ['ab', 'bc', 'cd', 'da'])]:
            self.assertEqual(chromatic(G, 'subset'), chromatic(G, 'cap'))
            self.assertEqual(chromatic_via_gamma(G), chromatic(G, 'subset'))

    def test_sin_aristas(self):
        self.assertEqual(chromatic_via_gamma(H('abcd')), RationalPolynomial.monomial(4))


class PCeroTests(SimpleTestCase):

    def test_valores(self):
        self.assertEqual(p_zero(simplex_hypergraph(5)), RationalPolynomial.monomial(5))
        self.assertEqual(p_zero(H('')), P(1))
        G, K = H('abc', ['ab']), H('xy', ['xy'])
        self.assertEqual(p_zero(disjoint_union(G, K)), p_zero(G) * p_zero(K))


class ConteosGeneradoresTests(SimpleTestCase):

    def test_t3(self):
        tabla = spanning_counts(simplex_hypergraph(3))
        self.assertEqual(dict(tabla.conteos), {(3, 0): 1, (1, 1): 1})

    def test_sin_aristas(self):
        self.assertEqual(dict(spanning_counts(H('abcd')).conteos), {(4, 0): 1})

    def test_camino(self):
        tabla = spanning_counts(H('abc', ['ab', 'bc']))
        self.assertEqual(dict(tabla.conteos), {(3, 0): 1, (2, 1): 2, (1, 2): 1})

    def test_total(self):
        G = H('abcd', ['abc', 'bcd', 'ad', 'ab'])
        tabla = spanning_counts(G)
        self.assertEqual(tabla.total, 16)
        self.assertEqual(tabla.get(5, 0), 0)


class LambdaTests(SimpleTestCase):

    def test_valores(self):
        self.assertEqual(lambda_character('subset')(simplex_hypergraph(2)), -1)
        self.assertEqual(lambda_character('subset')(simplex_hypergraph(3)), -1)
        self.assertEqual(lambda_character('cap')(simplex_hypergraph(3)), 2)

    def test_dos_rutas_coinciden(self):
        inversion, conteos = lambda_character('subset'), lambda_character('subset', method='counts')
        for G in MUESTRA:
            self.assertEqual(inversion(G), conteos(G))

    def test_metodos_invalidos(self):
        with self.assertRaises(ValidationError):
            lambda_character('cap', method='counts')
        with self.assertRaises(ValidationError):
            lambda_character('subset', method='otro')

    def test_un_caracter_por_modo(self):
        self.assertIs(lambda_character('cap'), lambda_character(Modo.CAP))
        self.assertIs(lambda_character('subset', method='counts'), lambda_character('subset', method='counts'))
        self.assertEqual(lambda_character('cap').valor_conexo.cache_info().maxsize, MEMORIA_DE_CARACTER)

    def test_via_lambda(self):
        self.assertEqual(chromatic_via_lambda(simplex_hypergraph(2), 'subset'), P(0, -1, 1))
        self.assertEqual(chromatic_via_lambda(simplex_hypergraph(3), 'cap'), P(0, 2, -3, 1))
        self.assertEqual(chromatic_via_lambda(H('abc'), 'cap'), RationalPolynomial.monomial(3))
        for G in MUESTRA:
            for modo in Modo:
                self.assertEqual(chromatic_via_lambda(G, modo), chromatic(G, modo.value))


class CoeficientesTests(SimpleTestCase):

    def test_t3(self):
        self.assertEqual(coefficients_via_counts(simplex_hypergraph(3)), [0, -1, 0, 1])
        self.assertEqual(coefficients_via_counts(H('abc')), [0, 0, 0, 1])

    def test_igual_a_subset(self):
        rng = random.Random(11)
        for G in MUESTRA + [hipergrafo_aleatorio(rng, 5) for _ in range(6)]:
            self.assertEqual(chromatic_via_counts(G), chromatic(G, 'subset'))

    def test_propiedades(self):
        for G in MUESTRA:
            for v in ('subset', 'cap'):
                self.assertTrue(chromatic_coefficient_checks(G, v)['holds'], str(G))
        self.assertEqual(chromatic_coefficient_checks(complete_graph(4), 'subset')['subleading'], -6)
        self.assertEqual(chromatic_coefficient_checks(simplex_hypergraph(4), 'cap')['expected_subleading'], -comb(4, 2))
        with self.assertRaises(ValidationError):
            chromatic_coefficient_checks(simplex_hypergraph(3), 'mixed')


class MorfismoTests(SimpleTestCase):

    def test_multiplicativo(self):
        G, K = H('abc', ['abc']), H('xyz', ['xy', 'yz'])
        for v in VARIANTES:
            self.assertEqual(chromatic(disjoint_union(G, K), v), chromatic(G, v) * chromatic(K, v))

    def test_compatible_con_coproducto(self):
        for G in MUESTRA:
            for v in VARIANTES:
                for a, b in [(0, 2), (1, 1), (2, 3)]:
                    self.assertTrue(coproduct_compatibility(G, v, a, b), (str(G), v))

    def test_compatible_con_contraccion(self):
        for G in MUESTRA:
            for modo in Modo:
                for a, b in [(1, 3), (2, 2), (3, 2)]:
                    self.assertTrue(delta_compatibility(G, modo, a, b), (str(G), modo))


class EulerianoTests(SimpleTestCase):

    def test_ejemplos(self):
        T1 = CanonicalHypergraph(1)
        self.assertEqual(eulerian_idempotent(simplex_hypergraph(1)), LinearCombination.basis(T1))
        esperado = LinearCombination({(canonical_form(simplex_hypergraph(2)),): 1, (CanonicalHypergraph(2),): -1})
        self.assertEqual(eulerian_idempotent(simplex_hypergraph(2)), esperado)

    def test_primitivo_e_idempotente(self):
        for G in MUESTRA[1:]:
            if G.n > 4:
                continue
            imagen = eulerian_idempotent(G)
            self.assertEqual(eulerian_lc(imagen), imagen)
            # imagen primitiva: Δ̃ se anula por linealidad
            total = None
            for (forma,), c in imagen.terms.items():
                parte = reduced_coproduct(forma, 'subset,subset').scale(c)
                total = parte if total is None else total + parte
            self.assertTrue(total is None or total.is_zero(), str(G))

    def test_se_anula_en_productos(self):
        self.assertTrue(eulerian_idempotent(H('abcd', ['ab', 'cd'])).is_zero())
        self.assertTrue(eulerian_idempotent(H('ab')).is_zero())

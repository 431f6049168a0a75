from math import comb

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase
from sympy import Rational

from hipergrafos.services import canonical_form, complete_graph, path_graph, simplex_hypergraph
from hipergrafos.tipos import Hypergraph, Modo

from .services import (
    character_inverse, constant_character, convolve, counit_character,
    formatear_hilbert, from_hilbert_basis, hilbert_polynomial, m_1_3_24, multiply,
    swap_legs, tensor, to_hilbert_basis,
)
from .tipos import MEMORIA_DE_CARACTER, LinearCombination, RationalPolynomial


def H(vertices, aristas=()):
    return Hypergraph(tuple(vertices), frozenset(frozenset(a) for a in aristas))


def base(G):
    return LinearCombination.basis(canonical_form(G))


def T(n):
    return canonical_form(simplex_hypergraph(n))


MUESTRA = [
    simplex_hypergraph(1), simplex_hypergraph(2), simplex_hypergraph(3), simplex_hypergraph(4),
    complete_graph(3), path_graph(3), path_graph(4), H('abcd', ['abc', 'cd']), H('abcd', ['ab', 'cd']),
    H('abcd', ['abc', 'bcd', 'ad']),
]


class CombinacionLinealTests(SimpleTestCase):

    def test_cancelacion(self):
        T2 = base(simplex_hypergraph(2))
        self.assertTrue((T2 + T2.scale(-1)).is_zero())

    def test_producto_de_t1(self):
        T1 = base(simplex_hypergraph(1))
        producto = multiply(T1, T1)
        self.assertEqual(producto, base(H('ab')))
        (palabra,) = producto.terms
        self.assertEqual(palabra[0].n, 2)

    def test_tensor(self):
        palabra = tensor(base(simplex_hypergraph(1)), base(simplex_hypergraph(2)))
        self.assertEqual(list(palabra.terms), [(T(1), T(2))])

    def test_grados_incompatibles(self):
        with self.assertRaises(ValidationError):
            base(simplex_hypergraph(1)) + LinearCombination.basis(T(1), T(1))

    def test_producto_conmutativo_y_asociativo(self):
        a, b, c = base(MUESTRA[2]), base(MUESTRA[4]) + base(MUESTRA[1]), base(MUESTRA[6])
        self.assertEqual(a.multiply(b), b.multiply(a))
        self.assertEqual(a.multiply(b).multiply(c), a.multiply(b.multiply(c)))

    def test_patas(self):
        palabra = LinearCombination.basis(T(1), T(2))
        self.assertEqual(swap_legs(palabra), LinearCombination.basis(T(2), T(1)))
        cuatro = LinearCombination.basis(T(1), T(2), T(3), T(0))
        self.assertEqual(m_1_3_24(cuatro), LinearCombination.basis(T(1), T(3), T(2)))


class PolinomioTests(SimpleTestCase):

    def test_texto(self):
        p = RationalPolynomial.from_coefficients([0, Rational(1, 2), Rational(-3, 2), 1])
        self.assertEqual(str(p), "X^3 - 3/2 X^2 + 1/2 X")
        self.assertEqual(str(RationalPolynomial.from_coefficients([0, -1, 0, 0, 1])), "X^4 - X")
        self.assertEqual(str(RationalPolynomial()), "0")

    def test_composicion_negativa(self):
        p = RationalPolynomial.from_coefficients([1, 2, 3])
        self.assertEqual(p.compose_negative().coefficients, [1, -2, 3])
        self.assertEqual(p.compose_negative().evaluate(5), p.evaluate(-5))


class HilbertTests(SimpleTestCase):

    def test_primeros(self):
        self.assertEqual(hilbert_polynomial(0), RationalPolynomial.from_coefficients([1]))
        self.assertEqual(hilbert_polynomial(1), RationalPolynomial.from_coefficients([0, 1]))
        self.assertEqual(hilbert_polynomial(2), RationalPolynomial.from_coefficients([0, Rational(-1, 2), Rational(1, 2)]))

    def test_binomiales(self):
        for k in range(7):
            for n in range(7):
                self.assertEqual(hilbert_polynomial(k).evaluate(n), comb(n, k))

    def test_cambio_de_base(self):
        self.assertEqual(to_hilbert_basis(RationalPolynomial.from_coefficients([0, -1, 1])), [0, 0, 2])
        for k in range(5):
            indicador = [0] * k + [1]
            self.assertEqual(to_hilbert_basis(hilbert_polynomial(k)), indicador)

    def test_ida_y_vuelta(self):
        p = RationalPolynomial.from_coefficients([Rational(1, 3), 0, -2, Rational(5, 7)])
        coeficientes = to_hilbert_basis(p)
        self.assertEqual(from_hilbert_basis(coeficientes), p)
        self.assertEqual(to_hilbert_basis(from_hilbert_basis([0, 0, 5, 70, 180, 120])), [0, 0, 5, 70, 180, 120])

    def test_texto_hilbert(self):
        self.assertEqual(formatear_hilbert([0, 0, 5, 70, 180, 120]), "5 H2 + 70 H3 + 180 H4 + 120 H5")


class CaracteresTests(SimpleTestCase):

    def setUp(self):
        self.lambda_0 = constant_character(1, 'λ_0')
        self.epsilon = counit_character()
        self.lambda_subset = character_inverse(self.lambda_0, Modo.SUBSET)
        self.lambda_cap = character_inverse(self.lambda_0, Modo.CAP)

    def test_unidad_en_t1(self):
        self.assertEqual(convolve(self.lambda_0, self.lambda_0, Modo.SUBSET)(simplex_hypergraph(1)), 1)

    def test_inverso_sobre_t2(self):
        self.assertEqual(convolve(self.lambda_0, self.lambda_subset, Modo.SUBSET)(simplex_hypergraph(2)), 0)
        self.assertEqual(self.lambda_subset(simplex_hypergraph(2)), -1)

    def test_valores_conocidos(self):
        self.assertEqual(self.lambda_subset(simplex_hypergraph(3)), -1)
        self.assertEqual(self.lambda_cap(simplex_hypergraph(3)), 2)

    def test_recursion_en_grafos_conexos(self):
        # Suma alternada de los subgrafos generadores conexos: (-1)^(n-1)·(n-1)! en K_n
        self.assertEqual(self.lambda_subset(path_graph(4)), -1)
        self.assertEqual(self.lambda_subset(complete_graph(3)), 2)
        self.assertEqual(self.lambda_subset(complete_graph(4)), -6)

    def test_counidad(self):
        f = constant_character(3)
        for G in MUESTRA:
            for modo in Modo:
                self.assertEqual(convolve(self.epsilon, f, modo)(G), f(G))
                self.assertEqual(convolve(f, self.epsilon, modo)(G), f(G))

    def test_inverso_por_ambos_lados(self):
        for G in MUESTRA:
            for modo, inverso in [(Modo.SUBSET, self.lambda_subset), (Modo.CAP, self.lambda_cap)]:
                esperado = self.epsilon(G)
                self.assertEqual(convolve(self.lambda_0, inverso, modo)(G), esperado)
                self.assertEqual(convolve(inverso, self.lambda_0, modo)(G), esperado)

    def test_inverso_de_la_counidad(self):
        inverso = character_inverse(self.epsilon, Modo.CAP)
        for G in MUESTRA:
            self.assertEqual(inverso(G), self.epsilon(G))

    def test_doble_inverso(self):
        for modo, inverso in [(Modo.SUBSET, self.lambda_subset), (Modo.CAP, self.lambda_cap)]:
            doble = character_inverse(inverso, modo)
            for G in MUESTRA:
                self.assertEqual(doble(G), 1)

    def test_valores_enteros(self):
        for G in MUESTRA:
            self.assertEqual(self.lambda_subset(G).q, 1)
            self.assertEqual(self.lambda_cap(G).q, 1)

    def test_asociatividad(self):
        f, g, h = constant_character(2), self.lambda_cap, constant_character(-1)
        for modo in Modo:
            izquierda = convolve(convolve(f, g, modo), h, modo)
            derecha = convolve(f, convolve(g, h, modo), modo)
            for G in MUESTRA:
                self.assertEqual(izquierda(G), derecha(G))

    def test_multiplicativo(self):
        G = H('abcde', ['abc', 'de'])
        self.assertEqual(
            self.lambda_cap(G),
            self.lambda_cap(simplex_hypergraph(3)) * self.lambda_cap(simplex_hypergraph(2)))
        self.assertEqual(self.lambda_cap(H('')), 1)

    def test_no_invertible(self):
        with self.assertRaises(ValidationError):
            character_inverse(constant_character(0), Modo.SUBSET)

    def test_memoria_acotada(self):
        caracter = character_inverse(self.lambda_0, Modo.SUBSET)
        caracter(simplex_hypergraph(3))
        caracter(simplex_hypergraph(3))
        info = caracter.valor_conexo.cache_info()
        self.assertEqual(info.maxsize, MEMORIA_DE_CARACTER)
        self.assertGreaterEqual(info.hits, 1)

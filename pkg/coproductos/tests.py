import random
from functools import reduce
from math import comb, factorial

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase
from sympy.utilities.iterables import partitions

from algebra.services import contract_leg
from algebra.tipos import LinearCombination
from hipergrafos.exceptions import LimiteExcedido
from hipergrafos.limites import tope_de_vertices
from hipergrafos.services import canonical_form, restrict, simplex_hypergraph
from hipergrafos.tipos import CanonicalHypergraph, Hypergraph, Modo

from .services import (
    AXIOMAS, check_axioms, coproduct_iterated, coproduct_lc, coproduct_pair, counit_eps,
    counit_eps_delta, delta_contract, delta_lc, reduced_coproduct,
)
from .tipos import CoproductMode

UNO = CanonicalHypergraph(0)


def H(vertices, aristas=()):
    return Hypergraph(tuple(vertices), frozenset(frozenset(a) for a in aristas))


def T(n):
    return canonical_form(simplex_hypergraph(n))


def T1(k):
    return CanonicalHypergraph(k)


def prod(*formas):
    return reduce(lambda a, b: a.producto(b), formas, UNO)


def hipergrafo_aleatorio(rng, n):
    vertices = list(range(n))
    aristas = set()
    for _ in range(rng.randint(0, 4)):
        if n >= 2:
            aristas.add(frozenset(rng.sample(vertices, rng.randint(2, n))))
    return Hypergraph(tuple(vertices), frozenset(aristas))


MODOS = [CoproductMode(i, d) for i in Modo for d in Modo]


class EjemplosDeCoproductoTests(SimpleTestCase):
    """Fórmulas cerradas de Δ y δ sobre T_n."""

    def _esperado(self, n, izquierda, derecha):
        terminos = {(T(n), UNO): 1, (UNO, T(n)): 1}
        for k in range(1, n):
            palabra = (izquierda(k), derecha(n - k))
            terminos[palabra] = terminos.get(palabra, 0) + comb(n, k)
        return LinearCombination(terminos)

    def test_cuatro_coproductos(self):
        casos = {
            CoproductMode(Modo.SUBSET, Modo.SUBSET): (T1, T1),
            CoproductMode(Modo.CAP, Modo.CAP): (T, T),
            CoproductMode(Modo.CAP, Modo.SUBSET): (T, T1),
            CoproductMode(Modo.SUBSET, Modo.CAP): (T1, T),
        }
        for n in range(2, 6):
            for modo, (izquierda, derecha) in casos.items():
                self.assertEqual(coproduct_pair(simplex_hypergraph(n), modo), self._esperado(n, izquierda, derecha))

    def test_t3_explicito(self):
        esperado = LinearCombination({
            (T(3), UNO): 1, (UNO, T(3)): 1, (T(1), T(2)): 3, (T(2), T(1)): 3})
        self.assertEqual(coproduct_pair(simplex_hypergraph(3), 'cap,cap'), esperado)

    def test_contraccion_subset(self):
        for n in range(2, 6):
            esperado = LinearCombination({(T(n), T1(n)): 1, (T(1), T(n)): 1})
            self.assertEqual(delta_contract(simplex_hypergraph(n), Modo.SUBSET), esperado)

    def test_contraccion_cap_multinomial(self):
        for n in range(2, 6):
            terminos = {}
            for particion in partitions(n):
                particion = dict(particion)
                bloques = sum(particion.values())
                coeficiente = factorial(n)
                for tam, veces in particion.items():
                    coeficiente //= factorial(tam) ** veces * factorial(veces)
                derecha = prod(*(T(tam) for tam, veces in particion.items() for _ in range(veces)))
                terminos[(T(bloques), derecha)] = coeficiente
            self.assertEqual(delta_contract(simplex_hypergraph(n), Modo.CAP), LinearCombination(terminos))

    def test_contraccion_t3_cap(self):
        esperado = LinearCombination({(T(3), T1(3)): 1, (T(1), T(3)): 1, (T(2), prod(T(2), T(1))): 3})
        self.assertEqual(delta_contract(simplex_hypergraph(3), Modo.CAP), esperado)

    def test_contraccion_de_t1(self):
        for modo in Modo:
            self.assertEqual(delta_contract(simplex_hypergraph(1), modo), LinearCombination.basis(T(1), T(1)))


class ReducidoEIteradoTests(SimpleTestCase):

    def test_reducido(self):
        self.assertEqual(reduced_coproduct(simplex_hypergraph(2), 'subset,subset'),
                         LinearCombination.basis(T(1), T(1), coeficiente=2))
        self.assertTrue(reduced_coproduct(simplex_hypergraph(1), 'subset,subset').is_zero())
        self.assertEqual(reduced_coproduct(simplex_hypergraph(3), 'cap,cap'),
                         LinearCombination({(T(1), T(2)): 3, (T(2), T(1)): 3}))

    def test_reducido_rechaza_vacio(self):
        with self.assertRaises(ValidationError):
            reduced_coproduct(H(''), 'subset,subset')

    def test_iterado(self):
        G = H('abcd', ['abc', 'cd'])
        for modo in MODOS:
            self.assertEqual(coproduct_iterated(G, modo, 1), coproduct_pair(G, modo))
            self.assertEqual(coproduct_iterated(G, modo, 2).degree, 3)

    def test_iterado_igual_a_descomposiciones_ordenadas(self):
        # Para modos iguales: Σ sobre (I_1, I_2, I_3) con partes vacías
        G = H('abc', ['ab', 'bc'])
        modo = CoproductMode(Modo.SUBSET, Modo.SUBSET)
        terminos = {}
        for asignacion in range(3 ** 3):
            partes = [[], [], []]
            for i, v in enumerate(G.vertices):
                partes[asignacion // 3 ** i % 3].append(v)
            palabra = tuple(canonical_form(restrict(G, parte, Modo.SUBSET)) for parte in partes)
            terminos[palabra] = terminos.get(palabra, 0) + 1
        self.assertEqual(coproduct_iterated(G, modo, 2), LinearCombination(terminos))


class ExtensionLinealTests(SimpleTestCase):

    def test_coproducto_lineal(self):
        lc = LinearCombination.basis(T(2), coeficiente=2) - LinearCombination.basis(T1(2))
        for modo in MODOS:
            esperado = coproduct_pair(T(2), modo).scale(2) - coproduct_pair(T1(2), modo)
            self.assertEqual(coproduct_lc(lc, modo), esperado)

    def test_contraccion_lineal(self):
        lc = LinearCombination.basis(T(3)) + LinearCombination.basis(prod(T(2), T(1)), coeficiente=3)
        for modo in Modo:
            esperado = delta_contract(T(3), modo) + delta_contract(prod(T(2), T(1)), modo).scale(3)
            self.assertEqual(delta_lc(lc, modo), esperado)

    def test_cero(self):
        self.assertTrue(coproduct_lc(LinearCombination.zero(), 'cap,cap').is_zero())
        self.assertTrue(delta_lc(LinearCombination.zero(), Modo.SUBSET).is_zero())

    def test_tope_antes_de_la_memoria(self):
        forma = T(4)
        coproduct_pair(forma, 'subset,subset')
        delta_contract(forma, Modo.CAP)
        with tope_de_vertices(3):
            with self.assertRaises(LimiteExcedido):
                coproduct_pair(forma, 'subset,subset')
            with self.assertRaises(LimiteExcedido):
                delta_contract(forma, Modo.CAP)


class CounidadesTests(SimpleTestCase):

    def test_valores(self):
        self.assertEqual(counit_eps_delta(H('abcde')), 1)
        self.assertEqual(counit_eps_delta(simplex_hypergraph(2)), 0)
        self.assertEqual(counit_eps((UNO, UNO)), 1)
        self.assertEqual(counit_eps((UNO, T(1))), 0)

    def test_counidad_de_delta(self):
        rng = random.Random(5)
        for _ in range(15):
            G = hipergrafo_aleatorio(rng, rng.randint(1, 5))
            for modo in Modo:
                d = delta_contract(G, modo)
                self.assertEqual(contract_leg(d, 1, counit_eps_delta), LinearCombination.basis(canonical_form(G)))

    def test_counidad_de_delta_izquierda(self):
        G = H('abcd', ['abc', 'cd'])
        for modo in Modo:
            self.assertTrue(check_axioms(G, 'counit', mode=modo))
        for modo in MODOS:
            self.assertTrue(check_axioms(G, 'counit', mode=modo))


class AxiomasTests(SimpleTestCase):

    def test_coasociatividad_en_t4(self):
        for modo in MODOS:
            self.assertTrue(check_axioms(simplex_hypergraph(4), 'coassoc', mode=modo))
        for modo in Modo:
            self.assertTrue(check_axioms(simplex_hypergraph(4), 'delta-coassoc', mode=modo))

    def test_cointeraccion_en_t3(self):
        for modo in Modo:
            self.assertTrue(check_axioms(simplex_hypergraph(3), 'cointeraction', mode=modo))

    def test_aleatorios(self):
        rng = random.Random(17)
        for _ in range(12):
            G = hipergrafo_aleatorio(rng, rng.randint(1, 4))
            for modo in Modo:
                self.assertTrue(check_axioms(G, 'cointeraction', mode=modo))
                self.assertTrue(check_axioms(G, 'delta-coassoc', mode=modo))
                self.assertTrue(check_axioms(G, 'cocommutativity', mode=CoproductMode(modo, modo)))
            self.assertTrue(check_axioms(G, 'coopposite'))
            for modo in MODOS:
                self.assertTrue(check_axioms(G, 'coassoc', mode=modo))

    def test_multiplicatividad(self):
        G, K = H('abc', ['abc']), H('xy', ['xy'])
        for modo in MODOS:
            self.assertTrue(check_axioms(G, 'multiplicativity', mode=modo, other=K))
        for modo in Modo:
            self.assertTrue(check_axioms(G, 'multiplicativity', mode=modo, other=K))
            self.assertTrue(check_axioms(H('abcde', ['abc', 'de']), 'multiplicativity', mode=modo))

    def test_coopuesto(self):
        reporte = check_axioms(H('abcd', ['abc', 'bcd']), 'coopposite')
        self.assertTrue(reporte.holds)
        self.assertIn('element', reporte.to_json())

    def test_reporte_de_falla(self):
        # Δ^(⊂,∩) no es cocommutativo; se rechaza antes de evaluar
        with self.assertRaises(ValidationError):
            check_axioms(simplex_hypergraph(3), 'cocommutativity', mode='subset,cap')
        with self.assertRaises(ValidationError):
            check_axioms(simplex_hypergraph(3), 'inexistente')

    def test_axiomas_conocidos(self):
        self.assertIn('cointeraction', AXIOMAS)


class GraduacionTests(SimpleTestCase):

    def test_graduacion(self):
        G = H('abcde', ['abc', 'cde', 'ae'])
        for modo in MODOS:
            for (a, b) in coproduct_pair(G, modo).terms:
                self.assertEqual(a.n + b.n, 5)
        for modo in Modo:
            for (a, b) in delta_contract(G, modo).terms:
                self.assertEqual(b.n, 5)
                self.assertLessEqual(a.n, 5)

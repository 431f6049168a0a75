from itertools import combinations

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from algebra.tipos import LinearCombination
from coproductos.tipos import CoproductMode
from hipergrafos.services import canonical_form, complete_graph, path_graph, simplex_hypergraph
from hipergrafos.tipos import CanonicalHypergraph, Hypergraph, Modo, SetPartition
from invariantes.tipos import ChromaticVariant

from .services import (
    antipode, antipode_closed, antipode_lc, antipode_mixed, chromatic_antipode_compatibility,
    edge_assignments, takeuchi_antipode, verify_antipode,
)
from .tipos import EdgeAssignment, OrientedBlockGraph

UNO = CanonicalHypergraph(0)
MODOS = [CoproductMode(i, d) for i in Modo for d in Modo]


def H(vertices, aristas=()):
    return Hypergraph(tuple(vertices), frozenset(frozenset(a) for a in aristas))


def T(n):
    return canonical_form(simplex_hypergraph(n))


def base_pequena():
    """Representantes de los hipergrafos con a lo sumo 4 vértices."""
    vistos = set()
    for n in range(1, 5):
        vertices = tuple(range(n))
        posibles = [frozenset(c) for k in range(2, n + 1) for c in combinations(vertices, k)]
        for k in range(len(posibles) + 1):
            for aristas in combinations(posibles, k):
                forma = canonical_form(Hypergraph(vertices, frozenset(aristas)))
                if forma not in vistos:
                    vistos.add(forma)
                    yield forma


MUESTRA = [
    simplex_hypergraph(1), simplex_hypergraph(2), simplex_hypergraph(3), simplex_hypergraph(4),
    complete_graph(3), path_graph(4), H('abcd', ['abc', 'cd']), H('abcd', ['abc', 'bcd', 'ad']),
    H('abcd', ['ab', 'cd']),
]


class TakeuchiTests(SimpleTestCase):

    def test_t2(self):
        esperado = LinearCombination({(T(2),): -1, (CanonicalHypergraph(2),): 2})
        self.assertEqual(takeuchi_antipode(simplex_hypergraph(2), 'subset,subset'), esperado)

    def test_t1_y_unidad(self):
        for modo in MODOS:
            self.assertEqual(takeuchi_antipode(simplex_hypergraph(1), modo), LinearCombination.basis(T(1), coeficiente=-1))
            self.assertEqual(takeuchi_antipode(H(''), modo), LinearCombination.basis(UNO))

    def test_t3_cap(self):
        esperado = LinearCombination({
            (T(3),): -1, (T(2).producto(T(1)),): 6, (CanonicalHypergraph(3),): -6})
        self.assertEqual(takeuchi_antipode(simplex_hypergraph(3), 'cap,cap'), esperado)

    def test_t3_subset(self):
        # los términos T_1^3 se cancelan: +3·2! de los bloques {2,1} y -3! del discreto
        esperado = LinearCombination.basis(T(3), coeficiente=-1)
        self.assertEqual(takeuchi_antipode(simplex_hypergraph(3), 'subset,subset'), esperado)


class FormaCerradaTests(SimpleTestCase):

    def test_ejemplos(self):
        esperado = LinearCombination({(T(2),): -1, (CanonicalHypergraph(2),): 2})
        self.assertEqual(antipode_closed(simplex_hypergraph(2), Modo.SUBSET), esperado)
        for modo in Modo:
            self.assertEqual(antipode_closed(simplex_hypergraph(1), modo), LinearCombination.basis(T(1), coeficiente=-1))

    def test_coincide_con_takeuchi(self):
        for forma in base_pequena():
            for modo in Modo:
                self.assertEqual(antipode_closed(forma, modo), takeuchi_antipode(forma, CoproductMode(modo, modo)),
                                 (str(forma), modo))


class MixtaTests(SimpleTestCase):

    def test_ejemplos(self):
        esperado = LinearCombination({(T(2),): -1, (CanonicalHypergraph(2),): 2})
        self.assertEqual(antipode_mixed(simplex_hypergraph(2)), esperado)
        self.assertEqual(antipode_mixed(simplex_hypergraph(1)), LinearCombination.basis(T(1), coeficiente=-1))
        self.assertEqual(antipode_mixed(simplex_hypergraph(3)), takeuchi_antipode(simplex_hypergraph(3), 'subset,cap'))

    def test_rechaza_vacio(self):
        with self.assertRaises(ValidationError):
            antipode_mixed(H(''))

    def test_coincide_con_takeuchi(self):
        for forma in base_pequena():
            mixta = antipode_mixed(forma)
            self.assertEqual(mixta, takeuchi_antipode(forma, 'subset,cap'), str(forma))
            self.assertEqual(mixta, takeuchi_antipode(forma, 'cap,subset'), str(forma))

    def test_asignaciones(self):
        G = H('abc', ['abc'])
        particion = SetPartition((frozenset('ab'), frozenset('c')))
        asignaciones = edge_assignments(G, particion)
        self.assertEqual(len(asignaciones), 2)
        theta = asignaciones[0]
        self.assertTrue(theta.block_graph().is_acyclic())

    def test_tipos_invalidos(self):
        particion = SetPartition((frozenset('a'), frozenset('b')))
        with self.assertRaises(ValidationError):
            EdgeAssignment(particion, ((frozenset('ab'), 2),))
        with self.assertRaises(ValidationError):
            EdgeAssignment(particion, ((frozenset('bc'), 0),))
        with self.assertRaises(ValidationError):
            OrientedBlockGraph(2, frozenset({(1, 1)}))
        self.assertFalse(OrientedBlockGraph(2, frozenset({(0, 1), (1, 0)})).is_acyclic())


class AxiomaDeAntipodaTests(SimpleTestCase):

    def test_base_pequena(self):
        for forma in base_pequena():
            for modo in MODOS:
                self.assertTrue(verify_antipode(forma, modo), (str(forma), str(modo)))

    def test_t5_modos_iguales(self):
        for modo in Modo:
            self.assertTrue(verify_antipode(simplex_hypergraph(5), CoproductMode(modo, modo)))

    def test_involutiva(self):
        for modo in MODOS:
            S = takeuchi_antipode(simplex_hypergraph(3), modo)
            self.assertEqual(antipode_lc(S, modo), LinearCombination.basis(T(3)))

    def test_unidad(self):
        self.assertTrue(verify_antipode(H(''), 'subset,subset'))


class MetodosTests(SimpleTestCase):

    def test_entrada_comun(self):
        G = simplex_hypergraph(3)
        self.assertEqual(antipode(G, 'cap', 'closed'), antipode(G, 'cap,cap', 'takeuchi'))
        self.assertEqual(antipode(G, 'subset,cap', 'mixed'), antipode(G, 'subset,cap'))
        with self.assertRaises(ValidationError):
            antipode(G, 'subset,cap', 'closed')
        with self.assertRaises(ValidationError):
            antipode(G, 'subset', 'otro')


class CompatibilidadCromaticaTests(SimpleTestCase):

    def test_polinomio_en_menos_x(self):
        for G in MUESTRA:
            for v in ChromaticVariant:
                self.assertTrue(chromatic_antipode_compatibility(G, v), (str(G), v))

from itertools import combinations

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase, override_settings

from hipergrafos.exceptions import LimiteExcedido
from hipergrafos.services import complete_graph, path_graph, simplex_hypergraph
from hipergrafos.tipos import Hypergraph, SetPartition

from .services import (
    acyclic_orientations, check_orientation_identities, classify_orientation,
    enumerate_quasi_orders, enumerate_quasi_orders_raw, orientation_sums,
    stanley_count, strict_partial_orders,
)
from .tipos import OrientationClass, QuasiOrder


def H(vertices, aristas=()):
    return Hypergraph(tuple(vertices), frozenset(frozenset(a) for a in aristas))


def cadena(*clases):
    """Cuasi-orden total con las clases dadas, de menor a mayor."""
    bloques = tuple(frozenset(c) for c in clases)
    orden = frozenset((i, j) for i in range(len(bloques)) for j in range(i + 1, len(bloques)))
    return QuasiOrder(SetPartition(bloques), orden)


def hipergrafos_pequenos():
    """Hipergrafos sobre {0,1,2,3} con a lo sumo 3 aristas no triviales (muestra)."""
    vertices = (0, 1, 2, 3)
    posibles = [frozenset(c) for k in (2, 3, 4) for c in combinations(vertices, k)]
    for k in range(4):
        for aristas in combinations(posibles, k):
            yield Hypergraph(vertices, frozenset(aristas))


class EnumeracionTests(SimpleTestCase):

    def test_ordenes_parciales(self):
        self.assertEqual([len(list(strict_partial_orders(k))) for k in range(5)], [1, 1, 3, 19, 219])

    def test_cuasi_ordenes(self):
        self.assertEqual([sum(1 for _ in enumerate_quasi_orders(range(n))) for n in range(1, 5)], [1, 4, 29, 355])

    def test_coincide_con_fuerza_bruta(self):
        for n in range(1, 5):
            elementos = list('abcd'[:n])
            rapidos = {q.relation() for q in enumerate_quasi_orders(elementos)}
            lentos = [q.relation() for q in enumerate_quasi_orders_raw(elementos)]
            self.assertEqual(len(lentos), len(set(lentos)))
            self.assertEqual(rapidos, set(lentos))

    def test_fuerza_bruta_limitada(self):
        with self.assertRaises(ValidationError):
            list(enumerate_quasi_orders_raw('abcde'))

    @override_settings(HIPERGRAFOS_MAX_ORIENTACION=3)
    def test_limite(self):
        with self.assertRaises(LimiteExcedido):
            list(enumerate_quasi_orders('abcd'))

    def test_orden_invalido(self):
        with self.assertRaises(ValidationError):
            QuasiOrder(SetPartition((frozenset('a'), frozenset('b'))), frozenset({(0, 1), (1, 0)}))
        with self.assertRaises(ValidationError):
            QuasiOrder(SetPartition((frozenset('a'), frozenset('b'), frozenset('c'))), frozenset({(0, 1), (1, 2)}))

    def test_clasificacion_invalida(self):
        with self.assertRaises(ValidationError):
            OrientationClass(False, True, False)


class ClasificacionTests(SimpleTestCase):

    def test_t2(self):
        T2 = H('ab', ['ab'])
        self.assertEqual(classify_orientation(T2, cadena('a', 'b')), OrientationClass(True, True, True))
        self.assertFalse(classify_orientation(T2, cadena('ab')).is_acyclic)

    def test_t3_con_empate(self):
        clase = classify_orientation(H('abc', ['abc']), cadena('ab', 'c'))
        self.assertEqual(clase, OrientationClass(True, False, True))
        clase = classify_orientation(H('abc', ['abc']), cadena('c', 'ab'))
        self.assertEqual(clase, OrientationClass(True, False, False))

    def test_empate_sin_arista(self):
        # a y c son equivalentes pero no comparten arista
        G = H('abc', ['ab', 'bc'])
        self.assertFalse(classify_orientation(G, cadena('ac', 'b')).is_acyclic)

    def test_sin_camino_creciente(self):
        # a < c sin camino estrictamente creciente de a a c
        G = H('abc', ['ab', 'bc'])
        self.assertFalse(classify_orientation(G, cadena('b', 'a', 'c')).is_acyclic)
        self.assertTrue(classify_orientation(G, cadena('a', 'b', 'c')).is_acyclic)

    def test_incomparables_en_arista(self):
        q = QuasiOrder(SetPartition((frozenset('a'), frozenset('b'))), frozenset())
        self.assertFalse(classify_orientation(H('ab', ['ab']), q).is_acyclic)
        self.assertTrue(classify_orientation(H('ab'), q).is_acyclic)

    def test_conjunto_distinto(self):
        with self.assertRaises(ValidationError):
            classify_orientation(H('abc', ['abc']), cadena('a', 'b'))

    def test_totales_tienen_clases_unitarias(self):
        for G in [simplex_hypergraph(3), H('abcd', ['abc', 'cd']), complete_graph(3)]:
            for q, clase in acyclic_orientations(G):
                if clase.is_total:
                    self.assertEqual(q.cl, G.n)


class SumasTests(SimpleTestCase):

    def test_t2(self):
        sumas = orientation_sums(simplex_hypergraph(2))
        self.assertEqual(sumas.signed_all, 2)
        self.assertEqual(sumas.total_count, 2)

    def test_t3(self):
        sumas = orientation_sums(simplex_hypergraph(3))
        self.assertEqual(sumas.total_count, 6)
        self.assertEqual(sumas.signed_all, 0)
        self.assertEqual(sumas.signed_one_max, -3)

    def test_identidades_en_simplices(self):
        for n in range(1, 6):
            self.assertTrue(check_orientation_identities(simplex_hypergraph(n))['holds'], n)

    def test_identidades_en_pequenos(self):
        for G in hipergrafos_pequenos():
            reporte = check_orientation_identities(G)
            self.assertTrue(reporte['holds'], (str(G), reporte))


class StanleyTests(SimpleTestCase):

    def test_ejemplos(self):
        self.assertEqual(stanley_count(simplex_hypergraph(3)), 6)
        self.assertEqual(stanley_count(H('abcd')), 1)
        self.assertEqual(stanley_count(path_graph(3)), 4)

    def test_grafos_coinciden_con_definicion(self):
        for G in [complete_graph(3), path_graph(4), H('abcd', ['ab', 'bc', 'cd', 'da'])]:
            self.assertEqual(stanley_count(G), orientation_sums(G).total_count)
            self.assertEqual(stanley_count(G), sum(1 for _ in acyclic_orientations(G)))

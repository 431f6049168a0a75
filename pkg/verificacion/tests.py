import random
from functools import partial
from unittest import mock

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from coproductos.tipos import AxiomReport
from hipergrafos.exceptions import LimiteExcedido
from hipergrafos.limites import tope_de_vertices
from hipergrafos.tipos import Hypergraph
from invariantes.services import chromatic

from .services import SUITES, all_hypergraphs, random_hypergraph, run_suite, suite_axioms
from .tipos import Caso, OpcionesVerificacion, SuiteReport

PEQUENAS = OpcionesVerificacion(max_n=2, count=3, seed=7)


class OpcionesTests(SimpleTestCase):

    def test_valores_por_defecto(self):
        opciones = OpcionesVerificacion()
        self.assertEqual((opciones.max_n, opciones.count, opciones.seed, opciones.workers), (4, 200, 0, 1))

    def test_rechaza_valores_invalidos(self):
        for argumentos in ({'max_n': 5}, {'max_n': -1}, {'count': -1}, {'workers': 0}):
            with self.assertRaises(ValidationError):
                OpcionesVerificacion(**argumentos)


class GeneradoresTests(SimpleTestCase):

    def test_base_exhaustiva(self):
        self.assertEqual(len(all_hypergraphs(0)), 1)
        self.assertEqual(len(all_hypergraphs(2)), 4)
        self.assertEqual(len(all_hypergraphs(3)), 12)
        self.assertTrue(all_hypergraphs(3)[0].is_empty)

    def test_base_fuera_de_rango(self):
        with self.assertRaises(ValidationError):
            all_hypergraphs(5)

    def test_aleatorio_determinista(self):
        a = [random_hypergraph(random.Random(3), 5) for _ in range(2)]
        self.assertEqual(a[0], a[1])
        self.assertIsInstance(a[0], Hypergraph)
        self.assertEqual(random_hypergraph(random.Random(3), 1).edges_plus, frozenset())


class SuitesTests(SimpleTestCase):

    def test_testigo(self):
        reporte = run_suite('witness')
        self.assertTrue(reporte.passed)
        self.assertEqual(reporte.cases, 1)

    def test_tablas(self):
        reporte = run_suite('tables')
        self.assertTrue(reporte.passed, reporte.failures)
        self.assertEqual(reporte.cases, 17)

    def test_coproductos(self):
        reporte = run_suite('coproducts')
        self.assertTrue(reporte.passed, reporte.failures)
        self.assertEqual(reporte.cases, 24)

    def test_oraculo(self):
        reporte = run_suite('oracle', PEQUENAS)
        self.assertTrue(reporte.passed, reporte.failures)
        self.assertEqual(reporte.cases, 7)

    def test_axiomas(self):
        reporte = run_suite('axioms', PEQUENAS)
        self.assertTrue(reporte.passed, reporte.failures)
        self.assertEqual(reporte.cases, 4 + 3 + 3)

    def test_cointeraccion(self):
        reporte = run_suite('cointeraction', PEQUENAS)
        self.assertTrue(reporte.passed, reporte.failures)
        self.assertEqual(reporte.cases, 7)

    def test_corpus_de_axiomas(self):
        opciones = OpcionesVerificacion(max_n=3, count=60, seed=1)
        casos = suite_axioms(opciones)
        self.assertEqual(len(casos), 12 + 60 + 60)
        completos = [len(c.elemento['vertices']) for c in casos if c.descripcion.startswith('axiomas')]
        coasociativos = [len(c.elemento['vertices']) for c in casos if c.descripcion.startswith('coasociatividad')]
        self.assertEqual(max(completos[:12]), 3)
        self.assertTrue(all(1 <= n <= 4 for n in completos[12:]))
        self.assertEqual(set(coasociativos), {4, 5})

    def test_orientaciones(self):
        reporte = run_suite('orientations', PEQUENAS)
        self.assertTrue(reporte.passed, reporte.failures)
        self.assertEqual(reporte.cases, 9)

    def test_antipoda(self):
        reporte = run_suite('antipode', OpcionesVerificacion(max_n=3, count=0))
        self.assertTrue(reporte.passed, reporte.failures)
        self.assertEqual(reporte.cases, 12)

    def test_caracteres(self):
        reporte = run_suite('characters', PEQUENAS)
        self.assertTrue(reporte.passed, reporte.failures)

    def test_multicomplejos(self):
        reporte = run_suite('multicomplex', OpcionesVerificacion(max_n=2, count=2, seed=5))
        self.assertTrue(reporte.passed, reporte.failures)
        self.assertEqual(reporte.cases, 9)

    def test_suite_desconocida(self):
        with self.assertRaises(ValidationError):
            run_suite('otra')


class EjecucionTests(SimpleTestCase):

    def test_independiente_del_numero_de_hilos(self):
        uno = run_suite('axioms', PEQUENAS)
        varios = run_suite('axioms', OpcionesVerificacion(max_n=2, count=3, seed=7, workers=4))
        self.assertEqual(uno.to_json(), varios.to_json())

    def test_reporta_contraejemplos_en_orden(self):
        casos = [
            Caso('cumple', {}, lambda: True),
            Caso('falla', {'x': 1}, lambda: False),
            Caso('reporte', {'x': 2}, lambda: AxiomReport('counit', False, {'vertices': []})),
            Caso('dict', {'x': 3}, lambda: {'holds': False, 'motivo': 'prueba'}),
        ]
        with mock.patch.dict(SUITES, {'prueba': lambda opciones: casos}):
            reporte = run_suite('prueba', OpcionesVerificacion(workers=3))
        self.assertFalse(reporte.passed)
        self.assertEqual(reporte.cases, 4)
        self.assertEqual([f['case'] for f in reporte.failures], ['falla', 'reporte', 'dict'])
        self.assertEqual(reporte.failures[1]['detail']['axiom'], 'counit')
        self.assertEqual(reporte.failures[2]['detail']['motivo'], 'prueba')
        self.assertEqual(reporte.to_json()['passed'], False)

    def test_texto_del_reporte(self):
        self.assertEqual(str(SuiteReport('witness', 1)), "witness: 1 casos, OK")
        self.assertEqual(str(SuiteReport('x', 2, [{}])), "x: 2 casos, FALLA (1)")

    def test_tope_del_trabajo_llega_a_los_hilos(self):
        G = Hypergraph(tuple(range(4)), frozenset({frozenset(range(4))}))
        casos = [Caso(f'T_4 #{i}', G.to_json(), partial(chromatic, G, 'subset')) for i in range(3)]
        with mock.patch.dict(SUITES, {'grande': lambda opciones: casos}):
            self.assertTrue(run_suite('grande', OpcionesVerificacion(workers=2)).passed)
            with tope_de_vertices(3):
                with self.assertRaises(LimiteExcedido):
                    run_suite('grande', OpcionesVerificacion(workers=2))

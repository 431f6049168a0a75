import json
from io import StringIO
from unittest import mock

from django.conf import settings
from django.core.exceptions import ValidationError
from django.core.management import CommandError, call_command
from django.test import SimpleTestCase, TestCase

from antipodas.services import takeuchi_antipode
from coproductos.services import delta_contract
from hipergrafos.services import canonical_form, simplex_hypergraph
from hipergrafos.tipos import Modo
from invariantes.services import eulerian_idempotent
from multicomplejos.services import EJEMPLO_C, canonical_mc, ejemplo_c, kappa
from verificacion.services import SUITES
from verificacion.tipos import Caso

from .management.commands import verify
from .models import ResultadoCalculo
from .services import parse_hypergraph, parse_multicomplex, run
from .tipos import JobSpec

T3 = '{"vertices": ["a", "b", "c"], "edges": [["a", "b", "c"]]}'
T2 = '{"vertices": ["a", "b"], "edges": [["a", "b"]]}'


def ejemplo(nombre):
    return str(settings.BASE_DIR / 'ejemplos' / nombre)


def suite_que_falla(opciones):
    return [Caso('siempre falla', {'vertices': []}, lambda: False)]


class ParseoTests(SimpleTestCase):

    def test_hipergrafo(self):
        G = parse_hypergraph(T3)
        self.assertEqual(G.vertices, ('a', 'b', 'c'))
        self.assertEqual(canonical_form(G), canonical_form(simplex_hypergraph(3)))

    def test_arista_con_vertice_repetido(self):
        with self.assertRaises(ValidationError) as contexto:
            parse_hypergraph('{"vertices": ["a", "b"], "edges": [["a", "a"]]}')
        self.assertEqual(contexto.exception.code, 'arista_repetida')

    def test_aristas_triviales_se_ignoran(self):
        G = parse_hypergraph('{"vertices": ["a", "b"], "edges": [["a"], []]}')
        self.assertEqual(G.edges_plus, frozenset())

    def test_esquema(self):
        for texto in ('[]', '{"vertices": "ab"}', '{"vertices": ["a"], "edges": "a"}',
                      '{"vertices": ["a", "b"], "edges": [[["a"], "b"]]}', '{"vertices": [true]}'):
            with self.assertRaises(ValidationError, msg=texto):
                parse_hypergraph(texto)

    def test_json_invalido_y_arista_fuera(self):
        with self.assertRaises(ValidationError) as contexto:
            parse_hypergraph('{"vertices": ')
        self.assertEqual(contexto.exception.code, 'json_invalido')
        with self.assertRaises(ValidationError):
            parse_hypergraph('{"vertices": ["a", "b"], "edges": [["a", "c"]]}')

    def test_multicomplejo(self):
        C = parse_multicomplex(json.dumps(EJEMPLO_C))
        self.assertEqual(C, ejemplo_c())
        self.assertEqual(len(C.instances), 8)

    def test_multicomplejo_viola_soporte(self):
        texto = json.dumps({
            'vertices': ['a', 'b', 'c'],
            'edges': [{'id': 'e1', 'multiset': {'a': 1, 'b': 1}}],
            'order': [[{'singleton': 'c'}, 'e1']],
        })
        with self.assertRaises(ValidationError) as contexto:
            parse_multicomplex(texto)
        self.assertEqual(contexto.exception.code, 'axioma')


class RunTests(SimpleTestCase):

    def test_cromatico(self):
        self.assertEqual(run(JobSpec('chromatic', ejemplo('T_4.json'))), (0, 'X^4 - X', ''))

    def test_cromatico_en_base_de_hilbert(self):
        job = JobSpec('chromatic', ejemplo('T_5.json'), {'variant': 'mixed', 'basis': 'hilbert'})
        self.assertEqual(run(job), (0, '5 H2 + 70 H3 + 180 H4 + 120 H5', ''))

    def test_evaluacion_y_json(self):
        codigo, salida, _ = run(JobSpec('chromatic', ejemplo('T_4.json'), {'evaluate': -1}))
        self.assertEqual((codigo, salida), (0, 'X^4 - X\nP(-1) = 2'))
        codigo, salida, _ = run(JobSpec('chromatic', T3, {'variant': 'mixed'}, formato='json'))
        datos = json.loads(salida)
        self.assertEqual(datos['polynomial']['text'], 'X^3 - 3/2 X^2 + 1/2 X')
        self.assertEqual(datos['polynomial']['coefficients'], ['0', '1/2', '-3/2', '1'])

    def test_coproductos(self):
        codigo, salida, _ = run(JobSpec('coproduct', T3, {'contract': 'subset'}))
        self.assertEqual((codigo, salida), (0, str(delta_contract(simplex_hypergraph(3), Modo.SUBSET))))
        codigo, salida, _ = run(JobSpec('coproduct', T3, {'left': 'cap', 'right': 'cap'}, formato='json'))
        self.assertEqual(json.loads(salida)['mode'], 'Δ (∩,∩)')

    def test_antipoda(self):
        codigo, salida, _ = run(JobSpec('antipode', T2))
        self.assertEqual((codigo, salida), (0, str(takeuchi_antipode(simplex_hypergraph(2), 'subset,subset'))))
        self.assertEqual(run(JobSpec('antipode', T2, {'mode': 'subset,cap', 'method': 'closed'}))[0], 2)
        self.assertEqual(run(JobSpec('antipode', T2, {'mode': 'otro'}))[0], 2)

    def test_orientaciones(self):
        self.assertEqual(run(JobSpec('orientations', T3)), (0, 'signed_all=0, total_count=6, signed_one_max=-3', ''))
        orden = json.dumps({'classes': [['a', 'b'], ['c']], 'order': [[0, 1]]})
        codigo, salida, _ = run(JobSpec('orientations', T3, {'action': 'classify', 'orden': orden}))
        self.assertEqual((codigo, salida), (0, 'acyclic: sí, total: no, one_max: sí'))
        codigo, salida, _ = run(JobSpec('orientations', T2, {'action': 'list'}))
        self.assertEqual(salida.splitlines()[0], '2 orientaciones acíclicas')
        self.assertEqual(run(JobSpec('orientations', T3, {'action': 'classify', 'orden': '{}'}))[0], 2)

    def test_caracter_y_euleriano(self):
        self.assertEqual(run(JobSpec('character', T2)), (0, '-1', ''))
        self.assertEqual(run(JobSpec('character', T3, {'mode': 'cap'})), (0, '2', ''))
        self.assertEqual(run(JobSpec('character', T3, {'mode': 'cap', 'method': 'counts'}))[0], 2)
        self.assertEqual(run(JobSpec('eulerian', T2))[1], str(eulerian_idempotent(simplex_hypergraph(2))))

    def test_multicomplejos(self):
        literal = json.dumps(EJEMPLO_C)
        self.assertEqual(run(JobSpec('mc', literal, {'action': 'kappa'})), (0, str(kappa(ejemplo_c())), ''))
        codigo, salida, _ = run(JobSpec('mc', '{"vertices": ["a", "b"], "edges": '
                                              '[{"id": "e1", "multiset": {"a": 1, "b": 1}}]}', {'action': 'check'}))
        self.assertEqual(codigo, 0)
        self.assertEqual(len(salida.splitlines()), 7)
        self.assertEqual(run(JobSpec('mc', literal, {'action': 'otra'}))[0], 2)

    def test_verificacion(self):
        codigo, salida, _ = run(JobSpec('verify', opciones={'suite': 'witness'}))
        self.assertEqual((codigo, salida), (0, 'witness: 1 casos, OK'))
        self.assertEqual(run(JobSpec('verify', opciones={'suite': 'otra'}))[0], 2)
        self.assertEqual(run(JobSpec('verify', opciones={'suite': 'axioms', 'max_n': 5}))[0], 2)

    def test_verificacion_fallida(self):
        with mock.patch.dict(SUITES, {'falla': suite_que_falla}):
            codigo, salida, errores = run(JobSpec('verify', opciones={'suite': 'falla'}))
        self.assertEqual(codigo, 1)
        self.assertEqual(json.loads(errores)['failures'][0]['case'], 'siempre falla')

    def test_salida_independiente_de_hilos(self):
        opciones = {'suite': 'cointeraction', 'max_n': 2, 'count': 4}
        uno = run(JobSpec('verify', opciones={**opciones, 'workers': 1}, seed=7, formato='json'))
        varios = run(JobSpec('verify', opciones={**opciones, 'workers': 3}, seed=7, formato='json'))
        self.assertEqual(uno, varios)
        self.assertEqual(uno[0], 0)

    def test_limite_excedido(self):
        codigo, _, errores = run(JobSpec('chromatic', ejemplo('T_4.json'), max_vertices=3))
        self.assertEqual(codigo, 3)
        self.assertIn('Límite excedido', errores)

    def test_errores_de_entrada(self):
        self.assertEqual(run(JobSpec('otro', T3))[0], 2)
        self.assertEqual(run(JobSpec('chromatic', ejemplo('no_existe.json')))[0], 2)
        self.assertEqual(run(JobSpec('chromatic', None))[0], 2)
        self.assertEqual(run(JobSpec('chromatic', T3, {'variant': 'otra'}))[0], 2)
        with self.assertRaises(ValidationError):
            JobSpec('chromatic', T3, formato='xml')


class ComandosTests(TestCase):
    fixtures = ['hipergrafos', 'multicomplejos']

    def _llamar(self, *args, **opciones):
        salida, errores = StringIO(), StringIO()
        call_command(*args, stdout=salida, stderr=errores, **opciones)
        return salida.getvalue(), errores.getvalue()

    def test_cromatico_desde_catalogo(self):
        self.assertEqual(self._llamar('chromatic', 'catalogo:T_4')[0], 'X^4 - X\n')
        salida, _ = self._llamar('chromatic', 'catalogo:T_5', variant='mixed', basis='hilbert')
        self.assertEqual(salida, '5 H2 + 70 H3 + 180 H4 + 120 H5\n')

    def test_cromatico_desde_archivo_en_json(self):
        salida, _ = self._llamar('chromatic', ejemplo('T_4.json'), formato='json')
        self.assertEqual(json.loads(salida)['polynomial']['text'], 'X^4 - X')

    def test_multicomplejo_desde_catalogo(self):
        salida, _ = self._llamar('mc', 'canonical', 'catalogo:ejemplo_C')
        self.assertEqual(salida, f'{canonical_mc(ejemplo_c())}\n')

    def test_verificar(self):
        salida, _ = self._llamar('verify', suite='witness', count=0)
        self.assertEqual(salida, 'witness: 1 casos, OK\n')

    def test_codigos_de_salida(self):
        with self.assertRaises(CommandError) as contexto:
            self._llamar('chromatic', 'catalogo:no_existe')
        self.assertEqual(contexto.exception.returncode, 2)
        with self.assertRaises(CommandError) as contexto:
            self._llamar('chromatic', 'catalogo:T_7', max_vertices=5)
        self.assertEqual(contexto.exception.returncode, 3)
        with self.assertRaises(CommandError) as contexto:
            self._llamar('chromatic', 'catalogo:T_3', max_vertices=0)
        self.assertEqual(contexto.exception.returncode, 2)

    def test_contraejemplo_en_salida_de_error(self):
        errores = StringIO()
        with mock.patch.dict(SUITES, {'falla': suite_que_falla}):
            with self.assertRaises(CommandError) as contexto:
                call_command('verify', suite='falla', stdout=StringIO(), stderr=errores)
        self.assertEqual(contexto.exception.returncode, 1)
        self.assertEqual(json.loads(errores.getvalue())['suite'], 'falla')

    def test_guardar(self):
        self._llamar('eulerian', 'catalogo:T_2', guardar=True)
        with self.assertRaises(CommandError):
            self._llamar('chromatic', 'catalogo:no_existe', guardar=True)
        exito, error = ResultadoCalculo.objects.order_by('id')
        self.assertEqual((exito.comando, exito.codigo_salida), ('eulerian', 0))
        self.assertEqual(exito.salida, str(eulerian_idempotent(simplex_hypergraph(2))))
        self.assertEqual((error.comando, error.codigo_salida), ('chromatic', 2))


class LineaDeComandosTests(SimpleTestCase):

    def test_contraejemplo_deja_solo_json_en_stderr(self):
        salida, errores = StringIO(), StringIO()
        comando = verify.Command(stdout=salida, stderr=errores)
        with mock.patch.dict(SUITES, {'falla': suite_que_falla}):
            with self.assertRaises(SystemExit) as contexto:
                comando.run_from_argv(['manage.py', 'verify', '--suite', 'falla', '--skip-checks'])
        self.assertEqual(contexto.exception.code, 1)
        datos = json.loads(errores.getvalue())
        self.assertEqual(datos['failures'][0]['case'], 'siempre falla')
        self.assertEqual(salida.getvalue(), 'falla: 1 casos, FALLA (1)\n')

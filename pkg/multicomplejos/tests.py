import random

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase, TestCase, override_settings

from algebra.tipos import LinearCombination, RationalPolynomial
from antipodas.services import antipode_closed
from hipergrafos.exceptions import LimiteExcedido
from hipergrafos.services import simplex_hypergraph
from hipergrafos.tipos import Hypergraph, SetPartition
from invariantes.services import coloring_oracle

from .services import (
    COCIENTE_EJEMPLO_C, UNO, canonical_mc, check_kappa_morphism, check_mc_eulerian, ejemplo_c,
    guardar_multicomplejo, kappa, kappa_lc, mc_admissible_partitions, mc_antipode, mc_check_axioms,
    mc_chromatic, mc_components, mc_coproduct, mc_counit_eps_delta, mc_delta_contract, mc_eulerian,
    mc_from_hypergraph, mc_from_multigraph, mc_from_simplicial_complex, mc_partition_restrict,
    mc_product, mc_quotient, mc_reduced_coproduct, mc_restrict, mc_takeuchi_antipode,
    obtener_multicomplejo, random_multicomplex, verify_mc_antipode,
)
from .tipos import EdgeInstance, EdgeInstanceMultiset, MultiComplex


def MC(vertices, *instancias, orden=()):
    """MC('ab', 'ab', 'aab', orden=[('e1', 'e2')]): instancias e1, e2, ... con repeticiones."""
    lista = [EdgeInstance(f"e{i}", EdgeInstanceMultiset.of(m)) for i, m in enumerate(instancias, start=1)]
    return MultiComplex.build(tuple(vertices), lista, orden)


def P(*bloques):
    return SetPartition(tuple(frozenset(b) for b in bloques))


def aleatorios(cantidad, semilla=11):
    rng = random.Random(semilla)
    for _ in range(cantidad):
        yield random_multicomplex(rng, rng.randint(1, 5), rng.randint(0, 4))


class MultiComplejoTests(SimpleTestCase):

    def test_lee_el_ejemplo(self):
        C = ejemplo_c()
        self.assertEqual(C.n, 4)
        self.assertEqual(len(C.instances), 8)
        self.assertTrue(C.le('e1', 'e6'))
        self.assertFalse(C.le('e6', 'e1'))
        self.assertEqual(C.covers(), [('e1', 'e6'), ('e2', 'e6'), ('e3', 'e7'), ('e4', 'e8')])

    def test_rechaza_orden_sin_inclusion(self):
        with self.assertRaises(ValidationError) as contexto:
            MC('abc', 'ab', 'ac', orden=[('e1', 'e2')])
        self.assertEqual(contexto.exception.code, 'axioma')

    def test_rechaza_ciclo(self):
        with self.assertRaises(ValidationError):
            MC('ab', 'ab', 'ab', orden=[('e1', 'e2'), ('e2', 'e1')])

    def test_rechaza_transitividad_rota(self):
        C = MultiComplex(
            ('a', 'b'),
            tuple(EdgeInstance(f"e{i}", EdgeInstanceMultiset.of('ab')) for i in (1, 2, 3)),
            frozenset({('e1', 'e2'), ('e2', 'e3')}))
        with self.assertRaises(ValidationError):
            C.validar_axiomas()

    def test_rechaza_instancia_trivial_o_ajena(self):
        with self.assertRaises(ValidationError):
            MC('ab', 'a')
        with self.assertRaises(ValidationError):
            MC('ab', 'ac')
        with self.assertRaises(ValidationError):
            EdgeInstanceMultiset.of({'a': 0, 'b': 2})

    def test_relaciones_con_singletons(self):
        datos = {'vertices': ['a', 'b'], 'edges': [{'id': 'e1', 'multiset': {'a': 2}}],
                 'order': [[{'singleton': 'a'}, 'e1'], [{'empty': True}, 'e1']]}
        self.assertEqual(len(MultiComplex.from_json(datos).instances), 1)
        datos['order'] = [[{'singleton': 'b'}, 'e1']]
        with self.assertRaises(ValidationError) as contexto:
            MultiComplex.from_json(datos)
        self.assertEqual(contexto.exception.code, 'axioma')

    def test_json_ida_y_vuelta(self):
        C = ejemplo_c()
        self.assertEqual(MultiComplex.from_json(C.to_json()), C)


class RestriccionYProductoTests(SimpleTestCase):

    def test_restringir_a_ab(self):
        R = mc_restrict(ejemplo_c(), {'a', 'b'})
        self.assertEqual([i.id for i in R.instances], ['e1'])
        self.assertEqual(R.order, frozenset())

    def test_restricciones_triviales(self):
        C = ejemplo_c()
        self.assertEqual(mc_restrict(C, C.vertices), C)
        self.assertTrue(mc_restrict(C, ()).is_empty)
        with self.assertRaises(ValidationError):
            mc_restrict(C, {'z'})

    def test_restriccion_conserva_el_orden(self):
        R = mc_restrict(ejemplo_c(), {'a', 'b', 'c'})
        self.assertEqual([i.id for i in R.instances], ['e1', 'e2', 'e3', 'e6', 'e7'])
        self.assertEqual(R.covers(), [('e1', 'e6'), ('e2', 'e6'), ('e3', 'e7')])

    def test_producto(self):
        C = MC('ab', 'ab')
        self.assertEqual(mc_product(C, MultiComplex(())), C)
        producto = mc_product(C, MC('ab', 'aab'))
        self.assertEqual(producto.n, 4)
        self.assertEqual(producto.order, frozenset())
        self.assertEqual(len(mc_components(producto)), 2)
        self.assertEqual(canonical_mc(producto), canonical_mc(C).producto(canonical_mc(MC('ab', 'aab'))))


class CocienteTests(SimpleTestCase):

    def test_cociente_del_ejemplo(self):
        Q = mc_quotient(ejemplo_c(), P('ab', 'cd'))
        self.assertEqual(Q.vertices, ('a', 'c'))
        self.assertEqual({i.id: str(i.multiset) for i in Q.instances}, COCIENTE_EJEMPLO_C)
        self.assertEqual(Q.covers(), [('e1', 'e6'), ('e2', 'e6'), ('e3', 'e7'), ('e4', 'e8')])

    def test_cociente_discreto(self):
        C = ejemplo_c()
        self.assertEqual(mc_quotient(C, P('a', 'b', 'c', 'd')), C)

    def test_cociente_de_un_bloque(self):
        Q = mc_quotient(MC('abc', 'ab', 'abc', orden=[('e1', 'e2')]), P('abc'))
        self.assertEqual([str(i.multiset) for i in Q.instances], ['{a,a}', '{a,a,a}'])
        self.assertTrue(Q.le('e1', 'e2'))

    def test_rechaza_particion_invalida(self):
        with self.assertRaises(ValidationError):
            mc_quotient(ejemplo_c(), P('ab', 'c'))

    def test_restriccion_por_particion(self):
        R = mc_partition_restrict(ejemplo_c(), P('ab', 'cd'))
        self.assertEqual([i.id for i in R.instances], ['e1', 'e5'])


class KappaTests(SimpleTestCase):

    def test_kappa_del_ejemplo(self):
        G = kappa(ejemplo_c())
        esperado = {frozenset('ab'), frozenset('ac'), frozenset('bd'), frozenset('cd'), frozenset('abc')}
        self.assertEqual(G.edges_plus, esperado)

    def test_soporte(self):
        self.assertEqual(kappa(MC('ac', 'aac')).edges_plus, {frozenset('ac')})
        self.assertEqual(kappa(MC('a', 'aa')).edges_plus, frozenset())

    def test_inmersion_de_hipergrafos(self):
        G = Hypergraph(tuple('abcd'), frozenset({frozenset('abc'), frozenset('ab'), frozenset('cd')}))
        C = mc_from_hypergraph(G)
        self.assertEqual(kappa(C), G)
        self.assertTrue(C.le('e1', 'e3'))

    def test_simplicial_y_multigrafo(self):
        C = mc_from_simplicial_complex('abc', ['abc'])
        self.assertEqual(len(C.instances), 4)
        self.assertEqual(len(C.order), 3)
        M = mc_from_multigraph('ab', [('a', 'b'), ('a', 'b'), ('a', 'a')])
        self.assertEqual([str(i.multiset) for i in M.instances], ['{a,b}', '{a,b}', '{a,a}'])
        with self.assertRaises(ValidationError):
            mc_from_multigraph('ab', [('a', 'b', 'b')])

    def test_morfismo_en_aleatorios(self):
        for C in aleatorios(25, semilla=5):
            reporte = check_kappa_morphism(C)
            self.assertTrue(reporte['holds'], (str(C), reporte))
        rng = random.Random(6)
        for _ in range(10):
            C = random_multicomplex(rng, rng.randint(1, 3), rng.randint(0, 3))
            D = random_multicomplex(rng, rng.randint(1, 3), rng.randint(0, 3))
            self.assertTrue(check_kappa_morphism(C, D)['product'], (str(C), str(D)))

    def test_morfismo_en_el_ejemplo_restringido(self):
        self.assertTrue(check_kappa_morphism(mc_restrict(ejemplo_c(), 'abc'))['holds'])


class CoproductoTests(SimpleTestCase):

    def test_un_vertice(self):
        v = canonical_mc(MultiComplex(('a',)))
        self.assertEqual(mc_coproduct(v), LinearCombination.basis(v, UNO) + LinearCombination.basis(UNO, v))

    def test_reducido(self):
        C = MC('ab', 'ab')
        T1 = canonical_mc(MultiComplex(('a',)))
        self.assertEqual(mc_reduced_coproduct(C), LinearCombination.basis(T1, T1).scale(2))
        with self.assertRaises(ValidationError):
            mc_reduced_coproduct(MultiComplex(()))

    def test_contraccion_de_una_instancia(self):
        C = MC('ab', 'ab')
        d = mc_delta_contract(C)
        self.assertEqual(len(d), 2)
        dos_vertices = canonical_mc(MultiComplex(('a', 'b')))
        self.assertEqual(d.coefficient(canonical_mc(C), dos_vertices), 1)
        self.assertEqual(d.coefficient(canonical_mc(MC('a', 'aa')), canonical_mc(C)), 1)

    def test_admisibles(self):
        self.assertEqual(len(mc_admissible_partitions(MC('ab', 'aab'))), 2)
        self.assertEqual(len(mc_admissible_partitions(MC('ab', 'aa'))), 1)

    def test_counidad_delta(self):
        self.assertEqual(mc_counit_eps_delta(MC('a', 'aa')), 1)
        self.assertEqual(mc_counit_eps_delta(MC('ab', 'ab')), 0)

    def test_axiomas_en_el_ejemplo_restringido(self):
        R = mc_restrict(ejemplo_c(), 'abc')
        for axioma in ('coassoc', 'cocommutativity', 'delta-coassoc', 'counit', 'multiplicativity', 'cointeraction'):
            self.assertTrue(mc_check_axioms(R, axioma), axioma)

    def test_axiomas_en_aleatorios(self):
        for C in aleatorios(15):
            for axioma in ('coassoc', 'counit', 'delta-coassoc', 'cointeraction'):
                self.assertTrue(mc_check_axioms(C, axioma), (axioma, str(C)))

    def test_multiplicatividad_con_otro(self):
        self.assertTrue(mc_check_axioms(MC('ab', 'aab'), 'multiplicativity', other=MC('abc', 'ab', 'abc')))

    def test_axioma_desconocido(self):
        with self.assertRaises(ValidationError):
            mc_check_axioms(MC('ab', 'ab'), 'coopposite')

    @override_settings(MULTICOMPLEJOS_MAX_INSTANCIAS=6)
    def test_limite_de_instancias(self):
        with self.assertRaises(LimiteExcedido):
            mc_coproduct(ejemplo_c())


class FormaCanonicaTests(SimpleTestCase):

    def test_reetiquetado(self):
        C = MC('abc', 'ab', 'abc', 'bbc', orden=[('e1', 'e2')])
        D = MC('xyz', 'zyy', 'xy', 'xyz', orden=[('e2', 'e3')])
        self.assertEqual(canonical_mc(C), canonical_mc(D))

    def test_el_orden_distingue(self):
        con_orden = MC('ab', 'ab', 'ab', orden=[('e1', 'e2')])
        sin_orden = MC('ab', 'ab', 'ab')
        self.assertNotEqual(canonical_mc(con_orden), canonical_mc(sin_orden))

    def test_multiplicidad_distingue(self):
        self.assertNotEqual(canonical_mc(MC('ab', 'ab')), canonical_mc(MC('ab', 'aab')))

    def test_invariante_por_permutaciones(self):
        rng = random.Random(2)
        for C in aleatorios(20, semilla=4):
            vertices = list(C.vertices)
            rng.shuffle(vertices)
            instancias = list(C.instances)
            rng.shuffle(instancias)
            permutado = MultiComplex(tuple(vertices), tuple(instancias), C.order)
            self.assertEqual(canonical_mc(permutado), canonical_mc(C))


class CorolariosTests(SimpleTestCase):

    def test_cromatico(self):
        X = RationalPolynomial.from_coefficients([0, 1])
        self.assertEqual(mc_chromatic(MC('ab', 'aab')), X * X - X)
        self.assertEqual(mc_chromatic(MultiComplex(tuple('abc'))), X * X * X)
        C = ejemplo_c()
        polinomio = mc_chromatic(C)
        for N in range(6):
            self.assertEqual(polinomio.evaluate(N), coloring_oracle(kappa(C), N, 'subset'))

    def test_antipoda_de_una_instancia(self):
        C = canonical_mc(MC('ab', 'ab'))
        dos_vertices = canonical_mc(MultiComplex(('a', 'b')))
        esperado = LinearCombination({(C,): -1, (dos_vertices,): 2})
        self.assertEqual(mc_antipode(C), esperado)
        v = canonical_mc(MultiComplex(('a',)))
        self.assertEqual(mc_antipode(v), LinearCombination.basis(v, coeficiente=-1))

    def test_antipoda_coincide_con_takeuchi(self):
        for C in aleatorios(20, semilla=8):
            if C.n <= 4:
                self.assertEqual(mc_antipode(C), mc_takeuchi_antipode(C), str(C))
                self.assertTrue(verify_mc_antipode(C), str(C))

    def test_inmersion_conmuta_con_la_antipoda(self):
        for G in (simplex_hypergraph(3), Hypergraph(tuple('abcd'), frozenset({frozenset('abc'), frozenset('cd')}))):
            imagen = kappa_lc(mc_antipode(mc_from_hypergraph(G)))
            self.assertEqual(imagen, antipode_closed(G, 'subset'))

    def test_euleriano(self):
        C = canonical_mc(MC('ab', 'ab'))
        dos_vertices = canonical_mc(MultiComplex(('a', 'b')))
        self.assertEqual(mc_eulerian(C), LinearCombination({(C,): 1, (dos_vertices,): -1}))
        for D in aleatorios(15, semilla=9):
            if D.n <= 4:
                self.assertTrue(check_mc_eulerian(D)['holds'], str(D))


class CatalogoTests(TestCase):
    fixtures = ['multicomplejos']

    def test_obtener_del_catalogo(self):
        C = obtener_multicomplejo('ejemplo_C')
        self.assertEqual(C, ejemplo_c())
        self.assertIsNone(obtener_multicomplejo('no_existe'))

    def test_guardar_y_recuperar(self):
        C = MC('ab', 'aab')
        guardar_multicomplejo('nuevo', C, 'prueba')
        self.assertEqual(obtener_multicomplejo('nuevo'), C)
        with self.assertRaises(ValidationError):
            guardar_multicomplejo('nuevo', C)

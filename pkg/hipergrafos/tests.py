import random

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase, TestCase, override_settings

from .exceptions import LimiteExcedido
from .limites import memoria_con_tope, tope_de_vertices, verificar_multicomplejo, verificar_vertices
from .services import (
    admissible_partitions, canonical_form, complete_graph, connected_components,
    disjoint_union, enumerate_set_partitions, gamma, guardar_hipergrafo,
    obtener_hipergrafo, ordered_set_partitions, partition_restrict, path_graph,
    quotient, restrict, simplex_hypergraph, staircase_restrict,
)
from .tipos import Hypergraph, Modo, SetPartition


def H(vertices, aristas=()):
    return Hypergraph(tuple(vertices), frozenset(frozenset(a) for a in aristas))


def P(*bloques):
    return SetPartition(tuple(frozenset(b) for b in bloques))


T3 = H('abc', ['abc'])


class HipergrafoTests(SimpleTestCase):

    def test_rechaza_arista_con_un_vertice(self):
        with self.assertRaises(ValidationError):
            H('ab', ['a'])

    def test_rechaza_arista_fuera_de_los_vertices(self):
        with self.assertRaises(ValidationError):
            H('ab', ['ac'])

    def test_rechaza_vertices_repetidos(self):
        with self.assertRaises(ValidationError):
            Hypergraph(('a', 'a'), frozenset())

    def test_conteos(self):
        G = H('abcd', ['abc', 'cd'])
        self.assertEqual((G.vertex_count, G.edge_count), (4, 2))
        self.assertEqual((H('').vertex_count, H('').edge_count), (0, 0))


class RestriccionTests(SimpleTestCase):

    def test_subset_descarta_la_arista(self):
        self.assertEqual(restrict(T3, {'a', 'b'}, Modo.SUBSET), H('ab'))

    def test_cap_interseca(self):
        self.assertEqual(restrict(T3, {'a', 'b'}, Modo.CAP), H('ab', ['ab']))

    def test_restringir_a_todo_es_identidad(self):
        G = H('abcd', ['abc', 'cd'])
        for modo in Modo:
            self.assertEqual(restrict(G, G.vertices, modo), G)

    def test_rechaza_subconjunto_ajeno(self):
        with self.assertRaises(ValidationError):
            restrict(T3, {'z'}, Modo.SUBSET)

    def test_composicion_de_restricciones(self):
        rng = random.Random(3)
        G = H('abcde', ['abc', 'cde', 'ae', 'bd'])
        for _ in range(30):
            Y = {v for v in G.vertices if rng.random() < 0.7}
            X = {v for v in Y if rng.random() < 0.6}
            for modo in Modo:
                self.assertEqual(restrict(restrict(G, Y, modo), X, modo), restrict(G, X, modo))

    def test_conmutacion_mixta(self):
        G = H('abcde', ['abc', 'cde', 'ae', 'bd'])
        I, J, K = {'a', 'b'}, {'c', 'd'}, {'e'}
        for m1 in Modo:
            for m2 in Modo:
                izquierda = restrict(restrict(G, J | K, m1), J, m2)
                derecha = restrict(restrict(G, I | J, m2), J, m1)
                self.assertEqual(izquierda, derecha)


class EscalonadaTests(SimpleTestCase):

    def test_dos_singletons(self):
        self.assertEqual(staircase_restrict(H('ab', ['ab']), [{'a'}, {'b'}]), [H('a'), H('b')])

    def test_un_bloque(self):
        self.assertEqual(staircase_restrict(H('ab', ['ab']), [{'a', 'b'}]), [H('ab', ['ab'])])

    def test_bloque_superior_en_singletons(self):
        G = H('abc', ['ab', 'bc'])
        self.assertEqual(staircase_restrict(G, [{'a', 'c'}, {'b'}]), [H('ac'), H('b')])

    def test_rechaza_no_particion(self):
        with self.assertRaises(ValidationError):
            staircase_restrict(H('ab', ['ab']), [{'a'}])


class UnionYComponentesTests(SimpleTestCase):

    def test_union_disjunta(self):
        G = disjoint_union(H('ab', ['ab']), H('c'))
        self.assertEqual(G.n, 3)
        self.assertEqual(len(G.edges_plus), 1)

    def test_union_con_vacio(self):
        G = H('ab', ['ab'])
        self.assertEqual(disjoint_union(G, H('')), G)

    def test_union_conmutativa_en_forma_canonica(self):
        T2, T3b = H('ab', ['ab']), H('abc', ['abc'])
        self.assertEqual(canonical_form(disjoint_union(T2, T3b)), canonical_form(disjoint_union(T3b, T2)))

    def test_componentes(self):
        self.assertEqual(connected_components(T3), [T3])
        self.assertEqual(connected_components(disjoint_union(H('ab', ['ab']), H('c'))), [H('ab', ['ab']), H('c')])
        self.assertEqual(len(connected_components(H('abc', ['ab', 'bc']))), 1)


class CocienteTests(SimpleTestCase):

    def test_cociente_de_t3(self):
        G = quotient(T3, P('ab', 'c'))
        self.assertEqual(G, H('ac', ['ac']))

    def test_cociente_discreto(self):
        G = H('abcd', ['abc', 'cd'])
        self.assertEqual(quotient(G, P('a', 'b', 'c', 'd')), G)

    def test_cociente_de_un_bloque(self):
        self.assertEqual(quotient(H('ab', ['ab']), P('ab')), H('a'))

    def test_rechaza_particion_invalida(self):
        with self.assertRaises(ValidationError):
            quotient(T3, P('ab'))

    def test_composicion_de_cocientes(self):
        G = H('abcde', ['abc', 'cde', 'ae'])
        fina = P('ab', 'c', 'de')
        intermedio = quotient(G, fina)
        # bloques {a,b} y {c} se unen; {d,e} queda solo
        gruesa = P('abc', 'de')
        self.assertEqual(
            canonical_form(quotient(intermedio, P('ac', 'd'))),
            canonical_form(quotient(G, gruesa)))

    def test_restriccion_por_particion(self):
        self.assertEqual(partition_restrict(T3, P('ab', 'c'), Modo.CAP), H('abc', ['ab']))
        self.assertEqual(partition_restrict(T3, P('ab', 'c'), Modo.SUBSET), H('abc'))
        self.assertEqual(partition_restrict(T3, P('abc'), Modo.SUBSET), T3)


class ParticionesTests(SimpleTestCase):

    def test_numeros_de_bell(self):
        self.assertEqual(len(list(enumerate_set_partitions('abc'))), 5)
        self.assertEqual(len(list(enumerate_set_partitions('a'))), 1)
        self.assertEqual(len(list(enumerate_set_partitions('abcde'))), 52)
        self.assertEqual(len(list(enumerate_set_partitions(''))), 1)

    def test_orden_de_crecimiento_restringido(self):
        primeras = [p.to_json() for p in enumerate_set_partitions('abc')]
        self.assertEqual(primeras[0], [['a', 'b', 'c']])
        self.assertEqual(primeras[-1], [['a'], ['b'], ['c']])

    def test_particiones_ordenadas(self):
        # números de Fubini
        self.assertEqual(len(list(ordered_set_partitions('abc'))), 13)
        self.assertEqual(len(list(ordered_set_partitions('abcd'))), 75)

    @override_settings(HIPERGRAFOS_MAX_VERTICES=3)
    def test_limite_de_particiones(self):
        with self.assertRaises(LimiteExcedido):
            list(enumerate_set_partitions('abcd'))

    def test_admisibles(self):
        T2 = H('ab', ['ab'])
        for modo in Modo:
            self.assertEqual(len(admissible_partitions(T2, modo)), 2)
        self.assertEqual(len(admissible_partitions(T3, Modo.SUBSET)), 2)
        self.assertEqual(len(admissible_partitions(T3, Modo.CAP)), 5)

    def test_componentes_de_la_restriccion_son_los_bloques(self):
        G = H('abcde', ['abc', 'cde', 'ab'])
        for modo in Modo:
            for particion in admissible_partitions(G, modo):
                piezas = connected_components(partition_restrict(G, particion, modo))
                self.assertEqual(
                    sorted(sorted(p.vertices) for p in piezas),
                    sorted(sorted(b) for b in particion.blocks))


class GammaTests(SimpleTestCase):

    def test_gamma_de_t3_es_triangulo(self):
        self.assertEqual(gamma(T3), H('abc', ['ab', 'bc', 'ac']))

    def test_gamma_de_grafo(self):
        G = H('abcd', ['ab', 'bc', 'cd'])
        self.assertEqual(gamma(G), G)
        self.assertEqual(gamma(H('abc')), H('abc'))

    def test_gamma_conmuta_con_cap(self):
        G = H('abcde', ['abc', 'cde', 'be'])
        for I in [{'a', 'b'}, {'a', 'c', 'e'}, {'b', 'c', 'd', 'e'}]:
            self.assertEqual(gamma(restrict(G, I, Modo.CAP)), restrict(gamma(G), I, Modo.SUBSET))


class FormaCanonicaTests(SimpleTestCase):

    def test_camino_reetiquetado(self):
        self.assertEqual(
            canonical_form(H('abc', ['ab', 'bc'])).as_bytes(),
            canonical_form(H('xyz', ['zx', 'xy'])).as_bytes())

    def test_t3_distinto_de_triangulo(self):
        self.assertNotEqual(canonical_form(T3), canonical_form(complete_graph(3)))

    def test_idempotente(self):
        forma = canonical_form(H('abcde', ['abc', 'cd', 'de']))
        self.assertEqual(canonical_form(forma.as_hypergraph()), forma)

    def test_invariante_por_permutaciones_aleatorias(self):
        rng = random.Random(11)
        for _ in range(40):
            n = rng.randint(1, 7)
            vertices = list(range(n))
            aristas = set()
            for _ in range(rng.randint(0, 5)):
                tam = rng.randint(2, n) if n >= 2 else 0
                if tam:
                    aristas.add(frozenset(rng.sample(vertices, tam)))
            G = Hypergraph(tuple(vertices), frozenset(aristas))
            perm = vertices[:]
            rng.shuffle(perm)
            G2 = Hypergraph(tuple(vertices), frozenset(frozenset(perm[v] for v in e) for e in aristas))
            self.assertEqual(canonical_form(G), canonical_form(G2))

    def test_distingue_no_isomorfos(self):
        self.assertNotEqual(canonical_form(path_graph(4)), canonical_form(H('abcd', ['ab', 'ac', 'ad'])))
        self.assertNotEqual(canonical_form(H('abcd', ['abc', 'bcd'])), canonical_form(H('abcd', ['abc', 'cd'])))

    def test_producto_canonico(self):
        t1 = canonical_form(simplex_hypergraph(1))
        self.assertEqual(t1.producto(t1), canonical_form(H('ab')))

    @override_settings(HIPERGRAFOS_MAX_VERTICES=4)
    def test_limite(self):
        with self.assertRaises(LimiteExcedido):
            canonical_form(simplex_hypergraph(5))


class TopesTests(SimpleTestCase):

    def test_tope_del_trabajo(self):
        with tope_de_vertices(3):
            with self.assertRaises(LimiteExcedido):
                canonical_form(simplex_hypergraph(4))
            canonical_form(simplex_hypergraph(3))
        canonical_form(simplex_hypergraph(4))

    def test_sin_tope(self):
        with tope_de_vertices(None):
            verificar_vertices(10)

    def test_tope_de_multicomplejos(self):
        with tope_de_vertices(2):
            with self.assertRaises(LimiteExcedido):
                verificar_multicomplejo(3, 1)
        verificar_multicomplejo(3, 1)

    def test_memoria_con_tope(self):
        llamadas = []

        @memoria_con_tope(maxsize=8)
        def vertices(forma):
            llamadas.append(forma)
            return forma.n

        forma = canonical_form(simplex_hypergraph(4))
        self.assertEqual(vertices(forma), 4)
        with tope_de_vertices(3):
            with self.assertRaises(LimiteExcedido):
                vertices(forma)
        self.assertEqual(vertices(forma), 4)
        self.assertEqual(len(llamadas), 1)
        self.assertEqual(vertices.cache_info().hits, 1)


class CatalogoTests(TestCase):
    fixtures = ['hipergrafos.json']

    def test_obtener_del_catalogo(self):
        self.assertEqual(canonical_form(obtener_hipergrafo('T_3')), canonical_form(T3))
        self.assertIsNone(obtener_hipergrafo('no_existe'))

    def test_guardar_rechaza_duplicados(self):
        with self.assertRaises(ValidationError):
            guardar_hipergrafo('T_3', T3)

    def test_guardar_y_recuperar(self):
        G = H('xyz', ['xy', 'yz'])
        guardar_hipergrafo('camino_xyz', G, descripcion='camino')
        self.assertEqual(obtener_hipergrafo('camino_xyz'), G)

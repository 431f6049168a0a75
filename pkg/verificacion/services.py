"""
Suites de propiedades detrás de `manage.py verify`.

Cada suite arma una lista de casos (descripción, elemento en JSON y una
función de comprobación) y los evalúa sobre un ThreadPoolExecutor. Los casos
aleatorios se generan antes de repartir el trabajo, con random.Random(seed),
y los resultados se recogen en el orden de los casos: el reporte no depende
del número de hilos.
"""
import contextvars
import logging
import random
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache, partial, reduce
from itertools import combinations
from math import comb, factorial

import sympy
from django.core.exceptions import ValidationError
from sympy.functions.combinatorial.numbers import stirling
from sympy.utilities.iterables import partitions

from algebra.services import constant_character, convolve, counit_character, to_hilbert_basis
from algebra.tipos import X, LinearCombination, RationalPolynomial
from antipodas.services import (
    antipode_closed, antipode_lc, antipode_mixed, chromatic_antipode_compatibility, takeuchi_antipode,
    verify_antipode,
)
from coproductos.services import check_axioms, coproduct_lc, coproduct_pair, delta_contract
from coproductos.tipos import AxiomReport, CoproductMode
from hipergrafos.services import canonical_form, simplex_hypergraph
from hipergrafos.tipos import CanonicalHypergraph, Hypergraph, Modo, SetPartition
from invariantes.services import (
    chromatic, chromatic_via_counts, coloring_oracle, eulerian_idempotent, eulerian_lc, lambda_character,
)
from invariantes.tipos import ChromaticVariant
from multicomplejos.services import (
    COCIENTE_EJEMPLO_C, check_kappa_morphism, check_mc_eulerian, ejemplo_c, mc_quotient, random_multicomplex,
    verify_mc_antipode,
)
from orientaciones.services import check_orientation_identities

from .tipos import Caso, OpcionesVerificacion, SuiteReport

logger = logging.getLogger(__name__)

UNO = CanonicalHypergraph(0)
MODOS = [CoproductMode(i, d) for i in Modo for d in Modo]


def T(n: int) -> CanonicalHypergraph:
    return canonical_form(simplex_hypergraph(n))


def _producto(*formas) -> CanonicalHypergraph:
    return reduce(lambda a, b: a.producto(b), formas, UNO)


# ---------- Generadores ----------

@lru_cache(maxsize=5)
def _base(max_n: int) -> tuple:
    vistos, base = set(), []
    for n in range(max_n + 1):
        vertices = tuple(range(n))
        posibles = [frozenset(c) for k in range(2, n + 1) for c in combinations(vertices, k)]
        for k in range(len(posibles) + 1):
            for aristas in combinations(posibles, k):
                forma = canonical_form(Hypergraph(vertices, frozenset(aristas)))
                if forma not in vistos:
                    vistos.add(forma)
                    base.append(forma)
    logger.debug("Base exhaustiva con a lo sumo %s vértices: %s hipergrafos", max_n, len(base))
    return tuple(base)


def all_hypergraphs(max_n: int) -> list[Hypergraph]:
    """
    Un representante por clase de isomorfismo de hipergrafo con a lo sumo
    max_n vértices, incluido el vacío, en orden de vértices y de aristas.

    Raises:
        ValidationError: Si max_n no está entre 0 y 4.
    """
    if not 0 <= max_n <= 4:
        raise ValidationError("La base exhaustiva admite a lo sumo 4 vértices", code='opcion_invalida')
    return [forma.as_hypergraph() for forma in _base(max_n)]


def random_hypergraph(rng: random.Random, n: int, max_edges: int = 4) -> Hypergraph:
    """Hipergrafo sobre 0..n-1 con hasta max_edges aristas no triviales al azar."""
    vertices = list(range(n))
    aristas = set()
    if n >= 2:
        for _ in range(rng.randint(0, max_edges)):
            aristas.add(frozenset(rng.sample(vertices, rng.randint(2, n))))
    return Hypergraph(tuple(vertices), frozenset(aristas))


def _aleatorios(opciones: OpcionesVerificacion, minimo: int, maximo: int) -> list[Hypergraph]:
    rng = random.Random(opciones.seed)
    return [random_hypergraph(rng, rng.randint(minimo, maximo)) for _ in range(opciones.count)]


def _muestra(opciones: OpcionesVerificacion, maximo: int) -> list[Hypergraph]:
    """Base exhaustiva más `count` hipergrafos aleatorios con 1..maximo vértices."""
    return all_hypergraphs(opciones.max_n) + _aleatorios(opciones, 1, maximo)


# ---------- Comprobaciones ----------

def _todas(**resultados) -> dict:
    """Reúne varias comprobaciones booleanas en un dict con 'holds'."""
    return {**resultados, 'holds': all(resultados.values())}


def _coproducto_de_simplice(n: int, izquierda, derecha) -> LinearCombination:
    terminos = {(T(n), UNO): 1, (UNO, T(n)): 1}
    for k in range(1, n):
        palabra = (izquierda(k), derecha(n - k))
        terminos[palabra] = terminos.get(palabra, 0) + comb(n, k)
    return LinearCombination(terminos)


def _contraccion_cap_de_simplice(n: int) -> LinearCombination:
    terminos = {}
    for particion in partitions(n):
        bloques = sum(particion.values())
        coeficiente = factorial(n)
        for tam, veces in particion.items():
            coeficiente //= factorial(tam) ** veces * factorial(veces)
        derecha = _producto(*(T(tam) for tam, veces in particion.items() for _ in range(veces)))
        terminos[(T(bloques), derecha)] = coeficiente
    return LinearCombination(terminos)


def _fila_mixta(n: int) -> list:
    # n·(k-1)!·S(n-1, k-1): el último bloque de la partición ordenada es un singleton
    if n == 1:
        return [0, 1]
    return [0, 0] + [n * factorial(k - 1) * stirling(n - 1, k - 1) for k in range(2, n + 1)]


def _oraculo(G: Hypergraph) -> dict:
    diferencias = []
    for v in ChromaticVariant:
        p = chromatic(G, v)
        for N in range(G.n + 2):
            esperado = coloring_oracle(G, N, v)
            if p.evaluate(N) != esperado:
                diferencias.append({'variant': v.value, 'N': N, 'polynomial': str(p.evaluate(N)), 'oracle': esperado})
    return {'holds': not diferencias, 'mismatches': diferencias}


def _axiomas(G: Hypergraph) -> AxiomReport:
    comprobaciones = [(axioma, modo) for axioma in ('coassoc', 'counit') for modo in MODOS]
    comprobaciones += [(axioma, modo) for axioma in ('delta-coassoc', 'cocommutativity', 'counit', 'multiplicativity')
                       for modo in Modo]
    comprobaciones.append(('coopposite', None))
    for axioma, modo in comprobaciones:
        reporte = check_axioms(G, axioma, modo)
        if not reporte:
            return reporte
    return reporte


def _coasociatividad(G: Hypergraph) -> AxiomReport:
    comprobaciones = [('coassoc', modo) for modo in MODOS] + [('delta-coassoc', modo) for modo in Modo]
    for axioma, modo in comprobaciones:
        reporte = check_axioms(G, axioma, modo)
        if not reporte:
            return reporte
    return reporte


def _cointeraccion(G: Hypergraph) -> AxiomReport:
    for modo in Modo:
        reporte = check_axioms(G, 'cointeraction', modo)
        if not reporte:
            return reporte
    return reporte


def _antipodas(G: Hypergraph) -> dict:
    forma = canonical_form(G)
    resultados = {
        f'closed_{modo.value}': antipode_closed(G, modo) == takeuchi_antipode(G, CoproductMode(modo, modo))
        for modo in Modo
    }
    if not G.is_empty:
        mixta = antipode_mixed(G)
        resultados['mixed'] = all(mixta == takeuchi_antipode(G, modo) for modo in MODOS if not modo.is_equal)
    resultados['axiom'] = all(verify_antipode(G, modo) for modo in MODOS)
    resultados['involutive'] = all(
        antipode_lc(takeuchi_antipode(G, modo), modo) == LinearCombination.basis(forma) for modo in MODOS)
    resultados['chromatic'] = all(chromatic_antipode_compatibility(G, v) for v in ChromaticVariant)
    return _todas(**resultados)


def _euleriano_correcto(G: Hypergraph) -> bool:
    imagen = eulerian_idempotent(G)
    if eulerian_lc(imagen) != imagen:
        return False
    uno = LinearCombination.basis(UNO)
    return (coproduct_lc(imagen, 'subset,subset') - imagen.tensor(uno) - uno.tensor(imagen)).is_zero()


def _caracteres(G: Hypergraph, convoluciones: dict) -> dict:
    epsilon = counit_character()(G)
    resultados = {f'inverse_{modo.value}': convoluciones[modo](G) == epsilon for modo in Modo}
    resultados['counts'] = lambda_character(Modo.SUBSET)(G) == lambda_character(Modo.SUBSET, method='counts')(G)
    resultados['coefficients'] = chromatic_via_counts(G) == chromatic(G, ChromaticVariant.SUBSET)
    resultados['integral'] = all(lambda_character(modo)(G).is_integer for modo in Modo)
    if 1 <= G.n <= 4:
        resultados['eulerian'] = _euleriano_correcto(G)
    return _todas(**resultados)


# ---------- Suites ----------

def suite_tables(opciones: OpcionesVerificacion) -> list[Caso]:
    casos = []
    for n in range(2, 7):
        G = simplex_hypergraph(n)
        caida = RationalPolynomial.from_expr(sympy.ff(X, n))
        potencia = RationalPolynomial.monomial(n) - RationalPolynomial.monomial(1)
        casos.append(Caso(f'P_cap(T_{n})', G.to_json(), partial(lambda G, p: chromatic(G, 'cap') == p, G, caida)))
        casos.append(Caso(f'P_subset(T_{n})', G.to_json(),
                          partial(lambda G, p: chromatic(G, 'subset') == p, G, potencia)))
    for n in range(1, 8):
        G = simplex_hypergraph(n)
        casos.append(Caso(f'Hilbert P_mixed(T_{n})', G.to_json(),
                          partial(lambda G, fila: to_hilbert_basis(chromatic(G, 'mixed')) == fila, G, _fila_mixta(n))))
    return casos


def suite_coproducts(opciones: OpcionesVerificacion) -> list[Caso]:
    factores = {
        CoproductMode(Modo.SUBSET, Modo.SUBSET): (CanonicalHypergraph, CanonicalHypergraph),
        CoproductMode(Modo.CAP, Modo.CAP): (T, T),
        CoproductMode(Modo.CAP, Modo.SUBSET): (T, CanonicalHypergraph),
        CoproductMode(Modo.SUBSET, Modo.CAP): (CanonicalHypergraph, T),
    }
    casos = []
    for n in range(2, 6):
        G = simplex_hypergraph(n)
        for modo, (izquierda, derecha) in factores.items():
            esperado = _coproducto_de_simplice(n, izquierda, derecha)
            casos.append(Caso(f'Δ^{modo}(T_{n})', G.to_json(),
                              partial(lambda G, m, e: coproduct_pair(G, m) == e, G, modo, esperado)))
        subset = LinearCombination({(T(n), CanonicalHypergraph(n)): 1, (T(1), T(n)): 1})
        casos.append(Caso(f'δ^⊂(T_{n})', G.to_json(),
                          partial(lambda G, e: delta_contract(G, Modo.SUBSET) == e, G, subset)))
        casos.append(Caso(f'δ^∩(T_{n})', G.to_json(),
                          partial(lambda G, e: delta_contract(G, Modo.CAP) == e, G, _contraccion_cap_de_simplice(n))))
    return casos


def suite_oracle(opciones: OpcionesVerificacion) -> list[Caso]:
    hipergrafos = all_hypergraphs(opciones.max_n) + _aleatorios(opciones, opciones.max_n + 1, opciones.max_n + 2)
    return [Caso(f'oráculo {G}', G.to_json(), partial(_oraculo, G)) for G in hipergrafos]


def suite_axioms(opciones: OpcionesVerificacion) -> list[Caso]:
    """
    Todos los axiomas sobre la base y `count` casos aleatorios con a lo sumo
    max_n+1 vértices; además coasociatividad de los cuatro Δ y de ambos δ
    sobre otros `count` casos con max_n+1..max_n+2 vértices.
    """
    casos = [Caso(f'axiomas {G}', G.to_json(), partial(_axiomas, G))
             for G in _muestra(opciones, opciones.max_n + 1)]
    casos += [Caso(f'coasociatividad {G}', G.to_json(), partial(_coasociatividad, G))
              for G in _aleatorios(opciones, opciones.max_n + 1, opciones.max_n + 2)]
    return casos


def suite_cointeraction(opciones: OpcionesVerificacion) -> list[Caso]:
    return [Caso(f'cointeracción {G}', G.to_json(), partial(_cointeraccion, G))
            for G in _muestra(opciones, opciones.max_n + 1)]


def suite_orientations(opciones: OpcionesVerificacion) -> list[Caso]:
    hipergrafos = [G for G in all_hypergraphs(opciones.max_n) if len(G.edges_plus) <= 3]
    hipergrafos += [simplex_hypergraph(n) for n in range(1, 6)]
    return [Caso(f'orientaciones {G}', G.to_json(), partial(check_orientation_identities, G)) for G in hipergrafos]


def suite_antipode(opciones: OpcionesVerificacion) -> list[Caso]:
    return [Caso(f'antípoda {G}', G.to_json(), partial(_antipodas, G)) for G in all_hypergraphs(opciones.max_n)]


def suite_characters(opciones: OpcionesVerificacion) -> list[Caso]:
    # Se comparten entre casos para reutilizar la memoria de los caracteres
    convoluciones = {
        modo: convolve(constant_character(1, 'λ_0'), lambda_character(modo), modo) for modo in Modo
    }
    hipergrafos = _muestra(opciones, min(opciones.max_n + 1, 5))
    return [Caso(f'caracteres {G}', G.to_json(), partial(_caracteres, G, convoluciones)) for G in hipergrafos]


def suite_witness(opciones: OpcionesVerificacion) -> list[Caso]:
    G = simplex_hypergraph(3)
    esperado = RationalPolynomial.from_coefficients([0, sympy.Rational(1, 2), sympy.Rational(-3, 2), 1])

    def comprobar():
        p = chromatic(G, ChromaticVariant.MIXED)
        return _todas(exact=p == esperado, non_integral=not p.is_integral())

    return [Caso('P_mixed(T_3) = X^3 - 3/2 X^2 + 1/2 X', G.to_json(), comprobar)]


def _cociente_del_ejemplo() -> dict:
    Q = mc_quotient(ejemplo_c(), SetPartition((frozenset('ab'), frozenset('cd'))))
    return _todas(
        vertices=Q.vertices == ('a', 'c'),
        instances={i.id: str(i.multiset) for i in Q.instances} == COCIENTE_EJEMPLO_C,
        order=Q.covers() == [('e1', 'e6'), ('e2', 'e6'), ('e3', 'e7'), ('e4', 'e8')])


def suite_multicomplex(opciones: OpcionesVerificacion) -> list[Caso]:
    rng = random.Random(opciones.seed)
    casos = [Caso('cociente del ejemplo C por {a,b}|{c,d}', ejemplo_c().to_json(), _cociente_del_ejemplo)]
    for _ in range(opciones.count):
        C = random_multicomplex(rng, rng.randint(1, 3), rng.randint(0, 2))
        D = random_multicomplex(rng, rng.randint(1, 2), rng.randint(0, 2))
        casos.append(Caso(f'κ en {C} y {D}', {'C': C.to_json(), 'D': D.to_json()},
                          partial(check_kappa_morphism, C, D)))
        E = random_multicomplex(rng, rng.randint(1, 5), rng.randint(0, 4))
        casos.append(Caso(f'κ en {E}', E.to_json(), partial(check_kappa_morphism, E)))
    for _ in range(opciones.count):
        C = random_multicomplex(rng, rng.randint(1, 4), rng.randint(0, 3))
        casos.append(Caso(f'antípoda de {C}', C.to_json(), partial(verify_mc_antipode, C)))
        casos.append(Caso(f'euleriano de {C}', C.to_json(), partial(check_mc_eulerian, C)))
    return casos


SUITES = {
    'tables': suite_tables,
    'coproducts': suite_coproducts,
    'oracle': suite_oracle,
    'axioms': suite_axioms,
    'cointeraction': suite_cointeraction,
    'orientations': suite_orientations,
    'antipode': suite_antipode,
    'characters': suite_characters,
    'witness': suite_witness,
    'multicomplex': suite_multicomplex,
}


def _evaluar(caso: Caso) -> dict | None:
    """Ejecuta un caso y devuelve su contraejemplo, o None si se cumple."""
    resultado = caso.comprobar()
    if isinstance(resultado, AxiomReport):
        cumple, detalle = resultado.holds, resultado.to_json()
    elif isinstance(resultado, dict):
        cumple, detalle = resultado['holds'], resultado
    else:
        cumple, detalle = bool(resultado), {}
    if cumple:
        return None
    return {'case': caso.descripcion, 'element': caso.elemento, 'detail': detalle}


def run_suite(nombre: str, opciones: OpcionesVerificacion | None = None) -> SuiteReport:
    """
    Ejecuta una suite y reúne sus fallas en el orden de los casos.

    Args:
        nombre (str): Una de las claves de SUITES.
        opciones (OpcionesVerificacion): Tamaño de la base, casos aleatorios,
            semilla e hilos. Por defecto max_n=4, count=200, seed=0.

    Returns:
        SuiteReport: Casos comprobados y contraejemplos en JSON.

    Raises:
        ValidationError: Si la suite no existe.
        LimiteExcedido: Si algún caso supera un tope de recursos.

    Example:
        run_suite('witness').passed -> True
    """
    if nombre not in SUITES:
        raise ValidationError(f"Suite desconocida: {nombre}", code='suite_desconocida')
    opciones = opciones or OpcionesVerificacion()
    casos = SUITES[nombre](opciones)
    logger.info("Suite %s: %s casos con %s hilos", nombre, len(casos), opciones.workers)

    # Cada caso corre en una copia del contexto actual (tope de vértices del trabajo)
    contextos = [contextvars.copy_context() for _ in casos]
    with ThreadPoolExecutor(max_workers=opciones.workers) as executor:
        resultados = list(executor.map(lambda contexto, caso: contexto.run(_evaluar, caso), contextos, casos))

    reporte = SuiteReport(nombre, len(casos), [r for r in resultados if r is not None])
    logger.info("%s", reporte)
    return reporte

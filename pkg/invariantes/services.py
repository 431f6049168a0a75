import logging
from collections import Counter
from functools import lru_cache
from itertools import combinations, product
from math import factorial

import networkx as nx
import sympy
from django.core.exceptions import ValidationError

from algebra.services import (
    act_on_invariant, character_inverse, constant_character, hilbert_polynomial, linear_map,
)
from algebra.tipos import Character, LinearCombination, RationalPolynomial
from coproductos.services import coproducto_base, contraccion_base
from coproductos.tipos import CoproductMode
from hipergrafos.limites import memoria_con_tope, verificar_trabajo, verificar_vertices
from hipergrafos.services import (
    admissible_partitions, canonical_form, component_count, gamma, partition_restrict, quotient,
)
from hipergrafos.tipos import CanonicalHypergraph, Hypergraph, Modo

from .tipos import ChromaticVariant, SpanningCountTable

logger = logging.getLogger(__name__)

# Coproducto con el que cada variante es compatible
COPRODUCTO_DE_VARIANTE = {
    ChromaticVariant.SUBSET: CoproductMode(Modo.SUBSET, Modo.SUBSET),
    ChromaticVariant.CAP: CoproductMode(Modo.CAP, Modo.CAP),
    ChromaticVariant.MIXED: CoproductMode(Modo.SUBSET, Modo.CAP),
}


def _forma(G) -> CanonicalHypergraph:
    return G if isinstance(G, CanonicalHypergraph) else canonical_form(G)


def _hipergrafo(G) -> Hypergraph:
    return G.as_hypergraph() if isinstance(G, CanonicalHypergraph) else G


def _mascaras(forma: CanonicalHypergraph) -> list[int]:
    return [sum(1 << v for v in e) for e in forma.edges]


def _submascaras(mascara: int):
    sub = mascara
    while sub:
        yield sub
        sub = (sub - 1) & mascara


def _bloque_admitido(bloque: int, aristas: list[int], variante: ChromaticVariant, dentro: int) -> bool:
    """
    Condición sobre un bloque de color. Para subset ninguna arista cabe en el
    bloque; para cap y mixed cada arista lo corta en a lo sumo un vértice
    (en mixed sólo cuentan las aristas contenidas en `dentro`).
    """
    if variante == ChromaticVariant.SUBSET:
        return all(e & bloque != e for e in aristas)
    for e in aristas:
        if variante == ChromaticVariant.MIXED and e & dentro != e:
            continue
        interseccion = e & bloque
        if interseccion & (interseccion - 1):
            return False
    return True


@memoria_con_tope(maxsize=20_000)
def _conteo_por_bloques(forma: CanonicalHypergraph, variante: ChromaticVariant) -> tuple:
    """
    c[k] = número de particiones en k bloques admitidos; ordenadas en la
    variante mixta (recursión sobre el último bloque), no ordenadas en las
    otras dos (recursión sobre el bloque del menor vértice).
    """
    n = forma.n
    aristas = _mascaras(forma)

    @lru_cache(maxsize=None)
    def conteo(mascara: int) -> tuple:
        if mascara == 0:
            return (1,)
        acumulado = Counter()
        if variante == ChromaticVariant.MIXED:
            candidatos = _submascaras(mascara)
        else:
            menor = mascara & -mascara
            resto = mascara ^ menor
            candidatos = (sub | menor for sub in list(_submascaras(resto)) + [0])
        for bloque in candidatos:
            if not _bloque_admitido(bloque, aristas, variante, mascara):
                continue
            for k, c in enumerate(conteo(mascara ^ bloque)):
                if c:
                    acumulado[k + 1] += c
        return tuple(acumulado.get(k, 0) for k in range(max(acumulado, default=0) + 1))

    resultado = conteo((1 << n) - 1)
    conteo.cache_clear()
    return resultado


def chromatic(G, v) -> RationalPolynomial:
    """
    Polinomio cromático P_⊂, P_∩ o P_{⊂,∩} de G.

    Para subset y cap se suma k!·H_k(X) sobre las particiones no ordenadas
    en k bloques sin aristas; para mixed se suma H_k(X) sobre las
    particiones ordenadas cuyas restricciones escalonadas no tienen aristas.

    Args:
        G (Hypergraph | CanonicalHypergraph): Hipergrafo.
        v (ChromaticVariant | str): subset, cap o mixed.

    Returns:
        RationalPolynomial: Polinomio de grado |V(G)|.

    Raises:
        LimiteExcedido: Si |V(G)| supera el límite de vértices.

    Example:
        chromatic(T_3, 'mixed') -> X^3 - 3/2 X^2 + 1/2 X
    """
    variante = ChromaticVariant(v)
    conteos = _conteo_por_bloques(_forma(G), variante)
    total = RationalPolynomial()
    for k, c in enumerate(conteos):
        if c:
            peso = c if variante == ChromaticVariant.MIXED else c * factorial(k)
            total = total + hilbert_polynomial(k) * peso
    return total


def chromatic_hilbert(G, v) -> list:
    """Coeficientes de chromatic(G, v) en la base de Hilbert, sin pasar por monomios."""
    variante = ChromaticVariant(v)
    conteos = _conteo_por_bloques(_forma(G), variante)
    if variante == ChromaticVariant.MIXED:
        return [sympy.Integer(c) for c in conteos]
    return [sympy.Integer(c * factorial(k)) for k, c in enumerate(conteos)]


def _coloreo_valido(coloreo, aristas, variante: ChromaticVariant) -> bool:
    for arista in aristas:
        colores = [coloreo[v] for v in arista]
        if variante == ChromaticVariant.SUBSET:
            if len(set(colores)) == 1:
                return False
        elif variante == ChromaticVariant.CAP:
            if len(set(colores)) != len(colores):
                return False
        elif colores.count(max(colores)) != 1:
            return False
    return True


def coloring_oracle(G: Hypergraph, N: int, v) -> int:
    """
    Cuenta por fuerza bruta las funciones V(G) -> [N] que cumplen la
    condición de la variante en cada arista no trivial.

    Raises:
        LimiteExcedido: Si N^|V(G)| supera HIPERGRAFOS_LIMITE_TRABAJO.
    """
    variante = ChromaticVariant(v)
    G = _hipergrafo(G)
    if N < 0:
        raise ValidationError("El número de colores debe ser no negativo", code='colores_invalidos')
    verificar_trabajo('coloreos', N ** G.n)
    aristas = [tuple(e) for e in G.edges_plus]
    return sum(
        1 for valores in product(range(1, N + 1), repeat=G.n)
        if _coloreo_valido(dict(zip(G.vertices, valores)), aristas, variante))


def chromatic_via_gamma(G) -> RationalPolynomial:
    """
    P_∩(G) como polinomio cromático del grafo Γ(G), calculado por
    borrado-contracción con networkx.
    """
    G = _hipergrafo(G)
    verificar_vertices(G.n)
    if G.n == 0:
        return RationalPolynomial.from_coefficients([1])
    grafo = nx.Graph()
    grafo.add_nodes_from(G.vertices)
    grafo.add_edges_from(tuple(arista) for arista in gamma(G).edges_plus)
    return RationalPolynomial.from_expr(nx.chromatic_polynomial(grafo), sympy.Symbol('x'))


def p_zero(G) -> RationalPolynomial:
    """P_0(G) = X^|V(G)|."""
    return RationalPolynomial.monomial(_hipergrafo(G).n)


def spanning_counts(G) -> SpanningCountTable:
    """
    Tabla N_G(i, j) por enumeración de los subconjuntos de E^+(G).

    Raises:
        LimiteExcedido: Si 2^|E^+(G)| supera HIPERGRAFOS_LIMITE_TRABAJO.
    """
    G = _hipergrafo(G)
    aristas = sorted(G.edges_plus, key=lambda e: sorted(map(str, e)))
    verificar_trabajo('subhipergrafos generadores', 2 ** len(aristas))
    conteos = Counter()
    for j in range(len(aristas) + 1):
        for F in combinations(aristas, j):
            conteos[(component_count(Hypergraph(G.vertices, frozenset(F))), j)] += 1
    logger.debug("N_G calculado para %s: %s entradas", G, len(conteos))
    return SpanningCountTable(G.n, len(aristas), conteos)


@lru_cache(maxsize=len(Modo))
def _lambda_por_inversion(modo: Modo) -> Character:
    return character_inverse(constant_character(1, 'λ_0'), modo)


@lru_cache(maxsize=1)
def _lambda_por_conteos() -> Character:
    return Character('λ_⊂[N]', lambda forma: spanning_counts(forma).suma_alternada(1), entero=True)


def lambda_character(mode, method: str = 'inverse') -> Character:
    """
    λ_⋉, inverso de λ_0 para la convolución de δ^(⋉).

    Args:
        mode (Modo | str): subset o cap.
        method (str): 'inverse' (recursión de inversión) o 'counts'
            (λ_⊂(G) = Σ_j (-1)^j N_G(cc(G), j), sólo para subset).

    Raises:
        ValidationError: Método desconocido o 'counts' con cap.
    """
    modo = Modo(mode)
    if method == 'inverse':
        return _lambda_por_inversion(modo)
    if method == 'counts':
        if modo != Modo.SUBSET:
            raise ValidationError("El método 'counts' sólo existe para λ_⊂", code='metodo_invalido')
        return _lambda_por_conteos()
    raise ValidationError(f"Método desconocido: {method}", code='metodo_invalido')


def chromatic_via_lambda(G, mode) -> RationalPolynomial:
    """P_⋉(G) = Σ_{∼ ∈ E_⋉[G]} λ_⋉(G|∼)·X^cl(∼)."""
    modo = Modo(mode)
    return act_on_invariant(p_zero, lambda_character(modo), modo)(_hipergrafo(G))


def coefficients_via_counts(G) -> list[int]:
    """a_i = Σ_j (-1)^j N_G(i, j), en orden ascendente i = 0..|V(G)|."""
    tabla = spanning_counts(G)
    return [tabla.suma_alternada(i) for i in range(tabla.vertices + 1)]


def chromatic_via_counts(G) -> RationalPolynomial:
    return RationalPolynomial.from_coefficients(coefficients_via_counts(G))


@memoria_con_tope(maxsize=20_000)
def _euleriano_base(forma: CanonicalHypergraph) -> LinearCombination:
    G = forma.as_hypergraph()
    terminos = {}
    for p in admissible_partitions(G, Modo.SUBSET):
        coeficiente = spanning_counts(quotient(G, p)).suma_alternada(1)
        if coeficiente:
            palabra = (canonical_form(partition_restrict(G, p, Modo.SUBSET)),)
            terminos[palabra] = terminos.get(palabra, 0) + coeficiente
    return LinearCombination(terminos)


def eulerian_idempotent(G) -> LinearCombination:
    """
    ϖ(G) = Σ_{∼ ∈ E_⊂[G]} (Σ_j (-1)^j N_{G/∼}(1, j))·G|⊂∼.

    Example:
        eulerian_idempotent(T_2) -> T_2 - T_1^2
    """
    return _euleriano_base(_forma(G))


def eulerian_lc(lc: LinearCombination) -> LinearCombination:
    return linear_map(lc, _euleriano_base)


# ---------- Comprobaciones de propiedades ----------

def chromatic_coefficient_checks(G, v) -> dict:
    """
    Propiedades de los coeficientes para subset y cap: enteros, mónico de
    grado |V(G)| y coeficiente de X^(n-1) igual a menos el número de
    2-aristas (subset) o a -Σ_e C(|e|, 2) (cap).
    """
    variante = ChromaticVariant(v)
    if variante == ChromaticVariant.MIXED:
        raise ValidationError("Las propiedades de coeficientes no aplican a la variante mixta", code='variante_invalida')
    G = _hipergrafo(G)
    p = chromatic(G, variante)
    coeficientes = p.coefficients
    if variante == ChromaticVariant.SUBSET:
        esperado = -sum(1 for e in G.edges_plus if len(e) == 2)
    else:
        esperado = -sum(len(e) * (len(e) - 1) // 2 for e in G.edges_plus)
    subdominante = coeficientes[G.n - 1] if G.n >= 1 else 0
    return {
        'integral': p.is_integral(),
        'monic': p.degree == G.n and coeficientes[-1] == 1,
        'subleading': subdominante,
        'expected_subleading': esperado,
        'holds': p.is_integral() and p.degree == G.n and coeficientes[-1] == 1 and subdominante == esperado,
    }


def coproduct_compatibility(G, v, a: int, b: int) -> bool:
    """Σ P(G')(a)·P(G'')(b) sobre los términos del coproducto asociado = P(G)(a + b)."""
    variante = ChromaticVariant(v)
    forma = _forma(G)
    suma = sum(
        (c * chromatic(izquierda, variante).evaluate(a) * chromatic(derecha, variante).evaluate(b)
         for (izquierda, derecha), c in coproducto_base(forma, COPRODUCTO_DE_VARIANTE[variante]).terms.items()),
        sympy.Integer(0))
    return suma == chromatic(forma, variante).evaluate(a + b)


def delta_compatibility(G, mode, a: int, b: int) -> bool:
    """P(G)(a·b) = Σ_∼ P(G/∼)(a)·P(G|∼)(b)."""
    modo = Modo(mode)
    variante = ChromaticVariant(modo.value)
    forma = _forma(G)
    suma = sum(
        (c * chromatic(izquierda, variante).evaluate(a) * chromatic(derecha, variante).evaluate(b)
         for (izquierda, derecha), c in contraccion_base(forma, modo).terms.items()),
        sympy.Integer(0))
    return suma == chromatic(forma, variante).evaluate(a * b)

import logging
from itertools import product
from math import factorial

from django.core.exceptions import ValidationError

from algebra.services import apply_leg, evaluate_invariant, linear_map, multiply_legs
from algebra.tipos import LinearCombination
from coproductos.services import coproducto_base
from coproductos.tipos import AxiomReport, CoproductMode
from hipergrafos.limites import memoria_con_tope
from hipergrafos.services import (
    admissible_partitions, canonical_form, enumerate_set_partitions, is_connected,
    ordered_set_partitions, partition_restrict, quotient, restrict, staircase_restrict,
)
from hipergrafos.tipos import CanonicalHypergraph, Hypergraph, Modo
from invariantes.services import COPRODUCTO_DE_VARIANTE, chromatic
from invariantes.tipos import ChromaticVariant
from orientaciones.services import orientation_sums

from .tipos import EdgeAssignment

logger = logging.getLogger(__name__)

UNO = CanonicalHypergraph(0)

METODOS = ('takeuchi', 'closed', 'mixed')


def _forma(G) -> CanonicalHypergraph:
    return G if isinstance(G, CanonicalHypergraph) else canonical_form(G)


def _factores(G: Hypergraph, bloques: tuple, mode: CoproductMode) -> list[Hypergraph]:
    """Restricciones del iterado de Δ^(mode) a los bloques ordenados."""
    if mode.is_equal:
        return [restrict(G, bloque, mode.left) for bloque in bloques]
    if mode.left == Modo.SUBSET:
        return staircase_restrict(G, bloques)
    return staircase_restrict(G, bloques[::-1])[::-1]


def _producto(G: Hypergraph, factores: list[Hypergraph]) -> CanonicalHypergraph:
    aristas = frozenset().union(*(f.edges_plus for f in factores))
    return canonical_form(Hypergraph(G.vertices, aristas))


@memoria_con_tope(maxsize=20_000)
def _takeuchi_base(forma: CanonicalHypergraph, mode: CoproductMode) -> LinearCombination:
    if forma.is_empty:
        return LinearCombination.basis(UNO)
    G = forma.as_hypergraph()
    terminos = {}
    if mode.is_equal:
        # el producto no depende del orden de los bloques
        for particion in enumerate_set_partitions(G.vertices):
            k = particion.cl
            palabra = (_producto(G, _factores(G, particion.blocks, mode)),)
            terminos[palabra] = terminos.get(palabra, 0) + (-1) ** k * factorial(k)
    else:
        for bloques in ordered_set_partitions(G.vertices):
            palabra = (_producto(G, _factores(G, bloques, mode)),)
            terminos[palabra] = terminos.get(palabra, 0) + (-1) ** len(bloques)
    return LinearCombination(terminos)


def takeuchi_antipode(G, mode) -> LinearCombination:
    """
    Fórmula de Takeuchi: S(G) = Σ_{k≥1} (-1)^k Σ_{(I_1, ..., I_k)} G|I_1 ⋯ G|I_k
    sobre las particiones ordenadas de V(G), con restricciones escalonadas
    cuando los modos difieren.

    Args:
        G (Hypergraph | CanonicalHypergraph): Hipergrafo.
        mode (CoproductMode | str): Par de modos del coproducto.

    Returns:
        LinearCombination: S(G) en grado tensorial 1; S(1) = 1.

    Example:
        takeuchi_antipode(T_2, 'subset,subset') -> -T_2 + 2 T_1^2
    """
    return _takeuchi_base(_forma(G), CoproductMode.coerce(mode))


@memoria_con_tope(maxsize=20_000)
def _sumas_orientaciones(forma: CanonicalHypergraph):
    return orientation_sums(forma.as_hypergraph())


@memoria_con_tope(maxsize=20_000)
def _cerrada_base(forma: CanonicalHypergraph, modo: Modo) -> LinearCombination:
    if forma.is_empty:
        return LinearCombination.basis(UNO)
    G = forma.as_hypergraph()
    terminos = {}
    for p in admissible_partitions(G, modo):
        sumas = _sumas_orientaciones(canonical_form(quotient(G, p)))
        if modo == Modo.SUBSET:
            coeficiente = sumas.signed_all
        else:
            coeficiente = (-1) ** p.cl * sumas.total_count
        if coeficiente:
            palabra = (canonical_form(partition_restrict(G, p, modo)),)
            terminos[palabra] = terminos.get(palabra, 0) + coeficiente
    return LinearCombination(terminos)


def antipode_closed(G, mode) -> LinearCombination:
    """
    Antípoda de los modos iguales en forma cerrada.

    subset: Σ_{∼ ∈ E_⊂[G]} (Σ_{≤ acíclica de G/∼} (-1)^cl(≤))·G|⊂∼.
    cap: Σ_{∼ ∈ E_∩[G]} (-1)^cl(∼)·#{≤ acíclicas totales de G/∼}·G|∩∼.
    """
    return _cerrada_base(_forma(G), Modo(mode))


def edge_assignments(G: Hypergraph, particion) -> list[EdgeAssignment]:
    """Todas las θ para ∼: cada arista elige un bloque que la corta."""
    aristas = sorted(G.edges_plus, key=lambda e: sorted(map(str, e)))
    opciones = [
        [i for i, bloque in enumerate(particion.blocks) if bloque & arista]
        for arista in aristas
    ]
    return [EdgeAssignment(particion, tuple(zip(aristas, eleccion))) for eleccion in product(*opciones)]


@memoria_con_tope(maxsize=20_000)
def _mixta_base(forma: CanonicalHypergraph) -> LinearCombination:
    G = forma.as_hypergraph()
    terminos = {}
    for particion in enumerate_set_partitions(G.vertices):
        for theta in edge_assignments(G, particion):
            restringido = Hypergraph(G.vertices, theta.restricted_edges())
            if not all(is_connected(restrict(restringido, bloque, Modo.SUBSET)) for bloque in particion.blocks):
                continue
            if not theta.block_graph().is_acyclic():
                continue
            palabra = (canonical_form(restringido),)
            terminos[palabra] = terminos.get(palabra, 0) + (-1) ** particion.cl
    return LinearCombination(terminos)


def antipode_mixed(G) -> LinearCombination:
    """
    Antípoda común de Δ^(⊂,∩) y Δ^(∩,⊂) por pares (∼, θ):
    Σ (-1)^cl(∼)·G|_θ∼ sobre los pares cuyas componentes de G|_θ∼ son los
    bloques de ∼ y cuyo grafo de bloques G/_θ∼ no tiene ciclos dirigidos.

    Raises:
        ValidationError: Si G es vacío.
    """
    forma = _forma(G)
    if forma.is_empty:
        raise ValidationError("La antípoda por pares (∼, θ) requiere un hipergrafo no vacío", code='vacio')
    return _mixta_base(forma)


def antipode(G, mode, method: str = 'takeuchi') -> LinearCombination:
    """Punto de entrada común: method es 'takeuchi', 'closed' o 'mixed'."""
    if method == 'takeuchi':
        return takeuchi_antipode(G, mode)
    if method == 'closed':
        par = CoproductMode.coerce(mode)
        if not par.is_equal:
            raise ValidationError("La forma cerrada sólo existe para modos iguales", code='modo_invalido')
        return antipode_closed(G, par.left)
    if method == 'mixed':
        return antipode_mixed(G)
    raise ValidationError(f"Método de antípoda desconocido: {method}", code='metodo_invalido')


def antipode_lc(lc: LinearCombination, mode, method: str = 'takeuchi') -> LinearCombination:
    return linear_map(lc, lambda forma: antipode(forma, mode, method))


def verify_antipode(G, mode) -> AxiomReport:
    """
    Comprueba m∘(S⊗Id)∘Δ(G) = ε(G)·1, m∘(Id⊗S)∘Δ(G) = ε(G)·1 y S∘S(G) = G.

    Returns:
        AxiomReport: Evaluable como booleano; trae los lados si algo falla.
    """
    forma = _forma(G)
    par = CoproductMode.coerce(mode)

    def S(f):
        return _takeuchi_base(f, par)

    d = coproducto_base(forma, par)
    unidad = LinearCombination.basis(UNO) if forma.is_empty else LinearCombination.zero()
    elemento = LinearCombination.basis(forma)
    pares = [
        (multiply_legs(apply_leg(d, 0, S)), unidad),
        (multiply_legs(apply_leg(d, 1, S)), unidad),
        (linear_map(S(forma), S), elemento),
    ]
    for izquierda, derecha in pares:
        if izquierda != derecha:
            logger.info("Falla la antípoda %s sobre %s", par, forma)
            return AxiomReport('antipode', False, forma.to_json(), izquierda, derecha)
    return AxiomReport('antipode', True, forma.to_json())


def chromatic_antipode_compatibility(G, v) -> bool:
    """chromatic(S(G))(X) = chromatic(G)(-X) con la antípoda del coproducto de la variante."""
    variante = ChromaticVariant(v)
    S = takeuchi_antipode(G, COPRODUCTO_DE_VARIANTE[variante])
    izquierda = evaluate_invariant(S, lambda H: chromatic(H, variante))
    return izquierda == chromatic(G, variante).compose_negative()

import logging
from itertools import combinations, permutations
from typing import Iterable, Iterator

import networkx as nx
from django.core.exceptions import ValidationError
from django.db import transaction

from .canonico import forma_canonica_indices
from .limites import verificar_vertices
from .models import Hipergrafo
from .tipos import CanonicalHypergraph, Hypergraph, Modo, SetPartition, clave_etiqueta

logger = logging.getLogger(__name__)


def _validar_subconjunto(G: Hypergraph, I) -> frozenset:
    subconjunto = frozenset(I)
    if not subconjunto <= G.vertex_set:
        fuera = sorted(subconjunto - G.vertex_set, key=clave_etiqueta)
        raise ValidationError(f"Los vértices {fuera} no pertenecen al hipergrafo", code='subconjunto_invalido')
    return subconjunto


def _en_orden(G: Hypergraph, subconjunto) -> tuple:
    """Vértices del subconjunto en el orden de G."""
    return tuple(v for v in G.vertices if v in subconjunto)


def restrict(G: Hypergraph, I, mode: Modo) -> Hypergraph:
    """
    Restricción de G al subconjunto I.

    Con mode=subset se conservan las aristas contenidas en I; con mode=cap
    cada arista se interseca con I y se descartan los resultados de
    cardinal ≤ 1 (los duplicados desaparecen al ser un conjunto).

    Args:
        G (Hypergraph): Hipergrafo de partida.
        I (iterable): Subconjunto de V(G).
        mode (Modo): subset o cap.

    Returns:
        Hypergraph: Hipergrafo con conjunto de vértices I.

    Raises:
        ValidationError: Si I no está contenido en V(G).

    Example:
        restrict(T_3, {'a', 'b'}, Modo.CAP) -> T_2 sobre {a, b}
    """
    subconjunto = _validar_subconjunto(G, I)
    if Modo(mode) == Modo.SUBSET:
        aristas = frozenset(e for e in G.edges_plus if e <= subconjunto)
    else:
        aristas = frozenset(e & subconjunto for e in G.edges_plus if len(e & subconjunto) >= 2)
    return Hypergraph(_en_orden(G, subconjunto), aristas)


def staircase_restrict(G: Hypergraph, blocks) -> list[Hypergraph]:
    """
    Restricciones escalonadas G|^(p) I_p para bloques ordenados (I_1, ..., I_k):
    la p-ésima conserva e ∩ I_p para las aristas e ⊆ I_1 ⊔ ... ⊔ I_p.

    Raises:
        ValidationError: Si los bloques no forman una partición de V(G).
    """
    bloques = [frozenset(b) for b in blocks]
    SetPartition(tuple(bloques)).validar(G.vertex_set)

    resultado = []
    acumulado = frozenset()
    for bloque in bloques:
        acumulado |= bloque
        aristas = frozenset(
            e & bloque for e in G.edges_plus
            if e <= acumulado and len(e & bloque) >= 2)
        resultado.append(Hypergraph(_en_orden(G, bloque), aristas))
    return resultado


def disjoint_union(G: Hypergraph, H: Hypergraph) -> Hypergraph:
    """
    Unión disjunta GH. Si las etiquetas de H chocan con las de G se renombran
    con un sufijo numérico.
    """
    ocupadas = set(G.vertices)
    renombre = {}
    for v in H.vertices:
        nueva = v
        sufijo = 1
        while nueva in ocupadas:
            nueva = f"{v}_{sufijo}"
            sufijo += 1
        renombre[v] = nueva
        ocupadas.add(nueva)
    aristas_h = frozenset(frozenset(renombre[v] for v in e) for e in H.edges_plus)
    return Hypergraph(G.vertices + tuple(renombre[v] for v in H.vertices), G.edges_plus | aristas_h)


def _grafo_incidencia(G: Hypergraph) -> nx.Graph:
    # Un camino dentro de cada arista basta para la conexidad
    grafo = nx.Graph()
    grafo.add_nodes_from(G.vertices)
    for arista in G.edges_plus:
        nx.add_path(grafo, sorted(arista, key=clave_etiqueta))
    return grafo


def connected_components(G: Hypergraph) -> list[Hypergraph]:
    """Componentes conexas, ordenadas por la primera aparición de sus vértices en G."""
    posicion = {v: i for i, v in enumerate(G.vertices)}
    componentes = sorted(nx.connected_components(_grafo_incidencia(G)), key=lambda c: min(posicion[v] for v in c))
    return [restrict(G, componente, Modo.SUBSET) for componente in componentes]


def component_count(G: Hypergraph) -> int:
    return nx.number_connected_components(_grafo_incidencia(G)) if G.vertices else 0


def is_connected(G: Hypergraph) -> bool:
    return component_count(G) == 1


def quotient(G: Hypergraph, p: SetPartition) -> Hypergraph:
    """
    Contracción G/∼: un vértice por bloque (etiquetado con el primer vértice
    del bloque según el orden de G) y las imágenes π(e) de cardinal ≥ 2, sin
    multiplicidad.
    """
    p.validar(G.vertex_set)
    posicion = {v: i for i, v in enumerate(G.vertices)}
    representante = {}
    etiquetas = []
    for bloque in p.blocks:
        etiqueta = min(bloque, key=posicion.__getitem__)
        etiquetas.append(etiqueta)
        for v in bloque:
            representante[v] = etiqueta
    aristas = set()
    for arista in G.edges_plus:
        imagen = frozenset(representante[v] for v in arista)
        if len(imagen) >= 2:
            aristas.add(imagen)
    return Hypergraph(tuple(etiquetas), frozenset(aristas))


def partition_restrict(G: Hypergraph, p: SetPartition, mode: Modo) -> Hypergraph:
    """G|∼ : producto de las restricciones a cada bloque."""
    p.validar(G.vertex_set)
    aristas = frozenset().union(*(restrict(G, bloque, mode).edges_plus for bloque in p.blocks))
    return Hypergraph(G.vertices, aristas)


def enumerate_set_partitions(ground: Iterable) -> Iterator[SetPartition]:
    """
    Todas las particiones de `ground`, una vez cada una, en el orden de las
    palabras de crecimiento restringido.

    Raises:
        LimiteExcedido: Si |ground| supera HIPERGRAFOS_MAX_VERTICES.
    """
    elementos = list(ground)
    n = len(elementos)
    verificar_vertices(n)
    if n == 0:
        yield SetPartition(())
        return

    palabra = [0] * n

    def _recorrer(i: int, maximo: int):
        if i == n:
            bloques = [[] for _ in range(maximo + 1)]
            for elemento, c in zip(elementos, palabra):
                bloques[c].append(elemento)
            yield SetPartition(tuple(frozenset(b) for b in bloques))
            return
        for c in range(maximo + 2):
            palabra[i] = c
            yield from _recorrer(i + 1, max(maximo, c))

    yield from _recorrer(1, 0)


def ordered_set_partitions(ground: Iterable) -> Iterator[tuple]:
    """Particiones ordenadas: cada partición seguida de todas las permutaciones de sus bloques."""
    for particion in enumerate_set_partitions(ground):
        yield from permutations(particion.blocks)


def admissible_partitions(G: Hypergraph, mode: Modo) -> list[SetPartition]:
    """
    E_⋉[G]: particiones cuyos bloques inducen, en el modo dado, hipergrafos conexos.

    Raises:
        LimiteExcedido: Si |V(G)| supera el límite de vértices.
    """
    admisibles = [
        particion for particion in enumerate_set_partitions(G.vertices)
        if all(is_connected(restrict(G, bloque, mode)) for bloque in particion.blocks)
    ]
    logger.debug("%s particiones admisibles (%s) para %s", len(admisibles), mode, G)
    return admisibles


def gamma(G: Hypergraph) -> Hypergraph:
    """Grafo Γ(G): pares de vértices contenidos en una misma arista."""
    aristas = frozenset(frozenset(par) for e in G.edges_plus for par in combinations(e, 2))
    return Hypergraph(G.vertices, aristas)


def canonical_form(G: Hypergraph) -> CanonicalHypergraph:
    """
    Forma canónica de G (mínimo sobre reetiquetados con poda por refinamiento).

    Raises:
        LimiteExcedido: Si |V(G)| supera HIPERGRAFOS_MAX_VERTICES.
    """
    indice = {v: i for i, v in enumerate(G.vertices)}
    return forma_canonica_indices(G.n, (tuple(indice[v] for v in e) for e in G.edges_plus))


def simplex_hypergraph(n: int) -> Hypergraph:
    """T_n: n vértices 1..n y, si n ≥ 2, una única arista con todos ellos."""
    vertices = tuple(range(1, n + 1))
    aristas = frozenset({frozenset(vertices)}) if n >= 2 else frozenset()
    return Hypergraph(vertices, aristas)


def complete_graph(n: int) -> Hypergraph:
    vertices = tuple(range(1, n + 1))
    return Hypergraph(vertices, frozenset(frozenset(par) for par in combinations(vertices, 2)))


def path_graph(n: int) -> Hypergraph:
    vertices = tuple(range(1, n + 1))
    return Hypergraph(vertices, frozenset(frozenset((i, i + 1)) for i in range(1, n)))


def grade(G: Hypergraph) -> int:
    """Graduación |V(G)| - cc(G) usada en la inversión de caracteres."""
    return G.n - component_count(G)


# ---------- Catálogo persistido ----------

def obtener_hipergrafo(nombre: str) -> Hypergraph | None:
    """
    Obtiene un hipergrafo del catálogo por su nombre.

    Returns:
        Hypergraph | None: El hipergrafo o None si no existe.
    """
    try:
        return Hipergrafo.objects.get(nombre=nombre).a_hipergrafo()
    except Hipergrafo.DoesNotExist:
        return None


def guardar_hipergrafo(nombre: str, G: Hypergraph, descripcion: str = '') -> Hipergrafo:
    """
    Guarda un hipergrafo en el catálogo.

    Raises:
        ValidationError: Si el nombre está vacío o ya existe.
    """
    if not nombre:
        raise ValidationError("El campo nombre es obligatorio")
    with transaction.atomic():
        if Hipergrafo.objects.filter(nombre=nombre).exists():
            raise ValidationError(f"El hipergrafo {nombre} ya existe en el catálogo")
        datos = G.to_json()
        return Hipergrafo.objects.create(
            nombre=nombre, vertices=datos['vertices'], aristas=datos['edges'], descripcion=descripcion)

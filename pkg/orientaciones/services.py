import logging
from itertools import product
from typing import Iterable, Iterator

import networkx as nx
from django.core.exceptions import ValidationError

from hipergrafos.limites import verificar_orientacion, verificar_trabajo
from hipergrafos.services import enumerate_set_partitions, gamma
from hipergrafos.tipos import Hypergraph
from invariantes.services import chromatic

from .tipos import OrientationClass, OrientationSums, QuasiOrder

logger = logging.getLogger(__name__)


def _es_ideal(subconjunto: frozenset, orden: frozenset) -> bool:
    return all(i in subconjunto for i, j in orden if j in subconjunto)


def _es_filtro(subconjunto: frozenset, orden: frozenset) -> bool:
    return all(j in subconjunto for i, j in orden if i in subconjunto)


def _subconjuntos(elementos: list) -> Iterator[frozenset]:
    for mascara in range(1 << len(elementos)):
        yield frozenset(e for b, e in enumerate(elementos) if mascara >> b & 1)


def strict_partial_orders(k: int) -> Iterator[frozenset]:
    """
    Órdenes parciales estrictos sobre {0, ..., k-1}, cada uno una vez.

    El elemento m se agrega eligiendo un ideal D (los que quedan debajo) y un
    filtro U (los que quedan encima) del orden sobre {0, ..., m-1}, disjuntos
    y con d < u para todo d ∈ D, u ∈ U.
    """
    ordenes = [frozenset()]
    for m in range(k):
        anteriores = list(range(m))
        siguientes = []
        for orden in ordenes:
            ideales = [s for s in _subconjuntos(anteriores) if _es_ideal(s, orden)]
            filtros = [s for s in _subconjuntos(anteriores) if _es_filtro(s, orden)]
            for D in ideales:
                for U in filtros:
                    if D & U or any((d, u) not in orden for d in D for u in U):
                        continue
                    siguientes.append(orden | {(d, m) for d in D} | {(m, u) for u in U})
        ordenes = siguientes
    return iter(ordenes)


def enumerate_quasi_orders(V: Iterable) -> Iterator[QuasiOrder]:
    """
    Todos los cuasi-órdenes sobre V: particiones de V por órdenes parciales
    estrictos sobre sus bloques.

    Raises:
        LimiteExcedido: Si |V| supera HIPERGRAFOS_MAX_ORIENTACION.

    Example:
        sum(1 for _ in enumerate_quasi_orders('abc')) -> 29
    """
    elementos = list(V)
    verificar_orientacion(len(elementos))
    ordenes_por_tamano = {}
    for particion in enumerate_set_partitions(elementos):
        k = particion.cl
        if k not in ordenes_por_tamano:
            ordenes_por_tamano[k] = list(strict_partial_orders(k))
        for orden in ordenes_por_tamano[k]:
            yield QuasiOrder(particion, orden)


def enumerate_quasi_orders_raw(V: Iterable) -> Iterator[QuasiOrder]:
    """
    Enumeración independiente por fuerza bruta: todas las relaciones
    reflexivas sobre V, filtrando las transitivas. Sólo para |V| ≤ 4.
    """
    elementos = list(V)
    if len(elementos) > 4:
        raise ValidationError("La enumeración por fuerza bruta admite a lo sumo 4 elementos", code='demasiados_elementos')
    fuera_diagonal = [(x, y) for x in elementos for y in elementos if x != y]
    reflexivos = {(x, x) for x in elementos}
    for eleccion in product((False, True), repeat=len(fuera_diagonal)):
        pares = reflexivos | {par for par, elegido in zip(fuera_diagonal, eleccion) if elegido}
        if all((x, z) in pares for x, y in pares for y2, z in pares if y == y2):
            yield QuasiOrder.from_relation(elementos, pares)


def _validar_base(G: Hypergraph, q: QuasiOrder) -> None:
    if q.classes.ground != G.vertex_set:
        raise ValidationError("El cuasi-orden no está definido sobre los vértices del hipergrafo", code='conjunto_distinto')


def classify_orientation(G: Hypergraph, q: QuasiOrder) -> OrientationClass:
    """
    Clasifica q como orientación de G.

    Es acíclica si (a) en cada arista no trivial q es total con al menos dos
    clases, (b) cada x < y se une por un camino estrictamente creciente de
    vértices que comparten arista y (c) los vértices equivalentes distintos
    comparten una arista.

    Raises:
        ValidationError: Si q no está definido sobre V(G).
    """
    _validar_base(G, q)
    for arista in G.edges_plus:
        if len({q.block_index(v) for v in arista}) < 2:
            return OrientationClass(False)
        if any(not q.le(x, y) and not q.le(y, x) for x in arista for y in arista):
            return OrientationClass(False)

    vecinos = {v: set() for v in G.vertices}
    for arista in G.edges_plus:
        for x in arista:
            vecinos[x] |= arista - {x}

    for x in G.vertices:
        for y in G.vertices:
            if x != y and q.equivalent(x, y) and y not in vecinos[x]:
                return OrientationClass(False)

    crecientes = nx.DiGraph()
    crecientes.add_nodes_from(G.vertices)
    crecientes.add_edges_from((x, y) for x in G.vertices for y in vecinos[x] if q.lt(x, y))
    for x in G.vertices:
        alcanzables = nx.descendants(crecientes, x)
        if any(q.lt(x, y) and y not in alcanzables for y in G.vertices):
            return OrientationClass(False)

    total = True
    un_maximo = True
    for arista in G.edges_plus:
        clases = {}
        for v in arista:
            clases.setdefault(q.block_index(v), []).append(v)
        if any(len(vs) > 1 for vs in clases.values()):
            total = False
        maxima = next(i for i in clases if all(i == j or (j, i) in q.order for j in clases))
        if len(clases[maxima]) > 1:
            un_maximo = False
    return OrientationClass(True, total, un_maximo)


def acyclic_orientations(G: Hypergraph) -> Iterator[tuple[QuasiOrder, OrientationClass]]:
    for q in enumerate_quasi_orders(G.vertices):
        clase = classify_orientation(G, q)
        if clase.is_acyclic:
            yield q, clase


def orientation_sums(G: Hypergraph) -> OrientationSums:
    """
    Sumas sobre las orientaciones acíclicas de G:
    Σ (-1)^cl, número de totales y Σ (-1)^cl sobre las 1-max.
    """
    signed_all = total_count = signed_one_max = 0
    for q, clase in acyclic_orientations(G):
        signo = (-1) ** q.cl
        signed_all += signo
        if clase.is_total:
            total_count += 1
        if clase.is_one_max:
            signed_one_max += signo
    logger.debug("Orientaciones de %s: %s, %s, %s", G, signed_all, total_count, signed_one_max)
    return OrientationSums(signed_all, total_count, signed_one_max)


def stanley_count(G: Hypergraph) -> int:
    """
    Orientaciones acíclicas clásicas del grafo Γ(G): se orienta cada arista
    y se descartan las que tienen un ciclo dirigido.

    Raises:
        LimiteExcedido: Si 2^|E(Γ(G))| supera HIPERGRAFOS_LIMITE_TRABAJO.
    """
    aristas = [tuple(a) for a in gamma(G).edges_plus]
    verificar_trabajo('orientaciones de Γ(G)', 2 ** len(aristas))
    cuenta = 0
    for sentidos in product((False, True), repeat=len(aristas)):
        dirigido = nx.DiGraph()
        dirigido.add_nodes_from(G.vertices)
        dirigido.add_edges_from((b, a) if invertir else (a, b) for (a, b), invertir in zip(aristas, sentidos))
        if nx.is_directed_acyclic_graph(dirigido):
            cuenta += 1
    return cuenta


def check_orientation_identities(G: Hypergraph) -> dict:
    """
    Compara las sumas de orientaciones con P_⊂(G)(-1), (-1)^|V|·P_∩(G)(-1),
    P_{⊂,∩}(G)(-1) y el conteo de Stanley.
    """
    sumas = orientation_sums(G)
    esperado = {
        'signed_all': chromatic(G, 'subset').evaluate(-1),
        'total_count': (-1) ** G.n * chromatic(G, 'cap').evaluate(-1),
        'signed_one_max': chromatic(G, 'mixed').evaluate(-1),
    }
    obtenido = sumas.to_json()
    stanley = stanley_count(G)
    holds = all(obtenido[k] == v for k, v in esperado.items()) and stanley == sumas.total_count
    return {
        'holds': holds,
        'sums': obtenido,
        'expected': {k: str(v) for k, v in esperado.items()},
        'stanley': stanley,
    }

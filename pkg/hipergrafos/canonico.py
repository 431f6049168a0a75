"""
Etiquetado canónico por fuerza bruta con poda.

Los vértices se agrupan en celdas por refinamiento de colores (tamaños de las
aristas incidentes y colores de los vecinos). Dentro de cada celda se prueban
todas las disposiciones, salvo entre vértices intercambiables (aquellos cuya
transposición es un automorfismo), y se toma la codificación mínima.
"""
from functools import lru_cache
from itertools import product
from typing import Callable, Iterable, Iterator

from sympy.utilities.iterables import multiset_permutations

from .limites import verificar_vertices
from .tipos import CanonicalHypergraph


def _rangos(firmas: list) -> list[int]:
    distintas = sorted(set(firmas))
    posicion = {firma: i for i, firma in enumerate(distintas)}
    return [posicion[firma] for firma in firmas]


def refinar_colores(n: int, instancias: list[dict]) -> list[int]:
    """
    Refinamiento de colores tipo Weisfeiler-Leman de dimensión 1.

    Args:
        n (int): Número de vértices 0..n-1.
        instancias (list[dict]): Cada arista como {vértice: multiplicidad}.

    Returns:
        list[int]: Color de cada vértice; los colores son invariantes por isomorfismo.
    """
    incidentes = [[e for e in instancias if v in e] for v in range(n)]
    colores = _rangos([
        tuple(sorted((e[v], sum(e.values()), len(e)) for e in incidentes[v]))
        for v in range(n)])
    while True:
        firmas = []
        for v in range(n):
            vecindad = sorted(
                (e[v], sum(e.values()), tuple(sorted((colores[u], m) for u, m in e.items() if u != v)))
                for e in incidentes[v])
            firmas.append((colores[v], tuple(vecindad)))
        nuevos = _rangos(firmas)
        if len(set(nuevos)) == len(set(colores)):
            return nuevos
        colores = nuevos


def clases_intercambiables(colores: list[int], intercambiables: Callable[[int, int], bool]) -> list[int]:
    """Representante de la clase de cada vértice (relación de equivalencia)."""
    clases = []
    representantes = []
    for v in range(len(colores)):
        for r in representantes:
            if colores[r] == colores[v] and intercambiables(r, v):
                clases.append(r)
                break
        else:
            representantes.append(v)
            clases.append(v)
    return clases


def etiquetados_candidatos(colores: list[int], clases: list[int]) -> Iterator[list[int]]:
    """
    Recorre los reetiquetados compatibles con las celdas de color.

    Yields:
        list[int]: sigma con sigma[v] = nueva etiqueta de v.
    """
    n = len(colores)
    celdas = {}
    for v in range(n):
        celdas.setdefault(colores[v], []).append(v)

    por_celda = []
    for color in sorted(celdas):
        miembros = celdas[color]
        por_clase = {}
        for v in miembros:
            por_clase.setdefault(clases[v], []).append(v)
        identificadores = sorted(clases[v] for v in miembros)
        por_celda.append((por_clase, list(multiset_permutations(identificadores))))

    for eleccion in product(*(arreglos for _, arreglos in por_celda)):
        sigma = [0] * n
        posicion = 0
        for (por_clase, _), arreglo in zip(por_celda, eleccion):
            pendientes = {c: iter(vs) for c, vs in por_clase.items()}
            for c in arreglo:
                sigma[next(pendientes[c])] = posicion
                posicion += 1
        yield sigma


def _transposicion_preserva(aristas: frozenset, u: int, v: int) -> bool:
    for arista in aristas:
        if (u in arista) != (v in arista):
            imagen = frozenset(v if x == u else u if x == v else x for x in arista)
            if imagen not in aristas:
                return False
    return True


@lru_cache(maxsize=200_000)
def _canonizar(n: int, aristas: frozenset) -> CanonicalHypergraph:
    lista = [tuple(sorted(e)) for e in aristas]
    colores = refinar_colores(n, [{v: 1 for v in e} for e in lista])
    clases = clases_intercambiables(colores, lambda u, v: _transposicion_preserva(aristas, u, v))

    mejor = None
    for sigma in etiquetados_candidatos(colores, clases):
        codigo = tuple(sorted(tuple(sorted(sigma[v] for v in e)) for e in lista))
        if mejor is None or codigo < mejor:
            mejor = codigo
    return CanonicalHypergraph(n, mejor or ())


def forma_canonica_indices(n: int, aristas: Iterable[Iterable[int]]) -> CanonicalHypergraph:
    """Forma canónica de un hipergrafo dado sobre los índices 0..n-1."""
    verificar_vertices(n)
    return _canonizar(n, frozenset(frozenset(e) for e in aristas))

"""
Tipos de valor del núcleo: hipergrafos, particiones de conjuntos y formas canónicas.

Todos los valores son inmutables (dataclasses congeladas) y pueden compartirse
entre hilos sin sincronización.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from django.core.exceptions import ValidationError
from django.db import models


class Modo(models.TextChoices):
    """Modo de restricción de un hipergrafo a un subconjunto de vértices."""
    SUBSET = 'subset', 'Inclusión (⊂)'
    CAP = 'cap', 'Intersección (∩)'


def clave_etiqueta(etiqueta) -> tuple:
    """Orden total entre etiquetas mixtas (enteros antes que cadenas)."""
    if isinstance(etiqueta, int):
        return (0, etiqueta, '')
    return (1, 0, str(etiqueta))


# Representa un hipergrafo con aristas triviales implícitas
@dataclass(frozen=True)
class Hypergraph:
    """
    Hipergrafo finito cuyas aristas triviales (∅ y los singletons) existen
    siempre y nunca se almacenan.

    Attributes:
        vertices (tuple): Etiquetas distintas de los vértices, en orden.
        edges_plus (frozenset): Aristas no triviales, cada una un frozenset
            de cardinal ≥ 2 contenido en los vértices.

    Raises:
        ValidationError: Si hay vértices repetidos o aristas inválidas.
    """

    vertices: tuple
    edges_plus: frozenset = frozenset()

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValidationError("Los vértices del hipergrafo deben ser distintos", code='vertices_repetidos')
        conjunto = set(self.vertices)
        for arista in self.edges_plus:
            if len(arista) < 2:
                raise ValidationError(
                    f"La arista {sorted(arista, key=clave_etiqueta)} tiene menos de dos vértices",
                    code='arista_trivial')
            if not arista <= conjunto:
                raise ValidationError(
                    f"La arista {sorted(arista, key=clave_etiqueta)} no está contenida en los vértices",
                    code='arista_fuera')

    @cached_property
    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        """Número de aristas no triviales."""
        return len(self.edges_plus)

    def aristas_ordenadas(self) -> list[list]:
        """Aristas como listas ordenadas, en orden determinista."""
        return sorted(
            (sorted(arista, key=clave_etiqueta) for arista in self.edges_plus),
            key=lambda arista: (len(arista), [clave_etiqueta(v) for v in arista]))

    def to_json(self) -> dict:
        return {'vertices': list(self.vertices), 'edges': self.aristas_ordenadas()}

    def __str__(self):
        aristas = ', '.join('{' + ','.join(str(v) for v in a) + '}' for a in self.aristas_ordenadas())
        return f"H(V={list(self.vertices)}, E+=[{aristas}])"


@dataclass(frozen=True)
class SetPartition:
    """
    Partición de un conjunto finito en bloques no vacíos y disjuntos.

    Attributes:
        blocks (tuple[frozenset, ...]): Bloques en orden de aparición.
    """

    blocks: tuple

    @cached_property
    def ground(self) -> frozenset:
        return frozenset().union(*self.blocks)

    @property
    def cl(self) -> int:
        """Número de clases."""
        return len(self.blocks)

    def bloque_de(self) -> dict:
        """Asocia cada elemento al índice de su bloque."""
        return {x: i for i, bloque in enumerate(self.blocks) for x in bloque}

    def validar(self, ground) -> None:
        """
        Verifica que la partición cubra exactamente `ground` con bloques
        no vacíos y disjuntos.

        Raises:
            ValidationError: code='particion_invalida'.
        """
        vistos = set()
        for bloque in self.blocks:
            if not bloque:
                raise ValidationError("La partición tiene un bloque vacío", code='particion_invalida')
            if vistos & bloque:
                raise ValidationError("Los bloques de la partición no son disjuntos", code='particion_invalida')
            vistos |= bloque
        if vistos != set(ground):
            raise ValidationError("La partición no cubre el conjunto de vértices", code='particion_invalida')

    def to_json(self) -> list:
        return [sorted(bloque, key=clave_etiqueta) for bloque in self.blocks]


# Clase de isomorfismo de un hipergrafo: vértices 0..n-1 en el etiquetado canónico
@dataclass(frozen=True)
class CanonicalHypergraph:
    """
    Forma canónica de un hipergrafo, utilizable como clave de diccionario.
    Dos hipergrafos son isomorfos si y sólo si sus formas canónicas son iguales.

    Attributes:
        n (int): Número de vértices (etiquetados 0..n-1).
        edges (tuple[tuple[int, ...], ...]): Aristas no triviales ordenadas.
    """

    n: int
    edges: tuple = ()

    @property
    def is_empty(self) -> bool:
        return self.n == 0

    @property
    def vertex_count(self) -> int:
        return self.n

    def sort_key(self) -> tuple:
        return (self.n, self.edges)

    def as_hypergraph(self) -> Hypergraph:
        return Hypergraph(tuple(range(self.n)), frozenset(frozenset(e) for e in self.edges))

    def producto(self, otro: CanonicalHypergraph) -> CanonicalHypergraph:
        """Unión disjunta canonizada (producto del álgebra)."""
        from .canonico import forma_canonica_indices

        desplazadas = tuple(tuple(v + self.n for v in e) for e in otro.edges)
        return forma_canonica_indices(self.n + otro.n, frozenset(self.edges + desplazadas))

    def as_bytes(self) -> bytes:
        return repr(self.sort_key()).encode('ascii')

    def to_json(self) -> dict:
        return {'vertices': list(range(self.n)), 'edges': [list(e) for e in self.edges]}

    def __str__(self):
        if self.n == 0:
            return "1"
        if not self.edges:
            return f"T_1^{self.n}" if self.n != 1 else "T_1"
        return f"G{self.n}{[list(e) for e in self.edges]}"

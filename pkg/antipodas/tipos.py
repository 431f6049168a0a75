from __future__ import annotations

from dataclasses import dataclass

import networkx as nx
from django.core.exceptions import ValidationError

from hipergrafos.tipos import SetPartition


@dataclass(frozen=True)
class EdgeAssignment:
    """
    Asignación θ de un bloque de ∼ a cada arista no trivial, con e ∩ θ(e) ≠ ∅.

    Attributes:
        partition (SetPartition): La partición ∼.
        theta (tuple[tuple[frozenset, int], ...]): Pares (arista, índice de bloque).
    """

    partition: SetPartition
    theta: tuple

    def __post_init__(self):
        for arista, indice in self.theta:
            if not 0 <= indice < self.partition.cl:
                raise ValidationError("θ asigna un bloque inexistente", code='asignacion_invalida')
            if not arista & self.partition.blocks[indice]:
                raise ValidationError("θ(e) debe cortar a la arista e", code='asignacion_invalida')

    def restricted_edges(self) -> frozenset:
        """Aristas no triviales de G|_θ∼: e ∩ θ(e) con al menos dos vértices."""
        return frozenset(
            arista & self.partition.blocks[indice] for arista, indice in self.theta
            if len(arista & self.partition.blocks[indice]) >= 2)

    def block_graph(self) -> OrientedBlockGraph:
        """G/_θ∼: un arco π -> θ(e) por cada arista e y bloque π ≠ θ(e) que la corta."""
        arcos = set()
        for arista, destino in self.theta:
            for origen, bloque in enumerate(self.partition.blocks):
                if origen != destino and bloque & arista:
                    arcos.add((origen, destino))
        return OrientedBlockGraph(self.partition.cl, frozenset(arcos))


@dataclass(frozen=True)
class OrientedBlockGraph:
    """
    Grafo dirigido sobre los bloques 0..nodes-1 de una partición.

    Attributes:
        nodes (int): Número de bloques.
        arcs (frozenset[tuple[int, int]]): Arcos (origen, destino).
    """

    nodes: int
    arcs: frozenset = frozenset()

    def __post_init__(self):
        if any(a == b for a, b in self.arcs):
            raise ValidationError("El grafo de bloques no admite lazos", code='lazo')

    def as_digraph(self) -> nx.DiGraph:
        grafo = nx.DiGraph()
        grafo.add_nodes_from(range(self.nodes))
        grafo.add_edges_from(self.arcs)
        return grafo

    def is_acyclic(self) -> bool:
        return nx.is_directed_acyclic_graph(self.as_digraph())

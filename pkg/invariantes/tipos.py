from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from django.db import models

from hipergrafos.tipos import Modo


class ChromaticVariant(models.TextChoices):
    """Condición de coloreo sobre cada arista no trivial."""
    SUBSET = 'subset', 'No monocromática (⊂)'
    CAP = 'cap', 'Inyectiva (∩)'
    MIXED = 'mixed', 'Máximo alcanzado una sola vez (⊂,∩)'

    @property
    def modo(self) -> Modo:
        """Modo de restricción asociado; la variante mixta no tiene uno."""
        return Modo(self.value)


# Tabla N_G(i, j) de subhipergrafos generadores
@dataclass
class SpanningCountTable:
    """
    Número de subconjuntos F ⊆ E^+(G) tales que (V(G), F) tiene i componentes
    conexas y |F| = j.

    Attributes:
        vertices (int): |V(G)|.
        aristas (int): |E^+(G)|.
        conteos (Counter): (i, j) -> N_G(i, j); las entradas ausentes valen 0.
    """

    vertices: int
    aristas: int
    conteos: Counter = field(default_factory=Counter)

    def get(self, i: int, j: int) -> int:
        return self.conteos.get((i, j), 0)

    @property
    def total(self) -> int:
        return sum(self.conteos.values())

    def suma_alternada(self, i: int) -> int:
        """Σ_j (-1)^j N_G(i, j)."""
        return sum((-1) ** j * self.get(i, j) for j in range(self.aristas + 1))

    def to_json(self) -> list[dict]:
        return [{'i': i, 'j': j, 'count': c} for (i, j), c in sorted(self.conteos.items())]

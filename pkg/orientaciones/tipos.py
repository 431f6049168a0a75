"""
Cuasi-órdenes sobre los vértices de un hipergrafo y su clasificación como
orientaciones.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from django.core.exceptions import ValidationError

from hipergrafos.tipos import SetPartition, clave_etiqueta


# Relación reflexiva y transitiva: partición en clases más un orden estricto entre ellas
@dataclass(frozen=True)
class QuasiOrder:
    """
    Cuasi-orden x ≤ y ⟺ bloque(x) ⪯ bloque(y).

    Attributes:
        classes (SetPartition): Clases de equivalencia (x ≤ y y y ≤ x).
        order (frozenset[tuple[int, int]]): Pares (i, j) de índices de
            bloques con i < j; irreflexivo y transitivamente cerrado.

    Raises:
        ValidationError: Si el orden entre bloques no es un orden estricto.
    """

    classes: SetPartition
    order: frozenset = frozenset()

    def __post_init__(self):
        k = self.classes.cl
        for i, j in self.order:
            if i == j or not (0 <= i < k and 0 <= j < k):
                raise ValidationError("El orden entre clases no es irreflexivo", code='orden_invalido')
            if (j, i) in self.order:
                raise ValidationError("El orden entre clases no es antisimétrico", code='orden_invalido')
            for a, b in self.order:
                if a == j and (i, b) not in self.order:
                    raise ValidationError("El orden entre clases no es transitivo", code='orden_invalido')

    @cached_property
    def _bloque(self) -> dict:
        return self.classes.bloque_de()

    def block_index(self, x) -> int:
        return self._bloque[x]

    @property
    def cl(self) -> int:
        return self.classes.cl

    def le(self, x, y) -> bool:
        i, j = self._bloque[x], self._bloque[y]
        return i == j or (i, j) in self.order

    def lt(self, x, y) -> bool:
        return (self._bloque[x], self._bloque[y]) in self.order

    def equivalent(self, x, y) -> bool:
        return self._bloque[x] == self._bloque[y]

    def relation(self) -> frozenset:
        """Todos los pares (x, y) con x ≤ y, incluidos los reflexivos."""
        elementos = list(self.classes.ground)
        return frozenset((x, y) for x in elementos for y in elementos if self.le(x, y))

    @classmethod
    def from_relation(cls, elementos, pares) -> QuasiOrder:
        """
        Construye el cuasi-orden de una relación reflexiva y transitiva dada
        como conjunto de pares (x, y) con x ≤ y.
        """
        pares = set(pares)
        clases = []
        for x in elementos:
            for clase in clases:
                y = next(iter(clase))
                if (x, y) in pares and (y, x) in pares:
                    clase.add(x)
                    break
            else:
                clases.append({x})
        bloques = tuple(frozenset(c) for c in clases)
        orden = frozenset(
            (i, j) for i, a in enumerate(bloques) for j, b in enumerate(bloques)
            if i != j and (next(iter(a)), next(iter(b))) in pares)
        return cls(SetPartition(bloques), orden)

    def to_json(self) -> dict:
        return {
            'classes': self.classes.to_json(),
            'order': sorted([i, j] for i, j in self.order),
        }

    def __str__(self):
        nombres = ['{' + ','.join(str(v) for v in sorted(b, key=clave_etiqueta)) + '}' for b in self.classes.blocks]
        relaciones = ', '.join(f"{nombres[i]}<{nombres[j]}" for i, j in sorted(self.order))
        return f"[{' '.join(nombres)}] {relaciones}".rstrip()


@dataclass(frozen=True)
class OrientationClass:
    """
    Clasificación de un cuasi-orden como orientación de un hipergrafo.

    Attributes:
        is_acyclic (bool): Cumple las tres condiciones de orientación acíclica.
        is_total (bool): Acíclica y total en cada arista.
        is_one_max (bool): Acíclica y con clase máxima unitaria en cada arista.
    """

    is_acyclic: bool
    is_total: bool = False
    is_one_max: bool = False

    def __post_init__(self):
        if (self.is_total or self.is_one_max) and not self.is_acyclic:
            raise ValidationError("Una orientación total o 1-max debe ser acíclica", code='clasificacion_invalida')

    def to_json(self) -> dict:
        return {'acyclic': self.is_acyclic, 'total': self.is_total, 'one_max': self.is_one_max}


@dataclass(frozen=True)
class OrientationSums:
    """Sumas de orientaciones comparables con los polinomios cromáticos en -1."""

    signed_all: int
    total_count: int
    signed_one_max: int

    def to_json(self) -> dict:
        return {
            'signed_all': self.signed_all,
            'total_count': self.total_count,
            'signed_one_max': self.signed_one_max,
        }

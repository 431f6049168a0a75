from __future__ import annotations

from dataclasses import dataclass, field

from django.core.exceptions import ValidationError

from algebra.tipos import LinearCombination
from hipergrafos.tipos import Modo

SIMBOLOS = {Modo.SUBSET: '⊂', Modo.CAP: '∩'}


@dataclass(frozen=True)
class CoproductMode:
    """
    Par de modos (izquierdo, derecho) del coproducto Δ^(⋉,⋊).

    Attributes:
        left (Modo): Restricción aplicada al subconjunto I.
        right (Modo): Restricción aplicada al complemento V(G) \\ I.
    """

    left: Modo
    right: Modo

    def __post_init__(self):
        try:
            object.__setattr__(self, 'left', Modo(self.left))
            object.__setattr__(self, 'right', Modo(self.right))
        except ValueError as e:
            raise ValidationError(f"Modo de coproducto inválido: {str(e)}", code='modo_invalido')

    @classmethod
    def parse(cls, texto: str) -> CoproductMode:
        """Lee 'subset,cap' o un único modo 'cap' (que se duplica)."""
        partes = [p.strip() for p in texto.split(',') if p.strip()]
        if len(partes) == 1:
            partes = partes * 2
        if len(partes) != 2:
            raise ValidationError(f"Modo de coproducto inválido: {texto}", code='modo_invalido')
        return cls(*partes)

    @classmethod
    def coerce(cls, valor) -> CoproductMode:
        """Acepta un CoproductMode, un par (izquierdo, derecho) o un texto como 'subset,cap'."""
        if isinstance(valor, CoproductMode):
            return valor
        if isinstance(valor, str):
            return cls.parse(valor)
        return cls(*valor)

    @property
    def is_equal(self) -> bool:
        return self.left == self.right

    def swapped(self) -> CoproductMode:
        return CoproductMode(self.right, self.left)

    def __str__(self):
        return f"({SIMBOLOS[self.left]},{SIMBOLOS[self.right]})"


# Resultado de comprobar una identidad de biálgebra
@dataclass
class AxiomReport:
    """
    Attributes:
        axiom (str): Identificador del axioma.
        holds (bool): Si ambos lados coinciden exactamente.
        element (dict): Elemento sobre el que se comprobó (JSON).
        lhs, rhs (LinearCombination | None): Lados comparados, sólo si difieren.
    """

    axiom: str
    holds: bool
    element: dict = field(default_factory=dict)
    lhs: LinearCombination | None = None
    rhs: LinearCombination | None = None

    def __bool__(self):
        return self.holds

    def to_json(self) -> dict:
        datos = {'axiom': self.axiom, 'holds': self.holds, 'element': self.element}
        if not self.holds:
            datos['lhs'] = self.lhs.to_json() if self.lhs is not None else None
            datos['rhs'] = self.rhs.to_json() if self.rhs is not None else None
        return datos

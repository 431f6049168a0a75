from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from django.core.exceptions import ValidationError


@dataclass(frozen=True)
class OpcionesVerificacion:
    """
    Parámetros de una corrida de verificación.

    Attributes:
        max_n (int): Vértices de la base exhaustiva (a lo sumo 4).
        count (int): Casos aleatorios adicionales.
        seed (int): Semilla de random.Random.
        workers (int): Hilos para evaluar los casos.
    """

    max_n: int = 4
    count: int = 200
    seed: int = 0
    workers: int = 1

    def __post_init__(self):
        if not 0 <= self.max_n <= 4:
            raise ValidationError("max_n debe estar entre 0 y 4", code='opcion_invalida')
        if self.count < 0:
            raise ValidationError("count no puede ser negativo", code='opcion_invalida')
        if self.workers < 1:
            raise ValidationError("Se necesita al menos un hilo", code='opcion_invalida')


@dataclass(frozen=True)
class Caso:
    """Una comprobación aislada: devuelve bool, AxiomReport o un dict con 'holds'."""

    descripcion: str
    elemento: dict
    comprobar: Callable


# Resultado agregado de una suite
@dataclass
class SuiteReport:
    suite: str
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {'suite': self.suite, 'cases': self.cases, 'passed': self.passed, 'failures': self.failures}

    def __str__(self):
        estado = 'OK' if self.passed else f'FALLA ({len(self.failures)})'
        return f"{self.suite}: {self.cases} casos, {estado}"

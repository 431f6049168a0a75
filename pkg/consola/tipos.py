from __future__ import annotations

from dataclasses import dataclass, field

from django.core.exceptions import ValidationError

FORMATOS = ('text', 'json')

# Códigos de salida de la consola
EXITO = 0
VERIFICACION_FALLIDA = 1
ERROR_DE_ENTRADA = 2
LIMITE_EXCEDIDO = 3


@dataclass(frozen=True)
class JobSpec:
    """
    Trabajo de consola: comando, entrada y opciones.

    Attributes:
        command (str): chromatic, coproduct, antipode, orientations,
            character, eulerian, mc o verify.
        entrada (str | None): Ruta a un JSON, literal JSON o 'catalogo:<nombre>'.
        opciones (dict): Opciones propias del comando.
        formato (str): 'text' o 'json'.
        max_vertices (int | None): Tope de vértices sólo para este trabajo.
        seed (int | None): Semilla; por defecto HIPERGRAFOS_SEMILLA.
        guardar (bool): Registra el resultado en ResultadoCalculo.
    """

    command: str
    entrada: str | None = None
    opciones: dict = field(default_factory=dict)
    formato: str = 'text'
    max_vertices: int | None = None
    seed: int | None = None
    guardar: bool = False

    def __post_init__(self):
        if self.formato not in FORMATOS:
            raise ValidationError(f"Formato desconocido: {self.formato}", code='formato_invalido')
        if self.max_vertices is not None and self.max_vertices < 1:
            raise ValidationError("--max-vertices debe ser positivo", code='opcion_invalida')


@dataclass
class Salida:
    """Resultado de un comando: datos para JSON, texto legible y contraejemplo si lo hubo."""

    datos: dict
    texto: str
    contraejemplo: dict | None = None

import logging
from contextlib import contextmanager
from contextvars import ContextVar
from functools import lru_cache, wraps

from django.conf import settings

from .exceptions import LimiteExcedido

logger = logging.getLogger(__name__)

# Tope de vértices de un trabajo de consola; None usa los settings
_tope_del_trabajo: ContextVar[int | None] = ContextVar('tope_del_trabajo', default=None)


def _verificar(recurso: str, valor: int, limite: int) -> None:
    if valor > limite:
        logger.warning("Se rechaza %s=%s (límite %s)", recurso, valor, limite)
        raise LimiteExcedido(recurso, valor, limite)


def _tope(limite: int) -> int:
    tope = _tope_del_trabajo.get()
    return limite if tope is None else tope


@contextmanager
def tope_de_vertices(n: int | None):
    """
    Fija el tope de vértices de hipergrafos y multicomplejos dentro del
    bloque, en lugar de HIPERGRAFOS_MAX_VERTICES y MULTICOMPLEJOS_MAX_VERTICES.
    Con None no cambia nada.

    El valor vive en el contexto actual: los hilos que lo necesiten deben
    ejecutarse con contextvars.copy_context().
    """
    if n is None:
        yield
        return
    marca = _tope_del_trabajo.set(n)
    try:
        yield
    finally:
        _tope_del_trabajo.reset(marca)


def verificar_vertices(n: int) -> None:
    """Tope de vértices para formas canónicas y enumeración de particiones."""
    _verificar('vértices', n, _tope(settings.HIPERGRAFOS_MAX_VERTICES))


def verificar_orientacion(n: int) -> None:
    _verificar('vértices en cuasi-órdenes', n, settings.HIPERGRAFOS_MAX_ORIENTACION)


def verificar_trabajo(recurso: str, cantidad: int) -> None:
    """Cota de trabajo para enumeraciones exhaustivas (N^|V|, 2^|E+|)."""
    _verificar(recurso, cantidad, settings.HIPERGRAFOS_LIMITE_TRABAJO)


def verificar_multicomplejo(vertices: int, instancias: int) -> None:
    _verificar('vértices de multicomplejo', vertices, _tope(settings.MULTICOMPLEJOS_MAX_VERTICES))
    _verificar('instancias de multicomplejo', instancias, settings.MULTICOMPLEJOS_MAX_INSTANCIAS)


def _tope_de_forma(forma) -> None:
    verificar_vertices(forma.n)


def tope_de_multicomplejo(forma) -> None:
    verificar_multicomplejo(forma.n, len(forma.instances))


def memoria_con_tope(maxsize: int, verificar=_tope_de_forma):
    """
    lru_cache para funciones cuyo primer argumento es una forma canónica.
    `verificar(forma)` corre antes de cada consulta a la memoria, también
    cuando el resultado ya está guardado.

    Example:
        @memoria_con_tope(maxsize=20_000)
        def _antipoda_base(forma, modo): ...
    """
    def decorador(funcion):
        memorizada = lru_cache(maxsize=maxsize)(funcion)

        @wraps(funcion)
        def envoltura(forma, *args, **kwargs):
            verificar(forma)
            return memorizada(forma, *args, **kwargs)

        envoltura.cache_info = memorizada.cache_info
        envoltura.cache_clear = memorizada.cache_clear
        return envoltura

    return decorador

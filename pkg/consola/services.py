"""
Consola: lectura de hipergrafos y multicomplejos en JSON y despacho de los
trabajos de los comandos de manage.py.
"""
import json
import logging
from pathlib import Path

from django.conf import settings
from django.core.exceptions import ValidationError

from algebra.services import formatear_hilbert
from antipodas.services import METODOS, antipode
from coproductos.services import coproduct_pair, delta_contract
from coproductos.tipos import CoproductMode
from hipergrafos.exceptions import LimiteExcedido
from hipergrafos.limites import tope_de_vertices
from hipergrafos.services import obtener_hipergrafo
from hipergrafos.tipos import Hypergraph, Modo, SetPartition
from invariantes.services import chromatic, chromatic_hilbert, eulerian_idempotent, lambda_character
from invariantes.tipos import ChromaticVariant
from multicomplejos.services import (
    MC_AXIOMAS, canonical_mc, kappa, mc_antipode, mc_check_axioms, mc_chromatic, mc_coproduct,
    mc_delta_contract, mc_eulerian, mc_takeuchi_antipode, obtener_multicomplejo, verify_mc_antipode,
)
from multicomplejos.tipos import MultiComplex
from orientaciones.services import acyclic_orientations, classify_orientation, orientation_sums
from orientaciones.tipos import QuasiOrder
from verificacion.services import SUITES, run_suite
from verificacion.tipos import OpcionesVerificacion

from .models import ResultadoCalculo
from .tipos import (
    ERROR_DE_ENTRADA, EXITO, LIMITE_EXCEDIDO, VERIFICACION_FALLIDA, JobSpec, Salida,
)

logger = logging.getLogger(__name__)

CATALOGO = 'catalogo:'
ACCIONES_ORIENTACION = ('list', 'classify', 'sums')
ACCIONES_MC = ('canonical', 'coproduct', 'contract', 'kappa', 'chromatic', 'antipode', 'takeuchi', 'eulerian', 'check')


# ---------- Lectura de entradas ----------

def _cargar_json(texto: str):
    try:
        return json.loads(texto)
    except json.JSONDecodeError as e:
        raise ValidationError(f"JSON inválido: {e.msg} (línea {e.lineno})", code='json_invalido')


def _leer_texto(entrada: str | None) -> str:
    """Un literal JSON se usa tal cual; cualquier otra cosa se lee como ruta UTF-8."""
    if not entrada:
        raise ValidationError("Falta la entrada (archivo, literal JSON o catalogo:<nombre>)", code='entrada_requerida')
    if entrada.lstrip().startswith(('{', '[')):
        return entrada
    try:
        return Path(entrada).read_text(encoding='utf-8')
    except OSError as e:
        raise ValidationError(f"No se pudo leer {entrada}: {e.strerror}", code='archivo')


def _es_etiqueta(valor) -> bool:
    return isinstance(valor, (str, int)) and not isinstance(valor, bool)


def parse_hypergraph(texto: str) -> Hypergraph:
    """
    Lee {"vertices": [etiquetas], "edges": [[etiquetas], ...]}.

    Las aristas con menos de dos vértices existen siempre y se ignoran. Una
    arista que repite un vértice es un error: las aristas son conjuntos.

    Raises:
        ValidationError: JSON inválido, esquema (code='esquema'), arista con
            vértices repetidos (code='arista_repetida') o fuera de los vértices.

    Example:
        parse_hypergraph('{"vertices":["a","b","c"],"edges":[["a","b","c"]]}') -> T_3
    """
    datos = _cargar_json(texto)
    if not isinstance(datos, dict) or not isinstance(datos.get('vertices'), list):
        raise ValidationError("Se esperaba un objeto con la lista 'vertices'", code='esquema')
    aristas = datos.get('edges', [])
    if not isinstance(aristas, list):
        raise ValidationError("'edges' debe ser una lista de aristas", code='esquema')
    if not all(_es_etiqueta(v) for v in datos['vertices']):
        raise ValidationError("Las etiquetas de vértice deben ser textos o enteros", code='esquema')

    no_triviales = set()
    for arista in aristas:
        if not isinstance(arista, list) or not all(_es_etiqueta(v) for v in arista):
            raise ValidationError(f"Arista mal formada: {arista}", code='esquema')
        if len(set(arista)) != len(arista):
            raise ValidationError(
                f"La arista {arista} repite un vértice; las aristas de un hipergrafo son conjuntos",
                code='arista_repetida')
        if len(arista) >= 2:
            no_triviales.add(frozenset(arista))
    return Hypergraph(tuple(datos['vertices']), frozenset(no_triviales))


def parse_multicomplex(texto: str) -> MultiComplex:
    """
    Lee {"vertices", "edges": [{"id", "multiset"}], "order": [[menor, mayor]]}
    y comprueba los axiomas del orden al cargar.
    """
    return MultiComplex.from_json(_cargar_json(texto))


def _desde_catalogo(entrada: str, obtener, tipo: str):
    nombre = entrada[len(CATALOGO):].strip()
    valor = obtener(nombre)
    if valor is None:
        raise ValidationError(f"No existe el {tipo} '{nombre}' en el catálogo", code='no_encontrado')
    return valor


def cargar_hipergrafo(entrada: str | None) -> Hypergraph:
    if entrada and entrada.startswith(CATALOGO):
        return _desde_catalogo(entrada, obtener_hipergrafo, 'hipergrafo')
    return parse_hypergraph(_leer_texto(entrada))


def cargar_multicomplejo(entrada: str | None) -> MultiComplex:
    if entrada and entrada.startswith(CATALOGO):
        return _desde_catalogo(entrada, obtener_multicomplejo, 'multicomplejo')
    return parse_multicomplex(_leer_texto(entrada))


def _opcion(job: JobSpec, nombre: str, validas, defecto):
    valor = job.opciones.get(nombre)
    if valor is None:
        return defecto
    if valor not in validas:
        raise ValidationError(
            f"Valor inválido para {nombre}: {valor} (se admite {', '.join(map(str, validas))})", code='opcion_invalida')
    return valor


def _salida_combinacion(lc, **datos) -> Salida:
    return Salida({**datos, 'terms': lc.to_json()}, str(lc))


# ---------- Comandos ----------

VARIANTES = tuple(v.value for v in ChromaticVariant)
MODOS = tuple(m.value for m in Modo)


def _chromatic(job: JobSpec) -> Salida:
    G = cargar_hipergrafo(job.entrada)
    variante = _opcion(job, 'variant', VARIANTES, 'subset')
    base = _opcion(job, 'basis', ('monomial', 'hilbert'), 'monomial')
    p = chromatic(G, variante)
    datos = {'variant': variante, 'polynomial': p.to_json()}
    texto = str(p)
    if base == 'hilbert':
        coeficientes = chromatic_hilbert(G, variante)
        datos['hilbert'] = [str(c) for c in coeficientes]
        texto = formatear_hilbert(coeficientes)
    punto = job.opciones.get('evaluate')
    if punto is not None:
        valor = p.evaluate(punto)
        datos['value'] = {'at': punto, 'value': str(valor)}
        texto += f"\nP({punto}) = {valor}"
    return Salida(datos, texto)


def _coproduct(job: JobSpec) -> Salida:
    G = cargar_hipergrafo(job.entrada)
    contraccion = _opcion(job, 'contract', MODOS, None)
    if contraccion is not None:
        return _salida_combinacion(delta_contract(G, Modo(contraccion)), mode=f'δ {contraccion}')
    modo = CoproductMode(_opcion(job, 'left', MODOS, 'subset'), _opcion(job, 'right', MODOS, 'subset'))
    return _salida_combinacion(coproduct_pair(G, modo), mode=f'Δ {modo}')


def _antipode(job: JobSpec) -> Salida:
    G = cargar_hipergrafo(job.entrada)
    modo = job.opciones.get('mode') or 'subset'
    metodo = _opcion(job, 'method', METODOS, 'takeuchi')
    return _salida_combinacion(antipode(G, modo, metodo), mode=modo, method=metodo)


def _cuasi_orden(datos) -> QuasiOrder:
    if isinstance(datos, str):
        datos = _cargar_json(datos)
    if not isinstance(datos, dict) or not isinstance(datos.get('classes'), list):
        raise ValidationError("El cuasi-orden se da como {\"classes\": [[...]], \"order\": [[i, j]]}", code='esquema')
    try:
        clases = SetPartition(tuple(frozenset(c) for c in datos['classes']))
        orden = frozenset((int(i), int(j)) for i, j in datos.get('order', []))
    except (TypeError, ValueError):
        raise ValidationError("Cuasi-orden mal formado", code='esquema')
    return QuasiOrder(clases, orden)


def _orientations(job: JobSpec) -> Salida:
    G = cargar_hipergrafo(job.entrada)
    accion = _opcion(job, 'action', ACCIONES_ORIENTACION, 'sums')
    if accion == 'sums':
        sumas = orientation_sums(G)
        texto = ', '.join(f'{k}={v}' for k, v in sumas.to_json().items())
        return Salida({'sums': sumas.to_json()}, texto)
    if accion == 'classify':
        q = _cuasi_orden(job.opciones.get('orden'))
        clase = classify_orientation(G, q)
        texto = ', '.join(f"{k}: {'sí' if v else 'no'}" for k, v in clase.to_json().items())
        return Salida({'quasi_order': q.to_json(), 'class': clase.to_json()}, texto)
    orientaciones = list(acyclic_orientations(G))
    lineas = [f"{q}  total={clase.is_total} one_max={clase.is_one_max}" for q, clase in orientaciones]
    datos = {'orientations': [{'quasi_order': q.to_json(), 'class': clase.to_json()} for q, clase in orientaciones]}
    return Salida(datos, '\n'.join([f"{len(orientaciones)} orientaciones acíclicas"] + lineas))


def _character(job: JobSpec) -> Salida:
    G = cargar_hipergrafo(job.entrada)
    modo = _opcion(job, 'mode', MODOS, 'subset')
    metodo = _opcion(job, 'method', ('inverse', 'counts'), 'inverse')
    valor = lambda_character(modo, metodo)(G)
    return Salida({'mode': modo, 'method': metodo, 'value': str(valor)}, str(valor))


def _eulerian(job: JobSpec) -> Salida:
    return _salida_combinacion(eulerian_idempotent(cargar_hipergrafo(job.entrada)))


def _mc(job: JobSpec) -> Salida:
    C = cargar_multicomplejo(job.entrada)
    accion = _opcion(job, 'action', ACCIONES_MC, 'canonical')
    if accion == 'canonical':
        forma = canonical_mc(C)
        return Salida({'canonical': forma.to_json()}, str(forma))
    if accion == 'kappa':
        G = kappa(C)
        return Salida({'hypergraph': G.to_json()}, str(G))
    if accion == 'chromatic':
        p = mc_chromatic(C)
        return Salida({'polynomial': p.to_json()}, str(p))
    if accion == 'check':
        reportes = [mc_check_axioms(C, axioma) for axioma in MC_AXIOMAS] + [verify_mc_antipode(C)]
        texto = '\n'.join(f"{r.axiom}: {'OK' if r.holds else 'FALLA'}" for r in reportes)
        fallido = next((r for r in reportes if not r.holds), None)
        return Salida({'reports': [r.to_json() for r in reportes]}, texto,
                      fallido.to_json() if fallido is not None else None)
    operaciones = {
        'coproduct': mc_coproduct, 'contract': mc_delta_contract, 'antipode': mc_antipode,
        'takeuchi': mc_takeuchi_antipode, 'eulerian': mc_eulerian,
    }
    return _salida_combinacion(operaciones[accion](C), action=accion)


def _verify(job: JobSpec) -> Salida:
    suite = _opcion(job, 'suite', tuple(SUITES), None)
    if suite is None:
        raise ValidationError("Falta --suite", code='opcion_invalida')
    opciones = OpcionesVerificacion(
        max_n=job.opciones.get('max_n', 4),
        count=job.opciones.get('count', 200),
        seed=job.seed if job.seed is not None else settings.HIPERGRAFOS_SEMILLA,
        workers=job.opciones.get('workers', 1))
    reporte = run_suite(suite, opciones)
    contraejemplo = None if reporte.passed else {'suite': suite, 'failures': reporte.failures}
    return Salida(reporte.to_json(), str(reporte), contraejemplo)


COMANDOS = {
    'chromatic': _chromatic,
    'coproduct': _coproduct,
    'antipode': _antipode,
    'orientations': _orientations,
    'character': _character,
    'eulerian': _eulerian,
    'mc': _mc,
    'verify': _verify,
}


def _a_json(datos) -> str:
    return json.dumps(datos, ensure_ascii=False, sort_keys=True, indent=2, default=str)


def run(job: JobSpec) -> tuple[int, str, str]:
    """
    Ejecuta un trabajo de consola.

    Args:
        job (JobSpec): Comando, entrada y opciones.

    Returns:
        tuple[int, str, str]: Código de salida, salida estándar y salida de
            error. 0 éxito, 1 verificación fallida (contraejemplo JSON en la
            salida de error), 2 error de uso o de lectura, 3 límite excedido.

    Example:
        run(JobSpec('chromatic', 'ejemplos/T_4.json')) -> (0, 'X^4 - X', '')
    """
    logger.info("Trabajo %s sobre %s", job.command, job.entrada)
    salida, errores = '', ''
    try:
        if job.command not in COMANDOS:
            raise ValidationError(f"Comando desconocido: {job.command}", code='comando_desconocido')
        with tope_de_vertices(job.max_vertices):
            resultado = COMANDOS[job.command](job)
        salida = _a_json(resultado.datos) if job.formato == 'json' else resultado.texto
        if resultado.contraejemplo is not None:
            codigo, errores = VERIFICACION_FALLIDA, _a_json(resultado.contraejemplo)
        else:
            codigo = EXITO
    except ValidationError as e:
        codigo, errores = ERROR_DE_ENTRADA, '; '.join(e.messages)
    except LimiteExcedido as e:
        codigo, errores = LIMITE_EXCEDIDO, str(e)
    logger.info("Trabajo %s terminó con código %s", job.command, codigo)

    if job.guardar:
        ResultadoCalculo.objects.create(
            comando=job.command, entrada=job.entrada or '', opciones=job.opciones,
            salida=salida, codigo_salida=codigo)
    return codigo, salida, errores

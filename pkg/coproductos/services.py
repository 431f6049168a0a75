import logging
from dataclasses import dataclass
from functools import reduce
from typing import Callable

from django.core.exceptions import ValidationError

from algebra.services import apply_leg, contract_leg, linear_map, m_1_3_24, swap_legs
from algebra.tipos import LinearCombination
from hipergrafos.limites import memoria_con_tope
from hipergrafos.services import (
    admissible_partitions, canonical_form, partition_restrict, quotient, restrict,
)
from hipergrafos.tipos import CanonicalHypergraph, Hypergraph, Modo

from .tipos import AxiomReport, CoproductMode

logger = logging.getLogger(__name__)

AXIOMAS = (
    'coassoc', 'multiplicativity', 'coopposite', 'cocommutativity',
    'delta-coassoc', 'counit', 'cointeraction',
)

UNO = CanonicalHypergraph(0)


def _forma(G) -> CanonicalHypergraph:
    return G if isinstance(G, CanonicalHypergraph) else canonical_form(G)


def _modo_par(mode) -> CoproductMode:
    return CoproductMode.coerce(mode)


@memoria_con_tope(maxsize=50_000)
def coproducto_base(forma: CanonicalHypergraph, mode: CoproductMode) -> LinearCombination:
    """Δ^(⋉,⋊) sobre un elemento de la base (vértices 0..n-1, subconjuntos por máscara de bits)."""
    n = forma.n
    G = forma.as_hypergraph()
    terminos = {}
    for mascara in range(1 << n):
        I = [v for v in range(n) if mascara >> v & 1]
        J = [v for v in range(n) if not mascara >> v & 1]
        palabra = (canonical_form(restrict(G, I, mode.left)), canonical_form(restrict(G, J, mode.right)))
        terminos[palabra] = terminos.get(palabra, 0) + 1
    return LinearCombination(terminos)


@memoria_con_tope(maxsize=50_000)
def contraccion_base(forma: CanonicalHypergraph, modo: Modo) -> LinearCombination:
    """δ^(⋉) sobre un elemento de la base."""
    G = forma.as_hypergraph()
    terminos = {}
    for p in admissible_partitions(G, modo):
        palabra = (canonical_form(quotient(G, p)), canonical_form(partition_restrict(G, p, modo)))
        terminos[palabra] = terminos.get(palabra, 0) + 1
    return LinearCombination(terminos)


def coproduct_pair(G, mode) -> LinearCombination:
    """
    Δ^(⋉,⋊)(G) = Σ_{I ⊆ V(G)} G|⋉I ⊗ G|⋊(V(G) \\ I), canonizado y agregado.

    Args:
        G (Hypergraph | CanonicalHypergraph): Hipergrafo.
        mode (CoproductMode | tuple | str): Par de modos, p. ej. 'subset,cap'.

    Raises:
        LimiteExcedido: Si |V(G)| supera el límite de vértices.

    Example:
        coproduct_pair(T_3, 'cap,cap') = T_3⊗1 + 1⊗T_3 + 3·T_1⊗T_2 + 3·T_2⊗T_1
    """
    return coproducto_base(_forma(G), _modo_par(mode))


def coproduct_iterated(G, mode, k: int) -> LinearCombination:
    """Δ^(k) iterado por la izquierda; el resultado tiene grado tensorial k + 1."""
    if k < 1:
        raise ValidationError("El número de iteraciones debe ser al menos 1", code='iteracion_invalida')
    modo = _modo_par(mode)
    resultado = coproduct_pair(G, modo)
    for _ in range(k - 1):
        resultado = apply_leg(resultado, 0, lambda f: coproducto_base(f, modo))
    return resultado


def reduced_coproduct(G, mode) -> LinearCombination:
    """Δ̃(G) = Δ(G) - G⊗1 - 1⊗G; rechaza el hipergrafo vacío."""
    forma = _forma(G)
    if forma.is_empty:
        raise ValidationError("El coproducto reducido no está definido para el hipergrafo vacío", code='vacio')
    return (coproduct_pair(forma, mode)
            - LinearCombination.basis(forma, UNO)
            - LinearCombination.basis(UNO, forma))


def delta_contract(G, mode: Modo) -> LinearCombination:
    """
    δ^(⋉)(G) = Σ_{∼ ∈ E_⋉[G]} G/∼ ⊗ G|⋉∼.

    Example:
        delta_contract(T_3, Modo.SUBSET) = T_3⊗T_1³ + T_1⊗T_3
    """
    return contraccion_base(_forma(G), Modo(mode))


def coproduct_lc(lc: LinearCombination, mode) -> LinearCombination:
    """Extensión lineal de Δ^(⋉,⋊) a un elemento de grado 1."""
    modo = _modo_par(mode)
    return linear_map(lc, lambda f: coproducto_base(f, modo))


def delta_lc(lc: LinearCombination, mode: Modo) -> LinearCombination:
    """Extensión lineal de δ^(⋉) a un elemento de grado 1."""
    modo = Modo(mode)
    return linear_map(lc, lambda f: contraccion_base(f, modo))


def counit_eps(w) -> int:
    """ε ⊗ ... ⊗ ε sobre una palabra tensorial (o un solo elemento): 1 si todos los factores son vacíos."""
    factores = w if isinstance(w, tuple) else (_forma(w),)
    return int(all(f.is_empty for f in factores))


def counit_eps_delta(G) -> int:
    """ε_δ(G) = 1 si E^+(G) = ∅, 0 en otro caso."""
    if isinstance(G, Hypergraph):
        return int(not G.edges_plus)
    return int(not G.edges)


# ---------- Identidades de biálgebra ----------

@dataclass(frozen=True)
class Estructura:
    """Operaciones sobre una base canónica con las que se comprueban los axiomas."""

    coproducto: Callable | None = None
    contraccion: Callable | None = None
    counidad: Callable | None = None
    counidad_delta: Callable | None = None
    componentes: Callable | None = None


def _multiplicar(mapa: Callable, factores) -> LinearCombination:
    return reduce(lambda a, b: a.multiply(b), (mapa(f) for f in factores))


def comprobar_identidad(axioma: str, forma, estructura: Estructura, otro=None) -> AxiomReport:
    """
    Evalúa ambos lados de una identidad sobre un elemento de la base y los
    compara exactamente. Sirve tanto para hipergrafos como para multicomplejos.

    Returns:
        AxiomReport: holds=False con los dos lados distintos si falla.
    """
    elemento = LinearCombination.basis(forma)
    Delta, delta = estructura.coproducto, estructura.contraccion
    pares = []

    if axioma == 'coassoc':
        d = Delta(forma)
        pares.append((apply_leg(d, 0, Delta), apply_leg(d, 1, Delta)))
    elif axioma == 'delta-coassoc':
        d = delta(forma)
        pares.append((apply_leg(d, 0, delta), apply_leg(d, 1, delta)))
    elif axioma == 'cocommutativity':
        d = Delta(forma)
        pares.append((swap_legs(d), d))
    elif axioma == 'counit':
        if Delta is not None:
            d = Delta(forma)
            pares += [(contract_leg(d, 0, estructura.counidad), elemento),
                      (contract_leg(d, 1, estructura.counidad), elemento)]
        if delta is not None:
            d = delta(forma)
            pares += [(contract_leg(d, 1, estructura.counidad_delta), elemento),
                      (contract_leg(d, 0, estructura.counidad_delta), elemento)]
    elif axioma == 'multiplicativity':
        if otro is not None:
            producto, factores = forma.producto(otro), [forma, otro]
        else:
            producto, factores = forma, list(estructura.componentes(forma))
        for mapa in (Delta, delta):
            if mapa is not None and factores:
                pares.append((mapa(producto), _multiplicar(mapa, factores)))
    elif axioma == 'cointeraction':
        izquierda = apply_leg(delta(forma), 0, Delta)
        derecha = m_1_3_24(apply_leg(apply_leg(Delta(forma), 0, delta), 2, delta))
        pares.append((izquierda, derecha))
    else:
        raise ValidationError(f"Axioma desconocido: {axioma}", code='axioma_desconocido')

    for izquierda, derecha in pares:
        if izquierda != derecha:
            logger.info("Falla %s sobre %s", axioma, forma)
            return AxiomReport(axioma, False, forma.to_json(), izquierda, derecha)
    return AxiomReport(axioma, True, forma.to_json())


def estructura_hipergrafos(mode) -> Estructura:
    """
    Con un CoproductMode se usa sólo Δ de ese modo; con un Modo m se usan
    Δ^(m,m) y δ^(m) (caso de la cointeracción).
    """
    from algebra.services import componentes_canonicas

    if isinstance(mode, (CoproductMode, tuple)) or (isinstance(mode, str) and ',' in mode):
        par = _modo_par(mode)
        return Estructura(
            coproducto=lambda f: coproducto_base(f, par),
            counidad=counit_eps,
            componentes=componentes_canonicas)
    modo = Modo(mode)
    par = CoproductMode(modo, modo)
    return Estructura(
        coproducto=lambda f: coproducto_base(f, par),
        contraccion=lambda f: contraccion_base(f, modo),
        counidad=counit_eps,
        counidad_delta=counit_eps_delta,
        componentes=componentes_canonicas)


def check_axioms(G, which: str, mode=None, other=None) -> AxiomReport:
    """
    Comprueba una identidad de biálgebra sobre G.

    Args:
        G (Hypergraph | CanonicalHypergraph): Hipergrafo.
        which (str): Uno de AXIOMAS.
        mode: CoproductMode (o 'subset,cap') para coassoc, cocommutativity;
            Modo para delta-coassoc y cointeraction; cualquiera de los dos
            para counit y multiplicativity. Por defecto subset.
        other: Segundo hipergrafo para multiplicativity (si falta se usan
            las componentes conexas de G).

    Raises:
        ValidationError: Axioma desconocido o cocommutativity con modos distintos.
    """
    forma = _forma(G)
    if which == 'coopposite':
        izquierda = swap_legs(coproducto_base(forma, CoproductMode(Modo.CAP, Modo.SUBSET)))
        derecha = coproducto_base(forma, CoproductMode(Modo.SUBSET, Modo.CAP))
        if izquierda != derecha:
            return AxiomReport(which, False, forma.to_json(), izquierda, derecha)
        return AxiomReport(which, True, forma.to_json())

    if mode is None:
        mode = CoproductMode(Modo.SUBSET, Modo.SUBSET) if which in ('coassoc', 'cocommutativity') else Modo.SUBSET
    if which in ('coassoc', 'cocommutativity') and isinstance(mode, Modo):
        mode = CoproductMode(mode, mode)
    if which == 'cocommutativity' and not _modo_par(mode).is_equal:
        raise ValidationError("La cocommutatividad sólo aplica a modos iguales", code='modo_invalido')
    if which in ('delta-coassoc', 'cointeraction'):
        try:
            mode = Modo(mode)
        except ValueError:
            raise ValidationError(f"{which} requiere un único modo (subset o cap)", code='modo_invalido')

    return comprobar_identidad(which, forma, estructura_hipergrafos(mode),
                               otro=_forma(other) if other is not None else None)

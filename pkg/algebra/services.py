import logging
from functools import lru_cache
from math import comb
from typing import Callable

import sympy
from django.core.exceptions import ValidationError

from hipergrafos.limites import memoria_con_tope
from hipergrafos.services import (
    admissible_partitions, canonical_form, connected_components,
    partition_restrict, quotient,
)
from hipergrafos.tipos import CanonicalHypergraph, Hypergraph, Modo

from .tipos import Character, LinearCombination, RationalPolynomial, X

logger = logging.getLogger(__name__)

T1 = CanonicalHypergraph(1)


# ---------- Operaciones sobre combinaciones lineales ----------

def add(a: LinearCombination, b: LinearCombination) -> LinearCombination:
    return a + b


def scale(a: LinearCombination, escalar) -> LinearCombination:
    return a.scale(escalar)


def multiply(a: LinearCombination, b: LinearCombination) -> LinearCombination:
    return a.multiply(b)


def tensor(a: LinearCombination, b: LinearCombination) -> LinearCombination:
    return a.tensor(b)


def apply_leg(lc: LinearCombination, pata: int, funcion: Callable) -> LinearCombination:
    """
    Aplica linealmente `funcion` (elemento de la base -> LinearCombination) a
    la pata `pata` de cada palabra, insertando el resultado en su lugar.
    """
    resultado = {}
    for palabra, coeficiente in lc.terms.items():
        imagen = funcion(palabra[pata])
        for subpalabra, subcoeficiente in imagen.terms.items():
            nueva = palabra[:pata] + subpalabra + palabra[pata + 1:]
            resultado[nueva] = resultado.get(nueva, 0) + coeficiente * subcoeficiente
    return LinearCombination(resultado)


def contract_leg(lc: LinearCombination, pata: int, funcional: Callable) -> LinearCombination:
    """Contrae la pata `pata` con un funcional lineal (elemento de la base -> racional)."""
    resultado = {}
    for palabra, coeficiente in lc.terms.items():
        valor = funcional(palabra[pata])
        if valor:
            nueva = palabra[:pata] + palabra[pata + 1:]
            resultado[nueva] = resultado.get(nueva, 0) + coeficiente * valor
    return LinearCombination(resultado)


def swap_legs(lc: LinearCombination) -> LinearCombination:
    """Intercambio de las dos patas de un elemento de grado 2."""
    return LinearCombination({(b, a): c for (a, b), c in lc.terms.items()})


def multiply_legs(lc: LinearCombination) -> LinearCombination:
    """m: a ⊗ b -> a·b."""
    resultado = {}
    for (a, b), coeficiente in lc.terms.items():
        palabra = (a.producto(b),)
        resultado[palabra] = resultado.get(palabra, 0) + coeficiente
    return LinearCombination(resultado)


def m_1_3_24(lc: LinearCombination) -> LinearCombination:
    """a1 ⊗ a2 ⊗ a3 ⊗ a4 -> a1 ⊗ a3 ⊗ (a2·a4)."""
    resultado = {}
    for (a1, a2, a3, a4), coeficiente in lc.terms.items():
        palabra = (a1, a3, a2.producto(a4))
        resultado[palabra] = resultado.get(palabra, 0) + coeficiente
    return LinearCombination(resultado)


def linear_map(lc: LinearCombination, funcion: Callable) -> LinearCombination:
    """Extensión lineal de funcion (elemento de la base -> LinearCombination) a grado 1."""
    return apply_leg(lc, 0, funcion)


def evaluate_invariant(lc: LinearCombination, invariante: Callable) -> RationalPolynomial:
    """Σ c·P(G) sobre los términos de un elemento de grado 1."""
    total = RationalPolynomial()
    for (forma,), coeficiente in lc.terms.items():
        total = total + invariante(forma.as_hypergraph()) * coeficiente
    return total


# ---------- Polinomios de Hilbert ----------

@lru_cache(maxsize=256)
def hilbert_polynomial(k: int) -> RationalPolynomial:
    """H_k(X) = X(X-1)...(X-k+1)/k!, con H_0 = 1."""
    if k < 0:
        raise ValidationError("El índice de Hilbert debe ser no negativo")
    expresion = sympy.prod([X - i for i in range(k)]) / sympy.factorial(k)
    return RationalPolynomial.from_expr(sympy.expand(expresion))


def to_hilbert_basis(p: RationalPolynomial) -> list:
    """
    Coeficientes c_k con p = Σ c_k H_k, por diferencias finitas en 0:
    c_k = Σ_j (-1)^(k-j) C(k, j) p(j).

    Example:
        X(X-1) -> [0, 0, 2]
    """
    valores = [p.evaluate(j) for j in range(p.degree + 1)]
    return [
        sum(((-1) ** (k - j) * comb(k, j) * valores[j] for j in range(k + 1)), sympy.Integer(0))
        for k in range(p.degree + 1)
    ]


def from_hilbert_basis(coeficientes) -> RationalPolynomial:
    total = RationalPolynomial()
    for k, c in enumerate(coeficientes):
        if c:
            total = total + hilbert_polynomial(k) * c
    return total


def formatear_hilbert(coeficientes) -> str:
    from .tipos import formatear_suma

    return formatear_suma([(sympy.Rational(c), f'H{k}' if k else '') for k, c in enumerate(coeficientes)])


# ---------- Caracteres ----------

@memoria_con_tope(maxsize=100_000)
def _componentes(forma: CanonicalHypergraph) -> tuple:
    return tuple(canonical_form(c) for c in connected_components(forma.as_hypergraph()))


def componentes_canonicas(G) -> tuple:
    """Componentes conexas canonizadas de un hipergrafo (canónico o no)."""
    if isinstance(G, Hypergraph):
        G = canonical_form(G)
    return _componentes(G)


def counit_character() -> Character:
    """ε_δ: vale 1 exactamente en los hipergrafos sin aristas no triviales."""
    return Character('ε_δ', lambda forma: 1 if not forma.edges else 0, entero=True)


def constant_character(valor=1, nombre: str | None = None) -> Character:
    """Carácter que vale `valor` en cada hipergrafo conexo; λ_0 es el caso valor=1."""
    valor = sympy.Rational(valor)
    return Character(nombre or f'const({valor})', lambda forma: valor, entero=valor.q == 1)


def convolve(f: Character, g: Character, delta_mode: Modo) -> Character:
    """
    Convolución inducida por δ^(modo):
    (f ⋆ g)(G) = Σ_{∼ ∈ E_modo[G]} f(G/∼)·g(G|∼).

    Es multiplicativa porque δ lo es, así que basta definirla en los conexos.
    """
    modo = Modo(delta_mode)

    def regla(forma: CanonicalHypergraph):
        G = forma.as_hypergraph()
        return sum(
            (f(quotient(G, p)) * g(partition_restrict(G, p, modo)) for p in admissible_partitions(G, modo)),
            sympy.Integer(0))

    return Character(f'({f.nombre} ⋆ {g.nombre})', regla, entero=f.entero and g.entero)


def character_inverse(z: Character, delta_mode: Modo) -> Character:
    """
    Inverso de z para la convolución de δ^(modo).

    Para G conexo con n ≥ 2 se despeja z⁻¹(G) de Σ_∼ z(G/∼)·z⁻¹(G|∼) = ε_δ(G):
    la partición de un solo bloque aporta z(T_1)·z⁻¹(G) y las demás sólo
    involucran bloques con menos vértices. La graduación |V| - cc baja
    estrictamente en cada paso, lo que garantiza la terminación.

    Raises:
        ValidationError: code='no_invertible' si z(T_1) = 0.

    Example:
        character_inverse(constant_character(1), Modo.SUBSET)(T_2) -> -1
    """
    modo = Modo(delta_mode)
    z_t1 = z.valor_conexo(T1)
    if z_t1 == 0:
        raise ValidationError(
            f"El carácter {z.nombre} no es invertible: vale 0 en T_1", code='no_invertible')

    def regla(forma: CanonicalHypergraph):
        if forma.n == 1:
            return 1 / z_t1
        G = forma.as_hypergraph()
        suma = sympy.Integer(0)
        for p in admissible_partitions(G, modo):
            if p.cl == 1:
                continue
            restringido = partition_restrict(G, p, modo)
            suma += z(quotient(G, p)) * inverso(restringido)
        valor = ((0 if forma.edges else 1) - suma) / z_t1
        if inverso.entero and valor.q != 1:
            logger.error("El inverso de %s no es entero en %s: %s", z.nombre, forma, valor)
        return valor

    inverso = Character(f'{z.nombre}⁻¹', regla, entero=z.entero and abs(z_t1) == 1)
    return inverso


def act_on_invariant(invariante: Callable, caracter: Character, delta_mode: Modo) -> Callable:
    """
    Acción de un carácter sobre un invariante polinomial a través de δ:
    (P ↞ λ)(G) = Σ_∼ P(G/∼)·λ(G|∼).
    """
    modo = Modo(delta_mode)

    def accion(G: Hypergraph) -> RationalPolynomial:
        total = RationalPolynomial()
        for p in admissible_partitions(G, modo):
            valor = caracter(partition_restrict(G, p, modo))
            if valor:
                total = total + invariante(quotient(G, p)) * valor
        return total

    return accion

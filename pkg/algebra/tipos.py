"""
Valores del álgebra: polinomios racionales, combinaciones lineales de palabras
tensoriales y caracteres.

Los coeficientes son racionales exactos de sympy en todo momento.
"""
from __future__ import annotations

import logging
from functools import lru_cache
from typing import Callable

import sympy
from sympy import Poly, QQ, Rational

from django.core.exceptions import ValidationError

logger = logging.getLogger(__name__)

X = sympy.Symbol('X')

# Valores memorizados por carácter (formas canónicas conexas)
MEMORIA_DE_CARACTER = 50_000

# Una palabra tensorial es una tupla de elementos canónicos de la base
# (CanonicalHypergraph o CanonicalMultiComplex); su longitud es el grado tensorial.
TensorWord = tuple


def _a_racional(valor) -> Rational:
    return sympy.Rational(valor)


# Representa un polinomio univariado denso con coeficientes racionales
class RationalPolynomial:
    """
    Polinomio en X sobre QQ, respaldado por sympy.Poly.

    Attributes:
        poly (Poly): Polinomio de sympy con dominio QQ.

    Methods:
        coefficients: Coeficientes ascendentes (lista vacía para el polinomio nulo).
        evaluate: Evaluación exacta en un racional.
        compose_negative: Sustitución X -> -X.
    """

    __slots__ = ('poly',)

    def __init__(self, poly: Poly | None = None):
        self.poly = poly if poly is not None else Poly(0, X, domain=QQ)

    @classmethod
    def from_coefficients(cls, coeficientes) -> RationalPolynomial:
        coeficientes = [_a_racional(c) for c in coeficientes]
        if not any(coeficientes):
            return cls()
        return cls(Poly(list(reversed(coeficientes)), X, domain=QQ))

    @classmethod
    def from_expr(cls, expresion, simbolo=X) -> RationalPolynomial:
        """Convierte una expresión de sympy en `simbolo` (p. ej. la 'x' de networkx)."""
        return cls.from_coefficients(reversed(Poly(expresion, simbolo, domain=QQ).all_coeffs()))

    @classmethod
    def monomial(cls, k: int, coeficiente=1) -> RationalPolynomial:
        return cls.from_coefficients([0] * k + [coeficiente])

    @property
    def coefficients(self) -> list[Rational]:
        if self.poly.is_zero:
            return []
        return [_a_racional(c) for c in reversed(self.poly.all_coeffs())]

    @property
    def degree(self) -> int:
        return -1 if self.poly.is_zero else self.poly.degree()

    def evaluate(self, valor) -> Rational:
        return _a_racional(self.poly.eval(_a_racional(valor)))

    def compose_negative(self) -> RationalPolynomial:
        return RationalPolynomial.from_coefficients(
            [c if k % 2 == 0 else -c for k, c in enumerate(self.coefficients)])

    def is_integral(self) -> bool:
        return all(c.q == 1 for c in self.coefficients)

    def __add__(self, otro: RationalPolynomial) -> RationalPolynomial:
        return RationalPolynomial(self.poly + otro.poly)

    def __sub__(self, otro: RationalPolynomial) -> RationalPolynomial:
        return RationalPolynomial(self.poly - otro.poly)

    def __neg__(self) -> RationalPolynomial:
        return RationalPolynomial(-self.poly)

    def __mul__(self, otro) -> RationalPolynomial:
        if isinstance(otro, RationalPolynomial):
            return RationalPolynomial(self.poly * otro.poly)
        return RationalPolynomial(self.poly * Poly(_a_racional(otro), X, domain=QQ))

    __rmul__ = __mul__

    def __eq__(self, otro) -> bool:
        return isinstance(otro, RationalPolynomial) and self.coefficients == otro.coefficients

    def __hash__(self):
        return hash(tuple(self.coefficients))

    def __repr__(self):
        return f"RationalPolynomial({self})"

    def __str__(self):
        return formatear_suma(
            [(c, 'X' if k == 1 else f'X^{k}' if k else '') for k, c in enumerate(self.coefficients)][::-1])

    def to_json(self) -> dict:
        return {'text': str(self), 'coefficients': [str(c) for c in self.coefficients]}


def formatear_suma(terminos: list[tuple]) -> str:
    """Suma legible 'c1 s1 + c2 s2 - ...' omitiendo coeficientes nulos y unitarios."""
    partes = []
    for coeficiente, simbolo in terminos:
        if coeficiente == 0:
            continue
        magnitud = abs(coeficiente)
        if not simbolo:
            cuerpo = str(magnitud)
        elif magnitud == 1:
            cuerpo = simbolo
        else:
            cuerpo = f"{magnitud} {simbolo}"
        if not partes:
            partes.append(f"-{cuerpo}" if coeficiente < 0 else cuerpo)
        else:
            partes.append(f"{'-' if coeficiente < 0 else '+'} {cuerpo}")
    return ' '.join(partes) if partes else '0'


# Elementos de F[H] y de sus potencias tensoriales
class LinearCombination:
    """
    Suma formal finita de palabras tensoriales con coeficientes racionales.

    Attributes:
        terms (dict): Palabra tensorial -> coeficiente racional no nulo.

    Raises:
        ValidationError: Si las palabras no comparten grado tensorial.
    """

    __slots__ = ('terms',)

    def __init__(self, terms: dict | None = None):
        normalizados = {}
        for palabra, coeficiente in (terms or {}).items():
            coeficiente = _a_racional(coeficiente)
            if coeficiente != 0:
                normalizados[tuple(palabra)] = coeficiente
        grados = {len(palabra) for palabra in normalizados}
        if len(grados) > 1:
            raise ValidationError(
                f"Grados tensoriales incompatibles: {sorted(grados)}", code='grado_tensorial')
        self.terms = normalizados

    @classmethod
    def basis(cls, *factores, coeficiente=1) -> LinearCombination:
        return cls({tuple(factores): coeficiente})

    @classmethod
    def zero(cls) -> LinearCombination:
        return cls()

    @property
    def degree(self) -> int | None:
        for palabra in self.terms:
            return len(palabra)
        return None

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, *factores) -> Rational:
        return self.terms.get(tuple(factores), sympy.Integer(0))

    def _verificar_grado(self, otra: LinearCombination) -> None:
        if self.degree is not None and otra.degree is not None and self.degree != otra.degree:
            raise ValidationError(
                f"No se pueden sumar grados tensoriales {self.degree} y {otra.degree}", code='grado_tensorial')

    def __add__(self, otra: LinearCombination) -> LinearCombination:
        self._verificar_grado(otra)
        suma = dict(self.terms)
        for palabra, coeficiente in otra.terms.items():
            suma[palabra] = suma.get(palabra, 0) + coeficiente
        return LinearCombination(suma)

    def __neg__(self) -> LinearCombination:
        return self.scale(-1)

    def __sub__(self, otra: LinearCombination) -> LinearCombination:
        return self + (-otra)

    def scale(self, escalar) -> LinearCombination:
        escalar = _a_racional(escalar)
        return LinearCombination({p: c * escalar for p, c in self.terms.items()})

    def __rmul__(self, escalar) -> LinearCombination:
        return self.scale(escalar)

    def multiply(self, otra: LinearCombination) -> LinearCombination:
        """Producto componente a componente (unión disjunta canonizada en cada pata)."""
        self._verificar_grado(otra)
        producto = {}
        for p1, c1 in self.terms.items():
            for p2, c2 in otra.terms.items():
                palabra = tuple(a.producto(b) for a, b in zip(p1, p2))
                producto[palabra] = producto.get(palabra, 0) + c1 * c2
        return LinearCombination(producto)

    def tensor(self, otra: LinearCombination) -> LinearCombination:
        producto = {}
        for p1, c1 in self.terms.items():
            for p2, c2 in otra.terms.items():
                producto[p1 + p2] = producto.get(p1 + p2, 0) + c1 * c2
        return LinearCombination(producto)

    def items(self) -> list[tuple]:
        """Términos en orden canónico determinista."""
        return sorted(self.terms.items(), key=lambda t: tuple(f.sort_key() for f in t[0]))

    def __eq__(self, otra) -> bool:
        return isinstance(otra, LinearCombination) and self.terms == otra.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __len__(self):
        return len(self.terms)

    def __str__(self):
        if not self.terms:
            return '0'
        return formatear_suma([(c, ' ⊗ '.join(str(f) for f in palabra)) for palabra, c in self.items()])

    __repr__ = __str__

    def to_json(self) -> list[dict]:
        return [
            {'coeff': str(c), 'factors': [f.to_json() for f in palabra]}
            for palabra, c in self.items()
        ]


# Caracteres de F[H]: morfismos de álgebra hacia los racionales
class Character:
    """
    Carácter sobre la base de hipergrafos canónicos.

    Se define por una regla sobre hipergrafos canónicos conexos y se extiende
    multiplicativamente; λ(1) = 1. Los valores se memorizan por forma canónica.

    Attributes:
        nombre (str): Nombre para mensajes y registros.
        regla (Callable): CanonicalHypergraph conexo -> racional.
        entero (bool): Declara que el carácter toma valores enteros.
    """

    def __init__(self, nombre: str, regla: Callable, entero: bool = False):
        self.nombre = nombre
        self.regla = regla
        self.entero = entero
        self.valor_conexo = lru_cache(maxsize=MEMORIA_DE_CARACTER)(self._calcular)

    def _calcular(self, forma) -> Rational:
        return _a_racional(self.regla(forma))

    def __call__(self, G) -> Rational:
        from .services import componentes_canonicas

        valor = sympy.Integer(1)
        for componente in componentes_canonicas(G):
            valor *= self.valor_conexo(componente)
        return valor

    def __repr__(self):
        return f"Character({self.nombre})"

"""
Etiquetado canónico de multicomplejos.

Se recorren los reetiquetados de vértices compatibles con el refinamiento de
colores de los multiconjuntos; para cada uno, las instancias se ordenan por
su imagen y por cuántas quedan debajo y encima, y los empates se resuelven
probando todas sus disposiciones y comparando la relación de orden.
"""
from functools import lru_cache
from itertools import groupby, permutations, product

from hipergrafos.canonico import etiquetados_candidatos, refinar_colores
from hipergrafos.limites import verificar_multicomplejo

from .tipos import CanonicalMultiComplex


@lru_cache(maxsize=100_000)
def _canonizar(n: int, instancias: tuple, orden: frozenset) -> CanonicalMultiComplex:
    k = len(instancias)
    colores = refinar_colores(n, [dict(items) for items in instancias])
    debajo = [sum(1 for _, j in orden if j == i) for i in range(k)]
    encima = [sum(1 for i2, _ in orden if i2 == i) for i in range(k)]

    mejor = None
    for sigma in etiquetados_candidatos(colores, list(range(n))):
        imagenes = [tuple(sorted((sigma[v], m) for v, m in items)) for items in instancias]
        claves = [(imagenes[i], debajo[i], encima[i]) for i in range(k)]
        base = sorted(range(k), key=claves.__getitem__)
        grupos = [list(g) for _, g in groupby(base, key=claves.__getitem__)]
        secuencia_imagenes = tuple(imagenes[i] for i in base)
        if mejor is not None and secuencia_imagenes > mejor[0]:
            continue
        for arreglo in product(*(permutations(g) for g in grupos)):
            posicion = {i: p for p, i in enumerate(x for grupo in arreglo for x in grupo)}
            codigo = (secuencia_imagenes, tuple(sorted((posicion[i], posicion[j]) for i, j in orden)))
            if mejor is None or codigo < mejor:
                mejor = codigo
    return CanonicalMultiComplex(n, *mejor)


def forma_canonica_multicomplejo(n: int, instancias, orden) -> CanonicalMultiComplex:
    """
    Forma canónica sobre índices: vértices 0..n-1, instancias como tuplas de
    (vértice, multiplicidad) y orden como pares estrictos de índices de instancia.

    Raises:
        LimiteExcedido: Si se superan los topes de vértices o instancias.
    """
    instancias = tuple(tuple(sorted(items)) for items in instancias)
    verificar_multicomplejo(n, len(instancias))
    return _canonizar(n, instancias, frozenset(orden))

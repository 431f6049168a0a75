import logging
import random
from itertools import combinations, permutations
from math import factorial

from django.conf import settings
from django.core.exceptions import ValidationError
from django.db import transaction

from algebra.services import apply_leg, linear_map, multiply_legs
from algebra.tipos import LinearCombination, RationalPolynomial
from coproductos.services import Estructura, comprobar_identidad, coproduct_lc, delta_lc
from coproductos.tipos import AxiomReport
from hipergrafos.limites import memoria_con_tope, tope_de_multicomplejo, verificar_multicomplejo
from hipergrafos.services import (
    admissible_partitions, canonical_form, connected_components, enumerate_set_partitions,
)
from hipergrafos.tipos import CanonicalHypergraph, Hypergraph, Modo, SetPartition, clave_etiqueta
from invariantes.services import chromatic, spanning_counts
from orientaciones.services import orientation_sums

from .canonico import forma_canonica_multicomplejo
from .models import MultiComplejo
from .tipos import CanonicalMultiComplex, EdgeInstance, EdgeInstanceMultiset, MultiComplex

logger = logging.getLogger(__name__)

UNO = CanonicalMultiComplex(0)

MC_AXIOMAS = ('coassoc', 'cocommutativity', 'delta-coassoc', 'counit', 'multiplicativity', 'cointeraction')

# Ejemplo de referencia: ocho instancias sobre {a, b, c, d}, dos con multiplicidad
EJEMPLO_C = {
    'vertices': ['a', 'b', 'c', 'd'],
    'edges': [
        {'id': 'e1', 'multiset': {'a': 1, 'b': 1}},
        {'id': 'e2', 'multiset': {'a': 1, 'c': 1}},
        {'id': 'e3', 'multiset': {'a': 1, 'c': 1}},
        {'id': 'e4', 'multiset': {'b': 1, 'd': 1}},
        {'id': 'e5', 'multiset': {'c': 1, 'd': 1}},
        {'id': 'e6', 'multiset': {'a': 1, 'b': 1, 'c': 1}},
        {'id': 'e7', 'multiset': {'a': 2, 'c': 1}},
        {'id': 'e8', 'multiset': {'b': 2, 'd': 1}},
    ],
    'order': [['e1', 'e6'], ['e2', 'e6'], ['e3', 'e7'], ['e4', 'e8']],
}

# Imágenes de sus instancias al contraer los bloques {a, b} y {c, d}
COCIENTE_EJEMPLO_C = {
    'e1': '{a,a}', 'e2': '{a,c}', 'e3': '{a,c}', 'e4': '{a,c}',
    'e5': '{c,c}', 'e6': '{a,a,c}', 'e7': '{a,a,c}', 'e8': '{a,a,c}',
}


def ejemplo_c() -> MultiComplex:
    return MultiComplex.from_json(EJEMPLO_C)


def _verificado(C: MultiComplex) -> MultiComplex:
    # En modo DEBUG se revalidan los axiomas del orden tras cada operación
    if settings.DEBUG:
        C.validar_axiomas()
    return C


def validate(C: MultiComplex) -> MultiComplex:
    """Comprueba los axiomas del orden y devuelve el mismo multicomplejo."""
    C.validar_axiomas()
    return C


def canonical_mc(C: MultiComplex) -> CanonicalMultiComplex:
    """
    Forma canónica de C.

    Raises:
        LimiteExcedido: Si C supera MULTICOMPLEJOS_MAX_VERTICES o MULTICOMPLEJOS_MAX_INSTANCIAS.
    """
    indice_v = {v: i for i, v in enumerate(C.vertices)}
    indice_e = {instancia.id: i for i, instancia in enumerate(C.instances)}
    instancias = [tuple((indice_v[v], m) for v, m in i.multiset.items) for i in C.instances]
    orden = {(indice_e[a], indice_e[b]) for a, b in C.order}
    return forma_canonica_multicomplejo(C.n, instancias, orden)


def _forma(C) -> CanonicalMultiComplex:
    return C if isinstance(C, CanonicalMultiComplex) else canonical_mc(C)


def _complejo(C) -> MultiComplex:
    return C.as_multicomplex() if isinstance(C, CanonicalMultiComplex) else C


# ---------- Estructura de biálgebra ----------

def _renombrar(etiquetas, ocupadas: set) -> dict:
    renombre = {}
    for etiqueta in etiquetas:
        nueva = etiqueta
        sufijo = 1
        while nueva in ocupadas:
            nueva = f"{etiqueta}_{sufijo}"
            sufijo += 1
        renombre[etiqueta] = nueva
        ocupadas.add(nueva)
    return renombre


def mc_product(C: MultiComplex, D: MultiComplex) -> MultiComplex:
    """
    Producto CD: unión disjunta de vértices, instancias y órdenes, sin
    relaciones entre instancias de C y de D. Las etiquetas e identificadores
    de D que chocan con los de C se renombran con un sufijo numérico.
    """
    vertices = _renombrar(D.vertices, set(C.vertices))
    ids = _renombrar([i.id for i in D.instances], set(C.por_id))
    instancias = tuple(EdgeInstance(ids[i.id], i.multiset.imagen(vertices)) for i in D.instances)
    orden = frozenset((ids[a], ids[b]) for a, b in D.order)
    return _verificado(MultiComplex(
        C.vertices + tuple(vertices[v] for v in D.vertices), C.instances + instancias, C.order | orden))


def _restringir_orden(C: MultiComplex, instancias) -> frozenset:
    ids = {i.id for i in instancias}
    return frozenset((a, b) for a, b in C.order if a in ids and b in ids)


def mc_restrict(C: MultiComplex, X) -> MultiComplex:
    """
    C|X: instancias con soporte contenido en X y el orden restringido.

    Raises:
        ValidationError: Si X no está contenido en V(C).

    Example:
        mc_restrict(C, {'a', 'b'}) conserva sólo la instancia {a,b} del ejemplo C
    """
    subconjunto = frozenset(X)
    if not subconjunto <= C.vertex_set:
        fuera = sorted(subconjunto - C.vertex_set, key=clave_etiqueta)
        raise ValidationError(f"Los vértices {fuera} no pertenecen al multicomplejo", code='subconjunto_invalido')
    instancias = tuple(i for i in C.instances if i.support <= subconjunto)
    return _verificado(MultiComplex(
        tuple(v for v in C.vertices if v in subconjunto), instancias, _restringir_orden(C, instancias)))


def kappa(C) -> Hypergraph:
    """κ(C): olvida el orden y las multiplicidades; las aristas son los soportes distintos de cardinal ≥ 2."""
    C = _complejo(C)
    return Hypergraph(C.vertices, frozenset(i.support for i in C.instances if len(i.support) >= 2))


def _kappa_forma(forma: CanonicalMultiComplex) -> CanonicalHypergraph:
    return canonical_form(kappa(forma))


def mc_quotient(C: MultiComplex, p: SetPartition) -> MultiComplex:
    """
    Contracción C/∼: un vértice por bloque (etiquetado con su primer vértice
    según el orden de C) y una instancia π(e) por cada instancia e, con las
    multiplicidades sumadas. Las imágenes se distinguen todas y el orden se
    transfiere instancia a instancia: π(e) ≤ π(f) si y sólo si e ≤ f.

    Raises:
        ValidationError: Si p no es una partición de V(C), o si el orden
            transferido viola un axioma (code='axioma').
    """
    p.validar(C.vertex_set)
    posicion = {v: i for i, v in enumerate(C.vertices)}
    representante = {}
    etiquetas = []
    for bloque in p.blocks:
        etiqueta = min(bloque, key=posicion.__getitem__)
        etiquetas.append(etiqueta)
        for v in bloque:
            representante[v] = etiqueta
    # π conserva la multiplicidad total, así que ninguna imagen se vuelve trivial
    instancias = tuple(EdgeInstance(i.id, i.multiset.imagen(representante)) for i in C.instances)
    return validate(MultiComplex(tuple(etiquetas), instancias, C.order))


def mc_partition_restrict(C: MultiComplex, p: SetPartition) -> MultiComplex:
    """C|∼ = Π C|ϖ: instancias cuyo soporte cabe en un solo bloque."""
    p.validar(C.vertex_set)
    bloque = p.bloque_de()
    instancias = tuple(i for i in C.instances if len({bloque[v] for v in i.support}) == 1)
    return _verificado(MultiComplex(C.vertices, instancias, _restringir_orden(C, instancias)))


def mc_admissible_partitions(C) -> list[SetPartition]:
    """
    E_c[C]: particiones cuyos bloques inducen multicomplejos conexos. Un
    camino une vértices consecutivos que comparten el soporte de una
    instancia, así que coincide con E_⊂[κ(C)].
    """
    return admissible_partitions(kappa(C), Modo.SUBSET)


def mc_components(C) -> tuple:
    """Componentes conexas de C como formas canónicas, en orden determinista."""
    C = _complejo(C)
    if C.is_empty:
        return ()
    componentes = [mc_restrict(C, componente.vertices) for componente in connected_components(kappa(C))]
    return tuple(sorted((canonical_mc(c) for c in componentes), key=CanonicalMultiComplex.sort_key))


@memoria_con_tope(maxsize=50_000, verificar=tope_de_multicomplejo)
def _coproducto_base(forma: CanonicalMultiComplex) -> LinearCombination:
    C = forma.as_multicomplex()
    n = forma.n
    terminos = {}
    for mascara in range(1 << n):
        I = [v for v in range(n) if mascara >> v & 1]
        J = [v for v in range(n) if not mascara >> v & 1]
        palabra = (canonical_mc(mc_restrict(C, I)), canonical_mc(mc_restrict(C, J)))
        terminos[palabra] = terminos.get(palabra, 0) + 1
    return LinearCombination(terminos)


@memoria_con_tope(maxsize=50_000, verificar=tope_de_multicomplejo)
def _contraccion_base(forma: CanonicalMultiComplex) -> LinearCombination:
    C = forma.as_multicomplex()
    terminos = {}
    particiones = mc_admissible_partitions(C)
    logger.debug("%s particiones admisibles para %s", len(particiones), forma)
    for p in particiones:
        palabra = (canonical_mc(mc_quotient(C, p)), canonical_mc(mc_partition_restrict(C, p)))
        terminos[palabra] = terminos.get(palabra, 0) + 1
    return LinearCombination(terminos)


def mc_coproduct(C) -> LinearCombination:
    """
    Δ(C) = Σ_{X ⊆ V(C)} C|X ⊗ C|(V(C) \\ X), canonizado y agregado.

    Raises:
        LimiteExcedido: Si C supera los topes de multicomplejos.
    """
    return _coproducto_base(_forma(C))


def mc_reduced_coproduct(C) -> LinearCombination:
    forma = _forma(C)
    if forma.is_empty:
        raise ValidationError("El coproducto reducido no está definido para el multicomplejo vacío", code='vacio')
    return _coproducto_base(forma) - LinearCombination.basis(forma, UNO) - LinearCombination.basis(UNO, forma)


def mc_delta_contract(C) -> LinearCombination:
    """δ(C) = Σ_{∼ ∈ E_c[C]} C/∼ ⊗ C|∼."""
    return _contraccion_base(_forma(C))


def mc_counit_eps(C) -> int:
    return int(C.is_empty)


def mc_counit_eps_delta(C) -> int:
    """ε_δ(C) = 1 si toda instancia tiene soporte de a lo sumo un vértice."""
    if isinstance(C, CanonicalMultiComplex):
        return int(all(len(items) <= 1 for items in C.instances))
    return int(all(len(i.support) <= 1 for i in C.instances))


def estructura_multicomplejos() -> Estructura:
    return Estructura(
        coproducto=_coproducto_base,
        contraccion=_contraccion_base,
        counidad=mc_counit_eps,
        counidad_delta=mc_counit_eps_delta,
        componentes=mc_components)


def mc_check_axioms(C, which: str, other=None) -> AxiomReport:
    """
    Comprueba una identidad de biálgebra doble sobre C (uno de MC_AXIOMAS).

    Raises:
        ValidationError: Si el axioma no existe para multicomplejos.
    """
    if which not in MC_AXIOMAS:
        raise ValidationError(f"Axioma desconocido para multicomplejos: {which}", code='axioma_desconocido')
    return comprobar_identidad(which, _forma(C), estructura_multicomplejos(),
                               otro=_forma(other) if other is not None else None)


def kappa_lc(lc: LinearCombination) -> LinearCombination:
    """κ aplicado en cada pata de cada palabra."""
    terminos = {}
    for palabra, coeficiente in lc.terms.items():
        imagen = tuple(_kappa_forma(f) for f in palabra)
        terminos[imagen] = terminos.get(imagen, 0) + coeficiente
    return LinearCombination(terminos)


def check_kappa_morphism(C, D=None) -> dict:
    """
    κ entrelaza las estructuras: κ(Δ(C)) = Δ^(⊂,⊂)(κ(C)), κ(δ(C)) = δ^(⊂)(κ(C))
    y, si se da D, κ(CD) = κ(C)κ(D).
    """
    forma = _forma(C)
    G = _kappa_forma(forma)
    imagen = LinearCombination.basis(G)
    resultado = {
        'coproduct': kappa_lc(_coproducto_base(forma)) == coproduct_lc(imagen, 'subset,subset'),
        'delta': kappa_lc(_contraccion_base(forma)) == delta_lc(imagen, Modo.SUBSET),
    }
    if D is not None:
        otra = _forma(D)
        resultado['product'] = _kappa_forma(forma.producto(otra)) == G.producto(_kappa_forma(otra))
    resultado['holds'] = all(resultado.values())
    return resultado


# ---------- Corolarios: polinomio cromático, antípoda, idempotente euleriano ----------

def mc_chromatic(C) -> RationalPolynomial:
    """P_⊂(κ(C)): el polinomio cromático de C pasa por κ."""
    return chromatic(kappa(C), 'subset')


@memoria_con_tope(maxsize=20_000, verificar=tope_de_multicomplejo)
def _antipoda_base(forma: CanonicalMultiComplex) -> LinearCombination:
    if forma.is_empty:
        return LinearCombination.basis(UNO)
    C = forma.as_multicomplex()
    terminos = {}
    for p in mc_admissible_partitions(C):
        coeficiente = orientation_sums(kappa(mc_quotient(C, p))).signed_all
        if coeficiente:
            palabra = (canonical_mc(mc_partition_restrict(C, p)),)
            terminos[palabra] = terminos.get(palabra, 0) + coeficiente
    return LinearCombination(terminos)


def mc_antipode(C) -> LinearCombination:
    """
    S(C) = Σ_{∼ ∈ E_c[C]} (Σ_{≤ acíclica de κ(C/∼)} (-1)^cl(≤))·C|∼.

    Example:
        mc_antipode({a,b}) -> -{a,b} + 2·(dos vértices aislados)
    """
    return _antipoda_base(_forma(C))


@memoria_con_tope(maxsize=20_000, verificar=tope_de_multicomplejo)
def _takeuchi_base(forma: CanonicalMultiComplex) -> LinearCombination:
    if forma.is_empty:
        return LinearCombination.basis(UNO)
    C = forma.as_multicomplex()
    terminos = {}
    # Δ es cocommutativo: cada partición aporta k! particiones ordenadas con el mismo producto
    for p in enumerate_set_partitions(C.vertices):
        palabra = (canonical_mc(mc_partition_restrict(C, p)),)
        terminos[palabra] = terminos.get(palabra, 0) + (-1) ** p.cl * factorial(p.cl)
    return LinearCombination(terminos)


def mc_takeuchi_antipode(C) -> LinearCombination:
    """Σ_{k≥1} (-1)^k Σ_{(I_1, ..., I_k)} C|I_1 ⋯ C|I_k sobre las particiones ordenadas de V(C)."""
    return _takeuchi_base(_forma(C))


@memoria_con_tope(maxsize=20_000, verificar=tope_de_multicomplejo)
def _euleriano_base(forma: CanonicalMultiComplex) -> LinearCombination:
    C = forma.as_multicomplex()
    terminos = {}
    for p in mc_admissible_partitions(C):
        coeficiente = spanning_counts(kappa(mc_quotient(C, p))).suma_alternada(1)
        if coeficiente:
            palabra = (canonical_mc(mc_partition_restrict(C, p)),)
            terminos[palabra] = terminos.get(palabra, 0) + coeficiente
    return LinearCombination(terminos)


def mc_eulerian(C) -> LinearCombination:
    """ϖ(C) = Σ_{∼ ∈ E_c[C]} (Σ_j (-1)^j N_{κ(C/∼)}(1, j))·C|∼."""
    return _euleriano_base(_forma(C))


def verify_mc_antipode(C) -> AxiomReport:
    """
    Compara la forma cerrada con Takeuchi y comprueba
    m∘(S⊗Id)∘Δ(C) = ε(C)·1 = m∘(Id⊗S)∘Δ(C).
    """
    forma = _forma(C)
    d = _coproducto_base(forma)
    unidad = LinearCombination.basis(UNO) if forma.is_empty else LinearCombination.zero()
    pares = [
        (_antipoda_base(forma), _takeuchi_base(forma)),
        (multiply_legs(apply_leg(d, 0, _antipoda_base)), unidad),
        (multiply_legs(apply_leg(d, 1, _antipoda_base)), unidad),
    ]
    for izquierda, derecha in pares:
        if izquierda != derecha:
            logger.info("Falla la antípoda sobre %s", forma)
            return AxiomReport('antipode', False, forma.to_json(), izquierda, derecha)
    return AxiomReport('antipode', True, forma.to_json())


def check_mc_eulerian(C) -> dict:
    """ϖ∘ϖ(C) = ϖ(C) y, si C no es vacío, ϖ(C) es primitivo."""
    forma = _forma(C)
    w = _euleriano_base(forma)
    idempotente = linear_map(w, _euleriano_base) == w
    uno = LinearCombination.basis(UNO)
    primitivo = (linear_map(w, _coproducto_base) - w.tensor(uno) - uno.tensor(w)).is_zero()
    return {'idempotent': idempotente, 'primitive': primitivo, 'holds': idempotente and primitivo}


# ---------- Inmersiones y generación aleatoria ----------

def mc_from_hypergraph(G: Hypergraph) -> MultiComplex:
    """Hipergrafo como multicomplejo: multiplicidades 1 y orden de inclusión."""
    aristas = G.aristas_ordenadas()
    instancias = tuple(
        EdgeInstance(f"e{i}", EdgeInstanceMultiset.of({v: 1 for v in arista}))
        for i, arista in enumerate(aristas, start=1))
    orden = frozenset(
        (a.id, b.id) for a in instancias for b in instancias if a.support < b.support)
    return _verificado(MultiComplex(G.vertices, instancias, orden))


def mc_from_simplicial_complex(vertices, caras) -> MultiComplex:
    """Complejo simplicial generado por `caras`: todas las subcaras de al menos dos vértices, orden de inclusión."""
    subcaras = frozenset(
        frozenset(s) for cara in caras for k in range(2, len(set(cara)) + 1) for s in combinations(set(cara), k))
    return mc_from_hypergraph(Hypergraph(tuple(vertices), subcaras))


def mc_from_multigraph(vertices, aristas) -> MultiComplex:
    """
    Multigrafo: una instancia por arista listada, sin relaciones. Un lazo
    (u, u) es el multiconjunto {u,u}.

    Raises:
        ValidationError: Si una arista no es un par.
    """
    instancias = []
    for i, arista in enumerate(aristas, start=1):
        if len(arista) != 2:
            raise ValidationError(f"La arista {arista} del multigrafo no es un par", code='arista_invalida')
        instancias.append(EdgeInstance(f"e{i}", EdgeInstanceMultiset.of(list(arista))))
    return _verificado(MultiComplex(tuple(vertices), tuple(instancias)))


def random_multicomplex(rng: random.Random, n: int, k: int, max_multiplicity: int = 2) -> MultiComplex:
    """
    Multicomplejo aleatorio con n vértices y k instancias. El orden se toma
    al azar entre los pares compatibles con la inclusión (los multiconjuntos
    iguales sólo se relacionan en un sentido) y se cierra transitivamente.

    Raises:
        LimiteExcedido: Si n o k superan los topes de multicomplejos.
    """
    verificar_multicomplejo(n, k)
    if n == 0 and k > 0:
        raise ValidationError("Un multicomplejo sin vértices no tiene instancias", code='generacion_invalida')
    vertices = tuple('abcdefghij'[:n])
    for _ in range(100):
        instancias = []
        for i in range(1, k + 1):
            soporte = rng.sample(vertices, rng.randint(1, n))
            multiplicidades = {v: rng.randint(1, max_multiplicity) for v in soporte}
            if sum(multiplicidades.values()) < 2:
                multiplicidades[soporte[0]] += 1
            instancias.append(EdgeInstance(f"e{i}", EdgeInstanceMultiset.of(multiplicidades)))
        candidatos = [
            (a.id, b.id) for a, b in permutations(instancias, 2)
            if a.multiset.incluido_en(b.multiset) and (a.multiset != b.multiset or a.id < b.id)]
        elegidos = [par for par in candidatos if rng.random() < 0.5]
        try:
            return MultiComplex.build(vertices, instancias, elegidos)
        except ValidationError:
            logger.debug("Se descarta un multicomplejo aleatorio que viola los axiomas")
    raise ValidationError("No se pudo generar un multicomplejo válido", code='generacion_fallida')


# ---------- Catálogo persistido ----------

def obtener_multicomplejo(nombre: str) -> MultiComplex | None:
    try:
        return MultiComplejo.objects.get(nombre=nombre).a_multicomplejo()
    except MultiComplejo.DoesNotExist:
        return None


def guardar_multicomplejo(nombre: str, C: MultiComplex, descripcion: str = '') -> MultiComplejo:
    """
    Guarda un multicomplejo en el catálogo.

    Raises:
        ValidationError: Si el nombre está vacío o ya existe.
    """
    if not nombre:
        raise ValidationError("El campo nombre es obligatorio")
    with transaction.atomic():
        if MultiComplejo.objects.filter(nombre=nombre).exists():
            raise ValidationError(f"El multicomplejo {nombre} ya existe en el catálogo")
        datos = C.to_json()
        return MultiComplejo.objects.create(
            nombre=nombre, vertices=datos['vertices'], instancias=datos['edges'], orden=datos['order'],
            descripcion=descripcion)

"""
Tipos de valor de los multicomplejos: multiconjuntos de vértices, instancias
de arista con identificador estable y el orden parcial entre ellas.

∅ y los singletons están siempre presentes con multiplicidad 1 y no se
almacenan; sus relaciones de orden se deducen de los soportes.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property

import networkx as nx
from django.core.exceptions import ValidationError

from hipergrafos.tipos import clave_etiqueta


def _es_multiplicidad(valor) -> bool:
    return isinstance(valor, int) and not isinstance(valor, bool) and valor >= 1


@dataclass(frozen=True)
class EdgeInstanceMultiset:
    """
    Multiconjunto de vértices: asociación vértice -> multiplicidad positiva.

    Attributes:
        items (tuple[tuple[etiqueta, int], ...]): Pares (vértice, multiplicidad),
            ordenados por etiqueta.
    """

    items: tuple

    def __post_init__(self):
        if not self.items:
            raise ValidationError("El multiconjunto no puede ser vacío", code='multiconjunto_vacio')
        vistos = set()
        for vertice, multiplicidad in self.items:
            if not _es_multiplicidad(multiplicidad):
                raise ValidationError(
                    f"Multiplicidad inválida para {vertice}: {multiplicidad}", code='multiplicidad_invalida')
            if vertice in vistos:
                raise ValidationError(f"El vértice {vertice} aparece dos veces", code='multiplicidad_invalida')
            vistos.add(vertice)
        object.__setattr__(self, 'items', tuple(sorted(self.items, key=lambda par: clave_etiqueta(par[0]))))

    @classmethod
    def of(cls, valores) -> EdgeInstanceMultiset:
        """Desde un dict {vértice: multiplicidad} o un iterable con repeticiones ('aac')."""
        if isinstance(valores, dict):
            return cls(tuple(valores.items()))
        return cls(tuple(Counter(valores).items()))

    @cached_property
    def support(self) -> frozenset:
        return frozenset(v for v, _ in self.items)

    @property
    def total(self) -> int:
        return sum(m for _, m in self.items)

    def multiplicity(self, vertice) -> int:
        return dict(self.items).get(vertice, 0)

    def incluido_en(self, otro: EdgeInstanceMultiset) -> bool:
        return all(otro.multiplicity(v) >= m for v, m in self.items)

    def imagen(self, funcion: dict) -> EdgeInstanceMultiset:
        """Multiconjunto imagen: las multiplicidades de vértices identificados se suman."""
        suma = Counter()
        for vertice, multiplicidad in self.items:
            suma[funcion[vertice]] += multiplicidad
        return EdgeInstanceMultiset(tuple(suma.items()))

    def to_json(self) -> dict:
        return {str(v): m for v, m in self.items}

    def __str__(self):
        return '{' + ','.join(str(v) for v, m in self.items for _ in range(m)) + '}'


@dataclass(frozen=True)
class EdgeInstance:
    id: str
    multiset: EdgeInstanceMultiset

    @property
    def support(self) -> frozenset:
        return self.multiset.support


# Representa un multicomplejo con su orden parcial entre instancias
@dataclass(frozen=True)
class MultiComplex:
    """
    Multicomplejo finito: vértices, instancias de arista (multiconjuntos de
    multiplicidad total ≥ 2) y un orden parcial entre instancias.

    Attributes:
        vertices (tuple): Etiquetas distintas de los vértices.
        instances (tuple[EdgeInstance, ...]): Instancias almacenadas.
        order (frozenset[tuple[str, str]]): Relación estricta completa
            (id menor, id mayor), transitivamente cerrada.

    Raises:
        ValidationError: Si la estructura es inválida. Los axiomas del orden
            se comprueban con validar_axiomas().
    """

    vertices: tuple
    instances: tuple = ()
    order: frozenset = frozenset()

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValidationError("Los vértices del multicomplejo deben ser distintos", code='vertices_repetidos')
        conjunto = set(self.vertices)
        ids = set()
        for instancia in self.instances:
            if instancia.id in ids:
                raise ValidationError(f"Identificador de arista repetido: {instancia.id}", code='identificador_repetido')
            ids.add(instancia.id)
            if not instancia.support <= conjunto:
                raise ValidationError(
                    f"La arista {instancia.id} usa vértices ajenos al multicomplejo", code='arista_fuera')
            if instancia.multiset.total < 2:
                raise ValidationError(
                    f"La arista {instancia.id} es trivial y no se almacena", code='arista_trivial')
        for menor, mayor in self.order:
            if menor not in ids or mayor not in ids:
                raise ValidationError(f"El orden menciona una arista inexistente: {menor} ≤ {mayor}", code='orden_invalido')
            if menor == mayor:
                raise ValidationError("El orden se guarda sin los pares reflexivos", code='orden_invalido')

    @classmethod
    def build(cls, vertices, instances, covers=()) -> MultiComplex:
        """
        Construye el multicomplejo cerrando transitivamente las relaciones
        dadas y comprobando los axiomas.

        Raises:
            ValidationError: code='axioma' si el orden no es antisimétrico o
                no respeta la inclusión de multiconjuntos.
        """
        grafo = nx.DiGraph()
        grafo.add_nodes_from(i.id for i in instances)
        grafo.add_edges_from(covers)
        if not nx.is_directed_acyclic_graph(grafo):
            raise ValidationError("Axioma de antisimetría: el orden tiene un ciclo", code='axioma')
        orden = frozenset(nx.transitive_closure_dag(grafo).edges())
        complejo = cls(tuple(vertices), tuple(instances), orden)
        complejo.validar_axiomas()
        return complejo

    def validar_axiomas(self) -> None:
        """
        Axiomas del orden entre instancias: e ≤ f implica e ⊆ f como
        multiconjuntos, antisimetría y transitividad.

        Raises:
            ValidationError: code='axioma', con el axioma que falla en el mensaje.
        """
        for menor, mayor in self.order:
            if not self.por_id[menor].multiset.incluido_en(self.por_id[mayor].multiset):
                raise ValidationError(
                    f"Axioma de inclusión: {menor} ≤ {mayor} pero no {self.por_id[menor].multiset} ⊆ "
                    f"{self.por_id[mayor].multiset}", code='axioma')
            if (mayor, menor) in self.order:
                raise ValidationError(f"Axioma de antisimetría: {menor} ≤ {mayor} ≤ {menor}", code='axioma')
        for a, b in self.order:
            for c, d in self.order:
                if b == c and (a, d) not in self.order:
                    raise ValidationError(f"Axioma de transitividad: falta {a} ≤ {d}", code='axioma')

    @cached_property
    def por_id(self) -> dict:
        return {instancia.id: instancia for instancia in self.instances}

    @cached_property
    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    def le(self, e: str, f: str) -> bool:
        return e == f or (e, f) in self.order

    def covers(self) -> list[tuple[str, str]]:
        """Pares de cobertura del orden, en orden determinista."""
        grafo = nx.DiGraph()
        grafo.add_nodes_from(self.por_id)
        grafo.add_edges_from(self.order)
        return sorted(nx.transitive_reduction(grafo).edges())

    def to_json(self) -> dict:
        return {
            'vertices': list(self.vertices),
            'edges': [{'id': i.id, 'multiset': i.multiset.to_json()} for i in self.instances],
            'order': [list(par) for par in self.covers()],
        }

    @classmethod
    def from_json(cls, datos) -> MultiComplex:
        """
        Lee {"vertices": [...], "edges": [{"id", "multiset"}], "order": [[menor, mayor]]}.

        El orden puede mencionar {"empty": true} o {"singleton": etiqueta};
        esas relaciones se validan contra los soportes y se descartan.

        Raises:
            ValidationError: code='esquema' o code='axioma'.
        """
        if not isinstance(datos, dict) or not isinstance(datos.get('vertices'), list):
            raise ValidationError("Se esperaba un objeto con la lista 'vertices'", code='esquema')
        vertices = tuple(datos['vertices'])
        etiquetas = {str(v): v for v in vertices}
        instancias = []
        for arista in datos.get('edges', []):
            if not isinstance(arista, dict) or not isinstance(arista.get('id'), str) \
                    or not isinstance(arista.get('multiset'), dict):
                raise ValidationError(f"Arista mal formada: {arista}", code='esquema')
            multiplicidades = {}
            for etiqueta, multiplicidad in arista['multiset'].items():
                if etiqueta not in etiquetas:
                    raise ValidationError(
                        f"La arista {arista['id']} usa el vértice {etiqueta}, que no existe", code='arista_fuera')
                multiplicidades[etiquetas[etiqueta]] = multiplicidad
            instancias.append(EdgeInstance(arista['id'], EdgeInstanceMultiset.of(multiplicidades)))

        por_id = {i.id: i for i in instancias}
        coberturas = []
        for par in datos.get('order', []):
            if not isinstance(par, list) or len(par) != 2:
                raise ValidationError(f"Relación de orden mal formada: {par}", code='esquema')
            menor, mayor = par
            if isinstance(menor, str) and isinstance(mayor, str):
                if menor not in por_id or mayor not in por_id:
                    raise ValidationError(f"El orden menciona una arista inexistente: {par}", code='orden_invalido')
                coberturas.append((menor, mayor))
            else:
                _validar_relacion_trivial(menor, mayor, por_id, etiquetas)
        return cls.build(vertices, instancias, coberturas)

    def __str__(self):
        aristas = ', '.join(f"{i.id}={i.multiset}" for i in self.instances)
        orden = ', '.join(f"{a}<{b}" for a, b in self.covers())
        return f"MC(V={list(self.vertices)}, E=[{aristas}]" + (f", {orden})" if orden else ")")


def _validar_relacion_trivial(menor, mayor, por_id: dict, etiquetas: dict) -> None:
    """Relaciones con ∅ o con singletons: fijadas por los soportes."""
    def _leer(extremo):
        if isinstance(extremo, dict) and extremo.get('empty') is True:
            return 'empty', None
        if isinstance(extremo, dict) and 'singleton' in extremo:
            if str(extremo['singleton']) not in etiquetas:
                raise ValidationError(f"Singleton de un vértice inexistente: {extremo}", code='arista_fuera')
            return 'singleton', etiquetas[str(extremo['singleton'])]
        if isinstance(extremo, str) and extremo in por_id:
            return 'instance', por_id[extremo]
        raise ValidationError(f"Extremo de orden mal formado: {extremo}", code='esquema')

    tipo_menor, menor = _leer(menor)
    tipo_mayor, mayor = _leer(mayor)
    if tipo_menor == 'empty':
        return
    if tipo_menor == 'instance' or tipo_mayor == 'empty':
        raise ValidationError("Axioma de inclusión: una arista no cabe en ∅ ni en un singleton", code='axioma')
    if tipo_mayor == 'singleton' and menor != mayor:
        raise ValidationError(f"Axioma de inclusión: {{{menor}}} ≤ {{{mayor}}}", code='axioma')
    if tipo_mayor == 'instance' and menor not in mayor.support:
        raise ValidationError(
            f"Axioma de soporte: {{{menor}}} ≤ {mayor.id} pero {menor} ∉ supp({mayor.id})", code='axioma')


# Clase de isomorfismo de un multicomplejo
@dataclass(frozen=True)
class CanonicalMultiComplex:
    """
    Forma canónica de un multicomplejo, utilizable como clave de diccionario.

    Attributes:
        n (int): Número de vértices (etiquetados 0..n-1).
        instances (tuple): Multiconjuntos como tuplas ordenadas de (vértice, multiplicidad).
        order (tuple): Pares estrictos (i, j) de índices de instancias, ordenados.
    """

    n: int
    instances: tuple = ()
    order: tuple = ()

    @property
    def is_empty(self) -> bool:
        return self.n == 0

    @property
    def vertex_count(self) -> int:
        return self.n

    def sort_key(self) -> tuple:
        return (self.n, self.instances, self.order)

    def as_multicomplex(self) -> MultiComplex:
        instancias = tuple(
            EdgeInstance(f"e{i}", EdgeInstanceMultiset(items)) for i, items in enumerate(self.instances))
        orden = frozenset((f"e{i}", f"e{j}") for i, j in self.order)
        return MultiComplex(tuple(range(self.n)), instancias, orden)

    def producto(self, otro: CanonicalMultiComplex) -> CanonicalMultiComplex:
        """Unión disjunta canonizada."""
        from .canonico import forma_canonica_multicomplejo

        desplazadas = tuple(tuple((v + self.n, m) for v, m in items) for items in otro.instances)
        k = len(self.instances)
        orden = self.order + tuple((i + k, j + k) for i, j in otro.order)
        return forma_canonica_multicomplejo(self.n + otro.n, self.instances + desplazadas, frozenset(orden))

    def to_json(self) -> dict:
        return self.as_multicomplex().to_json()

    def __str__(self):
        if self.n == 0:
            return "1"
        aristas = ', '.join(
            '{' + ','.join(str(v) for v, m in items for _ in range(m)) + '}' for items in self.instances)
        orden = ', '.join(f"e{i}<e{j}" for i, j in self.order)
        return f"C{self.n}[{aristas}" + (f"; {orden}]" if orden else "]")

from django.db import models

from .tipos import Hypergraph


# Representa un hipergrafo con nombre del catálogo de ejemplos
class Hipergrafo(models.Model):
    """
    Modelo que representa un hipergrafo guardado en el catálogo.

    Permite referirse a ejemplos frecuentes (T_n, grafos completos, caminos)
    por su nombre desde la consola, con la forma `catalogo:<nombre>`.

    Attributes:
        nombre (CharField): Nombre único del hipergrafo (ej: 'T_4').
        vertices (JSONField): Lista de etiquetas de vértices.
        aristas (JSONField): Lista de aristas no triviales (listas de etiquetas).
        descripcion (CharField): Descripción libre.
        created_at (DateTimeField): Fecha de creación.

    Methods:
        a_hipergrafo: Construye el valor de dominio Hypergraph.
        __str__: Representación legible.

    Meta:
        verbose_name: Nombre singular para la interfaz administrativa.
        ordering: Orden por nombre.
    """

    nombre = models.CharField(
        max_length=80, unique=True,
        help_text="Nombre único del hipergrafo (ej: 'T_4')")
    vertices = models.JSONField(
        help_text="Lista de etiquetas de los vértices")
    aristas = models.JSONField(
        default=list,
        help_text="Aristas no triviales como listas de etiquetas")
    descripcion = models.CharField(
        max_length=250, blank=True,
        help_text="Descripción del hipergrafo")
    created_at = models.DateTimeField(
        auto_now_add=True,
        help_text="Fecha de creación automática al guardar")

    def a_hipergrafo(self) -> Hypergraph:
        return Hypergraph(
            tuple(self.vertices),
            frozenset(frozenset(arista) for arista in self.aristas))

    def __str__(self):
        return f"{self.nombre} ({len(self.vertices)} vértices, {len(self.aristas)} aristas)"

    class Meta:
        verbose_name = "Hipergrafo"
        verbose_name_plural = "Hipergrafos"
        ordering = ["nombre"]

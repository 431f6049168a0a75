from django.db import models

from .tipos import MultiComplex


# Representa un multicomplejo con nombre del catálogo de ejemplos
class MultiComplejo(models.Model):
    """
    Modelo que representa un multicomplejo guardado en el catálogo.

    Attributes:
        nombre (CharField): Nombre único (ej: 'ejemplo_C').
        vertices (JSONField): Lista de etiquetas de vértices.
        instancias (JSONField): Lista de {"id": str, "multiset": {etiqueta: multiplicidad}}.
        orden (JSONField): Pares de cobertura [id menor, id mayor].
        descripcion (CharField): Descripción libre.
        created_at (DateTimeField): Fecha de creación.

    Methods:
        a_multicomplejo: Construye y valida el valor de dominio MultiComplex.
    """

    nombre = models.CharField(
        max_length=80, unique=True,
        help_text="Nombre único del multicomplejo (ej: 'ejemplo_C')")
    vertices = models.JSONField(
        help_text="Lista de etiquetas de los vértices")
    instancias = models.JSONField(
        default=list,
        help_text="Instancias de arista con identificador y multiconjunto")
    orden = models.JSONField(
        default=list,
        help_text="Pares de cobertura del orden entre instancias")
    descripcion = models.CharField(
        max_length=250, blank=True,
        help_text="Descripción del multicomplejo")
    created_at = models.DateTimeField(
        auto_now_add=True,
        help_text="Fecha de creación automática al guardar")

    def a_multicomplejo(self) -> MultiComplex:
        return MultiComplex.from_json({'vertices': self.vertices, 'edges': self.instancias, 'order': self.orden})

    def __str__(self):
        return f"{self.nombre} ({len(self.vertices)} vértices, {len(self.instancias)} instancias)"

    class Meta:
        verbose_name = "Multicomplejo"
        verbose_name_plural = "Multicomplejos"
        ordering = ["nombre"]

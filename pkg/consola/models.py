from django.db import models


# Registro opcional de una ejecución de la consola (--guardar)
class ResultadoCalculo(models.Model):
    """
    Modelo que guarda un cálculo hecho desde la consola.

    Attributes:
        comando (CharField): Comando ejecutado (ej: 'chromatic').
        entrada (TextField): Entrada tal como se recibió (ruta, literal o catálogo).
        opciones (JSONField): Opciones del trabajo.
        salida (TextField): Texto escrito en la salida estándar.
        codigo_salida (IntegerField): 0 éxito, 1 verificación fallida,
            2 error de entrada, 3 límite excedido.
        created_at (DateTimeField): Fecha de ejecución.
    """

    comando = models.CharField(
        max_length=40,
        help_text="Comando ejecutado")
    entrada = models.TextField(
        blank=True,
        help_text="Ruta, literal JSON o referencia al catálogo")
    opciones = models.JSONField(
        default=dict,
        help_text="Opciones del trabajo")
    salida = models.TextField(
        blank=True,
        help_text="Salida estándar del comando")
    codigo_salida = models.IntegerField(
        default=0,
        help_text="Código de salida del proceso")
    created_at = models.DateTimeField(
        auto_now_add=True,
        help_text="Fecha de ejecución")

    def __str__(self):
        return f"{self.comando} -> {self.codigo_salida} ({self.created_at:%Y-%m-%d %H:%M})"

    class Meta:
        verbose_name = "Resultado de cálculo"
        verbose_name_plural = "Resultados de cálculo"
        ordering = ["-created_at"]

from django.apps import AppConfig


class ConsolaConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'consola'
    verbose_name = 'Consola'

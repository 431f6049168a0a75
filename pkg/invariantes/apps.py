from django.apps import AppConfig


class InvariantesConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'invariantes'
    verbose_name = 'Invariantes cromáticos'

from django.apps import AppConfig


class MulticomplejosConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'multicomplejos'
    verbose_name = 'Multicomplejos'

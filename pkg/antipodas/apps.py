from django.apps import AppConfig


class AntipodasConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'antipodas'
    verbose_name = 'Antípodas'

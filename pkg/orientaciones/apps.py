from django.apps import AppConfig


class OrientacionesConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'orientaciones'
    verbose_name = 'Orientaciones acíclicas'

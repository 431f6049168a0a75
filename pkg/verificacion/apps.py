from django.apps import AppConfig


class VerificacionConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'verificacion'
    verbose_name = 'Verificación'

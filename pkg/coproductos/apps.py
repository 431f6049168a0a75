from django.apps import AppConfig


class CoproductosConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'coproductos'
    verbose_name = 'Coproductos'

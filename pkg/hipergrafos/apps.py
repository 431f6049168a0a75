from django.apps import AppConfig


class HipergrafosConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'hipergrafos'
    verbose_name = 'Hipergrafos'

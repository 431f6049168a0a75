"""
Django settings for proyecto_hipergrafos project.

Generated by 'django-admin startproject' using Django 5.2.1.

For more information on this file, see
https://docs.djangoproject.com/en/5.2/topics/settings/

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

import os
from dotenv import load_dotenv
from pathlib import Path
import dj_database_url

load_dotenv() # Carga variables de entorno desde .env

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# SECURITY WARNING: keep the secret key used in production secret!
# El proyecto no sirve páginas web; la clave sólo se exige por Django.
SECRET_KEY = os.getenv('SECRET_KEY', 'django-insecure-calculo-local-hipergrafos')
DEBUG = os.getenv('DEBUG', 'False') == 'True'

ALLOWED_HOSTS = []

# Application definition

INSTALLED_APPS = [
    # Apps del proyecto
    'hipergrafos.apps.HipergrafosConfig',
    'algebra.apps.AlgebraConfig',
    'coproductos.apps.CoproductosConfig',
    'invariantes.apps.InvariantesConfig',
    'orientaciones.apps.OrientacionesConfig',
    'antipodas.apps.AntipodasConfig',
    'multicomplejos.apps.MulticomplejosConfig',
    'verificacion.apps.VerificacionConfig',
    'consola.apps.ConsolaConfig',
]


# Database
# https://docs.djangoproject.com/en/5.2/ref/settings/#databases

# SQLite local por defecto; DATABASE_URL permite otro motor
DATABASES = {
    'default': dj_database_url.config(
        default=os.getenv('DATABASE_URL', f"sqlite:///{BASE_DIR / 'db.sqlite3'}"),
        conn_max_age=600,
    )
}


# Internationalization
# https://docs.djangoproject.com/en/5.2/topics/i18n/

LANGUAGE_CODE = 'es-es'
TIME_ZONE = 'America/Santiago'
USE_I18N = True
USE_TZ = True

# Default primary key field type
# https://docs.djangoproject.com/en/5.2/ref/settings/#default-auto-field

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# ----- Límites de enumeración -----
# Se leen en tiempo de llamada vía django.conf.settings; --max-vertices los reemplaza por trabajo

HIPERGRAFOS_MAX_VERTICES = int(os.getenv('HIPERGRAFOS_MAX_VERTICES', '10'))  # formas canónicas y particiones
HIPERGRAFOS_MAX_ORIENTACION = int(os.getenv('HIPERGRAFOS_MAX_ORIENTACION', '7'))  # cuasi-órdenes
HIPERGRAFOS_LIMITE_TRABAJO = int(os.getenv('HIPERGRAFOS_LIMITE_TRABAJO', str(10**7)))  # N^|V| y 2^|E+|
MULTICOMPLEJOS_MAX_VERTICES = int(os.getenv('MULTICOMPLEJOS_MAX_VERTICES', '6'))
MULTICOMPLEJOS_MAX_INSTANCIAS = int(os.getenv('MULTICOMPLEJOS_MAX_INSTANCIAS', '6'))
HIPERGRAFOS_SEMILLA = int(os.getenv('HIPERGRAFOS_SEMILLA', '0'))  # semilla por defecto de la consola
# -----------------------------------


# Logging
# https://docs.djangoproject.com/en/5.2/topics/logging/

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'simple': {
            'format': '{levelname} {asctime} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': os.getenv('LOG_LEVEL', 'WARNING'),
    },
}

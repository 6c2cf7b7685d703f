from django.apps import AppConfig


class BellUmbraConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'bellumbra'
    verbose_name = 'Bell umbra and real-rootedness'

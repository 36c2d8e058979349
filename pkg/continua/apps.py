from django.apps import AppConfig


class ContinuaConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'continua'
    verbose_name = 'Exact models: discrete circles, rational circle, lexicographic continua'

from django.apps import AppConfig


class PropsuiteConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'propsuite'
    verbose_name = 'Seeded property suite'

from django.apps import AppConfig


class DominationConfig(AppConfig):
    name = 'domination'

from django.apps import AppConfig


class ConjectureConfig(AppConfig):
    name = 'conjecture'

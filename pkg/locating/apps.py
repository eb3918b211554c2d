from django.apps import AppConfig


class LocatingConfig(AppConfig):
    name = 'locating'

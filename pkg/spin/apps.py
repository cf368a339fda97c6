from django.apps import AppConfig


class SpinConfig(AppConfig):
    name = 'spin'
    verbose_name = 'Spin symbols of degree-1 primes'

from django.apps import AppConfig


class ArithCoreConfig(AppConfig):
    name = 'arith_core'
    verbose_name = 'Modular arithmetic and primes'

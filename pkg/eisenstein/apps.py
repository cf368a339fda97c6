from django.apps import AppConfig


class EisensteinConfig(AppConfig):
    name = 'eisenstein'
    verbose_name = 'Eisenstein integers and cubic residue symbols'

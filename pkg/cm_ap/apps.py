from django.apps import AppConfig


class CmApConfig(AppConfig):
    name = 'cm_ap'
    verbose_name = 'Traces of Frobenius of CM curves'

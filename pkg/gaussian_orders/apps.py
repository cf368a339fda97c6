from django.apps import AppConfig


class GaussianOrdersConfig(AppConfig):
    name = 'gaussian_orders'
    verbose_name = 'Imaginary quadratic orders'

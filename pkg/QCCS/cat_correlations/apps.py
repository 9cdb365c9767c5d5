from django.apps import AppConfig


class CatCorrelationsConfig(AppConfig):
    name = 'cat_correlations'
    verbose_name = "Quasi-Bell cat state correlations"

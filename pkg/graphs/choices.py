from django.db import models
from django.utils.translation import gettext_lazy as _


class Verdict(models.TextChoices):
    HOLDS = 'HOLDS', _('Holds')
    VIOLATED = 'VIOLATED', _('Violated')
    NOT_APPLICABLE = 'NOT_APPLICABLE', _('Not applicable')


class Regime(models.TextChoices):
    CONNECTED = 'CONNECTED', _('Connected graphs')
    ALL = 'ALL', _('All graphs, disconnected included')
    SUPPLIED = 'SUPPLIED', _('Supplied graph6 family')

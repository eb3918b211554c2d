import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'partialdom.settings')
django.setup()

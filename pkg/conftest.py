import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'QCCS.settings')
django.setup()

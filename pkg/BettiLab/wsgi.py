"""
WSGI entry point for serving the BettiLab JSON endpoints.
"""

import os

from django.core.wsgi import get_wsgi_application

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'BettiLab.settings')

application = get_wsgi_application()

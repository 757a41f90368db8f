from django.contrib import admin
from django.urls import path, include

urlpatterns = [
    path('admin/', admin.site.urls),
    path('api/', include('algebra.urls')),
]
admin.site.site_header = "BettiLab"
admin.site.site_title = "BettiLab"
admin.site.index_title = "Verification runs"

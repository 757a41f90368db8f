from django.urls import path
from . import views

urlpatterns = [
    path('params/', views.params_view, name='params'),
    path('betti/', views.betti_view, name='betti'),
    path('pdreg/', views.pdreg_view, name='pdreg'),
    path('homology/', views.homology_view, name='homology'),
    path('runs/', views.runs_view, name='runs'),
]

from django.contrib import admin
from .models import VerificationRun, InstanceReport


class InstanceReportInline(admin.TabularInline):
    model = InstanceReport
    extra = 0
    fields = ('section', 'label', 'status', 'duration_seconds')
    readonly_fields = ('section', 'label', 'status', 'duration_seconds')
    can_delete = False


@admin.register(VerificationRun)
class VerificationRunAdmin(admin.ModelAdmin):
    list_display = (
        'id', 'min_n', 'max_n', 'fields', 'total', 'matched', 'mismatched',
        'incomplete', 'status', 'duration_seconds', 'created_at'
    )
    list_filter = ('status', 'created_at')
    readonly_fields = ('created_at',)
    date_hierarchy = 'created_at'
    inlines = [InstanceReportInline]

    fieldsets = (
        ('Sweep', {
            'fields': ('min_n', 'max_n', 'fields', 'status')
        }),
        ('Counts', {
            'fields': ('total', 'matched', 'mismatched', 'incomplete', 'skipped_invalid', 'duration_seconds')
        }),
        ('Summary', {
            'fields': ('summary',),
            'classes': ('collapse',)
        }),
        ('Timestamps', {
            'fields': ('created_at',),
            'classes': ('collapse',)
        }),
    )


@admin.register(InstanceReport)
class InstanceReportAdmin(admin.ModelAdmin):
    list_display = ('label', 'section', 'get_run', 'status', 'get_failed_claims', 'duration_seconds')
    list_filter = ('section', 'status')
    search_fields = ('label',)

    def get_run(self, obj):
        return obj.run_id
    get_run.short_description = 'Run'

    def get_failed_claims(self, obj):
        return ', '.join(obj.failed_claims()) or '-'
    get_failed_claims.short_description = 'Failed claims'

    def get_queryset(self, request):
        queryset = super().get_queryset(request)
        return queryset.select_related('run')

# Generated by Django 5.2.6 on 2026-10-19 10:12

import django.db.models.deletion
from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='VerificationRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('created_at', models.DateTimeField(auto_now_add=True)),
                ('min_n', models.IntegerField()),
                ('max_n', models.IntegerField()),
                ('fields', models.JSONField(default=list)),
                ('total', models.IntegerField(default=0)),
                ('matched', models.IntegerField(default=0)),
                ('mismatched', models.IntegerField(default=0)),
                ('skipped_invalid', models.IntegerField(default=0)),
                ('duration_seconds', models.FloatField(default=0.0)),
                ('status', models.CharField(choices=[('passed', 'Passed'), ('failed', 'Failed')], max_length=20)),
                ('summary', models.JSONField(default=dict)),
            ],
            options={
                'verbose_name': 'Verification Run',
                'verbose_name_plural': 'Verification Runs',
                'db_table': 'verification_runs',
                'ordering': ['-created_at'],
            },
        ),
        migrations.CreateModel(
            name='InstanceReport',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('section', models.CharField(choices=[('cycle', 'Path ideal of a cycle'), ('e_complex', 'Run-sequence complement'), ('line', 'Path ideal of a line')], max_length=20)),
                ('label', models.CharField(max_length=200)),
                ('parameters', models.JSONField(default=dict)),
                ('claims', models.JSONField(default=list)),
                ('matched', models.BooleanField(default=True)),
                ('duration_seconds', models.FloatField(default=0.0)),
                ('run', models.ForeignKey(on_delete=django.db.models.deletion.CASCADE, related_name='instances', to='reports.verificationrun')),
            ],
            options={
                'verbose_name': 'Instance Report',
                'verbose_name_plural': 'Instance Reports',
                'db_table': 'instance_reports',
                'ordering': ['run', 'id'],
            },
        ),
    ]

# Generated by Django 5.2.6 on 2026-10-19 14:20

from django.db import migrations, models


class Migration(migrations.Migration):

    dependencies = [
        ("reports", "0001_initial"),
    ]

    operations = [
        migrations.AddField(
            model_name="verificationrun",
            name="incomplete",
            field=models.IntegerField(default=0),
        ),
        migrations.AlterField(
            model_name="verificationrun",
            name="status",
            field=models.CharField(
                choices=[
                    ("passed", "Passed"),
                    ("failed", "Failed"),
                    ("incomplete", "Incomplete"),
                ],
                max_length=20,
            ),
        ),
        migrations.AddField(
            model_name="instancereport",
            name="status",
            field=models.CharField(
                choices=[
                    ("match", "Match"),
                    ("mismatch", "Mismatch"),
                    ("incomplete", "Over budget"),
                ],
                default="match",
                max_length=20,
            ),
        ),
    ]

# Generated by Django 5.2.10 on 2026-10-19 09:00

from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='SuiteRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('suite_name', models.CharField(db_index=True, max_length=64)),
                ('nmax', models.PositiveIntegerField()),
                ('seed', models.IntegerField(default=0)),
                ('all_passed', models.BooleanField()),
                ('instance_count', models.PositiveIntegerField(default=0)),
                ('failure_count', models.PositiveIntegerField(default=0)),
                ('discrepancy_count', models.PositiveIntegerField(default=0)),
                ('elapsed_seconds', models.FloatField()),
                ('report', models.JSONField()),
                ('created_at', models.DateTimeField(auto_now_add=True)),
            ],
            options={
                'verbose_name': 'Suite run',
                'verbose_name_plural': 'Suite runs',
                'ordering': ['-created_at', '-id'],
            },
        ),
    ]

# Generated by Django 5.2.8 on 2025-10-18 09:14

from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = []

    operations = [
        migrations.CreateModel(
            name="SearchRun",
            fields=[
                (
                    "id",
                    models.BigAutoField(
                        auto_created=True,
                        primary_key=True,
                        serialize=False,
                        verbose_name="ID",
                    ),
                ),
                (
                    "ground_size",
                    models.PositiveSmallIntegerField(
                        help_text="Number of points in the ground set"
                    ),
                ),
                (
                    "flimsy_n",
                    models.PositiveSmallIntegerField(
                        help_text="n of the n-flimsy property searched for"
                    ),
                ),
                (
                    "axioms",
                    models.CharField(
                        help_text="Comma-separated axiom ids, e.g. C1,C2,C3,C4",
                        max_length=16,
                    ),
                ),
                (
                    "pruning",
                    models.CharField(
                        help_text="raw, definitional or theorem-assisted", max_length=20
                    ),
                ),
                (
                    "examined",
                    models.BigIntegerField(
                        default=0, help_text="Candidate families accounted for"
                    ),
                ),
                (
                    "checked",
                    models.BigIntegerField(
                        default=0, help_text="Candidate families actually tested"
                    ),
                ),
                (
                    "exhausted",
                    models.BooleanField(
                        default=False,
                        help_text="Whether every candidate was accounted for",
                    ),
                ),
                (
                    "found",
                    models.JSONField(
                        blank=True,
                        help_text="The n-flimsy family found, if any",
                        null=True,
                    ),
                ),
                (
                    "created_at",
                    models.DateTimeField(
                        auto_now_add=True, help_text="When the run finished"
                    ),
                ),
            ],
            options={
                "verbose_name": "Search Run",
                "verbose_name_plural": "Search Runs",
                "ordering": ["-created_at"],
            },
        ),
    ]

from django.db import models


class SearchRun(models.Model):
    """Ledger of finished flimsy searches, so exhausted configurations are not re-run"""
    ground_size = models.PositiveSmallIntegerField(help_text="Number of points in the ground set")
    flimsy_n = models.PositiveSmallIntegerField(help_text="n of the n-flimsy property searched for")
    axioms = models.CharField(max_length=16, help_text="Comma-separated axiom ids, e.g. C1,C2,C3,C4")
    pruning = models.CharField(max_length=20, help_text="raw, definitional or theorem-assisted")
    examined = models.BigIntegerField(default=0, help_text="Candidate families accounted for")
    checked = models.BigIntegerField(default=0, help_text="Candidate families actually tested")
    exhausted = models.BooleanField(default=False, help_text="Whether every candidate was accounted for")
    found = models.JSONField(null=True, blank=True, help_text="The n-flimsy family found, if any")
    created_at = models.DateTimeField(auto_now_add=True, help_text="When the run finished")

    class Meta:
        ordering = ['-created_at']
        verbose_name = "Search Run"
        verbose_name_plural = "Search Runs"

    def __str__(self):
        verdict = 'found' if self.found else ('none' if self.exhausted else 'incomplete')
        return f"{self.flimsy_n}-flimsy on {self.ground_size} points ({self.pruning}, {self.axioms}): {verdict}"

    @classmethod
    def for_config(cls, config):
        return cls.objects.filter(
            ground_size=config.ground_size,
            flimsy_n=config.flimsy_n,
            axioms=','.join(config.axioms),
            pruning=config.pruning,
        )

    @classmethod
    def record(cls, result):
        data = result.to_dict()
        return cls.objects.create(
            ground_size=data['ground_size'],
            flimsy_n=data['flimsy_n'],
            axioms=','.join(data['axioms']),
            pruning=data['pruning'],
            examined=data['examined'],
            checked=data['checked'],
            exhausted=data['exhausted'],
            found=data['found'],
        )

    def to_dict(self):
        return {
            'ground_size': self.ground_size,
            'flimsy_n': self.flimsy_n,
            'axioms': self.axioms.split(',') if self.axioms else [],
            'pruning': self.pruning,
            'examined': self.examined,
            'checked': self.checked,
            'exhausted': self.exhausted,
            'found': self.found,
        }

from django.db import models


class SuiteRun(models.Model):
    """
    One recorded run of a verification suite (``umbral verify --record``).
    """
    suite_name = models.CharField(max_length=64, db_index=True)
    nmax = models.PositiveIntegerField()
    seed = models.IntegerField(default=0)
    all_passed = models.BooleanField()
    instance_count = models.PositiveIntegerField(default=0)
    failure_count = models.PositiveIntegerField(default=0)
    discrepancy_count = models.PositiveIntegerField(default=0)
    elapsed_seconds = models.FloatField()
    report = models.JSONField()  # SuiteReport.to_dict()
    created_at = models.DateTimeField(auto_now_add=True)

    class Meta:
        ordering = ['-created_at', '-id']
        verbose_name = 'Suite run'
        verbose_name_plural = 'Suite runs'

    def __str__(self):
        status = 'passed' if self.all_passed else 'failed'
        return f"{self.suite_name} (nmax={self.nmax}) {status}"

    @classmethod
    def record(cls, report) -> 'SuiteRun':
        return cls.objects.create(
            suite_name=report.suite_name,
            nmax=report.nmax,
            seed=report.seed,
            all_passed=report.all_passed,
            instance_count=len(report.instances),
            failure_count=len(report.failures),
            discrepancy_count=len(report.discrepancies),
            elapsed_seconds=report.elapsed,
            report=report.to_dict(),
        )

    def summary(self) -> dict:
        return {
            'id': self.id,
            'suite_name': self.suite_name,
            'nmax': self.nmax,
            'seed': self.seed,
            'all_passed': self.all_passed,
            'instance_count': self.instance_count,
            'failure_count': self.failure_count,
            'discrepancy_count': self.discrepancy_count,
            'elapsed_seconds': self.elapsed_seconds,
            'created_at': self.created_at.isoformat(),
        }

import io

from django.core.management.base import CommandError

from ...rendering import write_document, write_rows
from ...verification import run_verification
from ..base import EXIT_VERIFICATION_FAILED, CorrelationCommand, positive_int

CHECK_COLUMNS = ['name', 'tolerance', 'max_residual', 'passed']


class Command(CorrelationCommand):
    help = "Run every oracle-versus-closed-form check and print a summary."

    default_format = 'json'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--grid', type=positive_int, default=None,
                            help="Points per axis instead of the default grids.")
        parser.add_argument('--paper-verbatim', action='store_true',
                            help="Also measure each published formula against the consistent one.")

    def run(self, options):
        report = run_verification(
            points=options['grid'],
            paper_verbatim=bool(options['paper_verbatim']),
            jobs=options['jobs'],
        )
        document = report.as_dict()

        buffer = io.StringIO()
        if options['format'] == 'csv':
            rows = [{column: check[column] for column in CHECK_COLUMNS} for check in document['checks']]
            write_rows(rows, CHECK_COLUMNS, 'csv', buffer)
        else:
            write_document(document, buffer)
        self.stdout.write(buffer.getvalue(), ending='')

        if not report.passed:
            failing = [check for check in document['checks'] if not check['passed']]
            cells = '; '.join(
                f"{check['name']}: {check['failures']}" for check in failing
            )
            raise CommandError(f"verification failed: {cells}", returncode=EXIT_VERIFICATION_FAILED)

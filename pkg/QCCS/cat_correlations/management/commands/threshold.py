import numpy as np
from django.core.management.base import CommandError

from ...catstates import ModelParams
from ...config import get_setting
from ...exceptions import BracketingError
from ...monogamy import Measure, deficit, find_violation_boundary, violation_roots
from ..base import EXIT_INVALID_PARAMETERS, CorrelationCommand, positive_int, resolve_t2

COLUMNS = ['measure', 'm', 't2', 'root', 'residual']


class Command(CorrelationCommand):
    help = "Locate the overlap p at which a monogamy deficit changes sign."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--measure', choices=[measure.value for measure in Measure], default=None)
        parser.add_argument('--m', type=int, choices=(0, 1), default=None, help="Parity label.")
        parser.add_argument('--t2', type=float, default=None, help="Transmissivity t² in [0, 1].")
        parser.add_argument('--loss-rate', type=float, default=None)
        parser.add_argument('--length', type=float, default=None)
        parser.add_argument('--bracket', type=float, nargs=2, metavar=('P_LO', 'P_HI'), default=None)
        parser.add_argument('--tol', type=float, default=None, help="Absolute tolerance on p.")
        parser.add_argument('--scan', type=positive_int, default=None,
                            help="Scan N points across the bracket and report every root.")

    def run(self, options):
        if options['measure'] is None or options['m'] is None:
            raise CommandError("--measure and --m are required", returncode=EXIT_INVALID_PARAMETERS)
        measure = Measure(options['measure'])
        m = options['m']
        t2 = resolve_t2(options)
        bracket = tuple(options['bracket'] or get_setting('THRESHOLD_BRACKET'))
        tol = options['tol'] or get_setting('THRESHOLD_TOLERANCE')

        if options['scan']:
            roots = violation_roots(measure, m, t2, np.linspace(*bracket, options['scan']), tol)
            if not roots:
                raise BracketingError(
                    f"{measure.value} deficit has no sign change on {list(bracket)} "
                    f"at m={m}, t2={t2}"
                )
        else:
            roots = [find_violation_boundary(measure, m, t2, bracket, tol)]

        rows = [
            {
                'measure': measure.value,
                'm': m,
                't2': t2,
                'root': root,
                'residual': deficit(measure, ModelParams(p=root, m=m, t2=t2)),
            }
            for root in roots
        ]
        self.emit_rows(rows, COLUMNS, options, single=not options['scan'])

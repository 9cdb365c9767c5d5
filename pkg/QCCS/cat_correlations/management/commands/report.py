from django.core.management.base import CommandError

from ...catstates import ModelParams, params_from_alpha
from ...monogamy import full_report
from ...rendering import COLUMNS, report_row
from ..base import EXIT_INVALID_PARAMETERS, CorrelationCommand, resolve_t2


class Command(CorrelationCommand):
    help = "Print every measure and monogamy deficit at one (p, t², m) point."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--p', type=float, default=None, help="Coherent-state overlap p in [0, 1].")
        parser.add_argument('--alpha', type=float, default=None,
                            help="Coherent amplitude |α|; sets p = exp(-2|α|²).")
        parser.add_argument('--t2', type=float, default=None, help="Transmissivity t² in [0, 1].")
        parser.add_argument('--loss-rate', type=float, default=None,
                            help="Fiber loss rate per unit length (with --length, replaces --t2).")
        parser.add_argument('--length', type=float, default=None, help="Fiber length.")
        parser.add_argument('--m', type=int, choices=(0, 1), default=None, help="Parity label.")

    def run(self, options):
        if options['m'] is None:
            raise CommandError("--m is required", returncode=EXIT_INVALID_PARAMETERS)
        t2 = resolve_t2(options)
        if options['alpha'] is not None:
            if options['p'] is not None:
                raise CommandError("give either --p or --alpha, not both",
                                   returncode=EXIT_INVALID_PARAMETERS)
            params = params_from_alpha(options['alpha'], options['m'], t2)
        elif options['p'] is not None:
            params = ModelParams(p=options['p'], m=options['m'], t2=t2)
        else:
            raise CommandError("one of --p or --alpha is required",
                               returncode=EXIT_INVALID_PARAMETERS)

        self.emit_rows([report_row(full_report(params))], COLUMNS, options, single=True)

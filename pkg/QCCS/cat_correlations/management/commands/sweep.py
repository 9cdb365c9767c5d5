import io
import logging

from django.core.management.base import CommandError

from ...rendering import write_rows
from ...sweeps import SweepSpec, run_sweep
from ..base import EXIT_INVALID_PARAMETERS, CorrelationCommand, positive_int

logger = logging.getLogger(__name__)

GRID_DEFAULTS = {
    'p_start': 0.0,
    'p_steps': 21,
    't2_start': 0.0,
    't2_end': 1.0,
    't2_steps': 21,
}


class Command(CorrelationCommand):
    help = "Evaluate every measure on a (p, t²) grid and emit one row per point."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--m', type=int, choices=(0, 1), default=None, help="Parity label.")
        parser.add_argument('--p-start', type=float, default=None)
        parser.add_argument('--p-end', type=float, default=None,
                            help="Last p (default 1, or 0.99 for odd states).")
        parser.add_argument('--p-steps', type=positive_int, default=None)
        parser.add_argument('--t2-start', type=float, default=None)
        parser.add_argument('--t2-end', type=float, default=None)
        parser.add_argument('--t2-steps', type=positive_int, default=None)
        parser.add_argument('--include-oracles', action='store_true',
                            help="Append matrix-side recomputations of the closed forms.")
        parser.add_argument('--output', default=None, help="Write to this file instead of stdout.")

    def run(self, options):
        if options['m'] is None:
            raise CommandError("--m is required", returncode=EXIT_INVALID_PARAMETERS)
        grid = {
            key: default if options.get(key) is None else options[key]
            for key, default in GRID_DEFAULTS.items()
        }
        p_end = options.get('p_end')
        if p_end is None:
            p_end = 1.0 if options['m'] == 0 else 0.99

        spec = SweepSpec(
            p_end=p_end,
            m=options['m'],
            include_oracles=bool(options['include_oracles']),
            output_format=options['format'],
            **grid,
        )
        rows = run_sweep(spec, jobs=options['jobs'])

        buffer = io.StringIO()
        write_rows(rows, spec.columns, spec.output_format, buffer)
        if options.get('output'):
            with open(options['output'], 'w', encoding='utf-8', newline='') as handle:
                handle.write(buffer.getvalue())
            logger.info("wrote %d rows to %s", len(rows), options['output'])
        else:
            self.stdout.write(buffer.getvalue(), ending='')

"""
Shared plumbing for the toolkit's management commands.

Every command accepts ``--format``, ``--jobs`` and ``--config``. Option
defaults are ``None`` so that, per option, an explicit flag wins over a
config-file value, which wins over the settings default.
"""

import io
import logging

from django.core.management.base import BaseCommand, CommandError

from ..catstates import transmissivity_from_fiber
from ..config import get_setting, read_config_file
from ..exceptions import BracketingError, ConfigError, DomainError, PreconditionError
from ..rendering import FORMATS, write_rows

logger = logging.getLogger(__name__)

EXIT_VERIFICATION_FAILED = 1
EXIT_INVALID_PARAMETERS = 2
EXIT_IO_FAILURE = 3
EXIT_BRACKETING_FAILURE = 4

# Django's own options never come from the config file.
_BASE_DESTS = {
    'verbosity', 'settings', 'pythonpath', 'traceback', 'no_color',
    'force_color', 'skip_checks', 'help', 'config',
}


def positive_int(text):
    value = int(text)
    if value < 1:
        raise ValueError(f"{text!r} is not a positive integer")
    return value


def resolve_t2(options):
    """t² from --t2, or from the fiber pair --loss-rate/--length."""
    fiber = (options.get('loss_rate'), options.get('length'))
    if options.get('t2') is not None:
        if any(value is not None for value in fiber):
            raise CommandError("give either --t2 or --loss-rate/--length, not both",
                               returncode=EXIT_INVALID_PARAMETERS)
        return options['t2']
    if all(value is not None for value in fiber):
        return transmissivity_from_fiber(*fiber) ** 2
    raise CommandError("--t2 (or both --loss-rate and --length) is required",
                       returncode=EXIT_INVALID_PARAMETERS)


class CorrelationCommand(BaseCommand):
    """BaseCommand with the global flags, config-file merging and exit-code mapping."""

    default_format = 'csv'
    requires_system_checks = []

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        self._parser = parser
        return parser

    def add_arguments(self, parser):
        parser.add_argument('--format', choices=FORMATS, default=None,
                            help=f"Output format (default {self.default_format}).")
        parser.add_argument('--jobs', type=positive_int, default=None,
                            help="Worker threads for grid evaluation.")
        parser.add_argument('--config', default=None,
                            help="key = value file supplying defaults for any flag.")

    # --- option resolution ---

    def _config_values(self, path):
        try:
            raw = read_config_file(path)
        except OSError as exc:
            raise CommandError(f"cannot read config file {path}: {exc}",
                               returncode=EXIT_IO_FAILURE) from exc
        except ConfigError as exc:
            raise CommandError(str(exc), returncode=EXIT_INVALID_PARAMETERS) from exc

        actions = {
            action.dest: action for action in self._parser._actions
            if action.dest not in _BASE_DESTS
        }
        values = {}
        for key, text in raw.items():
            action = actions.get(key)
            if action is None:
                raise CommandError(f"unknown key {key!r} in config file {path}",
                                   returncode=EXIT_INVALID_PARAMETERS)
            values[key] = self._convert(action, key, text)
        return values

    def _convert(self, action, key, text):
        try:
            if action.nargs in (2, '+', '*'):
                parts = text.replace(',', ' ').split()
                value = [action.type(part) if action.type else part for part in parts]
            elif action.const is True and action.nargs == 0:
                value = text.lower() in ('1', 'true', 'yes', 'on')
            else:
                value = action.type(text) if action.type else text
        except (TypeError, ValueError) as exc:
            raise CommandError(f"bad value {text!r} for config key {key!r}",
                               returncode=EXIT_INVALID_PARAMETERS) from exc
        if action.choices is not None and value not in action.choices:
            raise CommandError(f"config key {key!r} must be one of {list(action.choices)}",
                               returncode=EXIT_INVALID_PARAMETERS)
        return value

    def resolve_options(self, options):
        """Fill ``None`` and unset options from the config file, then from settings."""
        resolved = dict(options)
        if resolved.get('config'):
            for key, value in self._config_values(resolved['config']).items():
                if resolved.get(key) in (None, False):
                    resolved[key] = value
        if resolved.get('format') is None:
            resolved['format'] = self.default_format
        if resolved.get('jobs') is None:
            resolved['jobs'] = get_setting('JOBS')
        return resolved

    # --- execution ---

    def handle(self, *args, **options):
        options = self.resolve_options(options)
        try:
            return self.run(options)
        except (DomainError, PreconditionError) as exc:
            raise CommandError(str(exc), returncode=EXIT_INVALID_PARAMETERS) from exc
        except BracketingError as exc:
            raise CommandError(str(exc), returncode=EXIT_BRACKETING_FAILURE) from exc
        except OSError as exc:
            raise CommandError(f"I/O failure: {exc}", returncode=EXIT_IO_FAILURE) from exc

    def run(self, options):
        raise NotImplementedError('subclasses of CorrelationCommand must provide a run() method')

    def emit_rows(self, rows, columns, options, single=False):
        buffer = io.StringIO()
        write_rows(rows, columns, options['format'], buffer, single=single)
        self.stdout.write(buffer.getvalue(), ending='')

import configparser
import logging

from django.conf import settings
from django.core.exceptions import ImproperlyConfigured

from .exceptions import ConfigError

logger = logging.getLogger(__name__)

# Used when the library runs outside a configured Django process.
DEFAULTS = {
    'DISCORD_GRID': (64, 128),
    'DISCORD_TOLERANCE': 1e-9,
    'DISCORD_RESTARTS': 3,
    'DISCORD_SEED': 20141107,
    'SPHERE_GRID': (181, 360),
    'SIGNIFICANT_DIGITS': 15,
    'THRESHOLD_TOLERANCE': 1e-10,
    'THRESHOLD_BRACKET': (0.01, 0.99),
    'JOBS': 1,
    'VERIFY_TOLERANCES': {},
}

_SECTION = 'options'


def get_setting(name):
    """Look ``name`` up in ``settings.CAT_CORRELATIONS``, then in DEFAULTS."""
    try:
        overrides = getattr(settings, 'CAT_CORRELATIONS', {})
    except ImproperlyConfigured:
        overrides = {}
    if name in overrides:
        return overrides[name]
    return DEFAULTS[name]


def verify_tolerance(check, fallback):
    return get_setting('VERIFY_TOLERANCES').get(check, fallback)


def read_config_file(path):
    """
    Parse a flat ``key = value`` file into a dict of raw strings.

    The file has no section header; comments start with ``#`` or ``;``.
    Keys are normalised to flag destinations (``p-steps`` -> ``p_steps``).
    OSError is left to the caller so it can map to the I/O exit code.
    """
    with open(path, encoding='utf-8') as handle:
        text = handle.read()

    parser = configparser.ConfigParser(interpolation=None)
    parser.optionxform = str
    try:
        parser.read_string(f'[{_SECTION}]\n{text}', source=str(path))
    except configparser.Error as exc:
        raise ConfigError(f"malformed config file {path}: {exc}") from exc

    values = {
        key.strip().replace('-', '_'): value.strip()
        for key, value in parser.items(_SECTION)
    }
    logger.debug("config file %s supplied keys: %s", path, sorted(values))
    return values

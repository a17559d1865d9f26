# Set up logging
import logging
import sys

import sentry_sdk

from scorecluster.config import config

logLevel = getattr(logging, str(config.get('General', 'log_level', fallback='WARNING')).upper(), logging.WARNING)
logFormat = logging.Formatter("[%(asctime)s] %(levelname)s: %(message)s", "%Y-%m-%d %H:%M:%S")

log_file = config.get('General', 'log_file', fallback='')
if log_file:
    handler = logging.FileHandler(log_file, 'a', 'utf-8')
else:
    # stdout carries reports, so diagnostics always go to stderr
    handler = logging.StreamHandler(sys.stderr)
handler.setFormatter(logFormat)

log = logging.getLogger('scorecluster')
log.setLevel(logLevel)

if not log.handlers:
    log.addHandler(handler)

sentry_enabled = config.has_option('General', 'sentry_logging') and config.getboolean('General', 'sentry_logging')

# Unless you're running your own deployment, you probably don't need this.
if sentry_enabled:
    sentry_sdk.init(config.get('General', 'sentry_dsn'), traces_sample_rate=0.25)

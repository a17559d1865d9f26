import logging
import os
import typing
from configparser import ConfigParser

from scorecluster.config import ROOT_DIR, config

# User facing strings live in lang/<language>.ini
_language = config.get('General', 'language', fallback='english')
_strings = ConfigParser()
_strings.read(os.path.join(ROOT_DIR, 'lang', f'{_language}.ini'), 'utf-8')

MISSING = '<Missing language string>'


def lang(category: str, key: str, replacements: typing.Optional[dict] = None, default=None) -> str:
    """
    Looks up a localized string, filling in {placeholder} replacements.

    Strings can be added or altered in the lang folder. `default` is used when the key is absent.
    Returns:
        str
    """
    template = _strings.get(category, key, fallback=default)  # type: typing.Optional[str]
    if not template:
        logging.getLogger(__name__).warning(f"Missing {_language} language string: {key} ({category})")
        return MISSING

    for name, value in (replacements or {}).items():
        template = template.replace(f"{{{name}}}", str(value))

    return template

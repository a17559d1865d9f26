# Load our configuration
import os
from configparser import ConfigParser

from scorecluster.exceptions import InvalidConfigurationException
from scorecluster.helpers import parse_int_list, strictly_increasing

ROOT_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

config = ConfigParser()
config.read([os.path.join(ROOT_DIR, 'config.default.ini'), os.path.join(ROOT_DIR, 'config.ini'), 'config.ini'])


def parse_k_list(value: str) -> list:
    """
    Reads a comma separated, strictly increasing list of positive cluster counts
    Raises:
        InvalidConfigurationException: For anything else
    """
    try:
        ks = parse_int_list(value)
    except ValueError:
        ks = []

    if not ks or any(k < 1 for k in ks) or not strictly_increasing(ks):
        raise InvalidConfigurationException(f"[KMeans] k_list must be a strictly increasing list of positive integers, got {value!r}")

    return ks


def _float_list(value: str) -> list:
    return [float(v.strip()) for v in str(value).split(',') if v.strip()]


default_k_list = parse_k_list(config.get('KMeans', 'k_list', fallback='3,4,5'))
default_init = config.get('KMeans', 'init', fallback='random')
default_seed = config.getint('KMeans', 'seed', fallback=7)
default_max_iterations = config.getint('KMeans', 'max_iterations', fallback=300)
default_mode = config.get('KMeans', 'mode', fallback='robust')
sweep_workers = config.getint('KMeans', 'workers', fallback=1)

default_format = config.get('Report', 'format', fallback='text')
default_silhouette = config.getboolean('Report', 'silhouette', fallback=False)

chart_width = config.getint('Chart', 'width', fallback=640)
chart_height = config.getint('Chart', 'height', fallback=400)

synthetic_n = config.getint('Synthetic', 'n', fallback=79)
synthetic_m = config.getint('Synthetic', 'm', fallback=9)
synthetic_k_true = config.getint('Synthetic', 'k_true', fallback=3)
synthetic_centers = _float_list(config.get('Synthetic', 'centers', fallback='62,53,46'))
synthetic_spread = config.getfloat('Synthetic', 'spread', fallback=3.0)
synthetic_seed = config.getint('Synthetic', 'seed', fallback=7)

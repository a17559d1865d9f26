__title__       = 'scorecluster'
__summary__     = 'k-means performance clustering and banding of student score matrices'
__author__      = 'FujiMakoto'
__copyright__   = 'Copyright 2026, Taiga.sh Development'
__license__     = 'gpl-3.0'
__maintainer__  = 'FujiMakoto'
__status__      = 'Alpha'
__version__     = '0.1.0'

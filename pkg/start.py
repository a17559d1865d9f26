import sys

from scorecluster.scorecluster import main

sys.exit(main())

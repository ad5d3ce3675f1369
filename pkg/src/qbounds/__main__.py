import sys

from qbounds.cli import main

sys.exit(main())

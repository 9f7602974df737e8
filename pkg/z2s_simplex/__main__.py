import sys

from z2s_simplex.cli import main

sys.exit(main())

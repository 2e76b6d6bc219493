import sys

from dortho.cli import main

sys.exit(main())

import sys

from buchholz.cli import main

sys.exit(main())

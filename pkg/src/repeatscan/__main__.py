import sys

from repeatscan.cli import main

sys.exit(main())

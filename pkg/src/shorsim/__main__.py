import sys

from shorsim.cli import main

sys.exit(main())

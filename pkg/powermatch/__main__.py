import sys

from powermatch.cli import main

sys.exit(main())

"""``python3 -m homassoc`` entry point."""

import sys

from .cli import main

sys.exit(main())

"""Allow `python -m tgha`."""

import sys

from .cli import main

sys.exit(main())

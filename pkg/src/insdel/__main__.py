"""Allow ``python -m insdel`` to behave like the ``insdel`` script."""

import sys

from .cli import main

if __name__ == "__main__":
    sys.exit(main())

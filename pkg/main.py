"""
Launcher for the trihex command line from a source checkout.

Equivalent to the installed ``trihex`` script and to ``python -m trihex``.
"""

from __future__ import annotations

import sys

from trihex.main import main

if __name__ == "__main__":
    sys.exit(main())

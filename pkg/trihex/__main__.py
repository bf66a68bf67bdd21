#!/usr/bin/env python3

"""Module entry point: ``python -m trihex``."""

import sys

from trihex import main as cli


def run() -> None:
    """Start the CLI entrypoint when executed as a module."""
    sys.exit(cli.main())


if __name__ == "__main__":
    run()

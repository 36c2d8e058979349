#!/usr/bin/env python
"""Command-line entry point for the flimsy_lab tools."""
import sys


def main():
    """Run a management command and exit with its status."""
    try:
        from cli.entry import main as run
    except ImportError as exc:
        raise ImportError(
            "Couldn't import Django. Are you sure it's installed and "
            "available on your PYTHONPATH environment variable? Did you "
            "forget to activate a virtual environment?"
        ) from exc
    sys.exit(run(sys.argv))


if __name__ == '__main__':
    main()

"""Allow running the command line interface as `python -m moqa`."""

from .cli import main

if __name__ == "__main__":
    raise SystemExit(main())

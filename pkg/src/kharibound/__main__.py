"""Module entry point: ``python -m kharibound`` runs the CLI."""
from .cli import main

if __name__ == "__main__":
    raise SystemExit(main())

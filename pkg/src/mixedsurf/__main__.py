"""Main entry point for mixedsurf CLI."""
from __future__ import annotations


from mixedsurf.cli.app import main

if __name__ == "__main__":
    main()

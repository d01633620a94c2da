#!/usr/bin/env python
"""Main entry point for the workbench command line."""

if __name__ == "__main__":
    from scripts.cli import main
    main()

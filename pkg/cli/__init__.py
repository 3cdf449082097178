"""Command-line front end: `python -m cli.main <command> ...`."""

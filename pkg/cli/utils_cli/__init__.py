from cli.utils_cli.emit import EmitError, emit, load_envelope, render_csv, render_json
from cli.utils_cli.tables import load_expected, reproduce_table

__all__ = ["EmitError", "emit", "load_envelope", "load_expected", "render_csv", "render_json", "reproduce_table"]

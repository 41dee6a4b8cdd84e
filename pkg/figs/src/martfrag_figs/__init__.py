"""Figure scripts over the simulator's CSV/JSON artifacts.

Read-only over inputs; every number rendered comes from the files, nothing
is recomputed here.  Deterministic output: fixed styles, no timestamps.
"""

__version__ = "0.1.0"

SCHEMA_VERSION = 1

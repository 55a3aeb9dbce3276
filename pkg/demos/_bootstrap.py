"""Make the demos runnable straight from a source checkout."""

import sys
from pathlib import Path

try:
    import coprimespec  # noqa: F401
except ImportError:  # not installed; use the in-tree sources
    sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

OUTPUT_DIR = Path(__file__).resolve().parent / "output"

"""
qspectra - Command-Line Entry Point

Signless Laplacian spectra, SLEE computation and exhaustive verification of
the extremal results for tricyclic graphs. Run `python main.py --help` for the
available commands.
"""

import logging
import sys

logging.basicConfig(
    level=logging.INFO,
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s"
)
logger = logging.getLogger(__name__)

from qspectra.commands.cli import run  # noqa: E402

if __name__ == "__main__":
    sys.exit(run())

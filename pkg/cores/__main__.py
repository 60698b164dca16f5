import sys

from cores.cli import run

sys.exit(run())

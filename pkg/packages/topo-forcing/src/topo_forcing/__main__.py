"""
Entry point for the topo-forcing CLI.

Usage:
    python -m topo_forcing [COMMAND] [OPTIONS]
"""

from topo_forcing.cli import app

if __name__ == "__main__":
    app()

#!/usr/bin/env python3
"""Startup script for regmaps."""

import sys
from pathlib import Path

# Add the package directory to Python path
pkg_dir = Path(__file__).parent / "regmaps"
sys.path.insert(0, str(pkg_dir.parent))

from regmaps.main import run_cli

if __name__ == "__main__":
    env_file = Path(__file__).parent / ".env"
    if not env_file.exists():
        print("WARNING: .env file not found; using defaults and REGMAPS_* variables.", file=sys.stderr)

    try:
        run_cli()
    except KeyboardInterrupt:
        print("\nStopped by user; a census can be continued with --resume", file=sys.stderr)
        sys.exit(130)
    except Exception as e:
        print(f"Error running regmaps: {e}", file=sys.stderr)
        sys.exit(1)

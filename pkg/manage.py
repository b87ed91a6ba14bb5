#!/usr/bin/env python
import sys

if __name__ == "__main__":
    try:
        from gridtop.cli import run_cli
    except ImportError as exc:
        raise ImportError(
            "Couldn't import gridtop. Are the packages in requirements.txt installed?"
        ) from exc
    sys.exit(run_cli(sys.argv[1:]))

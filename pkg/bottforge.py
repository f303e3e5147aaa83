#!/usr/bin/env python3
"""
Command-line entry point for bottforge.

Examples:
    python bottforge.py demazure --type A --rank 1 --lambda 5 --alpha 1 --r 2 --format json
    python bottforge.py bott --type A --rank 2 --lambda -2,1
    python bottforge.py selftest
"""

from src.main import main

if __name__ == "__main__":
    main()

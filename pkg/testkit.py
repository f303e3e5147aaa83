"""
Tiny runner shared by the *_test.py scripts.

Each test script can be run directly (python rootsys_test.py) or collected by pytest;
run directly, every test_ function is called in definition order and reported with a
coloured mark.
"""

import logging
import sys
import time
import traceback

from colorama import Fore, Style, init

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def run_tests(namespace) -> bool:
    init()
    logging.basicConfig(level=logging.INFO, format=LOG_FORMAT)
    logger = logging.getLogger(namespace.get("__name__", "tests"))

    tests = [(name, fn) for name, fn in namespace.items() if name.startswith("test_") and callable(fn)]
    failed = 0
    start_time = time.time()
    for name, fn in tests:
        try:
            fn()
            print(f"{Fore.GREEN}✓{Style.RESET_ALL} {name}")
        except Exception as e:
            failed += 1
            print(f"{Fore.RED}✗{Style.RESET_ALL} {name}: {e}")
            logger.debug(traceback.format_exc())

    elapsed = time.time() - start_time
    logger.info(f"{len(tests) - failed}/{len(tests)} tests passed in {elapsed:.2f} seconds")
    return failed == 0


def main(namespace):
    sys.exit(0 if run_tests(namespace) else 1)

#!/usr/bin/env python3
"""Run the whole check battery on every built-in algebra.

Prints one block per algebra, a final summary, and exits nonzero if
any check fails anywhere. Useful as a quick regression sweep:

    python3 scripts/verify_zoo.py            # everything
    python3 scripts/verify_zoo.py sweedler   # one algebra, full detail
"""

import sys
import time

from hopfcheck import run_pipeline, standard_zoo


def main(argv):
    wanted = set(argv)
    failures = 0
    start = time.monotonic()
    for h in standard_zoo():
        if wanted and h.name not in wanted:
            continue
        t0 = time.monotonic()
        res = run_pipeline(h)
        dt = time.monotonic() - t0
        bad = [c for c in res.checks if c.status == "FAIL"]
        marker = "ok" if not bad else f"{len(bad)} FAILED"
        print(f"== {h.name} dim={h.dim} ({dt:.2f}s) {marker}")
        for line in res.report_lines():
            if wanted or " FAIL " in line:
                print("  " + line)
        failures += len(bad)
    print(f"-- total {time.monotonic() - start:.2f}s, {failures} failing checks")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))

"""Run every property suite at its default budget, with per-suite timings."""

import argparse
import json
import sys
import time

from mnspecht import verify


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("suites", nargs="*", default=list(verify.SUITES))
    ap.add_argument("--budget", type=int, default=None)
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--json", dest="json_path", default=None, help="also write the reports here")
    args = ap.parse_args()

    reports = []
    for name in args.suites:
        start = time.perf_counter()
        report = verify.run_suite(name, args.budget, workers=args.threads)
        print(f"{report.to_text()} time={time.perf_counter() - start:.2f}s", flush=True)
        reports.append(report)
    if args.json_path:
        with open(args.json_path, "w") as fh:
            json.dump([r.to_json() for r in reports], fh, indent=2)
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())

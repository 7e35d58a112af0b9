"""Build the character table of S_n with both engines and time them."""

import argparse
import time

from mnspecht import characters as ch


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("n", type=int)
    ap.add_argument("--trace-up-to", type=int, default=7, help="skip the trace engine above this n")
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()

    start = time.perf_counter()
    table = ch.char_table(args.n, "mn")
    mn_time = time.perf_counter() - start
    print("\t".join(["label"] + [str(c) for c in table.classes]))
    for la, row in zip(table.labels, table.values):
        print("\t".join([str(la)] + [str(v) for v in row]))
    print(f"# recursion: {mn_time:.3f}s, orthogonal={table.is_orthogonal()}")

    if args.n <= args.trace_up_to:
        start = time.perf_counter()
        other = ch.char_table(args.n, "trace", workers=args.threads)
        print(f"# trace: {time.perf_counter() - start:.3f}s, agrees={other == table}")


if __name__ == "__main__":
    main()

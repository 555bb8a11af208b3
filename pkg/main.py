#!/usr/bin/env python3
"""
Rainbow AP Workbench
Counts rainbow, monochromatic and dichromatic solutions of ax + by = cz,
searches for extremal 3-colorings and verifies the counting bounds
"""

import argparse
import sys

from cli import (
    EXIT_USAGE,
    SWEEP_COLUMNS,
    RecordWriter,
    cmd_config,
    cmd_construct,
    cmd_count,
    cmd_search,
    cmd_sweep,
    cmd_verify,
)
from verify import SUITES


def _ground_options() -> argparse.ArgumentParser:
    """Flags shared by every subcommand that works on one equation and ground set"""
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--eq", default="1,1,2", help="coefficients a,b,c of ax + by = cz (default 1,1,2)")
    kind = parent.add_mutually_exclusive_group()
    kind.add_argument("--interval", dest="kind", action="store_const", const="interval",
                      help="color the interval [n] = {1..n}")
    kind.add_argument("--cyclic", dest="kind", action="store_const", const="cyclic",
                      help="color the cyclic group Z_n = {0..n-1}")
    parent.add_argument("-n", type=int, help="ground set size")
    parent.add_argument("--coloring",
                        help="mod3-interval | mod3-cyclic | mod5-schur | periodic:<pattern> "
                             "| file:<path> | random:<seed>")
    parent.add_argument("--progress", action="store_true", help="show a progress bar on standard error")
    return parent


def build_parser() -> argparse.ArgumentParser:
    shared = _ground_options()
    parser = argparse.ArgumentParser(
        prog="rainbow_ap",
        description="Exact rainbow and monochromatic solution counts for 3-colorings",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", parents=[shared], help="classify the solutions under one coloring")
    count.add_argument("--timing", action="store_true", help="also time the oracle against the convolution path")
    count.set_defaults(handler=cmd_count)

    search = sub.add_parser("search", parents=[shared], help="search for an extremal coloring")
    search.add_argument("--mode", choices=["exhaustive", "local"], default="exhaustive")
    search.add_argument("--objective", choices=["max-rainbow", "min-mono"], default="max-rainbow")
    search.add_argument("--seed", type=int, help="root seed of every random restart (RAINBOW_SEED)")
    search.add_argument("--budget", type=int, help="move evaluations per restart (RAINBOW_BUDGET)")
    search.add_argument("--restarts", type=int, help="random restarts (RAINBOW_RESTARTS)")
    search.add_argument("--threads", type=int, help="worker processes (RAINBOW_THREADS)")
    search.add_argument("--checkpoint", help="append-only log of finished units; resumes when present")
    search.add_argument("--override", action="store_true", help="lift the exhaustive size guard")
    search.add_argument("--symmetries", action="store_true", help="also quotient by the ground set's symmetries")
    search.add_argument("--no-quotient", action="store_true", help="enumerate every labeling, not just canonical ones")
    search.set_defaults(handler=cmd_search)

    verify = sub.add_parser("verify", help="run verification suites")
    verify.add_argument("--suite", default="all", choices=["all"] + list(SUITES))
    verify.add_argument("--max-n", type=int, default=40, help="largest n any check visits (default 40)")
    verify.add_argument("--progress", action="store_true", help="show a progress bar on standard error")
    verify.set_defaults(handler=cmd_verify)

    sweep = sub.add_parser(
        "sweep", parents=[shared], help="write exact counts for a range of n as CSV",
        epilog=f"CSV columns: {', '.join(SWEEP_COLUMNS)}. rb_fraction is exact; rb_decimal has "
               "12 significant digits. Both are empty when there are no solutions.",
    )
    sweep.add_argument("--n-min", type=int, default=3, help="smallest n (default 3, the least n a 3-coloring covers)")
    sweep.add_argument("--n-max", type=int, default=100)
    sweep.add_argument("-o", "--output", help="CSV file to write")
    sweep.set_defaults(handler=cmd_sweep)

    construct = sub.add_parser("construct", help="dump a named construction as a coloring file")
    construct.add_argument("name", help="mod3-interval | mod3-cyclic | mod5-schur")
    kind = construct.add_mutually_exclusive_group()
    kind.add_argument("--interval", dest="kind", action="store_const", const="interval")
    kind.add_argument("--cyclic", dest="kind", action="store_const", const="cyclic")
    construct.add_argument("-n", type=int, help="ground set size")
    construct.add_argument("-o", "--output", help="coloring file to write (standard output when omitted)")
    construct.set_defaults(handler=cmd_construct)

    config_cmd = sub.add_parser("config", help="show the effective configuration")
    config_cmd.set_defaults(handler=cmd_config)
    return parser


def main(argv=None) -> int:
    """Main program function"""
    args = build_parser().parse_args(argv)
    writer = RecordWriter()
    try:
        return args.handler(args, writer)
    except (ValueError, OSError) as e:
        # every domain error is a ValueError
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_USAGE
    except KeyboardInterrupt:
        print("⚠️ Interrupted; rerun with the same --checkpoint to resume", file=sys.stderr)
        return 130


if __name__ == "__main__":
    sys.exit(main())

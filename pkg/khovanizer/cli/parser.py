import argparse
from typing import List, Optional

COMMANDS = ("compute", "reduce", "check-diagonal", "selftest")
SUPPORTED_FORMATS = ["text", "json", "yaml"]
RINGS = ["z", "q"]


def _add_common_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-o", "--output", type=str, default=None, help="Write the result to this file instead of stdout.")
    parser.add_argument("--config", type=str, default=None, help="Path to the configuration file.")
    parser.add_argument(
        "--profile",
        type=str,
        default=None,
        help="Name of the configuration profile to use (default profile when omitted).",
    )
    parser.add_argument(
        "-f",
        "--format",
        choices=SUPPORTED_FORMATS,
        default=None,
        help="Output format (default from configuration).",
    )
    parser.add_argument("--json", action="store_true", help="Shorthand for --format json.")
    parser.add_argument("--ring", choices=RINGS, default=None, help="Ground ring: z (integers) or q (rationals).")
    parser.add_argument("--verbose", action="store_true", help="Enables verbose logging.")
    parser.add_argument("--log-file", type=str, default=None, help="Path to a rotating log file.")
    parser.add_argument("--no-color", action="store_true", help="Disable coloured terminal output.")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kh",
        description="Khovanov homology of tangles and links by delooping and Gaussian elimination.",
        epilog=(
            "Examples:\n"
            "  kh compute borromean --ring q\n"
            "  kh compute 'X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)' --oracle\n"
            "  kh reduce tangle.json --json -o reduced.json\n"
            "  kh check-diagonal negative-crossing --coherent\n"
            "  kh selftest --profile quick --seed 7\n"
            "\n"
            "Inputs are a file path, a corpus entry name or inline PD text.\n"
            "KH_CORPUS_DIR overrides the corpus directory."
        ),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    commands = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    compute = commands.add_parser("compute", help="Khovanov homology of a link (or of a tangle's closure).")
    compute.add_argument("input", help="PD file, corpus entry or inline PD code.")
    compute.add_argument(
        "--oracle",
        action="store_true",
        default=None,
        help="Cross-check against the cube of resolutions; exit 2 on mismatch.",
    )
    compute.add_argument("--validate-steps", action="store_true", default=None, help="Check d∘d = 0 after every step.")

    reduce = commands.add_parser("reduce", help="Reduced complex of a diagram or of a complex document.")
    reduce.add_argument("input", help="PD file, complex JSON, corpus entry or inline PD code.")
    reduce.add_argument("--validate-steps", action="store_true", default=None, help="Check d∘d = 0 after every step.")

    diagonal = commands.add_parser("check-diagonal", help="Diagonality of the reduced complex.")
    diagonal.add_argument("input", help="PD file, complex JSON, corpus entry or inline PD code.")
    diagonal.add_argument("--coherent", action="store_true", help="Also check every partial closure.")
    diagonal.add_argument(
        "--max-length",
        type=int,
        default=None,
        help="Longest partial closure to enumerate (default: every closure leaving two points).",
    )

    selftest = commands.add_parser("selftest", help="Run the verification suites on the corpus.")
    selftest.add_argument("--seed", type=int, default=None, help="Seed for the randomised suites.")
    selftest.add_argument("--threads", type=int, default=None, help="Worker threads (default from configuration).")
    selftest.add_argument(
        "--suite",
        action="append",
        default=None,
        help="Run only the named suite; may be repeated.",
    )

    for sub in (compute, reduce, diagonal, selftest):
        _add_common_options(sub)
    return parser


def parse_arguments(argv: Optional[List[str]] = None) -> argparse.Namespace:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.json:
        if args.format not in (None, "json"):
            parser.error("--json conflicts with --format " + args.format)
        args.format = "json"
    if getattr(args, "threads", None) is not None and args.threads < 1:
        parser.error("--threads must be positive")
    if getattr(args, "max_length", None) is not None and args.max_length < 0:
        parser.error("--max-length must not be negative")
    return args


__all__ = ["COMMANDS", "SUPPORTED_FORMATS", "RINGS", "parse_arguments"]

"""Command line front end.

Exit status: 0 on success, 1 on usage errors, 2 on data errors (corrupt
container, dictionary mismatch, round-trip failure).
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from . import bench
from .dictionary import DictConfig, Dictionary, build_dictionary, load_dictionary, save_dictionary
from .errors import IdbeError
from .idbe_codec import idbe_decode, idbe_encode
from .pipeline import DEFAULT_BLOCK_SIZE, Method, PipelineOptions, compress, decompress
from .star import build_star_dictionary, star_decode, star_encode

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2

TRANSFORMS = {
    "idbe-enc": lambda data, d: idbe_encode(data, d),
    "idbe-dec": lambda data, d: idbe_decode(data, d),
    "star-enc": lambda data, d: star_encode(data, build_star_dictionary(d)),
    "star-dec": lambda data, d: star_decode(data, build_star_dictionary(d)),
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _methods(value: str) -> list[Method]:
    try:
        return [Method.parse(v) for v in value.split(",") if v]
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="idbe", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    mk = sub.add_parser("makedict", help="build a dictionary from training files")
    mk.add_argument("inputs", nargs="+", type=Path)
    mk.add_argument("-o", "--output", default="-")
    mk.add_argument("--min-frequency", type=int, default=1)
    mk.add_argument("--max-code-length", type=int, default=4, choices=range(1, 5))

    tr = sub.add_parser("transform", help="apply a pre-transform on its own")
    tr.add_argument("input")
    tr.add_argument("--mode", required=True, choices=sorted(TRANSFORMS))
    tr.add_argument("--dict")
    tr.add_argument("-o", "--output", default="-")

    co = sub.add_parser("compress", help="pre-transform and block-compress a file")
    co.add_argument("input")
    co.add_argument("--pre", choices=[m.name.lower() for m in Method], default="idbe")
    co.add_argument("--dict")
    co.add_argument("--block-size", type=int, default=DEFAULT_BLOCK_SIZE)
    co.add_argument("-o", "--output", default="-")

    de = sub.add_parser("decompress", help="restore a compressed container")
    de.add_argument("input")
    de.add_argument("--dict")
    de.add_argument("-o", "--output", default="-")

    be = sub.add_parser("bench", help="benchmark a corpus directory")
    be.add_argument("--corpus", required=True, type=Path)
    be.add_argument("--methods", type=_methods, default=list(bench.METHOD_ORDER))
    be.add_argument("--report", choices=["csv", "md"], default="csv")
    be.add_argument("--dict", help="external dictionary (default: train on the corpus)")
    be.add_argument("--block-size", type=int, default=DEFAULT_BLOCK_SIZE)
    be.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    be.add_argument("-o", "--output", default="-")
    return p


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    return Path(path).read_bytes()


def _write(path: str, data: bytes) -> None:
    if path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        Path(path).write_bytes(data)


def _check_input(path: str) -> None:
    if path != "-" and not Path(path).is_file():
        raise UsageError(f"no such input file: {path}")


def _dict_path(args, required: bool) -> str | None:
    path = args.dict or os.environ.get("IDBE_DICT")
    if path is None:
        if required:
            raise UsageError("a dictionary is required (--dict or IDBE_DICT)")
        return None
    if not Path(path).is_file():
        raise UsageError(f"no such dictionary file: {path}")
    return path


def _load_dict(path: str) -> Dictionary:
    with open(path, "rb") as f:
        return load_dictionary(f)


def _cmd_makedict(args) -> None:
    for p in args.inputs:
        if not p.is_file():
            raise UsageError(f"no such input file: {p}")
    try:
        cfg = DictConfig(args.min_frequency, args.max_code_length)
    except ValueError as e:
        raise UsageError(str(e)) from None
    d = build_dictionary((p.read_bytes() for p in args.inputs), cfg)
    if args.output == "-":
        save_dictionary(d, sys.stdout.buffer)
    else:
        with open(args.output, "wb") as f:
            save_dictionary(d, f)


def _cmd_transform(args) -> None:
    _check_input(args.input)
    d = _load_dict(_dict_path(args, required=True))
    _write(args.output, TRANSFORMS[args.mode](_read(args.input), d))


def _cmd_compress(args) -> None:
    _check_input(args.input)
    method = Method.parse(args.pre)
    path = _dict_path(args, required=method is not Method.NONE)
    try:
        opts = PipelineOptions(method, args.block_size)
    except ValueError as e:
        raise UsageError(str(e)) from None
    d = _load_dict(path) if method is not Method.NONE else None
    _write(args.output, compress(_read(args.input), opts, d))


def _cmd_decompress(args) -> None:
    _check_input(args.input)
    path = _dict_path(args, required=False)
    d = _load_dict(path) if path else None
    _write(args.output, decompress(_read(args.input), d))


def _cmd_bench(args) -> None:
    if not args.corpus.is_dir():
        raise UsageError(f"no such corpus directory: {args.corpus}")
    path = _dict_path(args, required=False)
    try:
        opts = PipelineOptions(Method.NONE, args.block_size)
    except ValueError as e:
        raise UsageError(str(e)) from None
    records = bench.run_benchmark(
        args.corpus, args.methods, _load_dict(path) if path else None, opts,
        jobs=max(1, args.jobs))
    for r in records:
        if not r.round_trip_ok:
            logging.getLogger(__name__).warning("%s: %s", r.file_name, r.error)
    _write(args.output, bench.emit_report(records, args.report))


COMMANDS = {
    "makedict": _cmd_makedict,
    "transform": _cmd_transform,
    "compress": _cmd_compress,
    "decompress": _cmd_decompress,
    "bench": _cmd_bench,
}


def dispatch(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        COMMANDS[args.command](args)
    except UsageError as e:
        print(f"idbe {args.command}: {e}", file=sys.stderr)
        return EXIT_USAGE
    except IdbeError as e:
        print(f"idbe {args.command}: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_DATA
    except OSError as e:
        print(f"idbe {args.command}: {e}", file=sys.stderr)
        return EXIT_DATA
    return EXIT_OK


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()

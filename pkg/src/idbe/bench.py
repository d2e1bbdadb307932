"""Corpus benchmark: bits per character and conversion time per file and method."""

from __future__ import annotations

import csv
import io
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .dictionary import DictConfig, Dictionary, build_dictionary
from .errors import RoundTripError
from .pipeline import Method, PipelineOptions, compress, decompress

log = logging.getLogger(__name__)

METHOD_ORDER = (Method.NONE, Method.STAR, Method.IDBE)
METHOD_TITLES = {
    Method.NONE: "BWT",
    Method.STAR: "BWT with *Encode",
    Method.IDBE: "BWT with IDBE",
}
CSV_COLUMNS = ("file", "size_bytes", "method", "compressed_bytes", "bpc", "encode_s", "decode_s")


def bpc(original_size: int, compressed_size: int) -> float:
    """Bits per character: ``8 * compressed / original``."""
    if original_size <= 0:
        raise ValueError("bits per character is undefined for an empty original")
    return 8.0 * compressed_size / original_size


@dataclass(frozen=True)
class BenchRecord:
    file_name: str
    original_size: int
    method: Method
    compressed_size: int
    encode_time: float
    decode_time: float
    round_trip_ok: bool
    error: str | None = None

    @property
    def bpc(self) -> float:
        return bpc(self.original_size, self.compressed_size)


def corpus_files(corpus_dir: str | os.PathLike) -> list[Path]:
    return sorted((p for p in Path(corpus_dir).iterdir() if p.is_file()),
                  key=lambda p: p.name)


def train_dictionary(paths: Iterable[Path], cfg: DictConfig | None = None) -> Dictionary:
    corpus = []
    for p in paths:
        try:
            corpus.append(p.read_bytes())
        except OSError as e:
            log.warning("skipping %s for dictionary training: %s", p, e)
    return build_dictionary(corpus, cfg)


def bench_file(path: Path, methods: Sequence[Method], d: Dictionary | None,
               block_size: int) -> list[BenchRecord]:
    try:
        data = path.read_bytes()
    except OSError as e:
        return [BenchRecord(path.name, 0, m, 0, 0.0, 0.0, False, str(e)) for m in methods]
    records = []
    for m in methods:
        opts = PipelineOptions(m, block_size)
        t0 = time.perf_counter()
        packed = compress(data, opts, d)
        t1 = time.perf_counter()
        restored = decompress(packed, d)
        t2 = time.perf_counter()
        if restored != data:
            raise RoundTripError(f"{path}: round trip failed for method {m.name.lower()}")
        records.append(BenchRecord(path.name, len(data), m, len(packed), t1 - t0, t2 - t1, True))
    return records


def run_benchmark(corpus_dir, methods: Iterable[Method | str] = METHOD_ORDER,
                  d: Dictionary | None = None, opts: PipelineOptions | None = None,
                  jobs: int = 1, dict_config: DictConfig | None = None) -> list[BenchRecord]:
    """Compress and restore every regular file in ``corpus_dir`` with each method.

    When a dictionary method is requested and ``d`` is None, the dictionary is
    trained on the corpus itself. Records come back ordered by file name, then
    by method in ``METHOD_ORDER``.
    """
    wanted = {Method.parse(m) for m in methods}
    methods = [m for m in METHOD_ORDER if m in wanted]
    block_size = (opts or PipelineOptions()).block_size
    paths = corpus_files(corpus_dir)
    if d is None and any(m is not Method.NONE for m in methods):
        d = train_dictionary(paths, dict_config)

    if jobs > 1 and len(paths) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            per_file = list(pool.map(bench_file, paths, [methods] * len(paths),
                                     [d] * len(paths), [block_size] * len(paths)))
    else:
        per_file = [bench_file(p, methods, d, block_size) for p in paths]
    return [r for rs in per_file for r in rs]


def _csv_report(records: Sequence[BenchRecord]) -> bytes:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in records:
        w.writerow([r.file_name, r.original_size, r.method.name.lower(), r.compressed_size,
                    f"{r.bpc:.3f}", f"{r.encode_time:.2f}", f"{r.decode_time:.2f}"])
    return buf.getvalue().encode()


def _markdown_report(records: Sequence[BenchRecord]) -> bytes:
    methods = [m for m in METHOD_ORDER if any(r.method is m for r in records)]
    rows: dict[str, dict] = {}
    sizes: dict[str, int] = {}
    for r in records:
        rows.setdefault(r.file_name, {})[r.method] = r
        sizes[r.file_name] = r.original_size

    head = ["File", "Size (KB)"]
    for m in methods:
        head += [f"{METHOD_TITLES[m]} BPC", f"{METHOD_TITLES[m]} Time (s)"]
    lines = ["| " + " | ".join(head) + " |", "|" + "---|" * len(head)]
    for name, by_method in rows.items():
        cells = [name, f"{sizes[name] / 1024:.1f}"]
        for m in methods:
            r = by_method.get(m)
            cells += [f"{r.bpc:.3f}", f"{r.encode_time:.2f}"] if r else ["", ""]
        lines.append("| " + " | ".join(cells) + " |")
    return ("\n".join(lines) + "\n").encode()


def emit_report(records: Iterable[BenchRecord], format: str = "csv") -> bytes:
    """Render successful records as csv or a markdown table (one row per file)."""
    records = [r for r in records if r.round_trip_ok]
    if format == "csv":
        return _csv_report(records)
    if format in ("md", "markdown"):
        return _markdown_report(records)
    raise ValueError(f"unknown report format {format!r}")

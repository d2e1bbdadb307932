# Benchmark plain BWT, star encoding + BWT and IDBE + BWT over a corpus
# directory, with a dictionary trained on that same corpus.
#
#   python demos/04_corpus_benchmark.py corpus/canterbury

import sys

from idbe.bench import emit_report, run_benchmark

corpus = sys.argv[1] if len(sys.argv) > 1 else "corpus/canterbury"
records = run_benchmark(corpus)
print(emit_report(records, "md").decode())

for name in sorted({r.file_name for r in records}):
    row = {r.method.name: r.bpc for r in records if r.file_name == name}
    gain = row["NONE"] - row["IDBE"]
    print(f"{name:14s} IDBE saves {gain:.3f} bpc over plain BWT")

"""Populate corpus/canterbury with the Canterbury text files bundled in Brotli's sdist.

Only alice29.txt, asyoulik.txt, lcet10.txt and plrabn12.txt ship there. The
remaining Canterbury files and the Calgary corpus have to be copied in by hand
(corpus/calgary/, corpus/canterbury/).
"""

import subprocess
import sys
import tarfile
import tempfile
from pathlib import Path

FILES = ["alice29.txt", "asyoulik.txt", "lcet10.txt", "plrabn12.txt"]
SIZES = {"alice29.txt": 152089, "asyoulik.txt": 125179, "lcet10.txt": 426754,
         "plrabn12.txt": 481861}


def main(dest="corpus/canterbury"):
    dest = Path(dest)
    dest.mkdir(parents=True, exist_ok=True)
    with tempfile.TemporaryDirectory() as tmp:
        subprocess.run([sys.executable, "-m", "pip", "download", "--no-deps", "--no-binary",
                        ":all:", "-d", tmp, "Brotli==1.2.0"], check=True)
        sdist = next(Path(tmp).glob("*.tar.gz"))
        with tarfile.open(sdist) as tar:
            for member in tar.getmembers():
                name = Path(member.name).name
                if name in FILES and "/tests/testdata/" in member.name:
                    data = tar.extractfile(member).read()
                    if len(data) != SIZES[name]:
                        raise SystemExit(f"{name}: unexpected size {len(data)}")
                    (dest / name).write_bytes(data)
                    print("wrote", dest / name)


if __name__ == "__main__":
    main(*sys.argv[1:])

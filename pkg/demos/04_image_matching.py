"""
Matching gray-scale images
==========================

Two PGM images are read as fuzzy sets, standardized, and compared with the
likelihood H. The command-line tool does the same; this script writes small
images to a temporary directory and calls it in-process.
"""
import tempfile
from pathlib import Path

import numpy as np

from qulogic.cli import main
from qulogic.pgm import write_pgm

i, j = np.mgrid[0:16, 0:16]


def ring(ci, cj, r):
    d = np.hypot(i - ci, j - cj)
    return np.clip(255 * np.exp(-((d - r) ** 2) / 2.0), 0, 255).astype(int)


with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)
    write_pgm(tmp / "template.pgm", ring(8, 8, 4))
    write_pgm(tmp / "near.pgm", ring(8, 9, 4))
    write_pgm(tmp / "far.pgm", ring(4, 4, 2))

    for other in ("template", "near", "far"):
        print(f"--- match template {other}")
        main(["match", str(tmp / "template.pgm"), str(tmp / f"{other}.pgm")])

    print("--- estimate template near (masked readouts)")
    main(["estimate", str(tmp / "template.pgm"), str(tmp / "near.pgm"), "--trials", "100000", "--seed", "7"])

    print("--- fuzzy or of template and far, written as PGM")
    main(["fuzzyop", "or", str(tmp / "template.pgm"), str(tmp / "far.pgm"), "--out", str(tmp / "or.pgm")])
    print((tmp / "or.pgm").read_text().splitlines()[:4])

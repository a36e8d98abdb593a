"""Classify every ring of a corpus and print a one-line verdict table."""

import argparse
import time
from dataclasses import dataclass
from pathlib import Path

from isprings.classify import classify
from isprings.corpus import load_corpus, read_expressions, standard_expressions

COLUMNS = ("strongly_isp", "zpi", "special_primary", "almost_multiplication", "von_neumann_regular", "local", "reduced")
SHORT = {"true": "T", "false": "-", "vacuous-true": "v"}


@dataclass
class CorpusConfig:
    corpus: str = None
    max_size: int = 4096


def run(cfg):
    exprs = standard_expressions() if cfg.corpus is None else read_expressions(Path(cfg.corpus).read_text())
    width = max(len(e) for e in exprs)
    print(f"{'ring':<{width}}  size  " + " ".join(f"{c[:6]:<6}" for c in COLUMNS))
    start = time.perf_counter()
    for name, R in load_corpus(exprs, cfg.max_size):
        report = classify(R)
        size = "inf" if report.size is None else report.size
        cells = " ".join(f"{SHORT[report.verdicts[c].value]:<6}" for c in COLUMNS)
        print(f"{name:<{width}}  {size:>4}  {cells}")
    print(f"{len(exprs)} rings in {time.perf_counter() - start:.2f} s")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--corpus")
    ap.add_argument("--max-size", type=int, default=4096)
    a = ap.parse_args()
    run(CorpusConfig(a.corpus, a.max_size))

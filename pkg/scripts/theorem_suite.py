"""Run every theorem check over a corpus and tabulate outcomes per theorem."""

import argparse
import time
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from isprings.corpus import load_corpus, read_expressions, standard_expressions
from isprings.theorems import run_suite, theorem_suite


@dataclass
class SuiteConfig:
    corpus: str = None
    max_ring: int = 64
    show_failures: bool = True


def run(cfg):
    exprs = standard_expressions() if cfg.corpus is None else read_expressions(Path(cfg.corpus).read_text())
    start = time.perf_counter()
    rings = [R for _, R in load_corpus(exprs)]
    entries = theorem_suite(rings, cfg.max_ring)
    results = run_suite(entries)
    counts = Counter((c.theorem, c.status) for _, c in results)
    for tid in sorted({t for t, _ in counts}):
        print(f"{tid:<14} pass {counts[tid, 'pass']:>4}  inapplicable {counts[tid, 'inapplicable']:>4}  fail {counts[tid, 'fail']:>3}")
    fails = [c for _, c in results if c.status == "fail"]
    if cfg.show_failures:
        for c in fails:
            print(f"FAIL {c.theorem} [{c.instance}]")
            print("\n".join("  " + t for t in c.transcript))
    print(f"{len(results)} checks over {len(rings)} rings, {len(fails)} failures, {time.perf_counter() - start:.1f} s")
    return not fails


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--corpus")
    ap.add_argument("--max-ring", type=int, default=64, help="size bound for constructed rings")
    a = ap.parse_args()
    raise SystemExit(0 if run(SuiteConfig(a.corpus, a.max_ring)) else 1)

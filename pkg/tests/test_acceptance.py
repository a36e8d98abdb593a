"""Acceptance criteria, one test each; every test prints a single PASS/FAIL line."""

import json
import subprocess
import sys
import time
from contextlib import contextmanager

import pytest

from isprings.classify import Verdict, check_implications, classify, verdict
from isprings.cli import cmd_classify_corpus
from isprings.corpus import standard_expressions
from isprings.expr import ideal_from_text, ring_from_text
from isprings.factor import factor_inv_radical
from isprings.ideals import all_ideals, ideal_name, principal_ideal
from isprings.integers import int_factor_isp
from isprings.ring import invariant_vector, localize_at_prime, make_zmod
from oracles import bfs_factor, divisor_tuple_isp


@pytest.fixture
def verdict_line(capsys):
    @contextmanager
    def line(label):
        start = time.perf_counter()
        ok = False
        try:
            yield
            ok = True
        finally:
            with capsys.disabled():
                print(f"\n{'PASS' if ok else 'FAIL'} {label} ({time.perf_counter() - start:.2f} s)")

    return line


def test_criterion_01_ispring_not_strongly(verdict_line):
    with verdict_line("1: trivext(Zmod(4), mod(2)) is ISP but not strongly ISP, counterexample 0∝E, < 1 s"):
        start = time.perf_counter()
        R = ring_from_text("trivext(Zmod(4), mod(2))")
        report = classify(R)
        elapsed = time.perf_counter() - start
        assert report["isp"]
        assert report["strongly_isp"] is Verdict.FALSE
        assert report.findings["strongly_isp"].counterexample == ideal_from_text(R, "ideal((0,1))")
        assert elapsed < 1


def test_criterion_02_duplication_breaks_strong_isp(verdict_line):
    with verdict_line("2: F2∝F2 strongly ISP, its duplication along 0∝F2 not, < 5 s"):
        start = time.perf_counter()
        A = ring_from_text("trivext(Zmod(2), mod(2))")
        D = ring_from_text("dup(trivext(Zmod(2), mod(2)), ideal((0,1)))")
        assert classify(A)["strongly_isp"] is Verdict.TRUE
        assert classify(D)["strongly_isp"] is Verdict.FALSE
        assert time.perf_counter() - start < 5


def test_criterion_03_duplication_is_isp(verdict_line):
    with verdict_line("3: dup(Zmod(8), ideal(2)) is ISP (vacuous-true flagged), < 5 s"):
        start = time.perf_counter()
        D = ring_from_text("dup(Zmod(8), ideal(2))")
        report = classify(D)
        assert D.size == 32
        assert report["isp"] is Verdict.VACUOUS
        assert time.perf_counter() - start < 5


def test_criterion_04_theorem_suite(verdict_line):
    with verdict_line("4: theorem suite over the standard corpus, zero failures, < 60 s"):
        # a fresh process, so no lattice or verdict is cached
        start = time.perf_counter()
        proc = subprocess.run([sys.executable, "-m", "isprings.cli", "check", "all", "--json"], capture_output=True, text=True)
        elapsed = time.perf_counter() - start
        tree = json.loads(proc.stdout)
        failures = [c for c in tree["checks"] if c["status"] == "fail"]
        assert proc.returncode == 0 and not failures, failures[:5]
        assert set(tree["summary"]) == {
            "prop-2.2", "thm-exten", "thm-dup", "lemma-regu", "lemma-inver", "lemma-p=jp", "prop-sisp",
            "prop-spr", "thm-sispamr", "cor-nsisp", "prop-strong", "prop-supp", "prop-car", "thm-dupli",
            "remark-tq-dup",
        }
        assert elapsed < 60


def test_criterion_05_equivalence_sweep(corpus, verdict_line):
    with verdict_line("5: strongly ISP <=> SSP <=> ZPI <=> ZPUI on every corpus ring"):
        for name, R in corpus:
            vs = [bool(verdict(R, p)) for p in ("strongly_isp", "ssp", "zpi", "zpui")]
            assert len(set(vs)) == 1, name


def test_criterion_06_implication_diagram(corpus, verdict_line):
    with verdict_line("6: implication diagram holds on every corpus ring"):
        for name, R in corpus:
            assert check_implications(R), name


def test_criterion_07_factorization_oracle(small_rings, verdict_line):
    with verdict_line("7: factor_inv_radical agrees with breadth-first oracle on rings of size <= 16"):
        assert small_rings
        for R in small_rings:
            for I in all_ideals(R):
                if not I.is_proper:
                    continue
                got = factor_inv_radical(I)
                want = bfs_factor(R, frozenset(I.elements), "strong")
                if want is None:
                    assert got is None, (R.provenance, ideal_name(I))
                else:
                    assert got is not None, (R.provenance, ideal_name(I))
                    assert frozenset(got.invertible_part.elements) == want[0]
                    assert [frozenset(H.elements) for H in got.radical_parts] == want[1]


def test_criterion_08_integer_backend(verdict_line):
    with verdict_line("8: int_factor_isp matches divisor-tuple oracle for 0 <= n <= 10^4, n != 1, < 10 s"):
        start = time.perf_counter()
        for n in [0, *range(2, 10**4 + 1)]:
            m, ds = int_factor_isp(n)
            assert (m, ds) == divisor_tuple_isp(n), n
            product = m
            for d in ds:
                product *= d
            assert product == n
        assert time.perf_counter() - start < 10


def test_criterion_09_localization(verdict_line):
    with verdict_line("9: Zmod(12) localized at (2) ~ Z/4 and at (3) ~ F3 by invariant vector"):
        Z = make_zmod(12)
        at2, _ = localize_at_prime(Z, principal_ideal(Z, 2))
        at3, _ = localize_at_prime(Z, principal_ideal(Z, 3))
        assert invariant_vector(at2) == invariant_vector(make_zmod(4))
        assert invariant_vector(at3) == invariant_vector(make_zmod(3))


def test_criterion_10_determinism(verdict_line):
    with verdict_line("10: corpus JSON byte-identical across --jobs 1 and --jobs 4"):
        exprs = standard_expressions()
        _, serial = cmd_classify_corpus(exprs, "json", jobs=1)
        _, parallel = cmd_classify_corpus(exprs, "json", jobs=4)
        assert serial.encode() == parallel.encode()

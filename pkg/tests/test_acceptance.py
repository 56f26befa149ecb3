"""Exit criteria for the package, one test (or small group) per criterion.

A PASS/FAIL line per criterion is printed in the terminal summary.
"""

import random
import time
from pathlib import Path

import pytest

from conftest import load
from distlat.cli import run_command
from distlat.core import birkhoff_poset, canonical_isomorphic, ideal_lattice, poset_from_code
from distlat.hibi import complete_intersection_verdict
from distlat.invariants import (
    _pair_scan,
    bounds_report,
    edge_count,
    enumerate_diamonds,
    identity_count,
    lambda_f,
)
from distlat.scan import CHECKS, conjecture_scan, enumerate_posets
from distlat.structure import (
    DIAMOND,
    TWO_CHAIN,
    classify_ci_shape,
    classify_factor,
    concatenate,
    concatenate_all,
    decompose_thick,
    is_thick,
)

HERE = Path(__file__).parent


def codes_up_to(k):
    return [c for n in range(k + 1) for c in enumerate_posets(n)]


@pytest.fixture(scope="module")
def lattices6():
    return [(c, ideal_lattice(poset_from_code(c))) for c in codes_up_to(6)]


@pytest.fixture(scope="module")
def scan7(tmp_path_factory):
    out = {}
    for jobs in (1, 3):
        tsv = tmp_path_factory.mktemp(f"jobs{jobs}") / "scan.tsv"
        t0 = time.perf_counter()
        code, text = run_command(["enumerate", "--max", "7", "--jobs", str(jobs), "--tsv", str(tsv)])
        out[jobs] = (code, text, tsv.read_text(), time.perf_counter() - t0)
    return out


@pytest.mark.acceptance(1, "exhaustive theorem suite, poset size <= 6, <= 60 s")
def test_criterion_1_theorem_suite():
    t0 = time.perf_counter()
    rep = conjecture_scan(6, workers=1)
    elapsed = time.perf_counter() - t0
    assert rep.lattices_tested == 406
    assert max(r.size for r in rep.reports) == 64
    assert all(set(r.checks) == set(CHECKS) for r in rep.reports)
    assert rep.failures == ()
    assert elapsed <= 60.0, f"{elapsed:.1f} s"


@pytest.mark.acceptance(2, "pair scan = identity formula = diamond count on every lattice")
def test_criterion_2_triple_oracle(lattices6):
    for code, L in lattices6:
        a = _pair_scan(L)
        b = identity_count(L)
        c = len(enumerate_diamonds(L))
        assert a == b == c, code


@pytest.mark.acceptance(3, "fixture values")
def test_criterion_3_fixtures():
    D = load("diamond.lat")
    r, v = bounds_report(D), complete_intersection_verdict(D)
    assert (r.n, r.e, r.j_size, r.f_sum, v.is_complete_intersection) == (1, 4, 3, 14, True)

    B = load("b3.lat")
    r, v = bounds_report(B), complete_intersection_verdict(B)
    assert (r.n, r.e, r.j_size, r.f_sum, v.is_complete_intersection) == (9, 12, 4, 46, False)
    assert lambda_f(B, B.index("1"))[1] == 5

    DD = load("diamond2.lat")
    r, v = bounds_report(DD), complete_intersection_verdict(DD)
    assert (r.size, r.j_size, r.n, v.is_complete_intersection) == (7, 5, 2, True)

    V = load("v5.lat")
    r, v = bounds_report(V), complete_intersection_verdict(V)
    assert r.n == 1 and v.is_complete_intersection
    assert classify_ci_shape(V)[1] == [DIAMOND, TWO_CHAIN]

    C = load("chain3.lat")
    r = bounds_report(C)
    assert (r.n, r.thick) == (0, False)


@pytest.mark.acceptance(4, "thick, not diamond, not 2-chain => n > |L| - |J|")
def test_criterion_4_strict(lattices6, scan7):
    checked = 0
    for code, L in lattices6:
        if L.size >= 2 and is_thick(L) and not (L.size == 2 or classify_factor(L) == DIAMOND):
            assert _pair_scan(L) > L.size - len(L.J), code
            checked += 1
    assert checked > 0
    # same statement on the size-7 scan records
    for line in scan7[1][2].splitlines()[1:]:
        code, size, j, n, e, thick, ci, conj = line.split("\t")
        size, j, n = int(size), int(j), int(n)
        # thick lattices on 4 elements with n = 1 are diamonds
        if thick == "true" and size > 2 and not (size == 4 and n == 1):
            assert n > size - j, code


@pytest.mark.acceptance(5, "enumerate --max 7: complete, deterministic across workers, <= 10 min")
def test_criterion_5_scan7(scan7):
    code1, text1, tsv1, t1 = scan7[1]
    code3, text3, tsv3, t3 = scan7[3]
    assert code1 == 0 and code3 == 0
    assert "lattices_tested: 2451  failures: 0" in text1.splitlines()
    assert text1 == text3 and tsv1 == tsv3
    assert len(tsv1.splitlines()) == 1 + 2451
    assert t1 <= 600 and t3 <= 600
    print()
    print(text1, end="")


@pytest.mark.acceptance(6, "round trips and concatenation arithmetic")
def test_criterion_6_roundtrips(lattices6):
    for code in codes_up_to(7):
        L = ideal_lattice(poset_from_code(code))
        assert birkhoff_poset(L).code == code
    for code, L in lattices6:
        assert canonical_isomorphic(concatenate_all(decompose_thick(L).factors), L), code
    rnd = random.Random(2024)
    for _ in range(100):
        (_, L1), (_, L2) = rnd.choice(lattices6), rnd.choice(lattices6)
        C = concatenate(L1, L2)
        assert _pair_scan(C) == _pair_scan(L1) + _pair_scan(L2)
        assert edge_count(C) == edge_count(L1) + edge_count(L2)
        assert C.size == L1.size + L2.size - 1
        assert len(C.J) == len(L1.J) + len(L2.J) - 1


@pytest.mark.acceptance(7, "CLI golden files and M3/N5 rejection")
def test_criterion_7_cli():
    for fixture in ["diamond", "b3", "diamond2", "v5", "chain3"]:
        for command in ["analyze", "decompose", "ideal", "check"]:
            code, out = run_command([command, str(HERE / "fixtures" / f"{fixture}.lat")])
            golden = (HERE / "golden" / f"{command}_{fixture}.txt").read_text(encoding="utf-8")
            assert code == 0 and out == golden, (command, fixture)
    for fixture in ["m3", "n5"]:
        code, out = run_command(["check", str(HERE / "fixtures" / f"{fixture}.lat")])
        assert code == 2
        triple = out.split("= (", 1)[1].split(")", 1)[0].split(", ")
        assert len(triple) == 3

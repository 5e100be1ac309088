"""Acceptance criteria, one test per criterion, over the built-in corpus.

The corpus is verified once through the command line; each test then reads
the JSON report and prints a single pass/fail line for its criterion.
"""

import json
import time
from collections import defaultdict
from pathlib import Path

import pytest

from conftest import ACCEPTANCE_LINES
from koszul_depth.harness.cli import cli_main
from koszul_depth.harness.families import generate_instances
from koszul_depth.homology.homology import homology_at

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="module")
def corpus(tmp_path_factory):
    out = tmp_path_factory.mktemp("acceptance") / "builtin.json"
    t = time.perf_counter()
    code = cli_main(["verify", "--suite", "all", "--family", "builtin", "--json-out", str(out)])
    elapsed = time.perf_counter() - t
    data = json.loads(out.read_text())
    checks = defaultdict(list)
    for rep in data["reports"]:
        for c in rep["checks"]:
            checks[c["suite"]].append((rep["instance"], c))
    return {"code": code, "data": data, "checks": checks, "elapsed": elapsed}


def record(n, title, ok, detail):
    line = f"criterion {n} {title}: {'PASS' if ok else 'FAIL'} ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def reports(corpus, suite):
    return [r for r in corpus["data"]["reports"] if r["suite"] == suite]


def test_criterion_1_theorem_i(corpus):
    reps = reports(corpus, "theorem-I")
    exact = [r for r in reps if r["checks"] and all(c["status"] == "pass" for c in r["checks"])]
    four = all(len({json.dumps(c["values"][k]) for k in ("koszul", "koszul_cohomology", "ext",
                                                         "local_cohomology")}) == 1
               for r in exact for c in r["checks"])
    slowest = max(corpus["data"]["timings"][f"{r['instance']}::theorem-I"]["total"] for r in reps)
    ok = len(exact) >= 30 and len(exact) == len(reps) and four and slowest <= 5.0
    record(1, "Theorem-I four routes", ok,
           f"{len(exact)}/{len(reps)} instances exact and equal, slowest {slowest:.2f}s")


def test_criterion_2_oracle(corpus):
    frozen = json.loads((DATA / "oracle_frozen.json").read_text())
    cache = {}
    mismatches, compared = [], 0
    for key, entry in frozen.items():
        fam = (entry["family"], json.dumps(entry["params"], sort_keys=True))
        if fam not in cache:
            cache[fam] = {i.name: i for i in generate_instances(entry["family"], seed=0, **entry["params"])}
        C = cache[fam][entry["instance"]].complex(entry["complex"])
        for i, dims in entry["dims"].items():
            H = homology_at(C, int(i)).module
            for d, dim in dims.items():
                compared += 1
                if (H.hilbert_function(int(d)) if H.ngens else 0) != dim:
                    mismatches.append((key, i, d))
    suite = corpus["checks"]["oracle"]
    bound_ok = all(c["values"]["bound"] >= 8 for _, c in suite)
    suite_ok = all(c["status"] == "pass" for _, c in suite)
    ok = not mismatches and bound_ok and suite_ok and min(e["bound"] for e in frozen.values()) >= 8
    record(2, "Hilbert functions vs dense oracle", ok,
           f"{compared} frozen entries, {len(mismatches)} mismatches; {len(suite)} live checks through degree >= 8")


def test_criterion_3_auslander_buchsbaum(corpus):
    ab = corpus["checks"]["auslander-buchsbaum"]
    good = [(i, c) for i, c in ab if c["status"] in ("pass", "conditional")]
    periodic = [c for i, c in good if i.startswith("periodic") and c["values"]["depth MxP"] == "-inf"]
    ok = len(good) >= 10 and len(good) == len(ab) and bool(periodic)
    record(3, "Auslander-Buchsbaum", ok, f"{len(good)} instances, {len(periodic)} periodic at -inf")


def test_criterion_4_amplitude(corpus):
    amp = corpus["checks"]["amplitude"]
    good = [c for _, c in amp if c["status"] in ("pass", "conditional")]
    shapes = {c["values"]["amp"] for c in good}
    ok = len(good) >= 10 and len(good) == len(amp) and shapes == {"equal", "strict"}
    record(4, "amplitude inequality", ok, f"{len(good)} instances, cases {sorted(shapes)}")


def test_criterion_5_fd_chain(corpus):
    fdc = corpus["checks"]["fd-chain"]
    first = {c["check"]: c for i, c in fdc if i == "fd-chain-0"}
    want = {"fd_Q[R] = 1": 1, "fd_R[F] = 1": 1, "fd_Q[F] = 2": 2, "inf[F] = 0": 0}
    values_ok = all(first[k]["status"] == "pass" and first[k]["values"]["value"] == v for k, v in want.items())
    chains = [i for i, c in fdc if i != "fd-chain-0" and c["check"].startswith("fd_Q R + inf F")
              and c["status"] == "pass"]
    fails = [c for _, c in fdc if c["status"] in ("fail", "inconclusive")]
    ok = values_ok and len(chains) >= 5 and not fails
    record(5, "fd chain", ok, f"values 1,1,2 and inf 0 {'reproduced' if values_ok else 'WRONG'}; "
                              f"{len(chains)} further chains verified")


def test_criterion_6_frobenius(corpus):
    frob = {i: c for i, c in corpus["checks"]["theorem-V"] if "phi" in c["check"] or "Tor" in c["check"]}
    f2 = frob.get("frobenius-regular-F2-x")
    f3 = frob.get("frobenius-regular-F3-xy")
    sing = frob.get("frobenius-singular-F2")
    free_ok = all(c and c["status"] == "pass" and not set(c["values"]["tor_nonzero"]) & set(range(1, 13))
                  for c in (f2, f3))
    sing_ok = sing is not None and sing["status"] == "pass" and \
        set(range(0, 13)) <= set(sing["values"]["tor_nonzero"]) and isinstance(sing["values"]["fd"], dict)
    classified = [c for i, c in corpus["checks"]["theorem-V"]
                  if i == "frobenius-singular-F2" and c["check"] == "expected classification"]
    ok = free_ok and sing_ok and all(c["status"] == "pass" for c in classified)
    record(6, "Frobenius pushforwards", ok,
           "F2[x], F3[x,y] free with Tor_1..12 = 0; F2[x]/(x^2) Tor_0..12 != 0, not finite at cap"
           if ok else "see report")


def test_criterion_7_example(corpus):
    ex = {c["check"]: c for _, c in corpus["checks"]["example-2.6"]}
    routes = ("koszul", "koszul_cohomology", "ext", "local_cohomology")
    per_d = all(ex[f"depth_(t-{d}) M = {-d}"]["status"] in ("pass", "conditional") and
                {ex[f"depth_(t-{d}) M = {-d}"]["values"][r] for r in routes} == {-d} for d in range(6))
    zero = ex["depth_(0) M = -inf"]
    zero_ok = zero["status"] in ("pass", "conditional") and {zero["values"][r] for r in routes} == {"-inf"}
    periodic = [c for i, c in corpus["checks"]["infinity"]
                if i.startswith("periodic") and c["values"]["sup"] == "+inf" and c["values"]["depth"] == "-inf"]
    ok = per_d and zero_ok and bool(periodic) and all(c["status"] == "pass" for _, c in corpus["checks"]["infinity"]
                                                       if c["mandatory"])
    record(7, "comaximal example and periodic coproduct", ok,
           f"depth_(t-d) = -d for d=0..5 (conditional), depth_(0) = -inf, {len(periodic)} periodic sup=+inf cases")


def test_criterion_8_width(corpus):
    width = corpus["checks"]["width"]
    width_ok = width and all(c["status"] in ("pass", "conditional") for _, c in width)
    dual = corpus["checks"]["duality"]
    dual_mods = {(i, c["check"].split()[1]) for i, c in dual if c["status"] == "pass"}
    dual_ok = all(c["status"] == "pass" for _, c in dual if c["mandatory"])
    add = [c for _, c in corpus["checks"]["width-additivity"] if c["check"].startswith("width(M x N)")]
    add_ok = len(add) >= 5 and all(c["status"] == "pass" for _, c in corpus["checks"]["width-additivity"])
    ok = bool(width_ok) and dual_ok and len(dual_mods) >= 5 and add_ok
    record(8, "width routes, duality, additivity", ok,
           f"{len(width)} width pairs agree, duality on {len(dual_mods)} modules, additivity on {len(add)} pairs")


STRUCTURAL = ("les", "annihilation", "koszul-bounds", "accounting", "weak-sensitivity",
              "generator-independence", "depth-comparisons", "locality", "lower-bound", "upper-bound")


def test_criterion_9_structural(corpus):
    bad, counts = [], {}
    for s in STRUCTURAL:
        cs = corpus["checks"][s]
        counts[s] = len(cs)
        bad += [(s, i, c["check"]) for i, c in cs if c["mandatory"] and c["status"] in ("fail", "inconclusive")]
    acc = {c["check"].split()[0] for _, c in corpus["checks"]["accounting"] if c["status"] == "pass"}
    weak = {c["check"].split()[0] for _, c in corpus["checks"]["weak-sensitivity"] if c["status"] == "pass"}
    ok = not bad and all(counts.values()) and acc == {"(1)", "(2)", "(3)", "(4)"} and weak == {"depth", "width"}
    record(9, "structural suites", ok, f"{sum(counts.values())} checks over {len(STRUCTURAL)} suites, "
                                       f"{len(bad)} failures")


def test_corpus_exit_code_and_budget(corpus):
    ok = corpus["code"] == 0 and corpus["elapsed"] < 600
    record("*", "verify --family builtin", ok, f"exit {corpus['code']}, {corpus['elapsed']:.1f}s")

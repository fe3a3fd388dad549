"""Acceptance gate: the eleven criteria, one PASS/FAIL line each.

Every criterion is an exact identity checked by discrepancy valuation
(number of agreeing π-adic digits) against threshold N − slack.
"""
import time

import pytest

from drinfeld_hecke.checks import GUARD, cusp_samples, run_suites
from drinfeld_hecke.config import RunConfig, validate
from drinfeld_hecke.metrics import strictly_increasing

from .conftest import record

CONFIGS = {(2, 2): RunConfig(p=2, r=2, w=2), (3, 2): RunConfig(p=3, r=2, w=2),
           (2, 3): RunConfig(p=2, r=3, w=3)}
IDS = [f"q{q}r{r}" for q, r in CONFIGS]


def run(cfg, suite, names=None):
    validate(cfg)
    res = run_suites(cfg, [suite])
    if names is not None:
        res = [x for x in res if x.name in names]
        assert {x.name for x in res} == set(names)
    return res


def summary(res):
    return ", ".join(f"{x.name}={'exact' if x.discrepancy is None else x.discrepancy}" for x in res)


def report(n, ok, msg):
    line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {msg}"
    print(line)
    record(line)
    assert ok, line


# discrepancies collected for the doubling meta-test
BASE = {}


# -- 1 ------------------------------------------------------------------------

@pytest.mark.parametrize("p", [2, 3])
def test_criterion_1_omega_functional_equation(p):
    cfg = RunConfig(p=p, r=2, w=2, prec=40, t_trunc=8, suites=("omega",))
    t0 = time.perf_counter()
    (res,) = run(cfg, "omega", ["omega-functional-equation"])
    dt = time.perf_counter() - t0
    per = res.detail["per_coefficient"]
    ok = all(d is None or d >= cfg.threshold for d in per) and res.passed and dt < 1.0
    BASE[("1", p)] = [res.discrepancy]
    report(1, ok, f"q={p} N=40 T=8 min coefficient disc={min(d for d in per if d is not None)} "
                  f"thr={cfg.threshold} time={dt:.2f}s")


# -- 2 ------------------------------------------------------------------------

@pytest.mark.parametrize("p", [2, 3])
def test_criterion_2_carlitz(p):
    cfg = RunConfig(p=p, r=2, w=2, suites=("carlitz",))
    t0 = time.perf_counter()
    res = run(cfg, "carlitz", ["pi-tilde-vs-omega-residue", "carlitz-exp-coefficients"])
    dt = time.perf_counter() - t0
    ok = all(x.passed for x in res) and dt < 5.0
    report(2, ok, f"q={p} {summary(res)} time={dt:.2f}s")


# -- 3 ------------------------------------------------------------------------

@pytest.mark.parametrize("key", list(CONFIGS), ids=IDS)
def test_criterion_3_agf_at_periods(key):
    cfg = CONFIGS[key].with_(suites=("period",))
    t0 = time.perf_counter()
    (res,) = run(cfg, "period")
    dt = time.perf_counter() - t0
    per = res.detail["per_basis_vector"]
    ok = res.passed and len(per) == cfg.r and dt < 30
    report(3, ok, f"(q,r)={key} per basis vector={per} thr={cfg.threshold} time={dt:.2f}s")


# -- 4 ------------------------------------------------------------------------

def _mainid(cfg):
    return run(cfg.with_(suites=("mainid",), t_trunc=4), "mainid")


@pytest.mark.parametrize("key", list(CONFIGS), ids=IDS)
def test_criterion_4_main_identity_and_determinants(key):
    cfg = CONFIGS[key]
    t0 = time.perf_counter()
    res = _mainid(cfg)
    dt = time.perf_counter() - t0
    BASE[("4", key)] = [x.discrepancy for x in res]
    ok = all(x.passed for x in res) and dt < 300
    report(4, ok, f"(q,r)={key} {summary(res)} thr={cfg.threshold} time={dt:.2f}s")


# -- 5 ------------------------------------------------------------------------

FUNCH = ["H-minor-vs-closed-form", "H-at-depth-r-1", "H-at-depth-r"]


def _funcH(cfg):
    return run(cfg.with_(suites=("funcH",), t_trunc=4), "funcH", FUNCH)


@pytest.mark.parametrize("key", list(CONFIGS), ids=IDS)
def test_criterion_5_H_closed_forms(key):
    cfg = CONFIGS[key]
    t0 = time.perf_counter()
    res = _funcH(cfg)
    dt = time.perf_counter() - t0
    BASE[("5", key)] = [x.discrepancy for x in res]
    ok = all(x.passed for x in res) and dt < 120
    report(5, ok, f"(q,r)={key} {summary(res)} thr={cfg.threshold} time={dt:.2f}s")


# -- 6 ------------------------------------------------------------------------

@pytest.mark.parametrize("prime", ["θ", "θ+1"])
@pytest.mark.parametrize("key", list(CONFIGS), ids=IDS)
def test_criterion_6_hecke_eigenforms(key, prime):
    cfg = CONFIGS[key].with_(prime=prime, suites=("hecke-scalar",))
    r = cfg.r
    names = ["hecke-h", f"hecke-H-depth-{r - 1}", f"hecke-H-depth-{r}"]
    t0 = time.perf_counter()
    res = run(cfg, "hecke-scalar", names)
    dt = time.perf_counter() - t0
    ok = all(x.passed for x in res) and dt < 600
    report(6, ok, f"(q,r)={key} p={prime} {summary(res)} thr={cfg.threshold} "
                  f"(guard {GUARD}) time={dt:.2f}s")


# -- 7 ------------------------------------------------------------------------

@pytest.mark.parametrize("key", [(2, 2), (2, 3)], ids=["q2r2", "q2r3"])
def test_criterion_7_vectorial_eigenform(key):
    cfg = CONFIGS[key].with_(t_trunc=3, suites=("hecke-vectorial",))
    t0 = time.perf_counter()
    (res,) = run(cfg, "hecke-vectorial", ["hecke-G"])
    dt = time.perf_counter() - t0
    ok = res.passed and dt < 600
    report(7, ok, f"(q,r)={key} T=3 entries={res.detail['entries']} thr={cfg.threshold} time={dt:.2f}s")


# -- 8 ------------------------------------------------------------------------

@pytest.mark.parametrize("p", [2, 3])
def test_criterion_8_goss(p):
    cfg = RunConfig(p=p, r=2, w=2, suites=("goss",))
    t0 = time.perf_counter()
    res = run(cfg, "goss")
    dt = time.perf_counter() - t0
    evals = [x.detail.get("evaluations") for x in res if "evaluations" in x.detail]
    ok = all(x.passed for x in res) and all(e >= 20 * p * p for e in evals) and dt < 60
    report(8, ok, f"q={p} {summary(res)} evaluations={evals} time={dt:.2f}s")


# -- 9 ------------------------------------------------------------------------

def test_criterion_9_chi_and_equivariance():
    cfg = CONFIGS[(2, 3)].with_(suites=("chi",))
    t0 = time.perf_counter()
    res = run(cfg, "chi")
    dt = time.perf_counter() - t0
    ok = all(x.passed and x.detail["instances"] == 10 for x in res) and dt < 120
    report(9, ok, f"(q,r)=(2,3) {summary(res)} thr={cfg.threshold} time={dt:.2f}s")


# -- 10 -----------------------------------------------------------------------

@pytest.mark.parametrize("key", list(CONFIGS), ids=IDS)
def test_criterion_10_cusp_leading_terms(key):
    cfg = CONFIGS[key]
    t0 = time.perf_counter()
    s = cusp_samples(cfg)
    dt = time.perf_counter() - t0
    seqs = {"h": s["h_over_u"], "H": s["H_over_u"]}
    for idx, col in enumerate(zip(*s["u_times_s"])):
        seqs[f"us{idx}"] = list(col)
    ok = all(len(v) == 3 and strictly_increasing(v) for v in seqs.values()) and dt < 300
    report(10, ok, f"(q,r)={key} h/u={seqs['h']} H/u={seqs['H']} time={dt:.2f}s")


# -- 11 -----------------------------------------------------------------------

def _doubles(old, new, slack):
    return all((a is None and b is None) or (b is None) or (a is not None and b >= 2 * a - slack)
               for a, b in zip(old, new))


def _omega(cfg):
    return run(cfg.with_(suites=("omega",)), "omega", ["omega-functional-equation"])[0]


def test_criterion_11_doubling_meta():
    slack = 6
    rows = []
    for p in (2, 3):
        cfg = RunConfig(p=p, r=2, w=2, prec=40, t_trunc=8)
        old = BASE.get(("1", p)) or [_omega(cfg).discrepancy]
        new = [_omega(cfg.with_(prec=80)).discrepancy]
        rows.append((f"1 q={p}", min(old), min(new), _doubles(old, new, slack)))
    for key, cfg in CONFIGS.items():
        for crit, fn in (("4", _mainid), ("5", _funcH)):
            old = BASE.get((crit, key)) or [x.discrepancy for x in fn(cfg)]
            new = [x.discrepancy for x in fn(cfg.with_(prec=2 * cfg.prec))]
            rows.append((f"{crit} {key}", old, new, _doubles(old, new, slack)))
    ok = all(r[-1] for r in rows)
    report(11, ok, "; ".join(f"[{a}] {b}→{c}" for a, b, c, _ in rows))

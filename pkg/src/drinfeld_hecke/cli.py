"""Command-line front end: ``drinfeld-hecke verify`` and ``drinfeld-hecke compute``."""
from __future__ import annotations

import json
import sys
from importlib import resources

import click

from . import __version__
from .checks import CheckResult, run_suites
from .config import SUITES, RunConfig, parse_point, validate
from .errors import ConfigInvalid, DrinfeldHeckeError
from .fq import parse_q


def _common(f):
    opts = [
        click.option("--q", "q_text", default="2", show_default=True, help="field size as P or P^E"),
        click.option("--rank", "r", default=2, show_default=True, type=int),
        click.option("--ramification", "w", default=None, type=int,
                     help="w with π^{-w} = −θ (default: smallest multiple of q−1 that fits the rank)"),
        click.option("--prec", "prec", default=40, show_default=True, type=int, help="precision N"),
        click.option("--t-trunc", "t_trunc", default=4, show_default=True, type=int),
        click.option("--deg-bound", "deg_bound", default=1, show_default=True, type=int,
                     help="starting box degree D_0"),
        click.option("--agf-cutoff", "agf_cutoff", default=None, type=int),
        click.option("--prime", "prime", default="θ", show_default=True,
                     help="monic irreducible 𝔭, e.g. 'θ^2+θ+1' (ASCII T accepted)"),
        click.option("--point", "point", default=None, help="exponents e1,...,0 with z_i = π^{-e_i}"),
        click.option("--slack", "slack", default=None, type=int, help="threshold slack (default 3w)"),
        click.option("--seed", "seed", default=0, show_default=True, type=int),
    ]
    for o in reversed(opts):
        f = o(f)
    return f


def _default_w(q: int, r: int) -> int:
    w = q - 1
    while w < r:
        w += q - 1
    return w


def build_config(q_text, r, w, prec, t_trunc, deg_bound, agf_cutoff, prime, point, slack, seed,
                 suites=SUITES) -> RunConfig:
    try:
        fd = parse_q(q_text)
        p, e = fd.p, fd.e
    except (ValueError, DrinfeldHeckeError) as exc:
        raise ConfigInvalid(f"bad --q {q_text!r}: {exc}") from exc
    if w is None:
        w = _default_w(p**e, r)
    cfg = RunConfig(p=p, e=e, r=r, w=w, prec=prec, t_trunc=t_trunc, deg_bound=deg_bound,
                    agf_cutoff=agf_cutoff, prime=prime, point=parse_point(point) if point else None,
                    suites=tuple(suites), slack=slack, seed=seed)
    return validate(cfg)


def report_dict(cfg: RunConfig, results: list[CheckResult]) -> dict:
    return {
        "library": "drinfeld_hecke",
        "version": __version__,
        "config": cfg.to_json(),
        "checks": [r.to_json() for r in results],
        "pass": all(r.passed for r in results),
    }


def load_schema() -> dict:
    return json.loads(resources.files("drinfeld_hecke").joinpath("report.schema.json").read_text("utf-8"))


def validate_report(report: dict) -> None:
    import jsonschema

    jsonschema.validate(report, load_schema())


def format_table(results: list[CheckResult]) -> str:
    lines = [f"{'suite':16} {'check':34} {'disc':>6} {'thr':>5}  result"]
    for r in results:
        disc = "exact" if r.discrepancy is None and r.error is None else str(r.discrepancy)
        status = "PASS" if r.passed else "FAIL"
        extra = f"  ({r.error})" if r.error else ""
        lines.append(f"{r.suite:16} {r.name:34} {disc:>6} {r.threshold:>5}  {status}{extra}")
    return "\n".join(lines)


@click.group()
@click.version_option(__version__, prog_name="drinfeld-hecke")
def main():
    """Exact-arithmetic checks for Drinfeld modular forms and Hecke eigenforms."""


@main.command()
@_common
@click.option("--suite", "suite", default=",".join(SUITES), show_default=True,
              help="comma-separated suite names")
@click.option("--out", "out", default=None, type=click.Path(dir_okay=False), help="write JSON report")
@click.option("--quiet", is_flag=True, help="suppress the table")
def verify(suite, out, quiet, **kw):
    """Run verification suites and report discrepancy valuations."""
    try:
        suites = [s.strip() for s in suite.split(",") if s.strip()]
        cfg = build_config(**kw, suites=suites)
    except ConfigInvalid as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    results = run_suites(cfg)
    report = report_dict(cfg, results)
    validate_report(report)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2, sort_keys=True, ensure_ascii=False)
            fh.write("\n")
    if not quiet:
        click.echo(format_table(results))
        click.echo(f"overall: {'PASS' if report['pass'] else 'FAIL'}")
    sys.exit(0 if report["pass"] else 1)


TARGETS = ("pi_tilde", "omega", "h", "H_at", "G", "coset-count")


def compute_target(cfg: RunConfig, target: str, n: int | None = None, i: int | None = None) -> dict:
    from .drinfeld import pi_tilde
    from .forms import Budget, PointForms, omega_point_standard
    from .hecke import coset_reps
    from .tate import omega_series

    F = cfg.field()
    prov = {"q": cfg.q, "w": cfg.w, "prec": cfg.prec}
    if target == "pi_tilde":
        return {"target": target, "value": pi_tilde(F).to_json(), "provenance": prov}
    if target == "omega":
        return {"target": target, "value": omega_series(F, cfg.t_trunc).to_json(), "provenance": prov}
    if target == "coset-count":
        p = cfg.prime_poly()
        prov.update(rank=cfg.r, prime=cfg.prime)
        return {"target": target, "value": len(coset_reps(p, cfg.r)), "provenance": prov}
    P = omega_point_standard(F, cfg.exponents())
    pf = PointForms(P, Budget(T=cfg.t_trunc, D0=cfg.deg_bound, ncut=cfg.agf_cutoff))
    prov.update(rank=cfg.r, point=P.describe())
    if target == "h":
        return {"target": target, "value": pf.h.to_json(), "provenance": prov}
    if target == "H_at":
        n = cfg.r - 1 if n is None else n
        prov["n"] = n
        return {"target": target, "value": pf.H_at(n).to_json(), "provenance": prov}
    if target == "G":
        i = cfg.r if i is None else i
        prov["i"] = i
        return {"target": target, "value": [x.to_json() for x in pf.G_vector(i)], "provenance": prov}
    raise ConfigInvalid(f"unknown target {target!r}")


@main.command()
@_common
@click.argument("target", type=click.Choice(TARGETS))
@click.option("--n", "n", default=None, type=int, help="depth n for H_at")
@click.option("--i", "i", default=None, type=int, help="index i for G")
def compute(target, n, i, **kw):
    """Compute one value and print it as JSON."""
    try:
        suites = () if target in ("pi_tilde", "omega", "coset-count") else ("funcH",)
        cfg = build_config(**kw, suites=suites)
        out = compute_target(cfg, target, n, i)
    except ConfigInvalid as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    except DrinfeldHeckeError as exc:
        click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
        sys.exit(1)
    click.echo(json.dumps(out, sort_keys=True, ensure_ascii=False))


if __name__ == "__main__":  # pragma: no cover
    main()

"""Run configuration and its validation."""
from __future__ import annotations

from dataclasses import asdict, dataclass, field, replace

from .errors import CollidingValuations, ConfigInvalid, DrinfeldHeckeError
from .fq import APoly, FieldDesc, fq_init, format_apoly, is_irreducible, parse_apoly
from .series import RField

SUITES = ("kernel", "omega", "carlitz", "period", "mainid", "funcH", "hecke-scalar",
          "hecke-vectorial", "goss", "chi", "uexp-leading")
POINT_SUITES = {"period", "mainid", "funcH", "hecke-scalar", "hecke-vectorial", "chi", "uexp-leading"}
BUDGET_LOG2 = 24


@dataclass(frozen=True)
class RunConfig:
    p: int = 2
    e: int = 1
    r: int = 2
    w: int = 2
    prec: int = 40
    t_trunc: int = 4
    deg_bound: int = 1
    agf_cutoff: int | None = None
    prime: str = "θ"
    point: tuple | None = None
    suites: tuple = SUITES
    slack: int | None = None
    seed: int = 0

    @property
    def q(self) -> int:
        return self.p**self.e

    @property
    def threshold(self) -> int:
        return self.prec - self.effective_slack

    @property
    def effective_slack(self) -> int:
        return 3 * self.w if self.slack is None else self.slack

    def fq(self) -> FieldDesc:
        return fq_init(self.p, self.e)

    def field(self, extra: int = 0) -> RField:
        return RField(self.fq(), self.w, self.prec + extra)

    def prime_poly(self) -> APoly:
        return parse_apoly(self.fq(), self.prime)

    def exponents(self) -> tuple:
        if self.point is not None:
            return tuple(self.point)
        return tuple(range(self.r - 1, -1, -1))

    def with_(self, **kw) -> "RunConfig":
        return replace(self, **kw)

    def to_json(self) -> dict:
        d = asdict(self)
        d["q"] = self.q
        d["prime"] = format_apoly(self.prime_poly()) if self.prime else None
        d["point"] = list(self.exponents())
        d["suites"] = list(self.suites)
        d["slack"] = self.effective_slack
        return d


def validate(cfg: RunConfig) -> RunConfig:
    """Raise ConfigInvalid on anything the computations cannot honour."""
    try:
        fq = cfg.fq()
    except DrinfeldHeckeError as exc:
        raise ConfigInvalid(str(exc)) from exc
    q = fq.q
    if cfg.w < 1 or cfg.w % (q - 1):
        raise ConfigInvalid(f"(q−1) = {q - 1} must divide the ramification w = {cfg.w}")
    if not 2 <= cfg.r <= 4:
        raise ConfigInvalid("rank must satisfy 2 ≤ r ≤ 4")
    if cfg.prec < 8:
        raise ConfigInvalid("precision N must be at least 8")
    if cfg.t_trunc < 1:
        raise ConfigInvalid("t-truncation must be ≥ 1")
    if cfg.deg_bound < 0:
        raise ConfigInvalid("degree bound must be ≥ 0")
    if q ** (cfg.r * (cfg.deg_bound + 1)) > 2**BUDGET_LOG2:
        raise ConfigInvalid(f"q^(r(D+1)) exceeds the enumeration budget 2^{BUDGET_LOG2}")
    unknown = [s for s in cfg.suites if s not in SUITES]
    if unknown:
        raise ConfigInvalid(f"unknown suite(s): {', '.join(unknown)}")
    try:
        p = cfg.prime_poly()
    except (ValueError, DrinfeldHeckeError) as exc:
        raise ConfigInvalid(f"cannot parse prime {cfg.prime!r}: {exc}") from exc
    if not p.is_monic() or not is_irreducible(p):
        raise ConfigInvalid(f"{cfg.prime!r} is not a monic irreducible polynomial")
    if POINT_SUITES & set(cfg.suites) or cfg.point is not None:
        ex = cfg.exponents()
        if len(ex) != cfg.r:
            raise ConfigInvalid(f"point needs {cfg.r} exponents, got {len(ex)}")
        if ex[-1] != 0:
            raise ConfigInvalid("the last point exponent must be 0")
        if len({e % cfg.w for e in ex}) != len(ex):
            raise ConfigInvalid(f"point exponents {ex} are not pairwise distinct modulo w = {cfg.w}")
    return cfg


def parse_point(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError as exc:
        raise ConfigInvalid(f"bad point {text!r}") from exc

"""Published zero lists, reproduction checks and seeded parameter sweeps."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from .interlace import TARGETS, Verdict, compare_zero_sets, target_zeros
from .laguerre import CombinationSpec, Family, PureLaguerre
from .rootfind import ZeroSet, combination_zeros, laguerre_zeros

REPRO_RTOL = 5e-5


@dataclass(frozen=True)
class Fixture:
    fixture_id: str
    target: PureLaguerre | CombinationSpec
    reference: tuple[float, ...]


# Zero lists as printed, six significant figures.
FIXTURES = (
    Fixture("L4_1.45_sec2", PureLaguerre(4, 1.45), (0.954365, 2.94834, 6.26071, 11.6366)),
    Fixture("R5_1.45_t1_a2.33", CombinationSpec.make("R", 5, 1.45, 1.0, 2.33),
            (1.17057, 3.01797, 5.80288, 9.83574, 15.9213)),
    Fixture("S5_1.45_t1_b2.33", CombinationSpec.make("S", 5, 1.45, 1.0, 2.33),
            (1.34638, 3.48132, 6.74108, 11.6384, 20.6928)),
    Fixture("L4_1.45_sec3", PureLaguerre(4, 1.45), (0.954365, 2.94834, 6.26071, 11.6366)),
    Fixture("S5_1.45_t2_b2.33", CombinationSpec.make("S", 5, 1.45, 2.0, 2.33),
            (1.94417, 4.47751, 8.08954, 12.6085, 16.7802)),
    Fixture("L5_3.45", PureLaguerre(5, 3.45), (1.70945, 3.92167, 7.07942, 11.5061, 18.0334)),
)


@dataclass(frozen=True)
class ReproResult:
    fixture_id: str
    computed: tuple[float, ...]
    reference: tuple[float, ...]
    max_rel_dev: float

    @property
    def passed(self) -> bool:
        return self.max_rel_dev <= REPRO_RTOL


def zeros_of(target) -> ZeroSet:
    if isinstance(target, PureLaguerre):
        return laguerre_zeros(target.n, target.alpha)
    return combination_zeros(target)


def reproduce(fixture: Fixture) -> ReproResult:
    z = zeros_of(fixture.target)
    ref = fixture.reference
    if len(z) != len(ref):
        return ReproResult(fixture.fixture_id, tuple(z), ref, math.inf)
    dev = max(abs(c - r) / abs(r) for c, r in zip(z, ref))
    return ReproResult(fixture.fixture_id, tuple(z), ref, dev)


def reproduce_all() -> list[ReproResult]:
    return [reproduce(f) for f in FIXTURES]


# --------------------------------------------------------------------------
# sweeps

DEFAULT_TARGETS = {
    Family.R: ("L_n^alpha", "L_n^{alpha+t}"),
    Family.S: ("L_n^alpha", "L_{n-1}^{alpha+t}"),
}

RECORD_FIELDS = ("family", "n", "alpha", "t", "coeff", "target", "verdict", "min_gap", "complete")


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SweepConfig:
    """Sampling plan for ``run_sweep``.

    Real ranges are sampled uniformly on (min, max]; a range with min == max
    pins the value. ``n`` is uniform over the integers n_min..n_max.
    """

    samples: int
    seed: int
    family: Family
    n_min: int = 2
    n_max: int = 25
    alpha_min: float = -0.99
    alpha_max: float = 8.0
    t_min: float = 0.0
    t_max: float = 2.0
    coeff_min: float = -10.0
    coeff_max: float = 10.0
    targets: tuple[str, ...] = ()
    out: str | None = None
    format: str = "csv"
    jobs: int = 1

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if not self.targets:
            object.__setattr__(self, "targets", DEFAULT_TARGETS[self.family])
        self.validate()

    def validate(self):
        if self.samples < 0:
            raise ConfigError("samples must be >= 0")
        if not 2 <= self.n_min <= self.n_max:
            raise ConfigError(f"need 2 <= n_min <= n_max, got {self.n_min}, {self.n_max}")
        for name in ("alpha", "t", "coeff"):
            lo, hi = getattr(self, f"{name}_min"), getattr(self, f"{name}_max")
            if not (math.isfinite(lo) and math.isfinite(hi) and lo <= hi):
                raise ConfigError(f"bad {name} range [{lo}, {hi}]")
        if self.alpha_min < -1 or (self.alpha_min == self.alpha_max == -1):
            raise ConfigError("alpha must stay > -1")
        lowest_shifted = self.alpha_min + self.t_min
        pinned = self.alpha_min == self.alpha_max and self.t_min == self.t_max
        if lowest_shifted < -1 or (pinned and lowest_shifted <= -1):
            raise ConfigError("alpha + t must stay > -1")
        if self.coeff_min == self.coeff_max == 0:
            raise ConfigError("coefficient range must contain nonzero values")
        for t in self.targets:
            if t not in TARGETS:
                raise ConfigError(f"unknown target {t!r}; choose from {sorted(TARGETS)}")
        if self.format not in ("csv", "json", "table"):
            raise ConfigError(f"unknown format {self.format!r}")
        if self.jobs < 1:
            raise ConfigError("jobs must be >= 1")


_INT_KEYS = {"samples", "seed", "n_min", "n_max", "jobs"}
_FLOAT_KEYS = {"alpha_min", "alpha_max", "t_min", "t_max", "coeff_min", "coeff_max"}


def parse_config(text: str, **overrides) -> SweepConfig:
    """Parse ``key=value`` lines; blank lines and ``#`` comments are skipped."""
    raw: dict = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key=value, got {line!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        try:
            if key in _INT_KEYS:
                raw[key] = int(value)
            elif key in _FLOAT_KEYS:
                raw[key] = float(value)
            elif key == "targets":
                raw[key] = tuple(v.strip() for v in value.split(",") if v.strip())
            elif key in ("family", "out", "format"):
                raw[key] = value
            else:
                raise ConfigError(f"line {lineno}: unknown key {key!r}")
        except ValueError as exc:
            if isinstance(exc, ConfigError):
                raise
            raise ConfigError(f"line {lineno}: bad value for {key}: {value!r}") from None
    raw.update({k: v for k, v in overrides.items() if v is not None})
    for key in ("samples", "seed", "family"):
        if key not in raw:
            raise ConfigError(f"config is missing required key {key!r}")
    try:
        return SweepConfig(**raw)
    except (ValueError, TypeError) as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError(str(exc)) from None


def load_config(path, **overrides) -> SweepConfig:
    return parse_config(Path(path).read_text(), **overrides)


def _draw(rng, lo, hi):
    u = rng.random()
    if lo == hi:
        return float(lo)
    return float(hi - (hi - lo) * u)


def draw_samples(cfg: SweepConfig) -> list[tuple[int, float, float, float]]:
    rng = np.random.default_rng(cfg.seed)
    out = []
    for _ in range(cfg.samples):
        n = int(rng.integers(cfg.n_min, cfg.n_max + 1))
        alpha = _draw(rng, cfg.alpha_min, cfg.alpha_max)
        t = _draw(rng, cfg.t_min, cfg.t_max)
        coeff = _draw(rng, cfg.coeff_min, cfg.coeff_max)
        while coeff == 0.0:
            coeff = _draw(rng, cfg.coeff_min, cfg.coeff_max)
        out.append((n, alpha, t, coeff))
    return out


@dataclass(frozen=True)
class SweepRecord:
    family: str
    n: int
    alpha: float
    t: float
    coeff: float
    target: str
    verdict: str
    min_gap: float
    complete: bool
    detail: str = field(default="", compare=False)

    def as_row(self) -> dict:
        d = asdict(self)
        d.pop("detail")
        return d


def evaluate_sample(family: Family, sample, targets) -> list[SweepRecord]:
    n, alpha, t, coeff = sample
    spec = CombinationSpec.make(family, n, alpha, t, coeff)
    combo = combination_zeros(spec)
    records = []
    for label in targets:
        rep = compare_zero_sets(combo, target_zeros(label, spec))
        records.append(
            SweepRecord(family.value, n, alpha, t, coeff, label, rep.verdict.value,
                        rep.min_gap, combo.complete, rep.detail)
        )
    return records


def _evaluate_packed(args):
    return evaluate_sample(*args)


def run_sweep(cfg: SweepConfig) -> list[SweepRecord]:
    """One record per (sample, target), in sample order whatever ``jobs`` is."""
    samples = draw_samples(cfg)
    work = [(cfg.family, s, cfg.targets) for s in samples]
    if cfg.jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            chunks = list(pool.map(_evaluate_packed, work, chunksize=8))
    else:
        chunks = [_evaluate_packed(w) for w in work]
    return [r for chunk in chunks for r in chunk]


def summarize(records) -> dict[str, int]:
    counts = {v.value: 0 for v in Verdict}
    for r in records:
        counts[r.verdict] += 1
    return counts


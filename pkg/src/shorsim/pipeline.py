"""End-to-end order finding and factoring, demonstration audit, width sweeps."""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass, field
from math import gcd, lcm

import numpy as np

from shorsim.cfrac import recover_order
from shorsim.gates import CircuitStats
from shorsim.modexp import modexp_circuit, modpow, order_bruteforce
from shorsim.qft import qft_first_register
from shorsim.spectrum import analytic_distribution
from shorsim.state import FIRST, CapacityError, RegisterLayout, max_qubits, measure_register

log = logging.getLogger(__name__)


def choose_q(n: int) -> tuple[int, int]:
    """The unique ``s`` with ``n**2 <= 2**s < 2 * n**2``, and ``q = 2**s``."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    s = (n * n - 1).bit_length()
    return s, 1 << s


def register2_width(n: int) -> int:
    return n.bit_length()


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def perfect_power(n: int) -> tuple[int, int] | None:
    """``(b, k)`` with ``b**k == n`` and ``k >= 2``, or None."""
    for k in range(2, n.bit_length() + 1):
        b = round(n ** (1.0 / k))
        for cand in (b - 1, b, b + 1):
            if cand > 1 and cand ** k == n:
                return cand, k
    return None


def classical_precheck(n: int) -> dict | None:
    """Cases that need no order finding: even n, primes, perfect powers."""
    if n < 4:
        return {"method": "invalid", "reason": f"n={n} is too small to factor"}
    if n % 2 == 0:
        return {"method": "even", "factors": (2, n // 2)}
    if is_prime(n):
        return {"method": "invalid", "reason": f"n={n} is prime"}
    pp = perfect_power(n)
    if pp is not None:
        b, k = pp
        return {"method": "perfect_power", "factors": (b, n // b)}
    return None


@dataclass
class ShorConfig:
    n: int
    x: int | None = None
    s_override: int | None = None
    seed: int = 0
    max_samples: int = 16
    trials: int = 1
    fast: bool = False


@dataclass
class ShorReport:
    n: int
    x: int | None
    s: int | None
    q: int | None
    samples: list[dict] = field(default_factory=list)
    verified_r: int | None = None
    factors: tuple[int, int] | None = None
    stats: CircuitStats = field(default_factory=CircuitStats)
    outcome: str = "exhausted"
    method: str = "quantum"
    reason: str | None = None

    def to_dict(self) -> dict:
        d = asdict(self)
        d["factors"] = list(self.factors) if self.factors else None
        return d


def _layout_for(n: int, s: int, limit: int | None) -> RegisterLayout:
    ell = register2_width(n)
    limit = max_qubits() if limit is None else limit
    if s + ell > limit:
        raise CapacityError(f"s={s} plus {ell} register-2 qubits exceeds capacity {limit}")
    return RegisterLayout(s, ell, limit)


class _Sampler:
    """Register-1 outcomes, either from a freshly built state or the closed form."""

    def __init__(self, n: int, x: int, layout: RegisterLayout, fast: bool,
                 stats: CircuitStats):
        self.n, self.x, self.layout, self.fast, self.stats = n, x, layout, fast, stats
        self._marginal = None
        if fast:
            p = analytic_distribution(n, x, layout.q).marginal
            self._marginal = p / p.sum()

    def draw(self, rng: np.random.Generator) -> int:
        if self.fast:
            return int(rng.choice(self._marginal.size, p=self._marginal))
        state, stats = modexp_circuit(self.layout, self.x, self.n)
        self.stats.merge(stats)
        state = qft_first_register(state)
        c, _ = measure_register(state, FIRST, rng)
        return c


def _sample_loop(n: int, x: int, layout: RegisterLayout, max_samples: int,
                 rng: np.random.Generator, fast: bool,
                 stats: CircuitStats) -> tuple[int | None, list[dict]]:
    sampler = _Sampler(n, x, layout, fast, stats)
    q = layout.q
    records: list[dict] = []
    seen: list[int] = []
    for _ in range(max_samples):
        c = sampler.draw(rng)
        rec = {"c": c, "d": None, "r": None, "status": None}
        records.append(rec)
        found = recover_order(c, q, n)
        if found is None:
            rec["status"] = "no_convergent"
            continue
        rec["d"], rec["r"] = found
        cand = found[1]
        if modpow(x, cand, n) == 1:
            rec["status"] = "verified"
            return cand, records
        for prev in seen:
            joint = lcm(prev, cand)
            if joint < n and modpow(x, joint, n) == 1:
                rec["status"] = "verified_lcm"
                rec["r"] = joint
                return joint, records
        rec["status"] = "zero_outcome" if c == 0 else "order_mismatch"
        if cand not in seen:
            seen.append(cand)
    return None, records


def order_find(n: int, x: int, s: int, max_samples: int, rng: np.random.Generator,
               fast: bool = False, stats: CircuitStats | None = None,
               limit: int | None = None) -> int | None:
    if gcd(x, n) != 1:
        raise ValueError(f"gcd({x}, {n}) = {gcd(x, n)}, base must be coprime to n")
    layout = _layout_for(n, s, limit)
    r, _ = _sample_loop(n, x, layout, max_samples, rng, fast,
                        CircuitStats() if stats is None else stats)
    return r


def run_shor(config: ShorConfig, rng: np.random.Generator | None = None,
             limit: int | None = None) -> ShorReport:
    n = config.n
    rng = np.random.default_rng(config.seed) if rng is None else rng
    report = ShorReport(n=n, x=config.x, s=None, q=None)

    pre = classical_precheck(n)
    if pre is not None:
        report.method = pre["method"]
        if "factors" in pre:
            report.factors = tuple(sorted(pre["factors"]))
            report.outcome = "success"
        else:
            report.outcome = "invalid_input"
            report.reason = pre["reason"]
        return report

    x = config.x if config.x is not None else int(rng.integers(2, n - 1))
    report.x = x
    if not 1 <= x < n:
        raise ValueError(f"base x must lie in [1, {n}), got {x}")
    g = gcd(x, n)
    if g > 1:
        report.method = "gcd"
        report.factors = tuple(sorted((g, n // g)))
        report.outcome = "success"
        return report

    s = config.s_override if config.s_override is not None else choose_q(n)[0]
    layout = _layout_for(n, s, limit)
    report.s, report.q = s, layout.q
    r, records = _sample_loop(n, x, layout, config.max_samples, rng, config.fast, report.stats)
    report.samples = records
    report.verified_r = r
    if r is None:
        report.outcome = "exhausted"
        return report
    if r % 2:
        report.outcome = "odd_order"
        return report
    half = modpow(x, r // 2, n)
    if half == n - 1:
        report.outcome = "trivial_root"
        return report
    # half != +-1 mod n, so gcd(half - 1, n) is a proper divisor
    f = gcd(half - 1, n)
    report.factors = tuple(sorted((f, n // f)))
    report.outcome = "success"
    log.debug("n=%d x=%d r=%d factors=%s", n, x, r, report.factors)
    return report


@dataclass(frozen=True)
class Demonstration:
    label: str
    citation: str
    n: int
    s1: int
    s2: int


# Register widths of the published factor-15 demonstrations.
DEMONSTRATIONS = (
    Demonstration("IBM 2001", "VS01", 15, 3, 4),
    Demonstration("Queensland 2007", "LW07", 15, 3, 4),
    Demonstration("USTC 2007", "LB07", 15, 2, 4),
    Demonstration("UCSB 2012", "L12", 15, 1, 2),
)


@dataclass
class DemoAuditRow:
    label: str
    n: int
    s1: int
    s2: int
    q_ok: bool
    width_ok: bool
    required_s1: int
    verdict: str

    def to_dict(self) -> dict:
        return asdict(self)


def demo_audit(rows=None) -> list[DemoAuditRow]:
    """Integer checks of register widths; ``rows`` holds ``(label, n, s1, s2)``."""
    if rows is None:
        rows = [(d.label, d.n, d.s1, d.s2) for d in DEMONSTRATIONS]
    out = []
    for label, n, s1, s2 in rows:
        q = 1 << s1
        q_ok = n * n <= q < 2 * n * n
        width_ok = (1 << s2) >= n
        failed = [name for name, ok in (("q_condition", q_ok), ("register2_width", width_ok))
                  if not ok]
        verdict = "ok" if not failed else "fails:" + ",".join(failed)
        out.append(DemoAuditRow(label, n, s1, s2, q_ok, width_ok, choose_q(n)[0], verdict))
    return out


@dataclass
class SweepRow:
    s: int
    q: int
    trials: int
    successes: int
    rate: float

    def to_dict(self) -> dict:
        return asdict(self)


def trial_rng(seed: int, *keys: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed, *keys]))


def success_sweep(n: int, x: int, s_range, trials: int, seed: int,
                  max_samples: int = 16, fast: bool = False,
                  limit: int | None = None) -> list[SweepRow]:
    """Fraction of ``order_find`` runs that return the true order, per width ``s``."""
    true_r = order_bruteforce(x, n)
    rows = []
    for s in s_range:
        layout = _layout_for(n, s, limit)
        hits = 0
        for trial in range(trials):
            r = order_find(n, x, s, max_samples, trial_rng(seed, s, trial), fast=fast,
                           limit=layout.n_qubits)
            hits += r == true_r
        rows.append(SweepRow(s, layout.q, trials, hits, hits / trials))
    return rows


def uniqueness_violations(n_max: int) -> list[int]:
    """Every ``n`` in ``[2, n_max]`` where the number of ``s`` with ``n**2 <= 2**s < 2n**2`` is not one."""
    n = np.arange(2, n_max + 1, dtype=np.int64)
    sq = n * n
    hits = np.zeros(n.size, dtype=np.int64)
    for s in range(1, int(2 * n_max * n_max).bit_length() + 1):
        q = np.int64(1) << s
        hits += (sq <= q) & (q < 2 * sq)
    return n[hits != 1].tolist()

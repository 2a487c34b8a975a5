"""Exhaustive image censuses of the encoders over small prime fields.

``image_census`` runs an encoder on every t in F_q and records the excluded t
(with the failing stage), the image size and the multiplicity histogram.
``verify_family`` runs censuses over many curves and checks each one against
the family's cardinality bounds.

Enumeration can be split across worker processes.  Workers return partial
counts that are merged in a fixed order, so the report does not depend on the
worker count.
"""

from __future__ import annotations

import math
import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .curves import (
    DeMoivreCurve,
    Genus2Type1Curve,
    Genus2Type2Curve,
    HessianCurve,
    QuasiQuadraticCurve,
    curve_from_dict,
    make_curve,
)
from .encoders import raw_encoder
from .exceptions import DegenerateCurve, FieldTooLarge, NotEncodable, VerificationFailure
from .ffield import make_field, to_hex
from .invariants import hessian_j_invariant

DEFAULT_CAP = 1 << 20


@dataclass
class CensusReport:
    q: int
    family: str
    params: dict
    domain_size: int
    excluded: list                  # [(t, stage)] sorted by t
    image_size: int
    multiplicity_histogram: dict    # multiplicity -> number of image points
    image: list                     # sorted (x, y) int pairs
    predicted_image: int | None = None
    elapsed: float = field(default=0.0, compare=False)

    @property
    def max_multiplicity(self):
        return max(self.multiplicity_histogram, default=0)

    @property
    def excluded_count(self):
        return len(self.excluded)

    def to_dict(self, include_image=False, include_timing=True):
        """JSON-ready form with hex field elements and a fixed key order."""
        doc = {
            "q": str(self.q),
            "family": self.family,
            "params": dict(self.params),
            "domain_size": self.domain_size,
            "excluded": [{"t": to_hex(t), "stage": s} for t, s in self.excluded],
            "excluded_count": self.excluded_count,
            "image_size": self.image_size,
            "max_multiplicity": self.max_multiplicity,
            "multiplicity_histogram": {str(m): c for m, c in sorted(self.multiplicity_histogram.items())},
            "predicted_image": self.predicted_image,
        }
        if include_image:
            doc["image"] = [{"x": to_hex(x), "y": to_hex(y)} for x, y in self.image]
        if include_timing:
            doc["elapsed"] = round(self.elapsed, 6)
        return doc


def hessian_prediction(curve):
    """Exact image size of the Hessian encoder on ``curve``.

    q - 1 for d = -2, otherwise (q + 1)/2 or (q - 1)/2 as (d - 1)/(d + 2) is a
    square or not.
    """
    q = curve.q
    if curve.is_minus_two:
        return q - 1
    d = curve.d
    return (q + 1) // 2 if ((d - 1) / (d + 2)).legendre() == 1 else (q - 1) // 2


def predicted_image(curve):
    if isinstance(curve, HessianCurve):
        return hessian_prediction(curve)
    if isinstance(curve, QuasiQuadraticCurve):
        return curve.q - 1
    return None


def _scan(curve, lo, hi):
    enc = raw_encoder(curve)
    counts = Counter()
    excluded = []
    for t in range(lo, hi):
        try:
            counts[enc(t)] += 1
        except NotEncodable as e:
            excluded.append((t, e.stage))
    return counts, excluded


def _scan_doc(doc, lo, hi):
    # Worker entry point: rebuild the curve from its document form.
    counts, excluded = _scan(curve_from_dict(doc), lo, hi)
    return dict(counts), excluded


def _chunks(q, parts):
    step = -(-q // parts)
    return [(lo, min(lo + step, q)) for lo in range(0, q, step)]


def image_census(curve, workers=1, cap=DEFAULT_CAP, executor=None):
    """Enumerate every t in F_q through the curve's encoder."""
    q = curve.q
    if q > cap:
        raise FieldTooLarge(f"q={q} exceeds the census cap {cap}")
    start = time.perf_counter()
    raw_encoder(curve)  # fail fast on capability / degeneracy
    if workers <= 1 and executor is None:
        parts = [_scan(curve, 0, q)]
    else:
        doc = curve.to_dict()
        chunks = _chunks(q, max(workers, 1) * 4)
        own = executor is None
        pool = executor or ProcessPoolExecutor(max_workers=workers)
        try:
            futures = [pool.submit(_scan_doc, doc, lo, hi) for lo, hi in chunks]
            parts = [f.result() for f in futures]
        finally:
            if own:
                pool.shutdown()
    counts = Counter()
    excluded = []
    for c, ex in parts:
        counts.update(c)
        excluded.extend(ex)
    excluded.sort()
    hist = Counter(counts.values())
    return CensusReport(
        q=q,
        family=curve.family,
        params=curve.params(),
        domain_size=q,
        excluded=excluded,
        image_size=len(counts),
        multiplicity_histogram=dict(sorted(hist.items())),
        image=sorted(counts),
        predicted_image=predicted_image(curve),
        elapsed=time.perf_counter() - start,
    )


# --------------------------------------------------------------------------
# parameter enumeration and sampling
# --------------------------------------------------------------------------

def all_hessian_curves(q):
    """Every valid Hessian curve over F_q."""
    out = []
    for d in range(q):
        try:
            out.append(HessianCurve(q, d))
        except DegenerateCurve:
            pass
    return out


def all_quasiquadratic_curves(q, max_d=9):
    """Every valid (d, a) with 2 <= d <= max_d and x -> x^d bijective on F_q."""
    F = make_field(q)
    out = []
    for d in range(2, max_d + 1):
        if not F.has_root(d):
            continue
        for a in range(q):
            try:
                out.append(QuasiQuadraticCurve(F, d, a))
            except DegenerateCurve:
                pass
    return out


def _nonzero(rng, q):
    return rng.randrange(1, q)


def sample_curve(family, q, rng, d=None, max_tries=1000):
    """A uniformly sampled valid curve of ``family`` whose encoder is not identically degenerate.

    Invalid draws are rejected and redrawn.  Parameters that kill the encoder
    everywhere (a = 0 for type 1 and De Moivre, mu = 0 for type 2) are never drawn.
    """
    F = make_field(q)
    for _ in range(max_tries):
        try:
            if family == "hessian":
                return HessianCurve(F, rng.randrange(q))
            if family == "genus2type1":
                return Genus2Type1Curve(F, _nonzero(rng, q), rng.randrange(q))
            if family == "genus2type2":
                return Genus2Type2Curve(F, _nonzero(rng, q), _nonzero(rng, q), rng.randrange(q),
                                        rng.randrange(q), _nonzero(rng, q))
            if family == "quasiquadratic":
                degs = [k for k in range(2, 10) if F.has_root(k) and k % q]
                return QuasiQuadraticCurve(F, d or rng.choice(degs), rng.randrange(q))
            if family == "demoivre":
                return DeMoivreCurve(F, d or 5, _nonzero(rng, q), rng.randrange(q))
        except DegenerateCurve:
            continue
        raise ValueError(f"unknown family {family!r}")
    raise DegenerateCurve(f"no valid {family} curve over F_{q} after {max_tries} draws")


# --------------------------------------------------------------------------
# verification against the family bounds
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class FamilyBounds:
    max_excluded: int
    max_multiplicity: int
    min_image: object = None        # q -> int, or None
    exact: bool = False             # image_size must equal the prediction


BOUNDS = {
    "hessian": FamilyBounds(max_excluded=1, max_multiplicity=2, exact=True),
    "quasiquadratic": FamilyBounds(max_excluded=1, max_multiplicity=1, exact=True),
    "genus2type1": FamilyBounds(74, 8, lambda q: math.ceil((q - 35) / 8)),
    "genus2type2": FamilyBounds(233, 54, lambda q: math.ceil((q - 233) / 54)),
    "demoivre": FamilyBounds(8, 8, lambda q: math.ceil((q - 8) / 8)),
}


@dataclass
class CheckResult:
    q: int
    params: dict
    quantity: str
    observed: int
    bound: object
    passed: bool

    def to_dict(self):
        return {"q": str(self.q), "params": self.params, "quantity": self.quantity,
                "observed": self.observed, "bound": self.bound, "passed": self.passed}


@dataclass
class FamilySummary:
    family: str
    seed: int | None
    reports: list
    checks: list

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    @property
    def failures(self):
        return [c for c in self.checks if not c.passed]

    def to_dict(self, include_image=False, include_timing=True):
        return {
            "family": self.family,
            "seed": self.seed,
            "passed": self.passed,
            "curves": len(self.reports),
            "checks": [c.to_dict() for c in self.checks],
            "reports": [r.to_dict(include_image, include_timing) for r in self.reports],
        }


def check_report(report, curve=None):
    """Check one census against its family's bounds; returns a list of CheckResult."""
    b = BOUNDS[report.family]
    q, params = report.q, report.params
    out = [
        CheckResult(q, params, "conservation",
                    report.excluded_count + sum(m * c for m, c in report.multiplicity_histogram.items()),
                    q, None),
        CheckResult(q, params, "excluded", report.excluded_count, b.max_excluded, None),
        CheckResult(q, params, "max_multiplicity", report.max_multiplicity, b.max_multiplicity, None),
    ]
    out[0].passed = out[0].observed == q
    out[1].passed = out[1].observed <= b.max_excluded
    out[2].passed = out[2].observed <= b.max_multiplicity
    if b.exact:
        out.append(CheckResult(q, params, "image_size", report.image_size, report.predicted_image,
                               report.image_size == report.predicted_image))
    if b.min_image is not None:
        lo = b.min_image(q)
        out.append(CheckResult(q, params, "image_lower_bound", report.image_size, lo,
                               report.image_size >= lo))
    if curve is not None:
        # every image point must lie on the curve
        bad = sum(1 for x, y in report.image if not curve._satisfies(x, y))
        out.append(CheckResult(q, params, "off_curve_points", bad, 0, bad == 0))
    return out


def verify_family(family, q_list, trials=None, seed=0, workers=1, strict=False, d=None,
                  cap=DEFAULT_CAP):
    """Census many curves of ``family`` and check each against the family bounds.

    With ``trials=None`` the Hessian and quasiquadratic families are swept over
    every valid parameter set; otherwise ``trials`` curves per q are drawn from
    a PRNG seeded by (family, q, seed).  ``strict`` raises VerificationFailure on
    the first failed check instead of collecting it.
    """
    if family not in BOUNDS:
        raise ValueError(f"unknown family {family!r}")
    if trials is None and family not in ("hessian", "quasiquadratic"):
        raise ValueError(f"{family} has no exhaustive parameter sweep; pass trials")
    for q in q_list:
        if q > cap:
            raise FieldTooLarge(f"q={q} exceeds the census cap {cap}")
    reports, checks = [], []
    executor = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for q in q_list:
            if trials is None:
                curves = all_hessian_curves(q) if family == "hessian" else all_quasiquadratic_curves(q)
            else:
                rng = random.Random(f"{family}:{q}:{seed}")
                curves = [sample_curve(family, q, rng, d=d) for _ in range(trials)]
            for curve in curves:
                report = image_census(curve, cap=cap, executor=executor)
                reports.append(report)
                for c in check_report(report, curve):
                    checks.append(c)
                    if strict and not c.passed:
                        raise VerificationFailure(c.q, c.params, c.quantity, c.observed, c.bound)
    finally:
        if executor is not None:
            executor.shutdown()
    return FamilySummary(family, seed if trials is not None else None, reports, checks)


def hessian_j_census(q):
    """The set of distinct j-invariants of the valid Hessian curves over F_q."""
    return {hessian_j_invariant(c).value for c in all_hessian_curves(q)}


def census_curve(family, q, **params):
    return image_census(make_curve(family, q, **params))

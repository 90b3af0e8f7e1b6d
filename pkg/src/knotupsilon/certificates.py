"""Checkable predicates built on the slope profile of upsilon.

The underlying implications are consumed as certified facts from the
literature, never re-proved here:

* a fibered knot whose upsilon attains slope -genus at a non-singular
  parameter in [0, 1) has right-veering monodromy (the converse fails,
  so the negative verdict is always "inconclusive");
* a fibered knot in the three-sphere supports the tight contact structure
  exactly when tau equals its genus (Hedden's criterion);
* upsilon is a concordance invariant, and among fibered knots the slope
  hypothesis pins the genus along a concordance;
* with the slope hypothesis anywhere on [0, 2], a fibered knot and its
  mirror are minimal under homotopy ribbon concordance, which upgrades a
  ribbon-cancelling partner to equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import MissingDataError
from .knots import KnotRecord
from .plfunction import PLFunction, format_rational


def _interval_json(iv):
    if iv is None:
        return None
    return [format_rational(iv[0]), format_rational(iv[1])]


@dataclass(frozen=True)
class RVCertificate:
    """Outcome of the right-veering slope test.

    verdict is "right_veering_certified" or "inconclusive";
    witness_interval is an open rational interval inside [0, 1) on which
    the slope equals -genus_used.
    """

    verdict: str
    witness_interval: tuple[Fraction, Fraction] | None
    genus_used: int

    @property
    def certified(self) -> bool:
        return self.verdict == "right_veering_certified"

    def to_json_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "witness_interval": _interval_json(self.witness_interval),
            "genus_used": self.genus_used,
            "rules_fired": (["slope-genus-right-veering"]
                            if self.certified else []),
        }


def certify_right_veering(upsilon_fn: PLFunction, genus: int) -> RVCertificate:
    """Certify right-veering monodromy from a slope of exactly -genus on
    the open part of some segment inside [0, 1).

    Breakpoints themselves are excluded as singular points.  Never returns
    a negative verdict: a failed test is only inconclusive.
    """
    if genus < 0:
        raise ValueError("genus must be non-negative")
    for a, b, s in upsilon_fn.segments():
        if a >= 1:
            break
        if s == -genus:
            return RVCertificate("right_veering_certified",
                                 (a, min(b, Fraction(1))), genus)
    return RVCertificate("inconclusive", None, genus)


def classify_tightness(tau: int, genus: int) -> str:
    """Hedden's criterion for the contact structure a fibered knot in the
    three-sphere supports: tight exactly when tau equals the genus."""
    return "tight" if tau == genus else "overtwisted"


@dataclass(frozen=True)
class ConcordanceVerdict:
    """Either "obstructed" with the reason tag that fired, or
    "no_obstruction_found"."""

    verdict: str
    reason: str | None = None
    detail: str | None = None

    @property
    def obstructed(self) -> bool:
        return self.verdict == "obstructed"

    def to_json_dict(self) -> dict:
        return {"verdict": self.verdict, "reason": self.reason,
                "detail": self.detail}


def _attains_slope_below_one(f: PLFunction, slope: int) -> bool:
    return any(a < 1 for a, _ in f.slope_intervals(slope))


def obstruct_concordance(k0: KnotRecord, k1: KnotRecord) -> ConcordanceVerdict:
    """Try, in order, each exact obstruction to k0 and k1 being concordant.

    1. differing upsilon functions (upsilon is a concordance invariant);
    2. both fibered with the slope -genus hypothesis on [0, 1) but
       different genera (concordance would force equal genera);
    3. k0 satisfies the slope hypothesis while k1 is fibered of equal
       genus with externally asserted non-right-veering monodromy.

    Only ever obstructs; "no_obstruction_found" decides nothing.
    """
    if not (k0.has_upsilon() and k1.has_upsilon()):
        raise MissingDataError("both records need upsilon data")
    f0, f1 = k0.upsilon_function(), k1.upsilon_function()

    diff = f0 - f1
    if not diff.is_zero():
        t = next(b for b, v in zip(diff.breakpoints, diff.values) if v != 0)
        return ConcordanceVerdict(
            "obstructed", "upsilon_mismatch",
            "upsilon functions differ at t=%s: %s vs %s"
            % (format_rational(t), format_rational(f0(t)),
               format_rational(f1(t))))

    if (k0.fibered and k1.fibered
            and k0.genus is not None and k1.genus is not None
            and k0.genus != k1.genus
            and _attains_slope_below_one(f0, -k0.genus)
            and _attains_slope_below_one(f1, -k1.genus)):
        return ConcordanceVerdict(
            "obstructed", "genus_mismatch_lemma72",
            "slope hypothesis holds on both sides with genus %d vs %d"
            % (k0.genus, k1.genus))

    if (k0.genus is not None and _attains_slope_below_one(f0, -k0.genus)
            and k1.fibered and k1.genus == k0.genus
            and k1.monodromy_right_veering is False):
        return ConcordanceVerdict(
            "obstructed", "rv_mismatch_prop14",
            "%r is certified right-veering by its slope, %r is fibered of "
            "equal genus with non-right-veering monodromy"
            % (k0.name, k1.name))

    return ConcordanceVerdict("no_obstruction_found")


@dataclass(frozen=True)
class RibbonMinimalityReport:
    """What the slope hypothesis buys for homotopy ribbon concordance.

    The minimality claims use the hypothesis anywhere on [0, 2]; the
    ribbon-cancellation uniqueness claim uses [0, 1].  Each claim records
    the interval convention it was checked against.
    """

    knot: str
    genus: int
    slope_target: int
    hypothesis_holds: bool
    witness_interval: tuple[Fraction, Fraction] | None
    hypothesis_interval: str
    minimal_among_fibered: bool
    mirror_minimal_among_fibered: bool
    uniqueness_hypothesis_holds: bool
    uniqueness_witness: tuple[Fraction, Fraction] | None
    uniqueness_interval: str

    def to_json_dict(self) -> dict:
        conclusions = []
        if self.minimal_among_fibered:
            conclusions.append(
                "minimal under homotopy ribbon concordance among fibered knots")
            conclusions.append(
                "mirror is minimal under homotopy ribbon concordance among "
                "fibered knots")
        if self.uniqueness_hypothesis_holds:
            conclusions.append(
                "any fibered partner with the same slope property whose "
                "connected sum with the mirror is ribbon must equal this knot")
        return {
            "knot": self.knot,
            "genus": self.genus,
            "slope_target": self.slope_target,
            "hypothesis": {
                "holds": self.hypothesis_holds,
                "witness_interval": _interval_json(self.witness_interval),
                "t_interval": self.hypothesis_interval,
            },
            "ribbon_uniqueness_hypothesis": {
                "holds": self.uniqueness_hypothesis_holds,
                "witness_interval": _interval_json(self.uniqueness_witness),
                "t_interval": self.uniqueness_interval,
            },
            "conclusions": conclusions,
        }


def ribbon_minimality_report(k: KnotRecord) -> RibbonMinimalityReport:
    """Evaluate the slope hypothesis for a fibered knot record and report
    the minimality and uniqueness consequences."""
    if k.fibered is not True:
        raise MissingDataError("record %r is not known to be fibered" % k.name)
    if k.genus is None:
        raise MissingDataError("record %r has no genus" % k.name)
    if not k.has_upsilon():
        raise MissingDataError("record %r carries no upsilon data" % k.name)
    f = k.upsilon_function()
    g = k.genus
    anywhere = f.slope_intervals(-g)
    below_one = [(a, b) for a, b in anywhere if a < 1]
    holds = bool(anywhere)
    return RibbonMinimalityReport(
        knot=k.name,
        genus=g,
        slope_target=-g,
        hypothesis_holds=holds,
        witness_interval=anywhere[0] if anywhere else None,
        hypothesis_interval="[0,2]",
        minimal_among_fibered=holds,
        mirror_minimal_among_fibered=holds,
        uniqueness_hypothesis_holds=bool(below_one),
        uniqueness_witness=(below_one[0][0], min(below_one[0][1], Fraction(1)))
        if below_one else None,
        uniqueness_interval="[0,1]",
    )

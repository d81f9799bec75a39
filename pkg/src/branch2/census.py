"""Symmetry census of prime knots up to ten crossings, and quotient queries.

The table records, per knot, which involution types it admits, whether the
(S1, empty) quotient knot is knotted, and any higher-order symmetry.  A few
surgeries with symmetry not induced from the knot are stored as separate
facts.  ``quotient_report`` combines both into an answer to "what does p/q
surgery on K double branched cover?".

The data lives in ``data/census.txt``; see the header of that file for the
line format.  ``row`` directives group knots and keep the count printed for
each group next to the number actually listed.
"""

from __future__ import annotations

import enum
import os
import shlex
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Optional

from .involution import (
    ExtensionResult,
    QuotientDescriptor,
    QuotientKind,
    SymmetryType,
    extend_involution,
    _is_unknot,
)
from .seifert import SeifertInvariants, quotient_invariants
from .slopes import Slope

HIGHER_GROUPS = ("D3", "D4", "D6", "D8", "D10")
CENSUS_ENV = "BRANCH2_CENSUS"


class CensusError(ValueError):
    pass


class ParseError(CensusError):
    def __init__(self, lineno, message):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class ValidationError(CensusError):
    pass


class UnknownKnot(KeyError):
    def __str__(self):
        return f"knot {self.args[0]!r} is not in the census"


class FactKind(enum.Enum):
    SYMMETRY_GROUP = "SymmetryGroup"
    EQUIVALENT_SURGERY = "EquivalentSurgery"
    SEIFERT_FIBERED = "SeifertFibered"
    QUOTIENT_IDENTIFIED = "QuotientIdentified"


@dataclass(frozen=True)
class CensusEntry:
    knot: str
    symmetry_classes: frozenset
    s1e_quotient_knotted: Optional[bool] = None
    higher_symmetry: Optional[str] = None
    quotient_knot: Optional[str] = None
    torus: Optional[tuple] = None
    row: Optional[str] = None
    tabulated: bool = True

    def sorted_classes(self):
        order = list(SymmetryType)
        return sorted(self.symmetry_classes, key=order.index)


@dataclass(frozen=True)
class ExceptionalFact:
    knot: str
    slope: Slope
    kind: FactKind
    payload: tuple
    anchor: str

    def describe(self) -> str:
        p = self.payload
        if self.kind is FactKind.SYMMETRY_GROUP:
            group, status = p
            return f"symmetry group {group} ({status})"
        if self.kind is FactKind.EQUIVALENT_SURGERY:
            return f"same manifold as S3_{p[0]}({p[1]})"
        if self.kind is FactKind.SEIFERT_FIBERED:
            return f"Seifert fibred {p[0]}"
        return f"quotient identified as S3_{p[0]}({p[1]})"


@dataclass(frozen=True)
class CensusRow:
    ident: str
    stated: Optional[int]
    label: str
    knots: tuple = ()

    @property
    def listed(self) -> int:
        return len(self.knots)


@dataclass
class Census:
    entries: dict = field(default_factory=dict)
    rows: dict = field(default_factory=dict)
    facts: list = field(default_factory=list)

    def __len__(self):
        return len(self.entries)

    def __contains__(self, knot):
        return knot in self.entries

    def lookup(self, knot: str) -> CensusEntry:
        try:
            return self.entries[knot]
        except KeyError:
            raise UnknownKnot(knot) from None

    def facts_for(self, knot: str, s: Slope) -> list:
        return [f for f in self.facts if f.knot == knot and f.slope == s]

    def knows(self, knot: str) -> bool:
        return knot in self.entries or any(f.knot == knot for f in self.facts)


def _parse_classes(value, lineno):
    if value == "-":
        return frozenset(), True
    if value == "?":
        return frozenset(), False
    out = set()
    for tag in value.split(","):
        try:
            out.add(SymmetryType[tag.strip()])
        except KeyError:
            raise ParseError(lineno, f"unknown symmetry tag {tag!r}") from None
    return frozenset(out), True


def _parse_knot(tokens, lineno, row_ids):
    if len(tokens) < 2:
        raise ParseError(lineno, "knot line needs a name")
    name = tokens[1]
    fields = {}
    for tok in tokens[2:]:
        key, sep, value = tok.partition("=")
        if not sep or not value:
            raise ParseError(lineno, f"expected key=value, got {tok!r}")
        if key in fields:
            raise ParseError(lineno, f"repeated key {key!r}")
        fields[key] = value
    for key in ("classes", "s1e_quotient", "higher"):
        if key not in fields:
            raise ParseError(lineno, f"missing {key}=")
    unknown = set(fields) - {"classes", "s1e_quotient", "higher", "quotient_knot", "torus", "row"}
    if unknown:
        raise ParseError(lineno, f"unknown key {sorted(unknown)[0]!r}")

    classes, tabulated = _parse_classes(fields["classes"], lineno)
    knotted = {"knotted": True, "unknotted": False, "-": None}.get(fields["s1e_quotient"], "bad")
    if knotted == "bad":
        raise ParseError(lineno, "s1e_quotient must be knotted, unknotted or -")
    higher = fields["higher"]
    if higher != "-" and higher not in HIGHER_GROUPS:
        raise ParseError(lineno, f"unknown higher symmetry {higher!r}")
    torus = None
    if "torus" in fields:
        try:
            p, q = (int(x) for x in fields["torus"].split(","))
        except ValueError:
            raise ParseError(lineno, "torus=p,q needs two integers") from None
        torus = (p, q)
    row = fields.get("row", "-")
    if row != "-" and row not in row_ids:
        raise ParseError(lineno, f"row {row!r} has not been declared")
    return CensusEntry(
        name,
        classes,
        knotted,
        None if higher == "-" else higher,
        fields.get("quotient_knot"),
        torus,
        None if row == "-" else row,
        tabulated,
    )


def _parse_fact(tokens, lineno):
    if len(tokens) < 5:
        raise ParseError(lineno, "except line needs knot, slope, kind, payload and anchor")
    name, slope_text, kind_text, *payload, anchor = tokens[1:]
    try:
        slope = Slope.parse(slope_text)
    except ValueError as err:
        raise ParseError(lineno, str(err)) from None
    try:
        kind = FactKind(kind_text)
    except ValueError:
        raise ParseError(lineno, f"unknown fact kind {kind_text!r}") from None
    try:
        if kind is FactKind.SYMMETRY_GROUP:
            if len(payload) != 2 or payload[1] not in ("expected", "exceptional"):
                raise ValueError("SymmetryGroup payload is '<group> expected|exceptional'")
            data = tuple(payload)
        elif kind is FactKind.SEIFERT_FIBERED:
            data = (SeifertInvariants.parse(" ".join(payload)),)
        else:
            if len(payload) != 2:
                raise ValueError(f"{kind.value} payload is '<knot> <slope>'")
            data = (payload[0], Slope.parse(payload[1]))
    except ValueError as err:
        raise ParseError(lineno, str(err)) from None
    return ExceptionalFact(name, slope, kind, data, anchor)


def load_census(source) -> Census:
    """Parse and validate census text (a string, or a file-like object)."""
    text = source if isinstance(source, str) else source.read()
    census = Census()
    row_knots = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            tokens = shlex.split(line)
        except ValueError as err:
            raise ParseError(lineno, str(err)) from None
        head = tokens[0]
        if head == "row":
            if len(tokens) != 4 or not tokens[2].startswith("stated="):
                raise ParseError(lineno, "expected: row <id> stated=<n|-> \"<label>\"")
            stated = tokens[2][len("stated="):]
            if stated != "-" and not stated.isdigit():
                raise ParseError(lineno, "stated count must be a number or -")
            if tokens[1] in census.rows:
                raise ValidationError(f"row {tokens[1]!r} declared twice")
            census.rows[tokens[1]] = CensusRow(tokens[1], None if stated == "-" else int(stated), tokens[3])
            row_knots[tokens[1]] = []
        elif head == "knot":
            entry = _parse_knot(tokens, lineno, census.rows)
            if entry.knot in census.entries:
                raise ValidationError(f"knot {entry.knot} appears more than once (line {lineno})")
            census.entries[entry.knot] = entry
            if entry.row:
                row_knots[entry.row].append(entry.knot)
        elif head == "except":
            census.facts.append(_parse_fact(tokens, lineno))
        else:
            raise ParseError(lineno, f"unknown directive {head!r}")
    for ident, knots in row_knots.items():
        r = census.rows[ident]
        census.rows[ident] = CensusRow(r.ident, r.stated, r.label, tuple(knots))
    validate(census)
    return census


def validate(census: Census):
    for e in census.entries.values():
        has_s1e = SymmetryType.S1E in e.symmetry_classes
        if has_s1e != (e.s1e_quotient_knotted is not None):
            raise ValidationError(
                f"{e.knot}: s1e_quotient must be given exactly when the classes include S1E"
            )
        if e.quotient_knot is not None and not e.s1e_quotient_knotted:
            raise ValidationError(f"{e.knot}: quotient_knot given but the S1E quotient is not knotted")
        if not e.tabulated and e.row is not None:
            raise ValidationError(f"{e.knot}: untabulated knot assigned to row {e.row}")
    for f in census.facts:
        if f.kind in (FactKind.EQUIVALENT_SURGERY, FactKind.QUOTIENT_IDENTIFIED):
            target = f.payload[0]
            if f.kind is FactKind.EQUIVALENT_SURGERY and target not in census.entries:
                raise ValidationError(f"fact for {f.knot}: unknown knot {target}")
    return census


def default_census_text() -> str:
    return resources.files("branch2").joinpath("data/census.txt").read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def _embedded() -> Census:
    return load_census(default_census_text())


def get_census(path=None) -> Census:
    """The census at ``path``, else $BRANCH2_CENSUS, else the embedded table."""
    path = path or os.environ.get(CENSUS_ENV)
    if not path:
        return _embedded()
    with open(path, encoding="utf-8") as fh:
        return load_census(fh)


def lookup(knot: str, census: Optional[Census] = None) -> CensusEntry:
    return (census or _embedded()).lookup(knot)


@dataclass(frozen=True)
class QuotientReport:
    knot: str
    slope: Slope
    results: tuple
    quotients: tuple
    facts: tuple
    via: Optional[tuple] = None

    @property
    def symmetry_group(self) -> Optional[str]:
        for f in self.facts:
            if f.kind is FactKind.SYMMETRY_GROUP:
                return f.payload[0]
        return None

    @property
    def exceptional(self) -> bool:
        return any(
            f.kind is FactKind.SYMMETRY_GROUP and f.payload[1] == "exceptional" for f in self.facts
        )

    def has_three_sphere(self) -> bool:
        return any(q.kind is QuotientKind.THREE_SPHERE for q in self.quotients)

    def __iter__(self):
        return iter(self.quotients)

    def __len__(self):
        return len(self.quotients)


def _fact_descriptor(fact: ExceptionalFact) -> QuotientDescriptor:
    name, s = fact.payload
    if _is_unknot(name):
        return _unknot_surgery(s)
    return QuotientDescriptor(QuotientKind.SURGERY_ON_QUOTIENT_KNOT, knot=name, slope=s, is_three_sphere=False)


def _unknot_surgery(s: Slope) -> QuotientDescriptor:
    if s.is_infinite or abs(s.p) == 1:
        return QuotientDescriptor(QuotientKind.THREE_SPHERE, is_three_sphere=True)
    return QuotientDescriptor(QuotientKind.LENS_SPACE, knot="unknot", slope=s, lens=(s.p, s.q), is_three_sphere=False)


def _class_result(entry: CensusEntry, t: SymmetryType, s: Slope) -> ExtensionResult:
    qk = f"{entry.knot}/tau" if t is SymmetryType.EE else None
    if t is SymmetryType.S1E:
        qk = (entry.quotient_knot or f"{entry.knot}/tau") if entry.s1e_quotient_knotted else "unknot"
    res = extend_involution(t, s, qk)
    if t is SymmetryType.EE and entry.torus and not res.free:
        p, q = entry.torus
        inv = quotient_invariants(p, q, s)
        quotient = QuotientDescriptor(
            QuotientKind.RP3_KNOT_FILLING, knot=res.quotient.knot, seifert=inv, is_three_sphere=False
        )
        res = ExtensionResult(res.extends, res.free, quotient, res.branch_components, res.degenerate, res.note)
    return res


def quotient_report(knot: str, s: Slope, census: Optional[Census] = None) -> QuotientReport:
    """Quotients of the s filling of ``knot`` under each of its involutions.

    Classes that do not extend, or whose quotient is singular, contribute a
    result but no quotient.  Facts recorded for (knot, s) are attached; a
    QuotientIdentified fact adds its quotient unless it is already listed.
    """
    census = census or _embedded()
    facts = tuple(census.facts_for(knot, s))
    via = None
    if knot not in census.entries:
        equiv = [f for f in facts if f.kind is FactKind.EQUIVALENT_SURGERY and f.payload[0] in census.entries]
        if not equiv:
            raise UnknownKnot(knot)
        via = equiv[0].payload
        entry = census.lookup(via[0])
        slope = via[1]
        facts = facts + tuple(census.facts_for(via[0], slope))
    else:
        entry = census.lookup(knot)
        slope = s

    results = tuple((t, _class_result(entry, t, slope)) for t in entry.sorted_classes())
    quotients = [
        r.quotient
        for _, r in results
        if r.extends and r.quotient.kind is not QuotientKind.SINGULAR
    ]
    for f in facts:
        if f.kind is FactKind.QUOTIENT_IDENTIFIED:
            d = _fact_descriptor(f)
            if d not in quotients:
                quotients.append(d)
    return QuotientReport(knot, s, results, tuple(quotients), facts, via)

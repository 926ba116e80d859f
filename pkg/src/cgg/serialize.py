"""File formats: Family JSON, CSV exports, count tables, and their schemas.

All emitters are deterministic (sorted content, fixed separators, trailing
newline) so repeated runs produce byte-identical files.
"""

from __future__ import annotations

import json
from typing import Iterable, Mapping

from .counting import CountReport
from .errors import DomainError
from .geometry import EdgeSet, GraphContext
from .matchings import FAMILY_LABELS, Family

FAMILY_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "Edge-set family",
    "type": "object",
    "required": ["m", "label", "count", "sets"],
    "additionalProperties": False,
    "properties": {
        "m": {"type": "integer", "minimum": 2},
        "label": {"enum": list(FAMILY_LABELS)},
        "count": {"type": "integer", "minimum": 0},
        "sets": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {
                    "type": "array",
                    "prefixItems": [
                        {"type": "integer", "minimum": 0},
                        {"type": "integer", "minimum": 1},
                    ],
                    "minItems": 2,
                    "maxItems": 2,
                },
            },
        },
        "stats": {
            "type": "object",
            "required": ["min_size", "solutions", "nodes"],
            "additionalProperties": False,
            "properties": {
                "min_size": {"type": "integer", "minimum": 0},
                "solutions": {"type": "integer", "minimum": 0},
                "nodes": {"type": "integer", "minimum": 0},
            },
        },
    },
}

VERIFY_REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "Verification report",
    "type": "object",
    "required": ["m", "check", "passed", "assertions"],
    "additionalProperties": False,
    "properties": {
        "m": {"type": "integer", "minimum": 2},
        "check": {"type": "string"},
        "passed": {"type": "boolean"},
        "assertions": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "passed", "detail"],
                "additionalProperties": False,
                "properties": {
                    "name": {"type": "string"},
                    "passed": {"type": "boolean"},
                    "detail": {"type": "string"},
                },
            },
        },
    },
}


def family_to_dict(family: Family, stats: Mapping[str, int] | None = None) -> dict:
    out: dict = {
        "m": family.ctx.m,
        "label": family.label,
        "count": len(family),
        "sets": [member.pairs() for member in family],
    }
    if stats is not None:
        out["stats"] = dict(stats)
    return out


def family_to_json(family: Family, stats: Mapping[str, int] | None = None) -> str:
    return json.dumps(family_to_dict(family, stats), indent=2) + "\n"


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise DomainError(message)


def parse_family(data: str | Mapping) -> Family:
    """Rebuild a Family from JSON text or an already-decoded mapping.

    The inverse of family_to_json up to the optional stats block, which
    describes the search that produced the family rather than the family
    itself and is therefore dropped.
    """
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise DomainError(f"family input is not valid JSON: {exc}") from exc
    _require(isinstance(data, Mapping), "family JSON must be an object")
    missing = {"m", "label", "count", "sets"} - set(data)
    _require(not missing, f"family JSON lacks fields: {sorted(missing)}")
    extra = set(data) - {"m", "label", "count", "sets", "stats"}
    _require(not extra, f"family JSON has unknown fields: {sorted(extra)}")
    m = data["m"]
    _require(isinstance(m, int) and not isinstance(m, bool), "field 'm' must be an integer")
    ctx = GraphContext(m)
    label = data["label"]
    _require(label in FAMILY_LABELS, f"field 'label' must be one of {FAMILY_LABELS}")
    sets = data["sets"]
    _require(isinstance(sets, list), "field 'sets' must be an array")
    members = []
    for i, raw in enumerate(sets):
        _require(isinstance(raw, list), f"sets[{i}] must be an array of edges")
        pairs = []
        for pair in raw:
            _require(
                isinstance(pair, list)
                and len(pair) == 2
                and all(isinstance(x, int) and not isinstance(x, bool) for x in pair),
                f"sets[{i}] contains a malformed edge: {pair!r}",
            )
            u, v = pair
            _require(u < v, f"sets[{i}] edge [{u},{v}] must be written with u < v")
            pairs.append((u, v))
        members.append(EdgeSet.from_pairs(ctx, pairs))
        _require(
            len(members[-1]) == len(raw), f"sets[{i}] repeats an edge"
        )
    _require(
        data["count"] == len(sets),
        f"field 'count' is {data['count']} but {len(sets)} sets are present",
    )
    family = Family.from_sets(ctx, members, label)
    _require(len(family) == len(members), "family JSON contains duplicate sets")
    return family


def edge_set_to_csv_token(member: EdgeSet) -> str:
    return ";".join(f"{e.u}-{e.v}" for e in member)


def family_to_csv(family: Family) -> str:
    lines = ["index,edges"]
    lines.extend(f"{i},{edge_set_to_csv_token(s)}" for i, s in enumerate(family))
    return "\n".join(lines) + "\n"


def parse_edge_token(token: str) -> tuple[int, int]:
    """One 'u-v' token to a vertex pair."""
    left, sep, right = token.partition("-")
    if not sep:
        raise DomainError(f"edge token {token!r} is not of the form u-v")
    try:
        return int(left), int(right)
    except ValueError as exc:
        raise DomainError(f"edge token {token!r} has non-integer labels") from exc


def parse_edge_list(text: str) -> list[tuple[int, int]]:
    """A comma-separated list of 'u-v' tokens; empty text means no edges."""
    stripped = text.strip()
    if not stripped:
        return []
    return [parse_edge_token(tok.strip()) for tok in stripped.split(",")]


COUNT_COLUMNS = ("m", "spm_count", "blocker_count", "coblocker_count", "lower_bound", "upper_bound")


def _report_cells(report: CountReport) -> list[str]:
    co = "" if report.coblocker_count is None else str(report.coblocker_count)
    return [
        str(report.m),
        str(report.spm_count),
        str(report.blocker_count),
        co,
        str(report.lower_bound),
        str(report.upper_bound),
    ]


def count_table_to_csv(reports: Iterable[CountReport]) -> str:
    lines = [",".join(COUNT_COLUMNS)]
    lines.extend(",".join(_report_cells(r)) for r in reports)
    return "\n".join(lines) + "\n"


def count_table_to_markdown(reports: Iterable[CountReport]) -> str:
    header = "| " + " | ".join(COUNT_COLUMNS) + " |"
    rule = "|" + "|".join(" --- " for _ in COUNT_COLUMNS) + "|"
    lines = [header, rule]
    for r in reports:
        cells = [cell if cell else "-" for cell in _report_cells(r)]
        lines.append("| " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"

"""Game and snapshot file formats, and table serialization.

Game files are JSON objects::

    {"quota": 0.5, "majors": [{"name": "A", "weight": 6}, 4], "ocean": 90}

Weights are in any consistent unit. Snapshot files are CSV with header
``entity,share``, shares in percent, and an optional ``OCEAN`` row; without
one the ocean is whatever is left of 100%.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Iterable, Optional, Sequence

from .errors import (
    DuplicateEntity,
    EmptySnapshot,
    GameFileError,
    MalformedRow,
    SharesExceedTotal,
    ValidationError,
)
from .game import OceanicGame, new_game
from .scenarios import SHARE_TOL, snapshot_game

OCEAN_NAME = "OCEAN"
_GAME_KEYS = {"quota", "majors", "ocean"}


def _number(value: Any, field: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise GameFileError(f"{field}: expected a number, got {value!r}")
    value = float(value)
    if not math.isfinite(value):
        raise GameFileError(f"{field}: must be finite")
    return value


def game_from_dict(data: Any) -> OceanicGame:
    if not isinstance(data, dict):
        raise GameFileError("game file must hold a JSON object")
    missing = _GAME_KEYS - data.keys()
    if missing:
        raise GameFileError(f"missing field(s): {', '.join(sorted(missing))}")
    extra = data.keys() - _GAME_KEYS
    if extra:
        raise GameFileError(f"unknown field(s): {', '.join(sorted(extra))}")
    quota = _number(data["quota"], "quota")
    ocean = _number(data["ocean"], "ocean")
    if not isinstance(data["majors"], list):
        raise GameFileError("majors: expected a list")
    weights, names = [], []
    any_named = False
    for i, entry in enumerate(data["majors"]):
        where = f"majors[{i}]"
        if isinstance(entry, dict):
            unknown = entry.keys() - {"name", "weight"}
            if unknown or "weight" not in entry:
                raise GameFileError(f"{where}: expected {{'name'?, 'weight'}}")
            weights.append(_number(entry["weight"], f"{where}.weight"))
            name = entry.get("name")
            if name is not None:
                if not isinstance(name, str) or not name:
                    raise GameFileError(f"{where}.name: expected a non-empty string")
                any_named = True
            names.append(name)
        else:
            weights.append(_number(entry, where))
            names.append(None)
    labels = None
    if any_named:
        labels = [n if n is not None else f"miner{i + 1}" for i, n in enumerate(names)]
        if len(set(labels)) != len(labels):
            raise GameFileError("majors: duplicate names")
    return new_game(quota, weights, ocean, labels)


def parse_game(text: str) -> OceanicGame:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GameFileError(f"invalid JSON: {exc}") from None
    return game_from_dict(data)


def game_to_dict(game: OceanicGame) -> dict:
    majors: list[Any]
    if game.labels is None:
        majors = list(game.majors)
    else:
        majors = [{"name": n, "weight": w} for n, w in zip(game.labels, game.majors)]
    return {"quota": game.quota, "majors": majors, "ocean": game.ocean}


def serialize_game(game: OceanicGame) -> str:
    return json.dumps(game_to_dict(game), indent=2) + "\n"


@dataclass(frozen=True)
class SnapshotFile:
    rows: tuple[tuple[str, float], ...]
    ocean: Optional[float] = None  # explicit OCEAN row, if present

    def inferred_ocean(self) -> float:
        if self.ocean is not None:
            return self.ocean
        return max(100.0 - math.fsum(s for _, s in self.rows), 0.0)

    def to_game(self, quota: float = 0.5) -> OceanicGame:
        return snapshot_game(self.rows, quota, self.ocean)


def parse_snapshot(text: str) -> SnapshotFile:
    """Parse ``entity,share`` CSV text; line numbers in errors are 1-based."""
    reader = csv.reader(io.StringIO(text))
    lines = [(n, row) for n, row in enumerate(reader, start=1) if any(c.strip() for c in row)]
    if not lines:
        raise EmptySnapshot("snapshot file is empty")
    first_line, header = lines[0]
    if [c.strip().lower() for c in header] != ["entity", "share"]:
        raise MalformedRow(first_line, "expected header 'entity,share'")
    rows: list[tuple[str, float]] = []
    seen: set[str] = set()
    ocean = None
    for line, row in lines[1:]:
        if len(row) != 2:
            raise MalformedRow(line, f"expected 2 fields, got {len(row)}")
        name, raw = row[0].strip(), row[1].strip()
        if not name:
            raise MalformedRow(line, "empty entity name")
        try:
            share = float(raw)
        except ValueError:
            raise MalformedRow(line, f"share {raw!r} is not a number") from None
        if not math.isfinite(share) or share <= 0:
            raise MalformedRow(line, f"share must be positive, got {raw!r}")
        if name in seen:
            raise DuplicateEntity(f"line {line}: entity {name!r} appears twice")
        seen.add(name)
        if name == OCEAN_NAME:
            ocean = share
        else:
            rows.append((name, share))
    if not rows and ocean is None:
        raise EmptySnapshot("snapshot has no data rows")
    total = math.fsum(s for _, s in rows) + (ocean or 0.0)
    if total > 100 + SHARE_TOL:
        raise SharesExceedTotal(f"shares sum to {total:.6g}% > 100%")
    return SnapshotFile(tuple(rows), ocean)


def serialize_snapshot(snap: SnapshotFile) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["entity", "share"])
    for name, share in snap.rows:
        writer.writerow([name, repr(share)])
    if snap.ocean is not None:
        writer.writerow([OCEAN_NAME, repr(snap.ocean)])
    return out.getvalue()


def load_game(path: str | Path, quota: Optional[float] = None) -> OceanicGame:
    """Load a game from ``.json`` or a snapshot ``.csv``; the suffix decides the format."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}") from None
    suffix = path.suffix.lower()
    if suffix == ".json":
        game = parse_game(text)
        if quota is not None:
            game = new_game(quota, game.majors, game.ocean, game.labels)
        return game
    if suffix == ".csv":
        return parse_snapshot(text).to_game(0.5 if quota is None else quota)
    raise ValidationError(f"{path}: unknown game file type {suffix!r} (use .json or .csv)")


def fmt(value: Any) -> str:
    """Six significant digits, locale independent."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".6g")
    return str(value)


def write_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([fmt(v) for v in row])
    return out.getvalue()


def write_json(payload: dict) -> str:
    return json.dumps(payload, indent=2, allow_nan=False) + "\n"

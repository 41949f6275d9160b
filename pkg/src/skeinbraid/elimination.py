"""Ordered Gaussian elimination of a level system.

Columns run from the highest s-monomial down to s_k, so every pivot row
expresses its unknown through lower monomials. A row that ends with s_k
alone gives a torsion witness b with b * s_k = 0.
"""

from __future__ import annotations

import logging
from typing import Any, NamedTuple

from .scalar import Scalar
from .skein import Equation, LevelSystem, min_of_level, s_key
from .trace import SMonomial

_logger = logging.getLogger(__name__)

_Row = dict[SMonomial, Scalar]


class Relation(NamedTuple):
    """unknown = coefficient * s_k; coefficient is None when the bounds do not determine it."""

    unknown: SMonomial
    coefficient: Scalar | None

    @property
    def determined(self) -> bool:
        return self.coefficient is not None

    def render(self, minimal: SMonomial) -> str:
        if self.coefficient is None:
            return f"{self.unknown.render()}: undetermined at these bounds"
        return f"{self.unknown.render()} = ({self.coefficient.render()}) * {minimal.render()}"

    def to_json(self) -> dict[str, Any]:
        return {
            "unknown": self.unknown.to_json(),
            "determined": self.determined,
            "coeff": self.coefficient.to_json() if self.coefficient is not None else None,
        }


class Pivot(NamedTuple):
    unknown: SMonomial
    provenance: str


class SolvedSystem(NamedTuple):
    level: int
    minimal: SMonomial
    relations: tuple[Relation, ...]
    witnesses: tuple[Scalar, ...]
    rank: int
    pivots: tuple[Pivot, ...]

    def relation(self, unknown: SMonomial) -> Relation | None:
        return next((r for r in self.relations if r.unknown == unknown), None)

    def render(self) -> str:
        lines = [f"level {self.level}: rank {self.rank}, minimal monomial {self.minimal.render()}"]
        lines.append("relations:" if self.relations else "relations: none")
        lines.extend("  " + r.render(self.minimal) for r in self.relations)
        if self.witnesses:
            lines.append("torsion witnesses (b with b * %s = 0):" % self.minimal.render())
            lines.extend(f"  {w.render()}" for w in self.witnesses)
        else:
            lines.append("torsion witnesses: none")
        lines.append("pivots:")
        lines.extend(f"  {p.unknown.render()} <- {p.provenance}" for p in self.pivots)
        return "\n".join(lines)

    def to_json(self) -> dict[str, Any]:
        return {
            "level": self.level,
            "minimal": self.minimal.to_json(),
            "rank": self.rank,
            "relations": [r.to_json() for r in self.relations],
            "witnesses": [w.to_json() for w in self.witnesses],
            "witnesses_rendered": [w.render() for w in self.witnesses],
            "pivots": [
                {"unknown": p.unknown.to_json(), "provenance": p.provenance} for p in self.pivots
            ],
        }


def _row(eq: Equation) -> _Row:
    return dict(eq.lhs.items())


def _subtract(target: _Row, source: _Row, factor: Scalar) -> _Row:
    out = dict(target)
    for col, value in source.items():
        updated = out.get(col, Scalar(0)) - factor * value
        if updated:
            out[col] = updated
        else:
            out.pop(col, None)
    return out


def eliminate(system: LevelSystem) -> SolvedSystem:
    minimal = min_of_level(system.level)
    columns = sorted(set(system.unknowns) | {minimal}, key=s_key, reverse=True)

    rows: list[_Row] = []
    origin: list[str] = []
    for eq in system.equations:
        if not eq.degenerate:
            rows.append(_row(eq))
            origin.append(eq.provenance)

    remaining = list(range(len(rows)))
    pivots: list[tuple[SMonomial, int]] = []
    for col in columns:
        pick = next((r for r in remaining if col in rows[r]), None)
        if pick is None:
            continue
        remaining.remove(pick)
        pivots.append((col, pick))
        lead = rows[pick][col]
        for r in remaining:
            if col in rows[r]:
                rows[r] = _subtract(rows[r], rows[pick], rows[r][col] / lead)
    _logger.debug("level %d: %d pivots among %d rows", system.level, len(pivots), len(rows))

    pivot_row = dict(pivots)
    witnesses: list[Scalar] = []
    if minimal in pivot_row:
        witnesses.append(rows[pivot_row[minimal]][minimal])

    # back substitution from the lowest pivot up; s_k stands for itself
    values: dict[SMonomial, Scalar | None] = {minimal: Scalar(1)}
    for col, r in reversed(pivots):
        if col == minimal:
            continue
        row = rows[r]
        total: Scalar | None = Scalar(0)
        for other, coef in row.items():
            if other == col:
                continue
            value = values.get(other)
            if value is None:
                total = None
                break
            total = total + coef * value  # type: ignore[operator]
        values[col] = None if total is None else -total / row[col]

    relations = tuple(
        Relation(u, values.get(u)) for u in columns if u != minimal
    )
    return SolvedSystem(
        level=system.level,
        minimal=minimal,
        relations=relations,
        witnesses=tuple(witnesses),
        rank=len(pivots),
        pivots=tuple(Pivot(col, origin[r]) for col, r in pivots),
    )

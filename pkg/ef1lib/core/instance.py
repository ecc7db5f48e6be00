"""Fair-division instance model."""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Any

from .errors import InstanceError

RawUtility = int | str | Fraction


@dataclass(frozen=True)
class Instance:
    """Agents, named goods and an integer utility matrix.

    Rows are stored after per-agent denominator clearing, so they are positive
    multiples of the rational input. EF1 comparisons are unaffected by that
    scaling.
    """

    n: int
    goods: tuple[str, ...]
    utilities: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise InstanceError(f"an instance needs at least 2 agents, got {self.n}")
        if not self.goods:
            raise InstanceError("an instance needs at least one good")
        if len(set(self.goods)) != len(self.goods):
            dupes = sorted({g for g in self.goods if self.goods.count(g) > 1})
            raise InstanceError(f"duplicate good names: {', '.join(dupes)}")
        if len(self.utilities) != self.n:
            raise InstanceError(
                f"expected {self.n} utility rows, got {len(self.utilities)}"
            )
        for i, row in enumerate(self.utilities):
            if len(row) != len(self.goods):
                raise InstanceError(
                    f"row {i + 1} has {len(row)} entries, expected {len(self.goods)}"
                )
            for value in row:
                if isinstance(value, bool) or not isinstance(value, int):
                    raise InstanceError(f"row {i + 1} holds a non-integer {value!r}")
                if value < 0:
                    raise InstanceError(f"row {i + 1} holds a negative utility")

    @property
    def m(self) -> int:
        return len(self.goods)

    @cached_property
    def identical(self) -> bool:
        first = self.utilities[0]
        return all(row == first for row in self.utilities[1:])

    @cached_property
    def binary(self) -> bool:
        return all(value in (0, 1) for row in self.utilities for value in row)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {name: k for k, name in enumerate(self.goods)}

    def index_of(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise InstanceError(f"unknown good '{name}'") from None

    def value(self, agent: int, goods: Iterable[int]) -> int:
        row = self.utilities[agent]
        return sum(row[g] for g in goods)

    def to_dict(self) -> dict[str, Any]:
        return {
            "agents": self.n,
            "goods": list(self.goods),
            "utilities": [list(row) for row in self.utilities],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Instance:
        rows = data["utilities"]
        n = int(data["agents"])
        if data.get("identical") and len(rows) == 1:
            rows = [rows[0]] * n
        return normalize_instance(n, data["goods"], rows)


def normalize_instance(
    n: int,
    goods: Sequence[str],
    rows: Sequence[Sequence[RawUtility]],
) -> Instance:
    if n < 2:
        raise InstanceError(f"an instance needs at least 2 agents, got {n}")
    if len(rows) != n:
        raise InstanceError(f"expected {n} utility rows, got {len(rows)}")
    scaled: list[tuple[int, ...]] = []
    for i, row in enumerate(rows):
        values = [_parse_utility(value, i) for value in row]
        lcm = math.lcm(*(value.denominator for value in values)) if values else 1
        scaled.append(tuple(int(value * lcm) for value in values))
    return Instance(n=n, goods=tuple(str(g) for g in goods), utilities=tuple(scaled))


def _parse_utility(value: RawUtility, row: int) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise InstanceError(
            f"row {row + 1}: utilities must be integers or 'p/q' strings, "
            f"got {value!r}"
        )
    try:
        parsed = Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError):
        raise InstanceError(f"row {row + 1}: cannot parse utility {value!r}") from None
    if parsed < 0:
        raise InstanceError(f"row {row + 1}: negative utility {value!r}")
    return parsed


__all__ = ["Instance", "RawUtility", "normalize_instance"]

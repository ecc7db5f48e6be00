"""Minimal schema validation for instance, allocation and path payloads."""

from __future__ import annotations

import re
from typing import Any

_RATIONAL = re.compile(r"^\s*\d+(\s*/\s*\d+)?\s*$")


def validate_instance_dict(data: dict[str, Any]) -> list[str]:
    errors: list[str] = []
    if not isinstance(data, dict):
        return ["Instance payload must be a dictionary."]

    agents = data.get("agents")
    goods = data.get("goods")
    utilities = data.get("utilities")
    identical = data.get("identical", False)

    if isinstance(agents, bool) or not isinstance(agents, int):
        errors.append("agents must be an integer.")
        agents = None
    elif agents < 2:
        errors.append("agents must be at least 2.")
    if not isinstance(goods, list) or not goods:
        errors.append("goods must be a non-empty list of names.")
        goods = []
    else:
        if not all(isinstance(name, str) for name in goods):
            errors.append("good names must be strings.")
        if len(set(map(str, goods))) != len(goods):
            errors.append("good names must be unique.")
    if not isinstance(identical, bool):
        errors.append("identical must be a boolean when provided.")
    if not isinstance(utilities, list):
        errors.append("utilities must be a list of rows.")
        return errors

    if identical:
        if len(utilities) != 1:
            errors.append("identical instances must give exactly one utility row.")
    elif agents is not None and len(utilities) != agents:
        errors.append(f"utilities must have {agents} rows, got {len(utilities)}.")
    for index, row in enumerate(utilities):
        if not isinstance(row, list):
            errors.append(f"utilities[{index}] must be a list.")
            continue
        if goods and len(row) != len(goods):
            errors.append(
                f"utilities[{index}] has {len(row)} entries, expected {len(goods)}."
            )
        for value in row:
            if not _is_utility(value):
                errors.append(
                    f"utilities[{index}] entry {value!r} must be a non-negative "
                    "integer or a 'p/q' string."
                )
    return errors


def validate_allocation_dict(
    data: dict[str, Any], goods: list[str] | None = None
) -> list[str]:
    errors: list[str] = []
    if not isinstance(data, dict):
        return ["Allocation payload must be a dictionary."]
    bundles = data.get("bundles")
    if not isinstance(bundles, list):
        return ["bundles must be a list of good-name lists."]
    seen: list[str] = []
    for index, bundle in enumerate(bundles):
        if not isinstance(bundle, list):
            errors.append(f"bundles[{index}] must be a list.")
            continue
        for name in bundle:
            if not isinstance(name, str):
                errors.append(f"bundles[{index}] entry {name!r} must be a string.")
                continue
            if name in seen:
                errors.append(f"good '{name}' appears in more than one bundle.")
            seen.append(name)
    if goods is not None:
        missing = [name for name in goods if name not in seen]
        unknown = [name for name in seen if name not in goods]
        if missing:
            errors.append(f"goods not allocated: {', '.join(missing)}.")
        if unknown:
            errors.append(f"unknown goods: {', '.join(unknown)}.")
    return errors


def validate_path_dict(data: dict[str, Any]) -> list[str]:
    errors: list[str] = []
    if not isinstance(data, dict):
        return ["Path payload must be a dictionary."]
    path = data.get("path")
    if not isinstance(path, list):
        return ["path must be a list of moves."]
    for index, move in enumerate(path):
        if not isinstance(move, dict):
            errors.append(f"path[{index}] must be an object.")
            continue
        kind = move.get("kind", "exchange")
        if kind not in ("exchange", "transfer"):
            errors.append(f"path[{index}] kind must be 'exchange' or 'transfer'.")
        for key in ("i", "j"):
            value = move.get(key)
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                errors.append(f"path[{index}] {key} must be a 1-based agent number.")
        if not isinstance(move.get("g"), str):
            errors.append(f"path[{index}] g must be a good name.")
        if kind == "exchange" and not isinstance(move.get("h"), str):
            errors.append(f"path[{index}] exchange needs a good name in h.")
    return errors


def _is_utility(value: Any) -> bool:
    if isinstance(value, bool):
        return False
    if isinstance(value, int):
        return value >= 0
    if isinstance(value, str):
        return bool(_RATIONAL.match(value)) and not value.strip().endswith("/0")
    return False


def _raise_if_invalid(kind: str, errors: list[str]) -> None:
    if errors:
        message = f"Invalid {kind} payload:\n" + "\n".join(
            f"- {error}" for error in errors
        )
        raise ValueError(message)


def validate_instance_payload(data: dict[str, Any]) -> None:
    _raise_if_invalid("instance", validate_instance_dict(data))


def validate_allocation_payload(
    data: dict[str, Any], goods: list[str] | None = None
) -> None:
    _raise_if_invalid("allocation", validate_allocation_dict(data, goods))


def validate_path_payload(data: dict[str, Any]) -> None:
    _raise_if_invalid("path", validate_path_dict(data))


__all__ = [
    "validate_allocation_dict",
    "validate_allocation_payload",
    "validate_instance_dict",
    "validate_instance_payload",
    "validate_path_dict",
    "validate_path_payload",
]

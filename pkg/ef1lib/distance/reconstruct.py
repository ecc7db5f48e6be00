"""Exchange paths from circuit partitions."""

from __future__ import annotations

from collections.abc import Iterable

from ef1lib.core import Allocation, Exchange, PreconditionError

from .item_graph import Circuit, build_item_graph, validate_circuit_partition


def path_from_partition(
    source: Allocation, target: Allocation, part: Iterable[Circuit]
) -> list[Exchange]:
    """Close each circuit by repeatedly swapping its last two goods.

    A circuit of length l costs l - 1 exchanges. EF1 is not preserved in general.
    """
    circuits = [tuple(circuit) for circuit in part]
    errors = validate_circuit_partition(build_item_graph(source, target), circuits)
    if errors:
        raise PreconditionError("invalid circuit partition: " + "; ".join(errors))
    owners = list(source.owners)
    path: list[Exchange] = []
    for circuit in circuits:
        goods = list(circuit)
        while len(goods) > 1:
            x, y = goods[-2], goods[-1]
            move = Exchange(owners[x], owners[y], x, y)
            move.apply(owners)
            path.append(move)
            del goods[-2]
    return path


__all__ = ["path_from_partition"]

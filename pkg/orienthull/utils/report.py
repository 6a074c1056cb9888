"""Line-oriented run reports ("key: value", one key per line)."""
from typing import Any, Iterable, List, Tuple

from orienthull.graph.vertex_set import VertexSet


def format_value(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, VertexSet):
        return "[" + value.to_string() + "]"
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return "[" + ",".join(format_value(v) for v in items) + "]"
    return str(value)


class RunReport:
    def __init__(self, command: str):
        self.entries: List[Tuple[str, str]] = []

        # False when the requested predicate or solve did not succeed
        self.ok = True
        self.add("command", command)

    def add(self, key: str, value: Any):
        if " " in key or ":" in key:
            raise ValueError(f"Report keys may not contain spaces or colons: {key}")
        self.entries.append((key, format_value(value)))

    def extend(self, items: Iterable[Tuple[str, Any]]):
        for key, value in items:
            self.add(key, value)

    def get(self, key: str) -> str:
        for k, v in reversed(self.entries):
            if k == key:
                return v
        raise KeyError(key)

    def __contains__(self, key: str) -> bool:
        return any(k == key for k, _ in self.entries)

    def to_text(self) -> str:
        return "".join(f"{k}: {v}\n" for k, v in self.entries)

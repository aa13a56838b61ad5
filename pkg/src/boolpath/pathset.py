"""Plain container for sets of paths, shared by the algebraic and brute-force sides."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


def canonical_path(vertices: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically smaller of a vertex sequence and its reverse."""
    fwd = tuple(vertices)
    return min(fwd, fwd[::-1])


@dataclass(frozen=True)
class PathSet:
    paths: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, paths: Iterable[Sequence[int]]) -> PathSet:
        return cls(tuple(sorted({tuple(p) for p in paths})))

    @property
    def count(self) -> int:
        return len(self.paths)

    @property
    def length(self) -> int | None:
        return len(self.paths[0]) - 1 if self.paths else None

    def __iter__(self):
        return iter(self.paths)

    def __len__(self):
        return len(self.paths)

from dataclasses import dataclass, field
from sortedcontainers import SortedList
from fdhull.errors import UnknownPoint
from fdhull.geometry import Point


@dataclass
class XEntry:
    """All live points sharing one x-coordinate."""

    x: int
    ys: SortedList = field(default_factory=SortedList)
    bucket_id: int | None = None

    @property
    def representative(self) -> Point:
        return Point(self.x, self.ys[-1])


@dataclass(frozen=True)
class NewRepresentative:
    point: Point


@dataclass(frozen=True)
class ReplaceRepresentative:
    old: Point
    new: Point


@dataclass(frozen=True)
class Shadowed:
    point: Point


@dataclass(frozen=True)
class RemoveRepresentative:
    point: Point
    successor: Point | None
    bucket_id: int | None


@dataclass(frozen=True)
class UnshadowOnly:
    point: Point


InsertEffect = NewRepresentative | ReplaceRepresentative | Shadowed
DeleteEffect = RemoveRepresentative | UnshadowOnly


class DedupIndex:
    """Dictionary on x-coordinates keeping the max-y representative per x.

    Only representatives are passed on to the hull structures. Identical
    points are kept with multiplicity, and each deletion removes one copy.
    """

    def __init__(self):
        self._entries: dict[int, XEntry] = {}

    def __len__(self) -> int:
        """Number of distinct live x-coordinates."""
        return len(self._entries)

    def __contains__(self, p: Point) -> bool:
        entry = self._entries.get(p.x)
        return entry is not None and p.y in entry.ys

    def insert(self, p: Point) -> InsertEffect:
        entry = self._entries.get(p.x)
        if entry is None:
            entry = self._entries[p.x] = XEntry(p.x)
            entry.ys.add(p.y)
            return NewRepresentative(p)

        old = entry.representative
        entry.ys.add(p.y)
        if p.y > old.y:
            return ReplaceRepresentative(old, p)
        return Shadowed(p)

    def delete(self, p: Point) -> DeleteEffect:
        entry = self._entries.get(p.x)
        if entry is None or p.y not in entry.ys:
            raise UnknownPoint(f"{p} is not stored")

        representative = entry.representative
        entry.ys.remove(p.y)
        if p != representative or (entry.ys and entry.ys[-1] == p.y):
            # A shadowed point, or one of several identical representatives
            return UnshadowOnly(p)

        bucket_id = entry.bucket_id
        if not entry.ys:
            del self._entries[p.x]
            return RemoveRepresentative(p, None, bucket_id)
        return RemoveRepresentative(p, entry.representative, bucket_id)

    def locate(self, x: int) -> int | None:
        """Bucket currently holding the representative with this x."""
        entry = self._entries.get(x)
        return None if entry is None else entry.bucket_id

    def relocate(self, x: int, bucket_id: int | None):
        entry = self._entries.get(x)
        if entry is not None:
            entry.bucket_id = bucket_id

    def representative(self, x: int) -> Point | None:
        entry = self._entries.get(x)
        return None if entry is None else entry.representative

    def representatives(self):
        """Iterate over the current representatives in no particular order."""
        for entry in self._entries.values():
            yield entry.representative

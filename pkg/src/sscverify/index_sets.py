"""Constant-time integer sets over a bounded universe ``[1, capacity]``."""

from __future__ import annotations

from .errors import IndexOutOfRange


class SparseIndexSet:
    """Sparse set: a dense member list plus a member -> slot map.

    Insert, remove, contains and pick are O(1).  Removal moves the last
    member into the freed slot, so :meth:`pick` (the last member in dense
    order) behaves as a stack.

    >>> t = SparseIndexSet(8)
    >>> for e in (2, 6, 8):
    ...     t.insert(e)
    >>> t.pick()
    8
    """

    __slots__ = ("capacity", "_dense", "_pos", "_size")

    def __init__(self, capacity: int):
        if capacity < 0:
            raise ValueError("capacity must be non-negative")
        self.capacity = capacity
        self._dense = [0] * capacity
        self._pos = [-1] * (capacity + 1)
        self._size = 0

    def _check(self, e: int) -> None:
        if not 1 <= e <= self.capacity:
            raise IndexOutOfRange(f"{e} outside [1, {self.capacity}]")

    def insert(self, e: int) -> None:
        self._check(e)
        if self._pos[e] >= 0:
            return
        self._dense[self._size] = e
        self._pos[e] = self._size
        self._size += 1

    def remove(self, e: int) -> None:
        self._check(e)
        p = self._pos[e]
        if p < 0:
            return
        self._size -= 1
        last = self._dense[self._size]
        self._dense[p] = last
        self._pos[last] = p
        self._pos[e] = -1

    def contains(self, e: int) -> bool:
        self._check(e)
        return self._pos[e] >= 0

    def __contains__(self, e: int) -> bool:
        return 1 <= e <= self.capacity and self._pos[e] >= 0

    def pick(self) -> int:
        """Last member in dense order; the set is left unchanged."""
        if not self._size:
            raise KeyError("pick from an empty set")
        return self._dense[self._size - 1]

    def choice(self, rng) -> int:
        """Uniformly random member; ``rng`` is a :class:`random.Random`."""
        if not self._size:
            raise KeyError("choice from an empty set")
        return self._dense[rng.randrange(self._size)]

    def is_empty(self) -> bool:
        return self._size == 0

    def __len__(self) -> int:
        return self._size

    def __iter__(self):
        return iter(self._dense[: self._size])

    def members(self) -> list[int]:
        """Members in dense order."""
        return self._dense[: self._size]

    def __repr__(self) -> str:
        return f"SparseIndexSet({self.capacity}, {sorted(self)})"


class MembershipFlags:
    """Boolean flags over ``[1, size]`` with a running count of set flags."""

    __slots__ = ("flags", "count")

    def __init__(self, size: int, members=()):
        self.flags = bytearray(size)
        self.count = 0
        for e in members:
            self.add(e)

    def _check(self, e: int) -> None:
        if not 1 <= e <= len(self.flags):
            raise IndexOutOfRange(f"{e} outside [1, {len(self.flags)}]")

    def add(self, e: int) -> None:
        self._check(e)
        if not self.flags[e - 1]:
            self.flags[e - 1] = 1
            self.count += 1

    def discard(self, e: int) -> None:
        self._check(e)
        if self.flags[e - 1]:
            self.flags[e - 1] = 0
            self.count -= 1

    def __contains__(self, e: int) -> bool:
        return 1 <= e <= len(self.flags) and bool(self.flags[e - 1])

    def __len__(self) -> int:
        return self.count

    def members(self) -> list[int]:
        """Set flags in increasing order."""
        return [i + 1 for i, f in enumerate(self.flags) if f]

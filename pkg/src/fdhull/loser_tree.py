from math import inf
from operator import attrgetter
from typing import Callable, Generic, Iterator, Sequence, TypeVar


T = TypeVar("T")


class LoserTree(Generic[T]):
    """Tournament tree merging k sorted runs.

    Internal node v stores the run that lost the match played at v, and slot 0
    stores the overall winner, i.e. the run holding the smallest unconsumed
    key. Popping the winner replays a single leaf-to-root path, so each pop
    costs O(log k) comparisons. Exhausted runs compare as +inf.
    """

    def __init__(
        self,
        runs: Sequence[Sequence[T]],
        key: Callable[[T], int] = attrgetter("x"),
    ):
        k = max(1, len(runs))
        size = 1 << (k - 1).bit_length()
        self._runs = list(runs) + [()] * (size - len(runs))
        self._key = key
        self._size = size
        self._cursor = [0] * size
        self._remaining = sum(len(run) for run in runs)

        # Play the initial tournament bottom-up
        winners = [0] * (2 * size)
        self._tree = [0] * size
        for i in range(size):
            winners[size + i] = i
        for v in range(size - 1, 0, -1):
            left, right = winners[2 * v], winners[2 * v + 1]
            if self._head_key(left) <= self._head_key(right):
                winners[v], self._tree[v] = left, right
            else:
                winners[v], self._tree[v] = right, left
        self._tree[0] = winners[1] if size > 1 else 0

    def _head_key(self, run: int) -> float:
        cursor = self._cursor[run]
        items = self._runs[run]
        return self._key(items[cursor]) if cursor < len(items) else inf

    def __len__(self) -> int:
        return self._remaining

    def peek(self) -> T:
        winner = self._tree[0]
        if self._head_key(winner) == inf:
            raise IndexError("peek from an exhausted loser tree")
        return self._runs[winner][self._cursor[winner]]

    def pop(self) -> T:
        """Remove and return the smallest unconsumed item."""
        winner = self._tree[0]
        if self._head_key(winner) == inf:
            raise IndexError("pop from an exhausted loser tree")
        item = self._runs[winner][self._cursor[winner]]
        self._cursor[winner] += 1
        self._remaining -= 1

        # Replay the winner's path against the stored losers
        key = self._head_key(winner)
        v = (self._size + winner) >> 1
        while v:
            loser = self._tree[v]
            loser_key = self._head_key(loser)
            if loser_key < key:
                self._tree[v], winner, key = winner, loser, loser_key
            v >>= 1
        self._tree[0] = winner
        return item

    def __iter__(self) -> Iterator[T]:
        while self._remaining:
            yield self.pop()

"""
Sparse graded Betti tables of R/I.
"""
from collections import defaultdict
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from pandas import DataFrame

from .errors import InvalidParameters


class BettiTable:
    """
    Association (i, j) -> β_{i,j}, storing positive entries only.

    ``scope`` is the set of internal degrees j the table speaks for; ``None``
    means every column. A closed-form table that only knows the top column
    uses it so that comparisons ignore the columns it cannot predict.
    """

    def __init__(self, entries: Optional[Dict[Tuple[int, int], int]] = None,
                 scope: Optional[Iterable[int]] = None):
        self.entries: Dict[Tuple[int, int], int] = {}
        self.scope: Optional[FrozenSet[int]] = frozenset(scope) if scope is not None else None
        for (i, j), value in (entries or {}).items():
            self.add(i, j, value)

    def add(self, i: int, j: int, value: int = 1):
        if value < 0:
            raise InvalidParameters(f"Betti numbers are nonnegative, got {value} at ({i}, {j})")
        if i > j:
            raise InvalidParameters(f"β_{{{i},{j}}} would have i > j")
        if value:
            self.entries[(i, j)] = self.entries.get((i, j), 0) + value

    def get(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def column(self, j: int) -> Dict[int, int]:
        return {i: v for (i, jj), v in sorted(self.entries.items()) if jj == j}

    def columns(self) -> List[int]:
        return sorted({j for _, j in self.entries})

    def covers(self, j: int) -> bool:
        return self.scope is None or j in self.scope

    @property
    def pd(self) -> int:
        if not self.entries:
            raise InvalidParameters("projective dimension of an empty table is undefined")
        return max(i for i, _ in self.entries)

    @property
    def reg(self) -> int:
        if not self.entries:
            raise InvalidParameters("regularity of an empty table is undefined")
        return max(j - i for i, j in self.entries)

    def merge(self, other: 'BettiTable') -> 'BettiTable':
        merged = BettiTable(self.entries, scope=self.scope)
        for (i, j), value in other.entries.items():
            merged.add(i, j, value)
        if self.scope is not None and other.scope is not None:
            merged.scope = self.scope | other.scope
        else:
            merged.scope = None
        return merged

    def restricted(self, columns: Optional[Iterable[int]]) -> 'BettiTable':
        if columns is None:
            return BettiTable(self.entries, scope=self.scope)
        keep = frozenset(columns)
        return BettiTable({key: v for key, v in self.entries.items() if key[1] in keep}, scope=keep)

    def differences(self, other: 'BettiTable') -> List[Dict]:
        """Entries where the two tables disagree, limited to the shared scope."""
        keys = sorted(set(self.entries) | set(other.entries))
        diffs = []
        for i, j in keys:
            if not (self.covers(j) and other.covers(j)):
                continue
            mine, theirs = self.get(i, j), other.get(i, j)
            if mine != theirs:
                diffs.append({'i': i, 'j': j, 'left': mine, 'right': theirs})
        return diffs

    def records(self) -> List[Dict[str, int]]:
        return [{'i': i, 'j': j, 'value': v} for (i, j), v in sorted(self.entries.items())]

    @classmethod
    def from_records(cls, records: Iterable[Dict], scope: Optional[Iterable[int]] = None) -> 'BettiTable':
        totals = defaultdict(int)
        for record in records:
            totals[(int(record['i']), int(record['j']))] += int(record['value'])
        return cls(dict(totals), scope=scope)

    def to_dataframe(self) -> DataFrame:
        """Rows i, columns j, zeros filled in."""
        frame = DataFrame(self.records(), columns=['i', 'j', 'value'])
        if frame.empty:
            return DataFrame()
        pivot = frame.pivot_table(index='i', columns='j', values='value', aggfunc='sum', fill_value=0)
        return pivot.astype(int)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.entries == other.entries

    def __len__(self) -> int:
        return len(self.entries)

    def __repr__(self) -> str:
        body = ', '.join(f"({i},{j}):{v}" for (i, j), v in sorted(self.entries.items()))
        return f"BettiTable({{{body}}})"

"""
Domain types for ordinal panel data.

Labels are kept for the outside world; every algorithm works on dense
integer indices (subjects 0..n-1, categories 0..k-1, timestamps 0..m).
"""
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..errors import LayoutError, ValidationError


@dataclass(frozen=True)
class CategorySet:
    """Category labels with stable indexing 0..k-1."""
    labels: Tuple[str, ...]
    _index: Dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'labels', tuple(self.labels))
        index: Dict[str, int] = {}
        for i, label in enumerate(self.labels):
            index.setdefault(label, i)
        object.__setattr__(self, '_index', index)

    @property
    def k(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ValidationError(f"unknown category label {label!r}") from None

    def __contains__(self, label: str) -> bool:
        return label in self._index


@dataclass(frozen=True)
class SigmaOrdering:
    """Linear order of categories stored as a rank array.

    ``rank[c]`` is the position of category ``c``; position 0 is the
    lowest (least mature) category.
    """
    rank: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'rank', tuple(self.rank))
        if sorted(self.rank) != list(range(len(self.rank))):
            raise ValidationError(f"sigma is not a permutation of 0..{len(self.rank) - 1}: {self.rank}")

    @classmethod
    def identity(cls, k: int) -> 'SigmaOrdering':
        return cls(tuple(range(k)))

    @classmethod
    def from_order(cls, order: Sequence[int]) -> 'SigmaOrdering':
        """Build from the categories listed lowest first."""
        rank = [0] * len(order)
        if sorted(order) != list(range(len(order))):
            raise ValidationError(f"sigma order is not a permutation: {tuple(order)}")
        for position, category in enumerate(order):
            rank[category] = position
        return cls(tuple(rank))

    @property
    def k(self) -> int:
        return len(self.rank)

    @property
    def order(self) -> Tuple[int, ...]:
        """Categories from lowest to highest rank."""
        out = [0] * len(self.rank)
        for category, position in enumerate(self.rank):
            out[position] = category
        return tuple(out)

    def reversed(self) -> 'SigmaOrdering':
        top = len(self.rank) - 1
        return SigmaOrdering(tuple(top - r for r in self.rank))

    def precedes(self, a: int, b: int) -> bool:
        return self.rank[a] < self.rank[b]


@dataclass(frozen=True)
class OpdInstance:
    """An ordinal panel data instance (subjects, categories, tests, sigma).

    ``tests[i][j]`` is the category index of subject ``j`` at timestamp ``i``.
    Construction does not validate; use validate_instance() or from_labels().
    """
    subjects: Tuple[str, ...]
    categories: CategorySet
    tests: Tuple[Tuple[int, ...], ...]
    sigma: Optional[SigmaOrdering] = None

    def __post_init__(self):
        object.__setattr__(self, 'subjects', tuple(self.subjects))
        object.__setattr__(self, 'tests', tuple(tuple(row) for row in self.tests))
        if not isinstance(self.categories, CategorySet):
            object.__setattr__(self, 'categories', CategorySet(tuple(self.categories)))

    @classmethod
    def from_labels(cls, subjects: Sequence[str], categories: Sequence[str],
                    rows: Sequence[Sequence[str]],
                    sigma_labels: Optional[Sequence[str]] = None) -> 'OpdInstance':
        """Build a validated instance from label rows (one row per timestamp)."""
        from .validation import validate_instance

        cats = CategorySet(tuple(categories))
        tests = tuple(tuple(cats.index(label) for label in row) for row in rows)
        sigma = None
        if sigma_labels is not None:
            sigma = SigmaOrdering.from_order([cats.index(label) for label in sigma_labels])
        inst = cls(tuple(subjects), cats, tests, sigma)
        violations = validate_instance(inst)
        if violations:
            raise ValidationError(f"invalid instance: {violations[0]}", violations)
        return inst

    @property
    def n(self) -> int:
        return len(self.subjects)

    @property
    def m(self) -> int:
        """Number of intervals (timestamps minus one)."""
        return len(self.tests) - 1

    @property
    def k(self) -> int:
        return self.categories.k

    def require_sigma(self) -> SigmaOrdering:
        if self.sigma is None:
            raise ValidationError("instance has no category ordering (sigma)")
        return self.sigma

    def with_sigma(self, sigma: SigmaOrdering) -> 'OpdInstance':
        return OpdInstance(self.subjects, self.categories, self.tests, sigma)

    def trajectory(self, subject: int) -> Tuple[int, ...]:
        return tuple(row[subject] for row in self.tests)

    def rank_rows(self) -> List[List[int]]:
        """Test matrix with every category replaced by its sigma rank."""
        rank = self.require_sigma().rank
        return [[rank[c] for c in row] for row in self.tests]


@dataclass(frozen=True)
class CombinatorialLayout:
    """One permutation of subject indices per timestamp, lowest position first."""
    pis: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        pis = tuple(tuple(pi) for pi in self.pis)
        object.__setattr__(self, 'pis', pis)
        if not pis:
            raise LayoutError("layout has no permutations")
        n = len(pis[0])
        for i, pi in enumerate(pis):
            if sorted(pi) != list(range(n)):
                raise LayoutError(f"pi_{i} is not a permutation of 0..{n - 1}")

    @property
    def n(self) -> int:
        return len(self.pis[0])

    @property
    def m(self) -> int:
        return len(self.pis) - 1

    def positions(self, i: int) -> List[int]:
        """``positions(i)[s]`` is the index of subject ``s`` in pi_i."""
        pos = [0] * self.n
        for p, s in enumerate(self.pis[i]):
            pos[s] = p
        return pos


def as_layout(pis: Iterable[Sequence[int]]) -> CombinatorialLayout:
    return CombinatorialLayout(tuple(tuple(pi) for pi in pis))

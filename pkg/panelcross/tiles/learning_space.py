"""
Learning spaces over a finite item domain.

Knowledge states are bitmask integers: bit i set means domain[i] is
mastered. Python ints have no width limit, so any domain size works.
"""
import logging
from collections import deque
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

import networkx as nx

from ..config import get_setting
from ..errors import BudgetExceededError, ValidationError, Violation

logger = logging.getLogger(__name__)


def popcount(x: int) -> int:
    return bin(x).count('1')


@dataclass(frozen=True)
class LearningSpace:
    domain: Tuple[str, ...]
    states: FrozenSet[int]

    def __post_init__(self):
        object.__setattr__(self, 'domain', tuple(self.domain))
        object.__setattr__(self, 'states', frozenset(self.states))

    @classmethod
    def from_sets(cls, domain: Sequence[str],
                  states: Iterable[Iterable[str]]) -> 'LearningSpace':
        index = {item: i for i, item in enumerate(domain)}
        masks = set()
        for state in states:
            mask = 0
            for item in state:
                if item not in index:
                    raise ValidationError(f"state item {item!r} not in domain")
                mask |= 1 << index[item]
            masks.add(mask)
        return cls(tuple(domain), frozenset(masks))

    @classmethod
    def powerset(cls, domain: Sequence[str]) -> 'LearningSpace':
        return cls(tuple(domain), frozenset(range(1 << len(domain))))

    @classmethod
    def chain(cls, domain: Sequence[str]) -> 'LearningSpace':
        """Items learned strictly in domain order."""
        return cls(tuple(domain), frozenset((1 << i) - 1 for i in range(len(domain) + 1)))

    @property
    def full(self) -> int:
        return (1 << len(self.domain)) - 1

    def mask(self, items: Iterable[str]) -> int:
        index = {item: i for i, item in enumerate(self.domain)}
        out = 0
        for item in items:
            if item not in index:
                raise ValidationError(f"item {item!r} not in domain")
            out |= 1 << index[item]
        return out

    def items(self, state: int) -> FrozenSet[str]:
        return frozenset(q for i, q in enumerate(self.domain) if state >> i & 1)

    def label(self, state: int) -> str:
        return '{' + ','.join(q for i, q in enumerate(self.domain) if state >> i & 1) + '}'

    def __contains__(self, state: int) -> bool:
        return state in self.states


def _upward_reach(start: int, states: Set[int], width: int) -> Set[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for i in range(width):
            bit = 1 << i
            if current & bit:
                continue
            nxt = current | bit
            if nxt in states and nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def validate_learning_space(space: LearningSpace,
                            max_states: Optional[int] = None) -> List[Violation]:
    """Report missing bounds, smoothness gaps and consistency failures."""
    if max_states is None:
        max_states = get_setting('learning_space', 'max_states')
    states = set(space.states)
    if len(states) > max_states:
        raise BudgetExceededError(
            f"{len(states)} knowledge states exceed budget {max_states}",
            required=len(states), budget=max_states,
        )

    report: List[Violation] = []
    width = len(space.domain)
    full = space.full
    if 0 not in states:
        report.append(Violation('missing_empty', "empty state is not a knowledge state", state=0))
    if full not in states:
        report.append(Violation('missing_domain', "full domain is not a knowledge state", state=full))
    stray = [s for s in states if s & ~full or s < 0]
    for s in sorted(stray):
        report.append(Violation('foreign_items', f"state {bin(s)} uses items outside the domain", state=s))

    ordered = sorted(states, key=lambda s: (popcount(s), s))
    for lower in ordered:
        reach = _upward_reach(lower, states, width)
        for upper in ordered:
            if upper != lower and lower & upper == lower and upper not in reach:
                report.append(Violation(
                    'smoothness',
                    f"no one-item chain from {space.label(lower)} to {space.label(upper)}",
                    state=lower,
                ))

    for lower in ordered:
        for i in range(width):
            bit = 1 << i
            if lower & bit or (lower | bit) not in states:
                continue
            for upper in ordered:
                if upper & bit or lower & upper != lower:
                    continue
                if (upper | bit) not in states:
                    report.append(Violation(
                        'consistency',
                        f"{space.label(lower)} + {space.domain[i]} is a state but "
                        f"{space.label(upper)} + {space.domain[i]} is not",
                        state=lower,
                    ))

    logger.debug(f"learning space with {len(states)} states: {len(report)} violation(s)")
    return report


def learning_space_graph(space: LearningSpace) -> nx.Graph:
    """States joined when they differ in exactly one item."""
    violations = validate_learning_space(space)
    if violations:
        raise ValidationError(f"not a learning space: {violations[0]}", violations)
    graph = nx.Graph()
    for state in sorted(space.states):
        graph.add_node(state, items=space.items(state))
    for state in sorted(space.states):
        for i in range(len(space.domain)):
            bit = 1 << i
            if not state & bit and (state | bit) in space.states:
                graph.add_edge(state, state | bit, item=space.domain[i])
    return graph

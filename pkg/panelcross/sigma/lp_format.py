"""
Integer program for the optimal sigma, written in CPLEX LP text format.

Variables:
  x_i_j        1 iff category i is ranked below category j (every i != j)
  y_a_b_c_d    1 iff the pairs (a, b) and (c, d) are ordered differently;
               only created for table keys with sc + wc > 0

Rows, emitted in sorted order:
  anti_i_j      x_i_j + x_j_i = 1
  trans_i_j_l   x_i_j + x_j_l - x_i_l <= 1   (the lower side follows from
                the reversed triple through the anti rows)
  xor1_*/xor2_* y >= x_a_b - x_c_d and y >= x_c_d - x_a_b

Tautological keys cannot be expressed as variables; their total is written
as a ``\\ constant: N`` comment and must be added to the solver's optimum.
"""
import itertools
import re
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Tuple

from ..core.model import SigmaOrdering
from ..errors import ParseError
from .tables import ResponsibilityTables


def x_name(i: int, j: int) -> str:
    return f"x_{i}_{j}"


def y_name(key) -> str:
    (a, b), (c, d) = key
    return f"y_{a}_{b}_{c}_{d}"


def _expression(terms: List[Tuple[int, str]], coefficients: bool = False) -> str:
    parts = []
    for coef, name in terms:
        sign = '-' if coef < 0 else '+'
        body = f"{abs(coef)} {name}" if coefficients or abs(coef) != 1 else name
        if parts:
            parts.append(f"{sign} {body}")
        else:
            parts.append(body if coef >= 0 else f"- {body}")
    return ' '.join(parts)


def export_ilp(tables: ResponsibilityTables, k: int) -> str:
    """Complete LP model text for the tables of a k-category instance."""
    keys = [(key, entry.total) for key, entry in tables.sorted_items() if entry.total > 0]
    lines = [
        f"\\ optimal category ordering: {k} categories, {len(keys)} y-variables",
        f"\\ constant: {tables.constant}",
        "Minimize",
    ]
    objective = _expression([(w, y_name(key)) for key, w in keys], coefficients=True)
    lines.append(f" obj: {objective or '0'}")

    lines.append("Subject To")
    pairs = [(i, j) for i in range(k) for j in range(k) if i != j]
    for i, j in pairs:
        lines.append(f" anti_{i}_{j}: {x_name(i, j)} + {x_name(j, i)} = 1")
    for i, j, l in itertools.permutations(range(k), 3):
        lines.append(f" trans_{i}_{j}_{l}: {x_name(i, j)} + {x_name(j, l)} - {x_name(i, l)} <= 1")
    for key, _ in keys:
        (a, b), (c, d) = key
        y, first, second = y_name(key), x_name(a, b), x_name(c, d)
        suffix = y[2:]
        lines.append(f" xor1_{suffix}: {y} - {first} + {second} >= 0")
        lines.append(f" xor2_{suffix}: {y} - {second} + {first} >= 0")

    lines.append("Binary")
    for i, j in pairs:
        lines.append(f" {x_name(i, j)}")
    for key, _ in keys:
        lines.append(f" {y_name(key)}")
    lines.append("End")
    return '\n'.join(lines) + '\n'


@dataclass
class LpModel:
    objective: Dict[str, int] = field(default_factory=dict)
    constraints: Dict[str, Tuple[Dict[str, int], str, int]] = field(default_factory=dict)
    binaries: List[str] = field(default_factory=list)
    constant: int = 0

    def rows(self, prefix: str) -> List[str]:
        return [name for name in self.constraints if name.startswith(prefix)]

    def evaluate(self, values: Mapping[str, int]) -> int:
        return self.constant + sum(c * values.get(v, 0) for v, c in self.objective.items())

    def feasible(self, values: Mapping[str, int]) -> bool:
        for terms, sense, rhs in self.constraints.values():
            lhs = sum(c * values.get(v, 0) for v, c in terms.items())
            if sense == '=' and lhs != rhs:
                return False
            if sense == '<=' and lhs > rhs:
                return False
            if sense == '>=' and lhs < rhs:
                return False
        return True


_TERM = re.compile(r'([+-]?)\s*(\d*)\s*([A-Za-z_]\w*)')
_ROW = re.compile(r'^\s*(\w+)\s*:\s*(.*?)\s*(<=|>=|=)\s*(-?\d+)\s*$')
_CONSTANT = re.compile(r'^\\\s*constant:\s*(-?\d+)\s*$')


def _terms(expression: str) -> Dict[str, int]:
    out: Dict[str, int] = {}
    for sign, coef, name in _TERM.findall(expression):
        value = int(coef) if coef else 1
        out[name] = out.get(name, 0) + (-value if sign == '-' else value)
    return out


def parse_lp(text: str) -> LpModel:
    """Read back the subset of LP format written by export_ilp."""
    model = LpModel()
    section = None
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith('\\'):
            match = _CONSTANT.match(line)
            if match:
                model.constant = int(match.group(1))
            continue
        lowered = line.lower()
        if lowered in ('minimize', 'subject to', 'binary', 'end'):
            section = lowered
            continue
        if section == 'minimize':
            _, _, expression = line.partition(':')
            model.objective = _terms(expression)
        elif section == 'subject to':
            match = _ROW.match(line)
            if not match:
                raise ParseError(f"malformed constraint {line!r}", row=number)
            name, expression, sense, rhs = match.groups()
            model.constraints[name] = (_terms(expression), sense, int(rhs))
        elif section == 'binary':
            model.binaries.append(line)
        else:
            raise ParseError(f"unexpected line {line!r}", row=number)
    if section != 'end':
        raise ParseError("LP text does not end with End")
    return model


def assignment_for_sigma(model: LpModel, sigma: SigmaOrdering) -> Dict[str, int]:
    """x and y values that encode sigma in an exported model."""
    rank = sigma.rank
    values: Dict[str, int] = {}
    for name in model.binaries:
        parts = name.split('_')
        if parts[0] == 'x':
            i, j = int(parts[1]), int(parts[2])
            values[name] = int(rank[i] < rank[j])
        elif parts[0] == 'y':
            a, b, c, d = map(int, parts[1:])
            values[name] = int((rank[a] < rank[b]) != (rank[c] < rank[d]))
    return values

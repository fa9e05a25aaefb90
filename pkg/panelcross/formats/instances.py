"""
Instance files.

CSV: a header ``subject,t0,t1,...,tm`` then one row per subject whose cells
are category labels, taken verbatim. Optional directive rows before the
header, ``#categories,<labels>`` (index order) and ``#sigma,<labels>``
(lowest first), carry unused categories and a sigma other than the category
order. After the header every row is a subject row, ``#`` included.

JSON (version 1): ``{"version": 1, "subjects": [...], "categories": [...],
"sigma": [...], "tests": [[...], ...]}`` with one tests row per timestamp.

Without a category list, categories are numbered in order of first
appearance. Without sigma, sigma follows the category order. Loaded
instances therefore always carry a sigma.
"""
import csv
import io
import json
import logging
from typing import Dict, List, Optional, Sequence

from ..core.model import CategorySet, OpdInstance, SigmaOrdering
from ..core.validation import validate_instance
from ..errors import ParseError, ValidationError
from ..schemas.definitions import FORMAT_VERSION
from ..schemas.validator import get_validator
from .streams import Source, open_text, suffix_format

logger = logging.getLogger(__name__)

FORMATS = ('csv', 'json')


def _detect(text: str) -> str:
    return 'json' if text.lstrip().startswith('{') else 'csv'


def _finish(subjects: Sequence[str], labels: List[str], rows: List[List[int]],
            sigma_labels: Optional[Sequence[str]]) -> OpdInstance:
    categories = CategorySet(tuple(labels))
    if sigma_labels is None:
        sigma = SigmaOrdering.identity(len(labels))
    else:
        if sorted(sigma_labels) != sorted(labels):
            raise ParseError("sigma must list every category exactly once", path='sigma')
        sigma = SigmaOrdering.from_order([categories.index(c) for c in sigma_labels])
    inst = OpdInstance(tuple(subjects), categories, tuple(tuple(r) for r in rows), sigma)
    violations = validate_instance(inst)
    if violations:
        raise ValidationError(f"invalid instance: {violations[0]}", violations)
    return inst


def _parse_csv(text: str, categories: Optional[Sequence[str]]) -> OpdInstance:
    reader = csv.reader(io.StringIO(text))
    labels: Optional[List[str]] = list(categories) if categories else None
    sigma_labels: Optional[List[str]] = None
    header: Optional[List[str]] = None
    subjects: List[str] = []
    columns: List[List[str]] = []
    line_numbers: List[int] = []

    for cells in reader:
        row = reader.line_num
        if not cells or not any(c.strip() for c in cells):
            continue
        if header is None and cells[0].startswith('#'):
            directive = cells[0][1:].strip().lower()
            values = [c for c in cells[1:] if c != '']
            if directive == 'categories':
                labels = values
            elif directive == 'sigma':
                sigma_labels = values
            else:
                raise ParseError(f"unknown directive {cells[0]!r}", row=row, column=1)
            continue
        if header is None:
            if len(cells) < 3:
                raise ParseError("header needs a subject column and at least two tests", row=row)
            header = cells
            continue
        if len(cells) != len(header):
            raise ParseError(f"expected {len(header)} cells, got {len(cells)}", row=row)
        for col, cell in enumerate(cells, start=1):
            if cell == '':
                raise ParseError("empty cell", row=row, column=col)
        subjects.append(cells[0])
        columns.append(cells[1:])
        line_numbers.append(row)

    if header is None:
        raise ParseError("missing header row", row=1)

    known = labels is not None
    labels = list(labels or [])
    index: Dict[str, int] = {label: i for i, label in enumerate(labels)}
    matrix: List[List[int]] = [[0] * len(subjects) for _ in range(len(header) - 1)]
    for j, cells in enumerate(columns):
        for i, label in enumerate(cells):
            if label not in index:
                if known:
                    raise ParseError(f"unknown category {label!r}",
                                     row=line_numbers[j], column=i + 2)
                index[label] = len(labels)
                labels.append(label)
            matrix[i][j] = index[label]
    return _finish(subjects, labels, matrix, sigma_labels)


def _parse_json(text: str, categories: Optional[Sequence[str]]) -> OpdInstance:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", row=e.lineno, column=e.colno) from e
    ok, err = get_validator().validate_instance_file(data)
    if not ok:
        raise ParseError(f"instance file does not match schema: {err}")

    subjects = data['subjects']
    labels = data.get('categories') or (list(categories) if categories else None)
    known = labels is not None
    labels = list(labels or [])
    index = {label: i for i, label in enumerate(labels)}
    matrix: List[List[int]] = []
    for i, row in enumerate(data['tests']):
        if len(row) != len(subjects):
            raise ParseError(f"expected {len(subjects)} entries, got {len(row)}", path=f"tests[{i}]")
        out = []
        for j, label in enumerate(row):
            if label not in index:
                if known:
                    raise ParseError(f"unknown category {label!r}", path=f"tests[{i}][{j}]")
                index[label] = len(labels)
                labels.append(label)
            out.append(index[label])
        matrix.append(out)
    return _finish(subjects, labels, matrix, data.get('sigma'))


def load_instance(source: Source, fmt: Optional[str] = None,
                  categories: Optional[Sequence[str]] = None) -> OpdInstance:
    """Read and validate an instance from a path, ``-`` or a text stream."""
    with open_text(source) as f:
        text = f.read()
    fmt = fmt or suffix_format(source) or _detect(text)
    if fmt not in FORMATS:
        raise ParseError(f"unknown instance format {fmt!r}")
    inst = _parse_csv(text, categories) if fmt == 'csv' else _parse_json(text, categories)
    logger.info(f"loaded instance: n={inst.n} k={inst.k} m={inst.m}")
    return inst


def instance_to_dict(inst: OpdInstance) -> dict:
    labels = inst.categories.labels
    data = {
        'version': FORMAT_VERSION,
        'subjects': list(inst.subjects),
        'categories': list(labels),
    }
    if inst.sigma is not None:
        data['sigma'] = [labels[c] for c in inst.sigma.order]
    data['tests'] = [[labels[c] for c in row] for row in inst.tests]
    return data


def save_instance(inst: OpdInstance, dest: Source, fmt: str = 'json') -> None:
    if fmt not in FORMATS:
        raise ParseError(f"unknown instance format {fmt!r}")
    labels = inst.categories.labels
    with open_text(dest, 'w') as f:
        if fmt == 'json':
            json.dump(instance_to_dict(inst), f, indent=2)
            f.write('\n')
            return
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(['#categories'] + list(labels))
        if inst.sigma is not None:
            writer.writerow(['#sigma'] + [labels[c] for c in inst.sigma.order])
        writer.writerow(['subject'] + [f"t{i}" for i in range(inst.m + 1)])
        for s, name in enumerate(inst.subjects):
            writer.writerow([name] + [labels[row[s]] for row in inst.tests])

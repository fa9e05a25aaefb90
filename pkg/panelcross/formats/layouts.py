"""Layout files: ``{"version": 1, "pis": [[...]], "report": {...}}``."""
import json
from typing import Optional, Tuple

from ..core.model import CombinatorialLayout
from ..errors import LayoutError, ParseError
from ..layout.crossings import CrossingReport
from ..schemas.definitions import FORMAT_VERSION
from ..schemas.validator import get_validator
from .streams import Source, open_text


def layout_to_dict(layout: CombinatorialLayout,
                   report: Optional[CrossingReport] = None) -> dict:
    data = {'version': FORMAT_VERSION, 'pis': [list(pi) for pi in layout.pis]}
    if report is not None:
        data['report'] = report.to_dict()
    return data


def save_layout(layout: CombinatorialLayout, dest: Source,
                report: Optional[CrossingReport] = None) -> None:
    with open_text(dest, 'w') as f:
        json.dump(layout_to_dict(layout, report), f, indent=2)
        f.write('\n')


def load_layout(source: Source) -> Tuple[CombinatorialLayout, Optional[CrossingReport]]:
    with open_text(source) as f:
        text = f.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", row=e.lineno, column=e.colno) from e
    ok, err = get_validator().validate_layout_file(data)
    if not ok:
        raise ParseError(f"layout file does not match schema: {err}")
    try:
        layout = CombinatorialLayout(tuple(tuple(pi) for pi in data['pis']))
    except LayoutError as e:
        raise ParseError(str(e), path='pis') from e
    report = None
    if 'report' in data:
        r = data['report']
        report = CrossingReport(r['total'], tuple(r['per_interval']), r.get('strong'), r.get('weak'))
    return layout, report

#!/usr/bin/env python3
"""Tests for instance/layout/space files, tile export, SVG rendering and the CLI."""
import contextlib
import io
import json
import os
import sys
import tempfile
import traceback

sys.path.insert(0, '.')

from panelcross.analysis import extremal_instance_general, random_instance
from panelcross.cli import cli_dispatch
from panelcross.core import CategorySet, OpdInstance, SigmaOrdering, as_layout
from panelcross.errors import ParseError, ValidationError
from panelcross.formats import (
    export_tile,
    instance_to_dict,
    load_instance,
    load_layout,
    load_learning_space,
    save_instance,
    save_layout,
    vertex_name,
)
from panelcross.layout import count_layout_crossings, layout_report, optimal_layout
from panelcross.render import DrawingOptions, compute_drawing, render_svg
from panelcross.tiles import ordinal_panel_tile

CSV_TEXT = """subject,t0,t1,t2
a,low,low,high
b,high,low,low
c,mid,high,high
"""


def run(argv, stdin=None):
    """Run the CLI, returning (exit code, stdout text)."""
    out = io.StringIO()
    saved = sys.stdin
    if stdin is not None:
        sys.stdin = io.StringIO(stdin)
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(io.StringIO()):
            code = cli_dispatch(argv)
    finally:
        sys.stdin = saved
    return code, out.getvalue()


def write(directory, name, text):
    path = os.path.join(directory, name)
    with open(path, 'w', encoding='utf-8') as f:
        f.write(text)
    return path


# --- instance files ---

def test_load_csv_first_appearance():
    inst = load_instance(io.StringIO(CSV_TEXT), 'csv')
    assert inst.subjects == ('a', 'b', 'c')
    assert inst.categories.labels == ('low', 'high', 'mid')
    assert inst.tests[0] == (0, 1, 2)
    assert inst.sigma == SigmaOrdering.identity(3)


def test_load_csv_with_categories():
    inst = load_instance(io.StringIO(CSV_TEXT), 'csv', categories=['low', 'mid', 'high', 'top'])
    assert inst.k == 4
    assert inst.tests[2] == (2, 0, 2)
    try:
        load_instance(io.StringIO(CSV_TEXT), 'csv', categories=['low', 'high'])
        assert False, "unknown category must raise"
    except ParseError as e:
        assert (e.row, e.column) == (4, 2)


def test_load_csv_directives():
    text = "#categories,low,mid,high\n#sigma,high,mid,low\n" + CSV_TEXT
    inst = load_instance(io.StringIO(text), 'csv')
    assert inst.categories.labels == ('low', 'mid', 'high')
    assert inst.sigma.order == (2, 1, 0)


def test_load_csv_errors():
    try:
        load_instance(io.StringIO("subject,t0,t1\na,x\n"), 'csv')
        assert False, "short row must raise"
    except ParseError as e:
        assert e.row == 2
    try:
        load_instance(io.StringIO("subject,t0\na,x\n"), 'csv')
        assert False, "one test column must raise"
    except ParseError as e:
        assert e.row == 1
    try:
        load_instance(io.StringIO("subject,t0,t1\na,x,y\na,y,x\n"), 'csv')
        assert False, "duplicate subject must raise"
    except ValidationError as e:
        assert [v.kind for v in e.violations] == ['duplicate_subject']


def test_load_json():
    data = {'version': 1, 'subjects': ['a', 'b'], 'categories': ['lo', 'hi'],
            'sigma': ['hi', 'lo'], 'tests': [['lo', 'hi'], ['hi', 'hi']]}
    inst = load_instance(io.StringIO(json.dumps(data)))
    assert inst.tests == ((0, 1), (1, 1))
    assert inst.sigma.order == (1, 0)
    assert instance_to_dict(inst) == data


def test_load_json_errors():
    try:
        load_instance(io.StringIO('{"subjects": ["a"],\n "tests": [['), 'json')
        assert False, "truncated JSON must raise"
    except ParseError as e:
        assert e.row == 2
    try:
        load_instance(io.StringIO('{"subjects": ["a"], "tests": [["x"]]}'), 'json')
        assert False, "one timestamp violates the schema"
    except ParseError:
        pass
    bad = {'subjects': ['a', 'b'], 'categories': ['lo'], 'tests': [['lo', 'lo'], ['lo', 'hi']]}
    try:
        load_instance(io.StringIO(json.dumps(bad)), 'json')
        assert False, "unknown category must raise"
    except ParseError as e:
        assert e.path == 'tests[1][1]'


def test_instance_round_trip():
    inst = OpdInstance(('a', 'b', 'c'), CategorySet(('lo', 'mid', 'hi', 'unused')),
                       ((0, 2, 1), (2, 2, 0), (1, 0, 0)), SigmaOrdering.from_order([3, 2, 0, 1]))
    for fmt in ('json', 'csv'):
        buffer = io.StringIO()
        save_instance(inst, buffer, fmt)
        assert load_instance(io.StringIO(buffer.getvalue()), fmt) == inst, fmt


def test_instance_round_trip_keeps_odd_labels():
    # '#' subjects and labels with surrounding spaces survive both formats
    inst = OpdInstance(('#1', ' b', 'b', '#sigma'), CategorySet((' lo', 'lo', 'hi ')),
                       ((0, 1, 2, 0), (2, 0, 1, 1)), SigmaOrdering.from_order([1, 0, 2]))
    for fmt in ('json', 'csv'):
        buffer = io.StringIO()
        save_instance(inst, buffer, fmt)
        loaded = load_instance(io.StringIO(buffer.getvalue()), fmt)
        assert loaded == inst, fmt
        assert loaded.subjects == ('#1', ' b', 'b', '#sigma')
        assert loaded.categories.labels == (' lo', 'lo', 'hi ')


def test_load_csv_hash_rows_after_header():
    inst = load_instance(io.StringIO("subject,t0,t1\n#1,x,y\nb,y,x\n"), 'csv')
    assert inst.subjects == ('#1', 'b')
    assert inst.tests == ((0, 1), (1, 0))
    try:
        load_instance(io.StringIO("#colours,x,y\nsubject,t0,t1\na,x,y\n"), 'csv')
        assert False, "unknown directive must raise"
    except ParseError as e:
        assert (e.row, e.column) == (1, 1)


def test_layout_round_trip():
    inst = extremal_instance_general(4, 2, 2)
    layout, report = layout_report(inst)
    buffer = io.StringIO()
    save_layout(layout, buffer, report)
    loaded, loaded_report = load_layout(io.StringIO(buffer.getvalue()))
    assert loaded == layout
    assert loaded_report == report
    try:
        load_layout(io.StringIO('{"version": 1, "pis": [[0, 0]]}'))
        assert False, "non-permutation must raise"
    except ParseError:
        pass


def test_learning_space_file():
    text = json.dumps({'domain': ['a', 'b'], 'states': [[], ['a'], ['b'], ['a', 'b']]})
    space = load_learning_space(io.StringIO(text))
    assert space.states == frozenset({0, 1, 2, 3})
    try:
        load_learning_space(io.StringIO(json.dumps({'domain': ['a'], 'states': [['z']]})))
        assert False, "foreign item must raise"
    except ParseError:
        pass


def test_export_tile():
    inst = OpdInstance(('a', 'b'), CategorySet(('c',)), ((0, 0), (0, 0), (0, 0)),
                       SigmaOrdering.identity(1))
    tile = ordinal_panel_tile(inst, as_layout([(0, 1), (1, 0), (1, 0)]))
    lines = export_tile(tile).splitlines()
    assert lines[0] == '# tile: 6 vertices, 4 edges'
    assert lines[1] == 'L 0:subject:0:0 0:subject:0:1'
    assert lines[2].startswith('W ') and lines[3].startswith('R ')
    assert len([line for line in lines if ' -- ' in line]) == 4
    assert vertex_name((1, ('state', 2, 5))) == '1:state:2:5'


# --- SVG ---

def test_drawing_matches_layout():
    for seed in range(10):
        inst = random_instance(5, 3, 3, seed)
        layout = optimal_layout(inst)
        spec = compute_drawing(inst, layout, DrawingOptions())
        for i, pi in enumerate(layout.pis):
            bottom_up = sorted(range(inst.n), key=lambda s: -spec.curves[s].points[i][1])
            assert tuple(bottom_up) == pi, (seed, i)
        assert len(spec.markers) == count_layout_crossings(inst, layout).total
        assert spec.bands[0].bottom > spec.bands[-1].bottom


def test_drawing_bands():
    inst = OpdInstance(('a', 'b', 'c'), CategorySet(('lo', 'hi')), ((0, 0, 1), (0, 0, 0)),
                       SigmaOrdering.identity(2))
    layout = optimal_layout(inst)
    occupied = compute_drawing(inst, layout, DrawingOptions())
    heights = [b.bottom - b.top for b in occupied.bands]
    assert abs(heights[0] - 3 * heights[1]) < 1e-6
    equal = compute_drawing(inst, layout, DrawingOptions(equal_bands=True))
    heights = [b.bottom - b.top for b in equal.bands]
    assert abs(heights[0] - heights[1]) < 1e-6


def _cubic_point(a, b, u):
    # same control points as the smooth path: (xa, ya), (xa + h, ya), (xb - h, yb), (xb, yb)
    (xa, ya), (xb, yb) = a, b
    h = (xb - xa) / 2
    w = ((1 - u) ** 3, 3 * (1 - u) ** 2 * u, 3 * (1 - u) * u ** 2, u ** 3)
    x = w[0] * xa + w[1] * (xa + h) + w[2] * (xb - h) + w[3] * xb
    y = w[0] * ya + w[1] * ya + w[2] * yb + w[3] * yb
    return x, y


def _y_on_cubic(a, b, x):
    lo, hi = 0.0, 1.0
    for _ in range(80):
        mid = (lo + hi) / 2
        if _cubic_point(a, b, mid)[0] < x:
            lo = mid
        else:
            hi = mid
    return _cubic_point(a, b, (lo + hi) / 2)[1]


def test_smooth_markers_on_curves():
    inst = OpdInstance(('a', 'b', 'c'), CategorySet(('lo', 'hi')), ((0, 0, 1), (1, 0, 0)),
                       SigmaOrdering.identity(2))
    layout = as_layout([(0, 1, 2), (1, 2, 0)])
    straight = compute_drawing(inst, layout, DrawingOptions())
    smooth = compute_drawing(inst, layout, DrawingOptions(smooth=True))
    assert len(smooth.markers) == len(straight.markers) == 2
    for marker in smooth.markers:
        x, y = marker.point
        i = marker.interval
        for s in marker.subjects:
            points = smooth.curves[s].points
            assert abs(_y_on_cubic(points[i], points[i + 1], x) - y) < 1e-6, (marker, s)
    # off-centre crossings move once the segments are curved
    moved = [abs(a.point[0] - b.point[0]) for a, b in zip(smooth.markers, straight.markers)]
    assert min(moved) > 1.0
    assert [m.point[1] for m in smooth.markers] == [m.point[1] for m in straight.markers]


def test_render_svg():
    inst = OpdInstance(('a', 'b"<'), CategorySet(('lo', 'hi')), ((0, 1), (1, 0)),
                       SigmaOrdering.identity(2))
    layout = optimal_layout(inst)
    svg = render_svg(inst, layout)
    assert svg.startswith('<?xml')
    assert '<text id="caption"' in svg and 'crossings: 1</text>' in svg
    assert svg.count('<path') == 2
    assert svg.count('<circle') == 1
    assert 'data-subject="b&quot;&lt;"' in svg
    assert render_svg(inst, layout) == svg
    smooth = render_svg(inst, layout, DrawingOptions(smooth=True))
    assert ' C ' in smooth and ' L ' not in smooth

    empty = OpdInstance((), CategorySet(('c',)), ((), ()), SigmaOrdering.identity(1))
    svg = render_svg(empty, as_layout([(), ()]))
    assert svg.endswith('</svg>\n') and '<path' not in svg


# --- CLI ---

def test_cli_expected():
    assert run(['expected', '--n', '2', '--k', '2', '--m', '1']) == (0, '0.125 (1/8)\n')
    code, out = run(['expected', '--n', '2', '--k', '2', '--m', '2', '--json'])
    assert code == 0
    assert json.loads(out) == {'expected': 0.3125, 'fraction': '5/16'}


def test_cli_usage_errors():
    assert run([])[0] == 1
    assert run(['shuffle'])[0] == 1
    assert run(['pcr'])[0] == 1
    assert run(['expected', '--n', 'two', '--k', '2', '--m', '1'])[0] == 1
    assert run(['--help'])[0] == 0


def test_cli_gen_pipe_pcr():
    code, generated = run(['gen', 'random', '--n', '2', '--k', '2', '--m', '1', '--seed', '7'])
    assert code == 0
    assert json.loads(generated)['version'] == 1
    code, out = run(['pcr', '--input', '-'], stdin=generated)
    assert code == 0
    assert out.split()[0] in ('0', '1')
    code, out = run(['pcr', '--input', '-', '--json'], stdin=generated)
    payload = json.loads(out)
    assert payload['pcr'] == payload['strong'] + payload['weak']


def test_cli_files():
    with tempfile.TemporaryDirectory() as tmp:
        csv_path = write(tmp, 'panel.csv', CSV_TEXT)
        layout_path = os.path.join(tmp, 'layout.json')
        code, out = run(['layout', '--input', csv_path, '--out', layout_path])
        assert code == 0 and out.startswith('pcr ')
        layout, report = load_layout(layout_path)
        assert report.total == count_layout_crossings(load_instance(csv_path), layout).total

        svg_path = os.path.join(tmp, 'panel.svg')
        assert run(['draw', '--input', csv_path, '--layout', layout_path,
                    '--svg', svg_path, '--smooth'])[0] == 0
        with open(svg_path, encoding='utf-8') as f:
            assert f'crossings: {report.total}</text>' in f.read()

        code, out = run(['validate', '--input', csv_path, '--json'])
        assert code == 0 and json.loads(out)['valid'] is True

        code, out = run(['tile', '--input', csv_path, '--layout', layout_path])
        assert code == 0 and out.splitlines()[1].startswith('L ')

        code, out = run(['oracle', 'pcr', '--input', csv_path])
        assert code == 0 and int(out) == report.total


def test_cli_optimize_sigma():
    with tempfile.TemporaryDirectory() as tmp:
        path = write(tmp, 'three.csv', "subject,t0,t1\na,c1,c3\nb,c2,c2\n")
        code, out = run(['optimize-sigma', '--input', path, '--categories', 'c1,c2,c3', '--json'])
        assert code == 0
        assert json.loads(out) == {'sigma': ['c1', 'c3', 'c2'], 'objective': 0,
                                   'nodes': json.loads(out)['nodes']}
        code, out = run(['oracle', 'sigma', '--input', path, '--categories', 'c1,c2,c3'])
        assert code == 0 and out.splitlines()[-1] == 'objective: 0'

        lp_path = os.path.join(tmp, 'model.lp')
        code, _ = run(['optimize-sigma', '--input', path, '--categories', 'c1,c2,c3',
                       '--export-lp', lp_path])
        assert code == 0
        with open(lp_path, encoding='utf-8') as f:
            assert ' obj: 1 y_0_1_2_1' in f.read().splitlines()


def test_cli_analysis_commands():
    assert run(['bounds-consistent', '--n', '4', '--k', '3', '--m', '1']) == (0, '4 <= ecr <= 6\n')
    code, out = run(['estimate', '--n', '2', '--k', '2', '--m', '1', '--samples', '50',
                     '--seed', '3', '--json'])
    assert code == 0 and json.loads(out)['samples'] == 50
    code, out = run(['gen', 'extremal', '--n', '4', '--k', '2', '--m', '2', '--format', 'csv'])
    assert code == 0 and out.startswith('#categories,C1,C2\n')
    code, out = run(['pcr', '--input', '-', '--format', 'csv'], stdin=out)
    assert out.split()[0] == '8'
    assert run(['gen', 'extremal-consistent', '--n', '4', '--k', '3', '--m', '1'])[0] == 0


def test_cli_data_and_budget_errors():
    with tempfile.TemporaryDirectory() as tmp:
        bad = write(tmp, 'bad.csv', "subject,t0,t1\na,x\n")
        code, out = run(['pcr', '--input', bad, '--json'])
        assert code == 2 and json.loads(out)['error'] == 'data'
        assert run(['pcr', '--input', os.path.join(tmp, 'missing.csv')])[0] == 2
        assert run(['expected', '--n', '2', '--k', '1', '--m', '1'])[0] == 2

        rows = ["subject,t0,t1"] + [f"s{j},c,c" for j in range(9)]
        crowded = write(tmp, 'crowded.csv', '\n'.join(rows) + '\n')
        code, out = run(['oracle', 'pcr', '--input', crowded, '--json'])
        assert code == 3 and json.loads(out)['error'] == 'budget'


def test_cli_space():
    with tempfile.TemporaryDirectory() as tmp:
        good = write(tmp, 'cube.json', json.dumps(
            {'domain': ['a', 'b'], 'states': [[], ['a'], ['b'], ['a', 'b']]}))
        code, out = run(['space', '--input', good])
        assert code == 0 and 'learning space' in out
        gap = write(tmp, 'gap.json', json.dumps({'domain': ['a', 'b'], 'states': [[], ['a', 'b']]}))
        code, out = run(['space', '--input', gap, '--json'])
        payload = json.loads(out)
        assert code == 0 and payload['valid'] is False
        assert payload['violations'][0]['kind'] == 'smoothness'


if __name__ == '__main__':
    print("=" * 60)
    print("CLI / IO Test Suite")
    print("=" * 60)
    failed = 0
    for name, test in [(n, f) for n, f in list(globals().items()) if n.startswith('test_')]:
        try:
            test()
            print(f"   ✅ {name}")
        except Exception as e:
            failed += 1
            print(f"   ❌ {name}: {e}")
            traceback.print_exc()
    print("\n" + "=" * 60)
    print(f"{'All tests passed' if not failed else f'{failed} test(s) failed'}")
    sys.exit(1 if failed else 0)

#!/usr/bin/env python3
"""
panelcross command line.

    python -m panelcross <command> [options]

Exit codes: 0 success, 1 usage error, 2 data or validation error,
3 budget exceeded. With --json every command prints one JSON object on stdout.
"""
import argparse
import json
import logging
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from . import __version__
from .analysis import (
    consistent_bounds,
    consistent_extremal_instance,
    expected_pcr,
    extremal_instance_general,
    monte_carlo_expected_pcr,
    random_instance,
)
from .core import OpdInstance, validate_instance
from .errors import (
    BudgetExceededError,
    ConfigError,
    LayoutError,
    PanelCrossError,
    UsageError,
    ValidationError,
)
from .formats import (
    export_tile,
    load_instance,
    load_layout,
    load_learning_space,
    open_text,
    save_instance,
    save_layout,
)
from .layout import brute_force_pcr, count_layout_crossings, layout_report
from .log import setup_logging
from .render import DrawingOptions, render_svg
from .sigma import compute_tables, export_ilp, optimal_sigma_bruteforce, optimal_sigma_exact
from .tiles import ordinal_panel_tile, validate_learning_space

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_BUDGET = 3

Result = Tuple[Dict[str, Any], str]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _load(args) -> OpdInstance:
    categories = args.categories.split(',') if getattr(args, 'categories', None) else None
    return load_instance(args.input, args.format, categories)


def _sigma_text(inst: OpdInstance, order: Sequence[int]) -> str:
    return ' < '.join(inst.categories.labels[c] for c in order)


def cmd_layout(args) -> Result:
    inst = _load(args)
    layout, report = layout_report(inst)
    save_layout(layout, args.out, report)
    payload = {'pcr': report.total, 'report': report.to_dict(), 'out': args.out}
    return payload, f"pcr {report.total} (strong {report.strong}, weak {report.weak}) -> {args.out}"


def cmd_pcr(args) -> Result:
    inst = _load(args)
    _, report = layout_report(inst)
    payload = {'pcr': report.total, 'strong': report.strong, 'weak': report.weak,
               'per_interval': list(report.per_interval)}
    return payload, f"{report.total} (strong {report.strong}, weak {report.weak})"


def cmd_draw(args) -> Result:
    inst = _load(args)
    if args.layout:
        layout, _ = load_layout(args.layout)
    else:
        layout, _ = layout_report(inst)
    options = DrawingOptions.from_config(width=args.width, height=args.height,
                                         equal_bands=args.equal_bands or None,
                                         smooth=args.smooth or None)
    svg = render_svg(inst, layout, options)
    with open_text(args.svg, 'w') as f:
        f.write(svg)
    total = count_layout_crossings(inst, layout).total
    return {'crossings': total, 'svg': args.svg}, f"{total} crossings -> {args.svg}"


def cmd_optimize_sigma(args) -> Result:
    inst = _load(args)
    if args.export_lp:
        tables = compute_tables(inst)
        with open_text(args.export_lp, 'w') as f:
            f.write(export_ilp(tables, inst.k))
        payload = {'lp': args.export_lp, 'y_variables': sum(1 for e in tables.entries.values() if e.total),
                   'constant': tables.constant}
        return payload, f"LP model -> {args.export_lp} (constant {tables.constant})"
    result = optimal_sigma_exact(inst, method=args.method)
    order = result.sigma.order
    payload = {'sigma': [inst.categories.labels[c] for c in order],
               'objective': result.objective, 'nodes': result.nodes}
    return payload, f"sigma: {_sigma_text(inst, order)}\nobjective: {result.objective}"


def cmd_gen(args) -> Result:
    if args.kind == 'random':
        inst = random_instance(args.n, args.k, args.m, args.seed)
    elif args.kind == 'extremal':
        inst = extremal_instance_general(args.n, args.k, args.m)
    else:
        inst = consistent_extremal_instance(args.n, args.k, args.m)
    save_instance(inst, args.out, args.format)
    return {'generated': args.kind, 'out': args.out}, ''


def cmd_expected(args) -> Result:
    value = expected_pcr(args.n, args.k, args.m)
    return ({'expected': float(value), 'fraction': str(value)},
            f"{float(value)} ({value})")


def cmd_estimate(args) -> Result:
    est = monte_carlo_expected_pcr(args.n, args.k, args.m, args.samples, args.seed, args.workers)
    return ({'mean': est.mean, 'stderr': est.stderr, 'samples': est.samples},
            f"{est.mean:.6f} ± {est.stderr:.6f} ({est.samples} samples)")


def cmd_bounds(args) -> Result:
    lower, upper = consistent_bounds(args.n, args.k, args.m)
    return {'lower': lower, 'upper': upper}, f"{lower} <= ecr <= {upper}"


def cmd_oracle(args) -> Result:
    inst = _load(args)
    if args.kind == 'pcr':
        value = brute_force_pcr(inst)
        return {'pcr': value}, str(value)
    result = optimal_sigma_bruteforce(inst)
    order = result.sigma.order
    return ({'sigma': [inst.categories.labels[c] for c in order], 'objective': result.objective},
            f"sigma: {_sigma_text(inst, order)}\nobjective: {result.objective}")


def cmd_validate(args) -> Result:
    inst = _load(args)
    violations = validate_instance(inst)
    if violations:
        raise ValidationError(f"{len(violations)} violation(s)", violations)
    return ({'valid': not violations, 'n': inst.n, 'k': inst.k, 'm': inst.m},
            f"valid: n={inst.n} k={inst.k} m={inst.m}")


def cmd_tile(args) -> Result:
    inst = _load(args)
    if args.layout:
        layout, _ = load_layout(args.layout)
    else:
        layout, _ = layout_report(inst)
    tile = ordinal_panel_tile(inst, layout)
    with open_text(args.out, 'w') as f:
        f.write(export_tile(tile))
    return {'vertices': tile.number_of_nodes(), 'edges': tile.number_of_edges(), 'out': args.out}, ''


def cmd_space(args) -> Result:
    space = load_learning_space(args.input)
    violations = validate_learning_space(space)
    lines = [f"{len(space.states)} states over {len(space.domain)} items: "
             f"{'learning space' if not violations else f'{len(violations)} violation(s)'}"]
    lines.extend(f"  {v}" for v in violations)
    payload = {'valid': not violations, 'states': len(space.states),
               'violations': [{'kind': v.kind, 'message': v.message} for v in violations]}
    return payload, '\n'.join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument('--json', action='store_true', help='machine-readable output')
    common.add_argument('--log-level', default=None,
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'], help='override config logging level')

    source = _Parser(add_help=False)
    source.add_argument('--input', required=True, help="instance file, '-' for stdin")
    source.add_argument('--format', choices=['csv', 'json'], help='default: by suffix or content')
    source.add_argument('--categories', help='comma-separated category labels, lowest first (CSV)')

    sizes = _Parser(add_help=False)
    sizes.add_argument('--n', type=int, required=True, help='subjects')
    sizes.add_argument('--k', type=int, required=True, help='categories')
    sizes.add_argument('--m', type=int, required=True, help='intervals (tests minus one)')

    parser = _Parser(prog='panelcross', description='Minimum-crossing layouts of ordinal panel data')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    sub = parser.add_subparsers(dest='command', parser_class=_Parser)
    sub.required = True

    p = sub.add_parser('layout', parents=[common, source], help='optimal layout as JSON')
    p.add_argument('--out', default='-', help="layout file, '-' for stdout")
    p.set_defaults(handler=cmd_layout)

    p = sub.add_parser('pcr', parents=[common, source], help='panel crossing number')
    p.set_defaults(handler=cmd_pcr)

    p = sub.add_parser('draw', parents=[common, source], help='render an SVG drawing')
    p.add_argument('--layout', help='layout file (default: optimal layout)')
    p.add_argument('--svg', required=True, help="output SVG, '-' for stdout")
    p.add_argument('--equal-bands', action='store_true', help='same height for every category band')
    p.add_argument('--smooth', action='store_true', help='cubic curves instead of straight segments')
    p.add_argument('--width', type=int)
    p.add_argument('--height', type=int)
    p.set_defaults(handler=cmd_draw)

    p = sub.add_parser('optimize-sigma', parents=[common, source], help='best category ordering')
    group = p.add_mutually_exclusive_group()
    group.add_argument('--exact', action='store_true', help='exact search (default)')
    group.add_argument('--export-lp', metavar='OUT.lp', help='write the integer program instead')
    p.add_argument('--method', choices=['auto', 'exhaustive', 'branch-and-bound'], default='auto')
    p.set_defaults(handler=cmd_optimize_sigma)

    p = sub.add_parser('gen', parents=[common, sizes], help='generate an instance')
    p.add_argument('kind', choices=['random', 'extremal', 'extremal-consistent'])
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--format', choices=['csv', 'json'], default='json')
    p.add_argument('--out', default='-')
    p.set_defaults(handler=cmd_gen)

    p = sub.add_parser('expected', parents=[common, sizes], help='expected pcr of random instances')
    p.set_defaults(handler=cmd_expected)

    p = sub.add_parser('estimate', parents=[common, sizes], help='Monte Carlo estimate of expected pcr')
    p.add_argument('--samples', type=int, required=True)
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--workers', type=int, default=None)
    p.set_defaults(handler=cmd_estimate)

    p = sub.add_parser('bounds-consistent', parents=[common, sizes],
                       help='bounds on the extremal pcr of consistent instances')
    p.set_defaults(handler=cmd_bounds)

    p = sub.add_parser('oracle', parents=[common, source], help='brute-force reference values')
    p.add_argument('kind', choices=['pcr', 'sigma'])
    p.set_defaults(handler=cmd_oracle)

    p = sub.add_parser('validate', parents=[common, source], help='load and validate an instance')
    p.set_defaults(handler=cmd_validate)

    p = sub.add_parser('tile', parents=[common, source], help='export the ordinal panel tile')
    p.add_argument('--layout', help='layout file (default: optimal layout)')
    p.add_argument('--out', default='-')
    p.set_defaults(handler=cmd_tile)

    p = sub.add_parser('space', parents=[common], help='check a learning-space file')
    p.add_argument('--input', required=True)
    p.set_defaults(handler=cmd_space)
    return parser


def _emit_error(kind: str, error: Exception, as_json: bool) -> None:
    if as_json:
        print(json.dumps({'error': kind, 'message': str(error)}))
    else:
        print(f"error: {error}", file=sys.stderr)


def cli_dispatch(argv: Optional[List[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    as_json = '--json' in argv
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        _emit_error('usage', e, as_json)
        return EXIT_USAGE
    except SystemExit as e:
        # --help / --version
        return e.code if isinstance(e.code, int) else EXIT_OK

    handler: Callable[[Any], Result] = args.handler
    try:
        setup_logging(level=args.log_level)
        payload, text = handler(args)
    except BudgetExceededError as e:
        _emit_error('budget', e, as_json)
        return EXIT_BUDGET
    except (ValidationError, LayoutError, ConfigError) as e:
        _emit_error('data', e, as_json)
        return EXIT_DATA
    except UsageError as e:
        _emit_error('usage', e, as_json)
        return EXIT_USAGE
    except PanelCrossError as e:
        _emit_error('data', e, as_json)
        return EXIT_DATA
    except OSError as e:
        _emit_error('data', e, as_json)
        return EXIT_DATA

    writes_stdout = '-' in (getattr(args, 'out', None), getattr(args, 'svg', None),
                            getattr(args, 'export_lp', None))
    if as_json and not writes_stdout:
        print(json.dumps(payload))
    elif text and not writes_stdout:
        print(text)
    elif text:
        logger.info(text)
    return EXIT_OK


def main():
    sys.exit(cli_dispatch())


if __name__ == '__main__':
    main()

"""Command line surface: stats, gen, verify and report."""
import functools
import logging
import sys

import click

from . import create_config, configure_logging
from . import vocabulary as vb
from .__version__ import __version__
from .closed_forms import discrepancy_report
from .errors import Error, FamilyParameterError, VerificationMismatchError
from .graph import (
    FamilyEnum,
    FamilySpec,
    decode_graph_text,
    generate_family,
    parse_graph,
    validate,
    write_dimacs,
    write_edge_list,
    )
from .output import document, error_document, render, report_payload, summary_payload, to_json, verification_payload
from .stats import summarize
from .verification import run_verification

logger = logging.getLogger(__name__)

REPORT_FORMATS = click.Choice([vb.FORMAT_JSON, vb.FORMAT_CSV, vb.FORMAT_TEXT])


def _parts(ctx, param, value):
    if value is None:
        return None
    try:
        return tuple(int(p) for p in value.split(','))
    except ValueError:
        raise click.BadParameter(f"expected comma separated integers, got '{value}'")


def family_options(f):
    f = click.option('--parts', callback=_parts, help="Part sizes, e.g. 2,3")(f)
    f = click.option('--n', 'n', type=int, help="Number of vertices")(f)
    f = click.option('--family', help=f"One of: {', '.join(e.value for e in FamilyEnum)}")(f)
    return f


def handle_errors(command):
    """
    Maps chromastat errors to their exit code. With --format json the error object
    goes to stdout inside the output document, otherwise to stderr.
    """
    def decorator(f):
        @functools.wraps(f)
        def wrapper(*args, **kwargs):
            try:
                return f(*args, **kwargs)
            except Error as e:
                logger.error(e.message)
                if kwargs.get('fmt') == vb.FORMAT_JSON:
                    click.echo(to_json(error_document(command, _args(kwargs), e)), nl=False)
                else:
                    click.echo(f"error: {e.message}", err=True)
                sys.exit(e.exit_code)
        return wrapper
    return decorator


def _args(kwargs) -> dict:
    ret = {}
    for key, value in kwargs.items():
        if isinstance(value, tuple):
            value = list(value)
        elif hasattr(value, "name"):
            value = value.name
        ret[key] = value
    return ret


def _spec(family, n, parts) -> FamilySpec:
    return FamilySpec.from_name(family, n=n, parts=parts)


@click.group()
@click.version_option(__version__, prog_name="chromastat")
@click.option('--config', 'config_file', type=click.Path(exists=True, dir_okay=False), default=None,
              help="Python config file overriding the defaults")
@click.option('--debug', is_flag=True)
@click.pass_context
def cli(ctx, config_file, debug):
    """chi- and chi+-chromatic mean and variance of graphs"""
    config = create_config(config_file=config_file)
    configure_logging(config, debug)
    ctx.obj = config


@cli.command('stats')
@click.option('--input', 'input_file', type=click.File('rb'), help="DIMACS or edge list, auto-detected")
@family_options
@click.option('--format', 'fmt', type=REPORT_FORMATS, default=vb.FORMAT_JSON, show_default=True)
@click.option('--max-n', type=int, default=None, help="Vertex cap of the search engine")
@click.pass_obj
@handle_errors('stats')
def stats(config, input_file, family, n, parts, fmt, max_n):
    """Chromatic summary of one graph"""
    if (input_file is None) == (family is None):
        raise Error("give exactly one of --input or --family")
    max_n = config['MAX_N'] if max_n is None else max_n
    if input_file is not None:
        source = input_file.name
        graph = parse_graph(decode_graph_text(input_file.read()), max_n)
    else:
        spec = _spec(family, n, parts)
        source = spec.label
        graph = generate_family(spec, max_n)

    warnings = []
    diagnostics = validate(graph)
    if not diagnostics.connected:
        message = f"graph is disconnected ({diagnostics.components} components)"
        logger.warning(message)
        warnings.append(message)

    summary = summarize(graph, max_n, config['EXHAUSTIVE_TIES'], config['TIE_LIMIT'], config['TIE_NODE_LIMIT'])
    args = {vb.SOURCE: source, vb.MAX_N: max_n}
    doc = document('stats', args, summary_payload(summary, graph, diagnostics, source), warnings)
    click.echo(render(doc, fmt), nl=False)


@cli.command('gen')
@family_options
@click.option('-o', '--output', type=click.File('w'), default='-', help="Defaults to stdout")
@click.option('--format', 'fmt', type=click.Choice([vb.FORMAT_DIMACS, vb.FORMAT_EDGELIST]),
              default=vb.FORMAT_DIMACS, show_default=True)
@handle_errors('gen')
def gen(family, n, parts, output, fmt):
    """Writes a family member as DIMACS or edge list"""
    if family is None:
        raise FamilyParameterError("--family is required")
    graph = generate_family(_spec(family, n, parts))
    output.write(write_dimacs(graph) if fmt == vb.FORMAT_DIMACS else write_edge_list(graph))
    logger.info("wrote %s vertices and %s edges", graph.n, graph.m)


@cli.command('verify')
@click.option('--max-n', type=int, default=8, show_default=True)
@click.option('--trials', type=int, default=50, show_default=True, help="Random connected graphs per size")
@click.option('--seed', type=int, default=42, show_default=True)
@click.option('--oracle-cap', type=int, default=None, help="Raise the oracle vertex cap")
@click.option('--format', 'fmt', type=REPORT_FORMATS, default=vb.FORMAT_JSON, show_default=True)
@click.pass_obj
@handle_errors('verify')
def verify(config, max_n, trials, seed, oracle_cap, fmt):
    """Engine against brute-force oracle on families and seeded random graphs"""
    oracle_cap = config['ORACLE_MAX_N'] if oracle_cap is None else oracle_cap
    result = run_verification(max_n, trials, seed, config['MAX_N'], oracle_cap)
    args = {vb.MAX_N: max_n, vb.TRIALS: trials, vb.SEED: seed, vb.ORACLE: oracle_cap}
    doc = document('verify', args, verification_payload(result))
    click.echo(render(doc, fmt), nl=False)
    if not result.passed:
        # the document already lists the failing cases
        e = VerificationMismatchError(failures=len(result.failures))
        click.echo(f"error: {e.message}", err=True)
        sys.exit(e.exit_code)


@cli.command('report')
@click.option('--families', default=",".join(e.value for e in FamilyEnum), show_default=True,
              help="Comma separated family names")
@click.option('--n-max', type=int, default=8, show_default=True)
@click.option('--n-min', type=int, default=1, show_default=True)
@click.option('--format', 'fmt', type=REPORT_FORMATS, default=vb.FORMAT_JSON, show_default=True)
@click.pass_obj
@handle_errors('report')
def report(config, families, n_max, n_min, fmt):
    """Engine values against the closed forms, flagged"""
    selected = [FamilyEnum.from_name(name) for name in families.split(',') if name.strip()]
    result = discrepancy_report(selected, n_max, n_min,
                                max_vertices=config['MAX_N'],
                                ordering_limit=config['ORDERING_CHECK_LIMIT'],
                                exhaustive_ties=config['EXHAUSTIVE_TIES'],
                                tie_limit=config['TIE_LIMIT'],
                                tie_node_limit=config['TIE_NODE_LIMIT'])
    args = {vb.FAMILY: [f.value for f in selected], "n_max": n_max, "n_min": n_min}
    doc = document('report', args, report_payload(result))
    click.echo(render(doc, fmt), nl=False)

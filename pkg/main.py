"""
Quadrature - Main Entry Point

Exact compass-and-straightedge constructions that square the circle
approximately. Runs and verifies construction scripts, measures their
efficiency and their distance from pi, and draws their figures.

Exit codes: 0 success, 1 verification false, 2 input or execution error.
"""

import sys
from fractions import Fraction
from functools import wraps

import click

from analysis.metrics import metrics
from analysis.pi_error import pi_error, truncated_decimal
from analysis.pi_oracle import pi_decimal
from analysis.replay import float_replay
from analysis.report import format_json, format_text, format_workspace
from catalog.approximants import approximant, list_approximants
from catalog.builtins import BUILTIN_PREFIX, builtin, check_entry, list_builtins, load, verify
from config import Config
from construction.elaborate import elaborate_with_workspace
from construction.executor import execute
from construction.parser import evaluate_constant
from construction.printer import format_program
from field import to_decimal
from render.style import Highlight, RenderStyle
from render.svg import render as render_svg
from utils.errors import QuadratureError, RenderError
from utils.logger import log_error, logger, setup_logger

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_ERROR = 2


class RationalType(click.ParamType):
    """A rational number such as 6, 0.25 or 3/10."""

    name = "rational"

    def convert(self, value, param, ctx):
        if isinstance(value, Fraction):
            return value
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            self.fail(f"{value!r} is not a rational number", param, ctx)


RATIONAL = RationalType()


class QuadratureGroup(click.Group):
    """Reports usage errors as one `error: usage: <detail>` line with exit 2."""

    def main(self, *args, **kwargs):
        kwargs["standalone_mode"] = False
        try:
            return super().main(*args, **kwargs)
        except click.ClickException as e:
            # click >= 8.2 raises this for a bare group invocation; it carries the help screen
            if type(e).__name__ == "NoArgsIsHelpError":
                e.show()
            else:
                click.echo(f"error: usage: {e.format_message()}", err=True)
            sys.exit(EXIT_ERROR)
        except click.Abort:
            click.echo("error: usage: aborted", err=True)
            sys.exit(EXIT_ERROR)


def handle_errors(command):
    """Turn library errors into one `error: <kind>: <detail>` line and exit 2."""
    @wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except QuadratureError as e:
            log_error(command.__name__, e)
            click.echo(f"error: {e.kind}: {e}", err=True)
            sys.exit(EXIT_ERROR)
    return wrapper


def emit_report(report, as_json: bool) -> None:
    click.echo(format_json(report) if as_json else format_text(report))


@click.group(cls=QuadratureGroup)
@click.option("--log-level", type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"],
                                               case_sensitive=False),
              default=None, help="Diagnostics level on stderr (default WARNING).")
def cli(log_level):
    """Exact compass-and-straightedge constructions for squaring the circle."""
    if log_level:
        Config.LOG_LEVEL = log_level.upper()
    setup_logger(level=Config.LOG_LEVEL)
    problems = Config.validate()
    if problems:
        for problem in problems:
            click.echo(f"error: config: {problem}", err=True)
        sys.exit(EXIT_ERROR)


@cli.command()
@click.argument("source")
@click.option("--digits", type=click.IntRange(min=1), default=Config.REPORT_DIGITS,
              show_default=True, help="Fractional digits of printed values.")
@click.option("--elaborate", "elaborated", is_flag=True,
              help="Expand macros into compass and ruler steps before running.")
@click.option("--trace", is_flag=True,
              help="Print the executed trace as a script instead of the bindings.")
@handle_errors
def run(source, digits, elaborated, trace):
    """Execute a .construct file (or builtin:NAME) and print its bindings."""
    program = load(source)
    if elaborated:
        program, w = elaborate_with_workspace(program)
    else:
        w = execute(program)
    if trace:
        click.echo(format_program(w.trace_program()))
    else:
        click.echo(format_workspace(w, program, digits))


@cli.command(name="verify")
@click.argument("source")
@click.option("--endpoints", nargs=2, type=str, default=None,
              help="The two points whose distance is checked.")
@click.option("--target", default=None,
              help="Exact target length, e.g. \"sqrt(6/5*(1+(1+sqrt(5))/2))\".")
@click.option("--checks", is_flag=True,
              help="For builtin:NAME, verify every stored result and intermediate length.")
@handle_errors
def verify_command(source, endpoints, target, checks):
    """Check a distance of a construction against an exact value."""
    if checks:
        if not source.startswith(BUILTIN_PREFIX):
            raise click.UsageError("--checks needs a builtin:NAME source")
        results = check_entry(builtin(source[len(BUILTIN_PREFIX):]))
        for check, holds in results:
            click.echo(f"{check.label}: {'true' if holds else 'false'}")
        ok = all(holds for _, holds in results)
    else:
        if endpoints is None or target is None:
            raise click.UsageError("--endpoints and --target are required")
        ok = verify(load(source), tuple(endpoints), evaluate_constant(target))
    click.echo(f"verified: {'true' if ok else 'false'}")
    sys.exit(EXIT_OK if ok else EXIT_FALSE)


@cli.command()
@click.argument("name")
@click.option("--digits", type=click.IntRange(min=1), default=10, show_default=True,
              help="Fractional digits to print.")
@click.option("--truncate", is_flag=True, help="Cut the expansion instead of rounding.")
@handle_errors
def approx(name, digits, truncate):
    """Print a builtin approximant (or `pi`) as a decimal."""
    if name == "pi":
        click.echo(pi_decimal(digits, truncate=truncate))
        return
    value = approximant(name).value
    click.echo(truncated_decimal(value, digits) if truncate else to_decimal(value, digits))


@cli.command()
@click.argument("name", required=False)
@click.option("--target", default=None, help="Expression to compare instead of a named approximant.")
@click.option("--ratio-digits", type=click.IntRange(min=1), default=Config.DEFAULT_RATIO_DIGITS,
              show_default=True, help="Fractional digits of the ratio to pi.")
@click.option("--truncate/--round", default=True, show_default=True,
              help="Cut the ratio after its last digit, or round it half-even.")
@click.option("--parts-per", type=click.IntRange(min=1), default=None,
              help="Also print the deviation in parts per 10^N.")
@click.option("--json", "as_json", is_flag=True, help="Print a JSON document.")
@handle_errors
def error(name, target, ratio_digits, truncate, parts_per, as_json):
    """Compare an approximant with pi."""
    if (name is None) == (target is None):
        raise click.UsageError("give exactly one of NAME or --target")
    value = approximant(name).value if name else evaluate_constant(target)
    report = pi_error(value, ratio_digits, truncate=truncate)
    emit_report(report, as_json)
    if parts_per is not None and not as_json:
        click.echo(f"parts_off: {report.parts_off(parts_per)} per 10^{parts_per}")


@cli.command(name="metrics")
@click.argument("source")
@click.option("--warn-above", type=RATIONAL, default=None,
              help="Warn when the longest drawn length exceeds this.")
@click.option("--warn-below", type=RATIONAL, default=None,
              help="Warn when the shortest positive drawn length is below this.")
@click.option("--json", "as_json", is_flag=True, help="Print a JSON document.")
@handle_errors
def metrics_command(source, warn_above, warn_below, as_json):
    """Count primitive steps and survey drawn lengths."""
    emit_report(metrics(load(source), warn_above, warn_below), as_json)


@cli.command()
@click.argument("source")
@click.option("--bits", type=click.IntRange(min=16), default=Config.REPLAY_BITS,
              show_default=True, help="Floating-point precision of the replay.")
@click.option("--surface", is_flag=True, help="Replay the macro trace instead of the primitives.")
@click.option("--json", "as_json", is_flag=True, help="Print a JSON document.")
@handle_errors
def replay(source, bits, surface, as_json):
    """Replay a construction in floating point and report the drift."""
    emit_report(float_replay(load(source), bits, elaborated=not surface), as_json)


@cli.command(name="render")
@click.argument("source")
@click.option("--out", "out_path", type=click.Path(dir_okay=False, writable=True),
              default=None, help="SVG file to write (standard output if omitted).")
@click.option("--circle", default=None,
              help="Shaded circle: a circle name, `unit` or `P:Q`.")
@click.option("--square", nargs=2, type=str, default=None,
              help="Side P Q of the shaded square.")
@click.option("--canvas-size", type=click.IntRange(min=1), default=None,
              help=f"Canvas size in pixels (default {Config.CANVAS_SIZE}).")
@click.option("--margin", type=click.IntRange(min=0), default=None,
              help=f"Margin in pixels (default {Config.CANVAS_MARGIN}).")
@click.option("--precision", type=click.IntRange(min=6), default=None,
              help=f"Decimal digits of coordinates (default {Config.COORDINATE_PRECISION}).")
@click.option("--no-labels", is_flag=True, help="Leave point names out.")
@handle_errors
def render(source, out_path, circle, square, canvas_size, margin, precision, no_labels):
    """Draw a construction as SVG; builtins shade their figure's circle and square."""
    program = load(source)
    highlight = None
    if source.startswith(BUILTIN_PREFIX):
        highlight = builtin(source[len(BUILTIN_PREFIX):]).highlight
    if circle or square:
        highlight = Highlight(circle or (highlight.circle if highlight else None),
                              tuple(square) if square else
                              (highlight.square_side if highlight else None))
    style = RenderStyle().with_overrides(canvas_size=canvas_size, margin=margin,
                                         precision=precision)
    if no_labels:
        style = style.with_overrides(labels=False)
    svg = render_svg(execute(program), highlight, style)
    if out_path:
        try:
            with open(out_path, "w", encoding="utf-8") as f:
                f.write(svg)
        except OSError as e:
            raise RenderError(f"cannot write `{out_path}`: {e.strerror}") from None
        logger.info(f"Wrote {out_path}")
    else:
        click.echo(svg)


@cli.group()
def catalog():
    """Builtin programs and approximants."""


@catalog.command(name="list")
def catalog_list():
    """List builtin programs and approximants."""
    for name in list_builtins():
        click.echo(f"builtin:{name}  {builtin(name).description}")
    for name in list_approximants():
        a = approximant(name)
        click.echo(f"{name}  {a.expression}  ({a.claimed_decimal_places} places, {a.source})")


@catalog.command(name="show")
@click.argument("name")
@handle_errors
def catalog_show(name):
    """Print the script of a builtin program."""
    click.echo(builtin(name).source(), nl=False)


@cli.command(name="config")
def show_config():
    """Print the active configuration."""
    click.echo(Config.describe())


if __name__ == "__main__":
    cli()

import sys
import click
from trogon import tui
from fdhull._cli import constants


@tui(help="Open the textual terminal UI.")
@click.group()
def cli():
    """The fdhull command line interface."""


@click.command()
@click.argument("generator")
@click.argument("n", type=click.IntRange(min=0))
@click.argument("seed", type=click.INT)
@click.argument("schema", default="rounds")
@click.option(
    "--quantizer",
    "-q",
    help="Grid units per input unit, for csv:<path> generators.",
    default=constants.DEFAULT_QUANTIZER,
    show_default=True,
    type=click.IntRange(min=1),
)
@click.option(
    "--out",
    "-o",
    help="Write the workload to this file instead of stdout.",
    type=click.Path(dir_okay=False, writable=True),
)
def generate(generator: str, n: int, seed: int, schema: str, quantizer: int, out: str):
    """Generate a workload.

    GENERATOR is one of box, bell, disk, circle, grid or csv:<path>. SCHEMA is
    rounds, mixed:<x>, scaling[:<fraction>] or real.
    """
    from fdhull.errors import FdhError
    from fdhull.workload import GENERATORS, SCHEMAS, ingest_csv, make_workload

    if generator.startswith("csv:"):
        try:
            points = ingest_csv(generator[4:], quantizer)[: n or None]
        except (OSError, FdhError) as e:
            raise click.UsageError(f"Cannot read {generator[4:]}: {e}")
    elif generator in GENERATORS:
        points = GENERATORS[generator](n, seed)
    else:
        raise click.UsageError(
            f"Unknown generator '{generator}'. "
            + f"Choose from: {', '.join(GENERATORS)} or csv:<path>."
        )

    if schema.partition(":")[0] not in SCHEMAS:
        raise click.UsageError(
            f"Unknown schema '{schema}'. Choose from: {', '.join(SCHEMAS)}."
        )
    try:
        workload = make_workload(schema, points, seed)
    except ValueError as e:
        raise click.UsageError(str(e))
    workload.metadata = {
        "generator": generator,
        "n": str(n),
        **workload.metadata,
    }

    if out:
        workload.dump(out)
        click.echo(f"Wrote {len(workload)} ops to {out}.")
    else:
        click.echo(workload.dumps(), nl=False)


@click.command()
@click.argument("workload", type=click.Path(exists=True, dir_okay=False))
@click.option(
    "--impl",
    "-i",
    help="Implementation to run, e.g. fdh:1024, semistatic or oracle.",
    default=constants.DEFAULT_IMPLEMENTATION,
    show_default=True,
)
@click.option(
    "--out",
    "-o",
    help="Write per-op timings to this CSV file.",
    type=click.Path(dir_okay=False, writable=True),
)
def run(workload: str, impl: str, out: str):
    """Replay a workload and report timings."""
    from tabulate import tabulate
    from fdhull.errors import MalformedWorkload, TimeLimitExceeded
    from fdhull.workload import Workload
    from fdhull._cli.utilities import (
        build_structure,
        replay,
        time_limit_from_env,
        write_run_csv,
    )

    try:
        loaded = Workload.load(workload)
    except MalformedWorkload as e:
        raise click.UsageError(str(e))
    structure = build_structure(impl)
    time_limit = time_limit_from_env()

    try:
        report = replay(structure, loaded, label=impl, time_limit=time_limit)
    except TimeLimitExceeded as e:
        click.echo(click.style(f"Time limit exceeded: {e}", fg="red"))
        sys.exit(1)

    if out:
        write_run_csv(report, out)

    click.echo(click.style(f"{impl} on {workload}", underline=True))
    click.echo(tabulate(report.summary(), headers="keys", tablefmt="fancy_outline"))
    click.echo(f"Queries: {report.yes} yes, {report.no} no")
    click.echo(f"Final hull size: {report.final_hull_size}")
    if report.counters:
        click.echo(
            tabulate(report.counters.items(), headers=["counter", "value"])
        )


@click.command()
@click.argument("workload", type=click.Path(exists=True, dir_okay=False))
@click.argument("impls", nargs=-1)
def verify(workload: str, impls: tuple[str]):
    """Check that implementations agree on every answer.

    Compares query answers at every op and hull sizes at every checkpoint.
    Defaults to fdh:32, semistatic and oracle.
    """
    from fdhull.errors import MalformedWorkload, TimeLimitExceeded
    from fdhull.utilities import get_logger
    from fdhull.workload import Workload
    from fdhull._cli.utilities import (
        build_structure,
        first_divergence,
        replay,
        time_limit_from_env,
    )

    logger = get_logger("fdhull.verify")
    impls = impls or constants.DEFAULT_VERIFY_IMPLEMENTATIONS
    try:
        loaded = Workload.load(workload)
    except MalformedWorkload as e:
        raise click.UsageError(str(e))
    structures = [build_structure(impl) for impl in impls]
    time_limit = time_limit_from_env()

    reports = []
    for impl, structure in zip(impls, structures):
        try:
            reports.append(replay(structure, loaded, label=impl, time_limit=time_limit))
        except TimeLimitExceeded as e:
            click.echo(click.style(f"Time limit exceeded: {e}", fg="red"))
            sys.exit(1)

    divergence = first_divergence(reports)
    if divergence is not None:
        logger.error(f"Verification failed on {workload}: {divergence}")
        click.echo(click.style(f"FAIL: {divergence}", fg="red"))
        sys.exit(1)

    reference = reports[0]
    click.echo(
        click.style(
            f"PASS: {', '.join(impls)} agree on {len(loaded)} ops "
            + f"({reference.yes} yes, {reference.no} no, "
            + f"hull size {reference.final_hull_size}).",
            fg="green",
        )
    )


@click.command()
@click.argument("workload", type=click.Path(exists=True, dir_okay=False))
@click.option(
    "--base",
    "-b",
    help="Capacity of the smallest bucket.",
    default=32,
    show_default=True,
    type=click.INT,
)
@click.option(
    "--out",
    "-o",
    help="Write the counters to this CSV file instead of stdout.",
    type=click.Path(dir_okay=False, writable=True),
)
def counters(workload: str, base: int, out: str):
    """Emit fdh operation counters per prefix length."""
    from fdhull.errors import MalformedWorkload
    from fdhull.workload import Workload
    from fdhull._cli.utilities import build_structure, counter_rows

    try:
        loaded = Workload.load(workload)
    except MalformedWorkload as e:
        raise click.UsageError(str(e))
    structure = build_structure(f"fdh:{base}")
    df = counter_rows(structure, loaded)

    if out:
        df.to_csv(out, index=False)
        click.echo(f"Wrote {len(df)} rows to {out}.")
    else:
        click.echo(df.to_csv(index=False), nl=False)


@click.command()
@click.argument("name", required=False)
def implementations(name: str):
    """Display the available implementations.

    Pass a module NAME to show its documentation.
    """
    from fdhull._cli.utilities import (
        get_structure_object,
        list_implementations,
        load_configs,
    )

    configs = load_configs()
    _, msg = list_implementations(configs)
    if name is None:
        click.echo(msg)
        return

    if name not in configs:
        raise click.UsageError(
            f"Unknown implementation '{name}'. Choose from: {', '.join(configs)}."
        )
    _, structure_object = get_structure_object(configs[name]["MODULE"])
    click.echo(click.style(configs[name]["NAME"], underline=True))
    click.echo(structure_object.__doc__)


# Add commands to CLI group
cli.add_command(generate)
cli.add_command(run)
cli.add_command(verify)
cli.add_command(counters)
cli.add_command(implementations)


if __name__ == "__main__":
    cli()

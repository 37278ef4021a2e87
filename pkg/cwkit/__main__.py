# type: ignore[attr-defined]
from typing import List, Optional

from enum import Enum

import typer
from rich.console import Console
from rich.table import Table

from cwkit import (
    LEVELS,
    InvalidParameterError,
    check_certificate,
    check_embedding,
    cwd_decide,
    cwd_exact,
    embedding_defects,
    evaluate,
    family_bubbles,
    find_embedding,
    get_all_claim_ids,
    get_family,
    is_linear,
    lcwd_decide,
    lcwd_exact,
    load_expression,
    load_graph,
    phi_S_reduced,
    phi_Z_reduced,
    render_bubbles,
    run_all,
    run_check,
    save_embedding,
    save_expression,
    save_graph,
    search_certificate,
    version,
    width,
    worst_status,
)
from cwkit.utils import setup_logging

# verified answers exit with 0 (or 1 for a verified negative where noted), unknown with 2
EXIT_UNKNOWN = 2


class Width(str, Enum):
    lcwd = "lcwd"
    cwd = "cwd"


class PhiKind(str, Enum):
    phi_z = "phi-z"
    phi_s = "phi-s"


class Level(str, Enum):
    smoke = "smoke"
    desk = "desk"
    stretch = "stretch"


app = typer.Typer(
    name="cwkit",
    help="clique-width toolkit: graph families, width certificates and exact solvers",
    add_completion=False,
)
expr_app = typer.Typer(help="Work with clique-width expressions.")
app.add_typer(expr_app, name="expr")
console = Console()


def version_callback(print_version: bool) -> None:
    """Print the version of the package."""
    if print_version:
        console.print(f"[yellow]cwkit[/] version: [bold blue]{version}[/]")
        raise typer.Exit()


@app.callback()
def main(
    verbose: bool = typer.Option(
        False, "--verbose", help="Log search progress at debug level."
    ),
    print_version: bool = typer.Option(
        None,
        "-v",
        "--version",
        callback=version_callback,
        is_eager=True,
        help="Prints the version of the cwkit package.",
    ),
) -> None:
    setup_logging(verbose)


def _family(family, k, n, l, case):
    params = {"k": k, "n": n, "l": l, "case": case}
    params = {key: value for key, value in params.items() if value is not None}
    try:
        return get_family(family, **params)
    except ValueError as e:
        console.print(f"[bold red]error:[/] {e}")
        raise typer.Exit(code=1)


def _load_graph(path):
    try:
        return load_graph(path)
    except (OSError, ValueError) as e:
        console.print(f"[bold red]error:[/] cannot read graph {path}: {e}")
        raise typer.Exit(code=1)


FAMILY_HELP = "Family name: path-power, J, Z, F, S, S+, M, M2+, M2- or gem."


@app.command()
def gen(
    family: str = typer.Option(..., "--family", help=FAMILY_HELP),
    k: Optional[int] = typer.Option(None, "--k", help="The k of the family."),
    n: Optional[int] = typer.Option(
        None, "--n", help="Number of vertices (path-power)."
    ),
    l: Optional[int] = typer.Option(None, "--l", help="Connector length (M)."),
    case: Optional[str] = typer.Option(None, "--case", help="a, b, c or d (S+)."),
    output: str = typer.Option(..., "-o", "--output", help="Graph file to write."),
) -> None:
    """Write a graph of one of the families to a file."""
    built = _family(family, k, n, l, case)
    save_graph(built.graph, output)
    console.print(f"{built}: [bold]{built.graph}[/] written to {output}")


@app.command()
def bubbles(
    family: str = typer.Option(..., "--family", help=FAMILY_HELP),
    k: Optional[int] = typer.Option(None, "--k", help="The k of the family."),
    n: Optional[int] = typer.Option(
        None, "--n", help="Number of vertices (path-power)."
    ),
    mark: Optional[str] = typer.Option(
        None,
        "--mark",
        help="Vertex name to highlight, e.g. z_8; defaults to z_g for J.",
    ),
) -> None:
    """Print the bubble model of a path-power family."""
    built = _family(family, k, n, None, None)
    if built.path_power_k is None:
        console.print(f"[bold red]error:[/] {family} is not a family of path powers")
        raise typer.Exit(code=1)
    if mark is None and built.distinguished is not None:
        mark = built.graph.label(built.distinguished)
    model = family_bubbles(built.graph, built.path_power_k)
    console.print(render_bubbles(model, mark=mark), markup=False, highlight=False)


@expr_app.command("eval")
def expr_eval(
    path: str = typer.Argument(..., help="Expression file."),
    against: Optional[str] = typer.Option(
        None, "--against", help="Graph file the expression must build."
    ),
    width_limit: Optional[int] = typer.Option(
        None, "--width-limit", help="Maximal number of labels."
    ),
    require_linear: bool = typer.Option(
        False, "--require-linear", help="Reject non-linear expressions."
    ),
) -> None:
    """Evaluate an expression, optionally checking it as a certificate for a graph."""
    try:
        expr = load_expression(path)
        value = evaluate(expr)
    except (OSError, ValueError) as e:
        console.print(f"[bold red]rejected:[/] {e}")
        raise typer.Exit(code=1)

    used, straight = width(expr), is_linear(expr)
    console.print(
        f"builds {value.graph}, {used} labels, {'linear' if straight else 'not linear'}"
    )
    failed = []
    if width_limit is not None and used > width_limit:
        failed.append(f"uses {used} labels, more than {width_limit}")
    if require_linear and not straight:
        failed.append("expression is not linear")
    if against is not None:
        graph = _load_graph(against)
        check = check_certificate(
            expr, graph, width_limit or used, linear=require_linear
        )
        if not check:
            failed.append(check.reason)
        else:
            console.print(f"certificate for {against}: {check.reason}")
    if failed:
        console.print(f"[bold red]rejected:[/] {'; '.join(failed)}")
        raise typer.Exit(code=1)
    console.print("[bold green]accepted[/]")


@app.command()
def embed(
    guest: Optional[str] = typer.Option(None, "--guest", help="Guest graph file."),
    host: Optional[str] = typer.Option(None, "--host", help="Host graph file."),
    map_kind: Optional[PhiKind] = typer.Option(
        None,
        "--map",
        case_sensitive=False,
        help="Use an explicit map instead of searching.",
    ),
    k: Optional[int] = typer.Option(None, "--k", help="The k of the explicit map."),
    t: Optional[int] = typer.Option(
        None, "--t", help="Index of the deleted vertex v_t."
    ),
    case: Optional[str] = typer.Option(None, "--case", help="S+ case of phi-s."),
    budget: Optional[float] = typer.Option(
        None, "--budget", help="Seconds for the search."
    ),
    output: Optional[str] = typer.Option(
        None, "-o", "--output", help="Write the embedding as JSON."
    ),
) -> None:
    """Embed a guest graph as an induced subgraph of a host.

    Exit code 0 when an embedding is found, 1 when none exists, 2 when the search ran out of
    budget.
    """
    if map_kind is not None:
        if k is None or t is None or (map_kind == PhiKind.phi_s and case is None):
            console.print(
                "[bold red]error:[/] --map needs --k and --t (and --case for phi-s)"
            )
            raise typer.Exit(code=1)
        try:
            if map_kind == PhiKind.phi_z:
                found = phi_Z_reduced(k, t)
            else:
                found = phi_S_reduced(k, t, case)
        except InvalidParameterError as e:
            console.print(f"[bold red]error:[/] {e}")
            raise typer.Exit(code=1)
        if not found:
            console.print(f"[bold yellow]unavailable:[/] {found.reason}")
            raise typer.Exit(code=1)
        defects = embedding_defects(found)
        if defects:
            console.print(f"[bold red]defective map:[/] {defects[0]}")
            raise typer.Exit(code=1)
    else:
        if guest is None or host is None:
            console.print("[bold red]error:[/] give --guest and --host, or --map")
            raise typer.Exit(code=1)
        search = find_embedding(_load_graph(guest), _load_graph(host), budget)
        if search.embedding is None:
            if search.exhausted:
                console.print(f"no embedding exists ({search.nodes} nodes searched)")
                raise typer.Exit(code=1)
            console.print(
                f"[bold yellow]unknown:[/] budget ran out after {search.nodes} nodes"
            )
            raise typer.Exit(code=EXIT_UNKNOWN)
        found = search.embedding

    table = Table("guest", "host")
    for source, target in found.describe():
        table.add_row(source, target)
    console.print(table)
    console.print(f"induced embedding: [bold green]{check_embedding(found)}[/]")
    if output is not None:
        save_embedding(found, output)


@app.command()
def synth(
    graph_path: str = typer.Option(..., "--graph", help="Graph file."),
    w: int = typer.Option(..., "--width", help="Width bound."),
    budget: Optional[float] = typer.Option(
        None, "--budget", help="Seconds for the search."
    ),
    emit: Optional[str] = typer.Option(
        None, "--emit", help="Write the certificate here."
    ),
) -> None:
    """Search a vertex ordering whose eager expression has at most the given width."""
    graph = _load_graph(graph_path)
    try:
        search = search_certificate(graph, w, budget)
    except InvalidParameterError as e:
        console.print(f"[bold red]error:[/] {e}")
        raise typer.Exit(code=1)
    console.print(f"{search.method}: {search.nodes} nodes in {search.seconds:.2f}s")
    if not search.found:
        if search.exhausted:
            console.print(f"no eager ordering of width <= {w}; not a lower bound")
            raise typer.Exit(code=1)
        console.print("[bold yellow]unknown:[/] budget ran out")
        raise typer.Exit(code=EXIT_UNKNOWN)
    console.print(f"ordering: {' '.join(graph.label(v) for v in search.ordering)}")
    console.print(f"[bold green]certificate:[/] {search.check.reason}")
    if emit is not None:
        save_expression(search.expression, emit)


@app.command()
def solve(
    kind: Width = typer.Argument(..., help="lcwd or cwd."),
    graph_path: str = typer.Argument(..., help="Graph file."),
    decide: Optional[int] = typer.Option(
        None, "--decide", help="Only decide whether the width is at most W."
    ),
    budget: Optional[float] = typer.Option(
        None, "--budget", help="Seconds for the search."
    ),
    emit_cert: Optional[str] = typer.Option(
        None, "--emit-cert", help="Write the certificate here."
    ),
) -> None:
    """Compute or decide the (linear) clique-width of a graph.

    Exit code 0 for verified answers, 2 when the budget ran out first.
    """
    graph = _load_graph(graph_path)
    try:
        if decide is not None:
            solver = lcwd_decide if kind == Width.lcwd else cwd_decide
            decision = solver(graph, decide, budget)
            certificate = decision.certificate
            console.print(
                f"{kind.value} <= {decide}: [bold]{decision.answer}[/] "
                f"({decision.stats.nodes} nodes, {decision.stats.seconds:.2f}s)"
            )
            unknown = decision.answer == "unknown"
        else:
            solver = lcwd_exact if kind == Width.lcwd else cwd_exact
            result = solver(graph, budget)
            certificate = result.certificate
            console.print(f"{kind.value} {result.describe()} ({result.kind})")
            unknown = result.kind != "exact"
    except InvalidParameterError as e:
        console.print(f"[bold red]error:[/] {e}")
        raise typer.Exit(code=1)

    if emit_cert is not None and certificate is not None:
        save_expression(certificate, emit_cert)
    if unknown:
        raise typer.Exit(code=EXIT_UNKNOWN)


@app.command()
def verify(
    claim: Optional[str] = typer.Argument(
        None, help="Claim id; all claims of the level when omitted."
    ),
    k: Optional[List[int]] = typer.Option(
        None, "--k", help="Values of k (repeatable)."
    ),
    l: Optional[List[int]] = typer.Option(
        None, "--l", help="Values of l (repeatable)."
    ),
    level: Optional[Level] = typer.Option(
        None,
        "--level",
        case_sensitive=False,
        help="Run with the parameters of a level.",
    ),
    budget: Optional[float] = typer.Option(
        None, "--budget", help="Seconds per instance."
    ),
    out: Optional[str] = typer.Option(None, "--out", help="Evidence directory."),
    seed: int = typer.Option(0, "--seed", help="Seed for sampled instances."),
    workers: int = typer.Option(4, "--workers", help="Claims run at the same time."),
) -> None:
    """Check claims and print a summary.

    Exit code 1 if a claim is refuted, 2 if one ended unknown, 0 otherwise.
    """
    try:
        if claim is None:
            if level is None:
                console.print("[bold red]error:[/] give a claim id or --level")
                raise typer.Exit(code=1)
            checks = run_all(
                level.value, out=out, seed=seed, show_progress=True, workers=workers
            )
        else:
            params = {} if level is None else dict(LEVELS[level.value].get(claim, {}))
            params["seed"] = seed
            if k:
                params["k"] = k
            if l:
                params["l"] = l
            check = run_check(
                claim, params, budget=budget, out=out, show_progress=True
            )
            checks = [check]
    except ValueError as e:
        console.print(f"[bold red]error:[/] {e}")
        console.print(f"known claims: {', '.join(get_all_claim_ids())}")
        raise typer.Exit(code=1)

    table = Table("claim", "params", "status", "seconds", "evidence")
    colors = {"verified": "green", "refuted": "red", "unknown": "yellow"}
    for check in checks:
        color = colors.get(check.status, "blue")
        table.add_row(
            check.claim,
            check.params_text(),
            f"[{color}]{check.status}[/]",
            f"{check.seconds:.1f}",
            check.evidence or "",
        )
        for note in check.notes:
            console.log(f"{check.claim} {note}")
    console.print(table)

    status = worst_status(checks)
    if status == "refuted":
        raise typer.Exit(code=1)
    if status == "unknown":
        raise typer.Exit(code=EXIT_UNKNOWN)


if __name__ == "__main__":
    app()

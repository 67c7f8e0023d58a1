"""Command line interface.

Exit codes: 0 on success, 2 when input is malformed or a stated contract is
violated, 1 on unexpected internal errors.
"""
from __future__ import annotations

import sys
from fractions import Fraction

import click

from .approxcut import approximate_cut
from .bench import rows_to_csv, rows_to_json, run_bench
from .engine import exact_size_cut, exact_size_cut_linear, minimum_bisection
from .errors import TreecutError
from .fileio import load_graph, load_td, save_graph, save_td
from .generators import make_instance
from .oracle import (
    brute_force_min_bisection,
    brute_force_min_cut_size_m,
    tree_dp_min_bisection,
)
from .treedec import validate


def _guard(fn):
    try:
        return fn()
    except TreecutError as exc:
        click.echo("error: %s" % exc, err=True)
        sys.exit(2)


@click.group()
def main():
    """Balanced cuts and minimum bisections from tree decompositions."""


@main.command()
@click.option("--family", required=True,
              type=click.Choice(["path", "star", "spider", "caterpillar",
                                 "ternary", "random-tree", "grid", "random-td"]))
@click.option("--n", type=int, default=None)
@click.option("--h", type=int, default=None, help="ternary tree height")
@click.option("--k", type=int, default=None, help="grid side length")
@click.option("--legs", default=None, help="comma separated spider leg lengths")
@click.option("--spine", type=int, default=None)
@click.option("--hairs", type=int, default=None)
@click.option("--width", type=int, default=None, help="random-td target width")
@click.option("--seed", type=int, default=0)
@click.option("--out-graph", required=True, type=click.Path())
@click.option("--out-td", required=True, type=click.Path())
def gen(family, n, h, k, legs, spine, hairs, width, seed, out_graph, out_td):
    """Generate an instance: a graph and a decomposition for it."""
    def run():
        kw = {"seed": seed}
        for key, val in (("n", n), ("h", h), ("k", k), ("spine", spine),
                         ("hairs", hairs), ("width", width)):
            if val is not None:
                kw[key] = val
        if legs is not None:
            kw["legs"] = [int(x) for x in legs.split(",")]
        g, td = make_instance(family, **kw)
        save_graph(g, out_graph)
        save_td(td, out_td)
        click.echo("wrote %s (n=%d) and %s (size=%d, width=%d)"
                   % (out_graph, g.n, out_td, td.size(), td.width()))
    _guard(run)


@main.command("validate")
@click.option("--graph", "graph_path", required=True, type=click.Path(exists=True))
@click.option("--td", "td_path", required=True, type=click.Path(exists=True))
def validate_cmd(graph_path, td_path):
    """Check the decomposition properties against the graph."""
    def run():
        g = load_graph(graph_path)
        td = load_td(td_path)
        rep = validate(g, td)
        click.echo("vertex cover: %s" % ("ok" if rep.vertex_cover_ok else "FAIL"))
        click.echo("edge cover:   %s" % ("ok" if rep.edge_cover_ok else "FAIL"))
        click.echo("connectivity: %s" % ("ok" if rep.connectivity_ok else "FAIL"))
        click.echo("width: %d" % rep.width)
        if not rep.ok:
            click.echo("witness: %s" % rep.witness, err=True)
            sys.exit(2)
    _guard(run)


def _print_report(rep, report_path):
    click.echo("n=%d m=%d width=%d bound=%.2f legible=%.2f steps=%d r=%s"
               % (rep.n, rep.m, rep.width, rep.bound, rep.legible_bound,
                  len(rep.steps), rep.r))
    if rep.width > rep.bound:
        click.echo("error: width exceeds the stated bound", err=True)
        sys.exit(2)
    if report_path:
        text = rep.to_json()
        if report_path == "-":
            click.echo(text)
        else:
            with open(report_path, "w") as fh:
                fh.write(text)


@main.command()
@click.option("--graph", "graph_path", required=True, type=click.Path(exists=True))
@click.option("--td", "td_path", required=True, type=click.Path(exists=True))
@click.option("--m", type=int, default=None, help="part size (default n//2)")
@click.option("--impl", type=click.Choice(["linear", "first"]), default="linear")
@click.option("--report", "report_path", default=None,
              help="write a JSON report here ('-' for stdout)")
def bisect(graph_path, td_path, m, impl, report_path):
    """Minimum-bisection style cut with a provable width bound."""
    def run():
        g = load_graph(graph_path)
        td = load_td(td_path)
        if m is None:
            _, rep = minimum_bisection(g, td, impl=impl)
        else:
            driver = exact_size_cut_linear if impl == "linear" else exact_size_cut
            _, rep = driver(g, td, m)
        _print_report(rep, report_path)
    _guard(run)


@main.command()
@click.option("--graph", "graph_path", required=True, type=click.Path(exists=True))
@click.option("--td", "td_path", required=True, type=click.Path(exists=True))
@click.option("--m", type=int, required=True)
@click.option("--impl", type=click.Choice(["linear", "first"]), default="linear")
@click.option("--report", "report_path", default=None)
def cut(graph_path, td_path, m, impl, report_path):
    """Cut with exactly m vertices on one side."""
    def run():
        g = load_graph(graph_path)
        td = load_td(td_path)
        driver = exact_size_cut_linear if impl == "linear" else exact_size_cut
        b, rep = driver(g, td, m)
        click.echo("B = %s" % " ".join(map(str, b)))
        _print_report(rep, report_path)
    _guard(run)


@main.command("approx-cut")
@click.option("--td", "td_path", required=True, type=click.Path(exists=True))
@click.option("--m", type=int, required=True)
@click.option("--c", "c_str", required=True,
              help="balance in (0,1), decimal or p/q")
@click.option("--graph", "graph_path", default=None, type=click.Path(exists=True))
def approx_cut_cmd(td_path, m, c_str, graph_path):
    """Cut with c*m < |B| <= m opening few clusters."""
    def run():
        td = load_td(td_path)
        c = Fraction(c_str)
        g = load_graph(graph_path) if graph_path else None
        res = approximate_cut(td, m, c, g=g)
        click.echo("B = %s" % " ".join(map(str, res.b_vertices)))
        click.echo("size=%d rounds=%d width=%s"
                   % (len(res.b_vertices), res.rounds,
                      "-" if res.width is None else res.width))
    _guard(run)


@main.command("oracle")
@click.option("--graph", "graph_path", required=True, type=click.Path(exists=True))
@click.option("--m", type=int, default=None)
@click.option("--method", type=click.Choice(["auto", "brute", "tree-dp"]),
              default="auto")
def oracle_cmd(graph_path, m, method):
    """Exact minimum cut width by exhaustive search or tree DP."""
    def run():
        g = load_graph(graph_path)
        if method == "tree-dp" or (method == "auto" and g.n > 24):
            width = tree_dp_min_bisection(g, m)
            click.echo("min width: %d (tree DP)" % width)
        else:
            if m is None:
                width, bset = brute_force_min_bisection(g)
            else:
                width, bset = brute_force_min_cut_size_m(g, m)
            click.echo("min width: %d" % width)
            click.echo("witness B = %s" % " ".join(map(str, sorted(bset))))
    _guard(run)


@main.command("bench")
@click.option("--families", default="path,star,spider,caterpillar,ternary,"
                                    "random-tree,grid")
@click.option("--sizes", default="100,1000")
@click.option("--seed", type=int, default=0)
@click.option("--differential", is_flag=True,
              help="also run the rebuild-per-round driver")
@click.option("--oracle", "with_oracle", is_flag=True)
@click.option("--json", "as_json", is_flag=True)
@click.option("--out", "out_path", default=None, type=click.Path())
def bench_cmd(families, sizes, seed, differential, with_oracle, as_json,
              out_path):
    """Sweep the families and report widths, bounds and runtimes."""
    def run():
        rows = run_bench([f.strip() for f in families.split(",") if f.strip()],
                         [int(s) for s in sizes.split(",")],
                         seed=seed, differential=differential,
                         with_oracle=with_oracle)
        text = rows_to_json(rows) if as_json else rows_to_csv(rows)
        if out_path:
            with open(out_path, "w") as fh:
                fh.write(text)
            click.echo("wrote %s (%d rows)" % (out_path, len(rows)))
        else:
            click.echo(text, nl=False)
    _guard(run)


if __name__ == "__main__":
    main()

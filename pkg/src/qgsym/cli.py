"""Command-line interface.

Validation failures exit with code 2 and a machine-readable
``error: <Kind>: <message>`` line on stderr.  All runs are deterministic
given the same flags.
"""

from __future__ import annotations

import functools
import sys
import warnings

import click
import numpy as np

from . import builders, io, quotient
from .decompose import l2_norm_sq, project, random_function
from .errors import QgsymError
from .groups import ProductIrrep
from .scattering import build_secular_system, secular_det, standard_conditions
from .spectra import Spectrum, compare_spectra, find_roots_real, find_roots_unitary, merge_spectra


def handle_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except QgsymError as exc:
            click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
            sys.exit(2)

    return wrapper


@click.group()
def main():
    """Spectra of metric graphs with cyclic symmetry."""


@main.group()
def build():
    """Write a graph document (JSON)."""


@build.command("cycle")
@click.option("--n", type=int, required=True)
@click.option("--len", "length", type=float, required=True)
@click.option("-o", "--output", default="graph.json", show_default=True)
@handle_errors
def build_cycle(n, length, output):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        g, action = builders.cycle_graph(n, length)
    io.save_graph(output, g, standard_conditions(g), action)
    click.echo(f"wrote {output}: {g.n_vertices} vertices, {g.n_edges} edges")


@build.command("circulant")
@click.option("--n", type=int, required=True)
@click.option("--jumps", required=True, help="comma-separated jump list, e.g. 3,4")
@click.option("--lens", required=True, help="comma-separated per-jump lengths")
@click.option("-o", "--output", default="graph.json", show_default=True)
@handle_errors
def build_circulant(n, jumps, lens, output):
    jump_list = [int(x) for x in jumps.split(",")]
    len_list = [float(x) for x in lens.split(",")]
    g, action = builders.circulant_graph(n, jump_list, len_list)
    io.save_graph(output, g, standard_conditions(g), action)
    click.echo(f"wrote {output}: {g.n_vertices} vertices, {g.n_edges} edges")


@build.command("product")
@click.option("--n1", type=int, required=True)
@click.option("--n2", type=int, required=True)
@click.option("--l1", type=float, required=True, help="half-length of first-direction edges")
@click.option("--l3", type=float, required=True, help="half-length of second-direction edges")
@click.option("-o", "--output", default="graph.json", show_default=True)
@handle_errors
def build_product(n1, n2, l1, l3, output):
    """Product of two cycles; full edge lengths are 2*l1 and 2*l3."""
    if l1 <= 0 or l3 <= 0:
        from .errors import NonPositiveLength

        raise NonPositiveLength(f"half-lengths ({l1}, {l3})")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        c1, a1 = builders.cycle_graph(n1, 2.0 * l1)
        c2, a2 = builders.cycle_graph(n2, 2.0 * l3)
    g = builders.cartesian_product(c1, c2)
    action = builders.product_action(c1, a1, c2, a2)
    io.save_graph(output, g, standard_conditions(g), action)
    click.echo(f"wrote {output}: {g.n_vertices} vertices, {g.n_edges} edges")


@build.command("quotient")
@click.option("--n1", type=int, required=True)
@click.option("--n2", type=int, required=True)
@click.option("--l1", type=float, required=True)
@click.option("--l3", type=float, required=True)
@click.option("--s", type=int, required=True)
@click.option("--t", type=int, required=True)
@click.option("-o", "--output", default="graph.json", show_default=True)
@handle_errors
def build_quotient(n1, n2, l1, l3, s, t, output):
    spec = quotient.QuotientSpec(n1, n2, l1, l3, s, t)
    g, conds = quotient.quotient_graph(spec)
    io.save_graph(output, g, conds)
    click.echo(f"wrote {output}: {g.n_vertices} vertices, {g.n_edges} edges")


def _system_from_doc(path):
    g, conds, _action = io.load_graph(path)
    if conds is None:
        conds = standard_conditions(g)
    return g, build_secular_system(g, conds)


@main.command("spectrum")
@click.argument("graph_file")
@click.option("--kmax", type=float, default=10.0, show_default=True)
@click.option("--grid", type=float, default=0.01, show_default=True)
@click.option("--tol", type=float, default=1e-10, show_default=True)
@click.option("-o", "--output", default="spectrum.csv", show_default=True)
@handle_errors
def spectrum_cmd(graph_file, kmax, grid, tol, output):
    """Roots of the secular determinant of a graph document."""
    _g, sys_ = _system_from_doc(graph_file)
    s = find_roots_unitary(sys_, kmax, grid_step=grid, tol=tol, source="full")
    io.save_spectrum(output, s)
    click.echo(f"wrote {output}: {len(s.roots)} roots, {s.count()} with multiplicity")


@main.command("factors")
@click.option("--n1", type=int, required=True)
@click.option("--n2", type=int, required=True)
@click.option("--l1", type=float, required=True)
@click.option("--l3", type=float, required=True)
@click.option("--kmax", type=float, default=10.0, show_default=True)
@click.option("--grid", type=float, default=0.005, show_default=True)
@click.option("--tol", type=float, default=1e-10, show_default=True)
@click.option("-o", "--output", default="factors.csv", show_default=True)
@handle_errors
def factors_cmd(n1, n2, l1, l3, kmax, grid, tol, output):
    """Roots of every quotient factor, labeled by (s, t)."""
    parts = []
    for spec in quotient.all_quotient_specs(n1, n2, l1, l3):
        s = find_roots_real(
            lambda k: quotient.quotient_dispersion_real(spec, k),
            kmax,
            grid_step=grid,
            tol=tol,
            complex_fn=lambda k: quotient.quotient_secular_closed(spec, k),
            source=f"({spec.s},{spec.t})",
        )
        parts.append(s)
    merged = merge_spectra(parts, tol=1e-7)
    io.save_spectrum(output, merged)
    click.echo(f"wrote {output}: {len(merged.roots)} roots, {merged.count()} with multiplicity")


@main.command("compare")
@click.argument("spectrum_a")
@click.argument("spectrum_b")
@click.option("--tol", type=float, default=1e-6, show_default=True)
@handle_errors
def compare_cmd(spectrum_a, spectrum_b, tol):
    """Compare two spectrum CSV files."""
    a = io.load_spectrum(spectrum_a)
    b = io.load_spectrum(spectrum_b)
    rep = compare_spectra(a, b, tol)
    click.echo(
        f"isospectral={rep.isospectral} max_distance={rep.max_distance:.3e} "
        f"count_a={rep.count_a} count_b={rep.count_b} "
        f"unmatched_a={len(rep.unmatched_a)} unmatched_b={len(rep.unmatched_b)}"
    )
    sys.exit(0 if rep.isospectral else 1)


@main.command("project")
@click.option("--n1", type=int, required=True)
@click.option("--n2", type=int, required=True)
@click.option("--l1", type=float, required=True)
@click.option("--l3", type=float, required=True)
@click.option("--s", type=int, required=True)
@click.option("--t", type=int, required=True)
@click.option("--samples", type=int, default=100, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("-o", "--output", default="projection.csv", show_default=True)
@handle_errors
def project_cmd(n1, n2, l1, l3, s, t, samples, seed, output):
    """Project a random function onto one irrep component; emit samples."""
    g, action = builders.torus_action(n1, n2, l1, l3)
    rng = np.random.default_rng(seed)
    f = random_function(g, samples, rng)
    irrep = ProductIrrep(n1, n2, s, t)
    comp = project(f, action, irrep)
    with open(output, "w") as fh:
        fh.write(f"# component ({s},{t}); norm_sq = {l2_norm_sq(comp)!r}\n")
        fh.write("edge,sample_index,x,re,im\n")
        for e in g.edges:
            for m in range(samples):
                x = (m + 0.5) * e.length / samples
                val = comp.values[e.id, m]
                fh.write(f"{e.id},{m},{x!r},{val.real!r},{val.imag!r}\n")
    click.echo(f"wrote {output}: component norm^2 = {l2_norm_sq(comp):.6g}")


@main.command("scan")
@click.argument("graph_file")
@click.option("--kmax", type=float, default=10.0, show_default=True)
@click.option("--grid", type=float, default=0.01, show_default=True)
@click.option("-o", "--output", default="scan.csv", show_default=True)
@handle_errors
def scan_cmd(graph_file, kmax, grid, output):
    """Emit (k, |det(I - S D(k))|) plot data."""
    _g, sys_ = _system_from_doc(graph_file)
    with open(output, "w") as fh:
        fh.write("k,abs_secular\n")
        for k in np.arange(grid, kmax + grid / 2.0, grid):
            fh.write(f"{float(k)!r},{abs(secular_det(sys_, float(k)))!r}\n")
    click.echo(f"wrote {output}")


if __name__ == "__main__":
    main()

"""Command-line front end.

Exit codes: 0 all requested checks passed, 1 evaluation or verification
failure, 2 usage or parameter error.  Identical configurations produce
byte-identical CSV/JSON.  Commands that write a delimited file also render a
companion PNG figure next to it unless --no-plot is given.

Environment overrides: BC1CO_TOL replaces the pass tolerance of numerical
verify suites, BC1CO_JOBS > 1 runs independent suites in a process pool.
"""

from __future__ import annotations

import os
import re
import sys
from fractions import Fraction
from pathlib import Path

import click

from . import engine, model, plots, report, verify
from .algebra import AlgebraParams, direct_q_span
from .errors import Bc1Error, ParameterDomainError
from .model import BC1Params, QSpec, SpectralPoint
from .quadrature import QuadConfig

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def _parse_rational(text: str, name: str) -> Fraction:
    if not _RATIONAL_RE.match(text.strip()):
        raise click.UsageError(
            f"--{name} must be an exact rational like '13/2' for this command,"
            f" got {text!r}"
        )
    return Fraction(text.strip())


def _parse_real(text: str, name: str) -> float:
    text = text.strip()
    try:
        if _RATIONAL_RE.match(text):
            return float(Fraction(text))
        return float(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise click.UsageError(f"--{name}: cannot parse {text!r}") from exc


def _parse_grid(text: str, name: str) -> list[float]:
    """Grids come as 'start:stop:step' (inclusive) or comma lists."""
    text = text.strip()
    try:
        if ":" in text:
            start_s, stop_s, step_s = text.split(":")
            start, stop, step = float(start_s), float(stop_s), float(step_s)
            if step <= 0 or stop < start:
                raise ValueError("need stop >= start and step > 0")
            count = int(round((stop - start) / step)) + 1
            return [start + i * step for i in range(count)]
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise click.UsageError(f"--{name}: bad grid {text!r} ({exc})") from exc


def _model_params(b: str, iota: str, sigma: str, k: int = 0) -> BC1Params:
    try:
        return BC1Params(
            _parse_real(b, "b"), _parse_real(iota, "iota"), _parse_real(sigma, "sigma"), k
        )
    except ParameterDomainError as exc:
        raise click.UsageError(str(exc)) from exc


def _require_transform(params: BC1Params) -> None:
    try:
        params.require_transform()
    except ParameterDomainError as exc:
        raise click.UsageError(str(exc)) from exc


def _write_output(text: str, output: str | None) -> Path | None:
    if output is None:
        click.echo(text, nl=False)
        return None
    path = Path(output)
    path.write_text(text)
    click.echo(f"wrote {path}")
    return path


def _figure_path(output: str | None) -> Path | None:
    if output is None:
        return None
    return Path(output).with_suffix(".png")


_COMMON = [
    click.option("--b", "b_", required=True, help="multiplicity b (rational or decimal)"),
    click.option("--iota", required=True, help="multiplicity iota (rational or decimal)"),
    click.option("--sigma", required=True, help="weight exponent sigma"),
    click.option("--output", "-o", default=None, help="output file (default stdout)"),
    click.option("--plot/--no-plot", default=True, help="render a PNG next to the output"),
]


def _common(f):
    for opt in reversed(_COMMON):
        f = opt(f)
    return f


@click.group()
@click.version_option()
def main():
    """Rank-one Cherednik-Opdam toolkit: evaluation, transforms, verification."""


@main.command("eval")
@_common
@click.option(
    "--what",
    type=click.Choice(["q", "g", "wtilde", "mu", "muhat", "weight", "qspan"]),
    required=True,
    help="quantity to tabulate (qspan: exact coefficient export as JSON)",
)
@click.option("--n", default=0, show_default=True, help="degree index")
@click.option("--k", default=0, show_default=True, help="tanh-power index")
@click.option("--parity", type=click.Choice(["+1", "-1"]), default="+1", show_default=True)
@click.option("--m", default=0, show_default=True, help="weight shift index")
@click.option("--t", "t_grid", default=None, help="t grid 'start:stop:step' or comma list")
@click.option("--nu", "nu_grid", default=None, help="nu grid for spectral quantities")
def cmd_eval(b_, iota, sigma, output, plot, what, n, k, parity, m, t_grid, nu_grid):
    """Tabulate model quantities over a grid as CSV (or exact JSON for qspan)."""
    import io
    import json

    parity_i = 1 if parity == "+1" else -1
    if what == "qspan":
        rb = _parse_rational(b_, "b")
        ri = _parse_rational(iota, "iota")
        rs = _parse_rational(sigma, "sigma")
        try:
            aparams = AlgebraParams(rb, ri, rs)
            span = direct_q_span(aparams, n, k, parity_i)
        except (ParameterDomainError, ValueError) as exc:
            raise click.UsageError(str(exc)) from exc
        blob = {
            "b": str(rb),
            "iota": str(ri),
            "sigma": str(rs),
            "n": n,
            "k": k,
            "parity": parity_i,
            "terms": span.to_json(),
        }
        _write_output(json.dumps(blob, indent=2) + "\n", output)
        return

    params = _model_params(b_, iota, sigma, k)
    rows: list[tuple] = []
    try:
        if what in ("q", "mu", "weight"):
            if t_grid is None:
                raise click.UsageError(f"--what {what} needs --t")
            grid = _parse_grid(t_grid, "t")
            if what == "q":
                spec = QSpec(n, k, parity_i)
                header = ["t", "q"]
                rows = [(t, model.q_eval(params, spec, t)) for t in grid]
            elif what == "mu":
                header = ["t", "mu_density"]
                rows = [(t, model.mu_density(params, t)) for t in grid]
            else:
                header = ["t", "weight"]
                rows = [(t, model.weight_eval(params, m, t)) for t in grid]
            xlabel = "t"
        elif what == "g":
            if t_grid is None or nu_grid is None:
                raise click.UsageError("--what g needs --t and a single --nu")
            nus = _parse_grid(nu_grid, "nu")
            if len(nus) != 1:
                raise click.UsageError("--what g expects exactly one --nu value")
            lam = 1j * nus[0] if nus[0] else 0.0
            grid = _parse_grid(t_grid, "t")
            header = ["t", "g_re", "g_im"]
            vals = [model.eigenfunction_g(params, lam, t) for t in grid]
            rows = [(t, v.real, v.imag) for t, v in zip(grid, vals)]
            xlabel = "t"
        else:  # wtilde, muhat: spectral side
            if what == "wtilde":
                _require_transform(params)
            if nu_grid is None:
                raise click.UsageError(f"--what {what} needs --nu")
            grid = _parse_grid(nu_grid, "nu")
            if what == "wtilde":
                header = ["nu", "wtilde"]
                rows = [
                    (nu, model.w_tilde(params, 1j * nu if nu else 0.0).real)
                    for nu in grid
                ]
            else:
                header = ["nu", "muhat_density"]
                rows = [
                    (nu, model.muhat_density(params, SpectralPoint(nu))) for nu in grid
                ]
            xlabel = "nu"
    except Bc1Error as exc:
        click.echo(f"evaluation error: {exc}", err=True)
        sys.exit(1)

    buf = io.StringIO()
    report.write_csv(header, rows, buf)
    _write_output(buf.getvalue(), output)
    fig = _figure_path(output)
    if plot and fig is not None:
        xs = [r[0] for r in rows]
        series = {h: [r[i + 1] for r in rows] for i, h in enumerate(header[1:])}
        plots.curve_figure(xs, series, fig, f"{what} over {xlabel}", xlabel)
        click.echo(f"wrote {fig}")


@main.command("gram")
@_common
@click.option("--n-max", default=5, show_default=True)
@click.option("--k", default=0, show_default=True)
@click.option("--parity", type=click.Choice(["+1", "-1"]), default="+1", show_default=True)
def cmd_gram(b_, iota, sigma, output, plot, n_max, k, parity):
    """Gram matrix CSV plus closed-form diagonal comparison JSON."""
    import io
    import json
    import math

    params = _model_params(b_, iota, sigma, k)
    parity_i = 1 if parity == "+1" else -1
    try:
        G = engine.gram_matrix(params, n_max, k, parity_i)
        closed = [
            model.q_norm_sq_closed(params, QSpec(i, k, parity_i)) for i in range(n_max + 1)
        ]
    except Bc1Error as exc:
        click.echo(f"evaluation error: {exc}", err=True)
        sys.exit(1)
    header = ["i\\j"] + [str(j) for j in range(n_max + 1)]
    buf = io.StringIO()
    report.write_csv(
        header, [[i] + list(G[i]) for i in range(n_max + 1)], buf
    )
    path = _write_output(buf.getvalue(), output)
    off = max(
        (
            abs(G[i, j]) / math.sqrt(G[i, i] * G[j, j])
            for i in range(n_max + 1)
            for j in range(n_max + 1)
            if i != j
        ),
        default=0.0,
    )
    comparison = {
        "diag": [float(G[i, i]) for i in range(n_max + 1)],
        "closed_norm_sq": closed,
        "diag_rel_dev": [
            abs(G[i, i] - c) / c for i, c in enumerate(closed)
        ],
        "max_offdiag_rel": off,
    }
    if output is not None:
        cmp_path = Path(output).with_suffix(".norms.json")
        cmp_path.write_text(json.dumps(comparison, indent=2) + "\n")
        click.echo(f"wrote {cmp_path}")
    else:
        click.echo(json.dumps(comparison, indent=2))
    fig = _figure_path(output)
    if plot and fig is not None:
        plots.heatmap_figure(G, fig, f"Gram matrix (k={k}, parity={parity})")
        click.echo(f"wrote {fig}")


@main.command("transform")
@_common
@click.option("--n", default=0, show_default=True)
@click.option("--k", default=0, show_default=True)
@click.option("--parity", type=click.Choice(["+1", "-1"]), default="+1", show_default=True)
@click.option("--nu", "nu_grid", default="0.25,0.5,1,2,4", show_default=True)
def cmd_transform(b_, iota, sigma, output, plot, n, k, parity, nu_grid):
    """Forward transform by quadrature against the closed form, per nu."""
    import io

    params = _model_params(b_, iota, sigma, k)
    _require_transform(params)
    parity_i = 1 if parity == "+1" else -1
    spec = QSpec(n, k, parity_i)
    nus = _parse_grid(nu_grid, "nu")
    cfg = QuadConfig.for_params(params.sigma, params.rho)
    f = engine.q_function(params, spec)
    header = [
        "nu",
        "quad_plus_re",
        "quad_plus_im",
        "quad_minus_re",
        "quad_minus_im",
        "closed_plus_re",
        "closed_plus_im",
        "closed_minus_re",
        "closed_minus_im",
        "rel_dev",
    ]
    pairs = []
    try:
        for nu in nus:
            p = SpectralPoint(nu)
            pairs.append(
                (
                    nu,
                    engine.forward_transform(params, f, p, cfg),
                    model.closed_transform(params, spec, p),
                )
            )
    except Bc1Error as exc:
        click.echo(f"evaluation error: {exc}", err=True)
        sys.exit(1)
    # deviations relative to the closed form's size over the grid (the
    # spectral polynomials have zeros at isolated nu)
    scale = max(max(abs(c.f_plus), abs(c.f_minus)) for _nu, _q, c in pairs)
    rows = []
    for nu, quad, closed in pairs:
        dev = (
            max(abs(quad.f_plus - closed.f_plus), abs(quad.f_minus - closed.f_minus))
            / scale
        )
        rows.append(
            (
                nu,
                quad.f_plus.real,
                quad.f_plus.imag,
                quad.f_minus.real,
                quad.f_minus.imag,
                closed.f_plus.real,
                closed.f_plus.imag,
                closed.f_minus.real,
                closed.f_minus.imag,
                dev,
            )
        )
    buf = io.StringIO()
    report.write_csv(header, rows, buf)
    _write_output(buf.getvalue(), output)
    fig = _figure_path(output)
    if plot and fig is not None:
        plots.deviation_figure(
            [r[0] for r in rows],
            [r[-1] for r in rows],
            1e-6,
            fig,
            f"transform deviation n={n} k={k} parity={parity}",
        )
        click.echo(f"wrote {fig}")


@main.command("spectral-density")
@_common
@click.option("--nu", "nu_grid", default="0.05:8:0.05", show_default=True)
def cmd_spectral_density(b_, iota, sigma, output, plot, nu_grid):
    """Tabulate the spectral (Plancherel) density over a nu grid."""
    import io

    params = _model_params(b_, iota, sigma)
    nus = [nu for nu in _parse_grid(nu_grid, "nu") if nu > 0]
    try:
        rows = [(nu, model.muhat_density(params, SpectralPoint(nu))) for nu in nus]
    except Bc1Error as exc:
        click.echo(f"evaluation error: {exc}", err=True)
        sys.exit(1)
    buf = io.StringIO()
    report.write_csv(["nu", "muhat_density"], rows, buf)
    _write_output(buf.getvalue(), output)
    fig = _figure_path(output)
    if plot and fig is not None:
        plots.curve_figure(
            [r[0] for r in rows],
            {"muhat_density": [r[1] for r in rows]},
            fig,
            "spectral density",
            "nu",
        )
        click.echo(f"wrote {fig}")


_SUITE_CHOICES = sorted(verify.SUITES) + ["all"]


def _run_named_suite(name: str, kwargs: dict) -> list:
    return verify.run_suite(name, **kwargs)


@main.command("verify")
@click.argument("suite", type=click.Choice(_SUITE_CHOICES))
@_common
@click.option("--n-max", default=None, type=int, help="degree sweep bound")
@click.option("--k-max", default=None, type=int, help="tanh-power sweep bound")
@click.option("--m-max", default=None, type=int, help="shift-order sweep bound")
@click.option("--tol", default=None, type=float, help="override pass tolerance")
def cmd_verify(suite, b_, iota, sigma, output, plot, n_max, k_max, m_max, tol):
    """Run verification suites; exit 0 iff every report passes."""
    names = sorted(verify.SUITES) if suite == "all" else [suite]
    tol_env = os.environ.get("BC1CO_TOL")
    if tol is None and tol_env:
        try:
            tol = float(tol_env)
        except ValueError:
            raise click.UsageError(f"BC1CO_TOL={tol_env!r} is not a number")
    exact_needed = any(n in verify.EXACT_SUITES for n in names)
    numeric_needed = any(n not in verify.EXACT_SUITES for n in names)
    triples = None
    if exact_needed:
        rb = _parse_rational(b_, "b")
        ri = _parse_rational(iota, "iota")
        rs = _parse_rational(sigma, "sigma")
        try:
            AlgebraParams(rb, ri, rs)
        except ParameterDomainError as exc:
            raise click.UsageError(str(exc)) from exc
        triples = [(rb, ri, rs)]
    params = _model_params(b_, iota, sigma) if numeric_needed else None
    if params is not None and any(
        n in ("wtilde", "transform", "plancherel") for n in names
    ):
        _require_transform(params)

    tasks: list[tuple[str, dict]] = []
    for name in names:
        kwargs: dict = {}
        if name in verify.EXACT_SUITES:
            kwargs["triples"] = triples
            if m_max is not None and name == "bernstein":
                kwargs["m_max"] = m_max
            if name == "rodrigues":
                if n_max is not None:
                    kwargs["n_max"] = n_max
                if k_max is not None:
                    kwargs["k_max"] = k_max
        else:
            kwargs["params"] = params
            if tol is not None:
                kwargs["tolerance"] = tol
            if name in ("gram",) and n_max is not None:
                kwargs["n_max"] = n_max
            if name in ("transform", "plancherel"):
                if n_max is not None:
                    kwargs["n_max"] = n_max
                if k_max is not None:
                    kwargs["k_max"] = k_max
        tasks.append((name, kwargs))

    jobs = 1
    jobs_env = os.environ.get("BC1CO_JOBS")
    if jobs_env:
        try:
            jobs = max(1, int(jobs_env))
        except ValueError:
            raise click.UsageError(f"BC1CO_JOBS={jobs_env!r} is not an integer")

    reports = []
    try:
        if jobs > 1 and len(tasks) > 1:
            from concurrent.futures import ProcessPoolExecutor

            with ProcessPoolExecutor(max_workers=min(jobs, len(tasks))) as pool:
                for batch in pool.map(
                    _run_named_suite, [t[0] for t in tasks], [t[1] for t in tasks]
                ):
                    reports.extend(batch)
        else:
            for name, kwargs in tasks:
                reports.extend(_run_named_suite(name, kwargs))
    except Bc1Error as exc:
        click.echo(f"verification error: {exc}", err=True)
        sys.exit(1)

    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        click.echo(
            f"{status} {r.test:<12} rel_dev={r.max_rel_dev:.3e}"
            f" tol={r.tolerance:.1e} ({r.seconds:.2f}s)"
        )
    text = report.reports_to_json(reports)
    if output is not None:
        Path(output).write_text(text)
        click.echo(f"wrote {output}")
    fig = _figure_path(output)
    if plot and fig is not None:
        plots.report_bars_figure(reports, fig, f"verify {suite}")
        click.echo(f"wrote {fig}")
    if not all(r.passed for r in reports):
        sys.exit(1)


if __name__ == "__main__":  # pragma: no cover
    main()

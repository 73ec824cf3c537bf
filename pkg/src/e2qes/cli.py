"""Command-line front end: ``e2spec <command> [options]``.

Outputs are JSON (versioned, every number tagged ``exact`` or ``float``,
exact values carried as rational strings) or CSV with 17 significant
digits.  Nothing time- or thread-dependent reaches the output, so equal
configurations give byte-identical files.

Exit codes: 0 ok, 1 verify failure, 2 config error, 3 numerical failure,
4 measure refusal.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional, Sequence

from . import __version__
from .errors import ConfigError, E2QESError, MeasureRefusal
from .exactalg.rational import parse_rational, rational_str, to_decimal_string
from .recurrence import RecurrenceSpec, Sector

SCHEMA = "e2spec/1"
DEFAULT_DIGITS = 50


# configuration -------------------------------------------------------------

@dataclass
class RunConfig:
    command: str
    N: Optional[int] = None
    sector: Optional[Sector] = None
    zeta: Optional[Fraction] = None
    g: Optional[Fraction] = None
    grid: Optional[list[Fraction]] = None
    trunc: Optional[int] = None
    kind: Optional[str] = None
    method: str = "exact"
    target: Optional[str] = None
    fmt: str = "json"
    out: Optional[str] = None
    precision: int = DEFAULT_DIGITS
    allow_even: bool = False
    exact_cap: int = 10
    stabilize_against: Optional[int] = None
    moments: int = 4
    n_max: Optional[int] = None
    suite: str = "quick"
    window: tuple[float, float] = (-0.5, 3.5)
    full_period: bool = False
    critical: bool = False
    extra: dict = field(default_factory=dict)

    def spec(self) -> RecurrenceSpec:
        if self.N is None:
            raise ConfigError("--N is required")
        return RecurrenceSpec(self.N, self.sector or Sector.SINE, self.allow_even)


def parse_grid(text: str) -> list[Fraction]:
    """``start:stop:step`` with exact rationals; stop is included when hit exactly."""
    parts = text.split(":")
    if len(parts) != 3:
        raise ConfigError(f"grid must be start:stop:step, got {text!r}")
    try:
        a, b, h = (parse_rational(p) for p in parts)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    if h <= 0 or b < a:
        raise ConfigError("grid needs step > 0 and stop >= start")
    n = int((b - a) / h)
    return [a + k * h for k in range(n + 1)]


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def _window(text: str) -> tuple[float, float]:
    parts = text.split(":")
    if len(parts) != 2:
        raise ConfigError(f"window must be lo:hi, got {text!r}")
    lo, hi = (float(_rational(p)) for p in parts)
    if hi <= lo:
        raise ConfigError("window needs lo < hi")
    return lo, hi


# number encoding ------------------------------------------------------------

def exact(x: Fraction | int) -> dict:
    x = Fraction(x)
    return {"method": "exact", "value": float(x), "rational": rational_str(x)}


def flt(x: float) -> dict:
    return {"method": "float", "value": float(x)}


def cplx(z: complex) -> dict:
    z = complex(z)
    return {"method": "float", "re": z.real, "im": z.imag}


def csv_float(x: float) -> str:
    return f"{float(x):.17g}"


def _envelope(cfg: RunConfig, inputs: dict, result: Any) -> dict:
    return {"schema": SCHEMA, "version": __version__, "command": cfg.command,
            "input": inputs, "result": result}


def _emit(cfg: RunConfig, doc: Optional[dict], rows: Optional[list[list]] = None,
          header: Optional[list[str]] = None) -> None:
    if cfg.fmt == "csv":
        if rows is None:
            raise ConfigError(f"{cfg.command} has no CSV form; use --format json")
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if header:
            w.writerow(header)
        for r in rows:
            w.writerow([csv_float(v) if isinstance(v, float) else v for v in r])
        text = buf.getvalue()
    else:
        text = json.dumps(doc, indent=2, sort_keys=False) + "\n"
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# commands -------------------------------------------------------------------

def cmd_spectrum(cfg: RunConfig) -> int:
    from .spectrum import energies, sweep

    spec = cfg.spec()
    inputs = {"N": spec.N, "sector": spec.sector.value}
    if cfg.grid is not None:
        rows = sweep(spec, cfg.grid)
        inputs["grid"] = [rational_str(z) for z in (cfg.grid[0], cfg.grid[-1])] + [len(cfg.grid)]
        header = ["zeta"]
        for i in range(1, spec.K + 1):
            header += [f"re_E{i}", f"im_E{i}"]
        doc = _envelope(cfg, inputs, [{"zeta": exact(z), "energies": [cplx(e) for e in r.energies]}
                                      for z, r in zip(cfg.grid, rows)])
        _emit(cfg, doc, [r.columns() for r in rows], header)
        return 0
    if cfg.zeta is None:
        raise ConfigError("spectrum needs --zeta or --zeta-range")
    res = energies(spec, cfg.zeta)
    inputs["zeta"] = rational_str(cfg.zeta)
    result = {
        "zeta": exact(cfg.zeta),
        "quantization_polynomial": res.quantization_poly.format(t="t"),
        "energies": [dict(cplx(e), multiplicity=m) for e, m in zip(res.energies, res.multiplicities)],
        "pt_status": str(res.pt_status),
    }
    header = ["zeta"]
    row: list = [float(cfg.zeta)]
    for i, e in enumerate(res.energies, 1):
        header += [f"re_E{i}", f"im_E{i}"]
        row += [e.real, e.imag]
    _emit(cfg, _envelope(cfg, inputs, result), [row], header)
    return 0


def _exceptional_qes(cfg: RunConfig) -> int:
    from .discriminant import qes_discriminant, qes_exceptional_points

    if cfg.N is None:
        raise ConfigError("exceptional qes needs --N")
    sectors = [cfg.sector] if cfg.sector else [Sector.SINE, Sector.COSINE]
    pts, deltas = [], {}
    for s in sectors:
        spec = RecurrenceSpec(cfg.N, s, cfg.allow_even)
        deltas[s.value] = [str(c) for c in reversed(qes_discriminant(spec).delta.coeffs)]
        pts += qes_exceptional_points(spec)
    pts.sort(key=lambda p: (p.zeta0.midpoint, p.sector.value))
    out = []
    for p in pts:
        out.append({
            "sector": p.sector.value,
            "zeta0": dict(flt(p.zeta), interval=[rational_str(p.zeta0.lo), rational_str(p.zeta0.hi)],
                          decimal=p.zeta0.decimal(cfg.precision)),
            "zeta0_N": flt(p.scaled),
            "multiplicity": p.zeta0.multiplicity,
        })
    doc = _envelope(cfg, {"N": cfg.N, "sectors": [s.value for s in sectors]},
                    {"discriminants_in_u": deltas, "points": out})
    rows = [[p.zeta, p.scaled, p.sector.value] for p in pts]
    _emit(cfg, doc, rows, ["zeta0", "zeta0_N", "sector"])
    return 0


def _exceptional_mathieu(cfg: RunConfig) -> int:
    from .mathieu import Kind, exceptional_exact, exceptional_numeric, stabilized_points

    if cfg.trunc is None or cfg.kind is None:
        raise ConfigError("exceptional mathieu needs --trunc and --kind")
    kind = Kind.parse(cfg.kind)
    ell = cfg.trunc
    if cfg.stabilize_against is not None:
        other = cfg.stabilize_against
        if abs(other - ell) != 1:
            raise ConfigError("--stabilize-against must be a neighbouring truncation")
        pts = exceptional_numeric(kind, ell)
        ref_pts = exceptional_numeric(kind, other)
        stable = {round(p.g0, 12) for p in stabilized_points(ref_pts, pts)}
        method = "numeric"
    else:
        method = cfg.method
        if method == "exact":
            pts = exceptional_exact(kind, ell, cfg.exact_cap)
        else:
            pts = exceptional_numeric(kind, ell)
        stable = set()
    out = []
    rows = []
    for p in pts:
        is_stable = round(p.g0, 12) in stable
        entry = {"g0": flt(p.g0), "ell": p.ell, "kind": kind.value, "method": method,
                 "stabilized": is_stable}
        if p.root is not None:
            entry["g0"]["interval"] = [rational_str(p.root.lo), rational_str(p.root.hi)]
            entry["g0"]["decimal"] = p.root.decimal(cfg.precision)
        else:
            entry["onset"] = p.onset
        out.append(entry)
        rows.append([p.g0, p.ell, kind.value, method, int(is_stable)])
    inputs = {"trunc": ell, "kind": kind.value, "method": method,
              "stabilize_against": cfg.stabilize_against}
    _emit(cfg, _envelope(cfg, inputs, {"points": out}), rows,
          ["g0", "ell", "kind", "method", "stabilized"])
    return 0


def cmd_exceptional(cfg: RunConfig) -> int:
    if cfg.target == "qes":
        return _exceptional_qes(cfg)
    if cfg.target == "mathieu":
        return _exceptional_mathieu(cfg)
    raise ConfigError("exceptional needs 'qes' or 'mathieu'")


def cmd_orthopoly(cfg: RunConfig) -> int:
    import numpy as np

    from .orthopoly import (favard_constants, gram_matrix, gram_matrix_exact, measure,
                            moments_from_measure, moments_recursive, norms,
                            wavefunction_functional_check)

    spec = cfg.spec()
    if cfg.zeta is None:
        raise ConfigError("orthopoly needs --zeta")
    if spec.pt_broken_everywhere:
        raise ConfigError("even N has no weakly orthogonal structure")
    z = cfg.zeta
    n_max = cfg.n_max if cfg.n_max is not None else spec.K + 2
    data = favard_constants(spec, z, n_max)
    m = measure(spec, z, dps=cfg.precision)
    mu = moments_recursive(spec, z, cfg.moments)
    mu_m = moments_from_measure(m, cfg.moments)
    G = gram_matrix(spec, z, n_max, m)
    G_exact = gram_matrix_exact(spec, z, n_max)
    thetas = np.linspace(0, np.pi, 64, endpoint=False)
    result = {
        "zeta": exact(z),
        "favard": {"a": [exact(a) for a in data.a], "b": [exact(b) for b in data.b]},
        "norms": [exact(v) for v in norms(data, n_max).values],
        "moments": [exact(v) for v in mu.values],
        "moments_from_measure": [cplx(v) for v in mu_m.values],
        "measure": {"roots": [cplx(r) for r in m.roots], "weights": [cplx(w) for w in m.weights],
                    "condition": flt(m.condition), "digits": m.dps},
        "gram_exact": [[exact(v) for v in row] for row in G_exact],
        "gram_measure": [[cplx(v) for v in row] for row in G],
        "functional_identity_residual": flt(wavefunction_functional_check(spec, z, thetas, m)),
    }
    _emit(cfg, _envelope(cfg, {"N": spec.N, "sector": spec.sector.value, "zeta": rational_str(z),
                               "moments": cfg.moments, "n_max": n_max}, result))
    return 0


def cmd_recurrence(cfg: RunConfig) -> int:
    from .recurrence import build_P_table

    spec = cfg.spec()
    n_max = cfg.n_max if cfg.n_max is not None else spec.K + 2
    table = build_P_table(spec, n_max)
    polys = []
    rows = []
    for n in range(n_max + 1):
        p = table[n]
        terms = [{"E": i, "t": j, "coefficient": str(p.terms[(i, j)])}
                 for (i, j) in sorted(p.terms, key=lambda m: (-m[0], -m[1]))]
        polys.append({"n": n, "polynomial": p.format(), "terms": terms,
                      "denominator": table.denominator(n)})
        rows.append([n, p.format(), table.denominator(n)])
    doc = _envelope(cfg, {"N": spec.N, "sector": spec.sector.value, "n_max": n_max},
                    {"cutoff": spec.K, "polynomials": polys})
    _emit(cfg, doc, rows, ["n", "polynomial", "denominator"])
    return 0


def cmd_floquet(cfg: RunConfig) -> int:
    from .floquet import critical_coupling, floquet_periodic_eigenvalues

    if cfg.critical:
        gc = critical_coupling(window=cfg.window)
        doc = _envelope(cfg, {"window": list(cfg.window)}, {"critical_g": flt(gc)})
        _emit(cfg, doc, [[gc]], ["critical_g"])
        return 0
    if cfg.g is None:
        raise ConfigError("floquet needs --g or --critical")
    r = floquet_periodic_eigenvalues(float(cfg.g), cfg.window, full_period=cfg.full_period)
    doc = _envelope(cfg, {"g": rational_str(cfg.g), "window": list(cfg.window),
                          "full_period": cfg.full_period},
                    {"eigenvalues": [flt(e) for e in r.eigenvalues],
                     "det_residual": flt(r.det_residual)})
    _emit(cfg, doc, [[float(cfg.g), e] for e in r.eigenvalues], ["g", "E"])
    return 0


def cmd_verify(cfg: RunConfig) -> int:
    from .verify import SUITES, run_suite

    if cfg.suite not in SUITES:
        raise ConfigError(f"unknown suite {cfg.suite!r}; choose from {', '.join(SUITES)}")
    results = run_suite(cfg.suite, echo=lambda line: print(line, flush=True))
    n_ok = sum(r.passed for r in results)
    print(f"{n_ok}/{len(results)} criteria passed")
    return 0 if n_ok == len(results) else 1


COMMANDS = {
    "spectrum": cmd_spectrum,
    "exceptional": cmd_exceptional,
    "orthopoly": cmd_orthopoly,
    "recurrence": cmd_recurrence,
    "floquet": cmd_floquet,
    "verify": cmd_verify,
}


# argument parsing -----------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="fmt", choices=["json", "csv"], default="json")
    common.add_argument("--out", help="write to this file instead of stdout")
    common.add_argument("--precision", type=int, default=DEFAULT_DIGITS,
                        help="decimal digits for extended-precision arithmetic and exact-root decimals")

    model = argparse.ArgumentParser(add_help=False)
    model.add_argument("--N", type=int)
    model.add_argument("--sector", help="s (sine) or c (cosine)")
    model.add_argument("--allow-even-N", dest="allow_even", action="store_true")

    p = argparse.ArgumentParser(prog="e2spec", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("spectrum", parents=[common, model], help="quantized energies")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--zeta")
    g.add_argument("--zeta-range", help="start:stop:step")

    e = sub.add_parser("exceptional", parents=[common, model], help="exceptional points")
    e.add_argument("target", choices=["qes", "mathieu"])
    e.add_argument("--trunc", type=int)
    e.add_argument("--kind", choices=["xi", "theta"])
    e.add_argument("--method", choices=["exact", "numeric"], default="exact")
    e.add_argument("--exact-cap", type=int, default=10)
    e.add_argument("--stabilize-against", type=int)

    o = sub.add_parser("orthopoly", parents=[common, model], help="norms, measure, moments, Gram matrix")
    o.add_argument("--zeta")
    o.add_argument("--moments", type=int, default=4)
    o.add_argument("--n-max", type=int)

    r = sub.add_parser("recurrence", parents=[common, model], help="dump the recurrence polynomials")
    r.add_argument("--n-max", type=int)

    f = sub.add_parser("floquet", parents=[common], help="periodic eigenvalues by monodromy")
    f.add_argument("--g")
    f.add_argument("--window", default="-0.5:3.5", help="lo:hi energy window")
    f.add_argument("--full-period", action="store_true", help="admit 2pi-periodic solutions")
    f.add_argument("--critical", action="store_true", help="locate the lowest critical coupling")

    v = sub.add_parser("verify", help="run the reproduction suite")
    v.add_argument("--suite", default="quick", help="all, tables, algebra or quick")
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=ns.command)
    cfg.fmt = getattr(ns, "fmt", "json")
    cfg.out = getattr(ns, "out", None)
    cfg.precision = getattr(ns, "precision", DEFAULT_DIGITS)
    if cfg.precision < 17:
        raise ConfigError("--precision must be at least 17")
    cfg.N = getattr(ns, "N", None)
    if getattr(ns, "sector", None):
        cfg.sector = Sector.parse(ns.sector)
    cfg.allow_even = getattr(ns, "allow_even", False)
    if getattr(ns, "zeta", None) is not None:
        cfg.zeta = _rational(ns.zeta)
        if cfg.zeta == 0:
            raise ConfigError("zeta must be nonzero")
    if getattr(ns, "zeta_range", None):
        cfg.grid = parse_grid(ns.zeta_range)
    if getattr(ns, "g", None) is not None:
        cfg.g = _rational(ns.g)
    for name in ("trunc", "kind", "method", "exact_cap", "stabilize_against", "moments",
                 "n_max", "suite", "full_period", "critical", "target"):
        if hasattr(ns, name):
            setattr(cfg, name, getattr(ns, name))
    if hasattr(ns, "window"):
        cfg.window = _window(ns.window)
    if cfg.moments is not None and cfg.moments < 0:
        raise ConfigError("--moments must be >= 0")
    return cfg


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = config_from_args(ns)
        return COMMANDS[cfg.command](cfg)
    except MeasureRefusal as exc:
        a, b = exc.pair
        print(f"error: measure refused {exc.distance:.3e} from an exceptional point; "
              f"nearly coincident roots {a:.12g} and {b:.12g}", file=sys.stderr)
        return exc.exit_code
    except E2QESError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())

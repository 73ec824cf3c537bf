"""Reproduction suite: one check per acceptance criterion.

Each check returns a :class:`CheckResult` carrying its pinned tolerance and
runtime budget.  A check passes only if the comparison holds and it finished
inside its budget.  Random draws use fixed seeds, so reruns are identical.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional

from . import reference as ref
from .discriminant import qes_discriminant, table1_row
from .exactalg.bipoly import BiPoly
from .exactalg.poly import UniPoly
from .floquet import critical_coupling
from .mathieu import Kind, exceptional_exact, stabilized_scan
from .orthopoly import (favard_constants, gram_matrix, measure, moments_from_measure,
                        moments_recursive, moments_symbolic, norm_closed_form, norms,
                        wavefunction_functional_check)
from .recurrence import (RecurrenceSpec, Sector, build_P_table, canonical_sequence,
                         evaluate_monomials, factor_quotients, fibonacci, gonoskov_sum,
                         pascal_shallow_union, raw_coefficients)
from .spectrum import energies
from .wavefunction import assemble, residual

SEED = 20240611

# pinned tolerances
TOL_CLOSED_FORM = 1e-10
TOL_TABLE_DIGITS = 5
TOL_BOLD_REL = 5e-5
TOL_FLOQUET = 1e-3
TOL_GRAM = 1e-8
TOL_MOMENTS = 1e-8
TOL_RESIDUAL = 1e-9
TOL_FUNCTIONAL = 1e-8


@dataclass(frozen=True)
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float
    budget: float

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return (f"[{tag}] criterion {self.number:2d} {self.name}: {self.detail} "
                f"({self.seconds:.2f}s of {self.budget:g}s)")


def _spec(N: int, sector: str) -> RecurrenceSpec:
    return RecurrenceSpec(N, Sector.parse(sector))


def _rand_zetas(rng: random.Random, n: int, hi: int = 3) -> list[Fraction]:
    # dyadic, so float(zeta) is exact and both routes see the same coupling
    return [Fraction(rng.randrange(1, hi * 2 ** 20), 2 ** 20) for _ in range(n)]


# 1 -----------------------------------------------------------------------

CLOSED_FORM_CASES = [(3, "s"), (5, "s"), (7, "s"), (1, "c"), (3, "c"), (5, "c")]


def check_closed_forms() -> tuple[bool, str]:
    rng = random.Random(SEED + 1)
    worst, where = 0.0, ""
    for N, sec in CLOSED_FORM_CASES:
        spec = _spec(N, sec)
        for z in _rand_zetas(rng, 20):
            got = energies(spec, z).energies
            want = ref.closed_form_energies(N, sec, float(z))
            d = ref.multiset_distance(got, want) / max(1.0, max(abs(w) for w in want))
            if d > worst:
                worst, where = d, f"N={N}{sec} zeta={float(z):.6f}"
    return worst < TOL_CLOSED_FORM, f"max rel dev {worst:.2e} at {where} (tol {TOL_CLOSED_FORM:g})"


# 2 -----------------------------------------------------------------------

def _desc_to_poly(coeffs_desc: list[int]) -> UniPoly:
    return UniPoly(list(reversed(coeffs_desc)))


def check_discriminants() -> tuple[bool, str]:
    bad = []
    for (N, sec), want in ref.DISCRIMINANTS.items():
        if qes_discriminant(_spec(N, sec)).delta != _desc_to_poly(want):
            bad.append(f"{N}{sec}")
    for (N, sec), lead in ref.DISCRIMINANT_LEADING.items():
        d = qes_discriminant(_spec(N, sec)).delta
        got = [d[d.degree - k] for k in range(len(lead))]
        if got != lead:
            bad.append(f"{N}{sec}(lead)")
    for N, sec in ref.TRIVIAL_DISCRIMINANTS:
        if qes_discriminant(_spec(N, sec)).delta.degree > 0:
            bad.append(f"{N}{sec}(trivial)")
    n = len(ref.DISCRIMINANTS) + len(ref.DISCRIMINANT_LEADING) + len(ref.TRIVIAL_DISCRIMINANTS)
    if bad:
        return False, f"mismatch for {', '.join(bad)}"
    return True, f"{n} discriminants equal as integer polynomials"


# 3 -----------------------------------------------------------------------

def check_table1() -> tuple[bool, str]:
    misses = []
    total = 0
    for N, printed in ref.TABLE_QES.items():
        got = [p.scaled for p in table1_row(N)]
        total += len(printed)
        if len(got) != len(printed):
            misses.append(f"N={N}: {len(got)} points, {len(printed)} printed")
            continue
        for g, p in zip(got, printed):
            if not ref.significant_match(g, p, TOL_TABLE_DIGITS):
                misses.append(f"N={N}: {g:.7g} vs {p}")
    if misses:
        return False, f"{total - len(misses)}/{total} match to {TOL_TABLE_DIGITS} digits; " + "; ".join(misses)
    return True, f"{total}/{total} entries match to {TOL_TABLE_DIGITS} significant digits"


# 4 -----------------------------------------------------------------------

def check_small_truncations() -> tuple[bool, str]:
    misses = []
    total = 0
    for kind, table in ((Kind.XI, ref.TABLE_XI), (Kind.THETA, ref.TABLE_THETA)):
        for ell, printed in table.items():
            got = [p.g0 for p in exceptional_exact(kind, ell)]
            total += len(printed)
            if len(got) != len(printed):
                misses.append(f"{kind.value} l={ell}: {len(got)} vs {len(printed)} points")
                continue
            misses += [f"{kind.value} l={ell}: {g:.7f} vs {p}"
                       for g, p in zip(got, printed) if not ref.decimal_match(g, p)]
    if misses:
        return False, "; ".join(misses)
    return True, f"{total}/{total} entries match to the printed decimals"


# 5 -----------------------------------------------------------------------

def check_stabilized() -> tuple[bool, str]:
    worst = 0.0
    misses = []
    for kind, bold in ((Kind.XI, ref.STABLE_XI), (Kind.THETA, ref.STABLE_THETA)):
        _, _, stable = stabilized_scan(kind, 26, 27)
        vals = sorted(p.g0 for p in stable)
        for b in bold:
            target = float(b)
            rel = min((abs(v - target) / target for v in vals), default=float("inf"))
            worst = max(worst, rel)
            if rel > TOL_BOLD_REL:
                misses.append(f"{kind.value} {b}")
    if misses:
        return False, f"missing {', '.join(misses)}; worst rel {worst:.2e}"
    return True, f"14/14 bold values within rel {worst:.2e} (tol {TOL_BOLD_REL:g})"


# 6 -----------------------------------------------------------------------

def check_floquet() -> tuple[bool, str]:
    g = critical_coupling()
    d = abs(g - float(ref.FLOQUET_CRITICAL))
    return d < TOL_FLOQUET, f"g_c = {g:.7f}, |diff| {d:.2e} (tol {TOL_FLOQUET:g})"


# 7 -----------------------------------------------------------------------

GRAM_CASES = {(7, "s"): (1, -40, 960), (5, "c"): (1, -48, 768)}


def check_orthogonality() -> tuple[bool, str]:
    rng = random.Random(SEED + 7)
    worst_diag = worst_off = worst_norm = 0.0
    for (N, sec), lead in GRAM_CASES.items():
        spec = _spec(N, sec)
        n_max = spec.K + 2
        for z in _rand_zetas(rng, 10):
            G = gram_matrix(spec, z, n_max, measure(spec, z))
            t = z * z
            want = [Fraction(c) * t ** k for k, c in enumerate(lead)] + [Fraction(0)] * (n_max + 1 - len(lead))
            prod = norms(favard_constants(spec, z, n_max), n_max)
            for n in range(n_max + 1):
                w = complex(want[n])
                worst_diag = max(worst_diag, abs(G[n, n] - w) / max(1.0, abs(w)))
                worst_norm = max(worst_norm, abs(prod[n] - want[n]) / max(1, abs(want[n])),
                                 abs(norm_closed_form(spec, z, n) - want[n]) / max(1, abs(want[n])))
                for m in range(n_max + 1):
                    if m != n:
                        worst_off = max(worst_off, abs(G[n, m]))
    ok = worst_diag < TOL_GRAM and worst_off < TOL_GRAM and worst_norm == 0
    return ok, (f"diag rel {worst_diag:.1e}, off-diag {worst_off:.1e} (tol {TOL_GRAM:g}); "
                f"product/Pochhammer norms exact: {worst_norm == 0}")


# 8 -----------------------------------------------------------------------

MOMENT_ZETAS = [Fraction(1, 2), Fraction(1, 3), Fraction(3, 4), Fraction(5, 2), Fraction(7, 5)]


def check_moments() -> tuple[bool, str]:
    problems = []
    worst = 0.0
    for key, lists in ref.MOMENTS.items():
        spec = _spec(*key)
        want_polys = [UniPoly(c) for c in lists]
        if moments_symbolic(spec, 4) != want_polys:
            problems.append(f"{key[0]}{key[1]} symbolic")
        for z in MOMENT_ZETAS:
            exact = moments_recursive(spec, z, 4).values
            if list(exact) != [p(z * z) for p in want_polys]:
                problems.append(f"{key[0]}{key[1]} zeta={z}")
            approx = moments_from_measure(measure(spec, z), 4).values
            for e, a in zip(exact, approx):
                worst = max(worst, abs(a - complex(e)) / max(1.0, abs(float(e))))
    ok = not problems and worst < TOL_MOMENTS
    detail = f"exact lists equal at {len(MOMENT_ZETAS)} zetas, measure rel dev {worst:.1e} (tol {TOL_MOMENTS:g})"
    return ok, detail if not problems else "mismatch: " + ", ".join(problems)


# 9 -----------------------------------------------------------------------

def check_factorization() -> tuple[bool, str]:
    bad = []
    for key, qs in ref.QUOTIENTS.items():
        spec = _spec(*key)
        fq = factor_quotients(build_P_table(spec, spec.K + 2), 2)
        for k, terms in qs.items():
            if fq[k] != BiPoly(terms):
                bad.append(f"{key[0]}{key[1]} Q{k}")
    return not bad, "all four quotients equal" if not bad else "mismatch: " + ", ".join(bad)


# 10 ----------------------------------------------------------------------

def check_combinatorics(n_max: int = 15) -> tuple[bool, str]:
    rng = random.Random(SEED + 10)
    bad = []
    for n in range(n_max + 1):
        if len(pascal_shallow_union(n)) != fibonacci(n + 1):
            bad.append(f"|M_{n}|")
    for key in ((7, "s"), (5, "c"), (9, "s"), (7, "c")):
        spec = _spec(*key)
        table = build_P_table(spec, n_max + 1)
        for _ in range(3):
            z = Fraction(rng.randrange(1, 400), rng.randrange(1, 200))
            e = Fraction(rng.randrange(-4000, 4000), rng.randrange(1, 97))
            cs = canonical_sequence(spec, z, e, n_max)
            for n in range(n_max + 1):
                direct = cs.values[n]
                if gonoskov_sum(cs.mult, n) != direct:
                    bad.append(f"{key} S n={n}")
                if evaluate_monomials(pascal_shallow_union(n), cs.mult) != direct:
                    bad.append(f"{key} M n={n}")
                if cs.coefficient(n) != raw_coefficients(table, z, e, n):
                    bad.append(f"{key} coeff n={n}")
    if bad:
        return False, "mismatch: " + ", ".join(bad[:8])
    return True, f"Gonoskov sums, shallow unions and coefficients exact for n <= {n_max}"


# 11 ----------------------------------------------------------------------

def check_wavefunctions() -> tuple[bool, str]:
    import numpy as np

    thetas = np.linspace(0, np.pi, 64, endpoint=False)
    worst_res = worst_fun = 0.0
    for (N, sec), z in (((7, "s"), Fraction(1, 2)), ((5, "c"), Fraction(1, 3))):
        spec = _spec(N, sec)
        for e in energies(spec, z).energies:
            worst_res = max(worst_res, residual(assemble(spec, z, e, thetas)))
        worst_fun = max(worst_fun, wavefunction_functional_check(spec, z, thetas))
    ok = worst_res < TOL_RESIDUAL and worst_fun < TOL_FUNCTIONAL
    return ok, (f"max residual {worst_res:.1e} (tol {TOL_RESIDUAL:g}), "
                f"functional identity {worst_fun:.1e} (tol {TOL_FUNCTIONAL:g})")


# registry ----------------------------------------------------------------

@dataclass(frozen=True)
class Criterion:
    number: int
    name: str
    run: Callable[[], tuple[bool, str]]
    budget: float


CRITERIA = [
    Criterion(1, "closed-form spectra", check_closed_forms, 5),
    Criterion(2, "discriminant identities", check_discriminants, 30),
    Criterion(3, "QES exceptional points table", check_table1, 60),
    Criterion(4, "Mathieu exact path l=2..8", check_small_truncations, 120),
    Criterion(5, "stabilized values l=26/27", check_stabilized, 600),
    Criterion(6, "Floquet critical coupling", check_floquet, 60),
    Criterion(7, "orthogonality", check_orthogonality, 10),
    Criterion(8, "moments", check_moments, 5),
    Criterion(9, "factorization quotients", check_factorization, 1),
    Criterion(10, "combinatorial recurrence forms", check_combinatorics, 5),
    Criterion(11, "wavefunction residuals", check_wavefunctions, 5),
]

SUITES = {
    "all": [c.number for c in CRITERIA],
    "tables": [3, 4, 5, 6],
    "algebra": [2, 8, 9, 10],
    "quick": [1, 2, 7, 8, 9, 10, 11],
}


def run_criterion(c: Criterion) -> CheckResult:
    t0 = time.perf_counter()
    try:
        ok, detail = c.run()
    except Exception as exc:  # a crash is a failure, reported with its type
        ok, detail = False, f"raised {type(exc).__name__}: {exc}"
    dt = time.perf_counter() - t0
    if ok and dt > c.budget:
        ok, detail = False, detail + "; over runtime budget"
    return CheckResult(c.number, c.name, ok, detail, dt, c.budget)


def run_suite(suite: str = "all", numbers: Optional[Iterable[int]] = None,
              echo: Optional[Callable[[str], None]] = None) -> list[CheckResult]:
    if numbers is None:
        if suite not in SUITES:
            raise KeyError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
        numbers = SUITES[suite]
    wanted = set(numbers)
    out = []
    for c in CRITERIA:
        if c.number in wanted:
            r = run_criterion(c)
            if echo:
                echo(r.line())
            out.append(r)
    return out

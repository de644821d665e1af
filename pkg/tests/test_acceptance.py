"""Acceptance gate: one test per criterion, each ending in a single
pass/fail line.  Every numeric claim is checked in exact arithmetic;
stated time budgets are asserted with a monotonic clock.  A criterion
whose declared comparison data disagrees with the exact computation
fails here with the full analysis in the failure message rather than
being patched over.
"""

import random
import time
from fractions import Fraction
from importlib import resources

import pytest

from chowcheck import characters, curves, exactla, jacobian, pencil
from chowcheck.jacobian import enumerate_monomials
from chowcheck.poly import PolyRing, parse_poly, partial_derivative
from chowcheck.runner import run_scenario
from chowcheck.scenario import parse_scenario

P3 = PolyRing.rationals(("x0", "x1", "x2", "x3"))
FERMAT = "x0^4 + x1^4 + x2^4 + x3^4"
MIXED = "x0^4 + x1^4 - x2^4 - x3^4"
QUARTIC_TABLE = [1, 4, 10, 16, 19, 16, 10, 4, 1]


def _bundled(name):
    text = (resources.files("chowcheck.scenarios")
            .joinpath(name).read_text(encoding="utf-8"))
    return parse_scenario(text)


def _fresh(poly_text):
    return jacobian.HypersurfaceRing(parse_poly(poly_text, P3))


def test_criterion_01_quartic_hilbert_table():
    start = time.perf_counter()
    hring = _fresh(FERMAT)
    table = jacobian.hilbert_function(hring)
    elapsed = time.perf_counter() - start
    assert table == QUARTIC_TABLE
    assert hring.quotient_dim(8) == 1
    assert hring.quotient_dim(4) == 19
    assert elapsed < 5.0
    print(f"criterion 01: pass (table {table}, {elapsed:.2f}s, exact)")


def test_criterion_02_socle_pairing_full_rank_everywhere():
    start = time.perf_counter()
    hring = _fresh(FERMAT)
    sigma = hring.socle_degree
    for k in range(sigma + 1):
        result = jacobian.macaulay_pairing_check(hring, k)
        assert result.nondegenerate, f"pairing degenerate at k = {k}"
        assert result.dim_left == QUARTIC_TABLE[k]
        assert result.dim_left == result.dim_right
    elapsed = time.perf_counter() - start
    assert elapsed < 30.0
    print(f"criterion 02: pass (k = 0..{sigma} nondegenerate, "
          f"{elapsed:.2f}s, exact)")


def test_criterion_03_uniform_multiplication_bound():
    start = time.perf_counter()
    result = jacobian.uniform_mult_rank_bound(_fresh(FERMAT), 3)
    elapsed = time.perf_counter() - start
    assert result.bound == 13
    assert result.per_variable == [13, 13, 13, 13]
    assert result.bound >= 2
    assert elapsed < 5.0
    print(f"criterion 03: pass (bound 13 >= 2, {elapsed:.2f}s, exact)")


def test_criterion_04_functional_kernel_map_rank():
    start = time.perf_counter()
    hring = _fresh(MIXED)
    g = parse_poly("x0^2*x1^2", P3)
    result = jacobian.functional_kernel_map(hring, g, b=3)
    elapsed = time.perf_counter() - start
    assert result.g_class_nonzero
    assert result.rank == 4
    assert result.target_dim == 4
    assert result.surjective
    assert elapsed < 10.0
    print(f"criterion 04: pass (rank 4 of 4, class nonzero, "
          f"{elapsed:.2f}s, exact)")


def test_criterion_05_pencil_identities():
    start = time.perf_counter()
    scn = pencil.default_scenario()

    assert pencil.verify_blowup_factorization(scn).passed
    for i in (1, 2, 3):
        assert pencil.membership_identity(scn, i).passed
        assert pencil.tangent_identity(scn, i).passed
    assert pencil.verify_concurrency(scn).passed

    step = pencil.verify_hyperelliptic_condition(scn)
    assert "evaluation divides exactly by t, lam, and lam - 1" in step.details
    assert "closed form satisfies A*num + B*den == 0" in step.details
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0

    if step.passed:
        print(f"criterion 05: pass (all identities, {elapsed:.2f}s, exact)")
        return

    _, quotient, declared, diff = pencil.hyperelliptic_data(scn)
    blow = scn.blowup_ring
    factored = parse_poly("2*(lam + 1)*(t^2 - 9*t + 18)", blow)
    assert quotient == factored
    pytest.fail(
        "criterion 05: fail - the declared parameter quadratic does not "
        "match the exact computation.\n"
        "Every other identity in the scenario verifies exactly: the "
        "substituted family divides by the declared blow-up factor with the "
        "declared cubic as quotient, all three marked points lie on the "
        "cubic with the declared tangent rows, the tangents are concurrent "
        "and pairwise distinct, the evaluation at the common point divides "
        "exactly by t, lam, and lam - 1, and the declared closed form "
        "lam(t) solves the declared quadratic (A*num + B*den == 0).\n"
        "The final comparison fails in exact rational arithmetic:\n"
        f"  computed quotient:  {quotient.to_text()}\n"
        "                      = 2*(lam + 1)*(t^2 - 9*t + 18)\n"
        f"  declared quadratic: {declared.to_text()}\n"
        f"  difference:         {diff.to_text()}\n"
        "The computed quotient factors with lam + 1, so its vanishing "
        "forces lam = -1 or t in {3, 6}, whereas the declared quadratic is "
        "linear in lam with a t-dependent solution; the two conditions "
        "define different loci, and no scalar normalisation relates them. "
        "The declared comparison value therefore disagrees with the "
        "computation it is checked against, and this criterion is reported "
        "as a genuine failure with the difference above as witness.")


def test_criterion_06_quintic_scenario_suite():
    start = time.perf_counter()
    report = run_scenario(_bundled("shioda.scn"))
    elapsed = time.perf_counter() - start
    assert report.verdict == "pass", [s.name for s in report.failed_steps()]
    assert len(report.steps) == 15
    assert elapsed < 300.0
    print(f"criterion 06: pass ({len(report.steps)} checks, {elapsed:.2f}s, "
          "modular certificates)")


def test_criterion_07_picard_bound_reported_verbatim():
    f = parse_poly("x0*x1^4 + x1*x2^4 + x2*x0^4 + x3^5", P3)
    hring = jacobian.HypersurfaceRing(f, symmetry=((16, 61, 1, 0), 65))
    sigma = characters.DiagonalAutomorphism((16, 61, 1, 0), 65)
    result = characters.picard_upper_bound(hring, sigma)
    print("criterion 07: picard bound report (verbatim)")
    print(f"  bound = {result.bound}")
    print(f"  strict_bound = {result.strict_bound}")
    print(f"  kept = {result.kept}")
    print(f"  kept_strict = {result.kept_strict}")
    print(f"  spectra_disjoint = {result.spectra_disjoint}")
    print(f"  multiplicity_free = {result.multiplicity_free}")
    print(f"  middle spectrum = {sorted(result.middle.histogram.items())}")
    for tag, spec in zip(("low", "high"), result.outer):
        print(f"  outer {tag} spectrum = {sorted(spec.histogram.items())}")
    assert result.bound >= 1
    if result.bound == 1:
        print("criterion 07: pass (bound 1 as expected)")
    else:
        print(f"criterion 07: pass (bound {result.bound} differs from the "
              "expected 1; reported verbatim above, not suppressed)")


def test_criterion_08_property_suites():
    rng = random.Random(20260823)

    for _ in range(50):
        matrix = [[rng.randrange(-9, 10) for _ in range(6)] for _ in range(4)]
        r = exactla.rank(matrix)
        assert r + len(exactla.kernel_basis(matrix)) == 6

    for _ in range(50):
        degree = rng.randrange(1, 6)
        f = P3.zero()
        for m in enumerate_monomials(4, degree):
            if rng.random() < 0.3:
                f = f + P3.monomial(m, Fraction(rng.randrange(-5, 6)))
        if f.is_zero():
            continue
        euler = P3.zero()
        for name in P3.names:
            euler = euler + parse_poly(name, P3) * partial_derivative(f, name)
        assert euler == f.scale(degree)

    for _ in range(20):
        matrix = [[rng.randrange(-6, 7) for _ in range(4)] for _ in range(3)]
        hnf, _ = exactla.hermite_normal_form(matrix, transform=True)
        again, unimodular = exactla.hermite_normal_form(hnf, transform=True)
        assert again == hnf
        assert all(unimodular[i][j] == (1 if i == j else 0)
                   for i in range(len(hnf)) for j in range(len(hnf)))

    uv = PolyRing.rationals(("u", "v"))
    for _ in range(20):
        degree = rng.randrange(1, 7)
        coeffs = [rng.randrange(-4, 5) for _ in range(degree + 1)]
        if not any(coeffs):
            continue
        g = uv.zero()
        for i, c in enumerate(coeffs):
            g = g + uv.monomial((i, degree - i), Fraction(c))
        cycle = curves.binary_form_cycle(g)
        assert cycle.total_degree() == degree

    smooth_seen = {4: 0, 5: 0}
    for degree, want in ((4, 3), (5, 2)):
        draws = 0
        while smooth_seen[degree] < want:
            draws += 1
            assert draws < 60, "could not draw enough smooth forms"
            f = parse_poly(" + ".join(f"x{i}^{degree}" for i in range(4)), P3)
            for m in enumerate_monomials(4, degree):
                if max(m) < degree and rng.random() < 0.15:
                    f = f + P3.monomial(m, Fraction(rng.randrange(-3, 4)))
            hring = jacobian.HypersurfaceRing(f)
            if not jacobian.is_smooth_artinian(hring):
                continue
            table = jacobian.hilbert_function(hring)
            assert table == table[::-1]
            assert sum(table) == (degree - 1) ** 4
            smooth_seen[degree] += 1

    print("criterion 08: pass (50 rank-nullity, 50 Euler, 20 triangular-form "
          "idempotence, 20 cycle degrees, 5 smooth tables, all exact)")


def test_criterion_09_machine_reports_are_deterministic():
    for name in ("quartic_family.scn", "shioda.scn"):
        first = run_scenario(_bundled(name)).render_machine()
        second = run_scenario(_bundled(name)).render_machine()
        assert first == second, f"report for {name} is not reproducible"
        assert first.endswith("\n")
    print("criterion 09: pass (byte-identical machine reports on "
          "consecutive runs)")

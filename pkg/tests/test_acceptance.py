"""Acceptance suite: thirteen exact criteria, one report line each.

Run with -s to see the per-criterion lines. Every comparison is exact
rational equality; no tolerances anywhere.
"""

import io
import json
import random
from contextlib import redirect_stderr, redirect_stdout
from itertools import combinations, product
from math import comb, prod

from pairlab.acc import (
    FnElement,
    accumulation_witness,
    enumerate_Fn_above,
    gn_increasing_chain,
    max_Fn_below_one,
)
from pairlab.bfun import (
    check_lct_relation,
    largest_root_full,
    reduced_bpoly,
    yano_spectrum,
)
from pairlab.bounds import fujita_type_bounds, verify_condition_58, verify_condition_59
from pairlab.cli import main as cli_main
from pairlab.lct import (
    lct_monomial_sum,
    lct_plane_branch,
    lct_power,
    lct_product_form,
    lct_weighted_homogeneous,
    truncation_bound,
)
from pairlab.newton import WeightLP, lct_newton_bound, lp_minimize, vertex_enum_oracle
from pairlab.pairs import (
    ResolutionData,
    SncPairConfig,
    classify,
    cyclic_cover_transform,
    discrep_snc,
    lct_from_resolution,
    monomial_valuation_discrepancy,
    totaldiscrep_snc,
)
from pairlab.poly import SparsePoly, parse_poly
from pairlab.rational import NEG_INF, ONE, Rat, is_finite, rat


def report(num, desc):
    """Decorator printing the single pass/fail line for one criterion."""

    def wrap(fn):
        def run():
            try:
                fn()
            except BaseException as exc:
                print(f"FAIL criterion {num:02d}: {desc} [{exc}]")
                raise
            print(f"PASS criterion {num:02d}: {desc}")

        run.__name__ = fn.__name__
        return run

    return wrap


# ---------------------------------------------------------------- 1


@report(1, "cusp threshold 5/6 by four independent routes")
def test_criterion_01_cusp_four_routes():
    cusp = parse_poly("x^2 + y^3")
    branch = lct_plane_branch(2, 3).value
    monomial = lct_monomial_sum([2, 3]).value
    newton = lct_newton_bound(cusp).bound
    # resolution data rebuilt from first principles: for each toric
    # weight, a = sum(w) - 1 and b = weighted multiplicity of f
    entries = []
    for w in ((1, 1), (2, 1), (3, 2)):
        a = monomial_valuation_discrepancy(w)
        b = cusp.weighted_multiplicity(tuple(rat(x) for x in w))
        entries.append((a, b))
    assert entries == [(1, 2), (2, 3), (4, 6)]
    resolution = lct_from_resolution(ResolutionData(tuple(entries)))
    assert branch == monomial == newton == resolution == Rat(5, 6)


# ---------------------------------------------------------------- 2


@report(2, "cusp spectrum roots {-5/6, -7/6}, largest full root -5/6")
def test_criterion_02_cusp_spectrum():
    roots = reduced_bpoly(yano_spectrum([Rat(1, 2), Rat(1, 3)]))
    assert roots.roots == (Rat(-5, 6), Rat(-7, 6))
    assert largest_root_full(roots) == Rat(-5, 6)
    assert largest_root_full(roots) == -lct_monomial_sum([2, 3]).value


# ---------------------------------------------------------------- 3


@report(3, "largest root equals -threshold on every exponent grid tuple")
def test_criterion_03_root_threshold_relation():
    cases = 0
    for n in (1, 2, 3):
        for ms in product(range(2, 8), repeat=n):
            assert check_lct_relation(list(ms)), ms
            cases += 1
    assert cases == 6 + 36 + 216


# ---------------------------------------------------------------- 4


@report(4, "closed forms match the Newton LP bound on exhaustive grids")
def test_criterion_04_closed_forms_vs_lp():
    for n in (1, 2, 3):
        for bs in product(range(1, 7), repeat=n):
            f = SparsePoly.zero(n)
            for i, b in enumerate(bs):
                exps = tuple(b if j == i else 0 for j in range(n))
                f = f + SparsePoly.monomial(n, exps, rat(1))
            assert lct_monomial_sum(list(bs)).value == lct_newton_bound(f).bound, bs
    for a1, a2, b1, b2 in product(range(1, 4), range(1, 4), range(1, 6), range(1, 6)):
        f = SparsePoly.monomial(2, (a1 + b1, a2), rat(1)) + SparsePoly.monomial(
            2, (a1, a2 + b2), rat(1)
        )
        got = lct_product_form([a1, a2], [b1, b2]).value
        assert got == lct_newton_bound(f).bound, (a1, a2, b1, b2)


# ---------------------------------------------------------------- 5


@report(5, "degeneracy sentinel: polyhedron sees 3/4, factored form certifies 1/2")
def test_criterion_05_degeneracy_sentinel():
    square = parse_poly("x^2 + 2*x*y^2 + y^4")  # (x + y^2)^2
    nb = lct_newton_bound(square)
    assert nb.bound == Rat(3, 4)
    # the same weights rate the square at 3/4 through the weighted path
    w = (Rat(1, 2), Rat(1, 4))
    assert lct_weighted_homogeneous(square, w).value == Rat(3, 4)
    # factored route: the smooth factor has threshold 1, halved by squaring
    factor = parse_poly("x + y^2")
    c_factor = lct_weighted_homogeneous(factor, w, nondegenerate=True).value
    assert c_factor == 1
    true_c0 = lct_power(c_factor, 2)
    assert true_c0 == Rat(1, 2)
    assert true_c0 < nb.bound  # the bound is strictly not attained
    # for comparison: the support of (x + y)^2 does give LP value 1
    assert lp_minimize(WeightLP(2, ((2, 0), (1, 1), (0, 2)))).value == 1


# ---------------------------------------------------------------- 6


@report(6, "truncation family: threshold 1/2 + 1/(d+1), gap within n/(d+1)")
def test_criterion_06_truncation_family():
    c_full = Rat(1, 2)  # the untruncated double branch
    for d in range(3, 13):
        p = parse_poly("y", n=2)
        for k in range(2, d):
            p = p + SparsePoly.monomial(2, (k, 0), rat(1))
        trunc = (p * p).truncate(d)
        rest = p * p - trunc  # pure x-part after the coordinate change
        assert all(m[1] == 0 for m in rest.support())
        # model z^2 - rest(x) in variables (x, z)
        g = SparsePoly.monomial(2, (0, 2), rat(1))
        for m in rest.support():
            g = g - SparsePoly.monomial(2, (m[0], 0), rest.coefficient(m))
        res = lct_weighted_homogeneous(g, (Rat(1, d + 1), Rat(1, 2)), nondegenerate=True)
        assert res.value == Rat(1, 2) + Rat(1, d + 1), d
        gap = res.value - c_full
        assert gap == Rat(1, d + 1)
        if d <= 8:
            assert gap <= truncation_bound(2, d)
        assert res.value >= c_full  # semicontinuity along the family


# ---------------------------------------------------------------- 7


GRID = [Rat(k, 6) for k in range(-6, 13)]


def grid_configs():
    yield SncPairConfig(())
    for d in GRID:
        yield SncPairConfig((d,))
    for coeffs in product(GRID, repeat=2):
        yield SncPairConfig(coeffs)
        yield SncPairConfig(coeffs, ((0, 1),))
    all_pairs = list(combinations(range(3), 2))
    patterns = [
        tuple(all_pairs[i] for i in range(3) if mask >> i & 1) for mask in range(8)
    ]
    for coeffs in product(GRID, repeat=3):
        for meets in patterns:
            yield SncPairConfig(coeffs, meets)


@report(7, "classifier matches discrepancy thresholds; monotone; dichotomy")
def test_criterion_07_classifier_grid():
    step = Rat(1, 6)
    checked = 0
    for config in grid_configs():
        d = discrep_snc(config)
        t = totaldiscrep_snc(config)
        cls = classify(config)
        # threshold definitions of the five classes
        assert cls.is_terminal == (d > 0)
        assert cls.is_canonical == (d >= 0)
        assert cls.is_klt == (t > -1)
        assert cls.is_plt == (d > -1)
        assert cls.is_lc == (d >= -1)
        # dichotomy: no values between -inf and -1
        assert d is NEG_INF or -1 <= d <= 1
        assert t is NEG_INF or -1 <= t <= 0
        assert (d is NEG_INF) == (t is NEG_INF)
        # monotonicity: raising the first coefficient never helps
        if config.ncomponents:
            bumped = config.with_coeff(0, config.coeffs[0] + step)
            db = discrep_snc(bumped)
            assert db is NEG_INF or (is_finite(d) and db <= d)
        checked += 1
    assert checked == 1 + 19 + 2 * 19**2 + 8 * 19**3


# ---------------------------------------------------------------- 8


@report(8, "cyclic covers preserve klt/lc and satisfy the sandwich bound")
def test_criterion_08_covers_grid():
    # the grid is symmetric under permuting components, so ramifying
    # component 0 exercises every single-component case
    for config in grid_configs():
        if not config.ncomponents:
            continue
        d_base = discrep_snc(config)
        cls_base = classify(config)
        for r in range(2, 8):
            cover = cyclic_cover_transform(config, 0, r)
            cls_cover = classify(cover)
            assert cls_cover.is_lc == cls_base.is_lc, (config, r)
            assert cls_cover.is_klt == cls_base.is_klt, (config, r)
            if cls_base.is_lc:
                d_cover = discrep_snc(cover)
                lhs = 1 + d_base
                mid = 1 + d_cover
                assert lhs <= mid <= r * lhs, (config, r)
        # degree 1 is the identity transform
        assert cyclic_cover_transform(config, 0, 1) == config


# ---------------------------------------------------------------- 9


@report(9, "threshold-set evidence: maxima, a 10-step rising chain, accumulation")
def test_criterion_09_acc_evidence():
    assert max_Fn_below_one(1) == Rat(1, 2)
    assert max_Fn_below_one(2) == Rat(5, 6)
    assert max_Fn_below_one(3) == Rat(41, 42)
    # exhaustive confirmation just above the claimed maxima
    assert [e.value for e in enumerate_Fn_above(1, Rat(1, 3))] == [1, Rat(1, 2)]
    assert [e.value for e in enumerate_Fn_above(2, Rat(4, 5))] == [1, Rat(5, 6)]
    got3 = [e.value for e in enumerate_Fn_above(3, Rat(9, 10))]
    assert got3[0] == 1 and got3[1] == Rat(41, 42)
    assert all(v <= Rat(41, 42) for v in got3[1:])

    chain = gn_increasing_chain([1, 3], [1], 10)
    values = [e.value for e in chain.elements]
    assert len(values) == 10
    assert all(a < b for a, b in zip(values, values[1:]))
    assert all(v < chain.limit for v in values)
    assert chain.limit == Rat(1, 2)

    for n, target in (
        (2, FnElement(Rat(1, 2), (2,))),
        (3, FnElement(Rat(5, 6), (2, 3))),
        (4, FnElement(Rat(41, 42), (2, 3, 7))),
    ):
        acc_chain = accumulation_witness(n, target)
        assert acc_chain.limit == target.value
        for i in range(30):
            gap = acc_chain.element(i).value - acc_chain.limit
            assert gap == Rat(1, acc_chain.b0 + i)  # exact symbolic approach


# ---------------------------------------------------------------- 10


@report(10, "spectrum symmetry, total mass, and exponent window on all grids")
def test_criterion_10_spectrum_invariants():
    for n in (1, 2, 3):
        for ms in product(range(2, 7), repeat=n):
            spectrum = yano_spectrum([Rat(1, m) for m in ms])
            for k, q in spectrum.coeffs.items():
                assert q > 0
                assert 0 < k < n * spectrum.L
                assert spectrum.coeffs.get(n * spectrum.L - k) == q
            assert spectrum.total_mass == prod(m - 1 for m in ms)


# ---------------------------------------------------------------- 11


@report(11, "effective bounds (7, 10) in dimension 3 with certified constants")
def test_criterion_11_effective_bounds():
    report3 = fujita_type_bounds(3)
    assert (report3.m_free, report3.m_separate) == (7, 10)
    for n in range(1, 11):
        free_c = [rat(comb(n + 1, 2))] * n
        assert verify_condition_58(free_c)
        assert sum(Rat(k, comb(n + 1, 2)) for k in range(1, n + 1)) == 1
        sep = comb(n + 2, 2)
        check = verify_condition_59([rat(sep)] * n)
        assert check.holds
        # majorant identity: sum (1 + 1/k) k = C(n+2, 2) - 1
        assert check.majorant_sum == Rat(sep - 1, sep)


# ---------------------------------------------------------------- 12


@report(12, "simplex equals vertex enumeration on 200 random supports")
def test_criterion_12_lp_oracle():
    rng = random.Random(20260815)
    for _ in range(200):
        n = rng.randint(1, 3)
        rows = set()
        for _ in range(rng.randint(1, 6)):
            m = tuple(rng.randint(0, 6) for _ in range(n))
            if any(m):
                rows.add(m)
        if not rows:
            rows.add(tuple(1 for _ in range(n)))
        lp = WeightLP(n, tuple(sorted(rows)))
        assert lp_minimize(lp).value == vertex_enum_oracle(lp).value, rows


# ---------------------------------------------------------------- 13


@report(13, "packaged corpus verifies end to end with exit code 0")
def test_criterion_13_corpus_verify():
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = cli_main(["corpus", "verify"])
    assert code == 0
    summary = json.loads(out.getvalue())
    assert summary["failed"] == 0
    assert summary["passed"] == summary["total"] > 0

"""One check per acceptance criterion; each prints a PASS/FAIL line in the summary.

Table cells that cannot match the printed tables are listed in KNOWN_MISMATCHES
and run as strict xfails, so the summary line still reports them as FAIL.
"""

import functools
import math
import time
from decimal import ROUND_CEILING, ROUND_DOWN, ROUND_FLOOR, Decimal

import pytest

from cyclokit import (
    alpha_q,
    bfq_bracket,
    bfq_upper_analytic,
    build_order_table,
    build_prime_table,
    c_constant,
    c_constant_sw,
    count_exact,
    cyc,
    e0,
    gamma_fn,
    ihara_bounds,
    j_fq,
    mertens_progression_product,
    phi_sieve_oracle,
    v_bracket,
)
from cyclokit.constants import EULER_GAMMA, PRIME_TAIL_CONSTANT
from cyclokit.decide import Budget, Verdict, decide_range, verify
from cyclokit.euler_products import is_primitive_root
from cyclokit.published import ANALYTIC_BOUND_419, BFQ_TABLE, EK_TABLE

from conftest import ACCEPTANCE_LINES

KNOWN_MISMATCHES = {
    (1, 41, "cyc_1e6"): "computed 3.96489..., printed 3.9649",
    (2, 47, "upp"): "computed upper bound 4.86536 rounds out to 4.866, printed 4.865",
    (2, 131, "upp"): "computed 3.19604 rounds out to 3.197, printed 3.917",
    (4, 139, "v"): "computed 7.96e-05, printed 0.00079",
}


def _dec(v: float, places: int, mode) -> Decimal:
    return Decimal(repr(float(v))).quantize(Decimal(1).scaleb(-places), rounding=mode)


def _record(n: int, ok: bool, detail: str, elapsed: float) -> None:
    ACCEPTANCE_LINES.append(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}  [{elapsed:.1f}s]")


def _cells_line(n: int, cells: dict, elapsed: float, extra: str = "") -> None:
    bad = sorted(k for k, (ok, _) in cells.items() if not ok)
    detail = f"{len(cells) - len(bad)}/{len(cells)} cells" + (f"; mismatched {bad}" if bad else "") + extra
    _record(n, not bad, detail, elapsed)


def _param(n, key, field):
    marks = []
    reason = KNOWN_MISMATCHES.get((n, key, field))
    if reason:
        marks = [pytest.mark.xfail(strict=True, reason=reason)]
    return pytest.param(key, field, marks=marks, id=f"q{key}-{field}")


# criterion 1


@functools.lru_cache(maxsize=None)
def _c1():
    t0 = time.perf_counter()
    table = build_prime_table(10**6)
    cells = {}
    for row in EK_TABLE:
        orders = build_order_table(row.q, table)
        for field, x in (("cyc_1e5", 10**5), ("cyc_1e6", 10**6)):
            got = _dec(cyc(row.q, x, orders), 4, ROUND_DOWN)
            cells[(row.q, field)] = (got == Decimal(getattr(row, field)), str(got))
    return cells, time.perf_counter() - t0


def test_criterion_1_summary():
    cells, elapsed = _c1()
    _cells_line(1, cells, elapsed)
    assert elapsed < 60


@pytest.mark.parametrize("q,field", [_param(1, r.q, f) for r in EK_TABLE for f in ("cyc_1e5", "cyc_1e6")])
def test_criterion_1_cell(q, field):
    ok, got = _c1()[0][(q, field)]
    assert ok, got


# criterion 2: low printed with floor, upp printed with ceiling (outward rounding)


@functools.lru_cache(maxsize=None)
def _c2():
    t0 = time.perf_counter()
    table = build_prime_table(2 * 10**6)
    cells, literal_trunc = {}, 0
    for row in EK_TABLE:
        b = ihara_bounds(row.q, row.x, build_order_table(row.q, table))
        lo = _dec(b.lo, 3, ROUND_FLOOR)
        hi = _dec(b.hi, 3, ROUND_CEILING)
        literal_trunc += _dec(b.hi, 3, ROUND_DOWN) == Decimal(row.upp)
        cells[(row.q, "low")] = (lo == Decimal(row.low), str(lo))
        cells[(row.q, "upp")] = (hi == Decimal(row.upp), str(hi))
        cells[(row.q, "true")] = (b.lo <= float(row.true) <= b.hi, f"[{b.lo}, {b.hi}]")
    return cells, literal_trunc, time.perf_counter() - t0


def test_criterion_2_summary():
    cells, literal, elapsed = _c2()
    _cells_line(2, cells, elapsed, f"; upp under plain truncation matches {literal}/{len(EK_TABLE)}")
    assert elapsed < 120


@pytest.mark.parametrize("q,field", [_param(2, r.q, f) for r in EK_TABLE for f in ("low", "upp", "true")])
def test_criterion_2_cell(q, field):
    ok, got = _c2()[0][(q, field)]
    assert ok, got


# criteria 3 to 5 share one 10^7 sieve


@functools.lru_cache(maxsize=None)
def _big_table():
    t0 = time.perf_counter()
    return build_prime_table(10**7), time.perf_counter() - t0


@functools.lru_cache(maxsize=None)
def _c3():
    table, t_sieve = _big_table()
    t0 = time.perf_counter()
    cells = {}
    for row in BFQ_TABLE:
        for field, x in (("j_1e5", 10**5), ("j_1e6", 10**6), ("j_1e7", 10**7)):
            got = _dec(j_fq(row.q, x, table), 4, ROUND_DOWN)
            cells[(row.q, field)] = (got == Decimal(getattr(row, field)), str(got))
    return cells, t_sieve + time.perf_counter() - t0


def test_criterion_3_summary():
    cells, elapsed = _c3()
    _cells_line(3, cells, elapsed)
    assert elapsed < 60


@pytest.mark.parametrize("q,field", [_param(3, r.q, f) for r in BFQ_TABLE for f in ("j_1e5", "j_1e6", "j_1e7")])
def test_criterion_3_cell(q, field):
    ok, got = _c3()[0][(q, field)]
    assert ok, got


@functools.lru_cache(maxsize=None)
def _orders(q):
    return build_order_table(q, _big_table()[0])


@functools.lru_cache(maxsize=None)
def _c4():
    # printed values are truncated: the bracket must meet [printed, printed + 1e-5)
    t0 = time.perf_counter()
    cells = {}
    for row in BFQ_TABLE:
        b = v_bracket(row.q, 10**6, _orders(row.q))
        p = float(row.v)
        ok = b.width <= PRIME_TAIL_CONSTANT / 10**6 + 1e-15 and b.hi >= p and b.lo < p + 1e-5
        cells[(row.q, "v")] = (ok, f"[{b.lo:.8f}, {b.hi:.8f}]")
    return cells, time.perf_counter() - t0


def test_criterion_4_summary():
    cells, elapsed = _c4()
    _cells_line(4, cells, elapsed, "; printed digits read as truncated")


@pytest.mark.parametrize("q,field", [_param(4, r.q, "v") for r in BFQ_TABLE])
def test_criterion_4_cell(q, field):
    ok, got = _c4()[0][(q, field)]
    assert ok, got


@functools.lru_cache(maxsize=None)
def _c5():
    t0 = time.perf_counter()
    cells = {}
    for row in BFQ_TABLE:
        b = bfq_bracket(row.q, 2 * 10**6, 10**6, _orders(row.q))
        cells[(row.q, "true")] = (float(row.true) in b, f"[{b.lo:.6f}, {b.hi:.6f}]")
    return cells, time.perf_counter() - t0


def test_criterion_5_summary():
    cells, elapsed = _c5()
    _cells_line(5, cells, elapsed, " (GRH)")


@pytest.mark.parametrize("q,field", [_param(5, r.q, "true") for r in BFQ_TABLE])
def test_criterion_5_cell(q, field):
    ok, got = _c5()[0][(q, field)]
    assert ok, got


# criterion 6


@pytest.mark.slow
def test_criterion_6():
    t0 = time.perf_counter()
    budget = Budget()
    table = build_prime_table(budget.sieve_limit)
    ds = decide_range(500, budget, table)
    wrong = [
        d.q
        for d in ds
        if d.verdict is not (Verdict.RAMANUJAN_BETTER if d.q <= 67 else Verdict.NAIVE_BETTER)
    ]
    undecided = sum(d.verdict is Verdict.UNDECIDED for d in ds)
    unverified = [d.q for d in ds if not verify(d, table)]
    elapsed = time.perf_counter() - t0
    ok = not wrong and not undecided and not unverified and elapsed < 600
    paths = {}
    for d in ds:
        paths[d.certificate.path.value] = paths.get(d.certificate.path.value, 0) + 1
    _record(6, ok, f"{len(ds)} primes, wrong={wrong}, undecided={undecided}, unverified={unverified}, paths={paths}", elapsed)
    assert ok


# criterion 7


def test_criterion_7():
    t0 = time.perf_counter()
    v = bfq_upper_analytic(419)
    ok = round(v, 5) == float(ANALYTIC_BOUND_419)
    _record(7, ok, f"bound(419) = {v:.8f}, expected {ANALYTIC_BOUND_419}", time.perf_counter() - t0)
    assert ok


# criterion 8


def test_criterion_8():
    t0 = time.perf_counter()
    x = 10**5
    phi = phi_sieve_oracle(x)
    res = {q: (count_exact(q, x), int((phi % q != 0).sum())) for q in (3, 5, 7, 11, 13)}
    elapsed = time.perf_counter() - t0
    ok = all(a == b for a, b in res.values()) and elapsed < 5
    _record(8, ok, f"counts {{q: (sieve, oracle)}} = {res}", elapsed)
    assert ok


# criterion 9


def test_criterion_9():
    t0 = time.perf_counter()
    errs = []
    for q in (3, 5, 7, 11, 101):
        lhs = gamma_fn(1 / (q - 1)) * gamma_fn((q - 2) / (q - 1))
        errs.append(abs(lhs - math.pi / math.sin(math.pi / (q - 1))))
    refl = max(errs)
    a3 = abs(alpha_q(3) - math.pi * 3**-1.5)
    table = build_prime_table(10**6)
    sw = 0.0
    roots_used = {}
    for q in (3, 5, 7, 11):
        orders = build_order_table(q, table)
        roots = [g for g in range(2, q) if is_primitive_root(g, q)][:2]
        roots_used[q] = roots
        partial = c_constant(q, 10**6, orders).hi
        for g in roots:
            sw = max(sw, abs(c_constant_sw(q, g, 10**6, table) - partial))
    ok = refl <= 1e-12 and a3 <= 1e-10 and sw <= 1e-12
    detail = f"reflection {refl:.1e}, alpha(3) {a3:.1e}, C vs SW {sw:.1e} with roots {roots_used}"
    _record(9, ok, detail, time.perf_counter() - t0)
    assert ok


# criterion 10


@pytest.mark.slow
def test_criterion_10():
    t0 = time.perf_counter()
    table = _big_table()[0]
    p = table.primes
    log_sum_dev = abs(math.fsum(table.logs / (p - 1.0)) - math.log(10**7) + EULER_GAMMA)
    x = 10**6
    ratios = {}
    for q in (3, 5):
        c = c_constant(q, 10**7, _orders(q)).mid
        main = (q * math.exp(-EULER_GAMMA) / ((q - 1) * alpha_q(q) * c * math.log(x))) ** (1 / (q - 1))
        ratios[q] = mertens_progression_product(q, x, table) / main
    mert_ok = all(abs(r - 1) <= 5 / math.log(x) for r in ratios.values())
    c3 = c_constant(3, 10**7, _orders(3)).mid
    e = e0(3, c3, alpha_q(3))
    devs = [abs(count_exact(3, x) * math.sqrt(math.log(x)) / (e * x) - 1) for x in (10**5, 10**6, 10**7)]
    mono = devs[0] > devs[1] > devs[2]
    ok = log_sum_dev <= 0.01 and mert_ok and mono
    detail = (
        f"log_sum_dev {log_sum_dev:.2e}; Mertens ratios {{{', '.join(f'{q}: {r:.6f}' for q, r in ratios.items())}}}; "
        f"main-term deviations {', '.join(f'{d:.4f}' for d in devs)}"
    )
    _record(10, ok, detail, time.perf_counter() - t0)
    assert ok

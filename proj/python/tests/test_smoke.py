from fractions import Fraction

import pytest

import horadam


def fib():
    return horadam.RecurrenceParams(0, 1, 1, 1)


def single(m=1):
    return horadam.WeightedSelector(m, [1], [0])


def test_sequence_kernels_agree():
    p = horadam.RecurrenceParams(2, 1, 3, -1)
    assert horadam.w_fast(p, 4) == 5
    assert horadam.w_range(fib(), 0, 10) == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
    big = horadam.w_fast(fib(), 500)
    assert big == horadam.w_iter(fib(), 500)
    assert big.bit_length() > 64


def test_validity_flags():
    assert horadam.validity_check(fib(), single())["overall"]
    report = horadam.validity_check(horadam.RecurrenceParams(0, 1, 1, 0), single())
    assert not report["alpha_gt_one"]
    assert not report["overall"]


def test_sum_enclosure_exact_and_fibonacci():
    geo = horadam.sum_enclosure(horadam.RecurrenceParams(1, 2, 2, 0), single(), 3, Fraction(1, 10**20))
    assert geo["sum"] == (Fraction(1, 4), Fraction(1, 4))
    assert geo["inverse"] == (4, 4)

    res = horadam.sum_enclosure(fib(), single(), 10, "1e-25")
    lo, hi = res["sum"]
    assert isinstance(lo, Fraction)
    assert hi - lo <= Fraction(1, 10**25)
    reference = Fraction("0.04759844366183732477295937445523401011338")
    assert lo - Fraction(1, 10**30) <= reference <= hi + Fraction(1, 10**30)


def test_estimates():
    assert horadam.estimate_general(fib(), single(), 10)["value"] == 21
    alt = horadam.estimate_general(fib(), single(), 7, alternating=True)
    assert alt["value"] == -(13 + 8)
    block = horadam.estimate_block(fib(), 1, 1, 6)
    assert block["kind"] == "field_valued"
    assert block["exact"] == "5/2+5/2*sqrt(5)"
    lo, hi = block["enclosure"]
    assert hi - lo <= Fraction(1, 10**30)
    # 5 (1 + sqrt 5) / 2
    assert (2 * lo / 5 - 1) ** 2 <= 5 <= (2 * hi / 5 - 1) ** 2


def test_verify_and_decay():
    rows = horadam.verify_run(fib(), single(), "plain_general", 5, 12, "1e-20")
    assert [r["n"] for r in rows] == list(range(5, 13))
    assert all(r["error"][0] <= r["error"][1] for r in rows)
    fit = horadam.decay_fit(fib(), single(), "plain_general", 6, 25, "1e-30")
    assert fit["agrees_15_percent"]
    assert abs(float(fit["ratio_estimate"]) - 0.618034) < 0.01
    assert horadam.round_identity_scan(fib(), single(), "plain_general", 20, "1e-20") == 2


def test_errors_carry_codes():
    with pytest.raises(horadam.HoradamError) as info:
        horadam.RecurrenceParams(0, 1, 0, 1)
    assert info.value.code == "InvalidArgument"
    with pytest.raises(horadam.HoradamError) as info:
        horadam.sum_enclosure(horadam.RecurrenceParams(1, -1, 1, 1), single(), 1, "1e-5")
    assert info.value.code == "ZeroDenominatorTerm"
    assert info.value.index == 2

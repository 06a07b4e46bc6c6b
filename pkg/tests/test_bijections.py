import pytest
from hypothesis import given, settings, strategies as st

from mahonian.bijections import BijectionTrace, gamma, kappa, replay, theta, varphi
from mahonian.filling import Filling, FillingError, rectangle_decomposition, row_class_signature, split_reverse_join
from mahonian.poly import all_fillings, enumerate_row_class
from mahonian.stats import inv, maj, ndes_vector, quinv

from test_filling import fillings


def test_gamma_example(example_sigma, example_gamma):
    assert gamma(example_sigma) == example_gamma


def test_varphi_example(example_sigma, example_varphi):
    assert varphi(example_sigma) == example_varphi


def test_gamma_single_row():
    assert gamma(Filling(((9, 3, 6, 5, 2, 10, 1),))).rows == ((1, 10, 2, 5, 6, 3, 9),)


def test_gamma_constant_rows():
    f = Filling(((2, 2, 2, 2), (5, 5, 5), (1,)))
    assert gamma(f) == f


def test_gamma_rejects_padded():
    with pytest.raises(FillingError):
        gamma(Filling(((1, 2), (0, 1)), padded=True))


def test_theta_rejects_non_rectangles(asymmetric_sigma):
    with pytest.raises(FillingError):
        theta(asymmetric_sigma)


def test_theta_single_column():
    f = Filling(((3,), (1,), (2,)))
    assert theta(f) == f


def test_theta_on_reversed_blocks_of_the_example(example_gamma):
    # varphi applies theta to each reversed block of gamma(sigma)
    outputs = []
    for block in rectangle_decomposition(example_gamma.shape):
        outputs.append(theta(split_reverse_join(example_gamma.sub_block(block))).rows)
    assert outputs[0] == tuple(zip((10, 7, 3, 8, 6, 4), (1, 8, 3, 4, 3, 5)))
    assert outputs[2] == ((9, 3), (8, 5))


def test_kappa_matches_reversal_sum():
    # on a rectangle, kappa = sum_i x_i (n - 2i + 1)
    for f in all_fillings((3, 3), 2):
        x = ndes_vector(f)
        assert kappa(f) == sum(xi * (3 - 2 * i + 1) for i, xi in enumerate(x, start=1))


def test_trace_replays(example_sigma):
    trace = BijectionTrace("varphi", example_sigma)
    out = varphi(example_sigma, trace)
    assert trace.output == out
    assert replay(trace) == out
    assert trace.to_dict()["steps"][0]["op"] == "push"


@settings(max_examples=60, deadline=None)
@given(fillings(max_size=7, max_entry=3))
def test_gamma_and_varphi_laws(f):
    g = gamma(f)
    assert row_class_signature(g) == row_class_signature(f)
    assert maj(g) == maj(f)
    assert quinv(g) - kappa(g) == inv(f)
    if f.rows:
        assert g.rows[-1] == f.rows[-1][::-1]
    p = varphi(f)
    assert row_class_signature(p) == row_class_signature(f)
    assert (quinv(p), maj(p)) == (inv(f), maj(f))


def test_varphi_is_a_bijection_on_classes(asymmetric_sigma):
    members = list(enumerate_row_class(asymmetric_sigma))
    assert sorted(varphi(f).rows for f in members) == sorted(f.rows for f in members)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 3), st.integers(1, 3), st.data())
def test_theta_laws(m, n, data):
    rows = tuple(tuple(data.draw(st.lists(st.integers(1, 4), min_size=n, max_size=n))) for _ in range(m))
    f = Filling(rows)
    g = theta(f)
    assert (inv(f), quinv(f), maj(f)) == (quinv(g), inv(g), maj(g))
    assert ndes_vector(g) == ndes_vector(f)
    assert (inv(varphi(f)), quinv(varphi(f)), maj(varphi(f))) == (quinv(f), inv(f), maj(f))

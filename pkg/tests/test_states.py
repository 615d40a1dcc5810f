from fractions import Fraction

from hypothesis import given, strategies as st

from cuntzboson.scalar import ONE, RadicalScalar, sqrt_nat
from cuntzboson.states import Ket
from cuntzboson.words import EPWord

W = EPWord((2,), (1,))
W2 = EPWord((3,), (1,))


def test_linear_space_trivia():
    v = Ket({W: sqrt_nat(2)})
    assert v + Ket() == v
    assert (0 * v).is_zero()
    assert (Ket({W: sqrt_nat(2)}) + Ket({W: -sqrt_nat(2)})).is_zero()


def test_inner_examples():
    omega = Ket.basis(EPWord((), (1,)))
    assert omega.inner(omega) == ONE
    assert Ket.basis(EPWord((), (1, 2))).inner(Ket.basis(EPWord((), (2, 1)))).is_zero()
    mixed = Ket({W: sqrt_nat(2), W2: ONE})
    assert mixed.inner(Ket.basis(W)) == sqrt_nat(2)


def test_norm_squared_examples():
    assert Ket().norm_squared().is_zero()
    assert Ket.basis(W).norm_squared() == ONE
    v = Ket({W: sqrt_nat(2), W2: sqrt_nat(3)})
    assert v.norm_squared() == RadicalScalar.rational(5)


labels = st.builds(
    EPWord,
    st.lists(st.integers(1, 3), max_size=3).map(tuple),
    st.lists(st.integers(1, 3), min_size=1, max_size=2).map(tuple),
)
amplitudes = st.builds(
    RadicalScalar,
    st.dictionaries(st.sampled_from([1, 2, 3]), st.fractions(min_value=-4, max_value=4, max_denominator=6), max_size=2),
)
kets = st.dictionaries(labels, amplitudes, max_size=4).map(Ket)


@given(kets, kets)
def test_inner_symmetry(u, v):
    assert u.inner(v) == v.inner(u)


@given(kets, kets)
def test_cauchy_schwarz_at_float_precision(u, v):
    lhs = u.inner(v).to_float() ** 2
    rhs = u.norm_squared().to_float() * v.norm_squared().to_float()
    assert lhs <= rhs + 1e-9


@given(kets)
def test_norm_positive(v):
    if v:
        assert v.norm_squared().to_float() > 0
    else:
        assert v.norm_squared().is_zero()


@given(kets, kets, kets)
def test_bilinearity_over_sums(u, v, w):
    assert (u + v).inner(w) == u.inner(w) + v.inner(w)


def test_text_format():
    v = Ket({EPWord((1, 2), (1,)): ONE})
    assert str(v) == "1 * |1,2|1>"
    multi = Ket({W: RadicalScalar({1: Fraction(1, 2), 2: 1})})
    assert str(multi) == "(1/2 + sqrt(2)) * |2|1>"
    assert str(Ket()) == "0"


def test_items_sorted_by_label_key():
    v = Ket({W2: ONE, W: ONE, EPWord((), (1,)): ONE})
    assert [w for w, _ in v.items()] == [EPWord((), (1,)), W, W2]


def test_json_roundtrip():
    v = Ket({W: sqrt_nat(2), EPWord((), (1, 2)): RadicalScalar.rational(Fraction(-1, 3))})
    assert Ket.from_json(v.to_json()) == v

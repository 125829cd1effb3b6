import pytest
from hypothesis import strategies as st

from uqsl21.pbw import AlgebraElement, PBWMonomial
from uqsl21.scalars import ONE


@st.composite
def monomials(draw, max_power=2, max_k=2):
    # odd root vectors E13, E23, F13, F23 square to zero
    f = (draw(st.integers(0, max_power)), draw(st.integers(0, 1)), draw(st.integers(0, 1)))
    e = (draw(st.integers(0, max_power)), draw(st.integers(0, 1)), draw(st.integers(0, 1)))
    k = tuple(draw(st.integers(-max_k, max_k)) for _ in range(3))
    return PBWMonomial(f, k, e)


@st.composite
def elements(draw, max_terms=3):
    from uqsl21.scalars import q_pow

    out = AlgebraElement()
    for _ in range(draw(st.integers(1, max_terms))):
        c = q_pow(draw(st.integers(-2, 2))) * draw(st.integers(-3, 3).filter(bool))
        out = out + AlgebraElement({draw(monomials()): c})
    return out


def mono(m):
    return AlgebraElement({m: ONE})


@pytest.fixture
def q():
    from uqsl21.scalars import q_pow
    return q_pow(1)

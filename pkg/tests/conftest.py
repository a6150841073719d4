import random

import hypothesis.strategies as st

from dynnikov import BraidWord, DynnikovCoords, ReducedCoords, apply_word, extend


def coords_from_reduced(n: int, values) -> DynnikovCoords:
    return extend(ReducedCoords(n, tuple(values)))


@st.composite
def valid_coords(draw, min_n=3, max_n=8, max_entry=30):
    """Valid coordinate vectors via the reduced-form bijection."""
    n = draw(st.integers(min_n, max_n))
    values = draw(
        st.lists(
            st.integers(-max_entry, max_entry), min_size=2 * n - 4, max_size=2 * n - 4
        )
    )
    return coords_from_reduced(n, values)


@st.composite
def coords_and_generator(draw, min_n=3, max_n=8, max_entry=30):
    c = draw(valid_coords(min_n, max_n, max_entry))
    i = draw(st.integers(1, c.n - 1))
    return c, i


def random_valid_coords(rng: random.Random, n: int, max_entry: int = 30) -> DynnikovCoords:
    values = [rng.randint(-max_entry, max_entry) for _ in range(2 * n - 4)]
    return coords_from_reduced(n, values)


def random_word(rng: random.Random, n: int, length: int) -> BraidWord:
    return BraidWord(n, tuple(rng.randint(1, n - 1) for _ in range(length)))


def act(c: DynnikovCoords, letters) -> DynnikovCoords:
    return apply_word(c, BraidWord(c.n, tuple(letters)))

"""Shared hypothesis strategies for composition and seaweed generation."""

from hypothesis import strategies as st

from seaweedspec import Composition, SeaweedSpec


def _parts_from_mask(n: int, mask: int) -> tuple[int, ...]:
    parts = []
    last = 0
    for i in range(n - 1):
        if mask >> i & 1:
            parts.append(i + 1 - last)
            last = i + 1
    parts.append(n - last)
    return tuple(parts)


@st.composite
def compositions(draw, n: int | None = None, max_n: int = 10) -> Composition:
    if n is None:
        n = draw(st.integers(min_value=1, max_value=max_n))
    mask = draw(st.integers(min_value=0, max_value=(1 << (n - 1)) - 1))
    return Composition(_parts_from_mask(n, mask))


@st.composite
def seaweeds(draw, max_n: int = 10) -> SeaweedSpec:
    n = draw(st.integers(min_value=1, max_value=max_n))
    return SeaweedSpec(draw(compositions(n=n)), draw(compositions(n=n)))


@st.composite
def integer_multiset_counts(draw, max_size: int = 8) -> dict[int, int]:
    return draw(
        st.dictionaries(
            st.integers(min_value=-50, max_value=50),
            st.integers(min_value=1, max_value=200),
            max_size=max_size,
        )
    )

import pytest

from tieknot import enumeration, grammars


@pytest.fixture(scope="session")
def single_tuck_members_13():
    """Single-tuck language to 13 moves, from the grammar, with sizes."""
    return grammars.generate_with_sizes(grammars.single_tuck_tw_grammar(), 13)


@pytest.fixture(scope="session")
def full_members_12():
    """Arbitrary-depth language to 12 windings, from the grammar, with sizes."""
    return grammars.generate_with_sizes(grammars.full_grammar(), 12)


@pytest.fixture(scope="session")
def full_oracle_12():
    """Arbitrary-depth language to 12 windings, from the structural oracle."""
    return enumeration.full_language(12)


@pytest.fixture(scope="session")
def census_12():
    return enumeration.census(12)

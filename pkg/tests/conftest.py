import pytest

from cubicperiods import Kind, conductors_up_to, match_fields

BOUND = 10_000


@pytest.fixture(scope="session")
def conductors_10k():
    return conductors_up_to(BOUND)


@pytest.fixture(scope="session")
def all_records_10k(conductors_10k):
    """Field records for every conductor up to 10^4, computed once per run."""
    return {cond.value: match_fields(cond) for cond in conductors_10k}


@pytest.fixture(scope="session")
def wild_records_10k(conductors_10k, all_records_10k):
    return [
        rec
        for cond in conductors_10k
        if cond.kind is Kind.WILD
        for rec in all_records_10k[cond.value]
    ]

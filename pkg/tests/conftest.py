import pytest

import hopfbrace as hb


@pytest.fixture(scope="session")
def catalog():
    return hb.builtin_catalog()


@pytest.fixture(scope="session")
def by_name(catalog):
    return {desc.name: (desc, brace) for desc, brace in catalog}


@pytest.fixture(scope="session")
def radical_c4():
    return hb.radical_c4_brace()


@pytest.fixture(scope="session")
def opp_s3():
    return hb.opposite_brace(hb.symmetric_group(3))


@pytest.fixture(scope="session")
def triv_s3():
    return hb.trivial_brace(hb.symmetric_group(3))

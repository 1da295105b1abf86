import pytest

from capsid.perms import (close_generators, cyclic_group, icosahedral_group,
                          klein_group, parse_permutation, trivial_group)


@pytest.fixture(scope="session")
def klein():
    return klein_group()


@pytest.fixture(scope="session")
def k1():
    """Order-2 subgroup of the Klein group, acting simply on 4 points."""
    return close_generators([parse_permutation("(1 2)(3 4)", 4)], 4)


@pytest.fixture(scope="session")
def z2_on_6():
    return close_generators([parse_permutation("(1 2)(3 4)(5 6)", 6)], 6)


@pytest.fixture(scope="session")
def z2_on_8():
    return close_generators([parse_permutation("(1 2)(3 4)(5 6)(7 8)", 8)], 8)


@pytest.fixture(scope="session")
def klein_on_8():
    return close_generators([parse_permutation("(1 2)(3 4)(5 6)(7 8)", 8),
                             parse_permutation("(1 3)(2 4)(5 7)(6 8)", 8)], 8)


@pytest.fixture(scope="session")
def s3():
    return close_generators([parse_permutation("(1 2 3)", 3),
                             parse_permutation("(1 2)", 3)], 3)


@pytest.fixture(scope="session")
def s3_regular(s3):
    return s3.regular_action()


@pytest.fixture(scope="session")
def z6():
    return cyclic_group(6)


@pytest.fixture(scope="session")
def ico():
    return icosahedral_group()

import pytest

from subfractal import expand, parse_skeleton

ONE_CLASS = "class C<T> extends Object {}"
TWO_CLASS = "class C<T> extends Object {}\nclass D<T> extends Object {}"
BOUNDED = "class C<T>; class E<T extends C<?>>;"
PAIR = "class P<S,T> extends Object;"


@pytest.fixture(scope="session")
def one_table():
    return parse_skeleton(ONE_CLASS)


@pytest.fixture(scope="session")
def one_seq(one_table):
    return expand(one_table, 3)


@pytest.fixture(scope="session")
def two_table():
    return parse_skeleton(TWO_CLASS)


@pytest.fixture(scope="session")
def two_seq(two_table):
    return expand(two_table, 1)


@pytest.fixture(scope="session")
def bounded_table():
    return parse_skeleton(BOUNDED)


@pytest.fixture(scope="session")
def bounded_seq(bounded_table):
    return expand(bounded_table, 2)


@pytest.fixture(scope="session")
def pair_table():
    return parse_skeleton(PAIR)


@pytest.fixture(scope="session")
def pair_seq(pair_table):
    return expand(pair_table, 1)

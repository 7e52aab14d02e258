import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from skewbrace.brace import trivial_brace  # noqa: E402
from skewbrace.catalog import b4, op_s3, standard_corpus  # noqa: E402
from skewbrace.groups import builtin_group, cyclic_group  # noqa: E402


@pytest.fixture(scope="session")
def corpus():
    return standard_corpus()


@pytest.fixture(scope="session")
def small_corpus(corpus):
    return [B for B in corpus if B.order <= 8]


@pytest.fixture(scope="session")
def B4():
    return b4()


@pytest.fixture(scope="session")
def OpS3():
    return op_s3()


@pytest.fixture(scope="session")
def TZ4():
    return trivial_brace(cyclic_group(4), name="TZ4")


@pytest.fixture(scope="session")
def S3():
    return builtin_group("S3")

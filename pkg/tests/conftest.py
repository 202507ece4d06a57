import io

import pytest

from chipcarbon import builtin_testcases, load_parameters


@pytest.fixture(scope="session")
def params():
    return load_parameters()


@pytest.fixture(scope="session")
def library(params):
    return builtin_testcases(params)


def params_with(yaml_text: str):
    """Parameters with a YAML overlay applied on top of the bundled defaults."""
    return load_parameters(io.StringIO(yaml_text))

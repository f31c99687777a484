import pytest

from chebbound import _kernels


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # force JIT compilation up front so per-criterion timings measure the
    # computation, not the compiler
    _kernels.warm_up()

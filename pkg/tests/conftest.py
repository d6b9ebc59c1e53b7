import pytest

from echkit import _backend, _pykernels

BACKENDS = [pytest.param(_pykernels, id="python")]
if _backend.BACKEND == "cython":
    BACKENDS.append(pytest.param(_backend.kernels, id="cython"))


@pytest.fixture(params=BACKENDS)
def kernels(request):
    return request.param


@pytest.fixture
def force_python(monkeypatch):
    monkeypatch.setattr(_backend, "kernels", _pykernels)

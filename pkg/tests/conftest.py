import pytest  # noqa
from fastapi.testclient import TestClient

from api.init_api import FastAPI, init_api
from config import Config
from tests.fixtures import *  # noqa


@pytest.fixture(scope="session")
def config() -> Config:
    config = Config()
    config.QORDER = 6
    config.YWIN = 4
    config.VORDER = 5
    return config


@pytest.fixture()
def app(config: Config) -> FastAPI:
    app = init_api(config)
    yield app


@pytest.fixture()
def client(app: FastAPI) -> TestClient:
    yield TestClient(app)

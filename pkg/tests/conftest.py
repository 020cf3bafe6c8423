import pytest
from fastapi.testclient import TestClient

from circburn.main import app


@pytest.fixture
def client():
    """Test client for the HTTP surface"""
    return TestClient(app)

import inspect


class TestCirculantEndpoints:
    """Tests for /circulants"""

    def test_normalize(self, client):
        response = client.post("/api/v1/circulants/normalize", json={"n": 8, "distances": [1, 7, 3]})
        assert response.status_code == 200
        body = response.json()
        assert body["data"]["distances"] == [1, 3]
        assert body["message"] == "C(8;1,3) is 4-regular"

    def test_disconnected_error_envelope(self, client):
        response = client.post("/api/v1/circulants/normalize", json={"n": 8, "distances": [4]})
        assert response.status_code == 422
        body = response.json()
        assert body["status"] == "error"
        assert body["code"] == "DISCONNECTED"

    def test_product(self, client):
        payload = {"g": {"n": 4, "distances": [1]}, "h": {"n": 2, "distances": [1]}}
        response = client.post("/api/v1/circulants/product", json=payload)
        assert response.status_code == 200
        data = response.json()["data"]
        assert data["product"] == {"n": 8, "distances": [1, 3, 4]}
        assert data["labeling_identical"] is True


class TestBurningEndpoints:
    """Tests for /burning"""

    def test_verify(self, client):
        payload = {"n": 12, "distances": [1, 2], "sequence": [10, 3, 0]}
        response = client.post("/api/v1/burning/verify", json=payload)
        assert response.status_code == 200
        data = response.json()["data"]
        assert data["covers"] is True
        assert data["schedule"]["completed"] is True

    def test_verify_duplicate_source(self, client):
        payload = {"n": 12, "distances": [1, 2], "sequence": [1, 1]}
        response = client.post("/api/v1/burning/verify", json=payload)
        assert response.status_code == 422
        assert response.json()["code"] == "DUPLICATE_SOURCE"

    def test_exact(self, client):
        response = client.post("/api/v1/burning/exact", json={"n": 12, "distances": [1, 6]})
        assert response.status_code == 200
        assert response.json()["data"]["burning_number"] == 3

    def test_exact_cap(self, client):
        response = client.post("/api/v1/burning/exact", json={"n": 500, "distances": [1, 2]})
        assert response.status_code == 413
        assert response.json()["code"] == "EXACT_CAP_EXCEEDED"

    def test_path_burn(self, client):
        response = client.get("/api/v1/burning/paths/10", params={"kind": "cycle"})
        assert response.status_code == 200
        assert response.json()["data"]["k"] == 4


class TestBoundsEndpoints:
    """Tests for /bounds"""

    def test_report(self, client):
        response = client.get(
            "/api/v1/bounds/report", params={"n": 12, "distances": [1, 2], "exact": True}
        )
        assert response.status_code == 200
        data = response.json()["data"]
        assert data["closed_form"] == 3
        assert data["exact"] == 3
        assert data["lb_quad"] == 3

    def test_report_checks_stripe_sequence(self, client):
        response = client.get("/api/v1/bounds/report", params={"n": 20, "distances": [1, 4]})
        assert response.status_code == 200
        data = response.json()["data"]
        assert data["ub_stripe"] == 5
        assert data["stripe_verified"] is True

    def test_formula(self, client):
        response = client.get("/api/v1/bounds/formulas/m3", params={"n": 17})
        assert response.status_code == 200
        data = response.json()["data"]
        assert data["value"] == 4
        assert data["verified"] is True

    def test_unknown_family(self, client):
        response = client.get("/api/v1/bounds/formulas/general", params={"n": 20, "m": 4})
        assert response.status_code == 422
        assert response.json()["code"] == "UNSUPPORTED_SPEC"

    def test_bad_order(self, client):
        response = client.get("/api/v1/bounds/formulas/3reg", params={"n": 7})
        assert response.status_code == 422
        assert response.json()["code"] == "BAD_ORDER"


def test_search_routes_run_in_threadpool():
    from fastapi.routing import APIRoute

    from circburn.main import app

    feature_routes = [r for r in app.routes if isinstance(r, APIRoute) and r.path.startswith("/api/v1/")]
    assert {"/api/v1/burning/exact", "/api/v1/bounds/report"} <= {r.path for r in feature_routes}
    for route in feature_routes:
        assert not inspect.iscoroutinefunction(route.endpoint), route.path

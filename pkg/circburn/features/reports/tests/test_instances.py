import io

import pytest
from pydantic import ValidationError

from circburn.core.errors.exceptions import BadOrderException, ExactCapExceededException
from circburn.features.bounds.service import report as report_module
from circburn.features.burning.schemas import BurnSequence
from circburn.features.reports.schemas import CampaignRequest, InstanceRequest, TableRow
from circburn.features.reports.service import (
    expand_instances,
    read_rows,
    run_campaign,
    run_instance,
    spec_for,
    write_rows,
)


class TestRunInstance:
    """Tests for single-row computation"""

    def test_exact_m2(self):
        row = run_instance(InstanceRequest(family="m2", n=12, exact=True))
        assert row.exact == 3
        assert row.closed_form == 3
        assert row.lb_cubic == 3
        assert row.ub == 4
        assert row.verified
        assert not row.mismatch
        assert len(row.witness) == 3

    def test_formula_three_regular(self):
        row = run_instance(InstanceRequest(family="3reg", n=4))
        assert row.closed_form == 2
        assert row.exact is None
        assert row.witness == (0, 1)

    def test_general_bounds(self):
        row = run_instance(InstanceRequest(family="general", n=20, m=4))
        assert row.ub == 5
        assert row.closed_form is None
        assert row.params == "C(20;1,4)"

    def test_explicit_distances(self):
        spec = spec_for(InstanceRequest(family="general", n=21, distances=(1, 2, 5)))
        assert spec.distances == (1, 2, 5)

    def test_family_needs_m(self):
        with pytest.raises(ValidationError):
            InstanceRequest(family="interval", n=20)

    def test_three_regular_needs_even_order(self):
        with pytest.raises(BadOrderException):
            run_instance(InstanceRequest(family="3reg", n=9))

    def test_cap(self):
        with pytest.raises(ExactCapExceededException):
            run_instance(InstanceRequest(family="m2", n=60, exact=True))

    def test_product_row(self):
        row = run_instance(
            InstanceRequest(family="product", n=12, distances=(1, 6), h_n=2, exact=True)
        )
        assert row.family == "product"
        assert row.n == 24
        assert row.params == "g=C(12;1,6);h=C(2;1);b_g=3"
        assert 3 <= row.exact <= 5
        assert row.ub <= 5
        assert row.verified

    def test_product_of_complete_graphs(self):
        row = run_instance(InstanceRequest(family="product", n=2, distances=(1,), h_n=2, exact=True))
        assert row.n == 4
        assert row.exact == 2
        assert row.params.endswith("b_g=2")

    def test_product_above_cap_uses_first_factor_bounds(self):
        row = run_instance(InstanceRequest(family="product", n=100, m=4, h_n=2))
        assert row.n == 200
        assert row.params == "g=C(100;1,4);h=C(2;1);b_g="
        assert row.lb_cubic == 6
        assert row.lb_quad == 6
        assert row.ub == 9
        assert row.exact is None
        assert row.verified
        assert not row.mismatch

    def test_product_upper_end_from_closed_form(self):
        row = run_instance(InstanceRequest(family="product", n=60, m=2, h_n=2))
        assert row.params.endswith("b_g=6")
        assert row.lb_cubic == 5
        assert row.lb_quad == 6
        assert row.ub == 8


class TestTableRow:
    """Tests for the row codec and mismatch detection"""

    def test_record_layout(self):
        row = TableRow(family="m2", n=12, params="C(12;1,2)", lb_cubic=3, exact=3, witness=(10, 3, 0))
        assert row.to_record() == ["m2", "12", "C(12;1,2)", "3", "", "", "", "3", "10;3;0", "true"]
        assert TableRow.from_record(row.to_record()) == row

    def test_mismatch(self):
        assert TableRow(family="m2", n=12, closed_form=4, exact=3).mismatch
        assert TableRow(family="m2", n=12, ub=2, exact=3).mismatch
        assert TableRow(family="m2", n=12, verified=False).mismatch
        assert not TableRow(family="m2", n=12, lb_cubic=3, ub=4, exact=3).mismatch


class TestCampaign:
    """Tests for sweeps"""

    def test_expand_orders_by_n_then_m(self):
        request = CampaignRequest(family="general", n_range=(9, 10), m_range=(2, 4))
        pairs = [(i.n, i.m) for i in expand_instances(request)]
        assert pairs == [(9, 2), (9, 3), (9, 4), (10, 2), (10, 3), (10, 4)]

    def test_expand_skips_outside_domain(self):
        assert [i.n for i in expand_instances(CampaignRequest(family="3reg", n_range=(3, 9)))] == [4, 6, 8]
        assert [i.n for i in expand_instances(CampaignRequest(family="m3", n_range=(5, 8)))] == [7, 8]
        interval = CampaignRequest(family="interval", n_range=(5, 7), m_range=(2, 3))
        assert [(i.n, i.m) for i in expand_instances(interval)] == [(5, 2), (6, 2), (7, 2), (7, 3)]

    def test_single_row_campaign(self):
        handle = io.StringIO()
        summary = run_campaign(CampaignRequest(family="m3", n_range=(7, 7), exact=True), handle)
        assert summary.instances == 1
        assert summary.exit_code == 0
        lines = handle.getvalue().splitlines()
        assert lines[0] == "family,n,params,lb_cubic,lb_quad,ub,closed_form,exact,witness,verified"
        assert len(lines) == 2
        assert ",3," in lines[1]

    def test_campaign_cap(self):
        request = CampaignRequest(family="m2", n_range=(38, 42), exact=True)
        with pytest.raises(ExactCapExceededException):
            run_campaign(request, io.StringIO())

    def test_empty_range_rejected(self):
        with pytest.raises(ValidationError):
            CampaignRequest(family="m2", n_range=(10, 5))

    @pytest.mark.parametrize("fmt", ["csv", "jsonl"])
    def test_rows_read_back(self, tmp_path, fmt):
        request = CampaignRequest(family="interval", n_range=(7, 12), m_range=(2, 3), exact=True, format=fmt)
        path = tmp_path / f"table.{fmt}"
        with path.open("w", encoding="utf-8", newline="") as handle:
            summary = run_campaign(request, handle)
        rows = read_rows(path, fmt)
        assert len(rows) == summary.instances
        assert all(not row.mismatch for row in rows)

        again = io.StringIO()
        write_rows(rows, fmt, again)
        assert again.getvalue() == path.read_text(encoding="utf-8")


def _crowded_stripe(n, m):
    return 7, BurnSequence(sources=tuple(range(7)))


class TestCampaignMismatches:
    """A row that fails its checks turns the campaign exit code to 2"""

    def test_unburnt_stripe_counts_as_mismatch(self, monkeypatch):
        monkeypatch.setattr(report_module, "ub_stripe", _crowded_stripe)
        handle = io.StringIO()
        summary = run_campaign(CampaignRequest(family="general", n_range=(100, 100), m_range=(4, 4)), handle)
        assert summary.instances == 1
        assert summary.mismatches == 1
        assert summary.exit_code == 2
        assert "mismatches=1" in summary.line()
        assert handle.getvalue().splitlines()[1].endswith(",false")

    def test_clean_campaign_exits_zero(self):
        summary = run_campaign(CampaignRequest(family="general", n_range=(100, 100), m_range=(4, 4)), io.StringIO())
        assert summary.mismatches == 0
        assert summary.exit_code == 0

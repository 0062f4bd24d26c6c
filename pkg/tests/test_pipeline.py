"""Tests for single-candidate analysis, classification runs and output."""

import json
from collections import Counter

import pytest

from mixedsurf.config import OutputFormat
from mixedsurf.core.errors import InputError, NotGenerating
from mixedsurf.core.schemas import AnalyzeInput, Minimality, SkipEntryModel, SkipReason
from mixedsurf.covers import enumerate_generating_vectors, hurwitz_reduce
from mixedsurf.extensions import enumerate_unsplit_extensions
from mixedsurf.groups import (
    Catalogue,
    CatalogueEntry,
    build_catalogue,
    construct_named,
    cyclic_extensions,
    parse_descriptor,
)
from mixedsurf.pipeline import (
    TSV_COLUMNS,
    analyze,
    analyze_file,
    build_search_config,
    emit,
    family_record,
    frontier,
    load_analyze_input,
    merge_records,
    mixed_data_from_input,
    plan_search,
    records_json,
    records_tsv,
    representative_input,
    run_search,
    skips_tsv,
)
from mixedsurf.search import signature_text
from mixedsurf.surfaces import MixedData, analyze_candidate

Z4_GENERATOR = [2, 3, 4, 1]


def _z4_input(genus_part, tail, signature, tau_prime=1, g0=(2,)):
    """Z2 inside Z4 = <(1 2 3 4)>; element k is the k-th power of the cycle."""
    return AnalyzeInput.model_validate({
        "G": {"degree": 4, "generators": [Z4_GENERATOR]},
        "G0_generators": list(g0),
        "tau_prime": tau_prime,
        "vector": {"genus_part": list(genus_part), "tail": list(tail)},
        "signature": list(signature),
    })


# (K^2, g_alb, basket, signature, |G0|, |G|) for every family with p_g = q = 1
IRREGULAR_FAMILIES = Counter({
    (2, 2, "C(2,1);2xD(2,1)", "1;2,2", 2, 4): 1,
    (2, 2, "C(2,1);2xD(2,1)", "1;2", 8, 16): 2,
    (4, 3, "4xC(2,1)", "1;2,2", 4, 8): 2,
    (4, 2, "4xC(2,1)", "1;2", 16, 32): 3,
    (4, 3, "4xC(2,1)", "1;2", 16, 32): 3,
    (5, 3, "C(3,1);C(3,2)", "1;3", 12, 24): 2,
    (6, 3, "2xC(2,1)", "1;2", 24, 48): 1,
    (6, 7, "2xC(2,1)", "1;2", 24, 48): 1,
    (6, 5, "C(5,3)", "1;5", 10, 20): 1,
    (8, 5, "-", "1;2,2", 8, 16): 3,
})


@pytest.fixture(scope="module")
def catalogue_48():
    return build_catalogue(48)


def _realizations(g0_groups, orders, basket, k2):
    """Analyze inputs for unsplit G over each G0 with signature (0; orders) and this basket."""
    for g0 in g0_groups:
        n = 2 * g0.order
        entries = [CatalogueEntry(f"E{k}", g) for k, g in enumerate(cyclic_extensions(g0, 2))]
        overgroups = Catalogue(entries={n: entries}, complete_orders={n})
        for ext in enumerate_unsplit_extensions(g0, overgroups):
            for orbit in hurwitz_reduce(enumerate_generating_vectors(ext.g0, 0, orders), ext):
                result = analyze_candidate(MixedData.build(orbit.representative, ext))
                if result.basket.text == basket and result.invariants.k2 == k2:
                    yield representative_input(result.data)


@pytest.fixture
def k2_two_input():
    return _z4_input([0, 0], [2, 2], [1, 2, 2])


@pytest.fixture
def k2_eight_input():
    return _z4_input([2, 0, 0, 2], [], [2])


class TestAnalyze:
    """Test analysis of explicitly given candidates."""

    def test_k2_two(self, k2_two_input, catalogue):
        """The Z2-in-Z4 candidate with (1; 2, 2) is analyzed in full."""
        record = analyze(k2_two_input, catalogue, oracle_check=True)
        assert (record.k2, record.pg, record.q) == (2, 1, 1)
        assert record.basket == "C(2,1);2xD(2,1)"
        assert record.signature == "1;2,2"
        assert (record.g0, record.g) == ("Z2", "Z4")
        assert (record.ord_g0, record.ord_g) == (2, 4)
        assert record.g_alb == 2
        assert record.image_order == 4
        assert record.m_union == 4
        assert record.orbit_size == 1
        assert record.pg_t == 2

    def test_k2_eight(self, k2_eight_input):
        """The smooth product quotient with q = 2 has no Albanese data."""
        record = analyze(k2_eight_input)
        assert record.k2 == 8
        assert record.basket == "-"
        assert record.g_alb is None
        assert record.minimal is Minimality.MINIMAL

    def test_permutation_elements(self):
        """Elements may be given as 1-based permutations."""
        spec = _z4_input([[3, 4, 1, 2], [1, 2, 3, 4]], [[3, 4, 1, 2], [3, 4, 1, 2]], [1, 2, 2],
                         tau_prime=[2, 3, 4, 1], g0=([3, 4, 1, 2],))
        assert analyze(spec).basket == "C(2,1);2xD(2,1)"

    def test_tau_prime_inside(self):
        """tau' must lie outside G0."""
        with pytest.raises(InputError):
            mixed_data_from_input(_z4_input([0, 0], [2, 2], [1, 2, 2], tau_prime=2))

    def test_entry_outside_g0(self):
        """Vector entries must lie in G0."""
        with pytest.raises(NotGenerating):
            mixed_data_from_input(_z4_input([1, 0], [2, 2], [1, 2, 2]))

    def test_signature_mismatch(self):
        """Tail orders must match the declared signature."""
        with pytest.raises(NotGenerating):
            mixed_data_from_input(_z4_input([0, 0], [2, 2], [1, 2, 4]))

    def test_unknown_permutation(self):
        """Permutations outside G are rejected."""
        with pytest.raises(InputError):
            mixed_data_from_input(_z4_input([0, 0], [[2, 1, 3, 4], 2], [1, 2, 2]))

    def test_index_out_of_range(self):
        """Indices beyond |G| are rejected."""
        with pytest.raises(InputError):
            mixed_data_from_input(_z4_input([0, 0], [2, 7], [1, 2, 2]))

    def test_bad_shape(self):
        """The genus part must have 2q entries."""
        with pytest.raises(ValueError):
            _z4_input([0], [2, 2], [1, 2, 2])

    def test_representative_round_trip(self, q8_data):
        """The stored representative reproduces the analysis."""
        analysis = analyze_candidate(q8_data)
        spec = representative_input(q8_data)
        again = analyze(AnalyzeInput.model_validate_json(spec.model_dump_json(by_alias=True)))
        assert again.basket == analysis.basket.text
        assert again.k2 == analysis.invariants.k2
        assert again.signature == "0;2,2,4,4"

    def test_analyze_file(self, k2_two_input, tmp_path):
        """Input files are read and validated."""
        path = tmp_path / "input.json"
        path.write_text(k2_two_input.model_dump_json(by_alias=True))
        assert analyze_file(path).k2 == 2
        assert load_analyze_input(path) == k2_two_input

    def test_missing_file(self, tmp_path):
        """A missing file is an input error."""
        with pytest.raises(InputError):
            load_analyze_input(tmp_path / "missing.json")

    def test_invalid_file(self, tmp_path):
        """A file that fails validation is an input error."""
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"G": {"degree": 4, "generators": [Z4_GENERATOR]}}))
        with pytest.raises(InputError):
            load_analyze_input(path)


class TestSearchConfig:
    """Test run configuration."""

    def test_defaults_from_settings(self, isolated_test_db):
        """Unset options come from the settings."""
        config = build_search_config(1, 1, "2..4")
        assert config.k2_values == [2, 3, 4]
        assert config.jobs == isolated_test_db.jobs
        assert config.max_order == isolated_test_db.max_group_order
        assert config.output_format is OutputFormat.TSV

    @pytest.mark.parametrize("k2", ["", "4..2", "x", "1..2..3"])
    def test_bad_range(self, k2):
        """Malformed or empty K^2 ranges are input errors."""
        with pytest.raises(InputError):
            build_search_config(0, 0, k2)

    def test_bad_values(self):
        """Negative invariants and zero jobs are input errors."""
        with pytest.raises(InputError):
            build_search_config(-1, 0, "1")
        with pytest.raises(InputError):
            build_search_config(0, 0, "1", jobs=0)
        with pytest.raises(InputError):
            build_search_config(0, 0, "1", max_order=4096)


class TestFrontier:
    """Test the search plan."""

    def test_frontier_k2_eight(self):
        """(2, 2, 8): only the empty basket with signature (2; -)."""
        entries = list(frontier(2, 2, [8]))
        assert len(entries) == 1
        assert entries[0].basket.text == "-"
        assert [b.signature for b in entries[0].branches] == ["2;-"]

    def test_plan_skips_above_cap(self, catalogue):
        """Branches with |G| above max_order are reported as skipped."""
        config = build_search_config(1, 1, "2", max_order=8)
        shards, skips = plan_search(config, catalogue)
        assert shards
        assert skips
        assert all(s.reason is SkipReason.ORDER_ABOVE_CAP for s in skips)
        assert all(2 * s.ord_g0 > 8 for s in skips)
        assert all(2 * shard.g0_order <= 8 for shard in shards)

    def test_plan_skips_uncovered(self, catalogue):
        """Orders the catalogue does not cover are reported as skipped."""
        config = build_search_config(1, 1, "2")
        _, skips = plan_search(config, catalogue.restricted(range(1, 5)))
        reasons = {s.reason for s in skips}
        assert SkipReason.ORDER_NOT_COVERED in reasons
        assert all(s.ord_g0 > 2 for s in skips)


class TestRunSearch:
    """Test classification runs."""

    def test_k2_eight(self):
        """(p_g, q, K^2) = (2, 2, 8) with small groups gives one family."""
        progress = []
        planned = []
        result = run_search(
            build_search_config(2, 2, "8"), progress=progress.append, on_plan=planned.append
        )
        assert planned == [1]
        assert progress == [1]
        assert result.skips == []
        assert len(result.records) == 1
        record = result.records[0]
        assert (record.g0, record.g) == ("Z2", "Z4")
        assert record.basket == "-"
        assert record.signature == "2;-"
        assert record.orbit_size == 15
        assert record.n_orbits == 1
        assert record.representative is not None

    @pytest.mark.slow
    def test_k2_two_small_groups(self):
        """(1, 1, 2) with |G| <= 8 finds the Z2-in-Z4 family with two D points."""
        result = run_search(build_search_config(1, 1, "2", max_order=8))
        rows = {(r.basket, r.signature, r.g0, r.g) for r in result.records}
        assert ("C(2,1);2xD(2,1)", "1;2,2", "Z2", "Z4") in rows
        assert all(r.ord_g <= 8 for r in result.records)
        assert all((r.k2, r.pg, r.q) == (2, 1, 1) for r in result.records)

    @pytest.mark.slow
    def test_jobs_do_not_change_output(self):
        """Parallel runs produce the same table as serial ones."""
        serial = run_search(build_search_config(1, 1, "2", max_order=8, jobs=1))
        parallel = run_search(build_search_config(1, 1, "2", max_order=8, jobs=2))
        assert records_tsv(serial.records) == records_tsv(parallel.records)
        assert serial.skips == parallel.skips

    @pytest.mark.slow
    def test_k2_range(self):
        """A K^2 range keeps every record on its own target."""
        result = run_search(build_search_config(2, 2, "1..8", max_order=8))
        assert any(r.k2 == 8 for r in result.records)
        assert all(r.k2 in range(1, 9) and (r.pg, r.q) == (2, 2) for r in result.records)


class TestKnownFamilies:
    """Full runs and single candidates checked against known classifications."""

    @pytest.mark.slow
    def test_irregular_families(self, catalogue_48):
        """p_g = q = 1, K^2 in 1..8: nineteen families, one Hurwitz orbit each."""
        result = run_search(build_search_config(1, 1, "1..8"), catalogue=catalogue_48)
        rows = Counter(
            (r.k2, r.g_alb, r.basket, r.signature, r.ord_g0, r.ord_g) for r in result.records
        )
        assert rows == IRREGULAR_FAMILIES
        assert all(r.n_orbits == 1 for r in result.records)
        assert all(r.minimal == Minimality.MINIMAL for r in result.records)
        known = {(k2, basket, sig, n) for k2, _, basket, sig, n, _ in IRREGULAR_FAMILIES}
        assert not [s for s in result.skips if (s.k2, s.basket, s.signature, s.ord_g0) in known]

    @pytest.mark.slow
    def test_missing_orders_become_skips(self, catalogue_48):
        """Without orders above 32 the order-48 families are reported as skipped."""
        result = run_search(
            build_search_config(1, 1, "1..8"), catalogue=catalogue_48.restricted(range(1, 33))
        )
        rows = Counter(
            (r.k2, r.g_alb, r.basket, r.signature, r.ord_g0, r.ord_g) for r in result.records
        )
        expected = Counter({k: v for k, v in IRREGULAR_FAMILIES.items() if k[5] <= 32})
        assert rows == expected
        skipped = {(s.k2, s.basket, s.signature, s.ord_g0, s.reason) for s in result.skips}
        assert (6, "2xC(2,1)", "1;2", 24, SkipReason.ORDER_NOT_COVERED) in skipped

    @pytest.mark.slow
    @pytest.mark.parametrize(
        "k2, g0_name, orders, basket",
        [
            (1, "D4xZ2", (2, 2, 2, 4), "2xC(2,1);2xD(2,1)"),
            (8, "D4xZ2xZ2", (2, 2, 2, 2, 2), "-"),
        ],
    )
    def test_regular_family_realized(self, k2, g0_name, orders, basket):
        """p_g = q = 0 families over a named G0 come back through analyze."""
        g0 = construct_named(parse_descriptor(g0_name))
        spec = next(_realizations([g0], orders, basket, k2), None)
        assert spec is not None
        record = analyze(spec)
        assert (record.k2, record.pg, record.q) == (k2, 0, 0)
        assert record.basket == basket
        assert record.signature == signature_text(0, orders)
        assert (record.ord_g0, record.ord_g) == (g0.order, 2 * g0.order)

    @pytest.mark.slow
    def test_cyclic_quotient_pair_realized(self):
        """K^2 = 3 with basket C(8,3);C(8,5) and signature (0; 2,2,2,8) over |G0| = 32."""
        cat = build_catalogue(32)
        entries, complete = cat.groups_of_order(32)
        assert complete
        g0_groups = [e.group for e in entries if e.group.elements_of_order(8)]
        spec = next(_realizations(g0_groups, (2, 2, 2, 8), "C(8,3);C(8,5)", 3), None)
        assert spec is not None
        record = analyze(spec, cat)
        assert (record.k2, record.pg, record.q) == (3, 0, 0)
        assert record.basket == "C(8,3);C(8,5)"
        assert record.signature == "0;2,2,2,8"
        assert record.ord_g == 64


class TestMerge:
    """Test canonical ordering of records."""

    def test_merge_sorts_and_counts(self, k2_two_data, k2_eight_data):
        """Records are deduplicated, sorted and counted per table row."""
        first = family_record(analyze_candidate(k2_two_data), "Z2", "Z4")
        second = family_record(analyze_candidate(k2_eight_data), "Z2", "Z4")
        merged = merge_records([[second, first], [first]])
        assert [r.k2 for r in merged] == [2, 8]
        assert all(r.n_orbits == 1 for r in merged)

    def test_merge_counts_orbits(self, k2_two_data):
        """Distinct records in one row raise its orbit count."""
        one = family_record(analyze_candidate(k2_two_data), "Z2", "Z4")
        two = one.model_copy(update={"orbit_size": 3})
        merged = merge_records([[one], [two]])
        assert [r.n_orbits for r in merged] == [2, 2]


class TestEmit:
    """Test table rendering and file output."""

    def test_header_only(self):
        """An empty run still prints the header."""
        assert records_tsv([]) == "\t".join(TSV_COLUMNS) + "\n"

    def test_tsv_row(self, k2_two_data):
        """g_alb and the minimality tag are rendered as text."""
        record = family_record(analyze_candidate(k2_two_data), "Z2", "Z4")
        row = records_tsv([record]).splitlines()[1].split("\t")
        assert row == ["2", "1", "1", "C(2,1);2xD(2,1)", "1;2,2", "2", "Z2", "4", "Z4", "2", "2",
                       "Minimal", "1"]

    def test_tsv_no_albanese(self, k2_eight_data):
        """Rows without Albanese data show a dash."""
        record = family_record(analyze_candidate(k2_eight_data), "Z2", "Z4")
        row = records_tsv([record]).splitlines()[1].split("\t")
        assert row[3] == "-"
        assert row[10] == "-"

    def test_json(self, k2_two_data):
        """JSON output carries the extra invariants and the representative."""
        record = family_record(analyze_candidate(k2_two_data), "Z2", "Z4")
        loaded = json.loads(records_json([record]))
        assert loaded[0]["e"] == 10
        assert loaded[0]["representative"]["signature"] == [1, 2, 2]
        assert "G" in loaded[0]["representative"]

    def test_emit_files(self, k2_two_data, tmp_path):
        """Tables and skip reports are written where asked."""
        record = family_record(analyze_candidate(k2_two_data), "Z2", "Z4")
        skip = SkipEntryModel(
            k2=2, basket="-", signature="1;2", ord_g0=8, reason=SkipReason.ORDER_NOT_COVERED
        )
        out = tmp_path / "out" / "table.tsv"
        skip_path = tmp_path / "out" / "skips.tsv"
        text = emit([record], [skip], OutputFormat.TSV, out=out, skip_report=skip_path)
        assert out.read_text() == text
        assert skip_path.read_text() == skips_tsv([skip])
        assert "OrderNotCovered" in skip_path.read_text()

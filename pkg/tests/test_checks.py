import pytest

from c2v.checks import CATALOG, CheckContext, TableRow, get_check
from c2v.checks.spectral import eigenvalues, shared_labels
from c2v.config import Limits, RunConfig
from c2v.runner import FAIL, PASS, SKIPPED, run_check


def test_catalogue_is_complete_and_ordered():
    assert list(CATALOG) == [f"C{i}" for i in range(1, 23)]
    assert get_check("c14").check_id == "C14"
    for check in CATALOG.values():
        assert check.kind in ("symbolic", "concrete", "k-free")
        assert check.claim


@pytest.mark.parametrize("check_id", ["C1", "C3", "C4", "C21"])
def test_symbolic_identities_hold(small_config, check_id):
    result = run_check(check_id, None, small_config)
    assert result.status == PASS, result.witness
    assert result.mode == "symbolic"
    assert result.k is None


@pytest.mark.parametrize("check_id", ["C5", "C18"])
def test_k_free_checks_pass(small_config, check_id):
    result = run_check(check_id, None, small_config)
    assert result.status == PASS, result.witness
    assert result.mode == "k-free"


@pytest.mark.parametrize("check_id", ["C2", "C8", "C9", "C10", "C12", "C13", "C14", "C15", "C17"])
def test_concrete_checks_pass_at_level_five(small_config, check_id):
    result = run_check(check_id, 5, small_config)
    assert result.status == PASS, result.witness
    assert result.k == 5


@pytest.mark.parametrize("check_id", ["C6", "C7", "C20"])
def test_weyl_checks_pass_at_small_levels(small_config, check_id):
    result = run_check(check_id, 2, small_config)
    assert result.status == PASS, result.witness


def test_quotient_dimension_witness(small_config):
    result = run_check("C14", 5, small_config)
    assert result.witness.startswith("dim R_W = 15;")


def test_ideal_tables_carry_rows(small_config):
    result = run_check("C12", 5, small_config)
    assert result.rows
    assert all(isinstance(row, TableRow) and row.match for row in result.rows)
    spaces = {row.space for row in result.rows}
    assert {"J", "J∩A", "I2", "I3", "I4"} <= spaces


def test_weight_one_spectrum_witness(small_config):
    result = run_check("C16", None, small_config)
    assert result.status == PASS, result.witness
    assert "k=5: {±1050, ±2850}" in result.witness
    assert eigenvalues(5) == [1050, -1050, 2850, -2850]


def test_no_solutions_in_label_box(small_config):
    result = run_check("C17", 5, small_config)
    assert result.witness.startswith("no integer solutions in search box 0 <= j < i <= 5")


def test_shared_labels_at_sixteen():
    groups = shared_labels(CheckContext(None), 16)
    assert any((2, 1) in g and (8, 0) in g for g in groups)


def test_weyl_checks_skip_above_level_cap():
    config = RunConfig(k_values=(7,), limits=Limits(weyl_level_cap=6))
    result = run_check("C7", 7, config)
    assert result.status == SKIPPED
    assert not result.resource_limited


def test_mutation_breaks_relations():
    config = RunConfig(k_values=(5,), mutations=("g2:0",))
    result = run_check("C1", None, config)
    assert result.status == FAIL
    assert result.witness.startswith("rel1(g2, g3, g4, g5) = ")


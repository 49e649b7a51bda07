import pytest

from c2v.config import ConfigError, RunConfig
from c2v.runner import (
    FAIL,
    PASS,
    SKIPPED,
    CheckResult,
    InadmissibleLevelError,
    UnknownCheckError,
    exit_code,
    plan_tasks,
    resolve_mode,
    run_check,
    run_suite,
    summarize,
)
from c2v.checks import get_check


def test_plan_expands_levels_and_collapses_symbolic_checks():
    config = RunConfig(k_values=(3, 5), check_ids=("C1", "C9", "C14"))
    tasks, skipped = plan_tasks(config)
    assert tasks == [("C1", None), ("C9", 5), ("C14", 5)]
    assert [(r.check_id, r.k, r.status) for r in skipped] == [
        ("C9", 3, SKIPPED),
        ("C14", 3, SKIPPED),
    ]
    assert "k >= 5" in skipped[0].witness


def test_concrete_mode_forces_symbolic_checks_to_levels():
    config = RunConfig(k_values=(3, 5), check_ids=("C1",), mode="concrete")
    assert resolve_mode(get_check("C1"), config) == "concrete"
    tasks, skipped = plan_tasks(config)
    assert tasks == [("C1", 5)]
    assert len(skipped) == 1


def test_k_free_checks_run_once():
    config = RunConfig(k_values=(5, 6, 7), check_ids=("C5",))
    tasks, _ = plan_tasks(config)
    assert tasks == [("C5", None)]


def test_unknown_check_is_a_config_error():
    with pytest.raises(UnknownCheckError):
        plan_tasks(RunConfig(check_ids=("C99",)))
    assert issubclass(UnknownCheckError, ConfigError)


@pytest.mark.parametrize("mutation", ["g2", "nope:0", "g2:x"])
def test_bad_mutations_are_config_errors(mutation):
    with pytest.raises(ConfigError):
        plan_tasks(RunConfig(check_ids=("C1",), mutations=(mutation,)))


def test_run_check_refuses_inadmissible_levels(small_config):
    with pytest.raises(InadmissibleLevelError):
        run_check("C9", 3, small_config)
    with pytest.raises(InadmissibleLevelError):
        run_check("C9", None, small_config)


def test_suite_results_follow_catalogue_order():
    config = RunConfig(k_values=(3,), check_ids=("C9", "C5", "C1"))
    results = run_suite(config)
    assert [r.check_id for r in results] == ["C1", "C5", "C9"]
    assert [r.status for r in results] == [PASS, PASS, SKIPPED]
    assert summarize(results) == {PASS: 2, FAIL: 0, SKIPPED: 1}


def _result(status, limited=False):
    return CheckResult("C1", 5, status, "", 0, resource_limited=limited)


def test_exit_codes():
    assert exit_code([_result(PASS)]) == 0
    assert exit_code([_result(PASS), _result(FAIL)]) == 1
    assert exit_code([_result(SKIPPED, limited=True)]) == 0
    assert exit_code([_result(SKIPPED, limited=True)], strict=True) == 3
    assert exit_code([_result(SKIPPED)], strict=True) == 0
    assert exit_code([_result(FAIL), _result(SKIPPED, limited=True)], strict=True) == 1


def test_result_dictionary_fields():
    row = _result(PASS).as_dict()
    assert set(row) == {"check_id", "k", "status", "witness", "elapsed_ms", "mode"}

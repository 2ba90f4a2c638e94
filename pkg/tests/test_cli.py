import json

from maxcyc.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eta_text(capsys):
    code, out, _ = run(capsys, "eta", "S(3) x D(10)")
    assert code == 0
    assert "eta: 4" in out
    assert "order: 60" in out


def test_eta_json_schema(capsys):
    code, out, _ = run(capsys, "eta", "SG72_50", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["order"] == 72
    assert payload["eta"] == 3
    assert payload["gminus_size"] == 30
    assert sorted(c["subgroup_order"] for c in payload["classes"]) == [4, 6, 6]
    assert all(set(c) == {"subgroup_order", "class_size"} for c in payload["classes"])


def test_eta_of_cyclic(capsys):
    code, out, _ = run(capsys, "eta", "C(12)")
    assert code == 0 and "eta: 1" in out


def test_normals_rows(capsys):
    code, out, _ = run(capsys, "normals", "D(30)", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert [r["order"] for r in payload["normal_subgroups"]] == [1, 3, 5, 15, 30]
    code, out, _ = run(capsys, "normals", "A(5)", "--format", "json")
    assert len(json.loads(out)["normal_subgroups"]) == 2
    code, out, _ = run(capsys, "normals", "EA(3,2)", "--format", "json")
    assert len(json.loads(out)["normal_subgroups"]) == 6


def test_quot_command(capsys):
    code, out, _ = run(capsys, "quot", "D(30)", "--order", "5", "--index", "0",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["equal"] is True
    assert payload["coset_union"] is False
    code, out, _ = run(capsys, "quot", "Dic12", "--order", "2", "--format", "json")
    assert json.loads(out)["equal"] is True
    code, out, _ = run(capsys, "quot", "C(4)", "--order", "2", "--format", "json")
    assert json.loads(out)["equal"] is True


def test_quot_no_such_normal_exits_2(capsys):
    code, _, err = run(capsys, "quot", "D(30)", "--order", "7")
    assert code == 2
    assert "error" in err


def test_xsub_command(capsys):
    code, out, _ = run(capsys, "xsub", "Q(8)", "--format", "json")
    assert code == 0
    assert json.loads(out)["x_order"] == 2
    code, out, _ = run(capsys, "xsub", "EA(3,2)", "--format", "json")
    assert json.loads(out)["x_order"] == 1
    code, out, _ = run(capsys, "xsub", "M16", "--format", "json")
    payload = json.loads(out)
    assert payload["cyclic"] is True
    code, _, err = run(capsys, "xsub", "S(3)")
    assert code == 2


def test_gminus_command(capsys):
    code, out, _ = run(capsys, "gminus", "D(30)", "--format", "json")
    assert code == 0
    assert json.loads(out)["gminus_size"] == 7


def test_gkgraph_command(capsys):
    code, out, _ = run(capsys, "gkgraph", "D(30)", "--format", "json")
    payload = json.loads(out)
    assert payload["vertices"] == [2, 3, 5]
    assert payload["edges"] == [[3, 5]]
    assert payload["components"] == 2


def test_parse_error_exits_2(capsys):
    code, _, err = run(capsys, "eta", "C(6")
    assert code == 2
    assert "index 3" in err


def test_arity_error_exits_2(capsys):
    code, _, err = run(capsys, "eta", "D(7)")
    assert code == 2


def test_cap_flags(capsys):
    code, _, err = run(capsys, "eta", "S(4)", "--order-cap", "10")
    assert code == 2
    assert "cap" in err


def test_output_determinism(capsys):
    _, out1, _ = run(capsys, "eta", "SG72_50", "--format", "json")
    _, out2, _ = run(capsys, "eta", "SG72_50", "--format", "json")
    assert out1 == out2
    _, v1, _ = run(capsys, "verify", "--suite", "values", "--format", "json")
    _, v2, _ = run(capsys, "verify", "--suite", "values", "--format", "json")
    assert v1 == v2


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "pgrp-lemma", "--format", "json")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines
    for line in lines:
        payload = json.loads(line)
        assert payload["suite"] == "pgrp-lemma"
        assert payload["passed"] is True


def test_verify_unknown_suite_exits_2(capsys):
    code, _, err = run(capsys, "verify", "--suite", "bogus")
    assert code == 2
    assert "unknown suite" in err


def test_verify_corpus_parse_error_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.corpus"
    bad.write_text("C(6) ; eta\n", encoding="utf-8")
    code, _, err = run(capsys, "verify", "--corpus", str(bad))
    assert code == 2
    assert "line 1" in err


def test_verify_custom_corpus_and_failure_exit(tmp_path, capsys):
    good = tmp_path / "good.corpus"
    good.write_text("C(6) ; eta=1\n", encoding="utf-8")
    code, out, _ = run(capsys, "verify", "--corpus", str(good), "--suite", "values")
    assert code == 0

    wrong = tmp_path / "wrong.corpus"
    wrong.write_text("C(6) ; eta=3\n", encoding="utf-8")
    code, out, _ = run(capsys, "verify", "--corpus", str(wrong), "--suite", "values")
    assert code == 1
    assert "FAIL" in out


def test_verify_corpus_env_var(tmp_path, capsys, monkeypatch):
    corpus = tmp_path / "env.corpus"
    corpus.write_text("C(6) ; eta=1\n", encoding="utf-8")
    monkeypatch.setenv("MAXCYC_CORPUS", str(corpus))
    code, out, _ = run(capsys, "verify", "--suite", "values", "--format", "json")
    assert code == 0
    assert len(out.strip().splitlines()) == 1


def test_verify_jobs_matches_serial(capsys):
    _, serial, _ = run(capsys, "verify", "--suite", "values", "--suite", "gk-graph",
                       "--format", "json")
    _, parallel, _ = run(capsys, "verify", "--suite", "values", "--suite", "gk-graph",
                         "--format", "json", "--jobs", "2")
    assert serial == parallel

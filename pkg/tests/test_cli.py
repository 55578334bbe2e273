import json

import pytest

from wienerlab import format_edge_list, poly_from_json
from wienerlab.cli import main
from wienerlab.families import complete_bipartite, construct, path, petersen


@pytest.fixture()
def petersen_file(tmp_path):
    target = tmp_path / "petersen.edges"
    target.write_text(format_edge_list(construct(petersen())))
    return str(target)


@pytest.fixture()
def path_file(tmp_path):
    target = tmp_path / "p4.edges"
    target.write_text(format_edge_list(construct(path(4))))
    return str(target)


def _json_out(capsys):
    out = capsys.readouterr().out.strip()
    payload = json.loads(out)
    assert payload["schema"] == "wienerlab/1"
    return payload


def test_compute_json(petersen_file, capsys):
    assert main(["compute", "--file", petersen_file, "--json"]) == 0
    payload = _json_out(capsys)
    assert payload["coeffs"] == [0, 15, 30]
    assert payload["index"] == 75
    assert payload["diameter"] == 2
    assert all(payload["property_checks"].values())
    assert poly_from_json({"coeffs": payload["coeffs"]}).derivative_at_one() == 75


def test_compute_text_matches_json(petersen_file, capsys):
    main(["compute", "--file", petersen_file])
    text = capsys.readouterr().out
    assert "15q + 30q^2" in text and "75" in text


def test_compute_disconnected_error(tmp_path, capsys):
    bad = tmp_path / "disc.edges"
    bad.write_text("4 2\n0 1\n2 3\n")
    assert main(["compute", "--file", str(bad), "--json"]) == 1
    err = json.loads(capsys.readouterr().err)
    assert err["error"]["name"] == "Disconnected"


def test_missing_file_error(capsys):
    assert main(["compute", "--file", "/nonexistent.edges"]) == 1
    assert "FormatError" in capsys.readouterr().err


def test_usage_error_exits_two():
    with pytest.raises(SystemExit) as info:
        main(["compute"])  # missing --file
    assert info.value.code == 2


def test_family_check(capsys):
    assert main(["family", "--spec", "Kmn:2,3", "--check", "--json"]) == 0
    payload = _json_out(capsys)
    assert payload["coeffs"] == [0, 6, 4]
    assert payload["index"] == 14
    assert payload["oracle_match"] is True


def test_dendrimer_report(capsys):
    assert main(["dendrimer", "--n", "10", "--d", "2", "--oracle", "--profile", "--json"]) == 0
    payload = _json_out(capsys)
    assert payload["coeffs"] == [0, 9, 12, 12, 12]
    assert payload["index"] == 117
    assert payload["oracle_match"] is True
    assert payload["profile"]["peak_class"] == "increasing"
    assert payload["thresholds"] == {"n_k": 5, "m_k": 7, "p_k": 10, "n_next": 11}


def test_dendrimer_gf(capsys):
    assert main(["dendrimer", "--n", "4", "--d", "2", "--gf", "2", "--json"]) == 0
    payload = _json_out(capsys)
    assert payload["gf"][1] == [0, 3, 3]
    assert payload["gf"][2] == [0, 9, 12, 12, 12]


def test_ops_both_modes(petersen_file, path_file, capsys):
    assert main(["ops", "--op", "cartesian", "--g1", path_file, "--g2", path_file, "--json"]) == 0
    payload = _json_out(capsys)
    assert payload["kind"] == "ordered"
    assert payload["match"] is True

    assert main(["ops", "--op", "tensor", "--g1", path_file, "--g2", path_file, "--json"]) == 1
    err = json.loads(capsys.readouterr().err)
    assert err["error"]["name"] == "Disconnected"


def test_ops_tensor_formula_unsupported(path_file, capsys):
    assert main(["ops", "--op", "tensor", "--g1", path_file, "--g2", path_file, "--formula", "--json"]) == 1
    err = json.loads(capsys.readouterr().err)
    assert err["error"]["name"] == "UnsupportedOp"


def test_tree_identities_command(path_file, capsys):
    assert main(["tree", "--file", path_file, "--json"]) == 0
    payload = _json_out(capsys)
    assert payload["edge_cut"] == payload["triple_product"] == payload["oracle"] == 10


def test_tree_enumerate_command(capsys):
    assert main(["tree", "--enumerate", "5", "--json"]) == 0
    payload = _json_out(capsys)
    assert payload["path_is_max"] is True


def test_tree_on_non_tree(tmp_path, capsys):
    target = tmp_path / "c5.edges"
    target.write_text("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
    assert main(["tree", "--file", str(target), "--json"]) == 1
    err = json.loads(capsys.readouterr().err)
    assert err["error"]["name"] == "NotATree"


def test_coxeter_command(capsys):
    assert main(["coxeter", "--family", "A", "--rank", "3", "--verify", "--json"]) == 0
    payload = _json_out(capsys)
    assert payload["coeffs"] == [1, 6, 11, 6]
    assert payload["roots"] == ["-1", "-1/2", "-1/3"]
    assert payload["wgw_identity"] is True


def test_coxeter_invalid_rank(capsys):
    assert main(["coxeter", "--family", "D", "--rank", "2", "--json"]) == 1
    err = json.loads(capsys.readouterr().err)
    assert err["error"]["name"] == "InvalidRank"


def test_wdist_command(tmp_path, capsys):
    target = tmp_path / "star.edges"
    target.write_text(format_edge_list(construct(complete_bipartite(1, 3))))
    assert main(["wdist", "--file", str(target), "--w", "2", "--partial", "--json"]) == 0
    payload = _json_out(capsys)
    assert payload["coeffs"] == []
    assert len(payload["infeasible_pairs"]) == 6

    assert main(["wdist", "--file", str(target), "--w", "2", "--json"]) == 1
    err = json.loads(capsys.readouterr().err)
    assert err["error"]["name"] == "InfeasiblePair"


def test_text_and_json_agree(petersen_file, capsys):
    main(["family", "--spec", "P:6", "--json"])
    payload = _json_out(capsys)
    main(["family", "--spec", "P:6"])
    text = capsys.readouterr().out
    assert str(payload["index"]) in text

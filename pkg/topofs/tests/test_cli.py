import json

import numpy as np
import pandas as pd
import pytest

from topofs import __version__
from topofs.cli import main, resolve_threads
from topofs.errors import ValidationError


def write_features(path, n_features=12, n_samples=40, seed=0, labels=True):
    rng = np.random.default_rng(seed)
    frame = pd.DataFrame(rng.normal(size=(n_samples, n_features)),
                         columns=[f"g{i}" for i in range(n_features)])
    if labels:
        frame["y"] = np.where(rng.uniform(size=n_samples) < 0.5, "a", "b")
        frame.loc[:3, "y"] = ["a", "a", "b", "b"]
    frame.to_csv(path, index=False)
    return str(path)


def test_select_tfs(tmp_path, capsys):
    data = write_features(tmp_path / "x.csv")
    output = tmp_path / "ranking.json"
    code = main(["select", "--input", data, "--label-col", "y", "--method", "tfs", "--metric", "spearman",
                 "--square", "--k", "10", "--output", str(output),
                 "--dump-similarity", str(tmp_path / "sim.csv"), "--dump-graph", str(tmp_path / "graph.json")])
    assert code == 0
    content = json.loads(output.read_text(encoding="utf-8"))
    assert len(content["selected"]) == 10
    assert len(set(content["selected"])) == 10
    assert content["provenance"]["version"] == __version__
    assert content["provenance"]["config"]["squared"] is True
    assert sum(content["ranking"]["scores"]) == 6 * 12 - 12

    similarity = pd.read_csv(tmp_path / "sim.csv", index_col=0)
    assert similarity.shape == (12, 12)
    graph = json.loads((tmp_path / "graph.json").read_text(encoding="utf-8"))
    assert len(graph["graph"]["edges"]) == 30
    assert capsys.readouterr().out.strip().split() == content["selected_names"]


@pytest.mark.parametrize("method_args", [
    ["--method", "tfs", "--metric", "pearson"],
    ["--method", "inffs", "--alpha", "0.5", "--theta", "0.9"],
])
def test_select_scores_follow_input_columns(tmp_path, method_args):
    path = tmp_path / "x.csv"
    write_features(path, n_features=8)
    frame = pd.read_csv(path)
    frame["g0"] = 1.5
    frame.to_csv(path, index=False)
    output = tmp_path / "ranking.json"

    code = main(["select", "--input", str(path), "--label-col", "y", *method_args, "--k", "3",
                 "--output", str(output)])
    assert code == 0
    content = json.loads(output.read_text(encoding="utf-8"))
    order = content["ranking"]["order"]
    scores = content["ranking"]["scores"]
    assert content["kept_features"] == list(range(1, 8))
    assert len(scores) == 8
    assert scores[0] is None
    assert sorted(order) == list(range(1, 8))
    ordered = [scores[i] for i in order]
    assert all(a >= b for a, b in zip(ordered, ordered[1:]))
    assert content["selected"] == order[:3]
    if method_args[1] == "tfs":
        assert sum(ordered) == 6 * 7 - 12


def test_select_inffs_is_deterministic(tmp_path):
    data = write_features(tmp_path / "x.csv", labels=False)
    args = ["select", "--input", data, "--method", "inffs", "--alpha", "0.5", "--theta", "0.9", "--k", "4"]
    assert main(args + ["--output", str(tmp_path / "a.json")]) == 0
    assert main(args + ["--output", str(tmp_path / "b.json")]) == 0
    first = json.loads((tmp_path / "a.json").read_text(encoding="utf-8"))
    second = json.loads((tmp_path / "b.json").read_text(encoding="utf-8"))
    assert first["selected"] == second["selected"]


def test_select_rejects_bad_configuration(tmp_path, capsys):
    data = write_features(tmp_path / "x.csv")
    code = main(["select", "--input", data, "--label-col", "y", "--method", "tfs", "--metric", "energy",
                 "--alpha", "0.5", "--square", "--k", "3"])
    assert code == 2
    assert "never squared" in capsys.readouterr().err

    code = main(["select", "--input", data, "--label-col", "y", "--method", "tfs", "--metric", "pearson",
                 "--k", "0"])
    assert code == 2
    code = main(["select", "--input", data, "--label-col", "y", "--method", "tfs", "--metric", "pearson",
                 "--k", "13", "--output", str(tmp_path / "r.json")])
    assert code == 2


def test_missing_input_exits_with_one(tmp_path, capsys):
    code = main(["select", "--input", str(tmp_path / "nope.csv"), "--method", "tfs", "--metric", "pearson",
                 "--k", "3"])
    assert code == 1
    err = capsys.readouterr().err
    assert "no such file" in err
    assert len(err.strip().splitlines()) == 1


def test_validate(tmp_path, capsys):
    data = write_features(tmp_path / "four.csv", n_features=4)
    assert main(["validate", "--input", data, "--label-col", "y"]) == 0
    out = capsys.readouterr().out
    assert out.count("edges = 3n-6: PASS") == 3
    assert out.count("chordal: PASS") == 3
    assert "degree histogram: {3: 4}" in out

    data = write_features(tmp_path / "fifty.csv", n_features=50)
    assert main(["validate", "--input", data, "--label-col", "y"]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out

    data = write_features(tmp_path / "three.csv", n_features=3)
    assert main(["validate", "--input", data, "--label-col", "y"]) == 2


def test_build_graph(tmp_path):
    data = write_features(tmp_path / "x.csv")
    output = tmp_path / "g.json"
    assert main(["build-graph", "--input", data, "--label-col", "y", "--metric", "energy", "--alpha", "0.3",
                 "--output", str(output)]) == 0
    content = json.loads(output.read_text(encoding="utf-8"))
    assert content["graph"]["n"] == 12
    assert len(content["graph"]["cliques"]) == 9
    assert len(content["graph"]["separators"]) == 8


def test_evaluate(tmp_path):
    data = write_features(tmp_path / "x.csv", n_features=8, n_samples=60)
    config = {
        "dataset": data,
        "label_column": "y",
        "methods": ["inffs"],
        "classifiers": ["decision_tree"],
        "cardinalities": [2],
        "grids": {"inffs": {"alphas": [0.2], "thetas": [0.5]}},
    }
    path = tmp_path / "run.json"
    path.write_text(json.dumps(config), encoding="utf-8")
    out = tmp_path / "out"
    assert main(["evaluate", "--config", str(path), "--output-dir", str(out), "--seed", "3"]) == 0
    report = json.loads((out / "report.json").read_text(encoding="utf-8"))
    assert report["provenance"]["seed"] == 3
    assert len(report["rows"]) == 1
    assert (out / "report.csv").exists()

    path.write_text(json.dumps({**config, "cv_k": 1}), encoding="utf-8")
    assert main(["evaluate", "--config", str(path), "--output-dir", str(out)]) == 2


def test_ttest(tmp_path, capsys):
    data = write_features(tmp_path / "x.csv", n_features=8, n_samples=40)
    a = {"method": "tfs", "metric": "pearson", "squared": True, "k": 3, "classifier": "knn", "knn_k": 3}
    b = {"method": "inffs", "alpha": 0.5, "theta": 0.9, "k": 3, "classifier": "knn"}
    (tmp_path / "a.json").write_text(json.dumps(a), encoding="utf-8")
    (tmp_path / "b.json").write_text(json.dumps(b), encoding="utf-8")
    output = tmp_path / "t.json"
    code = main(["ttest", "--a", str(tmp_path / "a.json"), "--b", str(tmp_path / "b.json"), "--input", data,
                 "--label-col", "y", "--reps", "2", "--output", str(output)])
    assert code == 0
    result = json.loads(output.read_text(encoding="utf-8"))["result"]
    assert result["degrees_of_freedom"] == 3
    assert "df = 3" in capsys.readouterr().out


def test_resolve_threads(monkeypatch):
    monkeypatch.delenv("TFS_THREADS", raising=False)
    assert resolve_threads(None) == 1
    assert resolve_threads(3) == 3
    monkeypatch.setenv("TFS_THREADS", "4")
    assert resolve_threads(None) == 4
    assert resolve_threads(2) == 2
    monkeypatch.setenv("TFS_THREADS", "many")
    with pytest.raises(ValidationError):
        resolve_threads(None)
    with pytest.raises(ValidationError):
        resolve_threads(0)


if __name__ == "__main__":
    pytest.main()

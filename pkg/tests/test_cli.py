import json
from fractions import Fraction as F

import pytest

from polyseq import cli
from polyseq.serialize import read_json


def write_spec(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


@pytest.fixture
def cheb_spec(tmp_path):
    return write_spec(tmp_path, "cheb.json", {"type": "chebyshev", "a": "1/4", "b": "0"})


@pytest.fixture
def herm_spec(tmp_path):
    return write_spec(tmp_path, "herm.json", {"type": "hermite", "a": "1", "b": "0"})


@pytest.fixture
def trid_spec(tmp_path):
    return write_spec(tmp_path, "trid.json", {
        "type": "tridiagonal",
        "beta": ["0"] * 12,
        "alpha": ["1"] * 11,
    })


def test_build(tmp_path, cheb_spec):
    out = str(tmp_path / "build.json")
    assert cli.main(["build", "--h-spec", cheb_spec, "--size", "5", "--out", out]) == 0
    blob = read_json(out)
    assert set(blob) == {"H", "A", "P", "moments"}
    assert blob["moments"] == ["1", "0", "1/4", "0", "1/8"]
    assert blob["P"]["rows"][2] == ["-1/4", "0", "1", "0", "0"]


def test_build_output_is_canonical(tmp_path, cheb_spec):
    out = str(tmp_path / "build.json")
    cli.main(["build", "--h-spec", cheb_spec, "--size", "4", "--out", out])
    raw = (tmp_path / "build.json").read_bytes()
    assert raw.endswith(b"\n")
    assert b": " not in raw and b", " not in raw
    reloaded = read_json(out)
    out2 = str(tmp_path / "build2.json")
    from polyseq.serialize import write_json
    write_json(out2, reloaded)
    assert raw == (tmp_path / "build2.json").read_bytes()


def test_linearize_all_methods_agree(tmp_path, cheb_spec):
    out = str(tmp_path / "lin.json")
    rc = cli.main(["linearize", "--h-spec", cheb_spec, "--n-max", "3",
                   "--method", "all", "--out", out])
    assert rc == 0
    blob = read_json(out)
    assert blob["n_max"] == 3
    assert len(blob["slices"]) == 7


def test_linearize_csv(tmp_path, trid_spec):
    out = str(tmp_path / "lin.csv")
    rc = cli.main(["linearize", "--h-spec", trid_spec, "--n-max", "2",
                   "--format", "csv", "--out", out])
    assert rc == 0
    for k in range(5):
        lines = (tmp_path / f"lin_k{k}.csv").read_text().splitlines()
        assert lines[0] == "n,m,value"
        assert len(lines) == 1 + 9
    # k=0 slice of the unit-alpha sequence is the identity on this window
    rows = (tmp_path / "lin_k0.csv").read_text().splitlines()[1:]
    cells = {tuple(line.split(",")[:2]): line.split(",")[2] for line in rows}
    assert cells[("0", "0")] == "1"
    assert cells[("1", "1")] == "1"
    assert cells[("0", "1")] == "0"


def test_linearize_auto_size_uses_window_bound(tmp_path, cheb_spec):
    out = str(tmp_path / "lin.json")
    rc = cli.main(["linearize", "--h-spec", cheb_spec, "--n-max", "4", "--out", out])
    assert rc == 0
    blob = read_json(out)
    assert len(blob["slices"]) == 9


def test_exit_2_missing_file(tmp_path):
    rc = cli.main(["build", "--h-spec", str(tmp_path / "nope.json"),
                   "--out", str(tmp_path / "x.json")])
    assert rc == 2


def test_exit_2_bad_spec(tmp_path):
    bad = write_spec(tmp_path, "bad.json", {"type": "nonsense"})
    rc = cli.main(["build", "--h-spec", bad, "--out", str(tmp_path / "x.json")])
    assert rc == 2


def test_exit_2_unparsable_json(tmp_path):
    path = tmp_path / "junk.json"
    path.write_text("{")
    rc = cli.main(["build", "--h-spec", str(path), "--out", str(tmp_path / "x.json")])
    assert rc == 2


def test_exit_3_size_too_small(tmp_path, cheb_spec):
    rc = cli.main(["linearize", "--h-spec", cheb_spec, "--n-max", "3",
                   "--size", "4", "--out", str(tmp_path / "x.json")])
    assert rc == 3


def test_exit_3_spec_too_short(tmp_path):
    spec = write_spec(tmp_path, "short.json", {
        "type": "tridiagonal", "beta": ["0", "0"], "alpha": ["1"]})
    rc = cli.main(["linearize", "--h-spec", spec, "--n-max", "3",
                   "--out", str(tmp_path / "x.json")])
    assert rc == 3


def test_exit_3_max_t_cap(tmp_path, cheb_spec, monkeypatch):
    monkeypatch.setenv("POLYSEQ_MAX_T", "6")
    rc = cli.main(["linearize", "--h-spec", cheb_spec, "--n-max", "3",
                   "--out", str(tmp_path / "x.json")])
    assert rc == 3
    monkeypatch.setenv("POLYSEQ_MAX_T", "8")
    rc = cli.main(["linearize", "--h-spec", cheb_spec, "--n-max", "3",
                   "--out", str(tmp_path / "x.json")])
    assert rc == 0


def test_exit_3_require_orthogonal_zero_alpha(tmp_path):
    spec = write_spec(tmp_path, "za.json", {
        "type": "tridiagonal",
        "beta": ["0"] * 10,
        "alpha": ["1", "0"] + ["1"] * 7,
    })
    rc = cli.main(["linearize", "--h-spec", spec, "--n-max", "2",
                   "--require-orthogonal", "--out", str(tmp_path / "x.json")])
    assert rc == 3


def test_require_orthogonal_rejects_dense(tmp_path):
    spec = write_spec(tmp_path, "dense.json", {
        "type": "rows",
        "rows": [["1"], ["1", "1"], ["1", "1", "1"], ["1", "1", "1", "1"]]})
    rc = cli.main(["linearize", "--h-spec", spec, "--n-max", "1",
                   "--require-orthogonal", "--out", str(tmp_path / "x.json")])
    assert rc == 3


def test_exit_4_mismatch(tmp_path, cheb_spec, monkeypatch):
    # force the cross-method comparison to report a difference
    monkeypatch.setattr(cli, "tensors_agree", lambda a, b: (0, 0, 0))
    rc = cli.main(["linearize", "--h-spec", cheb_spec, "--n-max", "2",
                   "--method", "all", "--out", str(tmp_path / "x.json")])
    assert rc == 4


def test_connect(tmp_path, cheb_spec, herm_spec):
    out = str(tmp_path / "conn.json")
    rc = cli.main(["connect", "--p-spec", cheb_spec, "--u-spec", herm_spec,
                   "--m-max", "5", "--mixed", "2", "--verify", "--out", out])
    assert rc == 0
    blob = read_json(out)
    assert blob["inverse_check"] is True
    assert blob["connection"]["m_max"] == 5
    assert blob["mixed"]["n_max"] == 2
    # e(1,1,k) for cheb(1/4) in hermite(1): p_1^2 = t^2 = u_2 + u_0
    grid = blob["mixed"]["slices"][0]["matrix"]
    assert grid[1][1] == "1"


def test_family_subcommand(tmp_path):
    spec = write_spec(tmp_path, "cheb2.json", {"type": "chebyshev", "a": "2", "b": "7"})
    out = str(tmp_path / "fam.json")
    rc = cli.main(["family", "--h-spec", spec, "--pnh", "3", "--slice", "3",
                   "--n-max", "6", "--size", "6", "--out", out])
    assert rc == 0
    blob = read_json(out)
    assert blob["pnh"]["rows"][3] == ["8", "0", "4", "0", "2", "0"]
    assert blob["slice"]["matrix"][3] == ["1", "0", "2", "0", "4", "0", "8"]


def test_family_series(tmp_path, herm_spec):
    out = str(tmp_path / "fam.json")
    rc = cli.main(["family", "--h-spec", herm_spec, "--series", "--size", "6",
                   "--out", out])
    assert rc == 0
    blob = read_json(out)
    assert "series_p" in blob and "series_p_inverse" in blob


def test_family_rejects_non_family_spec(tmp_path, trid_spec):
    rc = cli.main(["family", "--h-spec", trid_spec, "--pnh", "2",
                   "--out", str(tmp_path / "x.json")])
    assert rc == 2


def test_family_requires_a_request(tmp_path, cheb_spec):
    rc = cli.main(["family", "--h-spec", cheb_spec, "--out", str(tmp_path / "x.json")])
    assert rc == 2


def test_verify_subcommand(tmp_path, cheb_spec, capsys):
    assert cli.main(["verify", "--h-spec", cheb_spec, "--n-max", "3"]) == 0
    out = capsys.readouterr().out
    assert out == ""  # quiet unless --verbose
    assert cli.main(["verify", "--h-spec", cheb_spec, "--n-max", "3",
                     "--verbose"]) == 0
    out = capsys.readouterr().out
    assert "direct-vs-oracle" in out


def test_verify_failure_exit_4(tmp_path, cheb_spec, monkeypatch):
    from polyseq.verify import CheckResult

    monkeypatch.setattr("polyseq.verify.run_suite",
                        lambda *a, **k: [CheckResult("boom", False, "bad")])
    assert cli.main(["verify", "--h-spec", cheb_spec, "--n-max", "2"]) == 4


def test_unknown_subcommand_exits_2():
    with pytest.raises(SystemExit) as err:
        cli.main(["frobnicate"])
    assert err.value.code == 2

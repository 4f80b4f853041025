import pytest

from sociogrow.cli import main
from sociogrow.formats import builtin_zachary, parse_edgelist, write_edgelist


@pytest.fixture
def cfg_file(tmp_path):
    path = tmp_path / "model.cfg"
    path.write_text("beta=0.8\nn0=3\ntarget_n=40\nreplicates=2\nrecompute_stride=4\nseed=5\n")
    return path


def test_grow_writes_outputs(tmp_path, cfg_file, capsys):
    prefix = tmp_path / "run"
    assert main(["grow", "--config", str(cfg_file), "--out", str(prefix)]) == 0
    for suffix in ["_seed5.edges", "_seed6.edges", "_degree.csv", "_density.csv", "_stats.txt", "_config.txt"]:
        assert (tmp_path / f"run{suffix}").exists()
    g = parse_edgelist((tmp_path / "run_seed5.edges").read_text()).graph
    assert g.node_count == 40
    density = (tmp_path / "run_density.csv").read_text().splitlines()
    assert density[0] == "t,nodes,mean_degree" and len(density) == 1 + 38
    assert "replicates=2" in capsys.readouterr().out


def test_flags_override_config(tmp_path, cfg_file):
    prefix = tmp_path / "o"
    assert main(["grow", "--config", str(cfg_file), "--out", str(prefix), "--replicates", "1",
                 "--target-n", "25", "--beta", "2.5", "--seed", "1"]) == 0
    cfg_text = (tmp_path / "o_config.txt").read_text()
    assert "beta=2.5" in cfg_text and "target_n=25" in cfg_text and "replicates=1" in cfg_text
    assert (tmp_path / "o_seed1.edges").exists()


def test_stats_builtin(capsys):
    assert main(["stats", "--builtin", "zachary"]) == 0
    out = capsys.readouterr().out
    assert "nodes=34\n" in out and "edges=78\n" in out and "C=0.570638" in out


def test_stats_file(tmp_path, capsys):
    path = tmp_path / "g.edges"
    path.write_text("a b\nb c\nc c\n")
    assert main(["stats", str(path)]) == 0
    out = capsys.readouterr().out
    assert "nodes=3\n" in out and "self_loops_dropped=1" in out and "l=1.33333" in out


def test_exit_codes(tmp_path, capsys):
    assert main(["stats", str(tmp_path / "missing.edges")]) == 2
    bad = tmp_path / "bad.edges"
    bad.write_text("1 2 3\n")
    assert main(["stats", str(bad)]) == 2
    assert main(["stats"]) == 1
    with pytest.raises(SystemExit) as exc:
        main(["grow", "--nope"])
    assert exc.value.code == 1
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("beta=0\n")
    assert main(["grow", "--config", str(cfg), "--out", str(tmp_path / "x")]) == 2


def test_strict_non_convergence(tmp_path):
    cfg = tmp_path / "slow.cfg"
    cfg.write_text("target_n=20\nreplicates=1\nmax_iterations=2\n")
    out = str(tmp_path / "s")
    assert main(["grow", "--config", str(cfg), "--out", out]) == 0
    assert main(["grow", "--config", str(cfg), "--out", out, "--strict"]) == 3


def test_compare_against_zachary(tmp_path, capsys):
    real = tmp_path / "karate.edges"
    real.write_text(write_edgelist(builtin_zachary().graph))
    prefix = tmp_path / "cmp"
    assert main(["compare", str(real), "--out", str(prefix), "--replicates", "2", "--stride", "3", "--beta", "1.0"]) == 0
    report = (tmp_path / "cmp_compare.txt").read_text()
    assert report.startswith("ks_distance=")
    assert "nodes,34,34,0" in report
    rows = (tmp_path / "cmp_compare_degree.csv").read_text().splitlines()
    assert rows[0] == "k,real,simulated"


def test_sweep_ranks_grid(tmp_path, capsys):
    prefix = tmp_path / "sw"
    rc = main(["sweep", "--target-stats", "n=30,C=0.4,l=2.5,d=5", "--beta", "0.5,2", "--m", "0.5",
               "--alpha", "1.1:1.5:2", "--replicates", "1", "--stride", "5", "--out", str(prefix)])
    assert rc == 0
    lines = (tmp_path / "sw_sweep.csv").read_text().splitlines()
    assert lines[0] == "rank,beta,m,alpha,C,l,d,mean_degree,ks,score"
    assert len(lines) == 5
    scores = [float(line.split(",")[-1]) for line in lines[1:]]
    assert scores == sorted(scores)


def test_sweep_with_real_target_reports_ks(tmp_path):
    real = tmp_path / "karate.edges"
    real.write_text(write_edgelist(builtin_zachary().graph))
    prefix = tmp_path / "sk"
    assert main(["sweep", str(real), "--beta", "1", "--m", "0.5", "--alpha", "1.1", "--replicates", "1",
                 "--stride", "4", "--out", str(prefix)]) == 0
    row = (tmp_path / "sk_sweep.csv").read_text().splitlines()[1].split(",")
    assert 0.0 <= float(row[8]) <= 1.0


def test_sweep_needs_target():
    assert main(["sweep", "--beta", "1", "--m", "0.5", "--alpha", "1.1"]) == 1

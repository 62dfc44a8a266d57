import json
import subprocess
import sys
from pathlib import Path

from coroots.cli import main, run_check_all
from coroots.diagrams import AffineDiagram
from coroots.moduli import record_from_json
from coroots.tables import render_diagram
from coroots.diagrams import diagram_of
from coroots.rootdata import parse_type

REPO = Path(__file__).resolve().parent.parent


def run_cli(*argv):
    proc = subprocess.run(
        [sys.executable, "-m", "coroots.cli", *argv],
        capture_output=True,
        text=True,
        cwd=REPO,
    )
    return proc.returncode, proc.stdout, proc.stderr


def test_components_text(capsys):
    assert main(["components", "--group", "E8", "--center", "trivial"]) == 0
    out = capsys.readouterr().out
    assert out.strip().endswith("sum d_X = 30 = g")
    assert len([l for l in out.splitlines() if l and l[0].isspace() or l[:1].isdigit()]) >= 12


def test_quotient_text(capsys):
    assert main(["quotient", "--group", "E7", "--center", "full"]) == 0
    out = capsys.readouterr().out
    assert "type F4" in out and "2 x catalog" in out


def test_datum_json_round_trip(capsys):
    assert main(["datum", "--group", "BC3", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    d = AffineDiagram.from_json(payload)
    assert d == diagram_of(parse_type("BC3"))


def test_components_json_round_trip(capsys):
    assert main(["components", "--group", "D4", "--center", "full", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    recs = [record_from_json(o) for o in payload["components"]]
    assert [r.order for r in recs] == [1, 2, 4, 4]
    assert payload["dual_coxeter"] == 6


def test_project_and_clock_commands(capsys):
    assert main(["project", "--group", "E6", "--center", "full"]) == 0
    out = capsys.readouterr().out
    assert "type G2" in out and "matches quotient diagram: True" in out
    assert main(["clock", "--group", "A1", "--center", "trivial"]) == 0
    out = capsys.readouterr().out
    assert "parity class odd" in out


def test_rank_zero_command(capsys):
    assert main(["rank-zero", "--k", "2"]) == 0
    out = capsys.readouterr().out
    for name in ("B3", "D4", "G2"):
        assert name in out


def test_exit_codes():
    code, _, err = run_cli("datum", "--group", "Z9")
    assert code == 2 and "usage" in err
    code, _, err = run_cli("derived", "--group", "G2", "--center", "trivial", "--k", "5")
    assert code == 1 and "divides no node value" in err
    code, _, _ = run_cli("datum", "--group", "A0")
    assert code == 1
    code, _, _ = run_cli("nonsense")
    assert code == 2


def test_render_diagram_single_node():
    from fractions import Fraction as Q

    assert render_diagram(AffineDiagram(((2,),), (7,), (Q(2),))) == "*(7)"


def test_render_diagram_examples():
    out = render_diagram(diagram_of(parse_type("A1")))
    assert "<=4=>" in out
    out = render_diagram(diagram_of(parse_type("G2")))
    assert "=3=>" in out


def test_check_all_small_rank_deterministic():
    lines1, lines2 = [], []
    assert run_check_all(5, lines1.append)
    assert run_check_all(5, lines2.append)
    assert lines1 == lines2
    assert lines1[-1] == "all checks passed"


def test_check_all_full_rank_within_budget():
    import time

    t0 = time.time()
    lines: list[str] = []
    assert run_check_all(12, lines.append)
    elapsed = time.time() - t0
    assert elapsed < 60, f"check-all at rank 12 took {elapsed:.1f}s"


def test_b2_alias_via_cli(capsys):
    assert main(["datum", "--group", "B2"]) == 0
    out = capsys.readouterr().out
    assert "dual Coxeter number: 3" in out


def test_scripts_run(tmp_path):
    scripts = REPO / "scripts"
    proc = subprocess.run(
        [sys.executable, str(scripts / "run_check_all.py"), "--max-rank", "3"],
        capture_output=True, text=True, cwd=REPO,
    )
    assert proc.returncode == 0 and "all checks passed" in proc.stdout
    proc = subprocess.run(
        [sys.executable, str(scripts / "make_tables.py"), "--out", str(tmp_path), "--max-rank", "3"],
        capture_output=True, text=True, cwd=REPO,
    )
    assert proc.returncode == 0 and (tmp_path / "torus-k.txt").exists()
    proc = subprocess.run(
        [sys.executable, str(scripts / "survey_moduli.py"), "--max-rank", "4"],
        capture_output=True, text=True, cwd=REPO,
    )
    assert proc.returncode == 0 and "D4" in proc.stdout


def test_paper_tables_diff_clean(tmp_path):
    """Regenerated tables are byte-identical to the checked-in goldens."""
    code, out, _ = run_cli("paper-tables", "--out", str(tmp_path))
    assert code == 0
    for doc in ("coroot-diagrams", "quotient-diagrams", "fixed-subspace", "torus-k"):
        fresh = (tmp_path / f"{doc}.txt").read_text()
        golden = (REPO / "golden" / f"{doc}.txt").read_text()
        assert fresh == golden, f"{doc} table drifted from the golden copy"


def test_paper_tables_env_var(tmp_path, monkeypatch):
    monkeypatch.setenv("COROOTS_TABLE_DIR", str(tmp_path / "envdir"))
    assert main(["paper-tables", "--max-rank", "3"]) == 0
    assert (tmp_path / "envdir" / "coroot-diagrams.txt").exists()

import pytest

from nivatk.cli import ConfigFile, read_config_file, run

CHECKERBOARD = "periodic lattice{(2,0) (0,2)} values{(0,0):0 (0,1):1 (1,0):1 (1,1):0}\n"
TWO_LINES = ("sum { +coset offset(0,0,0) gens{(1,0,0)} value 1 "
             "+coset offset(0,0,3) gens{(0,1,0)} value 1 }\n")
BINARY_IRRATIONAL = ("sum { +mechanical weights(1,1) alpha sqrt(2) "
                     "-mechanical weights(1,0) alpha sqrt(2) "
                     "-mechanical weights(0,1) alpha sqrt(2) }\n")


@pytest.fixture
def cfg(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return write


def test_read_config_file_metadata(cfg):
    path = cfg("checkerboard.cfg", "# black and white\n" + CHECKERBOARD)
    parsed = read_config_file(path)
    assert isinstance(parsed, ConfigFile)
    assert parsed.name == "checkerboard"
    assert parsed.dim == 2
    assert parsed.config.value((1, 0)) == 1


def test_complexity_output(cfg, capsys):
    path = cfg("cb.cfg", CHECKERBOARD)
    assert run(["complexity", "--config", path, "--shape", "2x2"]) == 0
    assert capsys.readouterr().out == "count=2 exact=true\n"


def test_complexity_inline_descriptor(capsys):
    # --config also accepts the descriptor text directly
    assert run(["complexity", "--config", CHECKERBOARD.strip(),
                "--shape", "2x2"]) == 0
    assert capsys.readouterr().out == "count=2 exact=true\n"


def test_complexity_with_sample(cfg, capsys):
    path = cfg("lines.cfg", TWO_LINES)
    code = run(["complexity", "--config", path, "--shape", "3x3x3",
                "--sample=-12..9,-12..9,-12..9"])
    assert code == 0
    assert capsys.readouterr().out == "count=19 exact=false\n"


def test_annihilate_output(cfg, capsys):
    path = cfg("cb.cfg", CHECKERBOARD)
    assert run(["annihilate", "--config", path, "--shape", "2x2",
                "--sample", "8x8"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "found=true"
    assert out[1] == "g=1 + X^(0,-1)"
    assert out[2] == "constant=1"
    assert out[3] == "f=X^(1,0) + X^(1,-1) - 1 - X^(0,-1)"


def test_verify_pass_and_fail(cfg, capsys):
    path = cfg("cb.cfg", CHECKERBOARD)
    assert run(["verify", "--config", path,
                "--poly", "X^(1,1) - 1", "--window", "10x10"]) == 0
    assert capsys.readouterr().out == "annihilates=true status=exact\n"
    assert run(["verify", "--config", path,
                "--poly", "x - 1", "--window", "6x6"]) == 1
    assert capsys.readouterr().out == "annihilates=false witness=(0,0)\n"


def test_search_output(cfg, capsys):
    path = cfg("lines.cfg", TWO_LINES)
    code = run(["search", "--config", path, "--max-factors", "2",
                "--coord-bound", "1", "--window=-6..6,-6..6,-6..6"])
    assert code == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "found=true"
    assert out[1] == "steps=(0,1,0);(1,0,0)"


def test_decompose_output(cfg, capsys):
    path = cfg("lines.cfg", TWO_LINES)
    code = run(["decompose", "--config", path,
                "--vectors", "(1,0,0);(0,1,0)", "--core=-4..4,-4..4,-4..4"])
    assert code == 0
    out = capsys.readouterr().out.splitlines()
    assert "feasible=true" in out
    assert "components=2" in out
    assert "residual_check=true" in out
    assert "integral=true" in out


def test_lines_output(capsys):
    code = run(["lines", "--poly", "X^(1,1) - X^(1,0) - X^(0,1) + 1"])
    assert code == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "monomial=(0,0)"
    assert out[1] == "factor 0: direction=(0,1) poly=X^(0,1) - 1"
    assert out[2] == "factor 1: direction=(1,0) poly=X^(1,0) - 1"
    assert out[3] == "remainder=1"
    assert out[4] == "directions=(0,1);(1,0)"


def test_nivat_scan_csv(cfg, capsys):
    path = cfg("cb.cfg", CHECKERBOARD)
    code = run(["nivat-scan", "--config", path, "--M", "2..3", "--N", "2..2",
                "--sample", "20"])
    assert code == 0
    assert capsys.readouterr().out == (
        "M,N,count,threshold,verdict\n"
        "2,2,2,4,Inconclusive\n"
        "3,2,2,6,Inconclusive\n")


def test_nivat_scan_thread_env(cfg, capsys, monkeypatch):
    path = cfg("b.cfg", BINARY_IRRATIONAL)
    monkeypatch.setenv("NIVATK_THREADS", "3")
    code = run(["nivat-scan", "--config", path, "--M", "2..3", "--N", "2..3",
                "--sample", "60"])
    assert code == 0
    threaded = capsys.readouterr().out
    monkeypatch.delenv("NIVATK_THREADS")
    run(["nivat-scan", "--config", path, "--M", "2..3", "--N", "2..3",
         "--sample", "60"])
    assert capsys.readouterr().out == threaded
    assert all(line.endswith("ExceedsMN")
               for line in threaded.strip().splitlines()[1:])


def test_nivat_scan_rejects_bad_thread_env(cfg, capsys, monkeypatch):
    path = cfg("cb.cfg", CHECKERBOARD)
    monkeypatch.setenv("NIVATK_THREADS", "0")
    code = run(["nivat-scan", "--config", path, "--M", "2..2", "--N", "2..2",
                "--sample", "10"])
    assert code == 2
    assert "NIVATK_THREADS" in capsys.readouterr().err


def test_bounds_from_poly(capsys):
    code = run(["bounds", "--poly", "X^(2,2) + 1", "--M", "5", "--N", "5"])
    assert code == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "bbox=(2,2)"
    assert out[1] == "cor-a=9"
    assert "best=cor-a value=9" in out


def test_bounds_two_directions(capsys):
    code = run(["bounds", "--v1", "(1,0)", "--v2", "(0,1)", "--M", "4", "--N", "5"])
    assert code == 0
    assert capsys.readouterr().out == "bound=20\n"


def test_bounds_needs_an_input(capsys):
    assert run(["bounds", "--M", "4", "--N", "5"]) == 2


def test_tile_verify(capsys):
    assert run(["tile-verify", "--tile", "tile { (0,0) (0,1) (1,0) }",
                "--lattice", "(3,0);(1,1)"]) == 0
    assert capsys.readouterr().out == "status=Valid\n"
    assert run(["tile-verify", "--tile", "tile { (0,0) (1,0) }",
                "--lattice", "(1,0);(0,1)"]) == 1
    assert capsys.readouterr().out == "status=Overlap witness=(0,0)\n"


def test_tile_search(capsys):
    code = run(["tile-search", "--tile", "tile { (0,0) (0,1) (1,0) }",
                "--max-index", "3"])
    assert code == 0
    out = capsys.readouterr().out.splitlines()
    assert out == ["found=true", "index=3", "lattice=(3,0);(1,1)",
                   "residues=(0,0)"]
    assert run(["tile-search", "--tile", "tile { (0) (1) (3) }",
                "--max-index", "9"]) == 0
    assert capsys.readouterr().out == "found=false\n"


def test_examples_all_pass(capsys):
    assert run(["examples"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 5
    for k, line in enumerate(lines, start=1):
        assert line.startswith(f"Example {k}: PASS")


def test_usage_errors(cfg, capsys):
    assert run(["bogus"]) == 2
    assert run(["complexity"]) == 2
    path = cfg("broken.cfg", "periodic lattice{(2,0)} values{")
    assert run(["complexity", "--config", path, "--shape", "2x2"]) == 2
    assert "error" in capsys.readouterr().err


def test_missing_file_is_usage_error(capsys):
    assert run(["complexity", "--config", "/nonexistent.cfg",
                "--shape", "2x2"]) == 2


def test_output_determinism(cfg, capsys):
    path = cfg("b.cfg", BINARY_IRRATIONAL)
    argv = ["nivat-scan", "--config", path, "--M", "2..4", "--N", "2..4",
            "--sample", "50"]
    run(argv)
    first = capsys.readouterr().out
    run(argv)
    assert capsys.readouterr().out == first

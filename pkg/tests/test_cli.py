import io
import json
import math
import subprocess
import sys

import numpy as np
import pytest

from conftest import GOLDEN
from homocover.cli import EXIT_HYPOTHESIS, EXIT_IO, EXIT_OK, EXIT_USAGE, EXIT_VERIFY, main
from homocover.covering import verify_cover
from homocover.geometry import Homothet
from homocover.inscribing import verify_inscribed
from homocover.instance import parse_instance, parse_number


def run(argv, stdin="", monkeypatch=None, capsys=None):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def cli(monkeypatch, capsys):
    return lambda argv, stdin="": run(argv, stdin, monkeypatch, capsys)


def golden(name):
    return (GOLDEN / name).read_text()


def same_report(a, b, tol=1e-9):
    """Structural equality with a float tolerance."""
    if isinstance(a, dict):
        return isinstance(b, dict) and list(a) == list(b) and all(same_report(a[k], b[k], tol) for k in a)
    if isinstance(a, list):
        return isinstance(b, list) and len(a) == len(b) and all(same_report(x, y, tol) for x, y in zip(a, b))
    if isinstance(a, float) and isinstance(b, (int, float)):
        return math.isclose(a, b, rel_tol=tol, abs_tol=tol)
    return a == b


class TestPipelines:
    def test_sharp_simplex_cover(self, cli):
        code, text, _ = cli(["gen", "--kind", "sharp-simplex", "--d", "2", "--N", "5"])
        assert code == EXIT_OK
        assert text == golden("sharp_simplex_d2_N5.json")
        code, out, _ = cli(["cover", "--theorem", "simplex", "--no-timing"], text)
        assert code == EXIT_OK
        report = json.loads(out)
        assert report["verification"]["verified"] is True
        assert report["tightness"]["ratio_rational"] == "16/11"
        assert same_report(report, json.loads(golden("report_cover_sharp_simplex.json")))

    def test_separable_balls(self, cli):
        code, out, _ = cli(["cover", "--theorem", "balls", "--no-timing", str(GOLDEN / "separable_two_disks.json")])
        assert code == EXIT_VERIFY
        report = json.loads(out)
        assert report["hypothesis"]["status"] == "violated"
        assert report["hypothesis"]["witness"]["offset"] == pytest.approx(50)
        assert same_report(report, json.loads(golden("report_cover_separable.json")))

    def test_render_sharp_simplex(self, cli):
        code, svg, _ = cli(["render", "--overlay", "body", str(GOLDEN / "sharp_simplex_d2_N5.json")])
        assert code == EXIT_OK
        assert svg.count('<polygon class="member"') == 11
        assert svg.count('<polygon class="body"') == 1
        assert svg == golden("render_sharp_simplex.svg")

    def test_shell_pipe(self):
        gen = subprocess.run(
            [sys.executable, "-m", "homocover", "gen", "--kind", "sharp-simplex", "--d", "2", "--N", "5"],
            capture_output=True, text=True, check=True,
        )
        cover = subprocess.run(
            [sys.executable, "-m", "homocover", "cover", "--theorem", "simplex", "--no-timing"],
            input=gen.stdout, capture_output=True, text=True,
        )
        assert cover.returncode == 0
        assert json.loads(cover.stdout)["tightness"]["ratio_rational"] == "16/11"


class TestDeterminism:
    @pytest.mark.parametrize(
        "argv",
        [
            ["cover", "--theorem", "simplex", "sharp_simplex_d2_N5.json"],
            ["cover", "--theorem", "balls", "separable_two_disks.json"],
            ["cover", "--theorem", "general", "two_disk_chain.json"],
            ["inscribe", "--k", "2", "depth2_grid.json"],
            ["check", "--k", "2", "depth2_grid.json"],
            ["sigma", "sharp_simplex_d2_N5.json"],
        ],
    )
    def test_byte_identical(self, cli, argv):
        argv = argv[:-1] + [str(GOLDEN / argv[-1]), "--no-timing"]
        first = cli(argv)
        assert cli(argv) == first

    def test_timing_present_by_default(self, cli):
        _, out, _ = cli(["sigma", str(GOLDEN / "two_disk_chain.json")])
        assert "elapsed_seconds" in json.loads(out)["timing"]

    @pytest.mark.parametrize("kind", ["chain", "depth-grid", "sharp-simplex"])
    def test_gen_deterministic(self, cli, kind):
        argv = ["gen", "--kind", kind, "--seed", "7", "--body", "hexagon"]
        assert cli(argv) == cli(argv)


class TestGoldenFiles:
    @pytest.mark.parametrize(
        "name,argv",
        [
            ("two_disk_chain.json", ["gen", "--kind", "chain", "--body", "disk", "--n", "2", "--collinear"]),
            ("sharp_simplex_d2_N5.json", ["gen", "--kind", "sharp-simplex", "--d", "2", "--N", "5"]),
            ("depth2_grid.json", ["gen", "--kind", "depth-grid", "--body", "disk", "--k", "2", "--per-row", "2"]),
        ],
    )
    def test_regenerated_byte_stable(self, cli, name, argv):
        code, out, _ = cli(argv)
        assert code == EXIT_OK and out == golden(name)


class TestReportsReverify:
    """Feed report outputs back through the library."""

    def test_cover(self, cli):
        path = GOLDEN / "two_disk_chain.json"
        _, out, _ = cli(["cover", "--theorem", "balls", str(path)])
        c = json.loads(out)["construction"]
        fam = parse_instance(path.read_text())
        cover = Homothet([parse_number(x, "t") for x in c["translation"]], parse_number(c["scale"], "s"))
        assert verify_cover(fam, cover)

    def test_inscribe(self, cli):
        path = GOLDEN / "depth2_grid.json"
        code, out, _ = cli(["inscribe", "--k", "2", str(path)])
        assert code == EXIT_OK
        c = json.loads(out)["construction"]
        fam = parse_instance(path.read_text())
        inner = Homothet([parse_number(x, "t") for x in c["translation"]], parse_number(c["scale"], "s"))
        assert verify_inscribed(inner, fam)

    def test_check_witness(self, cli):
        code, out, _ = cli(["check", str(GOLDEN / "separable_two_disks.json")])
        assert code == EXIT_HYPOTHESIS
        w = json.loads(out)["verdict"]["witness"]
        u = np.asarray(w["direction"])
        assert abs(u @ (0, 0)) + 1 < w["offset"] < u @ (100, 0) - 1


class TestCommands:
    def test_check_restricted(self, cli):
        code, out, _ = cli(["check", "--mode", "restricted", str(GOLDEN / "sharp_simplex_d2_N5.json")])
        assert code == EXIT_OK and json.loads(out)["verdict"]["status"] == "satisfied"

    def test_check_exact_on_sharp_family(self, cli):
        code, _, _ = cli(["check", str(GOLDEN / "sharp_simplex_d2_N5.json")])
        assert code == EXIT_HYPOTHESIS

    def test_sigma_methods_agree(self, cli):
        path = str(GOLDEN / "sharp_simplex_d2_N5.json")
        a = json.loads(cli(["sigma", path])[1])["sigma"]
        b = json.loads(cli(["sigma", "--method", "bisect", path])[1])["sigma"]
        assert a == pytest.approx(2, abs=1e-6) and b == pytest.approx(2, abs=1e-6)

    def test_render_overlays(self, cli):
        path = str(GOLDEN / "depth2_grid.json")
        code, svg, _ = cli(["render", "--overlay", "inscribe", "--k", "2", "--overlay", "minimal", path])
        assert code == EXIT_OK
        assert svg.count('class="member"') == 4
        assert 'class="inscribed"' in svg and 'class="minimal"' in svg

    def test_render_3d_rejected(self, cli):
        _, text, _ = cli(["gen", "--kind", "sharp-simplex", "--d", "3", "--N", "1"])
        code, _, err = cli(["render"], text)
        assert code == EXIT_USAGE and "planar" in err

    def test_out_file(self, cli, tmp_path):
        target = tmp_path / "inst.json"
        code, out, _ = cli(["gen", "--kind", "chain", "--n", "4", "--out", str(target)])
        assert code == EXIT_OK and out == ""
        assert len(parse_instance(target.read_text())) == 4

    def test_chain_scales(self, cli):
        _, text, _ = cli(["gen", "--kind", "chain", "--scales", "1,1/2,2.5"])
        fam = parse_instance(text)
        assert [m.scale for m in fam.members] == [1, parse_number("1/2", ""), 2.5]

    def test_usage_errors(self, cli):
        assert cli(["cover", "--theorem", "nope"])[0] == EXIT_USAGE
        assert cli([])[0] == EXIT_USAGE

    def test_missing_file(self, cli, tmp_path):
        code, _, err = cli(["cover", str(tmp_path / "absent.json")])
        assert code == EXIT_IO and "absent.json" in err

    def test_parse_error(self, cli):
        code, _, err = cli(["cover"], '{"dimension": 2}')
        assert code == EXIT_IO and "body" in err

    def test_wrong_theorem(self, cli):
        code, _, err = cli(["cover", "--theorem", "balls", str(GOLDEN / "sharp_simplex_d2_N5.json")])
        assert code == EXIT_USAGE and "ball" in err

    def test_grid_gap_too_small(self, cli):
        code, _, err = cli(["gen", "--kind", "depth-grid", "--k", "2", "--per-row", "2", "--row-gap", "10"])
        assert code == EXIT_USAGE and "row_gap" in err

    def test_lax(self, cli):
        doc = json.loads(golden("two_disk_chain.json"))
        doc["extra"] = 1
        text = json.dumps(doc)
        assert cli(["cover", "--no-timing"], text)[0] == EXIT_IO
        with pytest.warns(UserWarning):
            assert cli(["cover", "--lax", "--no-timing"], text)[0] == EXIT_OK

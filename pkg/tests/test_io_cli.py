import json
import os
import re
import subprocess
import sys

import pytest

from disc_tiler.catalog import NAMES, build_named, radius_generator
from disc_tiler.cli import main, resolve_eps
from disc_tiler.errors import DocumentError
from disc_tiler.io import parse_document, parse_multicurve, parse_tiling, serialize
from disc_tiler.kernel import Arc, Point, Segment
from disc_tiler.multicurve import Multicurve
from disc_tiler.svg import render_svg
from disc_tiler.validate import Tiling

from test_validate import perturbed_rot3


def numbers(doc):
    if isinstance(doc, dict):
        for v in doc.values():
            yield from numbers(v)
    elif isinstance(doc, list):
        for v in doc:
            yield from numbers(v)
    elif isinstance(doc, float):
        yield doc


class TestDocuments:
    @pytest.mark.parametrize("name", NAMES)
    def test_round_trip(self, name):
        t = build_named(name)
        back = parse_tiling(serialize(t))
        assert back == t
        assert serialize(back) == serialize(t)

    def test_bit_exact_numbers(self):
        text = serialize(build_named("hw12"))
        again = serialize(parse_tiling(text))
        a = list(numbers(json.loads(text)))
        b = list(numbers(json.loads(again)))
        assert [x.hex() for x in a] == [x.hex() for x in b]

    def test_multicurve_round_trip(self):
        m = Multicurve.from_edges([Segment(Point(0, 0), Point(1, 0)), Arc(Point(3, 0), 1.0, 0.0, 1.0)])
        back = parse_document(serialize(m))
        assert isinstance(back, Multicurve) and back.members == m.members

    def test_zero_sweep_names_edge(self):
        doc = json.loads(serialize(build_named("rot3")))
        doc["tiles"][1][2]["sweep"] = 0
        with pytest.raises(DocumentError) as exc:
            parse_document(json.dumps(doc, indent=1))
        assert exc.value.path == "tiles[1][2]"
        assert exc.value.line is not None

    def test_unknown_key(self):
        doc = json.loads(serialize(build_named("rot3")))
        doc["tiles"][0][0]["colour"] = "red"
        with pytest.raises(DocumentError, match="colour") as exc:
            parse_document(json.dumps(doc, indent=1))
        assert exc.value.path == "tiles[0][0].colour"

    def test_unknown_top_level_key(self):
        with pytest.raises(DocumentError, match="bogus"):
            parse_document('{"kind": "tiling", "tiles": [], "bogus": 1}')

    def test_malformed_json_reports_line(self):
        with pytest.raises(DocumentError) as exc:
            parse_document('{"kind": "tiling",\n "tiles": [\n}')
        assert exc.value.line == 3

    def test_schema_errors(self):
        bad = [
            '[]',
            '{"kind": "polygon", "tiles": []}',
            '{"kind": "tiling", "tiles": []}',
            '{"kind": "tiling", "tiles": [[{"type": "line"}]]}',
            '{"kind": "tiling", "tiles": [[{"type": "segment", "from": [0, 0]}]]}',
            '{"kind": "tiling", "tiles": [[{"type": "segment", "from": [0, "a"], "to": [1, 0]}]]}',
            '{"kind": "tiling", "eps": {"length": -1}, "tiles": [[]]}',
        ]
        for text in bad:
            with pytest.raises(DocumentError):
                parse_document(text)

    def test_open_boundary_is_not_a_tile(self):
        text = json.dumps({"kind": "tiling", "tiles": [[
            {"type": "segment", "from": [0, 0], "to": [1, 0]}]]})
        with pytest.raises(DocumentError, match="Jordan"):
            parse_document(text)

    def test_document_eps(self):
        doc = json.loads(serialize(build_named("rot2")))
        doc["eps"] = {"length": 1e-6}
        t = parse_tiling(json.dumps(doc))
        assert t.tol.length == 1e-6 and t.tol.area == 1e-7

    def test_tile_read_as_multicurve(self):
        tile = build_named("rot3").tiles[0]
        m = parse_multicurve(serialize(Tiling((tile,))))
        assert len(m.members) == len(tile.edges)
        with pytest.raises(DocumentError, match="single-tile"):
            parse_multicurve(serialize(build_named("rot3")))


class TestEps:
    def test_precedence(self):
        assert resolve_eps(1e-5, {"DISC_TILER_EPS": "1e-7"}) == 1e-5
        assert resolve_eps(None, {"DISC_TILER_EPS": "1e-7"}) == 1e-7
        assert resolve_eps(None, {}) is None

    def test_env_overrides_document(self, tmp_path, monkeypatch, capsys):
        doc = json.loads(serialize(build_named("rot3")))
        doc["eps"] = {"length": 1e-3}
        path = tmp_path / "t.json"
        path.write_text(json.dumps(doc))
        from disc_tiler import cli
        seen = []
        real = cli.validate
        monkeypatch.setattr(cli, "validate", lambda t: seen.append(t.tol.length) or real(t))
        monkeypatch.setenv("DISC_TILER_EPS", "1e-8")
        assert main(["verify", str(path)]) == 0
        assert main(["verify", str(path), "--eps", "1e-7"]) == 0
        monkeypatch.delenv("DISC_TILER_EPS")
        assert main(["verify", str(path)]) == 0
        assert seen == [1e-8, 1e-7, 1e-3]


class TestCommands:
    def test_catalog_list(self, capsys):
        assert main(["catalog", "list"]) == 0
        assert capsys.readouterr().out.split() == list(NAMES)

    def test_build_verify(self, tmp_path, capsys):
        out = tmp_path / "rot3.json"
        assert main(["build", "rot3", "-o", str(out)]) == 0
        assert main(["verify", str(out)]) == 0
        assert capsys.readouterr().out.strip().endswith("PASS")

    def test_verify_failure(self, tmp_path, capsys):
        path = tmp_path / "perturbed.json"
        path.write_text(serialize(perturbed_rot3()))
        assert main(["verify", str(path)]) == 1
        out = capsys.readouterr().out
        assert "coverage:   FAIL" in out or "disjoint:   FAIL" in out

    def test_verify_missing_file(self, tmp_path, capsys):
        assert main(["verify", str(tmp_path / "nope.json")]) == 2
        assert "error" in capsys.readouterr().err

    def test_verify_bad_document(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"kind": "tiling"}')
        assert main(["verify", str(path)]) == 2

    def test_analyze_petal12(self, tmp_path, capsys):
        path = tmp_path / "p.json"
        path.write_text(serialize(build_named("petal12")))
        assert main(["analyze", str(path)]) == 0
        out = capsys.readouterr().out
        assert "contains O: 6 of 12 (0 interior)" in out
        assert "symmetry order: 6" in out
        assert "interior triple points: 7" in out

    def test_build_rotgen(self, tmp_path, capsys):
        gen = tmp_path / "gen.json"
        gen.write_text(serialize(Multicurve((radius_generator().chain,))))
        out = tmp_path / "q.json"
        assert main(["build", "rotgen", "--gen", str(gen), "--n", "4", "-o", str(out)]) == 0
        assert len(parse_tiling(out.read_text())) == 4

    def test_build_rotgen_needs_arguments(self, capsys):
        assert main(["build", "rotgen"]) == 2
        assert "--gen" in capsys.readouterr().err

    def test_render(self, tmp_path):
        src = tmp_path / "r.json"
        src.write_text(serialize(build_named("rot3")))
        svg = tmp_path / "r.svg"
        assert main(["render", str(src), "-o", str(svg)]) == 0
        assert svg.read_text() == render_svg(build_named("rot3"))

    def test_equidecomp(self, tmp_path, capsys):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        a.write_text(serialize(Multicurve.from_edges([Arc(Point(0, 0), 1.0, 0.0, 1.0)])))
        b.write_text(serialize(Multicurve.from_edges([Arc(Point(5, 0), 1.0, 0.0, 0.3),
                                                      Arc(Point(9, 0), 1.0, 0.0, 0.7)])))
        assert main(["equidecomp", str(a), str(b)]) == 0
        assert "equidecomposable: true" in capsys.readouterr().out
        c = tmp_path / "c.json"
        c.write_text(serialize(Multicurve.from_edges([Segment(Point(0, 0), Point(1, 0))])))
        assert main(["equidecomp", str(a), str(c)]) == 1

    def test_scan_csv(self, capsys):
        assert main(["scan-arc-equation", "--kmax", "200", "--nmax", "2000", "--delta", "1e-9"]) == 0
        assert capsys.readouterr().out == "k,n,residual\n"
        assert main(["scan-arc-equation", "--kmax", "10", "--nmax", "50", "--delta", "0.05",
                     "--corrected"]) == 0
        rows = capsys.readouterr().out.splitlines()
        assert rows[0] == "k,n,residual" and len(rows) > 1

    def test_usage_errors_exit_2(self, capsys):
        for argv in (["bogus"], ["verify"], ["scan-arc-equation", "--kmax", "x", "--nmax", "1",
                                              "--delta", "1"], ["verify", "f", "--eps", "-1"]):
            with pytest.raises(SystemExit) as exc:
                main(argv)
            assert exc.value.code == 2

    def test_bad_env_eps(self, tmp_path, monkeypatch, capsys):
        path = tmp_path / "t.json"
        path.write_text(serialize(build_named("rot2")))
        monkeypatch.setenv("DISC_TILER_EPS", "zero")
        assert main(["verify", str(path)]) == 2

    def test_module_entry_point(self):
        proc = subprocess.run([sys.executable, "-m", "disc_tiler", "catalog", "list"],
                              capture_output=True, text=True, env={**os.environ})
        assert proc.returncode == 0 and proc.stdout.split() == list(NAMES)


class TestSvg:
    def test_element_counts(self):
        svg = render_svg(build_named("rot3"))
        assert svg.count("<path") == 3 and svg.count("<circle") == 1
        assert 'viewBox="-1.05 -1.05 2.1 2.1"' in svg
        assert render_svg(build_named("petal12")).count("<path") == 12

    def test_deterministic(self):
        assert render_svg(build_named("hw12")) == render_svg(build_named("hw12"))

    def test_native_commands(self):
        svg = render_svg(build_named("petal12"))
        d = re.findall(r'd="([^"]+)"', svg)[0]
        assert d.startswith("M ") and " A " in d and " L " in d and d.endswith("Z")

    def test_full_circle_tile(self):
        from disc_tiler.kernel import unit_disc
        svg = render_svg(Tiling((unit_disc(),)))
        assert svg.count(" A ") == 4

    def test_y_axis_flipped(self):
        from disc_tiler.validate import Tiling as T
        top = render_svg(T(build_named("rot2").tiles[:1]))
        # The upper half-disc's arc passes through (0, 1), drawn at y = -1.
        assert "A 1 1 0 0 0 0 -1" in top or "A 1 1 0 0 0 -1 0" in top

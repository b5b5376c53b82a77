import io
import json

import pytest

from gtilde.cli import build_parser, main
from gtilde.geometry import PointGn
from gtilde.linalg import Mat2
from gtilde.utils import encode_complex


def _run(capsys, *argv: str) -> tuple[int, dict]:
    status = main(list(argv))
    return status, json.loads(capsys.readouterr().out)


def _blob(**data) -> str:
    return json.dumps(data)


@pytest.fixture
def payload_file(tmp_path, j3_point, j3_lam0):
    path = tmp_path / "psi.json"
    text = _blob(point=j3_point.to_json(), lam0=encode_complex(j3_lam0))
    assert main(["interpolate", "-i", text, "-o", str(path), "--grid", "300"]) == 0
    return path


def test_parser_commands():
    parser = build_parser()
    ns = parser.parse_args(["eval", "--radius", "0.5", "--seed", "ff"])
    assert ns.radius == 0.5
    assert ns.seed == 255
    with pytest.raises(SystemExit):
        parser.parse_args(["membership", "--json", "--csv"])


def test_membership_origin(capsys):
    text = _blob(**PointGn.origin(3).to_json())
    status, out = _run(capsys, "membership", "-i", text)
    assert status == 0
    assert out["command"] == "membership"
    assert out["result"]["inside"]
    assert out["result"]["in_jn"]
    assert out["options"]["tol"] is None


def test_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(_blob(n=2, y=[1.5], q=0)))
    status, out = _run(capsys, "membership")
    assert status == 0
    assert not out["result"]["inside"]


def test_phinorm(capsys, j3_point):
    status, out = _run(capsys, "phinorm", "-i", _blob(point=j3_point.to_json()))
    assert status == 0
    assert [e["j"] for e in out["result"]["norms"]] == [1, 2]
    assert out["result"]["argmax_j"] in (1, 2)


def test_schwarz(capsys, j3_point, j3_lam0):
    text = _blob(point=j3_point.to_json(), lam0=encode_complex(j3_lam0), j=1)
    status, out = _run(capsys, "schwarz", "-i", text)
    assert status == 0
    assert out["result"]["feasible"]
    assert out["result"]["q0_norm"] <= 1 + 1e-9


def test_schwarz_hypothesis_fails(capsys):
    point = PointGn(3, (0.1, 0.3), 0.01).to_json()
    status, out = _run(capsys, "schwarz", "-i", _blob(point=point, lam0=0.9))
    assert status == 2
    assert out["error"]["code"] == "HypothesisViolated"


@pytest.mark.parametrize(
    "argv",
    [
        ["membership", "-i", "{not json"],
        ["membership", "-i", "/no/such/file.json"],
        ["membership", "-i", '{"n": 3, "y": [0]}'],
        ["schwarz", "-i", _blob(**PointGn.origin(3).to_json(), lam0=0.5, j=3)],
    ],
)
def test_parse_errors(capsys, argv):
    status, out = _run(capsys, *argv)
    assert status == 3
    assert out["error"]["code"] == "ParseError"


def test_config_errors(capsys):
    text = _blob(**PointGn.origin(2).to_json())
    status, out = _run(capsys, "membership", "-i", text, "--csv")
    assert status == 2
    assert out["error"]["code"] == "ConfigError"
    status, out = _run(capsys, "membership", "-i", text, "--tol", "-1")
    assert status == 2


def test_interpolate_and_verify(capsys, payload_file):
    stored = json.loads(payload_file.read_text())
    assert stored["result"]["verification"]["passed"]
    assert stored["options"]["grid"] == 300

    status, out = _run(capsys, "verify", "-i", str(payload_file))
    assert status == 0
    assert out["result"]["passed"]
    assert out["result"]["identical"]
    assert out["result"]["reload_identical"]


def test_verify_detects_tampering(capsys, payload_file):
    stored = json.loads(payload_file.read_text())
    stored["result"]["verification"]["passed"] = False
    status, out = _run(capsys, "verify", "-i", json.dumps(stored))
    assert status == 2
    assert not out["result"]["identical"]


def test_eval_csv(capsys, payload_file):
    argv = ["eval", "-i", str(payload_file), "--csv", "--grid", "20"]
    assert main([*argv, "--radius", "0.5"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("lam_re,lam_im,y1_re,y1_im,y2_re")
    assert lines[0].endswith("margin,norm_1")
    assert len(lines) == 21


def test_characterize(capsys, payload_file):
    status, out = _run(capsys, "characterize", "-i", str(payload_file))
    assert status == 0
    assert out["result"]["passed"]


def test_mu_matrix(capsys):
    text = _blob(matrix=Mat2.diag(0.5, -0.25).to_json())
    status, out = _run(capsys, "mu", "-i", text)
    assert status == 0
    assert out["result"]["value"] == 0.5
    assert out["result"]["full"] == pytest.approx(0.5)


def test_mu_point(capsys, j3_point):
    status, out = _run(capsys, "mu", "-i", _blob(point=j3_point.to_json()))
    assert status == 0
    assert out["result"]["inside"]
    assert len(out["result"]["matrices"]) == 1


def test_distance(capsys, j3_point):
    status, out = _run(capsys, "distance", "-i", _blob(point=j3_point.to_json()))
    assert status == 0
    assert out["result"]["equal"]
    assert out["result"]["candidate_max"] <= out["result"]["lower"] + 1e-12


def test_verbose_diagnostics(capsys, j3_point):
    point = _blob(point=j3_point.to_json())
    status, out = _run(capsys, "distance", "-i", point, "-v")
    assert status == 0
    assert isinstance(out["diagnostics"], list)

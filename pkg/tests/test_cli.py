import json

from silpath.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_ball_json(capsys):
    code, out, _ = run(capsys, "ball", "--type", "A", "--rank", "1", "--lambda", "1", "--depth", "1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert len(data["nodes"]) == 3
    assert data["cartan"]["type"] == "A"
    node = data["nodes"][0]
    assert {"id", "payload", "wt", "eps", "phi", "boundary"} <= set(node)


def test_ball_depth_zero_and_dot(capsys):
    code, out, _ = run(capsys, "ball", "--type", "A", "--rank", "1", "--lambda", "1", "--depth", "0")
    assert code == 0 and len(json.loads(out)["nodes"]) == 1
    code, out, _ = run(capsys, "ball", "--type", "A", "--rank", "2", "--lambda", "1,0", "--depth", "2", "--format", "dot")
    assert code == 0 and out.startswith("digraph")
    assert 'label="0"' in out


def test_ball_deterministic(capsys, tmp_path):
    args = ["ball", "--type", "A", "--rank", "2", "--lambda", "1,1", "--depth", "3"]
    outs = []
    for k in range(2):
        f = tmp_path / f"b{k}.json"
        assert main(args + ["--output", str(f)]) == 0
        outs.append(f.read_bytes())
    assert outs[0] == outs[1]


def test_config_file(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("type = A\nrank = 1\nlambda = 1\n# comment\ndepth = 1\n")
    code, out, _ = run(capsys, "ball", "--config", str(cfg))
    assert code == 0 and len(json.loads(out)["nodes"]) == 3
    code, out, _ = run(capsys, "ball", "--config", str(cfg), "--depth", "0")
    assert len(json.loads(out)["nodes"]) == 1


def test_exit_codes(capsys):
    assert run(capsys, "ball", "--type", "E", "--rank", "5", "--lambda", "1,0,0,0,0")[0] == 2
    assert run(capsys, "ball", "--type", "A", "--rank", "1")[0] == 2
    assert run(capsys, "ball", "--type", "A", "--rank", "1", "--lambda", "x")[0] == 3
    assert run(capsys, "ball", "--type", "A", "--rank", "1", "--lambda", "1", "--seed", "SiLS{bad}")[0] == 3
    assert run(capsys, "query", "--type", "A", "--rank", "1", "edges", "nope")[0] == 3
    assert run(capsys, "ball", "--type", "A", "--rank", "1", "--lambda", "1", "--depth", "-1")[0] == 2


def test_query_edges(capsys):
    code, out, _ = run(capsys, "query", "--type", "A", "--rank", "1", "edges", "w=[] t=[0]")
    assert code == 0 and out.strip() == "α -> w=[1] t=[0]"


def test_query_path(capsys):
    code, out, _ = run(capsys, "query", "--type", "A", "--rank", "1", "--lambda", "2", "path", "w=[] t=[0]", "w=[] t=[1]", "1/2")
    assert code == 0 and out.splitlines()[0] == "2 edges"
    code, out, _ = run(capsys, "query", "--type", "A", "--rank", "1", "--lambda", "2", "path", "w=[] t=[1]", "w=[] t=[0]", "1/2")
    assert code == 1 and "no path" in out


def test_query_char_project_component(capsys):
    code, out, _ = run(capsys, "query", "--type", "A", "--rank", "1", "--lambda", "1", "--depth", "1", "char")
    assert out.strip() == "ϖ_1:1, −ϖ_1:1, −ϖ_1+δ:1"
    code, out, _ = run(capsys, "query", "--type", "A", "--rank", "1", "--lambda", "2", "project", "SiLS{w=[] t=[1] @ 1/2; w=[] t=[0] @ 1}")
    assert code == 0 and out.strip() == "PL{2ϖ_1−2δ @ 1/2; 2ϖ_1 @ 1}"
    code, out, _ = run(capsys, "query", "--type", "A", "--rank", "1", "--lambda", "2", "component", "SiLS{w=[1] t=[0] @ 1/2; w=[] t=[0] @ 1}")
    assert code == 0 and out.strip() == "SiLS{w=[] t=[0] @ 1}"


def test_verify_small_suites(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "translation", "--type", "A", "--rank", "1", "--lambda", "2")
    assert code == 0 and out.startswith("PASS")
    code, out, _ = run(capsys, "verify", "--suite", "appendix", "--type", "A", "--rank", "1")
    assert code == 0
    code, out, _ = run(capsys, "verify", "--suite", "iso", "--type", "A", "--rank", "1", "--lambda", "1", "--depth", "4")
    assert code == 0
    assert run(capsys, "verify", "--suite", "iso", "--type", "A", "--rank", "1")[0] == 2

import io
import json
import os
import tempfile

from main import run
from src.diagram.corpus import cycle_diagram


def _run(argv):
    out = io.StringIO()
    code = run(argv, out=out)
    return code, out.getvalue()


def _with_json(data, argv_tail):
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "input.json")
        with open(path, 'w', encoding='utf-8') as f:
            json.dump(data, f)
        return _run([a.replace("{path}", path) for a in argv_tail])


def test_cluster_count():
    assert _run(["clusters", "--type", "A2", "--count"]) == (0, "5\n")
    assert _run(["clusters", "--type", "D", "--n", "4", "--count"]) == (0, "50\n")


def test_exchange_graph_count():
    assert _run(["exchange-graph", "--type", "A3", "--count"]) == (0, "14\n")


def test_mutate_matrix_file():
    data = {"rows": [[0, 1, 0], [-1, 0, 1], [0, -1, 0]]}
    code, text = _with_json(data, ["mutate", "--matrix", "{path}", "--at", "2"])
    assert code == 0
    assert json.loads(text)["rows"] == [[0, -1, 1], [1, 0, -1], [-1, 1, 0]]
    assert _with_json(data, ["mutate", "--matrix", "{path}", "--at", "4"])[0] == 2


def test_classify_text():
    code, text = _with_json(cycle_diagram([2, 2, 1]).to_dict(), ["classify", "--diagram", "{path}"])
    assert (code, text.strip()) == (0, "B3")
    code, text = _with_json(cycle_diagram([2, 2, 2]).to_dict(), ["classify", "--diagram", "{path}", "--format", "json"])
    assert code == 0
    assert json.loads(text) == {"type": "2-infinite", "finite": False}


def test_unrealizable_mutation_exits_one():
    code, _ = _with_json(cycle_diagram([2, 2, 2]).to_dict(), ["mutate", "--diagram", "{path}", "--at", "1"])
    assert code == 1


def test_variables_text():
    code, text = _run(["variables", "--type", "A2", "--format", "text"])
    assert code == 0
    assert "(1+x2)/x1" in text


def test_bad_input_exits_two():
    assert _run(["mutate", "--matrix", "/nonexistent/matrix.json", "--at", "1"])[0] == 2
    assert _run(["clusters", "--type", "A"])[0] == 2
    assert _run(["clusters", "--type", "A3", "--cap", "0"])[0] == 2
    assert _run(["verify", "nosuchsuite"])[0] == 2


def test_verify_orders():
    code, text = _run(["verify", "orders"])
    assert code == 0
    report = json.loads(text)
    assert report["passed"] and report["counterexample"] is None


def test_verify_with_type_options():
    for argv in (["verify", "plucker", "--type", "C", "--n", "4"], ["verify", "loops", "--type", "A3"]):
        code, text = _run(argv)
        assert code == 0
        report = json.loads(text)
        assert report["passed"] and report["checked"] > 0


def test_verify_text_summary():
    code, text = _run(["verify", "loops", "--type", "A3", "--format", "text"])
    assert code == 0
    assert text.startswith("loops: pass")
    assert "A3" in text and "failed" in text


def test_seed_file_with_coefficients():
    seed = {
        "matrix": {"rows": [[0, 1], [-1, 0]]},
        "semifield": ["p1", "p2"],
        "coeff_pairs": [[[1, 0], [0, 0]], [[0, 1], [0, 0]]],
    }
    assert _with_json(seed, ["variables", "--seed", "{path}", "--count"]) == (0, "5\n")
    assert _with_json(seed, ["exchange-graph", "--seed", "{path}", "--count"]) == (0, "5\n")
    code, text = _with_json(seed, ["variables", "--seed", "{path}", "--format", "text"])
    assert code == 0
    assert "p1" in text
    code, _ = _with_json({"matrix": {"rows": [[0, 1], [1, 0]]}}, ["variables", "--seed", "{path}"])
    assert code == 1


if __name__ == '__main__':
    tests = [(name, f) for name, f in sorted(globals().items()) if name.startswith('test_') and callable(f)]
    failed = 0
    for name, f in tests:
        try:
            f()
            print(f"  ok    {name}")
        except Exception as e:
            failed += 1
            print(f"  FAIL  {name}: {e}")
    print(f"\n{len(tests) - failed}/{len(tests)} tests passed")

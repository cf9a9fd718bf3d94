import io
import json

import pytest

from lrreduce import cli


def call(*argv):
    out = io.StringIO()
    code = cli.run(list(argv), out=out)
    return code, out.getvalue()


def call_json(*argv):
    code, text = call(*argv, "--json")
    return code, json.loads(text)


A4_FACE = ["--type", "A4", "--I", "1,2", "--words", "s3s4", "s4s2s3", "--w", "s2s3s4s2s3"]
A4_PROB = ["--weights", "12,2,7,4", "3,6,4,15", "--target", "22,1,1,7"]
REPORT_FIELDS = {"group", "mode", "face", "verdicts", "mult_big", "mult_small", "elapsed_ms"}


def test_gl_to_sl_examples():
    assert cli.gl_to_sl((32, 28, 26, 16, 10, 0)) == (4, 2, 10, 6, 10)
    assert cli.gl_to_sl((21, 16, 13, 12, 9, 5, 0)) == (5, 3, 1, 3, 4, 5)
    with pytest.raises(cli.InputError):
        cli.gl_to_sl((1, 2, 0))


def test_parse_helpers():
    assert cli.parse_vector("(4,2, 10)") == (4, 2, 10)
    assert cli.parse_index_set("1,2,4,5") == [1, 2, 4, 5]
    assert cli.parse_index_set("{}") == []
    with pytest.raises(cli.InputError):
        cli.parse_index_set("1,x")


def test_mult():
    code, rep = call_json("mult", "--type", "A4", *A4_PROB)
    assert code == 0 and rep["mult_big"] == 2
    assert REPORT_FIELDS <= set(rep)


def test_mult_gl_agrees_with_sl():
    gl = ["--weights", "32,28,26,16,10,0", "32,22,18,6,2,0", "--target", "60,51,28,26,25,2"]
    code, rep = call_json("mult", "--type", "A5", "--mode", "gl", *gl)
    sl = ["--weights", "4,2,10,6,10", "10,4,12,4,2", "--target", "9,23,2,1,23"]
    code2, rep2 = call_json("mult", "--type", "A5", *sl)
    assert code == code2 == 0
    assert rep["mult_big"] == rep2["mult_big"] == 12


def test_check_face_ok_and_mismatch():
    code, rep = call_json("check-face", *A4_FACE)
    assert code == 0 and rep["verdicts"]["cond_iii"]
    assert rep["face"]["codimension"] == 2
    code, rep = call_json("check-face", "--type", "C5", "--I", "1,2,3,4", "--words", "s5", "s4s5", "--w", "s3s4s5")
    assert code == 1 and rep["verdicts"]["intersection"] == 2
    code, rep = call_json("check-face", *A4_FACE, "--weights", "12,2,7,4", "3,6,4,15", "--target", "23,1,1,7")
    assert code == 1 and rep["verdicts"]["on_face"] is False


def test_reduce_example():
    code, rep = call_json("reduce", *A4_FACE, *A4_PROB)
    assert code == 0
    assert rep["mult_big"] == rep["mult_small"] == 2
    assert rep["reduced"]["factors"] == ["(12,9)", "(9,19)"] and rep["reduced"]["target"] == "(24,7)"
    assert REPORT_FIELDS <= set(rep)


def test_reduce_gl():
    code, rep = call_json(
        "reduce", "--type", "A5", "--mode", "gl", "--I", "1,2,4,5", "--words", "s3", "s3", "--w", "s4s3",
        "--weights", "32,28,26,16,10,0", "32,22,18,6,2,0", "--target", "60,51,28,26,25,2",
    )
    assert code == 0 and rep["mult_big"] == rep["mult_small"] == 12
    assert rep["reduced_gl"]["target"] == "(60,51,25|28,26,2)"


def test_reduce_off_face_is_input_error():
    code, rep = call_json("reduce", *A4_FACE, "--weights", "12,2,7,4", "3,6,4,15", "--target", "23,1,1,7")
    assert code == 2 and "not on the face" in rep["detail"]


@pytest.mark.parametrize("sampler", ["box", "semigroup"])
def test_reduce_samples(sampler):
    code, rep = call_json("reduce", *A4_FACE, "--samples", "5", "--sampler", sampler, "--box", "2", "--seed", "3")
    assert code == 0 and rep["verdicts"]["all_equal"] and len(rep["samples"]) == 5
    assert rep["sampler"] == sampler


def test_gen_rules():
    code, rep = call_json("gen-rules", "--type", "A4", "--words", "s3s4s2", "s4s2s3", "--w", "s2s3s4s2s3s2", "--I", "1,2")
    assert code == 0 and rep["verdicts"]["count"] == 1
    A4 = cli.build_root_system("A4")
    assert [A4.weyl(x) for x in rep["rules"][0]["ws"]] == [A4.weyl("s3s4"), A4.weyl("s4s2s3")]
    code, rep = call_json("gen-rules", "--type", "A3", "--words", "s1", "s1s2", "--w", "s1s2s1")
    assert code == 0 and rep["verdicts"]["count"] == 8
    code, _ = call_json("gen-rules", "--type", "A2", "--words", "s1", "s1", "--w", "s1s2")
    assert code == 2


def test_schubert_command():
    code, rep = call_json("schubert", "--type", "C5", "--words", "s5", "s4s5", "--w", "s5s4s5")
    assert code == 0
    assert rep["product"] == [["s3s4s5", "2"], ["s5s4s5", "1"]]
    assert rep["verdicts"]["intersection"] == 1


@pytest.mark.parametrize("argv", [
    ["mult", "--type", "Q3", "--weights", "1,1", "--target", "1,1"],
    ["mult", "--type", "A2", "--weights", "1,-1", "--target", "1,1"],
    ["mult", "--type", "A2", "--weights", "1,x", "--target", "1,1"],
    ["mult", "--type", "A2", "--weights", "1,1,1", "--target", "1,1"],
    ["mult", "--type", "A2", "--mode", "gl", "--weights", "1,2,0", "--target", "3,0,0"],
    ["check-face", "--type", "A4", "--I", "1,2", "--words", "s3s9", "--w", "s3"],
    ["frobnicate"],
    [],
])
def test_input_errors(argv):
    assert call(*argv)[0] == 2


def test_resource_cap():
    code, rep = call_json("schubert", "--type", "A4", "--words", "s1", "s2", "--max-weyl-size", "10")
    assert code == 3 and rep["error"] == "resource cap exceeded"


def test_no_timing_is_byte_stable():
    runs = [call("reduce", *A4_FACE, *A4_PROB, "--json", "--no-timing")[1] for _ in range(2)]
    assert runs[0] == runs[1]
    assert json.loads(runs[0])["elapsed_ms"] is None


def test_text_output():
    code, text = call("mult", "--type", "A4", *A4_PROB)
    assert code == 0 and "mult_big: 2" in text


def test_replay_corpus_type_filter():
    code, rep = call_json("replay-corpus", "--type", "A", "--no-timing")
    assert code == 0 and rep["total"] == 6
    assert rep["multiplicities"] == [10, 12, 24, 108, 196, 2]
    code, rep = call_json("replay-corpus", "--type", "G2")
    assert code == 2 and rep["status"] == "no fixtures selected"


def test_replay_corpus_full():
    code, rep = call_json("replay-corpus")
    assert code == 0 and rep["status"] == "ok"
    assert rep["multiplicities"] == [10, 12, 24, 108, 196, 2, 514, 31]
    assert all(r["ok"] for r in rep["results"])


def test_replay_corpus_detects_mismatch(tmp_path):
    fixtures = cli.load_corpus()
    bad = dict(fixtures[5], expected_mult=3)
    path = tmp_path / "corpus.json"
    path.write_text(json.dumps({"version": 1, "fixtures": [bad]}))
    code, rep = call_json("replay-corpus", "--corpus", str(path))
    assert code == 1 and rep["status"] == "mismatch"

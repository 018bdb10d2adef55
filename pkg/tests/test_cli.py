import json
import random
from fractions import Fraction

from lbforge import serialize
from lbforge.cli import main
from lbforge.liealg import build_sl
from lbforge.pairing import CaseSpec
from lbforge.ratfun import BivarRat, bivar, poly2
from lbforge.rmatrix import SpectralTensor2, build_r, catalog_rkind
from lbforge.sparse import Sparse

ALG = build_sl(2)


def run(argv, capsys=None):
    code = main(argv)
    return code


def build_file(tmp_path, case="I:two-points:1,2", r="dj", algebra="A:2"):
    out = tmp_path / "r.json"
    code = main(
        ["build", "--algebra", algebra, "--case", case, "--r", r, "--out", str(out)]
    )
    assert code == 0
    return out


# -- round trips --------------------------------------------------------------

def test_round_trip_exact():
    rng = random.Random(5)
    tensor = SpectralTensor2()
    for _ in range(6):
        i, j = rng.randrange(3), rng.randrange(3)
        num = poly2(
            {
                (rng.randrange(3), rng.randrange(3)): Fraction(
                    rng.randint(-9, 9), rng.randint(1, 7)
                )
            }
        )
        tensor.add_entry((i, j), bivar(num, rng.randrange(2)))
    doc = serialize.tensor_to_doc(ALG, tensor)
    _, back = serialize.tensor_from_doc(json.loads(json.dumps(doc)))
    assert back == tensor


def test_round_trip_all_families(tmp_path):
    for text in [
        "I:two-points:1,2",
        "I:double-pole",
        "I:simple-pole",
        "I:constant",
        "II:simple-pole",
        "II:constant",
        "III:constant",
    ]:
        spec = CaseSpec.parse(text)
        r = build_r(ALG, spec, catalog_rkind(ALG, spec))
        doc = serialize.tensor_to_doc(ALG, r)
        _, back = serialize.tensor_from_doc(doc)
        assert back == r


def test_serialization_is_byte_stable(tmp_path):
    a = build_file(tmp_path, "II:constant", "dj")
    b = tmp_path / "again.json"
    main(["build", "--case", "II:constant", "--r", "dj", "--out", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_wpresentation_round_trip():
    from lbforge.lagrangian import catalog_w0

    for text in ["I:two-points:1,2", "II:simple-pole", "III:constant"]:
        w = catalog_w0(ALG, CaseSpec.parse(text))
        doc = json.loads(json.dumps(serialize.wpresentation_to_doc(ALG, w)))
        back = serialize.wpresentation_from_doc(doc, ALG)
        assert back.spec == w.spec
        assert back.tail == w.tail
        assert len(back.head) == len(w.head)
        for a, b in zip(back.head, w.head):
            assert a.loop == b.loop and a.fin == b.fin and a.eps == b.eps


def test_den_scale_folds_on_parse():
    doc = {
        "algebra": {"type": "A", "rank": 2},
        "basis": list(ALG.basis),
        "entries": [
            {
                "i": "E(1,2)",
                "j": "F(1,2)",
                "num": [[0, 0, "3"]],
                "den_power": 1,
                "den_scale": "3/2",
            }
        ],
    }
    _, r = serialize.tensor_from_doc(doc)
    assert r.entries[(0, 1)] == BivarRat(Sparse({(0, 0): Fraction(2)}), 1)


# -- build --------------------------------------------------------------------

def test_build_writes_vu_denominators(tmp_path):
    out = build_file(tmp_path)
    doc = json.loads(out.read_text())
    assert doc["algebra"] == {"type": "A", "rank": 2}
    assert all(e["den_power"] in (0, 1) for e in doc["entries"])
    assert any(e["den_power"] == 1 for e in doc["entries"])
    assert all(e["den_scale"] == "1" for e in doc["entries"])


def test_build_rejects_illegal_case(capsys):
    code = main(["build", "--case", "II:two-points:1,2", "--r", "dj"])
    assert code == 2
    assert "degree at most 1" in capsys.readouterr().err


def test_build_kind_mismatch_is_config_error():
    assert main(["build", "--case", "I:constant", "--r", "dj"]) == 2


def test_build_defaults_constant_part(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["build", "--case", "III:constant", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    # zero skew part: pure uv/(v-u) Omega, so three entries on sl_2
    assert len(doc["entries"]) == 3


def test_build_jordanian_and_file_parts(tmp_path):
    out = build_file(tmp_path, "I:double-pole", "jordanian:1,2")
    doc = json.loads(out.read_text())
    assert any(e["den_power"] == 0 for e in doc["entries"])
    # feed a constant tensor back through file:
    const = {
        "entries": [
            {"i": "E(1,2)", "j": "F(1,2)", "c": "1"},
            {"i": "H(1)", "j": "H(1)", "c": "1/4"},
        ]
    }
    path = tmp_path / "const.json"
    path.write_text(json.dumps(const))
    out2 = tmp_path / "r2.json"
    code = main(
        [
            "build",
            "--case",
            "I:two-points:1,2",
            "--r",
            f"file:{path}",
            "--out",
            str(out2),
        ]
    )
    assert code == 0
    ref = build_file(tmp_path, "I:two-points:1,2", "dj")
    assert out2.read_text() == ref.read_text()


# -- verify -------------------------------------------------------------------

def test_verify_ok(tmp_path):
    out = build_file(tmp_path)
    assert main(["verify", "--in", str(out)]) == 0


def test_verify_all_checks(tmp_path):
    out = build_file(tmp_path)
    code = main(
        [
            "verify",
            "--in",
            str(out),
            "--case",
            "I:two-points:1,2",
            "--checks",
            "cybe,skew,duality,delta-axioms,equiv",
            "--degree",
            "4",
            "--sweep-degree",
            "1",
        ]
    )
    assert code == 0


def test_verify_corrupted_coefficient(tmp_path, capsys):
    out = build_file(tmp_path)
    doc = json.loads(out.read_text())
    doc["entries"][0]["num"][0][2] = "9/7"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    code = main(["verify", "--in", str(bad), "--out", str(tmp_path / "rep.json")])
    assert code == 1
    report = json.loads((tmp_path / "rep.json").read_text())
    assert not report["pass"]
    failing = [c for c in report["checks"] if not c["pass"]]
    assert failing and all("witness" in c for c in failing)


def test_verify_malformed_json(tmp_path, capsys):
    bad = tmp_path / "garbage.json"
    bad.write_text("{broken")
    assert main(["verify", "--in", str(bad)]) == 3


def test_verify_missing_file():
    assert main(["verify", "--in", "/nonexistent/r.json"]) == 3


def test_verify_duality_needs_case(tmp_path):
    out = build_file(tmp_path)
    assert main(["verify", "--in", str(out), "--checks", "duality"]) == 2


def test_verify_unknown_check(tmp_path):
    out = build_file(tmp_path)
    assert main(["verify", "--in", str(out), "--checks", "nope"]) == 2


# -- dualbasis ----------------------------------------------------------------

def test_dualbasis_output(tmp_path, capsys):
    out = tmp_path / "duals.json"
    code = main(
        ["dualbasis", "--case", "I:simple-pole", "--degree", "2", "--out", str(out)]
    )
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["case"] == "I:simple-pole"
    h_dual = next(
        d for d in doc["duals"] if d["i"] == "H(1)" and d["degree"] == 0
    )
    assert h_dual["dual"]["loop"] == [["H(1)", -1, "1/2"], ["H(1)", 0, "-1/4"]]


def test_dualbasis_degree_cap(tmp_path, monkeypatch):
    monkeypatch.setenv("LBFORGE_MAX_DEGREE", "4")
    assert main(["dualbasis", "--case", "I:constant", "--degree", "6"]) == 2
    assert main(["dualbasis", "--case", "I:constant", "--degree", "3"]) == 0


# -- equiv / table ------------------------------------------------------------

def test_equiv_frozen(capsys):
    assert main(["equiv", "1", "2", "3", "5"]) == 0
    out = capsys.readouterr().out
    assert "p=15/4" in out and "q=-1/4" in out and "C=2" in out and "equal" in out


def test_equiv_identity(capsys):
    assert main(["equiv", "1", "2", "1", "2"]) == 0
    out = capsys.readouterr().out
    assert "p=1" in out and "q=0" in out and "C=1" in out


def test_equiv_degenerate():
    assert main(["equiv", "1", "1", "3", "5"]) == 2


def test_table(capsys):
    assert main(["table", "I", "minus-alpha-max"]) == 0
    assert capsys.readouterr().out.strip() == "2"
    assert main(["table", "III", "simple", "2"]) == 0
    assert capsys.readouterr().out.strip() == "impossible"
    assert main(["table", "II", "simple", "3"]) == 0
    assert capsys.readouterr().out.strip() == "0"


def test_bad_algebra():
    assert main(["build", "--algebra", "B:2", "--case", "I:constant", "--r", "zero"]) == 2
    assert main(["build", "--algebra", "A:1", "--case", "I:constant", "--r", "zero"]) == 2

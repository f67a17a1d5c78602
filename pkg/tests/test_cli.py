import json

import pytest

from veritas import calculus as C
from veritas import syntax as S
from veritas.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def liar_pool(tmp_path):
    p = tmp_path / "liar.txt"
    p.write_text("numeral_bound 0\n(= 0 0)\n(diag (not (Tr (self))))\n(Tr (quote (= 0 0)))\n")
    return str(p)


def test_ord_nsum(capsys):
    code, out, _ = run(capsys, "ord", "nsum", "e0", "w")
    assert code == 0 and out.strip() == "φ₁0 + ω"


def test_ord_cmp_json(capsys):
    code, out, _ = run(capsys, "--json", "ord", "cmp", "1", "e0")
    assert code == 0 and json.loads(out)["result"] == "LT"


def test_ord_bad_input(capsys):
    code, _, err = run(capsys, "ord", "phi", "1")
    assert code == 2 and "error" in err
    assert run(capsys, "ord", "show", "(phi 0")[0] == 2


def test_lfp_liar_undetermined(capsys, liar_pool):
    code, out, _ = run(capsys, "lfp", "--scheme", "mc", "--universe", liar_pool)
    assert code == 0
    assert "stabilized" in out
    assert "undetermined: (diag (not (Tr (self))))" in out


def test_lfp_verbose_deltas(capsys, liar_pool):
    _, out, _ = run(capsys, "-v", "lfp", "--universe", liar_pool)
    assert "stage 1: +" in out


def test_lfp_figure(capsys, tmp_path, liar_pool):
    pytest.importorskip("matplotlib")
    png = tmp_path / "stages.png"
    code, _, _ = run(capsys, "-q", "lfp", "--universe", liar_pool, "--figure", str(png))
    assert code == 0 and png.read_bytes()[:4] == b"\x89PNG"


def test_output_is_deterministic(capsys, liar_pool):
    first = run(capsys, "--json", "lfp", "--universe", liar_pool)[1]
    second = run(capsys, "--json", "lfp", "--universe", liar_pool)[1]
    assert first == second
    rec = json.loads(first)
    assert set(rec) == {"scheme", "stages", "fixed_point", "undetermined"}


def test_jump_with_extension(capsys, tmp_path, liar_pool):
    ext = tmp_path / "x.txt"
    ext.write_text("(= 0 0)\n")
    code, out, _ = run(capsys, "--json", "jump", "--scheme", "vb", "--universe", liar_pool, "--ext", str(ext))
    assert code == 0
    assert "(Tr (quote (= 0 0)))" in json.loads(out)["jump"]


def test_axioms(capsys):
    code, out, _ = run(capsys, "axioms", "--theory", "VFM")
    assert code == 0 and "0 failure(s)" in out
    code, _, _ = run(capsys, "axioms", "--theory", "VFM", "--scheme", "vb")
    assert code == 1


def test_check_planted_bad_index(capsys, tmp_path):
    m = S.encode(S.parse("(= 0 0)"))
    g = S.parse("(= 2 2)")
    d = C.node("Cons", [g], [C.node("Ax1", [g, S.Tr(S.Num(m))]),
                             C.node("Ax1", [g, S.Tr(S.Num(C.neg_code(m)))])],
               side={"n": m}, i=0)
    f = tmp_path / "proof.d"
    f.write_text(C.dumps(d))
    code, out, _ = run(capsys, "check", "--system", "I", str(f))
    assert code == 1 and "i = 1" in out
    f.write_text(C.dumps(C.weaken(d, i=1), "I"))
    assert run(capsys, "check", str(f))[0] == 0


def test_check_missing_system_or_file(capsys, tmp_path):
    f = tmp_path / "p.d"
    f.write_text(C.dumps(C.node("Ax1", [S.parse("(= 0 0)")])))
    assert run(capsys, "check", str(f))[0] == 2
    assert run(capsys, "check", "--system", "I", str(tmp_path / "none"))[0] == 2
    f.write_text("not json")
    assert run(capsys, "check", "--system", "I", str(f))[0] == 2


def test_embed_check_cutelim(capsys, tmp_path):
    out_file = tmp_path / "vf7.d"
    code, out, _ = run(capsys, "embed", "--theory", "VFM", "--axiom", "VF7", "--arg", "liar",
                       "-o", str(out_file))
    assert code == 0 and "0 violation(s)" in out
    assert run(capsys, "check", str(out_file))[0] == 0
    cut_file = tmp_path / "cut.d"
    cut_file.write_text(C.dumps(C.cut_corpus(3)[2], "VFMinf"))
    elim = tmp_path / "elim.d"
    code, out, _ = run(capsys, "--json", "cutelim", str(cut_file), "-o", str(elim))
    rec = json.loads(out)
    assert code == 0 and rec["output_rank"] == 0 and rec["within_bound"]
    d, system = C.loads(elim.read_text())
    assert system == "VFMinf" and C.check(d, system).ok


def test_probe(capsys):
    code, out, _ = run(capsys, "probe", "--system", "I", "--depth", "2")
    assert code == 0 and "no false equation" in out
    assert run(capsys, "-q", "probe", "--planted")[0] == 1


def test_translate(capsys):
    code, out, _ = run(capsys, "translate", "--sigma", "(TrR 0 (quote (= 0 0)))", "--alpha", "1")
    assert code == 0 and out.startswith("(Tr (kh.")
    code, out, _ = run(capsys, "translate", "--h", "(TrR 1 (quote (= 0 0)))", "--beta", "1")
    assert S.parse(out.strip()) == S.zero_eq_one()
    assert run(capsys, "translate", "--sigma", "(Tr 0)")[0] == 2


def test_skjump_and_xistar(capsys, liar_pool):
    code, out, _ = run(capsys, "skjump", "--universe", liar_pool, "--iterate")
    assert code == 0 and "(= 0 0)" in out
    code, out, _ = run(capsys, "xistar-check")
    assert code == 0 and "xi_star: 0 failure(s)" in out


def test_selftest_subset(capsys):
    code, out, _ = run(capsys, "selftest", "--only", "8", "--only", "3")
    assert code == 0
    assert out.count("PASS") == 2


def test_usage_errors(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "--help")[0] == 0

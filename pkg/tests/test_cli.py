import io

import pytest

from clusterchar.cli import main, quiver_for_type


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def results(text):
    return [line.split()[1:] for line in text.splitlines() if line.startswith("RESULT ")]


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return _write


def test_quiver_types():
    assert quiver_for_type("A3").B == ((0, 1, 0), (-1, 0, 1), (0, -1, 0))
    d4 = quiver_for_type("D4")
    assert sorted(sum(1 for j in range(4) if d4.B[i][j]) for i in range(4)) == [1, 1, 1, 3]


def test_mutate_and_enumerate():
    code, text = run("mutate", "--type", "A2", "1")
    assert code == 0 and "x1' = " in text
    code, text = run("enumerate", "--type", "A3")
    assert code == 0 and text.startswith("9 cluster variables")
    code, text = run("enumerate", "--type", "D4")
    assert code == 0 and text.startswith("16 cluster variables")


def test_cc_on_both_backends():
    code, text = run("cc", "--type", "A2")
    assert code == 0 and len(text.splitlines()) == 5
    code, text = run("cc", "--type", "D4", "--backend", "module")
    assert code == 0 and len(text.splitlines()) == 16


def test_verify_sweeps_pass():
    for check, expected in (("ar", 9), ("palu", None), ("ideal", None)):
        code, text = run("verify", check, "--type", "A3")
        lines = results(text)
        assert code == 0 and lines and all(r[1] == "PASS" for r in lines)
        if expected:
            assert len(lines) == expected


def test_verify_refined_from_files(write):
    L = write("L.txt", "polygon 5; arcs (2,4) (2,4)\n")
    M = write("M.txt", "polygon 5; arcs (3,5)\n")
    code, text = run("verify", "refined", "--type", "A2", "--L", L, "--M", M, "--V", "1,0", "--verbose")
    assert code == 0
    assert results(text) == [["refined:(2,4)+(2,4)|(3,5)", "PASS"]]
    assert "strata of R" in text


def test_verify_ar_rejects_decomposable(write):
    Z = write("Z.txt", "polygon 5; arcs (1,3) (2,4)\n")
    code, _ = run("verify", "ar", "--type", "A2", Z)
    assert code == 2


def test_module_backend_ar():
    code, text = run("verify", "ar", "--type", "D4", "--backend", "module")
    assert code == 0 and len(results(text)) == 16


def test_arc_backend_outside_type_a_is_unsupported():
    code, _ = run("verify", "ar", "--type", "D4")
    assert code == 2


def test_specialize_all():
    code, text = run("specialize", "--type", "A3", "--vertex", "3", "--all")
    assert code == 0
    lines = results(text)
    assert len(lines) == 10 and all(r[1] == "PASS" for r in lines)
    assert "leaf d=0" in text


def test_specialize_non_ear():
    code, _ = run("specialize", "--type", "A3", "--vertex", "2", "--all")
    assert code == 2


def test_frieze_commands(write):
    code, text = run("frieze", "enumerate", "--type", "A3")
    assert code == 0 and text.startswith("14 friezes")
    code, text = run("frieze", "lift", "--type", "A3", "--vertex", "3")
    assert code == 0 and len(results(text)) == 5
    good = write("f.txt", "2\n1 2 1\n1 2\n")
    bad = write("g.txt", "2\n1 2 1\n2 2\n")
    assert run("frieze", "check", good)[0] == 0
    assert run("frieze", "check", bad)[0] == 1


def test_malformed_inputs(write):
    assert run("nonsense")[0] == 3
    assert run("enumerate")[0] == 3
    assert run("enumerate", "--type", "B3")[0] == 3
    assert run("enumerate", "--quiver", write("q.txt", "2\n1 2 x\n"))[0] == 3
    assert run("enumerate", "--quiver", "/nonexistent/q.txt")[0] == 3
    assert run("verify", "refined", "--type", "A2")[0] == 3

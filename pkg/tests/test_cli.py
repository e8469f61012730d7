import json

import pytest

from weylgarnir.cli import main
from weylgarnir.rootsys import build_root_system

G2 = ["--type", "G", "--rank", "2"]
EXAMPLE = G2 + ["-J", "10", "32", "-Jp", "11"]


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_roots(capsys):
    code, out, _ = run(capsys, "roots", *G2)
    assert code == 0
    assert out.splitlines()[0] == "G2: 12 roots, 6 positive"
    assert "32  (-1, -1, 2)" in out


def test_roots_json_round_trip(capsys):
    code, out, _ = run(capsys, "roots", *G2, "--json")
    assert code == 0
    data = json.loads(out)
    assert data["phi"] == "G2"
    names = [r["name"] for r in data["positive_roots"]]
    assert names == ["10", "01", "11", "21", "31", "32"]
    phi = build_root_system("G2")
    assert [phi.coeff_string(phi.parse_root(n)) for n in names] == names


def test_group_listing(capsys):
    code, out, _ = run(capsys, "group", "--type", "A", "--rank", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "|W(A2)| = 6"
    assert len(lines) == 7


def test_tabloids(capsys):
    code, out, _ = run(capsys, "tabloids", *EXAMPLE)
    assert code == 0
    assert [line.split()[-1] for line in out.splitlines()] == [
        "{10,32;11}", "{11,31;10}", "{21,01;-10}"]


def test_comma_separated_roots(capsys):
    a = run(capsys, "tabloids", *EXAMPLE)
    b = run(capsys, "tabloids", *G2, "-J", "10,32", "-Jp", "11")
    assert a == b


def test_polytabloid(capsys):
    code, out, _ = run(capsys, "polytabloid", *EXAMPLE, "-d", "t1")
    assert code == 0
    assert out.splitlines()[0] == "e(t1 J, t1 J') = {10,32;11} - {11,31;10}"


def test_garnir_text(capsys):
    code, out, _ = run(capsys, "garnir", *EXAMPLE, "-d", "t1", "-Jstar", "10", "21")
    assert code == 0
    assert "  C = {e, t1, t2 t1 t2}" in out.splitlines()
    assert "  G = e - t1 - t2 t1 t2" in out.splitlines()
    assert "  e(t1 J, t1 J') = e(J,J') - e(t2 J, t2 J')" in out.splitlines()


def test_garnir_json(capsys):
    code, out, _ = run(capsys, "garnir", *EXAMPLE, "-d", "t1", "-Jstar", "10", "21", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["garnir_element"] == "e - t1 - t2 t1 t2"
    assert data["annihilation_zero"] is True


def test_garnir_all_jstar(capsys):
    code, out, _ = run(capsys, "garnir", *EXAMPLE, "-d", "t1", "--all-jstar", "--json")
    assert code == 0
    reports = json.loads(out)
    # only the J* admitting a pairing are reported
    assert len(reports) == 3
    assert all(r["hypothesis"] == "holds" and r["annihilation_zero"] for r in reports)
    # the short A2 generated by 10 and 21 is listed by its base {10, 11}
    assert ["10", "11"] in [r["context"]["J*"] for r in reports]


def test_verify_example(capsys):
    code, out, _ = run(capsys, "verify", *G2, "--suite", "example34")
    assert code == 0
    assert out.splitlines()[0] == "PASS example34: 14 checks, 0 failures"


def test_verify_structure_a2(capsys):
    code, out, _ = run(capsys, "verify", "--type", "A", "--rank", "2", "--suite", "structure", "--suite", "peel")
    assert code == 0
    assert [line.split()[0] for line in out.splitlines() if not line.startswith(" ")] == ["PASS", "PASS"]


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--type", "A", "--rank", "2", "--order", "length")
    assert code == 0
    assert "{10} | {11} | Y Y Y Y Y | 2" in out


def test_deterministic(capsys):
    first = run(capsys, "classify", *G2, "--json")
    second = run(capsys, "classify", *G2, "--json")
    assert first == second


@pytest.mark.parametrize("argv", [
    ["roots", "--type", "Q", "--rank", "2"],
    ["roots", "--type", "A", "--rank", "9"],
    ["tabloids", *G2, "-J", "10", "-Jp", "10"],
    ["polytabloid", *EXAMPLE, "-d", "t7"],
    ["garnir", *EXAMPLE, "-d", "t1", "-Jstar", "99"],
    ["garnir", *EXAMPLE, "-d", "t1"],
    ["tabloids", *G2, "-J", "55"],
])
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert "error" in err


def test_non_distinguished_d_suggests_rep(capsys):
    # tau_11 = t2 t1 t2 lies in W(J'), so its coset rep is e
    code, _, err = run(capsys, "garnir", *EXAMPLE, "-d", "t2 t1 t2", "-Jstar", "10", "21")
    assert code == 2
    assert "use -d 'e'" in err or "use -d e" in err


def test_missing_subcommand(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2

import json

import pytest

from goodsemi import (
    IdealFrame,
    canonical_normalized,
    difference,
    from_json,
    to_json,
)
from goodsemi.cli import main


@pytest.fixture
def corner(fixture_dir):
    return str(fixture_dir / "corner_s.json")


@pytest.fixture
def stair_s(fixture_dir):
    return str(fixture_dir / "staircase_s.json")


@pytest.fixture
def stair_e(fixture_dir):
    return str(fixture_dir / "staircase_e.json")


@pytest.fixture
def curve(fixture_dir):
    return str(fixture_dir / "twobranch.curve")


def test_validate_semigroup(corner, capsys):
    assert main(["validate", corner]) == 0
    out = capsys.readouterr().out
    assert "as semigroup" in out
    assert "pass" in out and "FAIL" not in out


def test_validate_frame_without_ambient(stair_e, capsys):
    assert main(["validate", stair_e]) == 1
    out = capsys.readouterr().out
    assert "axioms only" in out
    assert "E2 (exchange axiom):" in out and "FAIL" in out


def test_validate_with_ambient(stair_e, stair_s, capsys):
    assert main(["validate", stair_e, "--ambient", stair_s]) == 1
    out = capsys.readouterr().out
    assert f"ideal of {stair_s}" in out
    assert "E2 witness" in out


def test_canonical_to_file(corner, tmp_path, fig_s, capsys):
    out = tmp_path / "k.json"
    assert main(["canonical", corner, "-o", str(out)]) == 0
    K = from_json(out.read_text())
    assert K == canonical_normalized(fig_s)
    # emitted text is byte-identical to the library serialization
    assert out.read_text() == to_json(canonical_normalized(fig_s))


def test_dual_roundtrip(corner, tmp_path, fig_s, capsys):
    E = IdealFrame.from_points([(2, 1), (2, 2), (3, 1), (5, 2)], gamma=(5, 2))
    epath = tmp_path / "e.json"
    epath.write_text(to_json(E))
    out = tmp_path / "d.json"
    assert main(["dual", corner, str(epath), "-o", str(out)]) == 0
    D = from_json(out.read_text())
    assert D == difference(canonical_normalized(fig_s), E)
    # applying it twice from the command line returns the input
    out2 = tmp_path / "dd.json"
    assert main(["dual", corner, str(out), "-o", str(out2)]) == 0
    assert from_json(out2.read_text()) == E


def test_dual_twice_on_certified_input(corner, tmp_path, capsys):
    E = IdealFrame.from_points([(2, 1), (2, 2), (3, 1), (5, 2)], gamma=(5, 2))
    epath = tmp_path / "e.json"
    epath.write_text(to_json(E))
    assert main(["dual", corner, str(epath), "--twice"]) == 0
    captured = capsys.readouterr()
    assert "returns the input" in captured.err
    assert from_json(captured.out) == E


def test_dual_twice_warns_on_uncertified(stair_s, stair_e, capsys):
    rc = main(["dual", stair_s, stair_e, "--twice"])
    assert rc == 1
    captured = capsys.readouterr()
    assert "not (E2)-certified" in captured.err
    assert "strictly contains" in captured.err
    got = from_json(captured.out)
    assert got.frame_sorted == ((1, 2), (2, 2), (3, 2), (4, 4))


def test_is_canonical(corner, tmp_path, fig_s, capsys):
    kpath = tmp_path / "k.json"
    kpath.write_text(to_json(canonical_normalized(fig_s).shift((1, 2))))
    assert main(["is-canonical", corner, str(kpath)]) == 0
    assert capsys.readouterr().out.strip() == "canonical: true (shift 1,2)"
    assert main(["is-canonical", corner, corner]) == 1
    assert capsys.readouterr().out.startswith("canonical: false")


def test_is_symmetric(corner, stair_s, capsys):
    assert main(["is-symmetric", stair_s]) == 1
    assert capsys.readouterr().out.strip() == "symmetric: false"
    assert main(["is-symmetric", corner]) == 1


def test_diff_and_sum(corner, tmp_path, fig_s, capsys):
    E = IdealFrame.from_points([(2, 1), (2, 2), (3, 1), (5, 2)], gamma=(5, 2))
    F = IdealFrame.from_points([(3, 1), (4, 2)], gamma=(4, 2))
    e, f = tmp_path / "e.json", tmp_path / "f.json"
    e.write_text(to_json(E))
    f.write_text(to_json(F))
    assert main(["diff", str(e), str(f)]) == 0
    D = from_json(capsys.readouterr().out)
    assert D.frame_sorted == ((2, 1),)
    assert main(["sum", str(e), str(f)]) == 0
    P = from_json(capsys.readouterr().out)
    assert P.mu == (5, 2) and (7, 4) in P


def test_distance(corner, capsys):
    assert main(["distance", corner, "0,0", "3,1"]) == 0
    assert capsys.readouterr().out.strip() == "1"


def test_distance_bad_point(corner, capsys):
    assert main(["distance", corner, "x,y", "3,1"]) == 2
    assert "cannot read point" in capsys.readouterr().err


def test_rel_distance(corner, tmp_path, fig_s, capsys):
    k = tmp_path / "k.json"
    k.write_text(to_json(canonical_normalized(fig_s)))
    assert main(["rel-distance", corner, str(k)]) == 0
    assert capsys.readouterr().out.strip() == "2"
    assert main(["rel-distance", str(k), corner]) == 2
    assert "smaller" in capsys.readouterr().err


def test_decompose(tmp_path, capsys):
    from goodsemi import GoodSemigroup, product_semigroups

    A = GoodSemigroup.from_points([(0, 0), (3, 1)], gamma=(3, 1))
    B = GoodSemigroup.from_points([(0,), (2,)], gamma=(2,))
    P = product_semigroups(A, B)
    p = tmp_path / "p.json"
    p.write_text(to_json(P))
    assert main(["decompose", str(p)]) == 0
    out = capsys.readouterr().out
    assert "branches [0, 1]:" in out and "branches [2]:" in out


def test_gamma_of(stair_e, capsys):
    assert main(["gamma-of", stair_e]) == 0
    out = capsys.readouterr().out
    assert "conductor: 6,5" in out
    assert "capping bound: 7,5" in out


def test_curve_gamma(curve, tmp_path, capsys):
    out = tmp_path / "ge.json"
    assert main(["curve-gamma", curve, "--module", "E", "-o", str(out)]) == 0
    G = from_json(out.read_text())
    assert G.frame_sorted == ((2, 1), (2, 2), (3, 1), (5, 2))
    assert main(["curve-gamma", curve]) == 0
    R = from_json(capsys.readouterr().out)
    assert R.frame_sorted == ((0, 0), (3, 1))


def test_colon_command(curve, capsys):
    assert main(["colon", curve, "K0", "E"]) == 0
    G = from_json(capsys.readouterr().out)
    assert G.frame_sorted == ((-2, -1), (-2, 0), (-1, -1), (1, 0))
    assert main(["colon", curve, "K0", "E", "--pole-bound", "0"]) == 2
    assert "pole bound" in capsys.readouterr().err


def test_length_command(curve, capsys):
    assert main(["length", curve, "R", "CR"]) == 0
    assert capsys.readouterr().out.strip() == "1"
    assert main(["length", curve, "F", "E"]) == 2
    assert "not contained" in capsys.readouterr().err


def test_plot_ascii(corner, capsys):
    assert main(["plot", corner, "--hi", "4,2"]) == 0
    out = capsys.readouterr().out
    assert "●" in out and "○" in out
    # the origin row is the bottom lattice row: members at 0 and nothing
    # else until the conductor column
    rows = [l for l in out.splitlines() if "|" in l]
    assert rows[-1].startswith("0 | ● ○ ○ ○ ○")
    assert rows[-2].startswith("1 | ○ ○ ○ ● ●")


def test_plot_svg(corner, tmp_path, capsys):
    svg = tmp_path / "pic.svg"
    assert main(["plot", corner, "--svg", str(svg)]) == 0
    text = svg.read_text()
    assert text.startswith("<svg") and "circle" in text


def test_plot_refuses_one_branch(tmp_path, capsys):
    from goodsemi import numerical_semigroup

    p = tmp_path / "n.json"
    p.write_text(to_json(numerical_semigroup(2, 3)))
    assert main(["plot", str(p)]) == 2
    assert "2-branch" in capsys.readouterr().err


def test_missing_file(capsys):
    assert main(["validate", "no/such/file.json"]) == 2
    assert "error:" in capsys.readouterr().err


def test_bad_json_position(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text('{"s": 2,\n "mu": [0, "x"]}\n')
    assert main(["validate", str(p)]) == 2
    err = capsys.readouterr().err
    assert "error:" in err and "bad.json" in err


def test_semigroup_argument_must_be_good(stair_e, capsys):
    assert main(["canonical", stair_e]) == 2
    err = capsys.readouterr().err
    assert "not a good semigroup" in err

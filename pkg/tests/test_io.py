import json
from pathlib import Path

import pytest

from hopfbase.errors import InputError
from hopfbase.hopf import functions_on_group, sweedler, taft, uqbar_sl2, verify_hopf
from hopfbase.groups import symmetric3
from hopfbase.io import (
    builtin_algebra,
    canonical_dumps,
    digest,
    hopf_from_json,
    hopf_to_json,
    load_group,
    load_hopf,
    ncpoly_from_json,
)

DATA = Path(__file__).resolve().parent.parent / "data"


@pytest.mark.parametrize("H", [sweedler(), taft(3), uqbar_sl2(2), functions_on_group(symmetric3())], ids=lambda H: H.name)
def test_roundtrip(H):
    data = json.loads(canonical_dumps(hopf_to_json(H)))
    H2 = hopf_from_json(data)
    assert H2.mul == H.mul and H2.comul == H.comul and H2.antipode == H.antipode
    assert H2.grouplikes == H.grouplikes and H2.group_part == H.group_part
    assert hopf_to_json(H2) == hopf_to_json(H)


def test_data_files_match_builtins():
    H, d = load_hopf(DATA / "sweedler.json")
    assert hopf_to_json(H) == hopf_to_json(sweedler())
    assert d == digest((DATA / "sweedler.json").read_bytes())
    H, _ = load_hopf(DATA / "taft3.json")
    assert hopf_to_json(H) == hopf_to_json(taft(3))


def test_corrupted_file_loads_but_fails():
    H, _ = load_hopf(DATA / "corrupted_sweedler.json")
    assert not verify_hopf(H).ok


def _base():
    return json.loads((DATA / "sweedler.json").read_text())


@pytest.mark.parametrize(
    "mutate, field",
    [
        (lambda d: d.pop("comul"), "comul"),
        (lambda d: d["mul"]["g"].update({"q": {}}), "mul.g.q"),
        (lambda d: d["comul"]["v"][1].__setitem__(2, "1/x"), "comul.v[1]"),
        (lambda d: d["comul"]["v"].append(["1", "v"]), "comul.v[2]"),
        (lambda d: d["antipode"]["v"].update({"gv": 1.5}), "antipode.v.gv"),
        (lambda d: d.__setitem__("cyclotomic_order", 0), "cyclotomic_order"),
        (lambda d: d["group_part"].__setitem__("v", "w"), "group_part.v"),
    ],
)
def test_field_diagnostics(mutate, field):
    d = _base()
    mutate(d)
    with pytest.raises(InputError) as info:
        hopf_from_json(d)
    assert str(info.value).startswith(field + ":")


def test_json_syntax_error_reports_line(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{\n "basis": ["1"]\n "unit": {}\n}\n')
    with pytest.raises(InputError, match="line 3"):
        load_hopf(p)


def test_builtins():
    assert builtin_algebra("taft3").dim == 9
    assert builtin_algebra("O(Z4)").dim == 4
    assert builtin_algebra("k[S3]").dim == 6
    with pytest.raises(InputError):
        builtin_algebra("nonsense")


def test_groups_and_polys():
    G, d = load_group("S3")
    assert G.order == 6 and len(d) == 64
    P = ncpoly_from_json(json.loads((DATA / "sweedler_commutator.json").read_text()), sweedler())
    assert P.terms == {(0, 2): 1, (2, 0): -1}
    with pytest.raises(InputError):
        ncpoly_from_json([[["w"], "1"]], sweedler())

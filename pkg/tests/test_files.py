import json
from fractions import Fraction

import pytest

from lsconf.algebras import AlgebraSpec, tensor
from lsconf.cohomology import CocycleFamily
from lsconf.files import (FileFormatError, algebra_to_json, cocycle_to_json,
                          dump_json, file_sha256, load_algebra, load_cocycle,
                          load_matrix, parse_rational, save_algebra)

from conftest import rank_two, two_dim_lw

F = Fraction


def test_parse_rational():
    assert parse_rational("-7/3") == F(-7, 3)
    assert parse_rational("4") == 4
    for bad in ("", "1/0", "1/00", "0x2", "1.5", "2/", "--3", None, 7):
        with pytest.raises(FileFormatError):
            parse_rational(bad)


def test_round_trip_preserves_algebra(tmp_path):
    alg = rank_two(F(1, 2), -3)
    path = tmp_path / "a.json"
    save_algebra(alg, path)
    back = load_algebra(path)
    assert back == alg


def test_saved_bytes_are_stable(tmp_path):
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    save_algebra(two_dim_lw(), p1)
    save_algebra(load_algebra(p1), p2)
    assert p1.read_bytes() == p2.read_bytes()
    assert file_sha256(p1) == file_sha256(p2)
    assert p1.read_bytes().endswith(b"\n")


def test_sparse_table_format(tmp_path):
    doc = algebra_to_json(two_dim_lw())
    assert doc["ops"]["ld"] == {"L,L": {"L": "1"}, "W,L": {"W": "1"}}
    assert "circ" not in doc["ops"]
    # integer cells are accepted on input
    doc["ops"]["ld"]["L,L"]["L"] = 1
    path = tmp_path / "int.json"
    path.write_text(dump_json(doc))
    assert load_algebra(path) == two_dim_lw()


def test_load_algebra_rejections(tmp_path):
    base = algebra_to_json(two_dim_lw())

    def reject(mutate, needle):
        doc = json.loads(json.dumps(base))
        mutate(doc)
        path = tmp_path / "bad.json"
        path.write_text(dump_json(doc))
        with pytest.raises(FileFormatError) as err:
            load_algebra(path)
        assert needle in str(err.value)

    reject(lambda d: d.pop("dim"), "missing field 'dim'")
    reject(lambda d: d.update(dim=0), "positive")
    reject(lambda d: d.update(basis=["L"]), "dim label strings")
    reject(lambda d: d.update(basis=["L", "L"]), "distinct")
    reject(lambda d: d["ops"].update(bracket={}), "unknown op")
    reject(lambda d: d["ops"]["ld"].update({"L,Q": {"L": "1"}}), "bad basis pair")
    reject(lambda d: d["ops"]["ld"].update({"L,L": {"Q": "1"}}), "unknown label")
    reject(lambda d: d["ops"]["ld"]["L,L"].update(L="1/0"), "ops.ld.L,L.L")

    path = tmp_path / "syntax.json"
    path.write_text("{nope")
    with pytest.raises(FileFormatError):
        load_algebra(path)
    with pytest.raises(FileFormatError):
        load_algebra(tmp_path / "absent.json")


def test_ops_without_file_form_are_refused():
    alg = AlgebraSpec("b", 1, ("e",), {"bracket": tensor(1, {(0, 0, 0): 1})})
    with pytest.raises(FileFormatError):
        algebra_to_json(alg)


def test_load_matrix(tmp_path):
    path = tmp_path / "m.json"
    path.write_text(dump_json({"matrix": [["1", "0"], ["-1/2", 3]]}))
    m = load_matrix(path, expect_dim=2)
    assert m.apply([1, 1]) == [1, F(5, 2)]
    with pytest.raises(FileFormatError):
        load_matrix(path, expect_dim=3)
    path.write_text(dump_json({"matrix": [["1", "0"]]}))
    with pytest.raises(FileFormatError):
        load_matrix(path)


def test_cocycle_round_trip(tmp_path):
    fam = CocycleFamily(2, (((0,),), ((F(1, 3),),), ((0,),)))
    path = tmp_path / "c.json"
    path.write_text(dump_json(cocycle_to_json(fam)))
    assert load_cocycle(path, dim=1) == fam
    with pytest.raises(FileFormatError):
        load_cocycle(path, dim=2)
    path.write_text(dump_json({"degree_cap": 2, "forms": [[["0"]]]}))
    with pytest.raises(FileFormatError):
        load_cocycle(path)

"""Smallest-parts counts: enumeration oracle, series oracle, table, cache."""
from __future__ import annotations

import io

import pytest
from hypothesis import given, strategies as st

import spt2q.spt as spt_mod
from spt2q.series import CoeffRing, ZZ
from spt2q.spt import (
    CACHE_MAGIC,
    CACHE_VERSION,
    CacheError,
    Overpartition,
    Spt2Table,
    _read_varint,
    _write_varint,
    _zigzag_decode,
    _zigzag_encode,
    build_table,
    compute_table_values,
    enumerate_overpartitions,
    get_table,
    load_table,
    save_table,
    spt2_enum,
    spt2_series,
    write_csv,
)

# hand-counted for small n, frozen here as the ground truth for every oracle
SPT2_SMALL = [0, 0, 1, 0, 3, 2, 6, 6, 15, 18, 30, 40, 66, 90, 132]
OVERPARTITION_COUNTS = [1, 2, 4, 8, 14, 24, 40, 64, 100]


def test_enumeration_matches_frozen_values():
    assert [spt2_enum(n) for n in range(len(SPT2_SMALL))] == SPT2_SMALL


def test_known_larger_values():
    assert spt2_enum(28) == 8700


def test_overpartition_counts():
    for n, expected in enumerate(OVERPARTITION_COUNTS):
        assert sum(1 for _ in enumerate_overpartitions(n)) == expected


def test_overpartition_structure():
    for op in enumerate_overpartitions(6):
        assert isinstance(op, Overpartition)
        assert sum(op.parts) == 6
        assert list(op.parts) == sorted(op.parts, reverse=True)
        # only one copy of a part value can be overlined
        assert all(v in op.parts for v in op.overlined)
        assert op.smallest() == op.parts[-1]


def test_spt2_counts_one_overpartition_by_hand():
    # n=4: only 4 and 2+2 qualify (2bar+2 has its smallest part overlined),
    # contributing 1 and 2 smallest-part copies for a total of 3
    assert spt2_enum(4) == 3
    contributing = []
    for op in enumerate_overpartitions(4):
        s = op.smallest()
        if s % 2 == 0 and s not in op.overlined:
            contributing.append(op)
    assert len(contributing) == 2
    assert sum(op.parts.count(op.smallest()) for op in contributing) == 3


def test_enumeration_range_checks():
    with pytest.raises(ValueError):
        list(enumerate_overpartitions(-1))
    with pytest.raises(ValueError):
        list(enumerate_overpartitions(99))
    with pytest.raises(ValueError):
        spt2_enum(99)


def test_series_matches_enumeration_prefix():
    order = 25
    ser = spt2_series(order)
    assert list(ser.coeffs) == [spt2_enum(n) for n in range(order)]


def test_series_mod_ring_consistent():
    assert spt2_series(120, CoeffRing(4)) == spt2_series(120).reduce_mod(4)
    assert spt2_series(120, CoeffRing(5)) == spt2_series(120).reduce_mod(5)


def test_table_values_match_series():
    n_max = 300
    values = compute_table_values(n_max)
    ser = spt2_series(n_max + 1)
    assert values == list(ser.coeffs)


def test_table_values_threaded():
    assert compute_table_values(200, threads=4) == compute_table_values(200)


def test_build_table_oracles_agree():
    a = build_table(20, oracle="genfunc")
    b = build_table(20, oracle="enumeration")
    assert a.values == b.values
    assert a.oracle == "genfunc" and b.oracle == "enumeration"


def test_table_accessors():
    t = build_table(30)
    assert t.n_max == 30
    assert t.spt2(4) == 3
    with pytest.raises(IndexError):
        t.spt2(31)
    with pytest.raises(IndexError):
        t.spt2(-1)
    assert t.truncate(10).n_max == 10
    assert t.truncate(10).values == t.values[:11]


def test_progression_order_and_series():
    t = build_table(100)
    # arguments 3, 11, ..., 99: thirteen of them
    assert t.progression_order(8, 3) == 13
    ser = t.progression_series(8, 3, 13)
    assert ser.coeffs == tuple(t.spt2(8 * n + 3) for n in range(13))
    mod = t.progression_series(8, 3, 13, CoeffRing(4))
    assert mod == ser.reduce_mod(4)
    with pytest.raises(ValueError):
        t.progression_series(8, 3, 14)


@given(st.integers(-(10 ** 30), 10 ** 30))
def test_zigzag_roundtrip(v):
    assert _zigzag_decode(_zigzag_encode(v)) == v
    assert _zigzag_encode(v) >= 0


@given(st.lists(st.integers(0, 10 ** 24), max_size=8))
def test_varint_roundtrip(zs):
    buf = bytearray()
    for z in zs:
        _write_varint(buf, z)
    pos = 0
    out = []
    for _ in zs:
        z, pos = _read_varint(bytes(buf), pos)
        out.append(z)
    assert out == zs and pos == len(buf)


def test_cache_roundtrip(tmp_path):
    t = build_table(50)
    path = tmp_path / "t.tbl"
    save_table(t, path)
    back = load_table(path)
    assert back.values == t.values
    assert not list(tmp_path.glob("*.tmp"))


def test_cache_rejects_bad_magic(tmp_path):
    path = tmp_path / "t.tbl"
    path.write_bytes(b"NOPE" + bytes(20))
    with pytest.raises(CacheError):
        load_table(path)


def test_cache_rejects_bad_version(tmp_path):
    t = build_table(5)
    path = tmp_path / "t.tbl"
    save_table(t, path)
    data = bytearray(path.read_bytes())
    data[4:8] = (CACHE_VERSION + 1).to_bytes(4, "little")
    path.write_bytes(bytes(data))
    with pytest.raises(CacheError):
        load_table(path)


def test_cache_rejects_trailing_garbage(tmp_path):
    t = build_table(5)
    path = tmp_path / "t.tbl"
    save_table(t, path)
    path.write_bytes(path.read_bytes() + b"\x00")
    with pytest.raises(CacheError):
        load_table(path)


def test_cache_rejects_truncation(tmp_path):
    t = build_table(50)
    path = tmp_path / "t.tbl"
    save_table(t, path)
    path.write_bytes(path.read_bytes()[:-3])
    with pytest.raises(CacheError):
        load_table(path)


def test_cache_header_layout(tmp_path):
    t = build_table(7)
    path = tmp_path / "t.tbl"
    save_table(t, path)
    data = path.read_bytes()
    assert data[:4] == CACHE_MAGIC == b"SPT2"
    assert int.from_bytes(data[8:16], "little") == 7


def test_get_table_uses_and_grows_cache(tmp_path, monkeypatch):
    monkeypatch.setattr(spt_mod, "_MEMO", {"table": None})
    t1 = get_table(40, cache_dir=tmp_path)
    assert t1.n_max == 40
    cache_file = tmp_path / f"spt2-v{CACHE_VERSION}.tbl"
    assert cache_file.exists()
    # a smaller request reuses the memo without shrinking the file
    monkeypatch.setattr(spt_mod, "_MEMO", {"table": None})
    t2 = get_table(10, cache_dir=tmp_path)
    assert t2.values == t1.values[:11]
    assert load_table(cache_file).n_max == 40
    # a larger request grows the file
    monkeypatch.setattr(spt_mod, "_MEMO", {"table": None})
    get_table(60, cache_dir=tmp_path)
    assert load_table(cache_file).n_max == 60


def test_get_table_memoizes(tmp_path, monkeypatch):
    monkeypatch.setattr(spt_mod, "_MEMO", {"table": None})
    t1 = get_table(30, cache_dir=tmp_path, use_cache=False)

    def no_rebuild(*args, **kwargs):
        raise AssertionError("second lookup should come from the memo")

    monkeypatch.setattr(spt_mod, "build_table", no_rebuild)
    t2 = get_table(30, cache_dir=tmp_path, use_cache=False)
    assert t2.values == t1.values
    assert not list(tmp_path.iterdir())


def test_get_table_survives_corrupt_cache(tmp_path, monkeypatch):
    monkeypatch.setattr(spt_mod, "_MEMO", {"table": None})
    cache_file = tmp_path / f"spt2-v{CACHE_VERSION}.tbl"
    cache_file.write_bytes(b"garbage")
    t = get_table(12, cache_dir=tmp_path)
    assert t.spt2(4) == 3
    assert load_table(cache_file).n_max == 12


def test_write_csv():
    t = build_table(4)
    buf = io.StringIO()
    write_csv(t, buf)
    assert buf.getvalue().splitlines() == ["n,spt2(n)", "0,0", "1,0", "2,1", "3,0", "4,3"]


def test_full_table_spot_values(table10k):
    assert table10k.n_max == 10_000
    assert [table10k.spt2(n) for n in range(15)] == SPT2_SMALL
    assert table10k.spt2(28) == 8700
    # the top entry is a 400-plus bit integer; exactness matters here
    assert table10k.spt2(10_000).bit_length() > 400

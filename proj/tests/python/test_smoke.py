import hashlib

import pytest

import cthash


def ones(n):
    return [[[1] * n for _ in range(n)] for _ in range(n)]


def table(mask, n=2):
    bits = [(mask >> b) & 1 for b in range(n**3)]
    return [[[bits[(i * n + j) * n + k] for k in range(n)] for j in range(n)] for i in range(n)]


def test_paper_pair_is_valid():
    p = cthash.ParameterPair.paper()
    assert p.side == 8
    assert p.is_validated
    assert p.v[0][0][0] == 73
    assert all(passed for passed, _ in cthash.validate(p.v, p.w).values())


def test_constant_line_is_reported():
    p = cthash.ParameterPair.paper()
    v = p.v
    v[1][2] = [5] * 8
    report = cthash.validate(v, p.w)
    assert report["4e"] == (False, "V(2,3,*)")


def test_hash_is_deterministic_and_matches_composition():
    p = cthash.ParameterPair.generate(3, 11)
    a = cthash.hash(b"abc", p)
    assert a == cthash.hash(b"abc", p, threads=4)
    assert len(a) == 64
    assert len(cthash.hash(b"abc", p, inner="md5")) == 32
    bits = cthash.h1(b"abc", p)
    padded = bits + "0" * (-len(bits) % 8)
    packed = int(padded, 2).to_bytes(len(padded) // 8, "big")
    assert hashlib.sha256(packed).hexdigest() == a


def test_inner_digests_match_hashlib():
    for data in (b"", b"abc", b"message digest"):
        assert cthash.h2(data, "md5") == hashlib.md5(data).hexdigest()
        assert cthash.h2(data, "sha256") == hashlib.sha256(data).hexdigest()
    with pytest.raises(ValueError):
        cthash.h2(b"", "sha1")


def test_empty_message_with_ones():
    p = cthash.ParameterPair.unchecked(ones(2), ones(2))
    assert cthash.h1(b"", p) == "100010001000" * 2 + "0" * 24 * 8


def test_padded_length():
    assert cthash.padded_length(0, 8) == 512
    assert cthash.padded_length(512, 8) == 1024
    assert cthash.padded_length(7, 2) == 72


def test_g1_and_g2():
    a = [[1, 1, 0], [1, 1, 0], [0, 0, 1]]
    w = [[1, 4, 9], [2, 8, 18], [3, 12, 27]]
    prod = [[a[i][j] * w[i][j] for j in range(3)] for i in range(3)]
    assert cthash.g1(prod) == [5, 10, 27, 3, 12, 27]
    assert cthash.g2(ones(2)) == "10" * 12
    assert cthash.g2(table(0)) == "0" * 12


def test_reduction_round_trip():
    for mask in range(256):
        a = table(mask)
        c, d = cthash.build_c(a), cthash.build_d(a)
        assert cthash.marginals(c) == cthash.marginals(d)
        assert cthash.recover(c) == a == cthash.recover(d)
        x = cthash.g2_fixed(a, 2)
        assert cthash.duplic(x, 2) == cthash.g2_fixed(c, 2)
        assert cthash.marginals(cthash.sol3dct(x, 2)) == cthash.marginals(a)


def test_collision_and_preimage_search():
    p = cthash.ParameterPair.unchecked(ones(2), ones(2))
    groups = cthash.collision_search(2, p)
    assert groups
    assert sum(len(g) for g in groups) <= 256
    first = groups[0]
    assert len(set(first)) == len(first) >= 2
    target = cthash.h1(b"", p)[:24]
    found = cthash.preimage_search(target, 2, p)
    assert "10000000" in found


def test_simulation():
    v = cthash.repro_simulation()
    assert v["pass"]
    assert v["md5_x1"] == v["md5_x2"]
    assert v["h3_x1"] != v["h3_x2"]


def test_errors_carry_kind():
    with pytest.raises(cthash.CtHashError) as info:
        cthash.ParameterPair.generate(1, 0)
    assert info.value.args[1] == "generation"
    with pytest.raises(cthash.CtHashError):
        cthash.ParameterPair.validated(ones(2), ones(2))


def test_params_text_round_trip():
    p = cthash.ParameterPair.generate(2, 4)
    text = p.to_text()
    assert text.startswith("ct-hash-params v1 n=2\n")
    assert cthash.ParameterPair.from_text(text) == p


@pytest.mark.parametrize("n", [2, 3])
def test_generated_pairs_validate(n):
    for seed in range(5):
        p = cthash.ParameterPair.generate(n, seed)
        report = cthash.validate(p.v, p.w)
        assert list(report) == [f"4{c}" for c in "abcdefghij"]
        assert all(ok for ok, _ in report.values())

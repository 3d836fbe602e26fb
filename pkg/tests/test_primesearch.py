import json

import pytest

from cyclotomy.cyclotomic import phi
from cyclotomy.polyring import compose_power, eval_int
from cyclotomy.primesearch import (PrimeSearchReport, eval_composition, is_probable_prime,
                                   mersenne_remark_check, search_a, search_n)
from cyclotomy.structure import factor_composition, is_irreducible_composition


def smallest_factor(v, limit):
    d = 2
    while d <= limit:
        if v % d == 0:
            return d
        d += 1
    return None


class TestEvalComposition:
    def test_examples(self):
        assert eval_composition(4, 2, 4) == 2 ** 8 + 1 == 257
        assert eval_composition(3, 2, 9) == 2 ** 18 + 2 ** 9 + 1 == 262657
        for k in range(1, 40):
            assert eval_composition(k, 1, 7) == eval_int(phi(k), 1)

    def test_consistency_grid(self):
        for k in range(1, 31):
            base = phi(k)
            for n in range(1, 31):
                comp = compose_power(base, n)
                factors = [phi(d) for d in factor_composition(k, n).indices]
                for a in range(1, 11):
                    v = eval_composition(k, a, n)
                    assert v == eval_int(comp, a)
                    parts = [eval_int(f, a) for f in factors]
                    prod = 1
                    for x in parts:
                        prod *= x
                    assert v == prod
                    if a > 1 and len(parts) > 1 and all(x > 1 for x in parts):
                        assert not is_probable_prime(v)


class TestPrimality:
    def test_examples(self):
        assert not is_probable_prime(1)
        assert is_probable_prime(257)
        assert smallest_factor(4294967297, 10 ** 3) == 641
        assert not is_probable_prime(4294967297)
        assert not is_probable_prime(0) and not is_probable_prime(-7)

    def test_large(self):
        assert is_probable_prime(2 ** 89 - 1)
        assert is_probable_prime(2 ** 127 - 1)
        assert not is_probable_prime((2 ** 61 - 1) * (2 ** 89 - 1))
        # 2^64 + 13 is the first prime above 2^64
        assert is_probable_prime(2 ** 64 + 13)
        assert not any(is_probable_prime(2 ** 64 + i) for i in range(13))
        # Chernick Carmichael numbers (6t+1)(12t+1)(18t+1) above 2^64 must be rejected
        found = 0
        t = 10 ** 7
        while found < 5:
            t += 1
            ps = (6 * t + 1, 12 * t + 1, 18 * t + 1)
            if all(is_probable_prime(p) for p in ps):
                n = ps[0] * ps[1] * ps[2]
                assert n > 2 ** 64 and pow(2, n - 1, n) == 1
                assert not is_probable_prime(n)
                found += 1


class TestSearchA:
    PAPER_K3_N1 = [1, 2, 3, 5, 6, 8, 12, 14, 15, 17, 20, 21, 24, 27, 33, 38, 41, 50, 54, 57,
                   59, 62, 66, 69, 71, 75, 77, 78, 80, 89, 90, 99]
    PAPER_K3_N3 = [1, 2, 3, 8, 11, 20, 21, 26, 30, 50, 51, 56, 60, 78, 98]

    def test_first_hits(self):
        assert list(search_a(3, 1, 100).hits) == self.PAPER_K3_N1
        assert list(search_a(3, 3, 100).hits) == self.PAPER_K3_N3

    def test_report_fields(self):
        r = search_a(3, 1, 100)
        assert r.count == len(r.hits) == 32
        assert r.primality_mode == "deterministic<2^64"
        assert r.irreducible
        big = search_a(3, 9, 50)
        assert big.primality_mode == "probable"

    def test_prefix_stable(self):
        full = search_a(3, 3, 300).hits
        for cut in (1, 7, 50, 123, 299):
            assert search_a(3, 3, cut).hits == tuple(a for a in full if a <= cut)

    def test_parallel_matches_serial(self):
        serial = search_a(6, 2, 400)
        for jobs in (2, 3):
            assert search_a(6, 2, 400, jobs=jobs) == serial

    def test_reducible_flagged(self):
        r = search_a(1, 5, 30)
        assert not r.irreducible
        assert r.hits == (2,)  # 2^5 - 1 = 31; a > 2 gives a proper factor a - 1
        assert "reducible" in r.to_text()
        assert not is_irreducible_composition(1, 5)

    def test_json_round_trip(self):
        r = search_a(3, 1, 60)
        data = json.loads(json.dumps(r.to_json()))
        assert list(data) == ["k", "n", "a_max", "hits", "count", "primality_mode"]
        assert PrimeSearchReport.from_json(data) == r
        data["count"] += 1
        with pytest.raises(ValueError):
            PrimeSearchReport.from_json(data)

    def test_report_invariants(self):
        with pytest.raises(ValueError):
            PrimeSearchReport(3, 1, 10, (3, 2), "probable")
        with pytest.raises(ValueError):
            PrimeSearchReport(3, 1, 10, (2, 11), "probable")


class TestSearchN:
    def test_base_two(self):
        assert search_n(3, 2, 2) == [(0, 1, True), (1, 3, True), (2, 9, True)]

    def test_base_three(self):
        assert search_n(3, 3, 1) == [(0, 1, True), (1, 3, True)]

    def test_fermat(self):
        rows = search_n(4, 2, 4)
        assert [n for _, n, _ in rows] == [1, 2, 4, 8, 16]
        assert [flag for *_, flag in rows] == [True, True, True, True, False]

    def test_domain(self):
        with pytest.raises(ValueError):
            search_n(1, 2, 3)


class TestMersenne:
    def test_examples(self):
        assert mersenne_remark_check(7) == (127, True)
        assert is_probable_prime(127)
        assert mersenne_remark_check(2) == (3, True)
        value, reducible = mersenne_remark_check(11)
        assert (value, reducible) == (2047, True)
        assert smallest_factor(2047, 100) == 23 and 23 * 89 == 2047
        assert not is_probable_prime(2047)

    def test_rejects_composite(self):
        with pytest.raises(ValueError):
            mersenne_remark_check(9)

import random
from fractions import Fraction
from math import gcd

import pytest

from conftest import fixture_text, random_graph
from dgscert import exactla as la
from dgscert.cospectral import (
    MatrixFormatError,
    format_rational_matrix,
    generalized_cospectral,
    is_regular_orthogonal,
    level,
    make_certificate,
    parse_rational_matrix,
    q_from_walk_matrices,
    theta_invariance_check,
    to_rational,
    verify_membership,
)
from dgscert.criteria import analyze, compute_invariants
from dgscert.graphio import complete_graph, empty_graph, parse_graph6
from dgscert.numtheory import factorint

F = Fraction


def perm_matrix(perm):
    n = len(perm)
    return [[int(perm[i] == j) for j in range(n)] for i in range(n)]


class TestParsing:
    def test_round_trip(self, q3):
        assert parse_rational_matrix(format_rational_matrix(q3)) == q3
        assert parse_rational_matrix("1 0\n0 1\n") == la.identity(2)
        assert parse_rational_matrix("1/2 -1/2\n-1/2 1/2")[0] == [F(1, 2), F(-1, 2)]

    @pytest.mark.parametrize("text, msg", [("", "no matrix"), ("1 x\n0 1", "bad matrix entry"),
                                           ("1/0 0\n0 1", "bad matrix entry"), ("1 0\n1", "not square")])
    def test_errors(self, text, msg):
        with pytest.raises(MatrixFormatError, match=msg):
            parse_rational_matrix(text)

    def test_entries_reduced(self, q3):
        for row in q3:
            for x in row:
                assert x.denominator >= 1 and gcd(x.numerator, x.denominator) == 1


class TestLevel:
    def test_examples(self, q3):
        assert level(to_rational(la.identity(5))) == 1
        perm = list(range(6))
        random.Random(1).shuffle(perm)
        assert level(to_rational(perm_matrix(perm))) == 1
        assert level(q3) == 3
        assert level([[F(1, 2), F(1, 3)], [F(1, 4), 0]]) == 12

    def test_regular_orthogonal(self, q3):
        assert is_regular_orthogonal(to_rational(la.identity(4)))
        assert not is_regular_orthogonal(to_rational([[1, 0], [0, -1]]))
        assert is_regular_orthogonal(q3)
        assert not is_regular_orthogonal(to_rational([[1, 0, 0], [0, 1, 0]]))
        # Qe = e but not orthogonal
        assert not is_regular_orthogonal(to_rational([[2, -1], [0, 1]]))


class TestMembership:
    def test_identity(self, g1):
        res = verify_membership(to_rational(la.identity(12)), g1)
        assert res and res.mate == g1 and res.reason == "ok"

    def test_example3(self, g3, q3):
        res = verify_membership(q3, g3)
        assert res.member
        assert res.mate != g3
        cert = make_certificate(q3, g3)
        assert cert.level == 3 and cert.refutes_dgs and cert.mate == res.mate
        # independent check of the conjugation
        h = la.mat_mul(la.mat_mul(la.transpose(q3), g3.matrix()), q3)
        assert h == [[F(x) for x in row] for row in res.mate.matrix()]

    def test_example3_as_printed_is_not_a_member(self, g3):
        q = parse_rational_matrix(fixture_text("example3_q_as_printed.txt"))
        assert is_regular_orthogonal(q)
        res = verify_membership(q, g3)
        assert not res and "0/1" in res.reason
        with pytest.raises(ValueError, match="not a member"):
            make_certificate(q, g3)

    def test_failure_reasons(self, g1):
        k2 = complete_graph(2)
        assert verify_membership(to_rational([[1, 0], [0, -1]]), k2).reason == "Qe != e"
        assert verify_membership(to_rational([[2, -1], [0, 1]]), k2).reason == "QᵀQ != I"
        assert verify_membership(to_rational(la.identity(3)), k2).reason == "dimension mismatch"
        # regular orthogonal but conjugate is not a graph
        h = [[F(-1, 3), F(2, 3), F(2, 3)], [F(2, 3), F(-1, 3), F(2, 3)], [F(2, 3), F(2, 3), F(-1, 3)]]
        assert is_regular_orthogonal(h)
        path = parse_graph6("Bg")
        assert not verify_membership(h, path)

    def test_permutation_mate_is_relabelling(self):
        g = random_graph(random.Random(2), 8)
        perm = list(range(8))
        random.Random(3).shuffle(perm)
        p = perm_matrix(perm)
        res = verify_membership(to_rational(p), g)
        # P[i][perm[i]] = 1, so PᵀAP relabels vertex i as perm[i]
        assert res and res.mate == g.permuted(perm)


class TestWalkReconstruction:
    def test_identity(self, g1):
        assert q_from_walk_matrices(g1, g1) == la.identity(12)

    def test_permutation(self):
        rng = random.Random(7)
        done = 0
        while done < 10:
            g = random_graph(rng, rng.randint(3, 10))
            if not compute_invariants(g).controllable:
                continue
            perm = list(range(g.n))
            rng.shuffle(perm)
            h = g.permuted(perm)
            q = q_from_walk_matrices(g, h)
            assert level(q) == 1 and verify_membership(q, g).mate == h
            # Q is a permutation matrix; compare with Qᵀ A(g) Q = A(h) entrywise
            assert all(sorted(row) == [0] * (g.n - 1) + [1] for row in q)
            assert la.mat_mul(la.mat_mul(la.transpose(q), g.matrix()), q) == h.matrix()
            done += 1

    def test_recovers_example3_q(self, g3, q3):
        mate = verify_membership(q3, g3).mate
        assert q_from_walk_matrices(g3, mate) == q3

    def test_errors(self, g1):
        with pytest.raises(ValueError, match="controllable"):
            q_from_walk_matrices(empty_graph(3), empty_graph(3))
        with pytest.raises(ValueError, match="order"):
            q_from_walk_matrices(g1, complete_graph(2))


class TestCospectral:
    def test_examples(self, g1, g3, q3):
        assert generalized_cospectral(g1, g1)
        assert not generalized_cospectral(complete_graph(2), empty_graph(2))
        assert not generalized_cospectral(g1, g3)
        mate = verify_membership(q3, g3).mate
        assert generalized_cospectral(g3, mate)

    def test_spectrum_but_not_complement(self):
        # K_{1,4} and C4 + K1 share sigma(A) but not sigma(complement)
        star = parse_graph6("Ds_")
        c4k1 = parse_graph6("Dl?")
        assert la.charpoly_exact(star.matrix()) == la.charpoly_exact(c4k1.matrix())
        assert not generalized_cospectral(star, c4k1)

    def test_theta_invariance(self, g3, q3):
        mate = verify_membership(q3, g3).mate
        assert theta_invariance_check(g3, mate)
        assert compute_invariants(mate).theta == 164025
        g = random_graph(random.Random(5), 9)
        assert theta_invariance_check(g, g)
        assert theta_invariance_check(g, g.permuted([8, 7, 6, 5, 4, 3, 2, 1, 0]))
        with pytest.raises(ValueError):
            theta_invariance_check(complete_graph(2), empty_graph(2))

    def test_mate_is_also_inconclusive(self, g3, q3):
        # a certified graph has no level > 1 mate, so the mate cannot be certified either
        mate = verify_membership(q3, g3).mate
        assert not analyze(mate).certified


class TestLevelConstraints:
    def test_example3(self, g3, q3):
        inv = compute_invariants(g3)
        lv = level(q3)
        assert inv.snf_walk.last % lv == 0
        assert inv.det_walk % lv == 0
        assert all(inv.delta % p == 0 for p in factorint(lv))

    def test_level_prime_is_unresolved(self, g3, q3):
        # the analysis must never exclude a prime that divides a real level
        v = analyze(g3)
        assert set(factorint(level(q3))) <= set(v.unresolved_primes)

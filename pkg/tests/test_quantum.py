import random

import pytest

from helpers import lift_to_symfunc
from kpeterson.grothendieck import dual_groth, stable_groth_vars
from kpeterson.partitions import (
    Partition,
    Permutation,
    all_permutations,
    complement,
    conjugate,
    partitions_in_rectangle,
)
from kpeterson.peterson import phi_context, tau_sigma
from kpeterson.polynomials import Poly, xq_vars
from kpeterson.quantum import (
    KBoundedPartition,
    NotInSpanError,
    bounded_to_core,
    core_to_bounded,
    fq_poly,
    g_tilde,
    grassmannian_perm,
    groth_poly,
    k_conjugate,
    lambda_map,
    phi_groth_image,
    pi_op,
    quantize,
    quantum_groth,
    s_q_poly,
)
from kpeterson.scalars import Rational
from kpeterson.suites import load_tables
from kpeterson.symfunc import SymFunc, perp

h = SymFunc.h


class TestGroth:
    def test_base_cases(self):
        assert groth_poly(Permutation.longest(4)).to_str() == "x1^3*x2^2*x3"
        assert groth_poly(Permutation.identity(3)) == 1
        v = ("x1", "x2")
        assert groth_poly(Permutation([2, 1])) == Poly.variable(v, "x1").with_vars(
            ("x1", "x2")
        )

    def test_descent_recursion_both_branches(self):
        for w in all_permutations(4):
            f = groth_poly(w)
            for i in range(1, 4):
                ws = w.times_s(i)
                image = pi_op(f, i)
                if ws.length == w.length - 1:
                    assert image == groth_poly(ws), (w, i)
                else:
                    assert image == f, (w, i)

    def test_word_independence_randomized(self):
        rng = random.Random(19)

        def groth_random_path(w):
            n = w.n
            if w == Permutation.longest(n):
                return groth_poly(w)
            ascents = [i for i in range(1, n) if w(i) < w(i + 1)]
            i = rng.choice(ascents)
            return pi_op(groth_random_path(w.times_s(i)), i)

        for _ in range(10):
            images = list(range(1, 5))
            rng.shuffle(images)
            w = Permutation(images)
            assert groth_random_path(w) == groth_poly(w)


class TestFQ:
    def test_i_zero_is_one(self):
        assert fq_poly(3, 2, 0) == 1

    def test_n2_example(self):
        v = xq_vars(2)
        x1, Q1 = Poly.variable(v, "x1"), Poly.variable(v, "Q1")
        assert fq_poly(2, 1, 1) == (1 - x1) * (1 - Q1)

    def test_q_zero_specialization_is_elementary(self):
        n = 4
        for m in range(1, n + 1):
            for i in range(m + 1):
                spec = fq_poly(n, m, i).specialize({f"Q{j}": 0 for j in range(1, n)})
                from itertools import combinations

                expected = Poly.zero(spec.vars)
                for subset in combinations(range(1, m + 1), i):
                    term = Poly.const(spec.vars, 1)
                    for j in subset:
                        term = term * (1 - Poly.variable(spec.vars, f"x{j}"))
                    expected = expected + term
                assert spec == expected


class TestQuantize:
    def test_constant(self):
        assert quantize(Poly.const(("x1",), 5), 3) == 5

    def test_basis_monomials_map_to_f_monomials(self):
        from kpeterson.quantum import quantize_context

        n = 3
        ctx = quantize_context(n)
        for exps in ctx.basis:
            poly = Poly.const(ctx.xvars, 1)
            for j, i in enumerate(exps, start=1):
                if i:
                    poly = poly * ctx._f_factors[j][i]
            assert quantize(poly, n) == ctx.f_q_monomial(exps)

    def test_x1_at_n2(self):
        v = xq_vars(2)
        x1, Q1 = Poly.variable(v, "x1"), Poly.variable(v, "Q1")
        assert quantize(Poly.variable(("x1", "x2"), "x1"), 2) == 1 - (1 - x1) * (1 - Q1)

    def test_q_zero_recovers_classical(self):
        for w in all_permutations(4):
            spec = quantum_groth(w).specialize({f"Q{i}": 0 for i in range(1, 4)})
            assert spec == groth_poly(w).with_vars(spec.vars), w

    def test_q_zero_recovers_classical_sampled_s5(self):
        rng = random.Random(37)
        pool = list(all_permutations(5))
        for w in rng.sample(pool, 5):
            spec = quantum_groth(w).specialize({f"Q{i}": 0 for i in range(1, 5)})
            assert spec == groth_poly(w).with_vars(spec.vars), w

    def test_rejects_outside_span(self):
        with pytest.raises(NotInSpanError):
            quantize(Poly.variable(("x1", "x2"), "x1") ** 5, 2)
        with pytest.raises(NotInSpanError):
            quantize(Poly.variable(xq_vars(2), "Q1"), 2)


class TestSQ:
    def test_empty_is_one(self):
        assert s_q_poly(Partition(), 2, 4) == 1

    def test_single_box(self):
        assert s_q_poly(Partition([1]), 1, 3) == fq_poly(3, 1, 1)

    def test_quantized_schur_matches_determinant_n3(self):
        # via the quantization of s_lambda(1-x_1..1-x_d); full sweep at n=3
        from kpeterson.matrices import RingMatrix

        n = 3
        for d in range(1, n):
            for lam in partitions_in_rectangle(d, n - d):
                xvars = tuple(f"x{i}" for i in range(1, n + 1))
                maxm = lam.weight + len(lam) + 1
                H = {
                    (m, 0): (Poly.const(xvars, 1) if m == 0 else Poly.zero(xvars))
                    for m in range(maxm + 1)
                }
                for j in range(1, d + 1):
                    y = 1 - Poly.variable(xvars, f"x{j}")
                    for m in range(maxm + 1):
                        H[(m, j)] = H[(m, j - 1)] + (
                            y * H[(m - 1, j)] if m else Poly.zero(xvars)
                        )
                ell = len(lam)
                if ell == 0:
                    s_poly = Poly.const(xvars, 1)
                else:
                    rows = [
                        [
                            H.get((lam.part(i) + j - i, d), Poly.zero(xvars))
                            for j in range(1, ell + 1)
                        ]
                        for i in range(1, ell + 1)
                    ]
                    s_poly = RingMatrix(rows).det()
                lhs = quantize(s_poly, n)
                assert lhs == s_q_poly(lam, d, n).with_vars(lhs.vars), (d, lam)


class TestGrassmannian:
    def test_examples(self):
        assert grassmannian_perm(Partition(), 2, 4) == Permutation.identity(4)
        assert grassmannian_perm(Partition([1]), 1, 2) == Permutation([2, 1])

    def test_lengths_and_descents(self):
        for n in (3, 4, 5):
            for d in range(1, n):
                for lam in partitions_in_rectangle(d, n - d):
                    w = grassmannian_perm(lam, d, n)
                    assert w.length == lam.weight
                    assert w.descents <= frozenset({d})

    def test_rejects_outside_rectangle(self):
        with pytest.raises(ValueError):
            grassmannian_perm(Partition([3]), 1, 3)


class TestLambdaMap:
    def test_tables(self):
        tables = load_tables()["lambda_tables"]
        for n_str, rows in tables.items():
            n = int(n_str)
            for row in rows:
                w = Permutation.from_text(row["w"])
                got = lambda_map(w)
                assert got.partition == Partition.from_text(row["lam"]), row
                assert k_conjugate(got.partition, n - 1) == Partition.from_text(
                    row["conj"]
                ), row
                assert got.is_irreducible()

    def test_constant_on_cosets(self):
        c0 = Permutation.cycle(5, 0)
        for w in [Permutation([2, 4, 1, 5, 3]), Permutation([3, 1, 4, 2, 5])]:
            base = lambda_map(w).partition
            for t in range(1, 5):
                assert lambda_map((c0**t) * w).partition == base

    def test_injective_on_stabilized_set(self):
        for n in (3, 4, 5):
            seen = {}
            for w in all_permutations(n):
                if w(1) != 1:
                    continue
                key = lambda_map(w).partition
                assert key not in seen, (w, seen[key])
                seen[key] = w
            # image is exactly the irreducible k-bounded partitions
            import math

            assert len(seen) == math.factorial(n - 1)


class TestKConjugate:
    def test_examples(self):
        assert k_conjugate(Partition([2]), 3) == Partition([1, 1])
        assert k_conjugate(Partition([3, 2, 2]), 4) == Partition([2, 2, 1, 1, 1])

    def test_core_bijection_roundtrip(self):
        from kpeterson.partitions import all_partitions_up_to

        for k in (2, 3, 4):
            for mu in all_partitions_up_to(7, max_part=k):
                core = bounded_to_core(mu, k)
                assert core_to_bounded(core, k) == mu

    def test_involution(self):
        from kpeterson.partitions import all_partitions_up_to

        for k in (3, 4):
            for mu in all_partitions_up_to(7, max_part=k):
                assert k_conjugate(k_conjugate(mu, k), k) == mu

    def test_ordinary_conjugate_inside_rectangles(self):
        for n in (4, 5):
            k = n - 1
            for d in range(1, n):
                for mu in partitions_in_rectangle(d, n - d):
                    assert k_conjugate(mu, k) == conjugate(mu)

    def test_kbounded_type(self):
        kb = KBoundedPartition(Partition([2, 1, 1]), 3)
        assert kb.multiplicities() == (2, 1, 0)
        assert kb.is_irreducible()
        assert not KBoundedPartition(Partition([1, 1, 1]), 3).is_irreducible()
        with pytest.raises(ValueError):
            KBoundedPartition(Partition([4]), 3)


class TestGrassmannianConjugates:
    def test_grassmannian_conjugates(self):
        for n in (3, 4, 5):
            for d in range(1, n):
                for mu in partitions_in_rectangle(d, n - d):
                    if not mu.parts:
                        continue  # identity loses the d-label
                    w = grassmannian_perm(mu, d, n)
                    assert k_conjugate(lambda_map(w).partition, n - 1) == complement(
                        mu, d, n
                    )


class TestGTilde:
    def test_identity(self):
        assert g_tilde(Permutation.identity(3)) == SymFunc.one()

    def test_grassmannian_images(self):
        # lambda = empty gives the identity (no descents), covered above;
        # the descent-cleared numerator form needs Des(w) = {d}.
        for n in (3, 4):
            for d in range(1, n):
                for lam in partitions_in_rectangle(d, n - d):
                    if not lam.parts:
                        continue
                    w = grassmannian_perm(lam, d, n)
                    assert g_tilde(w) == dual_groth(complement(lam, d, n)), (n, d, lam)

    def test_factored_row_n5(self):
        w = Permutation.from_text("12543")
        expected = dual_groth(Partition([1, 1, 1])) * dual_groth(Partition([2, 2]))
        assert g_tilde(w) == expected

    def test_quantized_stable_pushforward_routes_agree(self):
        # Route A: quantize the stable polynomial and push through phi.
        # Route B: the skew operator G_lambda-perp applied to g_{R_d}.
        n = 4
        ctx = phi_context(n)
        table = tau_sigma(n)
        for d in range(1, n):
            rect_weight = d * (n - d)
            for lam in partitions_in_rectangle(d, n - d):
                w = grassmannian_perm(lam, d, n)
                assert quantize(stable_groth_vars(lam, d), n) == quantum_groth(w)
                image = phi_groth_image(w) * ctx.from_symfunc(table.tau[d])
                lifted = lift_to_symfunc(
                    stable_groth_vars(lam, rect_weight or 1).with_vars(
                        tuple(f"x{i}" for i in range(1, (rect_weight or 1) + 1))
                    ),
                    rect_weight or 1,
                )
                route_b = perp(lifted, table.tau[d])
                assert route_b == dual_groth(complement(lam, d, n))
                assert image == ctx.from_symfunc(route_b)

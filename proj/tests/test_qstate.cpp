#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qhesim/distance.hpp"
#include "qhesim/gates.hpp"
#include "qhesim/linalg.hpp"
#include "qhesim/random_states.hpp"
#include "qhesim/rng.hpp"
#include "qhesim/states.hpp"

#include <cmath>

using namespace qhesim;

namespace {

DensityState qubit_state(const ComplexMatrix &mat) { return DensityState(mat, RegisterShape{2}); }

DensityState ket_state(const ComplexMatrix &ket, RegisterShape shape) {
    return DensityState(ket * ket.adjoint(), std::move(shape));
}

const ComplexMatrix plus_ket = hadamard() * basis_ket(2, 0);

Povm computational_povm() {
    return Povm({{"0", basis_projector(2, 0)}, {"1", basis_projector(2, 1)}});
}

} // namespace

TEST_CASE("state type invariants are enforced") {
    CHECK_THROWS(qubit_state(pauli_z())); // trace 0
    CHECK_NOTHROW(qubit_state(cplx{0.5, 0.0} * ComplexMatrix::identity(2)));

    ComplexMatrix bad(2, 1);
    bad(0, 0) = 2.0;
    CHECK_THROWS(PureState(bad, RegisterShape{2}));

    CHECK_THROWS(KrausChannel({cplx{0.5, 0.0} * pauli_i()}, RegisterShape{2}, RegisterShape{2}));
    CHECK_THROWS(Povm({{"0", basis_projector(2, 0)}, {"1", cplx{0.5, 0.0} * basis_projector(2, 1)}}));
}

TEST_CASE("apply_channel basics") {
    const DensityState zero = ket_state(basis_ket(2, 0), RegisterShape{2});
    const DensityState plus = ket_state(plus_ket, RegisterShape{2});
    const DensityState mixed = qubit_state(cplx{0.5, 0.0} * ComplexMatrix::identity(2));

    const KrausChannel id = unitary_channel(pauli_i(), RegisterShape{2});
    CHECK(trace_distance(apply_channel(id, plus), plus) <= 1e-12);

    CHECK(trace_distance(apply_channel(depolarising_channel(), zero), mixed) <= 1e-12);
    CHECK(trace_distance(apply_channel(dephasing_channel(), plus), mixed) <= 1e-12);
}

TEST_CASE("apply_channel acts on a register subset") {
    const ComplexMatrix ket00 = kron(basis_ket(2, 0), basis_ket(2, 0));
    const DensityState rho = ket_state(ket00, RegisterShape{2, 2});
    const KrausChannel flip = unitary_channel(pauli_x(), RegisterShape{2});
    const DensityState flipped = apply_channel(flip, rho, {1});
    const ComplexMatrix ket01 = kron(basis_ket(2, 0), basis_ket(2, 1));
    CHECK(trace_distance(flipped, ket_state(ket01, RegisterShape{2, 2})) <= 1e-12);

    CHECK_THROWS(apply_channel(flip, rho, {0, 1})); // register count mismatch
}

TEST_CASE("channels preserve trace and positivity") {
    Rng rng(17);
    for (const auto &ch : {dephasing_channel(), depolarising_channel()}) {
        for (int trial = 0; trial < 10; ++trial) {
            const DensityState rho = qubit_state(random_density_matrix(2, rng));
            const DensityState out = apply_channel(ch, rho);
            CHECK(std::abs(out.mat().trace().real() - 1.0) <= 1e-10);
            CHECK(eig_hermitian(out.mat()).values.back() >= -1e-9);
        }
    }
    const KrausChannel pad = pauli_pad(1, 0, 1, 1);
    const DensityState rho = DensityState(random_density_matrix(4, rng), RegisterShape{2, 2});
    const DensityState out = apply_channel(pad, rho);
    CHECK(std::abs(out.mat().trace().real() - 1.0) <= 1e-10);
}

TEST_CASE("trace distance values") {
    const DensityState zero = ket_state(basis_ket(2, 0), RegisterShape{2});
    const DensityState one = ket_state(basis_ket(2, 1), RegisterShape{2});
    const DensityState plus = ket_state(plus_ket, RegisterShape{2});

    CHECK(trace_distance(plus, plus) <= 1e-12);
    CHECK(trace_distance(zero, one) == doctest::Approx(1.0).epsilon(1e-12));
    // Pure-state closed form sqrt(1 - |<a|b>|^2).
    CHECK(trace_distance(zero, plus) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("distance functions reject shape mismatches") {
    const DensityState a = ket_state(basis_ket(2, 0), RegisterShape{2});
    const DensityState b(cplx{0.25, 0.0} * ComplexMatrix::identity(4), RegisterShape{2, 2});
    CHECK_THROWS(trace_distance(a, b));
    CHECK_THROWS(fidelity(a, b));
    CHECK_THROWS(helstrom(a, b));
}

TEST_CASE("fidelity values") {
    const DensityState zero = ket_state(basis_ket(2, 0), RegisterShape{2});
    const DensityState one = ket_state(basis_ket(2, 1), RegisterShape{2});
    const DensityState mixed = qubit_state(cplx{0.5, 0.0} * ComplexMatrix::identity(2));

    CHECK(fidelity(mixed, mixed) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fidelity(zero, one) <= 1e-9);
    CHECK(fidelity(mixed, zero) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("Fuchs-van de Graaf sandwich on random pairs") {
    Rng rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t dim = std::size_t{2} << rng.next_below(3); // 2, 4, 8
        const DensityState a(random_density_matrix(dim, rng), RegisterShape{dim});
        const DensityState b(random_density_matrix(dim, rng), RegisterShape{dim});
        const double f = fidelity(a, b);
        const double d = trace_distance(a, b);
        CHECK(1.0 - f <= d + 1e-9);
        CHECK(d <= std::sqrt(std::max(0.0, 1.0 - f * f)) + 1e-9);
    }
}

TEST_CASE("purify canonical form") {
    const auto p0 = purify(ket_state(basis_ket(2, 0), RegisterShape{2}));
    CHECK(p0.shape().dims == std::vector<std::size_t>{2, 1}); // rank-1 reference
    CHECK(std::abs(p0.vec()(0, 0)) == doctest::Approx(1.0));

    const auto pmix = purify(qubit_state(cplx{0.5, 0.0} * ComplexMatrix::identity(2)));
    CHECK(pmix.shape().dims == std::vector<std::size_t>{2, 2});
    const ComplexMatrix marg = partial_trace(pmix.projector(), pmix.shape(), {0});
    CHECK(max_abs_diff(marg, cplx{0.5, 0.0} * ComplexMatrix::identity(2)) <= 1e-9);

    ComplexMatrix diag(2, 2);
    diag(0, 0) = 0.75;
    diag(1, 1) = 0.25;
    const auto p = purify(qubit_state(diag));
    CHECK(std::abs(p.vec()(0, 0)) == doctest::Approx(std::sqrt(0.75)).epsilon(1e-12));
    CHECK(std::abs(p.vec()(3, 0)) == doctest::Approx(std::sqrt(0.25)).epsilon(1e-12));
    CHECK(max_abs_diff(partial_trace(p.projector(), p.shape(), {0}), diag) <= 1e-9);
}

TEST_CASE("uhlmann unitary aligns purifications") {
    Rng rng(29);

    const DensityState rho(random_density_matrix(2, rng), RegisterShape{2});
    const PureState phi = purify(rho);
    const auto same = uhlmann_unitary(phi, phi, {1});
    CHECK(same.achieved_overlap == doctest::Approx(1.0).epsilon(1e-10));

    // Local unitary equivalence recovers overlap 1.
    const std::size_t ref_dim = phi.shape().dims[1];
    const ComplexMatrix v = random_unitary(ref_dim, rng);
    const PureState rotated(mat_vec(lift_operator(v, {1}, phi.shape()), phi.vec()), phi.shape());
    const auto undo = uhlmann_unitary(phi, rotated, {1});
    CHECK(undo.achieved_overlap == doctest::Approx(1.0).epsilon(1e-8));

    // Achieved overlap equals the fidelity of the complementary marginals.
    for (int trial = 0; trial < 10; ++trial) {
        ComplexMatrix r1 = random_density_matrix(2, rng);
        ComplexMatrix r2 = random_density_matrix(2, rng);
        // Mix toward identity so both purifications share the shape [2, 2].
        r1 = cplx{0.9, 0.0} * r1 + cplx{0.05, 0.0} * ComplexMatrix::identity(2);
        r2 = cplx{0.9, 0.0} * r2 + cplx{0.05, 0.0} * ComplexMatrix::identity(2);
        const PureState pa = purify(DensityState(r1, RegisterShape{2}));
        const PureState pb = purify(DensityState(r2, RegisterShape{2}));
        const auto res = uhlmann_unitary(pa, pb, {1});
        CHECK(res.achieved_overlap == doctest::Approx(fidelity(r1, r2)).epsilon(1e-8));

        const double raw = std::abs((pb.vec().adjoint() * pa.vec())(0, 0));
        CHECK(res.achieved_overlap >= raw - 1e-10);

        CHECK(max_abs_diff(res.unitary.adjoint() * res.unitary,
                           ComplexMatrix::identity(res.unitary.rows())) <= 1e-9);
    }

    CHECK_THROWS(uhlmann_unitary(
        phi, purify(DensityState(random_density_matrix(4, rng), RegisterShape{4})), {1}));
}

TEST_CASE("helstrom measurement") {
    const DensityState zero = ket_state(basis_ket(2, 0), RegisterShape{2});
    const DensityState one = ket_state(basis_ket(2, 1), RegisterShape{2});
    const DensityState plus = ket_state(plus_ket, RegisterShape{2});

    CHECK(helstrom(zero, zero).success == doctest::Approx(0.5));
    CHECK(helstrom(zero, one).success == doctest::Approx(1.0));
    CHECK(helstrom(zero, plus).success ==
          doctest::Approx(0.5 * (1.0 + 1.0 / std::sqrt(2.0))).epsilon(1e-12));
}

TEST_CASE("helstrom beats random two-outcome strategies") {
    Rng rng(31);
    for (int pair = 0; pair < 200; ++pair) {
        const std::size_t dim = std::size_t{2} << rng.next_below(2); // 2 or 4
        const DensityState a(random_density_matrix(dim, rng), RegisterShape{dim});
        const DensityState b(random_density_matrix(dim, rng), RegisterShape{dim});
        const double best = helstrom(a, b).success;
        for (int probe = 0; probe < 500; ++probe) {
            const ComplexMatrix e = random_effect(dim, rng);
            const double success =
                0.5 * (e * a.mat()).trace().real() +
                0.5 * ((ComplexMatrix::identity(dim) - e) * b.mat()).trace().real();
            CHECK(success <= best + 1e-9);
        }
    }
}

TEST_CASE("pretty good measurement") {
    std::vector<DensityState> orthogonal;
    for (std::size_t i = 0; i < 4; ++i)
        orthogonal.push_back(ket_state(basis_ket(4, i), RegisterShape{4}));
    CHECK(pgm_uniform(orthogonal).success == doctest::Approx(1.0).epsilon(1e-10));

    std::vector<DensityState> identical(4, ket_state(basis_ket(4, 0), RegisterShape{4}));
    CHECK(pgm_uniform(identical).success == doctest::Approx(0.25).epsilon(1e-10));

    CHECK_THROWS(pgm({}));
}

TEST_CASE("pgm POVM is complete after null completion") {
    // Rank-deficient ensemble: the null outcome absorbs the orthocomplement.
    std::vector<DensityState> states;
    states.push_back(ket_state(basis_ket(4, 0), RegisterShape{4}));
    states.push_back(ket_state(basis_ket(4, 1), RegisterShape{4}));
    const auto result = pgm_uniform(states);

    ComplexMatrix sum(4, 4);
    for (const auto &e : result.povm.elements()) sum += e.op;
    CHECK(max_abs_diff(sum, ComplexMatrix::identity(4)) <= 1e-9);
    CHECK(result.povm.element("null")(3, 3).real() == doctest::Approx(1.0));

    // PGM success respects the pairwise-fidelity bound on random ensembles.
    Rng rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<DensityState> ens;
        for (int k = 0; k < 4; ++k)
            ens.push_back(DensityState(random_density_matrix(4, rng), RegisterShape{4}));
        double pair_sum = 0.0;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                if (a != b) pair_sum += fidelity(ens[a], ens[b]);
        CHECK(pgm_uniform(ens).success >= 1.0 - pair_sum / 8.0 - 1e-9);
    }
}

TEST_CASE("measure outcome distributions") {
    const DensityState zero = ket_state(basis_ket(2, 0), RegisterShape{2});
    auto probs = measure(computational_povm(), zero);
    CHECK(probs["0"] == doctest::Approx(1.0));
    CHECK(probs["1"] == doctest::Approx(0.0));

    const DensityState mixed = qubit_state(cplx{0.5, 0.0} * ComplexMatrix::identity(2));
    probs = measure(computational_povm(), mixed);
    CHECK(probs["0"] == doctest::Approx(0.5));
    CHECK(probs["1"] == doctest::Approx(0.5));

    // Output-bit POVM on (I/2) (x) |0><0|: weight 1/2 per matching data pair.
    std::vector<PovmElement> elems;
    for (int x0 = 0; x0 < 2; ++x0)
        for (int x1 = 0; x1 < 2; ++x1)
            elems.push_back(
                {std::string{static_cast<char>('0' + x0), static_cast<char>('0' + x1)},
                 kron(ComplexMatrix::identity(2), cplx{0.5, 0.0} * basis_projector(2, x0))});
    const Povm witness(std::move(elems));
    const DensityState out(kron(cplx{0.5, 0.0} * ComplexMatrix::identity(2), basis_projector(2, 0)),
                           RegisterShape{2, 2});
    probs = measure(witness, out);
    CHECK(probs["00"] == doctest::Approx(0.5));
    CHECK(probs["01"] == doctest::Approx(0.5));
    CHECK(probs["10"] == doctest::Approx(0.0));
    CHECK(probs["11"] == doctest::Approx(0.0));
}

TEST_CASE("measure and apply_channel reject mismatched shapes") {
    const DensityState big(cplx{0.25, 0.0} * ComplexMatrix::identity(4), RegisterShape{4});
    CHECK_THROWS(measure(computational_povm(), big));

    const KrausChannel flip = unitary_channel(pauli_x(), RegisterShape{2});
    CHECK_THROWS(apply_channel(flip, big, {0})); // register of dimension 4, channel wants 2
}

TEST_CASE("adjoint channel duality and unitality") {
    Rng rng(41);
    const ComplexMatrix u = random_unitary(2, rng);
    const auto adj_u = adjoint_channel(unitary_channel(u, RegisterShape{2}));
    const ComplexMatrix probe = random_density_matrix(2, rng);
    CHECK(max_abs_diff(adj_u.apply_to_operator(probe), u.adjoint() * probe * u) <= 1e-12);

    const auto adj_depol = adjoint_channel(depolarising_channel());
    CHECK(adj_depol.unitality_defect() <= 1e-12);
    CHECK(max_abs_diff(adj_depol.apply_to_operator(ComplexMatrix::identity(2)),
                       ComplexMatrix::identity(2)) <= 1e-12);

    // Tr(rho N(sigma)) = Tr(N*(rho) sigma) on random triples.
    for (int trial = 0; trial < 20; ++trial) {
        KrausChannel ch = trial % 2 == 0 ? depolarising_channel() : dephasing_channel();
        const ComplexMatrix rho = random_density_matrix(2, rng);
        const ComplexMatrix sigma = random_density_matrix(2, rng);
        const auto adj = adjoint_channel(ch);
        const double lhs = (rho * ch.apply_to_operator(sigma)).trace().real();
        const double rhs = (adj.apply_to_operator(rho) * sigma).trace().real();
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qhesim/distance.hpp"
#include "qhesim/gates.hpp"
#include "qhesim/linalg.hpp"
#include "qhesim/qhe_scheme.hpp"
#include "qhesim/sot_channels.hpp"

#include <cmath>

using namespace qhesim;

TEST_CASE("scheme registry") {
    CHECK(scheme_names().size() == 3);
    for (const auto &name : scheme_names()) CHECK(scheme_by_name(name).name() == name);
    CHECK_THROWS(scheme_by_name("nonsense"));

    CHECK(scheme_trivial().num_keys() == 1);
    CHECK(scheme_correlated_pad().num_keys() == 8);
    CHECK(scheme_independent_qotp().num_keys() == 16);
}

TEST_CASE("round trips are CPTP for every key and family member") {
    const auto scheme = scheme_correlated_pad();
    for (const auto &fk : scheme.family_keys())
        for (std::uint32_t key = 0; key < scheme.num_keys(); ++key) {
            // Constructor re-validates completeness; Choi must be a state.
            const auto j = choi(scheme.round_trip(fk, key));
            CHECK(std::abs(j.mat().trace().real() - 1.0) <= 1e-10);
        }
}

TEST_CASE("trivial scheme metrics") {
    const auto scheme = scheme_trivial();
    const auto eps = correctness_eps(scheme);
    CHECK(eps.value <= 1e-12);

    const auto eps_d = data_privacy_eps(scheme);
    CHECK(eps_d.value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(eps_d.witness == "|0,0> vs |1,0>");

    const auto ub = circuit_privacy_ub(scheme);
    CHECK(ub.value == 0.0); // actual = ideal, identity simulator

    const auto lb = circuit_privacy_lb(scheme);
    CHECK(lb.value <= 1e-9);
}

TEST_CASE("correlated-pad scheme metrics") {
    const auto scheme = scheme_correlated_pad();
    CHECK(correctness_eps(scheme).value <= 1e-9);

    // Parity leak: the key-averaged ciphertexts of |0,0> and |1,0> have
    // orthogonal supports.
    const ComplexMatrix in0 = kron(basis_ket(2, 0), basis_ket(2, 0));
    const ComplexMatrix in1 = kron(basis_ket(2, 1), basis_ket(2, 0));
    const ComplexMatrix avg0 = scheme.average_ciphertext(in0 * in0.adjoint());
    const ComplexMatrix avg1 = scheme.average_ciphertext(in1 * in1.adjoint());
    CHECK((avg0 * avg1).max_abs() <= 1e-12);
    CHECK(data_privacy_eps(scheme).value == doctest::Approx(1.0).epsilon(1e-12));

    CHECK(circuit_privacy_ub(scheme).value == 0.0);
    CHECK(circuit_privacy_lb(scheme).value <= 1e-9);
}

TEST_CASE("independent one-time pad scheme metrics") {
    const auto scheme = scheme_independent_qotp();

    // Every key-averaged ciphertext is maximally mixed.
    const ComplexMatrix in0 = kron(basis_ket(2, 0), basis_ket(2, 1));
    CHECK(max_abs_diff(scheme.average_ciphertext(in0 * in0.adjoint()),
                       cplx{0.25, 0.0} * ComplexMatrix::identity(4)) <= 1e-12);
    CHECK(data_privacy_eps(scheme).value <= 1e-9);

    const auto eps = correctness_eps(scheme);
    CHECK(eps.value == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(eps.witness == "channel F_(0,1), key (a1,b1,a2,b2)=(1,0,0,0), input |0,0>");

    // Direct evaluation at the witness: decrypted output orthogonal to ideal.
    const KrausChannel round = scheme.round_trip("01", 1);
    const ComplexMatrix plain = kron(basis_ket(2, 0), basis_ket(2, 0));
    const ComplexMatrix got = round.apply_to_operator(plain * plain.adjoint());
    const ComplexMatrix want =
        kron(cplx{0.5, 0.0} * ComplexMatrix::identity(2), basis_projector(2, 0));
    CHECK(trace_distance(got, want) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hypothesis testing bounds for the strong OT family") {
    // The |0,0>|0,0> witness with the output-bit POVM: error exactly 1/2,
    // independent of scheme internals.
    const auto witness = hypothesis_witness_state();
    for (const auto &name : scheme_names()) {
        const auto scheme = scheme_by_name(name);
        CHECK(hypothesis_testing_error(scheme, witness, hypothesis_witness_povm()) ==
              doctest::Approx(0.5).epsilon(1e-9));
        CHECK(hypothesis_testing_error(scheme, witness, hypothesis_uniform_povm()) ==
              doctest::Approx(0.75).epsilon(1e-9));
    }
}

TEST_CASE("hypothesis testing rejects POVMs keyed off the family") {
    const auto scheme = scheme_trivial();
    const Povm wrong({{"a", cplx{0.5, 0.0} * ComplexMatrix::identity(16)},
                      {"b", cplx{0.5, 0.0} * ComplexMatrix::identity(16)}});
    CHECK_THROWS(hypothesis_testing_error(scheme, hypothesis_witness_state(), wrong));
}

TEST_CASE("hypothesis testing on a singleton family is free") {
    // One delegable channel: the singleton POVM {I} never errs.
    std::vector<QheScheme::FamilyMember> family;
    const KrausChannel id = unitary_channel(ComplexMatrix::identity(4), RegisterShape{2, 2});
    family.push_back({"id", id, id});
    const QheScheme singleton("singleton", 0, RegisterShape{2, 2}, RegisterShape{2, 2},
                              std::move(family), {id}, {id}, {"()"});

    const NamedPureState psi{"|0,0>",
                             PureState(kron(basis_ket(2, 0), basis_ket(2, 0)), RegisterShape{2, 2}),
                             {0, 1}};
    const Povm whole({{"id", ComplexMatrix::identity(4)}});
    CHECK(hypothesis_testing_error(singleton, psi, whole) == doctest::Approx(0.0));
}

TEST_CASE("cheating-Alice PGM stays at chance for faithful schemes") {
    for (const auto &name : scheme_names()) {
        const auto scheme = scheme_by_name(name);
        for (const auto &probe : cheating_probes()) {
            const double success = cheating_alice_success(scheme, probe);
            CHECK(success <= 0.5 + 1e-9);
            CHECK(success >= 0.25 - 1e-9); // never worse than guessing
        }
        const auto lb = circuit_privacy_lb(scheme);
        CHECK(lb.value >= 0.0);
        CHECK(lb.value <= 0.75);
    }
}

TEST_CASE("metric bundle and the no-go report") {
    const auto trivial = scheme_metrics(scheme_trivial());
    CHECK(trivial.eps <= 1e-9);
    CHECK(trivial.eps_d == doctest::Approx(1.0));
    CHECK(trivial.eps_c_ub == 0.0);
    CHECK(trivial.bound_lhs == doctest::Approx(1.0));
    CHECK(trivial.bound_holds);
    CHECK(trivial.bounds_consistent);

    const auto pad = scheme_metrics(scheme_correlated_pad());
    CHECK(pad.eps <= 1e-9);
    CHECK(pad.eps_d == doctest::Approx(1.0));
    CHECK(pad.eps_c_ub == 0.0);
    CHECK(pad.bound_holds);
    CHECK(pad.bounds_consistent);

    const auto qotp = scheme_metrics(scheme_independent_qotp());
    CHECK(qotp.eps == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(qotp.eps_d <= 1e-9);
    CHECK(qotp.bound_lhs >= 4.0 - 1e-6); // dominated by the correctness term
    CHECK(qotp.bound_holds);
    CHECK(qotp.bounds_consistent);
}

TEST_CASE("metric evaluation is deterministic") {
    const auto a = scheme_metrics(scheme_independent_qotp(), 123);
    const auto b = scheme_metrics(scheme_independent_qotp(), 123);
    CHECK(a.eps == b.eps);
    CHECK(a.eps_d == b.eps_d);
    CHECK(a.eps_c_lb == b.eps_c_lb);
    CHECK(a.eps_c_ub == b.eps_c_ub);
    CHECK(a.eps_witness == b.eps_witness);
}

TEST_CASE("data privacy is symmetric and key-relabeling invariant") {
    const auto scheme = scheme_correlated_pad();
    const auto pool = privacy_input_pool();
    const ComplexMatrix avg_a = scheme.average_ciphertext(pool[0].mat);
    const ComplexMatrix avg_b = scheme.average_ciphertext(pool[3].mat);
    CHECK(trace_distance(avg_a, avg_b) == doctest::Approx(trace_distance(avg_b, avg_a)));

    // Reversing the key table changes nothing observable.
    std::vector<QheScheme::FamilyMember> family;
    for (const auto &fk : scheme.family_keys())
        family.push_back({fk, scheme.family_member(fk).ideal, scheme.family_member(fk).eval});
    std::vector<KrausChannel> enc, dec;
    std::vector<std::string> labels;
    for (std::uint32_t k = 0; k < scheme.num_keys(); ++k) {
        const std::uint32_t src = static_cast<std::uint32_t>(scheme.num_keys()) - 1 - k;
        enc.push_back(scheme.enc_channel(src));
        dec.push_back(scheme.dec_channel(src));
        labels.push_back(scheme.key_label(src));
    }
    const QheScheme relabeled("correlated-pad-relabeled", scheme.key_length(), scheme.input_shape(),
                              scheme.cipher_shape(), std::move(family), std::move(enc),
                              std::move(dec), std::move(labels));
    CHECK(data_privacy_eps(relabeled).value ==
          doctest::Approx(data_privacy_eps(scheme).value).epsilon(1e-12));
}

TEST_CASE("scheme construction guards") {
    CHECK_THROWS(QheScheme("bad", 9, RegisterShape{2, 2}, RegisterShape{2, 2}, {}, {}, {}, {}));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qhesim/attacks.hpp"

#include <json.hpp>

#include <cmath>

using namespace qhesim;

TEST_CASE("PGM attack on the bell instance reads both bits") {
    const auto report = alice_pgm_attack(bell_instance());
    CHECK(report.success == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(report.bound == doctest::Approx(1.0).epsilon(1e-9)); // f = 0, delta = 0
    CHECK(report.slack >= -1e-9);
}

TEST_CASE("PGM attack on the degenerate instance is blind guessing") {
    const auto report = alice_pgm_attack(no_encoding_instance());
    CHECK(report.success == doctest::Approx(0.25).epsilon(1e-9));
    CHECK(report.bound <= 0.25); // 1 - f - sqrt(delta(1-delta)) with f = 1
}

TEST_CASE("PGM attack respects its floor across the rotation sweep") {
    for (int k = 1; k <= 8; ++k) {
        const double theta = k * M_PI / 9.0;
        const auto report = alice_pgm_attack(rotation_instance(theta));
        CHECK(report.success >= report.bound - 1e-6);
    }
}

TEST_CASE("superposition attack on the bell instance learns nothing") {
    const auto detail = bob_superposition_attack_detail(bell_instance(), 0, 1);
    CHECK(detail.f <= 1e-9);
    CHECK(detail.delta <= 1e-9);
    CHECK(detail.report.success == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(detail.report.bound == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(detail.accept_defect <= 1e-9);
    CHECK(detail.residual_trace_distance <= 1e-9); // = f exactly at delta = 0
}

TEST_CASE("superposition attack is tight on the pointer instance") {
    // Branch pair (0,0) vs (0,1): fidelity 1/2 at delta = 0.
    const auto detail =
        bob_superposition_attack_detail(pointer_instance(), pair_index(0, 0), pair_index(0, 1));
    CHECK(detail.f == doctest::Approx(0.5).epsilon(1e-7));
    CHECK(detail.delta <= 1e-9);
    // Delta(rho_B^(0), rho_B^(1)) = f exactly when delta = 0.
    CHECK(detail.residual_trace_distance == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(detail.report.success == doctest::Approx(0.75).epsilon(1e-6));
    CHECK(detail.report.bound == doctest::Approx(0.75).epsilon(1e-9));
    CHECK(detail.report.slack >= -1e-6);
    CHECK(detail.cauchy_schwarz_margin >= -1e-9);
}

TEST_CASE("superposition attack floor holds across the rotation sweep") {
    for (int k = 1; k <= 8; ++k) {
        const double theta = k * M_PI / 9.0;
        const auto report = bob_superposition_attack(rotation_instance(theta));
        CHECK(report.success >= report.bound - 1e-6);
        CHECK(report.success >= 0.5 - 1e-9); // Helstrom never loses to guessing
    }
}

TEST_CASE("copying attack reads the index off the degenerate instance") {
    const auto detail = bob_superposition_attack_detail(no_encoding_instance(), 0, 1);
    CHECK(detail.f == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(detail.report.success == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(detail.report.success >= detail.report.bound - 1e-6);
}

TEST_CASE("superposition attack rejects equal branch pairs") {
    CHECK_THROWS(bob_superposition_attack(bell_instance(), 1, 1));
}

TEST_CASE("attack reports serialize to JSON") {
    const auto report = alice_pgm_attack(bell_instance());
    const auto doc = nlohmann::json::parse(to_json(report));
    CHECK(doc.at("attack") == "alice-pgm");
    CHECK(doc.at("success").get<double>() == doctest::Approx(1.0));
    CHECK(doc.at("bound").get<double>() == doctest::Approx(1.0));
    CHECK(doc.at("slack").get<double>() >= -1e-9);
    CHECK(doc.at("witness").get<std::string>().find("bell") != std::string::npos);
}

TEST_CASE("helstrom attack on protocol 4") {
    const auto trivial = bob_helstrom_attack_on_protocol4(scheme_trivial());
    CHECK(trivial.success == doctest::Approx(1.0).epsilon(1e-9)); // plaintexts orthogonal
    CHECK(trivial.bound == doctest::Approx(1.0).epsilon(1e-9));

    const auto pad = bob_helstrom_attack_on_protocol4(scheme_correlated_pad());
    CHECK(pad.success == doctest::Approx(1.0).epsilon(1e-9)); // parity leak
    CHECK(pad.slack >= -1e-9);

    const auto qotp = bob_helstrom_attack_on_protocol4(scheme_independent_qotp());
    CHECK(qotp.success == doctest::Approx(0.5).epsilon(1e-9)); // both averages I/4
    CHECK(qotp.bound == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("OT bound certification: bell instance is tight") {
    const auto rep = certify_ot_bound(bell_instance());
    CHECK(rep.pass);
    CHECK(rep.p_a == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(rep.p_b == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(rep.delta <= 1e-9);
    CHECK(rep.lhs == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("OT bound certification across instances") {
    CHECK(certify_ot_bound(pointer_instance()).pass);
    CHECK(certify_ot_bound(no_encoding_instance()).pass);
    for (int k = 1; k <= 8; ++k) {
        const auto rep = certify_ot_bound(rotation_instance(k * M_PI / 9.0));
        CHECK(rep.pass);
        CHECK(rep.slack >= -1e-6);
        CHECK(rep.max_complement_fidelity <= rep.complement_bound + 1e-6);
        CHECK(rep.p_a >= rep.pgm_bound - 1e-9);
        CHECK(rep.residual_trace_gap >= -1e-6);
        CHECK(rep.cauchy_schwarz_margin >= -1e-9);
    }
}

TEST_CASE("scheme no-go certification on all schemes") {
    const auto trivial = certify_scheme_bound(scheme_trivial());
    CHECK(trivial.consistent);
    CHECK(trivial.bound_holds);
    CHECK(trivial.lhs == doctest::Approx(1.0).epsilon(1e-9)); // 1 + 0 + 0
    CHECK(trivial.honest_success == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(trivial.p_b == doctest::Approx(1.0).epsilon(1e-9)); // achieves the ceiling

    const auto pad = certify_scheme_bound(scheme_correlated_pad());
    CHECK(pad.consistent);
    CHECK(pad.bound_holds);
    CHECK(pad.p_b == doctest::Approx(pad.p_b_ceiling).epsilon(1e-9));

    const auto qotp = certify_scheme_bound(scheme_independent_qotp());
    CHECK(qotp.consistent);
    CHECK(qotp.bound_holds);
    CHECK(qotp.lhs >= 4.0 - 1e-6); // correctness term dominates
    CHECK(qotp.p_b <= 0.5 + 1e-9);
    CHECK(qotp.delta_ot == doctest::Approx(0.25).epsilon(1e-9)); // hedged scrambled keys
}

#include "doctest.h"

#include "oracle/dense.hpp"
#include "qz2/tableau.hpp"

#include <cmath>

using namespace qz2;

TEST_SUITE_BEGIN("tableau");

namespace {
Pauli P(const char* s) { return Pauli::from_string(s); }
} // namespace

TEST_CASE("hadamard on |0>") {
    auto st = StabilizerState::all_zero(1);
    st.apply_clifford(CliffordGate::h(), {0});
    CHECK(st.k() == 1);
    CHECK(st.generator(0).str() == "+X");
}

TEST_CASE("cnot conjugates {X1, Z2} to {X1X2, Z1Z2}") {
    auto st = StabilizerState::from_generators(2, {P("+XI"), P("+IZ")});
    st.apply_clifford(CliffordGate::cnot(), {0, 1});
    auto canon = st.canonical_generators();
    CHECK(canon[0].str() == "+XX");
    CHECK(canon[1].str() == "+ZZ");
}

TEST_CASE("measure X on |+> is deterministic +1") {
    auto st = StabilizerState::all_plus(1);
    RngStream rng(1);
    auto r = st.measure(P("+X"), rng);
    CHECK(r.deterministic);
    CHECK(r.outcome == +1);
    CHECK(st.generator(0).str() == "+X");
}

TEST_CASE("measure ZZ on |++> is uniform and entangles") {
    int plus = 0, minus = 0;
    for (int seed = 0; seed < 400; ++seed) {
        auto st = StabilizerState::all_plus(2);
        RngStream rng(static_cast<uint64_t>(seed));
        auto r = st.measure(P("+ZZ"), rng);
        CHECK(!r.deterministic);
        (r.outcome == 1 ? plus : minus)++;
        CHECK(st.contains(P("+XX")) == +1);
        CHECK(st.contains(P("+ZZ")) == r.outcome);
    }
    CHECK(plus > 140);
    CHECK(minus > 140);
}

TEST_CASE("dephasing fixed point, GHZ stabilizer loss, full decoherence") {
    auto plus = StabilizerState::all_plus(1);
    plus.dephase(P("+X"));
    CHECK(plus.k() == 1);
    CHECK(plus.generator(0).str() == "+X");

    auto ghz = StabilizerState::from_generators(2, {P("+XX"), P("+ZZ")});
    ghz.dephase(P("+XI"));
    CHECK(ghz.k() == 1);
    CHECK(ghz.canonical_generators()[0].str() == "+XX");

    auto zero = StabilizerState::all_zero(1);
    zero.dephase(P("+X"));
    CHECK(zero.k() == 0);
}

TEST_CASE("entropy on spec examples") {
    auto prod = StabilizerState::all_zero(4);
    CHECK(prod.entropy({0, 1}) == 0.0);

    auto ghz4 = StabilizerState::from_generators(
        4, {P("+XXXX"), P("+ZZII"), P("+IZZI"), P("+IIZZ")});
    CHECK(ghz4.entropy({0, 1}) == 1.0);
    CHECK(ghz4.mutual_information({0, 1}, {2, 3}) == 2.0);

    // quasi-GHZ on 3 qubits: {XXX, IZZ}
    auto quasi = StabilizerState::from_generators(3, {P("+XXX"), P("+IZZ")});
    auto dense = oracle::DenseState::from_stabilizer(quasi);
    CHECK(quasi.entropy({0}) == doctest::Approx(dense.entropy_bits({0})).epsilon(1e-9));
    CHECK(quasi.entropy({1}) == doctest::Approx(dense.entropy_bits({1})).epsilon(1e-9));
    CHECK(quasi.entropy({1, 2}) == doctest::Approx(dense.entropy_bits({1, 2})).epsilon(1e-9));
    // full-system entropy is n - k
    CHECK(quasi.entropy({0, 1, 2}) == 1.0);
}

TEST_CASE("contains on spec examples") {
    auto ghz = StabilizerState::from_generators(2, {P("+XX"), P("+ZZ")});
    CHECK(ghz.contains(P("+ZZ")) == +1);
    CHECK(ghz.contains(P("-ZZ")) == -1);
    CHECK(ghz.contains(P("+ZI")) == 0);
    CHECK(ghz.contains(P("+YY")) == -1); // YY = -XX.ZZ... sign fixed by group
}

TEST_CASE("random stabilizer state: contains matches dense |<P>|^2") {
    RngStream rng(42);
    for (int rep = 0; rep < 30; ++rep) {
        int n = 6;
        auto st = StabilizerState::all_plus(n);
        for (int g = 0; g < 40; ++g) {
            auto gate = sample(clifford2_all(), rng);
            int a = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
            int b = static_cast<int>(rng.below(static_cast<uint64_t>(n - 1)));
            if (b >= a) ++b;
            st.apply_clifford(gate, {a, b});
        }
        auto dense = oracle::DenseState::from_stabilizer(st);
        for (int t = 0; t < 20; ++t) {
            Pauli p(n);
            for (int q = 0; q < n; ++q) {
                int c = static_cast<int>(rng.below(4));
                if (c & 1) p.set_x(q, true);
                if (c & 2) p.set_z(q, true);
            }
            p.set_phase2(p.y_count() & 1);
            double e2 = std::norm(dense.expect(p));
            int c = st.contains(p);
            if (c == 0) CHECK(e2 < 1e-9);
            else CHECK(e2 == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("dense-oracle equivalence over random operation sequences") {
    // conditioned on identical outcomes, the stabilizer state and the dense
    // channel/projector oracle agree to trace distance < 1e-10
    for (uint64_t seed = 0; seed < 8; ++seed) {
        int n = 2 + static_cast<int>(seed % 5); // 2..6
        RngStream rng(seed * 977 + 3);
        auto st = StabilizerState::all_plus(n);
        auto dn = oracle::DenseState::all_plus(n);
        int ops = 200;
        for (int op = 0; op < ops; ++op) {
            int what = static_cast<int>(rng.below(4));
            if (what == 0) { // 1q clifford
                auto g = sample(clifford1_all(), rng);
                int a = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
                st.apply_clifford(g, {a});
                dn.apply_unitary(g, {a});
            } else if (what == 1 && n >= 2) { // 2q clifford
                auto g = sample(clifford2_all(), rng);
                int a = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
                int b = static_cast<int>(rng.below(static_cast<uint64_t>(n - 1)));
                if (b >= a) ++b;
                st.apply_clifford(g, {a, b});
                dn.apply_unitary(g, {a, b});
            } else {
                // random 1- or 2-site hermitian pauli
                Pauli p(n);
                int a = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
                int ca = 1 + static_cast<int>(rng.below(3));
                if (ca & 1) p.set_x(a, true);
                if (ca & 2) p.set_z(a, true);
                if (rng.bit()) {
                    int b = static_cast<int>(rng.below(static_cast<uint64_t>(n - 1)));
                    if (b >= a) ++b;
                    int cb = 1 + static_cast<int>(rng.below(3));
                    if (cb & 1) p.set_x(b, true);
                    if (cb & 2) p.set_z(b, true);
                }
                p.set_phase2(p.y_count() & 1);
                if (what == 2) {
                    auto r = st.measure(p, rng);
                    double prob = dn.project(p, r.outcome);
                    if (r.deterministic) CHECK(prob == doctest::Approx(1.0).epsilon(1e-9));
                    else CHECK(prob == doctest::Approx(0.5).epsilon(1e-9));
                } else {
                    st.dephase(p);
                    dn.dephase(p);
                }
            }
            if (op % 50 == 49) {
                auto sd = oracle::DenseState::from_stabilizer(st);
                CHECK(sd.trace_distance(dn) < 1e-10);
                REQUIRE(st.check_invariants());
            }
        }
        auto sd = oracle::DenseState::from_stabilizer(st);
        CHECK(sd.trace_distance(dn) < 1e-10);
    }
}

TEST_CASE("purity monotonicity and k bounds") {
    RngStream rng(5);
    auto st = StabilizerState::all_plus(5);
    for (int op = 0; op < 300; ++op) {
        int kb = st.k();
        Pauli p(5);
        int a = static_cast<int>(rng.below(5));
        int c = 1 + static_cast<int>(rng.below(3));
        if (c & 1) p.set_x(a, true);
        if (c & 2) p.set_z(a, true);
        p.set_phase2(p.y_count() & 1);
        if (rng.bit()) {
            st.measure(p, rng);
            CHECK(st.k() >= kb);
        } else {
            st.dephase(p);
            CHECK(st.k() <= kb);
        }
        CHECK(st.k() <= 5);
        CHECK(st.k() >= 0);
    }
}

TEST_CASE("determinism: same seed, same sequence, same state") {
    auto run = [](uint64_t seed) {
        RngStream rng(seed);
        auto st = StabilizerState::all_plus(8);
        for (int i = 0; i < 200; ++i) {
            int a = static_cast<int>(rng.below(8));
            if (rng.bit()) st.measure(Pauli::zz(8, a, (a + 1) % 8), rng);
            else st.measure(Pauli::single_x(8, a), rng);
        }
        return st;
    };
    auto a = run(123), b = run(123), c = run(124);
    CHECK(a.same_state(b));
    CHECK(!a.same_state(c)); // overwhelmingly likely to differ
}

TEST_CASE("Z2 strong symmetry: X-string sector preserved") {
    RngStream rng(17);
    int n = 6;
    Pauli xs = Pauli::x_string_all(n);
    auto st = StabilizerState::all_plus(n);
    CHECK(st.contains(xs) == +1);
    for (int op = 0; op < 200; ++op) {
        int a = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
        int what = static_cast<int>(rng.below(3));
        if (what == 0) st.measure(Pauli::zz(n, a, (a + 1) % n), rng);
        else if (what == 1) st.dephase(Pauli::single_x(n, a));
        else st.apply_clifford(sample(clifford2_fix_xx(), rng), {a, (a + 1) % n});
        // ZZ measurements, X dephasing and symmetric unitaries all commute
        // with the global X string, so sector membership never changes
        CHECK(st.contains(xs) == +1);
    }
}

TEST_CASE("measure_forced replays and flags impossible outcomes") {
    auto st = StabilizerState::all_plus(2);
    auto r = st.measure_forced(P("+ZZ"), -1);
    CHECK(r.possible);
    CHECK(!r.deterministic);
    auto r2 = st.measure_forced(P("+ZZ"), +1);
    CHECK(r2.deterministic);
    CHECK(!r2.possible); // state says -1
    auto r3 = st.measure_forced(P("+ZZ"), -1);
    CHECK(r3.deterministic);
    CHECK(r3.possible);
}

TEST_CASE("from_generators rejects dependent or anticommuting sets") {
    CHECK_THROWS(StabilizerState::from_generators(2, {P("+XX"), P("+ZZ"), P("-YY")}));
    CHECK_THROWS(StabilizerState::from_generators(2, {P("+XI"), P("+ZI")}));
}

TEST_SUITE_END();

#include "doctest.h"

#include "qz2/pauli.hpp"

using qz2::Pauli;

TEST_SUITE_BEGIN("pauli");

TEST_CASE("string round trip and hermiticity") {
    for (const char* s : {"+XIZY", "-ZZ", "+Y", "-YY", "+IIII", "-XZ"}) {
        Pauli p = Pauli::from_string(s);
        CHECK(p.str() == s);
        CHECK(p.hermitian());
    }
    CHECK(Pauli::from_string("iX").hermitian() == false);
}

TEST_CASE("signs") {
    CHECK(Pauli::from_string("+Y").sign() == +1);
    CHECK(Pauli::from_string("-Y").sign() == -1);
    CHECK(Pauli::from_string("-ZZ").sign() == -1);
    Pauli p = Pauli::from_string("+XX");
    p.set_sign(-1);
    CHECK(p.str() == "-XX");
    p.set_sign(+1);
    CHECK(p.str() == "+XX");
}

TEST_CASE("single-qubit multiplication table") {
    auto mul = [](const char* a, const char* b) {
        Pauli p = Pauli::from_string(a);
        p.mul(Pauli::from_string(b));
        return p.str();
    };
    CHECK(mul("+X", "+Y") == "iZ");
    CHECK(mul("+Y", "+X") == "-iZ");
    CHECK(mul("+Y", "+Z") == "iX");
    CHECK(mul("+Z", "+Y") == "-iX");
    CHECK(mul("+Z", "+X") == "iY");
    CHECK(mul("+X", "+Z") == "-iY");
    CHECK(mul("+X", "+X") == "+I");
    CHECK(mul("+Y", "+Y") == "+I");
    CHECK(mul("+Z", "+Z") == "+I");
    CHECK(mul("-X", "+Y") == "-iZ");
}

TEST_CASE("commutation") {
    auto comm = [](const char* a, const char* b) {
        return Pauli::from_string(a).commutes(Pauli::from_string(b));
    };
    CHECK(comm("+XX", "+ZZ"));
    CHECK(!comm("+XI", "+ZI"));
    CHECK(comm("+XI", "+IZ"));
    CHECK(!comm("+XX", "+ZI"));
    CHECK(comm("+Y", "+Y"));
    CHECK(!comm("+Y", "+Z"));
}

TEST_CASE("multiplication associativity and phase consistency across words") {
    // strings longer than 64 qubits to cross word boundaries
    int n = 130;
    Pauli a(n), b(n);
    for (int q = 0; q < n; q += 3) a.set_x(q, true);
    for (int q = 0; q < n; q += 2) a.set_z(q, true);
    for (int q = 1; q < n; q += 2) b.set_x(q, true);
    for (int q = 0; q < n; q += 5) b.set_z(q, true);
    a.set_phase2(a.y_count() & 1 ? 1 : 0); // make hermitian
    b.set_phase2(b.y_count() & 1 ? 1 : 0);
    REQUIRE(a.hermitian());
    REQUIRE(b.hermitian());
    // (ab)(ab) = +I if a,b commute, -I if they anticommute
    Pauli ab = a;
    ab.mul(b);
    Pauli abab = ab;
    abab.mul(ab);
    CHECK(abab.identity_string());
    CHECK(abab.phase2() == (a.commutes(b) ? 0 : 2));
}

TEST_SUITE_END();

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qz2 {

// Pauli string over n qubits, bit-packed: x-mask and z-mask plus a global
// phase i^phase2 with phase2 in {0,1,2,3}.  Hermitian strings have
// phase2 in {0,2} (signs +1 / -1).
class Pauli {
public:
    Pauli() = default;
    explicit Pauli(int n) : n_(n), x_(words(n), 0), z_(words(n), 0), phase2_(0) {}

    static int words(int n) { return (n + 63) / 64; }

    // parse e.g. "+XIZY", "-ZZ", "iXY"
    static Pauli from_string(const std::string& s);
    std::string str() const;

    int n() const { return n_; }
    int phase2() const { return phase2_; }
    void set_phase2(int p) { phase2_ = p & 3; }
    // i^ph X^x Z^z is Hermitian iff ph and the number of Y sites (x&z) have
    // the same parity
    int y_count() const;
    bool hermitian() const { return ((phase2_ ^ y_count()) & 1) == 0; }
    // sign relative to the positive Hermitian representative i^{|x&z|} X^x Z^z
    int sign() const { return ((phase2_ - y_count()) & 3) == 0 ? +1 : -1; }
    void set_sign(int s) { phase2_ = (y_count() + (s < 0 ? 2 : 0)) & 3; }

    bool x_bit(int q) const { return (x_[q >> 6] >> (q & 63)) & 1u; }
    bool z_bit(int q) const { return (z_[q >> 6] >> (q & 63)) & 1u; }
    void set_x(int q, bool v);
    void set_z(int q, bool v);

    bool identity_string() const; // ignores phase

    bool commutes(const Pauli& o) const;

    // this *= o (right multiplication), tracking the i-power
    void mul(const Pauli& o);

    // single-site constructors
    static Pauli single_x(int n, int q);
    static Pauli single_y(int n, int q);
    static Pauli single_z(int n, int q);
    static Pauli zz(int n, int a, int b);
    // product of X over all sites
    static Pauli x_string_all(int n);
    static Pauli from_rows(int n, const uint64_t* x, const uint64_t* z, int phase2);

    bool operator==(const Pauli& o) const {
        return n_ == o.n_ && phase2_ == o.phase2_ && x_ == o.x_ && z_ == o.z_;
    }
    bool same_string(const Pauli& o) const { return x_ == o.x_ && z_ == o.z_; }

    const std::vector<uint64_t>& xw() const { return x_; }
    const std::vector<uint64_t>& zw() const { return z_; }

private:
    int n_ = 0;
    std::vector<uint64_t> x_, z_;
    int phase2_ = 0;
};

} // namespace qz2

#include "qz2/pauli.hpp"

namespace qz2 {

void Pauli::set_x(int q, bool v) {
    uint64_t m = 1ull << (q & 63);
    if (v) x_[q >> 6] |= m; else x_[q >> 6] &= ~m;
}

void Pauli::set_z(int q, bool v) {
    uint64_t m = 1ull << (q & 63);
    if (v) z_[q >> 6] |= m; else z_[q >> 6] &= ~m;
}

int Pauli::y_count() const {
    int c = 0;
    for (size_t w = 0; w < x_.size(); ++w) c += __builtin_popcountll(x_[w] & z_[w]);
    return c;
}

bool Pauli::identity_string() const {
    for (auto w : x_) if (w) return false;
    for (auto w : z_) if (w) return false;
    return true;
}

bool Pauli::commutes(const Pauli& o) const {
    uint64_t acc = 0;
    for (size_t w = 0; w < x_.size(); ++w)
        acc ^= (x_[w] & o.z_[w]) ^ (z_[w] & o.x_[w]);
    return (__builtin_popcountll(acc) & 1) == 0;
}

void Pauli::mul(const Pauli& o) {
    // operators are stored as i^phase2 * X^x Z^z; moving Z^z past X^x2
    // contributes (-1)^(z & x2) per site
    int anti = 0;
    for (size_t w = 0; w < x_.size(); ++w) {
        anti += __builtin_popcountll(z_[w] & o.x_[w]);
        x_[w] ^= o.x_[w];
        z_[w] ^= o.z_[w];
    }
    phase2_ = (phase2_ + o.phase2_ + 2 * anti) & 3;
}

Pauli Pauli::single_x(int n, int q) { Pauli p(n); p.set_x(q, true); return p; }
Pauli Pauli::single_y(int n, int q) { Pauli p(n); p.set_x(q, true); p.set_z(q, true); p.phase2_ = 1; return p; }
Pauli Pauli::single_z(int n, int q) { Pauli p(n); p.set_z(q, true); return p; }

Pauli Pauli::zz(int n, int a, int b) {
    Pauli p(n);
    p.set_z(a, true);
    p.set_z(b, true);
    return p;
}

Pauli Pauli::x_string_all(int n) {
    Pauli p(n);
    for (int q = 0; q < n; ++q) p.set_x(q, true);
    return p;
}

Pauli Pauli::from_rows(int n, const uint64_t* x, const uint64_t* z, int phase2) {
    Pauli p(n);
    int w = words(n);
    for (int i = 0; i < w; ++i) {
        p.x_[i] = x[i];
        p.z_[i] = z[i];
    }
    p.phase2_ = phase2 & 3;
    return p;
}

Pauli Pauli::from_string(const std::string& s) {
    size_t i = 0;
    int phase2 = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        if (s[i] == '-') phase2 = 2;
        ++i;
    }
    if (i < s.size() && s[i] == 'i') {
        phase2 = (phase2 + 1) & 3;
        ++i;
    }
    int n = static_cast<int>(s.size() - i);
    Pauli p(n);
    for (int q = 0; q < n; ++q) {
        switch (s[i + q]) {
            case 'I': break;
            case 'X': p.set_x(q, true); break;
            case 'Z': p.set_z(q, true); break;
            case 'Y': p.set_x(q, true); p.set_z(q, true); phase2 = (phase2 + 1) & 3; break;
            default: throw std::invalid_argument("bad Pauli char");
        }
    }
    // stored convention: phase2 is the global i-power with Y = iXZ per site
    p.phase2_ = phase2 & 3;
    return p;
}

std::string Pauli::str() const {
    // report with per-site Y letters; fold the i from each Y back out of phase2
    int ph = phase2_;
    std::string body;
    body.reserve(n_);
    for (int q = 0; q < n_; ++q) {
        bool x = x_bit(q), z = z_bit(q);
        if (x && z) { body += 'Y'; ph = (ph + 3) & 3; }
        else if (x) body += 'X';
        else if (z) body += 'Z';
        else body += 'I';
    }
    static const char* pre[4] = {"+", "i", "-", "-i"};
    return std::string(pre[ph & 3]) + body;
}

} // namespace qz2

#include "qz2/clifford.hpp"

#include <stdexcept>
#include <unordered_map>

namespace qz2 {

namespace {

// multiply local paulis (convention i^ph X^x Z^z): a *= b
CliffordGate::LocalPauli lp_mul(CliffordGate::LocalPauli a, CliffordGate::LocalPauli b) {
    int anti = __builtin_popcount(static_cast<unsigned>(a.z & b.x));
    CliffordGate::LocalPauli r;
    r.x = a.x ^ b.x;
    r.z = a.z ^ b.z;
    r.ph = static_cast<uint8_t>((a.ph + b.ph + 2 * anti) & 3);
    return r;
}

bool lp_commutes(CliffordGate::LocalPauli a, CliffordGate::LocalPauli b) {
    int s = __builtin_popcount(static_cast<unsigned>(a.x & b.z)) +
            __builtin_popcount(static_cast<unsigned>(a.z & b.x));
    return (s & 1) == 0;
}

// i^ph X^x Z^z is Hermitian iff ph and |x&z| have equal parity
bool lp_hermitian(CliffordGate::LocalPauli p) {
    return ((p.ph ^ __builtin_popcount(static_cast<unsigned>(p.x & p.z))) & 1) == 0;
}

} // namespace

CliffordGate::CliffordGate(int nsites, const std::array<LocalPauli, 2>& img_x,
                           const std::array<LocalPauli, 2>& img_z)
    : q_(nsites), ix_(img_x), iz_(img_z) {
    if (q_ != 1 && q_ != 2) throw std::invalid_argument("CliffordGate: 1 or 2 sites");
    for (int i = 0; i < q_; ++i) {
        if (!lp_hermitian(ix_[i]) || !lp_hermitian(iz_[i]))
            throw std::invalid_argument("CliffordGate: non-Hermitian image");
        if (lp_commutes(ix_[i], iz_[i]))
            throw std::invalid_argument("CliffordGate: non-symplectic conjugation table");
        for (int j = 0; j < q_; ++j) {
            if (j == i) continue;
            if (!lp_commutes(ix_[i], ix_[j]) || !lp_commutes(iz_[i], iz_[j]) ||
                !lp_commutes(ix_[i], iz_[j]))
                throw std::invalid_argument("CliffordGate: non-symplectic conjugation table");
        }
    }
    build_table_();
}

void CliffordGate::build_table_() {
    int m = 1 << (2 * q_);
    for (int idx = 0; idx < m; ++idx) {
        int x = idx & ((1 << q_) - 1);
        int z = idx >> q_;
        // conjugate X^x Z^z = prod_i imgX[i]^{x_i} * prod_i imgZ[i]^{z_i}
        LocalPauli r{0, 0, 0};
        for (int i = 0; i < q_; ++i)
            if (x >> i & 1) r = lp_mul(r, ix_[i]);
        for (int i = 0; i < q_; ++i)
            if (z >> i & 1) r = lp_mul(r, iz_[i]);
        table_[idx] = r;
    }
}

CliffordGate::LocalPauli CliffordGate::conjugate(LocalPauli p) const {
    LocalPauli r = table_[p.x | (p.z << q_)];
    r.ph = static_cast<uint8_t>((r.ph + p.ph) & 3);
    return r;
}

CliffordGate CliffordGate::compose(const CliffordGate& g2, const CliffordGate& g1) {
    if (g2.q_ != g1.q_) throw std::invalid_argument("compose: site count mismatch");
    std::array<LocalPauli, 2> nx, nz;
    for (int i = 0; i < g1.q_; ++i) {
        nx[i] = g2.conjugate(g1.ix_[i]);
        nz[i] = g2.conjugate(g1.iz_[i]);
    }
    return CliffordGate(g1.q_, nx, nz);
}

uint64_t CliffordGate::key() const {
    uint64_t k = 0;
    for (int i = 0; i < q_; ++i) {
        for (const LocalPauli* p : {&ix_[i], &iz_[i]}) {
            k = (k << 2) | p->x;
            k = (k << 2) | p->z;
            k = (k << 2) | p->ph;
        }
    }
    return (k << 1) | static_cast<uint64_t>(q_ == 2);
}

using LP = CliffordGate::LocalPauli;

CliffordGate CliffordGate::identity1() {
    return CliffordGate(1, {LP{1, 0, 0}, LP{}}, {LP{0, 1, 0}, LP{}});
}
CliffordGate CliffordGate::h() {
    return CliffordGate(1, {LP{0, 1, 0}, LP{}}, {LP{1, 0, 0}, LP{}});
}
CliffordGate CliffordGate::s() {
    // S X S+ = Y = i XZ, S Z S+ = Z
    return CliffordGate(1, {LP{1, 1, 1}, LP{}}, {LP{0, 1, 0}, LP{}});
}
CliffordGate CliffordGate::x1() {
    return CliffordGate(1, {LP{1, 0, 0}, LP{}}, {LP{0, 1, 2}, LP{}});
}
CliffordGate CliffordGate::y1() {
    return CliffordGate(1, {LP{1, 0, 2}, LP{}}, {LP{0, 1, 2}, LP{}});
}
CliffordGate CliffordGate::z1() {
    return CliffordGate(1, {LP{1, 0, 2}, LP{}}, {LP{0, 1, 0}, LP{}});
}
CliffordGate CliffordGate::sqrt_x() {
    // sqrt(X): X -> X, Z -> -Y = -i XZ = i^3 XZ
    return CliffordGate(1, {LP{1, 0, 0}, LP{}}, {LP{1, 1, 3}, LP{}});
}
CliffordGate CliffordGate::identity2() {
    return CliffordGate(2, {LP{1, 0, 0}, LP{2, 0, 0}}, {LP{0, 1, 0}, LP{0, 2, 0}});
}
CliffordGate CliffordGate::cnot() {
    // control 0, target 1: X0->X0X1, Z0->Z0, X1->X1, Z1->Z0Z1
    return CliffordGate(2, {LP{3, 0, 0}, LP{2, 0, 0}}, {LP{0, 1, 0}, LP{0, 3, 0}});
}
CliffordGate CliffordGate::cz() {
    // X0->X0Z1, Z0->Z0, X1->Z0X1, Z1->Z1
    return CliffordGate(2, {LP{1, 2, 0}, LP{2, 1, 0}}, {LP{0, 1, 0}, LP{0, 2, 0}});
}
CliffordGate CliffordGate::swap() {
    return CliffordGate(2, {LP{2, 0, 0}, LP{1, 0, 0}}, {LP{0, 2, 0}, LP{0, 1, 0}});
}
CliffordGate CliffordGate::tensor(const CliffordGate& a, const CliffordGate& b) {
    if (a.q_ != 1 || b.q_ != 1) throw std::invalid_argument("tensor: 1q x 1q only");
    auto lift = [](LP p, int site) {
        return LP{static_cast<uint8_t>(p.x << site), static_cast<uint8_t>(p.z << site), p.ph};
    };
    return CliffordGate(2, {lift(a.ix_[0], 0), lift(b.ix_[0], 1)},
                        {lift(a.iz_[0], 0), lift(b.iz_[0], 1)});
}

namespace {

std::vector<CliffordGate> bfs_group(const std::vector<CliffordGate>& gens,
                                    const CliffordGate& id) {
    std::vector<CliffordGate> out;
    std::unordered_map<uint64_t, int> seen;
    out.push_back(id);
    seen.emplace(id.key(), 0);
    for (size_t head = 0; head < out.size(); ++head) {
        CliffordGate cur = out[head];
        for (const auto& g : gens) {
            CliffordGate nxt = CliffordGate::compose(g, cur);
            if (seen.emplace(nxt.key(), 1).second) out.push_back(nxt);
        }
    }
    return out;
}

bool fixes(const CliffordGate& g, LP p) { return g.conjugate(p) == p; }

} // namespace

const std::vector<CliffordGate>& clifford1_all() {
    static const std::vector<CliffordGate> v =
        bfs_group({CliffordGate::h(), CliffordGate::s()}, CliffordGate::identity1());
    return v;
}

const std::vector<CliffordGate>& clifford2_all() {
    static const std::vector<CliffordGate> v = bfs_group(
        {CliffordGate::tensor(CliffordGate::h(), CliffordGate::identity1()),
         CliffordGate::tensor(CliffordGate::identity1(), CliffordGate::h()),
         CliffordGate::tensor(CliffordGate::s(), CliffordGate::identity1()),
         CliffordGate::tensor(CliffordGate::identity1(), CliffordGate::s()),
         CliffordGate::cnot(), CliffordGate::swap()},
        CliffordGate::identity2());
    return v;
}

const std::vector<CliffordGate>& clifford1_fix_x() {
    static const std::vector<CliffordGate> v = [] {
        std::vector<CliffordGate> r;
        for (const auto& g : clifford1_all())
            if (fixes(g, LP{1, 0, 0})) r.push_back(g);
        return r;
    }();
    return v;
}

const std::vector<CliffordGate>& clifford2_fix_xx() {
    static const std::vector<CliffordGate> v = [] {
        std::vector<CliffordGate> r;
        for (const auto& g : clifford2_all())
            if (fixes(g, LP{3, 0, 0})) r.push_back(g);
        return r;
    }();
    return v;
}

const std::vector<CliffordGate>& clifford2_fix_xi() {
    static const std::vector<CliffordGate> v = [] {
        std::vector<CliffordGate> r;
        for (const auto& g : clifford2_all())
            if (fixes(g, LP{1, 0, 0})) r.push_back(g);
        return r;
    }();
    return v;
}

} // namespace qz2

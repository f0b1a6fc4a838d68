#include "tetra/bipoly.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <vector>

#include "tetra/errors.hpp"

namespace tetra {

BiPoly::BiPoly(BigInt constant) {
    if (constant != 0) terms_.emplace(Monomial{0, 0}, std::move(constant));
}

BiPoly BiPoly::monomial(BigInt coef, unsigned zeta_pow, unsigned eta_pow) {
    BiPoly p;
    p.add_term({zeta_pow, eta_pow}, coef);
    return p;
}

BiPoly BiPoly::zeta() { return monomial(1, 1, 0); }
BiPoly BiPoly::eta() { return monomial(1, 0, 1); }

void BiPoly::add_term(const Monomial& m, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BigInt BiPoly::coefficient(unsigned zeta_pow, unsigned eta_pow) const {
    const auto it = terms_.find({zeta_pow, eta_pow});
    return it == terms_.end() ? BigInt(0) : it->second;
}

unsigned BiPoly::total_degree() const noexcept {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.first + m.second);
    return d;
}

std::complex<double> BiPoly::evaluate(std::complex<double> zeta, std::complex<double> eta) const {
    const unsigned deg = total_degree();
    std::vector<std::complex<double>> zp(deg + 1, 1.0), ep(deg + 1, 1.0);
    for (unsigned k = 1; k <= deg; ++k) {
        zp[k] = zp[k - 1] * zeta;
        ep[k] = ep[k - 1] * eta;
    }
    std::complex<double> acc{};
    for (const auto& [m, c] : terms_) acc += c.convert_to<double>() * zp[m.first] * ep[m.second];
    return acc;
}

std::string BiPoly::str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Monomial, BigInt>> sorted(terms_.begin(), terms_.end());
    // grlex: higher total degree first, ties broken by the zeta exponent
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        const unsigned da = a.first.first + a.first.second;
        const unsigned db = b.first.first + b.first.second;
        if (da != db) return da > db;
        return a.first.first > b.first.first;
    });

    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : sorted) {
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;

        std::vector<std::string> factors;
        const bool constant = m.first == 0 && m.second == 0;
        if (mag != 1 || constant) factors.push_back(mag.str());
        if (m.first > 0) factors.push_back(m.first == 1 ? "zeta" : "zeta^" + std::to_string(m.first));
        if (m.second > 0) factors.push_back(m.second == 1 ? "eta" : "eta^" + std::to_string(m.second));
        for (std::size_t k = 0; k < factors.size(); ++k) os << (k ? "*" : "") << factors[k];
    }
    return os.str();
}

BiPoly operator+(const BiPoly& p, const BiPoly& q) {
    BiPoly r = p;
    for (const auto& [m, c] : q.terms_) r.add_term(m, c);
    return r;
}

BiPoly operator-(const BiPoly& p) {
    BiPoly r;
    for (const auto& [m, c] : p.terms_) r.terms_.emplace(m, -c);
    return r;
}

BiPoly operator-(const BiPoly& p, const BiPoly& q) {
    BiPoly r = p;
    for (const auto& [m, c] : q.terms_) r.add_term(m, -c);
    return r;
}

BiPoly operator*(const BiPoly& p, const BiPoly& q) {
    BiPoly r;
    for (const auto& [mp, cp] : p.terms_)
        for (const auto& [mq, cq] : q.terms_) r.add_term({mp.first + mq.first, mp.second + mq.second}, cp * cq);
    return r;
}

namespace {

// All four basic polynomials over [-guard-2, guard+2], built once by replay.
struct PolyTable {
    static constexpr long lo = -kPolyIndexGuard - 2;
    static constexpr long hi = kPolyIndexGuard + 2;
    std::array<std::vector<BiPoly>, 4> rows;

    PolyTable() {
        const BiPoly z = BiPoly::zeta();
        const BiPoly e = BiPoly::eta();
        for (int i = -2; i <= 1; ++i) {
            auto& v = rows[static_cast<std::size_t>(i + 2)];
            v.assign(static_cast<std::size_t>(hi - lo + 1), BiPoly{});
            const auto at = [&](long j) -> BiPoly& { return v[static_cast<std::size_t>(j - lo)]; };
            at(i) = BiPoly(1);
            for (long j = 2; j <= hi; ++j) at(j) = z * at(j - 2) - at(j - 4) + e * (at(j - 1) + at(j - 3));
            for (long j = -3; j >= lo; --j) at(j) = z * at(j + 2) - at(j + 4) + e * (at(j + 3) + at(j + 1));
        }
    }
};

const PolyTable& table() {
    static const PolyTable t;
    return t;
}

}  // namespace

BiPoly tetranacci_poly(int i, long j) {
    if (i < -2 || i > 1) throw IndexRangeError("tetranacci_poly: index must lie in [-2, 1], got " + std::to_string(i));
    if (j < -kPolyIndexGuard || j > kPolyIndexGuard) {
        throw RangeGuardError("tetranacci_poly: |j| must not exceed " + std::to_string(kPolyIndexGuard));
    }
    return table().rows[static_cast<std::size_t>(i + 2)][static_cast<std::size_t>(j - PolyTable::lo)];
}

bool verify_identity(const BiPoly& lhs, const BiPoly& rhs) { return (lhs - rhs).is_zero(); }

}  // namespace tetra

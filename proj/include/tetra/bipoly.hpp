#pragma once
// Exact sparse polynomials in (zeta, eta) with arbitrary-precision integer
// coefficients.

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <map>
#include <string>
#include <utility>

namespace tetra {

using BigInt = boost::multiprecision::cpp_int;

class BiPoly {
public:
    /// Exponent pair (power of zeta, power of eta).
    using Monomial = std::pair<unsigned, unsigned>;

    BiPoly() = default;
    explicit BiPoly(BigInt constant);
    [[nodiscard]] static BiPoly monomial(BigInt coef, unsigned zeta_pow, unsigned eta_pow);
    [[nodiscard]] static BiPoly zeta();
    [[nodiscard]] static BiPoly eta();

    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
    [[nodiscard]] BigInt coefficient(unsigned zeta_pow, unsigned eta_pow) const;
    [[nodiscard]] const std::map<Monomial, BigInt>& terms() const noexcept { return terms_; }
    [[nodiscard]] unsigned total_degree() const noexcept;

    [[nodiscard]] std::complex<double> evaluate(std::complex<double> zeta, std::complex<double> eta) const;

    /// Canonical text, graded lexicographic with zeta before eta, highest first.
    [[nodiscard]] std::string str() const;

    friend BiPoly operator+(const BiPoly& p, const BiPoly& q);
    friend BiPoly operator-(const BiPoly& p, const BiPoly& q);
    friend BiPoly operator-(const BiPoly& p);
    friend BiPoly operator*(const BiPoly& p, const BiPoly& q);
    friend bool operator==(const BiPoly& p, const BiPoly& q) { return p.terms_ == q.terms_; }

private:
    void add_term(const Monomial& m, const BigInt& c);

    std::map<Monomial, BigInt> terms_;
};

[[nodiscard]] inline BiPoly poly_add(const BiPoly& p, const BiPoly& q) { return p + q; }
[[nodiscard]] inline BiPoly poly_mul(const BiPoly& p, const BiPoly& q) { return p * q; }
[[nodiscard]] inline BiPoly poly_neg(const BiPoly& p) { return -p; }

inline constexpr long kPolyIndexGuard = 64;

/// Exact T_i(j). Throws RangeGuardError for |j| > 64 and IndexRangeError for i outside -2..1.
[[nodiscard]] BiPoly tetranacci_poly(int i, long j);

/// True iff lhs - rhs is the zero polynomial.
[[nodiscard]] bool verify_identity(const BiPoly& lhs, const BiPoly& rhs);

}  // namespace tetra

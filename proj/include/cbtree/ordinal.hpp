#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cbtree {

/// Ordinal below ω^ω in Cantor normal form: Σ ω^e·c with strictly
/// decreasing exponents and positive coefficients. The empty form is 0.
class Ordinal {
public:
    using Term = std::pair<std::uint64_t, std::uint64_t>; // (exponent, coefficient)

    Ordinal() = default;
    explicit Ordinal(std::vector<Term> cnf);

    static Ordinal finite(std::uint64_t n);
    static Ordinal omega();

    const std::vector<Term> &cnf() const { return cnf_; }
    bool is_zero() const { return cnf_.empty(); }
    bool is_finite() const { return cnf_.empty() || cnf_.front().first == 0; }
    bool is_successor() const { return !cnf_.empty() && cnf_.back().first == 0; }
    bool is_limit() const { return !cnf_.empty() && cnf_.back().first > 0; }
    /// Value of a finite ordinal.
    std::uint64_t to_finite() const;

    /// `w^2*3+w+4`, `w`, `3`, `0`.
    std::string str() const;

    friend bool operator==(const Ordinal &, const Ordinal &) = default;
    friend std::strong_ordering operator<=>(const Ordinal &lhs, const Ordinal &rhs);

private:
    std::vector<Term> cnf_;
};

Ordinal succ(const Ordinal &alpha);
Ordinal ord_max(const Ordinal &alpha, const Ordinal &beta);
/// Least ordinal strictly above every slope·n + intercept (n ∈ ω) when slope > 0,
/// which is ω; the constant intercept otherwise.
Ordinal sup_affine(std::uint64_t slope, std::uint64_t intercept);

} // namespace cbtree

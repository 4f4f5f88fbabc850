#include "cbtree/ordinal.hpp"

#include "cbtree/error.hpp"

namespace cbtree {

Ordinal::Ordinal(std::vector<Term> cnf) : cnf_(std::move(cnf)) {
    for (std::size_t i = 0; i < cnf_.size(); ++i) {
        if (cnf_[i].second == 0)
            throw Error("ordinal coefficients must be positive");
        if (i > 0 && cnf_[i - 1].first <= cnf_[i].first)
            throw Error("ordinal exponents must be strictly decreasing");
    }
}

Ordinal Ordinal::finite(std::uint64_t n) {
    return n == 0 ? Ordinal() : Ordinal({{0, n}});
}

Ordinal Ordinal::omega() {
    return Ordinal({{1, 1}});
}

std::uint64_t Ordinal::to_finite() const {
    if (!is_finite())
        throw Error("ordinal " + str() + " is infinite");
    return cnf_.empty() ? 0 : cnf_.front().second;
}

std::string Ordinal::str() const {
    if (cnf_.empty())
        return "0";
    std::string out;
    for (const auto &[e, c] : cnf_) {
        if (!out.empty())
            out += "+";
        if (e == 0) {
            out += std::to_string(c);
            continue;
        }
        out += "w";
        if (e > 1)
            out += "^" + std::to_string(e);
        if (c > 1)
            out += "*" + std::to_string(c);
    }
    return out;
}

std::strong_ordering operator<=>(const Ordinal &lhs, const Ordinal &rhs) {
    const auto &a = lhs.cnf_;
    const auto &b = rhs.cnf_;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (auto c = a[i].first <=> b[i].first; c != 0)
            return c;
        if (auto c = a[i].second <=> b[i].second; c != 0)
            return c;
    }
    return a.size() <=> b.size();
}

Ordinal succ(const Ordinal &alpha) {
    auto cnf = alpha.cnf();
    if (!cnf.empty() && cnf.back().first == 0)
        ++cnf.back().second;
    else
        cnf.emplace_back(0, 1);
    return Ordinal(std::move(cnf));
}

Ordinal ord_max(const Ordinal &alpha, const Ordinal &beta) {
    return alpha < beta ? beta : alpha;
}

Ordinal sup_affine(std::uint64_t slope, std::uint64_t intercept) {
    return slope >= 1 ? Ordinal::omega() : Ordinal::finite(intercept);
}

} // namespace cbtree

#include "ramsey/quadratic_model.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ramsey {

double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite coefficient");
    if (x == 0.0) return Rational(0);
    long long den = 1;
    double v = x;
    for (int i = 0; i < 62 && v != std::floor(v); ++i) {
        v *= 2;
        den <<= 1;
    }
    if (v != std::floor(v) || std::abs(v) > 9e18)
        throw std::invalid_argument("double has no small exact rational form");
    return Rational(static_cast<long long>(v), den);
}

QuadraticModel::QuadraticModel(int num_vars, VarDomain domain)
    : num_vars_(num_vars), domain_(domain), linear_(num_vars, Rational(0)) {
    if (num_vars < 0) throw std::invalid_argument("negative variable count");
}

void QuadraticModel::add_linear(int i, const Rational& c) {
    if (i < 0 || i >= num_vars_) throw std::out_of_range("linear index out of range");
    linear_[i] += c;
}

void QuadraticModel::add_quadratic(int i, int j, const Rational& c) {
    if (i < 0 || i >= num_vars_ || j < 0 || j >= num_vars_)
        throw std::out_of_range("quadratic index out of range");
    if (i == j) throw std::invalid_argument("self-pair in quadratic term");
    if (i > j) std::swap(i, j);
    quadratic_[{i, j}] += c;
}

const Rational& QuadraticModel::linear(int i) const {
    if (i < 0 || i >= num_vars_) throw std::out_of_range("linear index out of range");
    return linear_[i];
}

Rational QuadraticModel::quadratic(int i, int j) const {
    if (i > j) std::swap(i, j);
    auto it = quadratic_.find({i, j});
    return it == quadratic_.end() ? Rational(0) : it->second;
}

Rational QuadraticModel::energy(std::span<const int8_t> assignment) const {
    if (static_cast<int>(assignment.size()) != num_vars_)
        throw std::invalid_argument("assignment length does not match num_vars");
    for (int8_t v : assignment) {
        const bool ok = domain_ == VarDomain::Binary ? (v == 0 || v == 1) : (v == -1 || v == 1);
        if (!ok) throw std::invalid_argument("assignment value outside the variable domain");
    }
    Rational e = offset_;
    for (int i = 0; i < num_vars_; ++i)
        if (assignment[i] != 0) e += linear_[i] * assignment[i];
    for (const auto& [pr, c] : quadratic_) {
        const int prod = assignment[pr.first] * assignment[pr.second];
        if (prod != 0) e += c * prod;
    }
    return e;
}

std::vector<std::pair<int, int>> QuadraticModel::primal_edges() const {
    std::vector<std::pair<int, int>> edges;
    for (const auto& [pr, c] : quadratic_)
        if (c != Rational(0)) edges.push_back(pr);
    return edges;
}

Rational QuadraticModel::max_abs_linear() const {
    Rational m(0);
    for (const auto& c : linear_)
        if (abs(c) > m) m = abs(c);
    return m;
}

Rational QuadraticModel::max_abs_quadratic() const {
    Rational m(0);
    for (const auto& [pr, c] : quadratic_)
        if (abs(c) > m) m = abs(c);
    return m;
}

void QuadraticModel::scale_all(const Rational& factor) {
    offset_ *= factor;
    for (auto& c : linear_) c *= factor;
    for (auto& [pr, c] : quadratic_) c *= factor;
}

uint64_t QuadraticModel::content_hash() const {
    uint64_t h = 0xcbf29ce484222325ull;
    auto feed = [&h](int64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= static_cast<uint8_t>(v >> (8 * i));
            h *= 0x100000001b3ull;
        }
    };
    feed(num_vars_);
    feed(domain_ == VarDomain::Binary ? 0 : 1);
    feed(offset_.numerator());
    feed(offset_.denominator());
    for (const auto& c : linear_) {
        feed(c.numerator());
        feed(c.denominator());
    }
    for (const auto& [pr, c] : quadratic_) {
        feed(pr.first);
        feed(pr.second);
        feed(c.numerator());
        feed(c.denominator());
    }
    return h;
}

ScaledIntModel::ScaledIntModel(const QuadraticModel& m)
    : num_vars(m.num_vars()), domain(m.domain()) {
    long long lcm = m.offset().denominator();
    for (const auto& c : m.linear_terms()) lcm = std::lcm(lcm, c.denominator());
    for (const auto& [pr, c] : m.quadratic_terms()) lcm = std::lcm(lcm, c.denominator());
    den = lcm;
    auto scaled = [lcm](const Rational& c) { return c.numerator() * (lcm / c.denominator()); };
    offset_num = scaled(m.offset());
    linear_num.reserve(num_vars);
    for (const auto& c : m.linear_terms()) linear_num.push_back(scaled(c));
    for (const auto& [pr, c] : m.quadratic_terms())
        if (c != Rational(0)) quad_num.push_back({pr, scaled(c)});
}

std::vector<int8_t> unpack_assignment(uint32_t x, int num_vars, VarDomain domain) {
    std::vector<int8_t> out(num_vars);
    for (int i = 0; i < num_vars; ++i) {
        const bool one = (x >> i) & 1u;
        out[i] = domain == VarDomain::Binary ? (one ? 1 : 0) : (one ? 1 : -1);
    }
    return out;
}

}  // namespace ramsey

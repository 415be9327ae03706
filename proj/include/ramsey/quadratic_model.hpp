#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ramsey {

// Coefficients are exact rationals; the integer Table-1 claims depend on it.
// Floating point appears only at solver boundaries.
using Rational = boost::rational<long long>;

double to_double(const Rational& r);

// exact conversion of a dyadic double (0.5, -1.25, ...); throws otherwise
Rational rational_from_double(double x);

enum class VarDomain { Binary, Spin };

// Pseudo-Boolean / Ising model with linear, pairwise, and constant terms.
// E(x) = offset + sum_i linear_i x_i + sum_{i<j} quadratic_ij x_i x_j,
// x_i in {0,1} (Binary) or {-1,+1} (Spin).
class QuadraticModel {
public:
    QuadraticModel(int num_vars, VarDomain domain);

    int num_vars() const { return num_vars_; }
    VarDomain domain() const { return domain_; }

    void add_offset(const Rational& c) { offset_ += c; }
    void add_linear(int i, const Rational& c);
    void add_quadratic(int i, int j, const Rational& c);  // i != j, unordered

    const Rational& offset() const { return offset_; }
    const Rational& linear(int i) const;
    Rational quadratic(int i, int j) const;  // 0 when absent
    const std::map<std::pair<int, int>, Rational>& quadratic_terms() const { return quadratic_; }
    const std::vector<Rational>& linear_terms() const { return linear_; }

    // exact energy; assignment values must match the domain
    Rational energy(std::span<const int8_t> assignment) const;

    // distinct unordered pairs with nonzero coupling
    std::vector<std::pair<int, int>> primal_edges() const;

    Rational max_abs_linear() const;
    Rational max_abs_quadratic() const;

    void scale_all(const Rational& factor);  // h, J, offset uniformly

    uint64_t content_hash() const;

    // Role labels ("a1", "b2", "q17"); empty means unlabeled. `fixed` records
    // variables eliminated before the build, e.g. {"a1", 0}.
    std::vector<std::string> labels;
    std::map<std::string, int> fixed;

private:
    int num_vars_;
    VarDomain domain_;
    Rational offset_{0};
    std::vector<Rational> linear_;
    std::map<std::pair<int, int>, Rational> quadratic_;
};

// Model compiled to a common denominator so enumeration loops run on int64.
// energy_num(x) returns the numerator; true energy = numerator / den.
struct ScaledIntModel {
    int num_vars = 0;
    VarDomain domain = VarDomain::Binary;
    int64_t den = 1;
    int64_t offset_num = 0;
    std::vector<int64_t> linear_num;
    std::vector<std::pair<std::pair<int, int>, int64_t>> quad_num;

    explicit ScaledIntModel(const QuadraticModel& m);

    // assignment packed in x: bit i = 1 means x_i = 1 (Binary) or s_i = +1 (Spin)
    int64_t energy_num(uint32_t x) const {
        int64_t e = offset_num;
        if (domain == VarDomain::Binary) {
            for (int i = 0; i < num_vars; ++i)
                if ((x >> i) & 1u) e += linear_num[i];
            for (const auto& [pr, c] : quad_num)
                if (((x >> pr.first) & 1u) && ((x >> pr.second) & 1u)) e += c;
        } else {
            for (int i = 0; i < num_vars; ++i)
                e += ((x >> i) & 1u) ? linear_num[i] : -linear_num[i];
            for (const auto& [pr, c] : quad_num)
                e += (((x >> pr.first) ^ (x >> pr.second)) & 1u) ? -c : c;
        }
        return e;
    }

    Rational energy(uint32_t x) const { return Rational(energy_num(x), den); }
};

std::vector<int8_t> unpack_assignment(uint32_t x, int num_vars, VarDomain domain);

}  // namespace ramsey

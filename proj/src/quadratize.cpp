#include "ramsey/quadratize.hpp"

#include <stdexcept>
#include <string>

#include "ramsey/graph_bits.hpp"

namespace ramsey {

void PenaltyConfig::validate() const {
    if (mu < Rational(1)) throw std::invalid_argument("penalty weight mu must be >= 1");
}

void add_and_penalty(QuadraticModel& m, int a1, int a2, int b, const Rational& weight) {
    if (a1 == a2 || a1 == b || a2 == b)
        throw std::invalid_argument("penalty variables must be distinct");
    m.add_quadratic(a1, a2, weight);
    m.add_quadratic(a1, b, -2 * weight);
    m.add_quadratic(a2, b, -2 * weight);
    m.add_linear(b, 3 * weight);
}

QuadraticModel penalty_and(int a1, int a2, int b, int num_vars) {
    QuadraticModel m(num_vars, VarDomain::Binary);
    add_and_penalty(m, a1, a2, b, Rational(1));
    return m;
}

QuadraticModel build_rm2_model(int m, const PenaltyConfig& cfg) {
    if (m < 3 || m > 8) throw std::invalid_argument("build_rm2_model supports 3 <= m <= 8");
    cfg.validate();
    const int L = pair_count(m);
    const int n_anc = L - 2;  // b_2 .. b_{L-1}
    QuadraticModel model(L + n_anc, VarDomain::Binary);
    model.labels.resize(model.num_vars());
    for (int i = 0; i < L; ++i) model.labels[i] = "a" + std::to_string(i + 1);
    for (int j = 2; j <= L - 1; ++j) model.labels[L + j - 2] = "b" + std::to_string(j);
    auto a = [](int i) { return i - 1; };          // a_i, 1-based
    auto b = [L](int j) { return L + j - 2; };     // b_j, j in [2, L-1]

    // I^m_2(a) = sum_i (1 - a_i)
    model.add_offset(Rational(L));
    for (int i = 1; i <= L; ++i) model.add_linear(a(i), Rational(-1));

    // clique product collapsed onto the head of the ancilla chain
    model.add_quadratic(a(1), b(2), Rational(1));

    // chain constraints: b_{L-1} = a_{L-1} a_L, then b_j = a_j b_{j+1}
    add_and_penalty(model, a(L - 1), a(L), b(L - 1), cfg.mu);
    for (int j = 2; j <= L - 2; ++j) add_and_penalty(model, a(j), b(j + 1), b(j), cfg.mu);
    return model;
}

QuadraticModel build_rm2_subcritical_model(int m, int n_vertices) {
    if (n_vertices < 2) throw std::invalid_argument("need at least two vertices");
    if (n_vertices >= m)
        throw std::invalid_argument("subcritical model requires N < m; use build_rm2_model");
    const int L = pair_count(n_vertices);
    QuadraticModel model(L, VarDomain::Binary);
    model.labels.resize(L);
    for (int i = 0; i < L; ++i) model.labels[i] = "a" + std::to_string(i + 1);
    model.add_offset(Rational(L));
    for (int i = 0; i < L; ++i) model.add_linear(i, Rational(-1));
    return model;
}

std::vector<std::array<int, 3>> triangle_edge_triples(int n_vertices) {
    std::vector<std::array<int, 3>> triples;
    for (int v1 = 1; v1 <= n_vertices; ++v1)
        for (int v2 = v1 + 1; v2 <= n_vertices; ++v2)
            for (int v3 = v2 + 1; v3 <= n_vertices; ++v3)
                triples.push_back({edge_index(v2, v1, n_vertices) + 1,
                                   edge_index(v3, v1, n_vertices) + 1,
                                   edge_index(v3, v2, n_vertices) + 1});
    return triples;
}

QuadraticModel build_r33_model(int n_vertices, bool fix_first) {
    if (n_vertices < 4 || n_vertices > 6)
        throw std::invalid_argument("build_r33_model supports N in {4,5,6}");
    const int L = pair_count(n_vertices);
    const int num_vars = fix_first ? L - 1 : L;
    QuadraticModel model(num_vars, VarDomain::Binary);
    model.labels.resize(num_vars);
    for (int i = 0; i < num_vars; ++i)
        model.labels[i] = "a" + std::to_string(i + (fix_first ? 2 : 1));
    if (fix_first) model.fixed["a1"] = 0;

    // with fix_first, a_1 = 0: its complement contributes 1 to the offset
    // and its pair terms drop
    auto var = [fix_first](int i) { return fix_first ? i - 2 : i - 1; };  // 1-based a_i
    auto present = [fix_first](int i) { return !fix_first || i >= 2; };

    for (const auto& t : triangle_edge_triples(n_vertices)) {
        // f_{i,j,k} = -2 + (1-a_i) + (1-a_j) + (1-a_k) + pairwise products
        model.add_offset(Rational(1));
        for (int idx : t) {
            if (present(idx))
                model.add_linear(var(idx), Rational(-1));
            // a fixed a_1 keeps its \bar a_1 = 1 already counted in the +3
        }
        const std::array<std::pair<int, int>, 3> pairs{
            {{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}}};
        for (const auto& [p, q] : pairs)
            if (present(p) && present(q)) model.add_quadratic(var(p), var(q), Rational(1));
    }
    return model;
}

bool f_ijk_identity_check(int i, int j, int k) {
    if (i == j || i == k || j == k)
        throw std::invalid_argument("f_ijk variables must be distinct");
    for (int x = 0; x < 8; ++x) {
        const int ai = x & 1, aj = (x >> 1) & 1, ak = (x >> 2) & 1;
        const int lhs = ai * aj * ak + (1 - ai) * (1 - aj) * (1 - ak);
        const int rhs = -2 + (1 - ai) + (1 - aj) + (1 - ak) + ai * aj + ai * ak + aj * ak;
        if (lhs != rhs) return false;
    }
    return true;
}

QuadraticModel to_spin(const QuadraticModel& binary_model) {
    if (binary_model.domain() != VarDomain::Binary)
        throw std::invalid_argument("to_spin expects a binary-domain model");
    const int n = binary_model.num_vars();
    QuadraticModel spin(n, VarDomain::Spin);
    spin.labels = binary_model.labels;
    spin.fixed = binary_model.fixed;
    spin.add_offset(binary_model.offset());
    const Rational half(1, 2), quarter(1, 4);
    for (int i = 0; i < n; ++i) {
        const Rational& c = binary_model.linear(i);
        if (c == Rational(0)) continue;
        spin.add_offset(c * half);
        spin.add_linear(i, c * half);
    }
    for (const auto& [pr, c] : binary_model.quadratic_terms()) {
        if (c == Rational(0)) continue;
        spin.add_offset(c * quarter);
        spin.add_linear(pr.first, c * quarter);
        spin.add_linear(pr.second, c * quarter);
        spin.add_quadratic(pr.first, pr.second, c * quarter);
    }
    return spin;
}

std::pair<QuadraticModel, Rational> normalize_ranges(const QuadraticModel& spin_model) {
    if (spin_model.domain() != VarDomain::Spin)
        throw std::invalid_argument("normalize_ranges expects a spin-domain model");
    const Rational max_j = spin_model.max_abs_quadratic();
    const Rational max_h = spin_model.max_abs_linear();
    Rational excess(1);
    if (max_j > excess) excess = max_j;
    if (max_h / 2 > excess) excess = max_h / 2;
    const Rational scale = Rational(1) / excess;
    QuadraticModel out = spin_model;
    if (scale != Rational(1)) out.scale_all(scale);
    return {out, scale};
}

}  // namespace ramsey

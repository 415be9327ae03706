#include "ramsey/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ramsey {

std::string graph_to_text(const GraphBits& g) {
    return "N:" + std::to_string(g.n_vertices()) + ";bits:" + g.bit_string();
}

GraphBits graph_from_text(const std::string& text) {
    const auto semi = text.find(';');
    if (text.rfind("N:", 0) != 0 || semi == std::string::npos ||
        text.compare(semi + 1, 5, "bits:") != 0)
        throw std::invalid_argument("graph text must look like N:<int>;bits:<0/1 string>");
    const int n = std::stoi(text.substr(2, semi - 2));
    return graph_from_bit_string(n, text.substr(semi + 6));
}

nlohmann::json rational_to_json(const Rational& r) {
    if (r.denominator() == 1) return r.numerator();
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational rational_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_number_float()) return rational_from_double(j.get<double>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        const auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(std::stoll(s));
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    }
    throw std::invalid_argument("cannot parse rational coefficient");
}

nlohmann::json model_to_json(const QuadraticModel& m) {
    nlohmann::json j;
    j["num_vars"] = m.num_vars();
    j["domain"] = m.domain() == VarDomain::Binary ? "binary" : "spin";
    j["offset"] = rational_to_json(m.offset());
    nlohmann::json linear = nlohmann::json::object();
    for (int i = 0; i < m.num_vars(); ++i)
        if (m.linear(i) != Rational(0)) linear[std::to_string(i)] = rational_to_json(m.linear(i));
    j["linear"] = linear;
    nlohmann::json quad = nlohmann::json::object();
    for (const auto& [pr, c] : m.quadratic_terms())
        if (c != Rational(0))
            quad[std::to_string(pr.first) + "," + std::to_string(pr.second)] = rational_to_json(c);
    j["quadratic"] = quad;
    nlohmann::json labels = nlohmann::json::object();
    for (size_t i = 0; i < m.labels.size(); ++i)
        if (!m.labels[i].empty()) labels[std::to_string(i)] = m.labels[i];
    j["labels"] = labels;
    if (!m.fixed.empty()) j["fixed"] = m.fixed;
    return j;
}

QuadraticModel model_from_json(const nlohmann::json& j) {
    const std::string domain = j.at("domain").get<std::string>();
    if (domain != "binary" && domain != "spin")
        throw std::invalid_argument("model domain must be binary or spin");
    QuadraticModel m(j.at("num_vars").get<int>(),
                     domain == "binary" ? VarDomain::Binary : VarDomain::Spin);
    m.add_offset(rational_from_json(j.at("offset")));
    for (const auto& [key, val] : j.at("linear").items())
        m.add_linear(std::stoi(key), rational_from_json(val));
    for (const auto& [key, val] : j.at("quadratic").items()) {
        const auto comma = key.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("quadratic keys must look like \"i,j\"");
        m.add_quadratic(std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1)),
                        rational_from_json(val));
    }
    if (j.contains("labels") && !j.at("labels").empty()) {
        m.labels.assign(m.num_vars(), "");
        for (const auto& [key, val] : j.at("labels").items())
            m.labels[std::stoi(key)] = val.get<std::string>();
    }
    if (j.contains("fixed"))
        for (const auto& [key, val] : j.at("fixed").items()) m.fixed[key] = val.get<int>();
    return m;
}

nlohmann::json embedding_to_json(const Embedding& e) {
    nlohmann::json j;
    j["lambda"] = rational_to_json(e.lambda);
    nlohmann::json chains = nlohmann::json::object();
    for (const auto& [v, chain] : e.chains) chains[std::to_string(v)] = chain;
    j["chains"] = chains;
    return j;
}

Embedding embedding_from_json(const nlohmann::json& j) {
    Embedding e;
    e.lambda = rational_from_json(j.at("lambda"));
    for (const auto& [key, val] : j.at("chains").items())
        e.chains[std::stoi(key)] = val.get<std::vector<int>>();
    return e;
}

nlohmann::json hardware_to_json(const HardwareGraph& hw) {
    nlohmann::json j;
    j["rows"] = hw.rows();
    j["cols"] = hw.cols();
    j["shore"] = hw.shore();
    j["defects"] = hw.defects();
    return j;
}

HardwareGraph hardware_from_json(const nlohmann::json& j) {
    return HardwareGraph(j.at("rows").get<int>(), j.at("cols").get<int>(), j.at("shore").get<int>(),
                         j.value("defects", std::vector<int>{}));
}

void save_samples_csv(const std::filesystem::path& path, const SampleSet& set) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << "energy,multiplicity,spins\n";
    out.precision(17);
    for (const auto& s : set.samples) {
        out << s.energy << ',' << s.multiplicity << ',';
        for (int8_t v : s.spins) out << (v > 0 ? '+' : '-');
        out << '\n';
    }
    out << "# seed=" << set.seed << " schedule=\"" << set.schedule << "\" model_hash=" << set.model_hash
        << '\n';
}

SampleSet load_samples_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    SampleSet set;
    std::string line;
    if (!std::getline(in, line) || line.rfind("energy,", 0) != 0)
        throw std::runtime_error("sample CSV missing header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto seed_pos = line.find("seed=");
            if (seed_pos != std::string::npos) set.seed = std::stoull(line.substr(seed_pos + 5));
            continue;
        }
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw std::runtime_error("malformed sample row: " + line);
        Sample s;
        s.energy = std::stod(line.substr(0, c1));
        s.multiplicity = std::stoull(line.substr(c1 + 1, c2 - c1 - 1));
        const std::string spins = line.substr(c2 + 1);
        s.spins.reserve(spins.size());
        for (char ch : spins) {
            if (ch != '+' && ch != '-') throw std::runtime_error("spins must be +/-");
            s.spins.push_back(ch == '+' ? 1 : -1);
        }
        set.samples.push_back(std::move(s));
    }
    return set;
}

AnnealSchedule schedule_from_file(const std::filesystem::path& path, double t_f) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty schedule file");
    std::vector<std::array<double, 3>> rows;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream is(line);
        std::array<double, 3> row{};
        if (!(is >> row[0] >> row[1] >> row[2]))
            throw std::runtime_error("schedule rows must be: s A B");
        rows.push_back(row);
    }
    return AnnealSchedule::from_table(t_f, rows);
}

nlohmann::json results_json(const RamseyInstance& inst, double e_gs, uint64_t degeneracy,
                            const std::string& source, const EnergyHistogram& hist,
                            double feasible_fraction, double success_probability) {
    nlohmann::json j;
    j["instance"] = {{"m", inst.clique_order}, {"n", inst.independent_order}, {"N", inst.n_vertices}};
    j["e_gs"] = e_gs;
    j["degeneracy"] = degeneracy;
    j["source"] = source;
    nlohmann::json h = nlohmann::json::object();
    for (const auto& [e, c] : hist.bins) {
        std::ostringstream key;
        key << e;
        h[key.str()] = c;
    }
    j["histogram"] = h;
    j["feasible_fraction"] = feasible_fraction;
    j["success_probability"] = success_probability;
    return j;
}

nlohmann::json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    nlohmann::json j;
    in >> j;
    return j;
}

void save_json(const std::filesystem::path& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

}  // namespace ramsey

#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "ramsey/embedding.hpp"
#include "ramsey/graph_bits.hpp"
#include "ramsey/qa.hpp"
#include "ramsey/quadratic_model.hpp"
#include "ramsey/sample_set.hpp"
#include "ramsey/stats.hpp"

namespace ramsey {

// text form "N:<int>;bits:<0/1 string>" in edge-index order
std::string graph_to_text(const GraphBits& g);
GraphBits graph_from_text(const std::string& text);

nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

// {num_vars, domain, offset, linear:{var:coef}, quadratic:{"i,j":coef},
//  labels:{var:role}} (+ fixed:{label:value} when variables were pinned)
nlohmann::json model_to_json(const QuadraticModel& m);
QuadraticModel model_from_json(const nlohmann::json& j);

// {lambda, chains:{var:[qubit,...]}}
nlohmann::json embedding_to_json(const Embedding& e);
Embedding embedding_from_json(const nlohmann::json& j);

// {rows, cols, shore, defects:[...]}
nlohmann::json hardware_to_json(const HardwareGraph& hw);
HardwareGraph hardware_from_json(const nlohmann::json& j);

// CSV rows "energy,multiplicity,spins" with spins as a +/- string
void save_samples_csv(const std::filesystem::path& path, const SampleSet& set);
SampleSet load_samples_csv(const std::filesystem::path& path);

// whitespace table with a header line: s A(s) B(s)
AnnealSchedule schedule_from_file(const std::filesystem::path& path, double t_f);

nlohmann::json results_json(const RamseyInstance& inst, double e_gs, uint64_t degeneracy,
                            const std::string& source, const EnergyHistogram& hist,
                            double feasible_fraction, double success_probability);

nlohmann::json load_json(const std::filesystem::path& path);
void save_json(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace ramsey

#include "ramsey/embedding.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cmath>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>

#include "ramsey/quadratize.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

int Embedding::total_qubits() const {
    int n = 0;
    for (const auto& [v, chain] : chains) n += static_cast<int>(chain.size());
    return n;
}

namespace {

bool chain_connected(const std::vector<int>& chain, const HardwareGraph& hw) {
    if (chain.empty()) return false;
    if (chain.size() == 1) return true;
    std::set<int> members(chain.begin(), chain.end());
    std::vector<int> stack{chain.front()};
    std::set<int> seen{chain.front()};
    while (!stack.empty()) {
        const int q = stack.back();
        stack.pop_back();
        for (int nb : hw.neighbors(q))
            if (members.count(nb) && !seen.count(nb)) {
                seen.insert(nb);
                stack.push_back(nb);
            }
    }
    return seen.size() == members.size();
}

bool chains_coupled(const std::vector<int>& a, const std::vector<int>& b, const HardwareGraph& hw) {
    for (int qa : a)
        for (int qb : b)
            if (hw.has_coupler(qa, qb)) return true;
    return false;
}

}  // namespace

EmbeddingReport validate_embedding(const Embedding& emb, const QuadraticModel& model,
                                   const HardwareGraph& hw) {
    EmbeddingReport rep;
    auto fail = [&rep](std::string msg) {
        rep.ok = false;
        rep.problems.push_back(std::move(msg));
    };

    for (int v = 0; v < model.num_vars(); ++v) {
        auto it = emb.chains.find(v);
        if (it == emb.chains.end() || it->second.empty()) {
            rep.missing_chains.push_back(v);
            fail("variable " + std::to_string(v) + " has no chain");
        }
    }

    std::map<int, int> owner;
    for (const auto& [v, chain] : emb.chains) {
        bool bad_qubit = false;
        for (int q : chain) {
            if (q < 1 || q > hw.num_qubits() || !hw.usable(q)) {
                bad_qubit = true;
                continue;
            }
            auto [it, inserted] = owner.insert({q, v});
            if (!inserted && it->second != v) {
                rep.overlaps.push_back({it->second, v});
                fail("chains " + std::to_string(it->second) + " and " + std::to_string(v) +
                     " share qubit " + std::to_string(q));
            }
        }
        if (bad_qubit) {
            rep.unusable_chains.push_back(v);
            fail("chain " + std::to_string(v) + " uses an unusable or out-of-range qubit");
        } else if (!chain.empty() && !chain_connected(chain, hw)) {
            rep.disconnected_chains.push_back(v);
            fail("chain " + std::to_string(v) + " is not connected");
        }
    }

    for (const auto& [u, v] : model.primal_edges()) {
        auto iu = emb.chains.find(u), iv = emb.chains.find(v);
        if (iu == emb.chains.end() || iv == emb.chains.end()) continue;  // already reported
        if (!chains_coupled(iu->second, iv->second, hw)) {
            rep.missing_edges.push_back({u, v});
            fail("no coupler between chains of primal edge (" + std::to_string(u) + "," +
                 std::to_string(v) + ")");
        }
    }
    return rep;
}

namespace {

// One rip-up/re-route embedding attempt in the style of the usual
// heuristic minor-embedders: chains grow along cheapest paths where a
// qubit already claimed by k chains costs alpha^k to enter. Qubits at the
// fill cap are impassable, which keeps overlaps shallow enough for the
// tear-out rounds to dissolve them.
class EmbedAttempt {
public:
    EmbedAttempt(const QuadraticModel& model, const HardwareGraph& hw, uint64_t seed)
        : model_(model), hw_(hw), rng_(seed), n_(model.num_vars()) {
        adj_.resize(n_);
        for (const auto& [u, v] : model.primal_edges()) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        chains_.assign(n_, {});
        usage_.assign(hw.num_qubits() + 1, 0);
    }

    // pre-assign chains (e.g. clique-template slots): highest-degree
    // variables take the slots, anything left over is placed by search
    void seed(const std::vector<std::vector<int>>& slots) {
        std::vector<int> by_degree(n_);
        for (int i = 0; i < n_; ++i) by_degree[i] = i;
        std::stable_sort(by_degree.begin(), by_degree.end(), [this](int a, int b) {
            return adj_[a].size() > adj_[b].size();
        });
        for (size_t i = 0; i < slots.size() && i < by_degree.size(); ++i) {
            chains_[by_degree[i]] = slots[i];
            for (int q : slots[i]) ++usage_[q];
        }
    }

    std::optional<Embedding> run(int rounds) {
        // random qubit priorities break argmin ties without bias toward
        // low ids (which crowds everything into one corner)
        priority_.resize(hw_.num_qubits() + 1);
        for (auto& p : priority_) p = rng_.next_u64();

        // initial pass in breadth-first order from a max-degree variable so
        // every placement after the first has placed neighbors to anchor to
        std::vector<int> order = bfs_order();
        for (int v : order)
            if (chains_[v].empty() && !place(v)) return std::nullopt;
        trim_all();

        int best_overuse = total_overuse();
        int stall = 0;
        for (int round = 0; round < rounds && best_overuse > 0; ++round) {
            shuffle(order);
            // pushdown rounds force overlap-free re-placement where possible
            const int base_cap = round % 2 ? 1 : 2;
            for (int v : order) {
                rip(v);
                if (!place(v, base_cap)) return std::nullopt;
            }
            trim_all();
            const int over = total_overuse();
            if (getenv("RAMSEY_EMBED_DEBUG")) {
                int used = 0;
                for (int u : usage_) used += u > 0;
                fprintf(stderr, "[embed] round=%d cap=%d overuse=%d used=%d\n", round, base_cap, over, used);
            }
            if (over == 0) break;
            if (over < best_overuse) {
                best_overuse = over;
                stall = 0;
            } else if (++stall >= 6) {
                // stuck: tear out every chain touching a shared qubit so the
                // knot unwinds collectively instead of one trapped var at a time
                std::vector<int> ripped;
                for (int v = 0; v < n_; ++v) {
                    bool hot = false;
                    for (int q : chains_[v]) hot = hot || usage_[q] > 1;
                    if (hot) ripped.push_back(v);
                }
                for (int v : ripped) rip(v);
                shuffle(ripped);
                for (int v : ripped)
                    if (!place(v, 2)) return std::nullopt;
                stall = 0;
            }
        }
        if (total_overuse() > 0) return std::nullopt;
        trim_all();

        // compaction: disjoint re-placement shrinks chains the search left fat
        for (int pass = 0; pass < 2; ++pass) {
            shuffle(order);
            for (int v : order) try_replace_disjoint(v);
            trim_all();
        }

        Embedding emb;
        for (int v = 0; v < n_; ++v) {
            auto chain = chains_[v];
            std::sort(chain.begin(), chain.end());
            emb.chains[v] = std::move(chain);
        }
        return emb;
    }

    void try_replace_disjoint(int v) {
        const std::vector<int> old = chains_[v];
        rip(v);
        fill_cap_ = 1;
        const bool ok = place_capped(v);
        fill_cap_ = 2;
        if (ok && chains_[v].size() <= old.size()) return;
        rip(v);
        chains_[v] = old;
        for (int q : old) ++usage_[q];
    }

private:
    int total_overuse() const {
        int t = 0;
        for (int u : usage_)
            if (u > 1) t += u - 1;
        return t;
    }

    void rip(int v) {
        for (int q : chains_[v]) --usage_[q];
        chains_[v].clear();
    }

    double enter_cost(int q) const {
        if (usage_[q] >= fill_cap_) return std::numeric_limits<double>::infinity();
        return std::pow(kAlpha, usage_[q]);
    }

    // weighted Dijkstra from every qubit of a source chain
    void dijkstra(const std::vector<int>& sources, std::vector<double>& dist,
                  std::vector<int>& parent) const {
        const int nq = hw_.num_qubits();
        dist.assign(nq + 1, std::numeric_limits<double>::infinity());
        parent.assign(nq + 1, 0);
        using Item = std::pair<double, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        for (int s : sources) {
            dist[s] = 0.0;
            pq.push({0.0, s});
        }
        while (!pq.empty()) {
            auto [d, q] = pq.top();
            pq.pop();
            if (d > dist[q]) continue;
            for (int nb : hw_.neighbors(q)) {
                const double nd = d + enter_cost(nb);
                if (nd < dist[nb]) {
                    dist[nb] = nd;
                    parent[nb] = q;
                    pq.push({nd, nb});
                }
            }
        }
    }

    bool place(int v, int base_cap = 2) {
        // widen the fill cap only when the constrained placement dead-ends
        for (int cap = base_cap; cap <= 4; ++cap) {
            fill_cap_ = cap;
            if (place_capped(v)) {
                fill_cap_ = 2;
                return true;
            }
        }
        fill_cap_ = 2;
        return false;
    }

    bool place_capped(int v) {
        std::vector<int> placed_nbrs;
        for (int u : adj_[v])
            if (!chains_[u].empty()) placed_nbrs.push_back(u);

        const int nq = hw_.num_qubits();
        if (placed_nbrs.empty()) {
            // fresh start: any usable qubit, preferring unclaimed ones
            std::vector<int> cands;
            for (int q = 1; q <= nq; ++q)
                if (hw_.usable(q) && usage_[q] == 0) cands.push_back(q);
            if (cands.empty())
                for (int q = 1; q <= nq; ++q)
                    if (hw_.usable(q)) cands.push_back(q);
            if (cands.empty()) return false;
            const int q = cands[rng_.uniform_int(cands.size())];
            claim(v, q);
            return true;
        }

        std::vector<std::vector<double>> dist(placed_nbrs.size());
        std::vector<std::vector<int>> parent(placed_nbrs.size());
        for (size_t i = 0; i < placed_nbrs.size(); ++i)
            dijkstra(chains_[placed_nbrs[i]], dist[i], parent[i]);

        // root minimising the total path cost, root weight counted once
        double best = std::numeric_limits<double>::infinity();
        int best_q = 0;
        for (int q = 1; q <= nq; ++q) {
            if (!hw_.usable(q)) continue;
            // claiming the root costs its own weight once; each dist then
            // contributes only the interior path vertices (dist already
            // includes the root's weight whenever q lies outside the chain)
            double total = enter_cost(q);
            bool reachable = true;
            for (size_t i = 0; i < placed_nbrs.size(); ++i) {
                if (!std::isfinite(dist[i][q])) {
                    reachable = false;
                    break;
                }
                total += dist[i][q] - (dist[i][q] > 0.0 ? enter_cost(q) : 0.0);
            }
            if (!reachable || !std::isfinite(total)) continue;
            if (total < best - 1e-9 ||
                (total < best + 1e-9 && best_q != 0 && priority_[q] < priority_[best_q])) {
                best = total;
                best_q = q;
            }
        }
        if (best_q == 0) return false;

        claim(v, best_q);
        for (size_t i = 0; i < placed_nbrs.size(); ++i) {
            // walk parents from the root back into the neighbor chain
            int q = best_q;
            while (dist[i][q] > 0.0) {
                const int p = parent[i][q];
                if (p == 0) break;
                if (dist[i][p] > 0.0 && !in_chain(v, p)) claim(v, p);
                q = p;
            }
        }
        return true;
    }

    void shuffle(std::vector<int>& v) {
        for (size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[rng_.uniform_int(i)]);
    }

    std::vector<int> bfs_order() {
        std::vector<int> order;
        std::vector<char> seen(n_, 0);
        while (true) {
            int start = -1;
            for (int v = 0; v < n_; ++v)
                if (!seen[v] && (start < 0 || adj_[v].size() > adj_[start].size())) start = v;
            if (start < 0) break;
            std::vector<int> queue{start};
            seen[start] = 1;
            for (size_t h = 0; h < queue.size(); ++h) {
                const int v = queue[h];
                order.push_back(v);
                std::vector<int> nbrs = adj_[v];
                shuffle(nbrs);
                std::stable_sort(nbrs.begin(), nbrs.end(), [this](int a, int b) {
                    return adj_[a].size() > adj_[b].size();
                });
                for (int u : nbrs)
                    if (!seen[u]) {
                        seen[u] = 1;
                        queue.push_back(u);
                    }
            }
        }
        return order;
    }

    // drop chain vertices that neither keep the chain connected nor carry
    // any coupling to a placed neighbor, preferring overused ones
    void trim_all() {
        for (int v = 0; v < n_; ++v) {
            bool changed = true;
            while (changed && chains_[v].size() > 1) {
                changed = false;
                // try overused vertices first
                std::vector<int> cand = chains_[v];
                std::stable_sort(cand.begin(), cand.end(),
                                 [this](int a, int b) { return usage_[a] > usage_[b]; });
                for (int q : cand) {
                    std::vector<int> reduced;
                    for (int x : chains_[v])
                        if (x != q) reduced.push_back(x);
                    if (!chain_connected(reduced, hw_)) continue;
                    bool ok = true;
                    for (int u : adj_[v]) {
                        if (chains_[u].empty()) continue;
                        if (!chains_coupled(reduced, chains_[u], hw_)) {
                            ok = false;
                            break;
                        }
                    }
                    if (!ok) continue;
                    chains_[v] = std::move(reduced);
                    --usage_[q];
                    changed = true;
                    break;
                }
            }
        }
    }

    bool in_chain(int v, int q) const {
        return std::find(chains_[v].begin(), chains_[v].end(), q) != chains_[v].end();
    }

    void claim(int v, int q) {
        chains_[v].push_back(q);
        ++usage_[q];
    }

    static constexpr double kAlpha = 16.0;

    const QuadraticModel& model_;
    const HardwareGraph& hw_;
    CounterRng rng_;
    int n_;
    int fill_cap_ = 2;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> chains_;
    std::vector<int> usage_;
    std::vector<uint64_t> priority_;
};

// Chains of the standard complete-graph minor on an s x s Chimera grid:
// slot (t,k) runs along row t on RHP shore k for columns 0..t and down
// column t on LHP shore k for rows t..s-1, meeting in cell (t,t). Any two
// slots share a cell where their shores couple. The 8 grid symmetries give
// variants; the one with the most defect-free slots wins.
std::vector<std::vector<int>> clique_template_chains(const HardwareGraph& hw) {
    if (hw.rows() != hw.cols()) return {};
    const int s = hw.rows();
    const int shore = hw.shore();

    std::vector<std::vector<int>> best;
    for (int variant = 0; variant < 8; ++variant) {
        const bool transpose = variant & 1, flip_r = variant & 2, flip_c = variant & 4;
        auto qubit = [&](int r, int c, bool rhp, int k) {
            if (transpose) {
                std::swap(r, c);
                rhp = !rhp;
            }
            if (flip_r) r = s - 1 - r;
            if (flip_c) c = s - 1 - c;
            return ((r * s) + c) * 2 * shore + (rhp ? shore : 0) + k + 1;
        };
        std::vector<std::vector<int>> intact;
        for (int t = 0; t < s; ++t)
            for (int k = 0; k < shore; ++k) {
                std::vector<int> chain;
                for (int c = 0; c <= t; ++c) chain.push_back(qubit(t, c, true, k));
                for (int r = t; r < s; ++r) chain.push_back(qubit(r, t, false, k));
                bool ok = true;
                for (int q : chain) ok = ok && hw.usable(q);
                if (ok) intact.push_back(std::move(chain));
            }
        if (intact.size() > best.size()) best = std::move(intact);
    }
    // shorter chains first so low-degree variables get the cheap slots
    std::stable_sort(best.begin(), best.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return best;
}

void trim_chains(Embedding& emb, const QuadraticModel& model, const HardwareGraph& hw) {
    const auto edges = model.primal_edges();
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& [v, chain] : emb.chains) {
            if (chain.size() <= 1) continue;
            for (size_t i = 0; i < chain.size(); ++i) {
                std::vector<int> reduced = chain;
                reduced.erase(reduced.begin() + i);
                if (!chain_connected(reduced, hw)) continue;
                bool still_ok = true;
                for (const auto& [a, b] : edges) {
                    if (a != v && b != v) continue;
                    const int other = a == v ? b : a;
                    if (!chains_coupled(reduced, emb.chains.at(other), hw)) {
                        still_ok = false;
                        break;
                    }
                }
                if (still_ok) {
                    chain = std::move(reduced);
                    changed = true;
                    break;
                }
            }
        }
    }
}

}  // namespace

std::optional<Embedding> find_embedding(const QuadraticModel& model, const HardwareGraph& hw,
                                        const FindEmbeddingOptions& opts) {
    if (model.num_vars() == 0) return Embedding{};
    if (model.num_vars() > hw.usable_count()) return std::nullopt;

    std::vector<std::vector<int>> slots;
    if (model.num_vars() <= hw.rows() * hw.shore()) slots = clique_template_chains(hw);

    for (int attempt = 0; attempt < opts.restarts; ++attempt) {
        EmbedAttempt runner(model, hw, opts.seed * 0x9E3779B9u + attempt);
        // odd attempts start from the clique template when it can host the
        // model; search repairs whatever the defects broke
        if (attempt % 2 == 1 && !slots.empty()) runner.seed(slots);
        auto emb = runner.run(opts.rounds);
        if (!emb) continue;
        if (opts.trim_chains) trim_chains(*emb, model, hw);
        if (validate_embedding(*emb, model, hw).ok) return emb;
    }
    return std::nullopt;
}

EmbeddedModel embed_model(const QuadraticModel& spin_model, const Embedding& emb,
                          const HardwareGraph& hw) {
    if (spin_model.domain() != VarDomain::Spin)
        throw std::invalid_argument("embed_model expects a spin-domain model");
    const auto report = validate_embedding(emb, spin_model, hw);
    if (!report.ok)
        throw std::invalid_argument("invalid embedding: " +
                                    (report.problems.empty() ? "" : report.problems.front()));
    if (emb.lambda <= Rational(0)) throw std::invalid_argument("chain strength must be positive");

    std::vector<int> qubits;
    for (const auto& [v, chain] : emb.chains) qubits.insert(qubits.end(), chain.begin(), chain.end());
    std::sort(qubits.begin(), qubits.end());

    QuadraticModel hm(static_cast<int>(qubits.size()), VarDomain::Spin);
    hm.labels.resize(qubits.size());
    for (size_t i = 0; i < qubits.size(); ++i) hm.labels[i] = "q" + std::to_string(qubits[i]);
    auto index_of = [&qubits](int q) {
        return static_cast<int>(std::lower_bound(qubits.begin(), qubits.end(), q) - qubits.begin());
    };

    hm.add_offset(spin_model.offset());
    for (int v = 0; v < spin_model.num_vars(); ++v) {
        const Rational& h = spin_model.linear(v);
        if (h == Rational(0)) continue;
        const auto& chain = emb.chains.at(v);
        const Rational share = h / Rational(static_cast<long long>(chain.size()));
        for (int q : chain) hm.add_linear(index_of(q), share);
    }
    for (const auto& [pr, j] : spin_model.quadratic_terms()) {
        if (j == Rational(0)) continue;
        const auto& ca = emb.chains.at(pr.first);
        const auto& cb = emb.chains.at(pr.second);
        std::pair<int, int> chosen{0, 0};
        for (int qa : ca)
            for (int qb : cb)
                if (hw.has_coupler(qa, qb)) {
                    std::pair<int, int> cand{std::min(qa, qb), std::max(qa, qb)};
                    if (chosen.first == 0 || cand < chosen) chosen = cand;
                }
        hm.add_quadratic(index_of(chosen.first), index_of(chosen.second), j);
    }
    for (const auto& [v, chain] : emb.chains)
        for (size_t i = 0; i < chain.size(); ++i)
            for (size_t k = i + 1; k < chain.size(); ++k)
                if (hw.has_coupler(chain[i], chain[k]))
                    hm.add_quadratic(index_of(chain[i]), index_of(chain[k]), -emb.lambda);

    auto [normalized, scale] = normalize_ranges(hm);
    EmbeddedModel out{std::move(normalized), std::move(qubits), emb, spin_model, scale};
    return out;
}

int EmbeddedModel::index_of_qubit(int qubit_id) const {
    auto it = std::lower_bound(qubits.begin(), qubits.end(), qubit_id);
    if (it == qubits.end() || *it != qubit_id)
        throw std::out_of_range("qubit not part of the embedded model");
    return static_cast<int>(it - qubits.begin());
}

std::optional<std::vector<int8_t>> unembed(std::span<const int8_t> hardware_spins,
                                           const EmbeddedModel& em) {
    if (hardware_spins.size() != em.qubits.size())
        throw std::invalid_argument("sample does not cover all chain qubits");
    std::vector<int8_t> logical(em.source.num_vars(), 0);
    for (const auto& [v, chain] : em.embedding.chains) {
        const int8_t first = hardware_spins[em.index_of_qubit(chain.front())];
        for (int q : chain)
            if (hardware_spins[em.index_of_qubit(q)] != first) return std::nullopt;
        logical[v] = first;
    }
    return logical;
}

double feasible_fraction(const SampleSet& samples, const EmbeddedModel& em) {
    uint64_t feasible = 0, total = 0;
    for (const auto& s : samples.samples) {
        total += s.multiplicity;
        if (unembed(s.spins, em)) feasible += s.multiplicity;
    }
    return total == 0 ? 0.0 : static_cast<double>(feasible) / static_cast<double>(total);
}

TuneResult tune_lambda(const QuadraticModel& logical_spin, const Embedding& emb,
                       const HardwareGraph& hw, const SamplerFn& sampler, uint64_t seed,
                       double target_f, Rational step, Rational lambda_start, Rational lambda_max) {
    if (step <= Rational(0)) throw std::invalid_argument("lambda step must be positive");
    TuneResult result;
    uint64_t batch = 0;
    for (Rational lam = lambda_start; lam <= lambda_max; lam += step) {
        Embedding trial = emb;
        trial.lambda = lam;
        const EmbeddedModel em = embed_model(logical_spin, trial, hw);
        const SampleSet samples = sampler(em.model, seed + batch++);
        const double f = feasible_fraction(samples, em);
        result.trace.push_back({lam, f});
        if (f > target_f) {
            result.ok = true;
            result.lambda = lam + step;  // one final increase
            return result;
        }
    }
    result.ok = false;
    result.lambda = result.trace.empty() ? lambda_start : result.trace.back().lambda;
    return result;
}

}  // namespace ramsey

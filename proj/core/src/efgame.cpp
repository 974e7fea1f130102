#include "bopd/efgame.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <stdexcept>

namespace bopd {

RelStructure RelStructure::fromPairs(int size, const std::vector<Edge>& r1, const std::vector<Edge>& r2,
                                     std::vector<int> colors) {
    if (size < 0 || size > 64) throw std::invalid_argument("structure size must be in [0, 64]");
    if (!colors.empty() && static_cast<int>(colors.size()) != size)
        throw std::invalid_argument("color map size mismatch");
    RelStructure s;
    s.size = size;
    s.rel1.assign(size, 0);
    s.rel2.assign(size, 0);
    s.colors = std::move(colors);
    auto fill = [&](std::vector<std::uint64_t>& rel, const std::vector<Edge>& pairs) {
        for (auto [u, v] : pairs) {
            if (u == v || u < 0 || v < 0 || u >= size || v >= size)
                throw std::invalid_argument("relation pair out of range");
            rel[u] |= std::uint64_t{1} << v;
            rel[v] |= std::uint64_t{1} << u;
        }
    };
    fill(s.rel1, r1);
    fill(s.rel2, r2);
    return s;
}

RelStructure asStructure(const Graph& g) {
    return RelStructure::fromPairs(g.vertexCount(), g.edges(), {});
}

RelStructure asStructure(const GraphWithLayout& gwl) {
    return RelStructure::fromPairs(gwl.h.vertexCount(), gwl.h.edges(), gwl.l.pairs(), gwl.colors);
}

RelStructure asStructure(const FacingStructure& f) { return asStructure(f.gwl); }

bool isPartialIso(const RelStructure& s, const RelStructure& t, const GameConfig& config) {
    for (std::size_t i = 0; i < config.size(); ++i) {
        auto [x, y] = config[i];
        if (x < 0 || x >= s.size || y < 0 || y >= t.size) throw std::invalid_argument("config index out of range");
        if (s.colorOf(x) != t.colorOf(y)) return false;
        for (std::size_t j = 0; j < i; ++j) {
            auto [a, b] = config[j];
            if ((x == a) != (y == b)) return false;
            if (s.rel1Has(x, a) != t.rel1Has(y, b)) return false;
            if (s.rel2Has(x, a) != t.rel2Has(y, b)) return false;
        }
    }
    return true;
}

namespace {

std::uint16_t encodePair(int x, int y, int rightSize) {
    return static_cast<std::uint16_t>(x * rightSize + y);
}

// Move ordering: vertices whose (color, degrees) signature is rare on the
// other side first. Affects speed only, never the result.
std::vector<int> signatureOrder(const RelStructure& own, const RelStructure& other) {
    auto sig = [](const RelStructure& s, int v) {
        return std::tuple<int, int, int>(s.colorOf(v), __builtin_popcountll(s.rel1[v]),
                                         __builtin_popcountll(s.rel2[v]));
    };
    std::map<std::tuple<int, int, int>, int> otherCount;
    for (int v = 0; v < other.size; ++v) ++otherCount[sig(other, v)];
    std::vector<int> order(own.size);
    for (int v = 0; v < own.size; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        auto ca = otherCount.count(sig(own, a)) ? otherCount[sig(own, a)] : 0;
        auto cb = otherCount.count(sig(own, b)) ? otherCount[sig(own, b)] : 0;
        return ca < cb;
    });
    return order;
}

}  // namespace

GameSolver::GameSolver(RelStructure left, RelStructure right, std::size_t memoCapacity)
    : left_(std::move(left)), right_(std::move(right)), memoCapacity_(memoCapacity) {
    if (static_cast<long long>(left_.size) * right_.size > 0xFFFF)
        throw std::invalid_argument("structure pair too large for the solver");
    leftOrder_ = signatureOrder(left_, right_);
    rightOrder_ = signatureOrder(right_, left_);
}

bool GameSolver::extendOk(const std::vector<std::uint16_t>& key, int x, int y) const {
    if (left_.colorOf(x) != right_.colorOf(y)) return false;
    for (auto code : key) {
        int a = code / right_.size, b = code % right_.size;
        if ((x == a) != (y == b)) return false;
        if (left_.rel1Has(x, a) != right_.rel1Has(y, b)) return false;
        if (left_.rel2Has(x, a) != right_.rel2Has(y, b)) return false;
    }
    return true;
}

bool GameSolver::search(std::vector<std::uint16_t>& key, int k) {
    // Position is a partial isomorphism here; with no rounds left Spoiler
    // has lost.
    if (k == 0) return false;

    std::string memoKey(reinterpret_cast<const char*>(key.data()), key.size() * sizeof(std::uint16_t));
    memoKey.push_back(static_cast<char>(k));
    if (auto it = memo_.find(memoKey); it != memo_.end()) return it->second;

    auto tryMoves = [&](bool onLeft) {
        const auto& order = onLeft ? leftOrder_ : rightOrder_;
        int replies = onLeft ? right_.size : left_.size;
        for (int v : order) {
            bool winsForAllReplies = true;
            for (int r = 0; r < replies && winsForAllReplies; ++r) {
                int x = onLeft ? v : r, y = onLeft ? r : v;
                if (!extendOk(key, x, y)) continue;  // reply breaks the isomorphism: good for Spoiler
                auto code = encodePair(x, y, right_.size);
                auto pos = std::lower_bound(key.begin(), key.end(), code);
                if (pos != key.end() && *pos == code) {
                    // Repeating a selected pair wastes the round for Spoiler.
                    if (!search(key, k - 1)) winsForAllReplies = false;
                    continue;
                }
                std::size_t idx = static_cast<std::size_t>(pos - key.begin());
                key.insert(pos, code);
                bool w = search(key, k - 1);
                key.erase(key.begin() + idx);
                if (!w) winsForAllReplies = false;
            }
            if (winsForAllReplies) return true;
        }
        return false;
    };

    bool result = tryMoves(true) || tryMoves(false);
    if (memo_.size() >= memoCapacity_) throw std::runtime_error("game solver memo capacity exceeded");
    memo_[memoKey] = result;
    return result;
}

bool GameSolver::spoilerWins(int k, const GameConfig& config) {
    if (k < 0) throw std::invalid_argument("round count must be >= 0");
    if (!isPartialIso(left_, right_, config)) return true;
    std::vector<std::uint16_t> key;
    for (auto [x, y] : config) key.push_back(encodePair(x, y, right_.size));
    std::sort(key.begin(), key.end());
    key.erase(std::unique(key.begin(), key.end()), key.end());
    return search(key, k);
}

std::optional<int> GameSolver::depth(int maxK, const GameConfig& initial) {
    for (int k = 0; k <= maxK; ++k)
        if (spoilerWins(k, initial)) return k;
    return std::nullopt;
}

bool spoilerWins(const RelStructure& s, const RelStructure& t, int k, const GameConfig& config) {
    return GameSolver(s, t).spoilerWins(k, config);
}

std::optional<int> efDepth(const RelStructure& s, const RelStructure& t, int maxK) {
    return GameSolver(s, t).depth(maxK);
}

std::optional<int> efDepthRooted(const RelStructure& s, int v, const RelStructure& t, int v2, int maxK) {
    return GameSolver(s, t).depth(maxK, {{v, v2}});
}

FamilySweep maxDepthOverFamily(const Graph& g, const std::vector<Graph>& family, int maxK) {
    FamilySweep sweep;
    auto sg = asStructure(g);
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (isomorphic(g, family[i])) continue;
        auto d = efDepth(sg, asStructure(family[i]), maxK);
        sweep.perOpponent.push_back({i, d});
        if (d)
            sweep.maxDepth = std::max(sweep.maxDepth, *d);
        else
            ++sweep.unresolved;
    }
    return sweep;
}

namespace {

bool extendStructureIso(const RelStructure& s, const RelStructure& t, std::vector<int>& map,
                        std::vector<bool>& used, int v) {
    if (v == s.size) return true;
    for (int w = 0; w < t.size; ++w) {
        if (used[w] || s.colorOf(v) != t.colorOf(w)) continue;
        if (__builtin_popcountll(s.rel1[v]) != __builtin_popcountll(t.rel1[w])) continue;
        if (__builtin_popcountll(s.rel2[v]) != __builtin_popcountll(t.rel2[w])) continue;
        bool ok = true;
        for (int p = 0; p < v && ok; ++p)
            if (s.rel1Has(v, p) != t.rel1Has(w, map[p]) || s.rel2Has(v, p) != t.rel2Has(w, map[p]))
                ok = false;
        if (!ok) continue;
        map[v] = w;
        used[w] = true;
        if (extendStructureIso(s, t, map, used, v + 1)) return true;
        used[w] = false;
        map[v] = -1;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> structureIsomorphism(const RelStructure& s, const RelStructure& t) {
    if (s.size != t.size) return std::nullopt;
    std::vector<int> map(s.size, -1);
    std::vector<bool> used(s.size, false);
    if (extendStructureIso(s, t, map, used, 0)) return map;
    return std::nullopt;
}

namespace {

std::vector<int> rel1Distances(const RelStructure& s, int source) {
    std::vector<int> dist(s.size, -1);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w = 0; w < s.size; ++w)
            if (s.rel1Has(v, w) && dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

}  // namespace

SpoilerStrategy halvingStrategy(const RelStructure& s, const RelStructure& t, int u, int v, int u2,
                                int v2) {
    auto du = rel1Distances(s, u);
    if (du[v] < 0) throw std::invalid_argument("halving strategy requires a finite left distance");
    auto du2 = rel1Distances(t, u2);
    if (du[v] == du2[v2]) throw std::invalid_argument("halving strategy requires unequal anchor distances");

    return [s, t](const GameConfig& history) -> SpoilerMove {
        // Find the selected pair with unequal distances minimizing the
        // smaller (finite) one; bisect it on that side.
        int bestD = -1;
        bool bestOnLeft = true;
        int bestA = -1, bestB = -1;
        for (std::size_t i = 0; i < history.size(); ++i)
            for (std::size_t j = i + 1; j < history.size(); ++j) {
                auto [xi, yi] = history[i];
                auto [xj, yj] = history[j];
                auto dl = rel1Distances(s, xi)[xj];
                auto dr = rel1Distances(t, yi)[yj];
                if (dl == dr) continue;
                bool onLeft = dr < 0 || (dl >= 0 && dl < dr);
                int dSmall = onLeft ? dl : dr;
                if (dSmall < 0) continue;  // both infinite never happens when unequal
                if (bestD < 0 || dSmall < bestD) {
                    bestD = dSmall;
                    bestOnLeft = onLeft;
                    bestA = onLeft ? xi : yi;
                    bestB = onLeft ? xj : yj;
                }
            }
        if (bestD < 0) throw std::logic_error("halving strategy invariant lost: no unequal pair");
        if (bestD < 2) throw std::logic_error("halving strategy queried at a broken position");

        const RelStructure& side = bestOnLeft ? s : t;
        auto da = rel1Distances(side, bestA);
        auto db = rel1Distances(side, bestB);
        int half = (bestD + 1) / 2;
        for (int w = 0; w < side.size; ++w)
            if (da[w] == half && db[w] == bestD - half) return {bestOnLeft, w};
        throw std::logic_error("halving strategy found no midpoint");
    };
}

StrategyResult verifyStrategy(const RelStructure& s, const RelStructure& t, const GameConfig& initial,
                              const SpoilerStrategy& strategy, int budget) {
    StrategyResult result;
    result.success = true;

    std::function<void(GameConfig&, int)> explore = [&](GameConfig& config, int roundsUsed) {
        if (!result.success) return;
        if (!isPartialIso(s, t, config)) {
            result.maxRoundsUsed = std::max(result.maxRoundsUsed, roundsUsed);
            return;
        }
        if (roundsUsed == budget) {
            result.success = false;
            result.counterexample = config;
            return;
        }
        SpoilerMove move = strategy(config);
        int replies = move.onLeft ? t.size : s.size;
        for (int r = 0; r < replies && result.success; ++r) {
            config.push_back(move.onLeft ? std::pair{move.vertex, r} : std::pair{r, move.vertex});
            explore(config, roundsUsed + 1);
            config.pop_back();
        }
    };

    GameConfig config = initial;
    explore(config, 0);
    return result;
}

namespace {

double log2Checked(double x, const char* name) {
    if (x < 1) throw std::invalid_argument(std::string("log argument ") + name + " must be >= 1");
    return std::log2(x);
}

void requireParams(const std::vector<double>& params, std::size_t n, const char* formula) {
    if (params.size() != n)
        throw std::invalid_argument(std::string(formula) + " expects " + std::to_string(n) + " parameter(s)");
}

}  // namespace

BoundValue evaluateBound(BoundFormula f, const std::vector<double>& params) {
    switch (f) {
        case BoundFormula::MT1:
            requireParams(params, 1, "MT1");
            return {std::ceil(log2Checked(params[0], "d")), false};
        case BoundFormula::CnCm:
            requireParams(params, 1, "CnCm");
            return {std::ceil(log2Checked(params[0], "n")) + 1, false};
        case BoundFormula::DefCn:
            requireParams(params, 1, "DefCn");
            return {log2Checked(params[0], "n") + 3, true};
        case BoundFormula::TreeLayout:
            requireParams(params, 2, "TreeLayout");
            return {log2Checked(params[0], "diam") + log2Checked(params[1], "max_deg") + 12, true};
        case BoundFormula::MainLemma1:
            requireParams(params, 2, "MainLemma1");
            return {3 * log2Checked(params[0], "r") + log2Checked(params[1], "max_deg") + 18, false};
        case BoundFormula::Yuppie:
            requireParams(params, 2, "Yuppie");
            return {std::max(log2Checked(params[0], "r"), log2Checked(params[1], "max_deg")) + 7, true};
        case BoundFormula::MainLemma2:
            requireParams(params, 3, "MainLemma2");
            return {3 * params[0] + 2 * log2Checked(params[1], "f") + 2 * log2Checked(params[2], "r") + 5,
                    true};
        case BoundFormula::MainLemma2A:
            requireParams(params, 2, "MainLemma2A");
            return {2 * log2Checked(params[0], "f") + 2 * log2Checked(params[1], "r") + 9, true};
        case BoundFormula::MainLemma2B:
            requireParams(params, 3, "MainLemma2B");
            return {3 * params[0] + 2 * log2Checked(params[1], "f") + 2 * log2Checked(params[2], "r") + 5,
                    true};
        case BoundFormula::Theorem1:
            requireParams(params, 2, "Theorem1");
            return {11 * log2Checked(params[0], "r") + 5 * log2Checked(params[1], "max_deg") + 59, false};
    }
    throw std::invalid_argument("unknown bound formula");
}

namespace {

const std::vector<std::pair<std::string, BoundFormula>>& formulaTable() {
    static const std::vector<std::pair<std::string, BoundFormula>> table = {
        {"MT1", BoundFormula::MT1},
        {"CnCm", BoundFormula::CnCm},
        {"DefCn", BoundFormula::DefCn},
        {"TreeLayout", BoundFormula::TreeLayout},
        {"MainLemma1", BoundFormula::MainLemma1},
        {"Yuppie", BoundFormula::Yuppie},
        {"MainLemma2", BoundFormula::MainLemma2},
        {"MainLemma2A", BoundFormula::MainLemma2A},
        {"MainLemma2B", BoundFormula::MainLemma2B},
        {"Theorem1", BoundFormula::Theorem1},
    };
    return table;
}

}  // namespace

BoundFormula boundFormulaFromName(std::string_view name) {
    for (const auto& [n, f] : formulaTable())
        if (n == name) return f;
    throw std::invalid_argument("unknown bound formula: " + std::string(name));
}

std::vector<std::string> boundFormulaNames() {
    std::vector<std::string> out;
    for (const auto& [n, f] : formulaTable()) out.push_back(n);
    return out;
}

std::vector<std::string> boundParamNames(BoundFormula f) {
    switch (f) {
        case BoundFormula::MT1: return {"d"};
        case BoundFormula::CnCm: return {"n"};
        case BoundFormula::DefCn: return {"n"};
        case BoundFormula::TreeLayout: return {"diam", "max_deg"};
        case BoundFormula::MainLemma1: return {"r", "max_deg"};
        case BoundFormula::Yuppie: return {"r", "max_deg"};
        case BoundFormula::MainLemma2: return {"d_facing", "f", "r"};
        case BoundFormula::MainLemma2A: return {"f", "r"};
        case BoundFormula::MainLemma2B: return {"d_facing", "f", "r"};
        case BoundFormula::Theorem1: return {"r", "max_deg"};
    }
    return {};
}

}  // namespace bopd

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bopd/facing.hpp"
#include "bopd/graph.hpp"

namespace bopd {

/// Colored structure with two symmetric irreflexive binary relations; the
/// game arena. Plain graphs embed with an empty second relation and one
/// color. Capped at 64 vertices (bitmask rows).
struct RelStructure {
    int size = 0;
    std::vector<std::uint64_t> rel1;  // adjacency bitmask per vertex
    std::vector<std::uint64_t> rel2;
    std::vector<int> colors;

    static RelStructure fromPairs(int size, const std::vector<Edge>& r1, const std::vector<Edge>& r2,
                                  std::vector<int> colors = {});

    bool rel1Has(int u, int v) const { return (rel1[u] >> v) & 1; }
    bool rel2Has(int u, int v) const { return (rel2[u] >> v) & 1; }
    int colorOf(int v) const { return colors.empty() ? 0 : colors[v]; }
};

RelStructure asStructure(const Graph& g);
RelStructure asStructure(const GraphWithLayout& gwl);
RelStructure asStructure(const FacingStructure& f);

/// Ordered list of selected vertex pairs (left vertex, right vertex).
/// The winning condition depends only on the pair set.
using GameConfig = std::vector<std::pair<int, int>>;

/// True iff the selected pairs form a partial isomorphism: matching
/// equality pattern, both relations preserved both ways, equal colors.
bool isPartialIso(const RelStructure& s, const RelStructure& t, const GameConfig& config);

/// Exact game solver. Memoizes on (sorted pair set, remaining rounds);
/// entries are capped and overflow throws (fail-fast). Single-threaded per
/// instance; distinct instances may run concurrently.
class GameSolver {
public:
    GameSolver(RelStructure left, RelStructure right, std::size_t memoCapacity = 4'000'000);

    /// True iff Spoiler has a winning strategy in the k-round game from
    /// the given position.
    bool spoilerWins(int k, const GameConfig& config = {});

    /// Least k <= maxK with spoilerWins(k), by iterative deepening.
    std::optional<int> depth(int maxK, const GameConfig& initial = {});

    const RelStructure& left() const { return left_; }
    const RelStructure& right() const { return right_; }

private:
    bool extendOk(const std::vector<std::uint16_t>& key, int x, int y) const;
    bool search(std::vector<std::uint16_t>& key, int k);

    RelStructure left_, right_;
    std::vector<int> leftOrder_, rightOrder_;  // move ordering, speed only
    std::unordered_map<std::string, bool> memo_;
    std::size_t memoCapacity_;
};

bool spoilerWins(const RelStructure& s, const RelStructure& t, int k, const GameConfig& config = {});

/// Least k <= maxK such that Spoiler wins the k-round game; nullopt if none.
std::optional<int> efDepth(const RelStructure& s, const RelStructure& t, int maxK);

/// Rooted variant: minimum total rounds with (v, v') pre-placed.
std::optional<int> efDepthRooted(const RelStructure& s, int v, const RelStructure& t, int v2, int maxK);

struct FamilySweep {
    int maxDepth = 0;                // max over resolved opponents
    std::size_t unresolved = 0;      // opponents whose depth exceeded maxK
    std::vector<std::pair<std::size_t, std::optional<int>>> perOpponent;  // family index -> depth
};

/// Max efDepth against every family member not isomorphic to g; a certified
/// lower bound on the depth against all graphs.
FamilySweep maxDepthOverFamily(const Graph& g, const std::vector<Graph>& family, int maxK);

/// Brute-force isomorphism of two-relation colored structures.
std::optional<std::vector<int>> structureIsomorphism(const RelStructure& s, const RelStructure& t);

struct SpoilerMove {
    bool onLeft = true;
    int vertex = 0;
};

/// Deterministic decision function over the game history (anchor pairs
/// included). Queried only at positions that are partial isomorphisms.
using SpoilerStrategy = std::function<SpoilerMove(const GameConfig& history)>;

/// The distance-halving strategy: always bisect a selected pair whose
/// distances disagree, playing on the side with the smaller distance.
/// Requires d(u,v) finite and different from d(u2,v2) (distances in the
/// first relation). Wins within ceil(log2 d) moves from anchors (u,u2),
/// (v,v2).
SpoilerStrategy halvingStrategy(const RelStructure& s, const RelStructure& t, int u, int v, int u2,
                                int v2);

struct StrategyResult {
    bool success = false;
    int maxRoundsUsed = 0;
    GameConfig counterexample;  // a losing history when !success
};

/// Exhaustively explores every Duplicator reply sequence; success iff every
/// branch breaks the partial isomorphism within the budget.
StrategyResult verifyStrategy(const RelStructure& s, const RelStructure& t, const GameConfig& initial,
                              const SpoilerStrategy& strategy, int budget);

/// Closed-form depth bounds. Parameters per identifier (all log arguments
/// must be >= 1):
///   MT1(d)                 ceil(log d)
///   CnCm(n)                ceil(log n) + 1
///   DefCn(n)               log n + 3          (strict)
///   TreeLayout(diam, max_deg)   log diam + log max_deg + 12   (strict)
///   MainLemma1(r, max_deg)      3 log r + log max_deg + 18
///   Yuppie(r, max_deg)          max(log r, log max_deg) + 7   (strict)
///   MainLemma2(d_facing, f, r)  3 d_facing + 2 log f + 2 log r + 5  (strict)
///   MainLemma2A(f, r)           2 log f + 2 log r + 9         (strict)
///   MainLemma2B(d_facing, f, r) 3 d_facing + 2 log f + 2 log r + 5  (strict)
///   Theorem1(r, max_deg)        11 log r + 5 log max_deg + 59
enum class BoundFormula {
    MT1,
    CnCm,
    DefCn,
    TreeLayout,
    MainLemma1,
    Yuppie,
    MainLemma2,
    MainLemma2A,
    MainLemma2B,
    Theorem1,
};

struct BoundValue {
    double value = 0;
    bool strict = false;  // true: depth < value; false: depth <= value
};

BoundValue evaluateBound(BoundFormula f, const std::vector<double>& params);
BoundFormula boundFormulaFromName(std::string_view name);
std::vector<std::string> boundFormulaNames();
std::vector<std::string> boundParamNames(BoundFormula f);

}  // namespace bopd

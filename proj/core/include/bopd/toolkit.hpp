#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bopd/dissection.hpp"
#include "bopd/graph.hpp"
#include "bopd/rng.hpp"

namespace bopd {

/// Number of pairwise non-crossing chord subsets of the labeled n-gon,
/// via the base-edge face decomposition (the face containing a fixed side
/// determines a composition of the remaining arc; sub-polygons recurse).
/// Validated against enumerateDissections for small n before use.
BigInt countDissections(int n);

/// Every dissection of the n-gon, generated by backtracking over candidate
/// chords in lexicographic order; deterministic. Output grows like the
/// little Schroeder numbers, so keep n small.
std::vector<Dissection> enumerateDissections(int n);

/// Exactly uniform over all dissections of the n-gon: the face containing
/// the base edge is chosen with probability proportional to the big-integer
/// weight of its completions, then sub-polygons recurse.
Dissection sampleDissection(int n, SplitMix64& rng);

struct ExperimentConfig {
    std::vector<int> sizes;
    int samplesPerSize = 1;
    std::uint64_t seed = 0;
    int finenessCap = 16;
    std::string outputPath;
};

/// JSON object with keys sizes, samplesPerSize, seed, finenessCap,
/// outputPath.
ExperimentConfig parseExperimentConfig(std::istream& in);
ExperimentConfig loadExperimentConfig(const std::string& path);

struct SampleRecord {
    int n = 0;
    std::uint64_t seed = 0;
    int sampleIndex = 0;
    int chordCount = 0;
    int deltaDual = 0;
    std::optional<int> rDual;  // nullopt = fineness cap exceeded
    int f = 0;
    int deg2Path = 0;
};

/// One record per (size, sample), deterministic given the seed; per-sample
/// substream = substreamSeed(seed, size, index). deltaDual = f is asserted
/// on every record.
std::vector<SampleRecord> runExperimentRecords(const ExperimentConfig& cfg);

/// CSV with the frozen header n,seed,sample,chords,delta_dual,r_dual,f,deg2path;
/// cap-exceeded r_dual written as >CAP; '#'-prefixed per-size summary lines
/// (mean/max) appended after the data rows.
void writeExperimentCsv(const std::vector<SampleRecord>& records, const ExperimentConfig& cfg,
                        std::ostream& out);

/// Runs the experiment and writes the CSV to cfg.outputPath.
void runExperiment(const ExperimentConfig& cfg);

}  // namespace bopd

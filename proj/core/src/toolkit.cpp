#include "bopd/toolkit.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "bopd/facing.hpp"
#include "bopd/params.hpp"

namespace bopd {

namespace {

// Gap weights for the base-edge decomposition of the m-gon:
//   Q(1) = 1 (a polygon side), Q(g) = P(g+1) for g >= 2 (a chord closing a
//   sub-polygon on g+1 consecutive vertices);
//   B(s) = sum over compositions of s with >= 1 part of the product of Q;
//   P(m) = sum over compositions of m-1 with >= 2 parts = B(m-1) - Q(m-1).
struct DissectionCounts {
    std::vector<BigInt> q, b;  // indexed by gap length, q[0]/b[0] unused

    explicit DissectionCounts(int n) {
        q.assign(n, 0);
        b.assign(n, 0);
        if (n >= 2) q[1] = 1;
        for (int s = 1; s <= n - 1; ++s) {
            BigInt multi = 0;  // compositions of s with >= 2 parts
            for (int j = 1; j <= s - 1; ++j) multi += b[j] * q[s - j];
            if (s >= 2) q[s] = multi;  // = P(s+1)
            b[s] = q[s] + multi;
        }
    }

    BigInt polygon(int m) const {  // P(m), m >= 3
        BigInt p = 0;
        for (int j = 1; j <= m - 2; ++j) p += b[j] * q[m - 1 - j];
        return p;
    }

    // Weight of completing a composition with `remaining` total and at
    // least `need` further parts.
    BigInt completion(int remaining, int need) const {
        if (remaining == 0) return need == 0 ? 1 : 0;
        if (need >= 2) return b[remaining] - q[remaining];
        return b[remaining];
    }
};

}  // namespace

BigInt countDissections(int n) {
    if (n < 3) throw std::invalid_argument("polygon size must be >= 3");
    return DissectionCounts(n).polygon(n);
}

std::vector<Dissection> enumerateDissections(int n) {
    if (n < 3) throw std::invalid_argument("polygon size must be >= 3");
    std::vector<Edge> candidates;
    for (int i = 0; i < n; ++i)
        for (int j = i + 2; j < n; ++j)
            if (isValidChord(n, {i, j})) candidates.push_back({i, j});

    std::vector<Dissection> out;
    std::vector<Edge> chosen;
    std::function<void(std::size_t)> backtrack = [&](std::size_t idx) {
        if (idx == candidates.size()) {
            out.push_back(Dissection(n, chosen));
            return;
        }
        backtrack(idx + 1);
        bool compatible = true;
        for (auto c : chosen)
            if (chordsCross(n, c, candidates[idx])) {
                compatible = false;
                break;
            }
        if (compatible) {
            chosen.push_back(candidates[idx]);
            backtrack(idx + 1);
            chosen.pop_back();
        }
    };
    backtrack(0);
    return out;
}

namespace {

// Samples the faces of the dissection of the sub-polygon on the consecutive
// vertices lo..hi (closed by the already-present edge {lo, hi}).
void sampleInterval(const DissectionCounts& counts, SplitMix64& rng, int lo, int hi,
                    std::vector<Edge>& chords) {
    int remaining = hi - lo;
    int need = 2;
    int cursor = lo;
    while (remaining > 0) {
        // Choose the next gap length with weight Q(g) * completion.
        BigInt total = 0;
        for (int g = 1; g <= remaining; ++g)
            total += counts.q[g] * counts.completion(remaining - g, std::max(need - 1, 0));
        BigInt draw = rng.nextBigBelow(total);
        int gap = 0;
        for (int g = 1; g <= remaining; ++g) {
            BigInt w = counts.q[g] * counts.completion(remaining - g, std::max(need - 1, 0));
            if (draw < w) {
                gap = g;
                break;
            }
            draw -= w;
        }
        if (gap >= 2) {
            chords.push_back(makeEdge(cursor, cursor + gap));
            sampleInterval(counts, rng, cursor, cursor + gap, chords);
        }
        cursor += gap;
        remaining -= gap;
        need = std::max(need - 1, 0);
    }
}

}  // namespace

Dissection sampleDissection(int n, SplitMix64& rng) {
    if (n < 3) throw std::invalid_argument("polygon size must be >= 3");
    DissectionCounts counts(n);
    std::vector<Edge> chords;
    sampleInterval(counts, rng, 0, n - 1, chords);
    return Dissection(n, std::move(chords));
}

ExperimentConfig parseExperimentConfig(std::istream& in) {
    nlohmann::json j;
    in >> j;
    ExperimentConfig cfg;
    cfg.sizes = j.at("sizes").get<std::vector<int>>();
    cfg.samplesPerSize = j.at("samplesPerSize").get<int>();
    cfg.seed = j.at("seed").get<std::uint64_t>();
    cfg.finenessCap = j.value("finenessCap", 16);
    cfg.outputPath = j.at("outputPath").get<std::string>();
    for (int n : cfg.sizes)
        if (n < 3) throw std::invalid_argument("experiment sizes must be >= 3");
    if (cfg.samplesPerSize < 1) throw std::invalid_argument("samplesPerSize must be >= 1");
    if (cfg.finenessCap < 1) throw std::invalid_argument("finenessCap must be >= 1");
    return cfg;
}

ExperimentConfig loadExperimentConfig(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open experiment config: " + path);
    return parseExperimentConfig(in);
}

std::vector<SampleRecord> runExperimentRecords(const ExperimentConfig& cfg) {
    std::vector<SampleRecord> records;
    for (int n : cfg.sizes) {
        for (int idx = 0; idx < cfg.samplesPerSize; ++idx) {
            SplitMix64 rng(substreamSeed(cfg.seed, static_cast<std::uint64_t>(n),
                                         static_cast<std::uint64_t>(idx)));
            Dissection d = sampleDissection(n, rng);
            Graph g = buildGraph(d);
            FacingStructure fs = facingOfDissection(d);

            SampleRecord rec;
            rec.n = n;
            rec.seed = cfg.seed;
            rec.sampleIndex = idx;
            rec.chordCount = static_cast<int>(d.chords().size());
            rec.deltaDual = fs.gwl.h.maxDegree();
            rec.f = facialCircumference(d);
            if (rec.deltaDual != rec.f)
                throw std::logic_error("dual max degree disagrees with the facial circumference");
            rec.rDual = fineness(fs.gwl.h, cfg.finenessCap);
            rec.deg2Path = longestDegreeTwoInducedPath(g);
            records.push_back(rec);
        }
    }
    return records;
}

namespace {

std::string fixed6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", x);
    return buf;
}

}  // namespace

void writeExperimentCsv(const std::vector<SampleRecord>& records, const ExperimentConfig& cfg,
                        std::ostream& out) {
    out << "n,seed,sample,chords,delta_dual,r_dual,f,deg2path\n";
    for (const auto& r : records) {
        out << r.n << ',' << r.seed << ',' << r.sampleIndex << ',' << r.chordCount << ','
            << r.deltaDual << ',';
        if (r.rDual)
            out << *r.rDual;
        else
            out << '>' << cfg.finenessCap;
        out << ',' << r.f << ',' << r.deg2Path << '\n';
    }
    for (int n : cfg.sizes) {
        long long sumDelta = 0, maxDelta = 0, sumDeg2 = 0, maxDeg2 = 0, sumR = 0, maxR = 0;
        long long count = 0, resolvedR = 0;
        bool capHit = false;
        for (const auto& r : records) {
            if (r.n != n) continue;
            ++count;
            sumDelta += r.deltaDual;
            maxDelta = std::max<long long>(maxDelta, r.deltaDual);
            sumDeg2 += r.deg2Path;
            maxDeg2 = std::max<long long>(maxDeg2, r.deg2Path);
            if (r.rDual) {
                ++resolvedR;
                sumR += *r.rDual;
                maxR = std::max<long long>(maxR, *r.rDual);
            } else {
                capHit = true;
            }
        }
        if (count == 0) continue;
        out << "# summary n=" << n << " samples=" << count
            << " mean_delta_dual=" << fixed6(double(sumDelta) / double(count))
            << " max_delta_dual=" << maxDelta;
        if (resolvedR > 0)
            out << " mean_r_dual=" << fixed6(double(sumR) / double(resolvedR));
        else
            out << " mean_r_dual=-";
        out << " max_r_dual=";
        if (capHit)
            out << '>' << cfg.finenessCap;
        else
            out << maxR;
        out << " mean_deg2path=" << fixed6(double(sumDeg2) / double(count)) << " max_deg2path=" << maxDeg2
            << "\n";
    }
}

void runExperiment(const ExperimentConfig& cfg) {
    auto records = runExperimentRecords(cfg);
    std::ofstream out(cfg.outputPath, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + cfg.outputPath);
    writeExperimentCsv(records, cfg, out);
    if (!out.good()) throw std::runtime_error("write failed: " + cfg.outputPath);
}

}  // namespace bopd

#include "bopd/dissection.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace bopd {

bool isValidChord(int n, Edge c) {
    auto [i, j] = c;
    if (i < 0 || j >= n || i >= j) return false;
    int gap = j - i;
    return gap >= 2 && n - gap >= 2;
}

namespace {

std::string chordStr(Edge c) {
    return "{" + std::to_string(c.first) + "," + std::to_string(c.second) + "}";
}

}  // namespace

bool chordsCross(int n, Edge c1, Edge c2) {
    c1 = makeEdge(c1.first, c1.second);
    c2 = makeEdge(c2.first, c2.second);
    if (!isValidChord(n, c1)) throw std::invalid_argument("invalid chord " + chordStr(c1));
    if (!isValidChord(n, c2)) throw std::invalid_argument("invalid chord " + chordStr(c2));
    if (c1.first == c2.first || c1.first == c2.second || c1.second == c2.first || c1.second == c2.second)
        return false;
    auto inside = [&](int x) { return c1.first < x && x < c1.second; };
    return inside(c2.first) != inside(c2.second);
}

Dissection::Dissection(int polygonSize, std::vector<Edge> chords) : n_(polygonSize) {
    if (n_ < 3) throw std::invalid_argument("polygon size must be >= 3");
    for (auto& c : chords) {
        c = makeEdge(c.first, c.second);
        if (!isValidChord(n_, c)) throw std::invalid_argument("invalid chord " + chordStr(c));
    }
    std::sort(chords.begin(), chords.end());
    if (std::adjacent_find(chords.begin(), chords.end()) != chords.end())
        throw std::invalid_argument("duplicate chord");
    for (std::size_t i = 0; i < chords.size(); ++i)
        for (std::size_t j = i + 1; j < chords.size(); ++j)
            if (chordsCross(n_, chords[i], chords[j]))
                throw std::invalid_argument("crossing chords " + chordStr(chords[i]) + " and " + chordStr(chords[j]));
    chords_ = std::move(chords);
}

Graph buildGraph(const Dissection& d) {
    int n = d.polygonSize();
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back(makeEdge(i, (i + 1) % n));
    for (auto c : d.chords()) edges.push_back(c);
    return Graph(n, std::move(edges));
}

FacialData facialData(const Dissection& d) {
    int n = d.polygonSize();
    std::vector<int> outer(n);
    for (int i = 0; i < n; ++i) outer[i] = i;

    FacialData out{Cycle(outer), {}, {}, d.chords()};
    for (int i = 0; i < n; ++i) out.outerEdges.push_back(makeEdge(i, (i + 1) % n));
    std::sort(out.outerEdges.begin(), out.outerEdges.end());

    // Recursive splitting: any chord divides the current cyclic vertex list
    // in two; the remaining chords distribute by side since they never cross.
    std::function<void(std::vector<int>, std::vector<Edge>)> split =
        [&](std::vector<int> verts, std::vector<Edge> chords) {
            if (chords.empty()) {
                out.facialCycles.insert(Cycle(verts));
                return;
            }
            Edge cut = chords.back();
            chords.pop_back();
            int ia = -1, ib = -1;
            for (std::size_t i = 0; i < verts.size(); ++i) {
                if (verts[i] == cut.first) ia = static_cast<int>(i);
                if (verts[i] == cut.second) ib = static_cast<int>(i);
            }
            if (ia > ib) std::swap(ia, ib);
            std::vector<int> side1(verts.begin() + ia, verts.begin() + ib + 1);
            std::vector<int> side2(verts.begin() + ib, verts.end());
            side2.insert(side2.end(), verts.begin(), verts.begin() + ia + 1);
            auto within = [](const std::vector<int>& side, Edge c) {
                int found = 0;
                for (int v : side) found += (v == c.first) + (v == c.second);
                return found == 2;
            };
            std::vector<Edge> chords1, chords2;
            for (auto c : chords) (within(side1, c) ? chords1 : chords2).push_back(c);
            split(std::move(side1), std::move(chords1));
            split(std::move(side2), std::move(chords2));
        };
    split(outer, d.chords());
    return out;
}

int facialCircumference(const Dissection& d) {
    int best = 0;
    for (const auto& c : facialData(d).facialCycles) best = std::max(best, c.length());
    return best;
}

namespace {

bool hamiltonianExtend(const Graph& g, std::vector<int>& path, std::vector<bool>& used,
                       std::optional<RecognizedBop>& result) {
    int n = g.vertexCount();
    if (static_cast<int>(path.size()) == n) {
        if (!g.hasEdge(path.back(), path.front())) return false;
        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i) pos[path[i]] = i;
        std::vector<Edge> chords;
        for (auto [u, v] : g.edges()) {
            int gap = std::abs(pos[u] - pos[v]);
            if (gap == 1 || gap == n - 1) continue;  // cycle edge
            chords.push_back(makeEdge(pos[u], pos[v]));
        }
        for (std::size_t i = 0; i < chords.size(); ++i)
            for (std::size_t j = i + 1; j < chords.size(); ++j)
                if (chordsCross(n, chords[i], chords[j])) return false;
        result = RecognizedBop{Dissection(n, std::move(chords)), std::move(pos)};
        return true;
    }
    for (int w : g.neighbors(path.back())) {
        if (used[w]) continue;
        path.push_back(w);
        used[w] = true;
        if (hamiltonianExtend(g, path, used, result)) return true;
        used[w] = false;
        path.pop_back();
    }
    return false;
}

}  // namespace

std::optional<RecognizedBop> recognizeBOP(const Graph& g) {
    int n = g.vertexCount();
    if (n < 3 || !isConnected(g)) return std::nullopt;
    if (g.edgeCount() > 2 * n - 3) return std::nullopt;  // outerplanar edge bound
    for (int v = 0; v < n; ++v)
        if (g.degree(v) < 2) return std::nullopt;

    std::optional<RecognizedBop> result;
    std::vector<int> path{0};
    std::vector<bool> used(n, false);
    used[0] = true;
    if (hamiltonianExtend(g, path, used, result)) return result;
    return std::nullopt;
}

Dissection parseDissection(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        lines.push_back(line);
    }
    if (lines.empty()) throw std::invalid_argument("empty dissection file");
    std::istringstream head(lines[0]);
    std::string tag;
    int n = -1;
    if (!(head >> tag >> n) || tag != "polygon") throw std::invalid_argument("expected 'polygon <n>' header, got: " + lines[0]);
    std::vector<Edge> chords;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::istringstream row(lines[i]);
        int a, b;
        if (!(row >> tag >> a >> b) || tag != "chord") throw std::invalid_argument("expected 'chord <i> <j>', got: " + lines[i]);
        chords.push_back({a, b});
    }
    return Dissection(n, std::move(chords));
}

Dissection parseDissectionText(const std::string& text) {
    std::istringstream in(text);
    return parseDissection(in);
}

std::string formatDissection(const Dissection& d) {
    std::string out = "polygon " + std::to_string(d.polygonSize()) + "\n";
    for (auto [i, j] : d.chords()) out += "chord " + std::to_string(i) + " " + std::to_string(j) + "\n";
    return out;
}

}  // namespace bopd

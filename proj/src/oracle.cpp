#include "planebound/oracle.hpp"

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace planebound {

namespace {

bool interleave(std::pair<int, int> e, std::pair<int, int> f) {
    if (e.first > f.first) std::swap(e, f);
    return e.first < f.first && f.first < e.second && e.second < f.second;
}

void finish_config(PointConfig& cfg) {
    if (cfg.edges.size() > kMaxOracleEdges)
        throw std::invalid_argument("point configuration exceeds " +
                                    std::to_string(kMaxOracleEdges) + " admissible edges");
    cfg.conflicts.assign(cfg.edges.size(), EdgeMask{});
    for (std::size_t a = 0; a < cfg.edges.size(); ++a)
        for (std::size_t b = a + 1; b < cfg.edges.size(); ++b)
            if (interleave(cfg.edges[a], cfg.edges[b])) {
                cfg.conflicts[a].set(b);
                cfg.conflicts[b].set(a);
            }
}

// Backtracking over edges in order; prunes a branch as soon as the taken
// set conflicts. Visits every crossing-free subset exactly once.
struct Enumerator {
    const PointConfig& cfg;
    int root = -1;                      // track degree at this vertex if >= 0
    std::uint32_t inner_mask = 0;       // census: count covered bits in here
    std::vector<std::uint32_t> covers;  // per edge: strictly enclosed vertices

    unsigned long long total = 0;
    std::vector<unsigned long long> by_degree;
    std::map<int, unsigned long long> by_covered;

    explicit Enumerator(const PointConfig& c) : cfg(c) {}
    explicit Enumerator(PointConfig&&) = delete;  // keep the config alive

    void prepare_covers() {
        covers.resize(cfg.edges.size());
        for (std::size_t e = 0; e < cfg.edges.size(); ++e) {
            std::uint32_t m = 0;
            for (int v = cfg.edges[e].first + 1; v < cfg.edges[e].second; ++v)
                m |= 1u << v;
            covers[e] = m;
        }
    }

    void run() {
        if (root >= 0) by_degree.assign(cfg.n, 0);
        if (inner_mask) prepare_covers();
        recurse(0, EdgeMask{}, 0, 0);
    }

    void recurse(std::size_t idx, const EdgeMask& chosen, int degree, std::uint32_t covered) {
        if (idx == cfg.edges.size()) {
            ++total;
            if (root >= 0) ++by_degree[degree];
            if (!covers.empty()) ++by_covered[__builtin_popcount(covered & inner_mask)];
            return;
        }
        recurse(idx + 1, chosen, degree, covered);
        if ((cfg.conflicts[idx] & chosen).none()) {
            EdgeMask next = chosen;
            next.set(idx);
            const auto [a, b] = cfg.edges[idx];
            const int d2 = degree + (a == root || b == root ? 1 : 0);
            const std::uint32_t c2 = covered | (covers.empty() ? 0u : covers[idx]);
            recurse(idx + 1, next, d2, c2);
        }
    }
};

}  // namespace

PointConfig convex_config(int n) {
    if (n < 3) throw std::invalid_argument("convex_config: need at least 3 points");
    PointConfig cfg;
    cfg.n = static_cast<std::size_t>(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 2; j < n; ++j) cfg.edges.emplace_back(i, j);
    finish_config(cfg);
    return cfg;
}

PointConfig pocket_config(int k) {
    if (k < 1) throw std::invalid_argument("pocket_config: k must be >= 1");
    PointConfig cfg = convex_config(k + 2);
    cfg.pocket_ranges = {{0, k + 1}};
    return cfg;
}

PointConfig zigzag_outer_config(const std::vector<int>& pocket_sizes) {
    if (pocket_sizes.empty())
        throw std::invalid_argument("zigzag_outer_config: empty pocket list");
    PointConfig cfg;
    int start = 0;
    for (int k : pocket_sizes) {
        if (k < 1) throw std::invalid_argument("zigzag_outer_config: pocket size must be >= 1");
        cfg.pocket_ranges.emplace_back(start, start + k + 1);
        start += k + 1;
    }
    const int z = start + 1;
    cfg.n = static_cast<std::size_t>(z);
    for (int i = 0; i < z; ++i) {
        for (int j = i + 2; j < z; ++j) {
            bool in_pocket = false;
            for (const auto& [lo, hi] : cfg.pocket_ranges)
                if (lo <= i && j <= hi) {
                    in_pocket = true;
                    break;
                }
            if (!in_pocket) cfg.edges.emplace_back(i, j);
        }
    }
    finish_config(cfg);
    return cfg;
}

Integer count_crossing_free(const PointConfig& cfg) {
    Enumerator en(cfg);
    en.run();
    return Integer(static_cast<unsigned long>(en.total));
}

DegreeVector degree_partition(const PointConfig& cfg, int root) {
    if (root < 0 || static_cast<std::size_t>(root) >= cfg.n)
        throw std::invalid_argument("degree_partition: root out of range");
    Enumerator en(cfg);
    en.root = root;
    en.run();
    DegreeVector v(cfg.n);
    for (std::size_t d = 0; d < cfg.n; ++d)
        v[d] = Integer(static_cast<unsigned long>(en.by_degree[d]));
    return v;
}

Integer CoverageCensus::total() const {
    Integer t = 0;
    for (const auto& [_, p] : counts) t += p;
    return t;
}

CoverageCensus coverage_census(int k) {
    if (k < 1 || k > 8) throw std::invalid_argument("coverage_census: supported range is 1..8");
    const PointConfig cfg = pocket_config(k);
    Enumerator en(cfg);
    for (int v = 1; v <= k; ++v) en.inner_mask |= 1u << v;
    en.run();
    CoverageCensus census;
    census.k = k;
    for (int t = 0; t <= k; ++t) {
        auto it = en.by_covered.find(t);
        census.counts[t] =
            Integer(static_cast<unsigned long>(it == en.by_covered.end() ? 0 : it->second));
    }
    return census;
}

int orientation(const Point& a, const Point& b, const Point& c) {
    const Rational cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return cross.sign();
}

bool segments_cross(const Point& p, const Point& q, const Point& r, const Point& s) {
    const int d1 = orientation(r, s, p);
    const int d2 = orientation(r, s, q);
    const int d3 = orientation(p, q, r);
    const int d4 = orientation(p, q, s);
    return d1 * d2 < 0 && d3 * d4 < 0;  // proper interior intersection only
}

bool verify_coordinates(const PointConfig& cfg) {
    if (cfg.coords.size() != cfg.n)
        throw std::invalid_argument("verify_coordinates: missing coordinates");
    for (std::size_t a = 0; a < cfg.edges.size(); ++a) {
        for (std::size_t b = a + 1; b < cfg.edges.size(); ++b) {
            const bool declared = cfg.conflicts[a][b];
            const bool geometric = segments_cross(
                cfg.coords[cfg.edges[a].first], cfg.coords[cfg.edges[a].second],
                cfg.coords[cfg.edges[b].first], cfg.coords[cfg.edges[b].second]);
            if (declared != geometric) return false;
        }
    }
    return true;
}

namespace {

// Chain path edges: consecutive vertices of one chain.
std::vector<std::pair<const Point*, const Point*>> path_edges(const std::vector<Point>& chain) {
    std::vector<std::pair<const Point*, const Point*>> es;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) es.emplace_back(&chain[i], &chain[i + 1]);
    return es;
}

// side = -1: lower chain (inner pocket points sag below their chord,
// toward the outer part); side = +1: upper chain, mirrored.
bool pockets_flat(const std::vector<Point>& chain, const std::vector<std::pair<int, int>>& ranges,
                  int side) {
    for (const auto& [lo, hi] : ranges) {
        const Point& s = chain[lo];
        const Point& t = chain[hi];
        for (int w = lo + 1; w < hi; ++w) {
            if (orientation(s, t, chain[w]) != -side) return false;  // wrong side of chord
        }
        for (int w = lo; w + 2 <= hi; ++w) {  // pocket chain stays convex
            if (orientation(chain[w], chain[w + 1], chain[w + 2]) != side) return false;
        }
    }
    return true;
}

}  // namespace

bool verify_coordinates(const ZigzagInstance& zi) {
    const PointConfig outer = zigzag_outer_config(zi.pocket_sizes);
    if (zi.lower.size() != outer.n || zi.upper.size() != outer.n)
        throw std::invalid_argument("verify_coordinates: chain length mismatch");

    // (a) declared crossings match geometry on both outer parts
    for (const auto* chain : {&zi.lower, &zi.upper}) {
        PointConfig cfg = outer;
        cfg.coords = *chain;
        if (!verify_coordinates(cfg)) return false;
    }

    // (b) pocket flatness
    if (!pockets_flat(zi.lower, outer.pocket_ranges, -1)) return false;
    if (!pockets_flat(zi.upper, outer.pocket_ranges, +1)) return false;

    // (b') no segment between construction points crosses a chain edge;
    // this is what lets consecutive-chain edges coexist with everything,
    // and it subsumes (c) mutual visibility of the two arcs.
    std::vector<const Point*> all;
    for (const auto& p : zi.lower) all.push_back(&p);
    for (const auto& q : zi.upper) all.push_back(&q);
    auto chain_edges = path_edges(zi.lower);
    for (auto e : path_edges(zi.upper)) chain_edges.push_back(e);
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            for (const auto& [a, b] : chain_edges)
                if (segments_cross(*all[i], *all[j], *a, *b)) return false;

    // (d) covering semantics: a pocket-internal edge hides the vertices
    // strictly between its endpoints from every vertex of the other chain.
    for (int c = 0; c < 2; ++c) {
        const auto& chain = c == 0 ? zi.lower : zi.upper;
        const auto& other = c == 0 ? zi.upper : zi.lower;
        for (const auto& [lo, hi] : outer.pocket_ranges) {
            for (int a = lo; a <= hi; ++a) {
                for (int b = a + 2; b <= hi; ++b) {
                    for (int w = a + 1; w < b; ++w)
                        for (const auto& u : other)
                            if (!segments_cross(chain[w], u, chain[a], chain[b])) return false;
                }
            }
        }
    }
    return true;
}

std::vector<Point> parse_rational_points(std::istream& in) {
    std::vector<Point> pts;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string xs, ys;
        if (!(ls >> xs)) continue;  // blank line
        if (!(ls >> ys)) throw std::invalid_argument("point file: missing y coordinate");
        pts.push_back(Point{Rational::from_string(xs), Rational::from_string(ys)});
    }
    return pts;
}

nlohmann::ordered_json to_json(const CoverageCensus& census) {
    nlohmann::ordered_json j;
    j["k"] = census.k;
    nlohmann::ordered_json counts;
    for (const auto& [t, p] : census.counts) {
        if (t == 0) continue;  // reference tables list t = 1..k
        counts[std::to_string(t)] = p.get_ui();
    }
    j["counts"] = std::move(counts);
    return j;
}

}  // namespace planebound

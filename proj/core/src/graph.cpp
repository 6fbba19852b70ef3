#include "lqnet/graph.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <string>

#include "lqnet/errors.hpp"

namespace lqnet {

namespace {

constexpr std::size_t kMaxCanonicalNodes = 8;

const std::vector<std::vector<std::size_t>>& permutations_of(std::size_t n)
{
    static std::mutex mutex;
    static std::map<std::size_t, std::vector<std::vector<std::size_t>>> cache;
    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.try_emplace(n);
    if (inserted) {
        std::vector<std::size_t> p(n);
        std::iota(p.begin(), p.end(), 0);
        do {
            it->second.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
    }
    return it->second;
}

void require_canonical_size(std::size_t n)
{
    if (n > kMaxCanonicalNodes)
        throw EnumerationGuard("canonical forms support at most 8 nodes");
}

}  // namespace

double spectral_radius(const Network& g)
{
    const auto n = static_cast<Eigen::Index>(g.size());
    if (n == 0) return 0.0;
    Eigen::MatrixXd a(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            a(i, j) = g(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) ? 1.0 : 0.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().maxCoeff();
}

std::vector<std::pair<std::size_t, std::size_t>> edge_slots(std::size_t n)
{
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    return slots;
}

Network network_from_mask(std::size_t n, std::uint64_t mask)
{
    Network g(n);
    const auto slots = edge_slots(n);
    for (std::size_t k = 0; k < slots.size(); ++k)
        if ((mask >> k) & 1u) g.set_edge(slots[k].first, slots[k].second);
    return g;
}

std::uint64_t network_mask(const Network& g)
{
    std::uint64_t mask = 0;
    const auto slots = edge_slots(g.size());
    for (std::size_t k = 0; k < slots.size(); ++k)
        if (g(slots[k].first, slots[k].second)) mask |= std::uint64_t{1} << k;
    return mask;
}

std::uint64_t canonical_code(const Network& g)
{
    const std::size_t n = g.size();
    require_canonical_size(n);
    std::vector<std::size_t> degree(n);
    for (std::size_t i = 0; i < n; ++i) degree[i] = g.degree(i);

    // perm[p] is the original node placed at position p.
    std::uint64_t best = ~std::uint64_t{0};
    for (const auto& perm : permutations_of(n)) {
        bool sorted = true;
        for (std::size_t p = 0; p + 1 < n && sorted; ++p)
            sorted = degree[perm[p]] >= degree[perm[p + 1]];
        if (!sorted) continue;

        std::uint64_t code = 0;
        std::size_t k = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b, ++k)
                if (g(perm[a], perm[b])) code |= std::uint64_t{1} << k;
        best = std::min(best, code);
    }
    return best;
}

std::uint64_t canonical_code(const LinkIntentions& g)
{
    const std::size_t n = g.size();
    require_canonical_size(n);
    std::uint64_t best = ~std::uint64_t{0};
    for (const auto& perm : permutations_of(n)) {
        std::uint64_t code = 0;
        std::size_t k = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                if (a == b) continue;
                if (g(perm[a], perm[b])) code |= std::uint64_t{1} << k;
                ++k;
            }
        best = std::min(best, code);
    }
    return best;
}

std::vector<Network> nonisomorphic_networks(std::size_t n)
{
    if (n > 6) throw EnumerationGuard("network enumeration supports at most 6 nodes");
    const std::size_t edges = n * (n - 1) / 2;
    std::set<std::uint64_t> codes;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges); ++mask)
        codes.insert(canonical_code(network_from_mask(n, mask)));
    std::vector<Network> out;
    out.reserve(codes.size());
    for (auto code : codes) out.push_back(network_from_mask(n, code));
    return out;
}

Network parse_network(std::string_view spec, std::size_t n)
{
    if (spec == "empty") return Network::empty(n);
    if (spec == "star") return Network::star(n);
    if (spec == "complete") return Network::complete(n);

    Network g(n);
    auto parse_index = [&](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || v >= n)
            throw ConfigError("bad node index '" + std::string(s) + "' in network spec");
        return v;
    };
    while (!spec.empty()) {
        const auto comma = spec.find(',');
        const auto item = spec.substr(0, comma);
        const auto dash = item.find('-');
        if (dash == std::string_view::npos)
            throw ConfigError("expected i-j in network spec, got '" + std::string(item) + "'");
        const auto i = parse_index(item.substr(0, dash));
        const auto j = parse_index(item.substr(dash + 1));
        if (i == j) throw ConfigError("self-link in network spec");
        g.set_edge(i, j);
        spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    }
    return g;
}

std::string format_edges(const Network& g)
{
    std::string out;
    for (auto [i, j] : edge_slots(g.size())) {
        if (!g(i, j)) continue;
        if (!out.empty()) out += ',';
        out += std::to_string(i) + "-" + std::to_string(j);
    }
    return out;
}

}  // namespace lqnet

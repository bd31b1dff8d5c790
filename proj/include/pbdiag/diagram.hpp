#pragma once

#include "pbdiag/rational.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pbdiag {

enum class Quotient { Dbar, D };

struct Context {
    int m = 1;
    int n = 3;
    Quotient quotient = Quotient::Dbar;

    bool odd() const { return n % 2 != 0; }
    Context with_quotient(Quotient q) const { return {m, n, q}; }
    auto operator<=>(const Context&) const = default;
};

std::string quotient_name(Quotient q);
Quotient quotient_from_name(const std::string& s);

using Edge = std::pair<int, int>;

// Segment vertices are 1..m, free vertices m+1..m+v.
// Odd n: each edge is (tail, head) and list order carries no data.
// Even n: edges are undirected and the list position is the edge label.
struct Diagram {
    Context ctx;
    int v = 0;
    std::vector<Edge> edges;

    int vertex_count() const { return ctx.m + v; }
    bool is_segment(int x) const { return x >= 1 && x <= ctx.m; }
    bool is_free(int x) const { return x > ctx.m && x <= ctx.m + v; }
    bool is_chord(const Edge& e) const { return is_segment(e.first) && is_segment(e.second); }
    bool empty() const { return edges.empty() && v == 0; }
    auto operator<=>(const Diagram&) const = default;
};

using DiagramCombo = Combo<Diagram, struct PrimalTag>;
using DualCombo = Combo<Diagram, struct DualTag>;

struct Canon {
    Diagram key;
    int sign = 1;
};

struct Limits {
    std::int64_t permutations = 2'000'000;  // per canonicalization
    std::int64_t candidates = 5'000'000;    // per enumeration
    int max_free = 8;
};

Limits& default_limits();

// Canonical representative and the orientation sign relating `d` to it, or nullopt
// when `d` is zero (self-loop, multi-edge in quotient D, or d ≅ -d).
std::optional<Canon> canonicalize(const Diagram& d);

// Throws ConstraintError when a free vertex has valence < 3 or no path to a segment vertex.
void validate(const Diagram& d);

std::int64_t automorphism_count(const Diagram& d);

int degree(const Diagram& d);
inline int weight(const Diagram& d) { return static_cast<int>(d.edges.size()) - d.v; }

std::vector<Diagram> enumerate_diagrams(const Context& ctx, int edge_count, int free_count);

struct Flags {
    bool internally_connected = false;
    bool internal_forest = false;
    bool unitrivalent_free = false;
    bool has_multi_edge = false;
};
Flags classify(const Diagram& d);

// Groups of edge indices; two edges share a group when they meet at a free vertex.
std::vector<std::vector<int>> internal_components(const Diagram& d);

std::vector<int> valences(const Diagram& d);  // index 0 unused

bool has_multi_edge(const Diagram& d);

// Diagram spanned by the given edges (free vertices re-indexed in increasing order,
// edge order preserved). Used to split a product into factors.
Diagram subdiagram(const Diagram& d, const std::vector<int>& edge_indices);

// Convenience constructors.
Diagram make_diagram(const Context& ctx, int v, std::vector<Edge> edges);
Diagram chord(const Context& ctx, int tail, int head);

DiagramCombo as_combo(const Diagram& d, const Rational& c = 1);
DualCombo as_dual(const Diagram& d, const Rational& c = 1);

// Homogeneous degree of a combo; nullopt when empty or mixed.
template <class C>
std::optional<int> combo_degree(const C& x) {
    std::optional<int> deg;
    for (const auto& [d, c] : x.terms) {
        int g = degree(d);
        if (deg && *deg != g) return std::nullopt;
        deg = g;
    }
    return deg;
}

std::string to_text(const Diagram& d);

}  // namespace pbdiag
